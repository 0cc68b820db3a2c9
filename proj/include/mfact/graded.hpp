#ifndef MFACT_GRADED_HPP
#define MFACT_GRADED_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "groebner.hpp"

namespace mfact {

// Degree of a homogeneous module element under generator degree shifts;
// nullopt for zero or inhomogeneous elements.
template <class K>
std::optional<long> homogeneous_degree(const ModuleElement<K>& v, const std::vector<long>& shifts)
{
    std::optional<long> deg;
    for (std::size_t i = 0; i < v.c.size(); ++i) {
        if (v.c[i].is_zero())
            continue;
        auto d = v.c[i].homogeneous_degree();
        if (!d)
            return std::nullopt;
        long total = *d + shifts[i];
        if (deg && *deg != total)
            return std::nullopt;
        deg = total;
    }
    return deg;
}

template <class K>
bool all_homogeneous(const std::vector<ModuleElement<K>>& gens, const std::vector<long>& shifts)
{
    for (const auto& g : gens)
        if (!g.is_zero() && !homogeneous_degree(g, shifts))
            return false;
    return true;
}

// Generator degrees making every column homogeneous, when they exist:
// a nonzero entry at row i of a column of degree D forces
// shift_i + deg(entry) = D, which propagates through shared columns.
// Shifts are normalized to start at 0 in each connected component.
template <class K>
std::optional<std::vector<long>> infer_generator_shifts(const std::vector<ModuleElement<K>>& columns,
                                                        std::size_t rank)
{
    std::vector<std::optional<long>> shift(rank);
    std::vector<std::vector<std::pair<std::size_t, long>>> column_entries;
    for (const auto& col : columns) {
        std::vector<std::pair<std::size_t, long>> entries;
        for (std::size_t i = 0; i < rank; ++i) {
            if (col.c[i].is_zero())
                continue;
            auto d = col.c[i].homogeneous_degree();
            if (!d)
                return std::nullopt;
            entries.emplace_back(i, *d);
        }
        if (!entries.empty())
            column_entries.push_back(std::move(entries));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& entries : column_entries) {
            std::optional<long> column_degree;
            for (const auto& [i, d] : entries)
                if (shift[i]) {
                    long total = *shift[i] + d;
                    if (column_degree && *column_degree != total)
                        return std::nullopt;
                    column_degree = total;
                }
            if (!column_degree) {
                // seed this component at zero
                shift[entries.front().first] = 0;
                column_degree = entries.front().second;
                changed = true;
            }
            for (const auto& [i, d] : entries) {
                long s = *column_degree - d;
                if (!shift[i]) {
                    shift[i] = s;
                    changed = true;
                } else if (*shift[i] != s) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<long> out(rank, 0);
    for (std::size_t i = 0; i < rank; ++i)
        if (shift[i])
            out[i] = *shift[i];
    return out;
}

template <class K>
struct MinimalGenerators {
    std::vector<ModuleElement<K>> elements;
    std::vector<long> degrees; // one per kept element
};

// Minimal homogeneous generators over the graded-local ring: process in
// ascending degree and discard every generator lying in the span of the
// ones already kept (modulo f in quotient mode). Nakayama makes any
// irredundant homogeneous set minimal.
template <class K>
MinimalGenerators<K> minimal_generators(const std::vector<ModuleElement<K>>& gens,
                                        std::size_t rank, const RingPtr& ring,
                                        const std::vector<long>& shifts,
                                        std::type_identity_t<std::optional<Polynomial<K>>> quotient_f = std::nullopt)
{
    struct Item {
        long degree;
        std::size_t index;
    };
    std::vector<Item> items;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero())
            continue;
        auto d = homogeneous_degree(gens[i], shifts);
        if (!d)
            fail(ErrorKind::NotGraded, "minimalization requires homogeneous generators");
        items.push_back({*d, i});
    }
    std::stable_sort(items.begin(), items.end(),
                     [](const Item& a, const Item& b) { return a.degree < b.degree; });

    MinimalGenerators<K> out;
    for (const auto& item : items) {
        if (!out.elements.empty() || quotient_f) {
            auto gb = groebner_basis(out.elements, rank, ring, quotient_f);
            if (is_member(gens[item.index], gb))
                continue;
        }
        out.elements.push_back(gens[item.index]);
        out.degrees.push_back(item.degree);
    }
    return out;
}

} // namespace mfact

#endif
