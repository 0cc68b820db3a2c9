#ifndef MFACT_HOMOLOGICAL_HPP
#define MFACT_HOMOLOGICAL_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graded.hpp"
#include "presentation.hpp"

namespace mfact {

enum class Minimalize { Auto, On, Off };

// Free resolution ... -> S^{r2} -> S^{r1} -> S^{r0} -> M -> 0 (over S, or
// over R in quotient mode, where it is truncated and may be eventually
// 2-periodic). diffs[k] is the (k+1)-st differential.
template <class K>
struct FreeResolution {
    bool over_R = false;
    std::optional<Polynomial<K>> f;
    std::size_t rank0 = 0;
    std::vector<PolyMatrix<K>> diffs;
    std::vector<std::vector<long>> shifts; // generator degrees per step, when graded
    bool graded = false;
    bool complete = false; // kernel of the last recorded map is zero

    std::size_t rank_at(std::size_t step) const
    {
        if (step == 0)
            return rank0;
        if (step - 1 < diffs.size())
            return diffs[step - 1].cols();
        return 0;
    }
};

// Iterated syzygy computation, minimalized stepwise in graded mode.
template <class K>
FreeResolution<K> free_resolution(const ModulePresentation<K>& m, std::size_t max_length = 0,
                                  Minimalize minimalize = Minimalize::Auto)
{
    const RingPtr& ring = m.ring();
    std::optional<Polynomial<K>> quotient = m.over_R ? m.f : std::nullopt;
    if (max_length == 0) {
        if (m.over_R)
            fail(ErrorKind::InvalidArgument, "R-mode resolutions require an explicit length");
        max_length = ring->nvars() + 1;
    }

    FreeResolution<K> res;
    res.over_R = m.over_R;
    res.f = m.f;
    res.rank0 = m.generators();

    std::vector<long> cur_shifts(m.generators(), 0);
    std::vector<ModuleElement<K>> gens = matrix_columns(m.relations);

    bool graded = all_homogeneous(gens, cur_shifts) &&
                  (!m.over_R || m.f->is_homogeneous());
    if (minimalize == Minimalize::On && !graded)
        fail(ErrorKind::NotGraded, "minimalization requested on inhomogeneous input");
    bool do_min = minimalize == Minimalize::On || (minimalize == Minimalize::Auto && graded);
    res.graded = graded;

    std::size_t cur_rank = m.generators();
    res.shifts.push_back(cur_shifts);
    while (res.diffs.size() < max_length) {
        std::vector<ModuleElement<K>> kept;
        std::vector<long> degrees;
        if (do_min) {
            MinimalGenerators<K> mg = minimal_generators(gens, cur_rank, ring, cur_shifts, quotient);
            kept = std::move(mg.elements);
            degrees = std::move(mg.degrees);
        } else {
            for (auto& g : gens)
                if (!g.is_zero())
                    kept.push_back(g);
            degrees.assign(kept.size(), 0);
        }

        res.diffs.push_back(columns_to_matrix(ring, cur_rank, kept));
        res.shifts.push_back(degrees);
        if (kept.empty()) {
            res.complete = true;
            break;
        }
        gens = syzygy_module(kept, cur_rank, ring, quotient);
        cur_rank = kept.size();
        cur_shifts = degrees;
    }
    if (!res.complete && !res.diffs.empty() && res.diffs.back().cols() == 0)
        res.complete = true;
    return res;
}

// Homology subquotient dimension over the coefficient field, by counting
// standard monomials of the leading-term module of a presentation.
template <class K>
std::optional<long> presentation_k_dimension(const PolyMatrix<K>& presentation,
                                             std::optional<Polynomial<K>> quotient_f)
{
    const RingPtr& ring = presentation.ring();
    const std::size_t t = presentation.rows();
    if (t == 0)
        return 0;
    auto gb = groebner_basis(matrix_columns(presentation), t, ring, quotient_f);

    const std::size_t nv = ring->nvars();
    long total = 0;
    for (std::size_t comp = 0; comp < t; ++comp) {
        std::vector<Monomial> leads;
        bool unit_lead = false;
        for (const auto& lt : gb.leads)
            if (lt.component == comp) {
                if (lt.monomial.is_constant())
                    unit_lead = true;
                leads.push_back(lt.monomial);
            }
        if (unit_lead)
            continue; // component is killed entirely
        if (nv == 0) {
            ++total;
            continue;
        }
        // The staircase is finite iff it contains a pure power of every
        // variable; those powers bound the enumeration box.
        std::vector<std::uint32_t> bound(nv, 0);
        for (std::size_t v = 0; v < nv; ++v) {
            bool found = false;
            for (const auto& lm : leads) {
                bool pure = true;
                for (std::size_t w = 0; w < nv && pure; ++w)
                    if (w != v && lm.e[w] != 0)
                        pure = false;
                if (pure && lm.e[v] > 0 && (!found || lm.e[v] < bound[v])) {
                    bound[v] = lm.e[v];
                    found = true;
                }
            }
            if (!found)
                return std::nullopt;
        }
        Monomial mono(nv);
        std::function<void(std::size_t)> walk = [&](std::size_t v) {
            if (v == nv) {
                for (const auto& lm : leads)
                    if (lm.divides(mono))
                        return;
                ++total;
                return;
            }
            for (std::uint32_t e = 0; e < bound[v]; ++e) {
                mono.e[v] = e;
                walk(v + 1);
            }
            mono.e[v] = 0;
        };
        walk(0);
    }
    return total;
}

template <class K>
struct ExtResult {
    long index = 0;
    bool finite = false;
    long dimension = 0; // valid when finite
    std::size_t homology_generators = 0;
    std::optional<PolyMatrix<K>> presentation; // relations among the kernel generators
};

// Ext^i(N, M) as homology of Hom(P, M) for a free resolution P of N, in
// S-mode or R-mode (matching presentation modes). The homology subquotient
// ker/im is presented by expressing the image generators, the ambient
// relations, and the syzygies among the kernel generators in kernel
// coordinates.
template <class K>
ExtResult<K> ext_dimension(long index, const ModulePresentation<K>& n,
                           const ModulePresentation<K>& m)
{
    if (index < 0)
        fail(ErrorKind::InvalidArgument, "negative Ext index");
    if (n.over_R != m.over_R)
        fail(ErrorKind::ContextMismatch, "Ext arguments in different ring modes");
    if (n.over_R && *n.f != *m.f)
        fail(ErrorKind::FMismatch, "Ext arguments over different hypersurfaces");
    require_same_ring(n.ring(), m.ring());

    const RingPtr& ring = n.ring();
    std::optional<Polynomial<K>> quotient = n.over_R ? n.f : std::nullopt;
    const std::size_t i = static_cast<std::size_t>(index);

    FreeResolution<K> res = free_resolution(n, i + 1);
    const std::size_t g = m.generators();
    const std::size_t r_i = res.rank_at(i);
    const std::size_t r_next = res.rank_at(i + 1);

    ExtResult<K> out;
    out.index = index;
    if (r_i == 0 || g == 0) {
        out.finite = true;
        out.presentation = PolyMatrix<K>(ring, 0, 0);
        return out;
    }

    const std::size_t ambient = g * r_i;
    auto slot = [g](std::size_t t, std::size_t s) { return t * g + s; };

    // Kernel of Hom(A_{i+1}, M): elements v with (A_{i+1}^T (x) I_g) v in
    // the relation span of M^{r_next}.
    std::vector<ModuleElement<K>> kernel;
    if (r_next == 0) {
        for (std::size_t t = 0; t < r_i; ++t)
            for (std::size_t s = 0; s < g; ++s)
                kernel.push_back(ModuleElement<K>::basis_vector(ring, ambient, slot(t, s),
                                                                Polynomial<K>::one(ring)));
    } else {
        const PolyMatrix<K>& a_next = res.diffs[i];
        const std::size_t big = g * r_next;
        std::vector<ModuleElement<K>> columns;
        for (std::size_t t = 0; t < r_i; ++t)
            for (std::size_t s = 0; s < g; ++s) {
                auto w = ModuleElement<K>::zero(ring, big);
                for (std::size_t b = 0; b < r_next; ++b)
                    w.c[slot(b, s)] = a_next.at(t, b);
                columns.push_back(std::move(w));
            }
        std::size_t phi_cols = columns.size();
        for (std::size_t b = 0; b < r_next; ++b)
            for (std::size_t rel = 0; rel < m.relations.cols(); ++rel) {
                auto w = ModuleElement<K>::zero(ring, big);
                for (std::size_t s = 0; s < g; ++s)
                    w.c[slot(b, s)] = m.relations.at(s, rel);
                columns.push_back(std::move(w));
            }
        auto syz = syzygy_module(columns, big, ring, quotient);
        for (auto& s : syz) {
            std::vector<Polynomial<K>> c(s.c.begin(), s.c.begin() + phi_cols);
            ModuleElement<K> v(std::move(c));
            if (!v.is_zero())
                kernel.push_back(std::move(v));
        }
    }

    if (kernel.empty()) {
        out.finite = true;
        out.presentation = PolyMatrix<K>(ring, 0, 0);
        return out;
    }

    // Relations on the kernel generators: image of the previous transposed
    // differential, the ambient relations of M^{r_i}, and the syzygies
    // among the kernel generators themselves.
    std::vector<ModuleElement<K>> to_express;
    if (i > 0 && res.rank_at(i - 1) > 0) {
        const PolyMatrix<K>& a_i = res.diffs[i - 1];
        for (std::size_t tp = 0; tp < res.rank_at(i - 1); ++tp)
            for (std::size_t s = 0; s < g; ++s) {
                auto w = ModuleElement<K>::zero(ring, ambient);
                for (std::size_t t = 0; t < r_i; ++t)
                    w.c[slot(t, s)] = a_i.at(tp, t);
                if (!w.is_zero())
                    to_express.push_back(std::move(w));
            }
    }
    for (std::size_t t = 0; t < r_i; ++t)
        for (std::size_t rel = 0; rel < m.relations.cols(); ++rel) {
            auto w = ModuleElement<K>::zero(ring, ambient);
            for (std::size_t s = 0; s < g; ++s)
                w.c[slot(t, s)] = m.relations.at(s, rel);
            if (!w.is_zero())
                to_express.push_back(std::move(w));
        }

    auto gb_kernel = groebner_basis(kernel, ambient, ring, quotient);
    std::vector<ModuleElement<K>> relation_cols;
    for (const auto& w : to_express) {
        auto coeffs = lift_coefficients(w, gb_kernel);
        if (!coeffs)
            fail(ErrorKind::VerificationFailed, "image element escapes the kernel");
        relation_cols.push_back(ModuleElement<K>(std::move(*coeffs)));
    }
    for (auto& s : syzygy_module(kernel, ambient, ring, quotient))
        relation_cols.push_back(std::move(s));

    out.homology_generators = kernel.size();
    out.presentation = columns_to_matrix(ring, kernel.size(), relation_cols);
    auto dim = presentation_k_dimension(*out.presentation, quotient);
    out.finite = dim.has_value();
    out.dimension = dim.value_or(0);
    return out;
}

// Certificate that f acts injectively on the presented S-module.
template <class K>
bool f_regular_on(const ModulePresentation<K>& m, const Polynomial<K>& f)
{
    if (m.over_R)
        fail(ErrorKind::InvalidArgument, "regularity certificate expects an S-mode module");
    const RingPtr& ring = m.ring();
    const std::size_t g = m.generators();
    std::vector<ModuleElement<K>> columns;
    for (std::size_t j = 0; j < g; ++j)
        columns.push_back(ModuleElement<K>::basis_vector(ring, g, j, f));
    auto rel_cols = matrix_columns(m.relations);
    for (const auto& c : rel_cols)
        columns.push_back(c);
    auto syz = syzygy_module(columns, g, ring);
    auto gb = groebner_basis(rel_cols, g, ring);
    for (const auto& s : syz) {
        std::vector<Polynomial<K>> c(s.c.begin(), s.c.begin() + g);
        ModuleElement<K> v(std::move(c));
        if (!is_member(v, gb))
            return false;
    }
    return true;
}

struct ReesVerdict {
    bool comparable = false; // both sides of finite length
    bool finite_S = false;
    bool finite_R = false;
    long dim_S = 0;
    long dim_R = 0;
    bool equal = false;
};

// Lemma-level change of rings check: dim Ext_S^{i+1}(N, M) vs
// dim Ext_R^i(N, M/fM) for an R-module N and an S-module M with f M-regular.
template <class K>
ReesVerdict rees_check_i(long index, const ModulePresentation<K>& n,
                         const ModulePresentation<K>& m, const Polynomial<K>& f)
{
    if (!n.over_R || m.over_R)
        fail(ErrorKind::InvalidArgument, "rees_check_i expects N over R and M over S");
    if (*n.f != f)
        fail(ErrorKind::FMismatch, "N is a module over a different hypersurface");
    if (!f_regular_on(m, f))
        fail(ErrorKind::RegularityFailed, "f is not regular on M");

    ExtResult<K> ext_s = ext_dimension(index + 1, s_presentation(n), m);
    ExtResult<K> ext_r = ext_dimension(index, n, make_r_module(m.relations, f));

    ReesVerdict v;
    v.finite_S = ext_s.finite;
    v.finite_R = ext_r.finite;
    v.dim_S = ext_s.dimension;
    v.dim_R = ext_r.dimension;
    v.comparable = v.finite_S && v.finite_R;
    v.equal = v.comparable && v.dim_S == v.dim_R;
    return v;
}

// dim Ext_S^i(M, N) vs dim Ext_R^i(M/fM, N).
template <class K>
ReesVerdict rees_check_ii(long index, const ModulePresentation<K>& m,
                          const ModulePresentation<K>& n, const Polynomial<K>& f)
{
    if (!n.over_R || m.over_R)
        fail(ErrorKind::InvalidArgument, "rees_check_ii expects M over S and N over R");
    if (*n.f != f)
        fail(ErrorKind::FMismatch, "N is a module over a different hypersurface");
    if (!f_regular_on(m, f))
        fail(ErrorKind::RegularityFailed, "f is not regular on M");

    ExtResult<K> ext_s = ext_dimension(index, m, s_presentation(n));
    ExtResult<K> ext_r = ext_dimension(index, make_r_module(m.relations, f), n);

    ReesVerdict v;
    v.finite_S = ext_s.finite;
    v.finite_R = ext_r.finite;
    v.dim_S = ext_s.dimension;
    v.dim_R = ext_r.dimension;
    v.comparable = v.finite_S && v.finite_R;
    v.equal = v.comparable && v.dim_S == v.dim_R;
    return v;
}

struct VanishingReport {
    bool ok = true;
    long first_failure = 0;         // index of the first nonvanishing Ext
    std::string side;               // "coker-vs-R" or "R-vs-coker"
    std::vector<long> checked;      // indices verified to vanish
};

// Instance check that Ext_R^i(coker(d1), R) = 0 for i = 1..L, plus the
// trivial dual Ext_R^i(R, coker(d1)) = 0 as an engine sanity check.
template <class K>
VanishingReport coker_ext_vanishing(const LinearFactorization<K>& p, long max_index)
{
    VanishingReport report;
    ModulePresentation<K> coker = coker_presentation(p);
    ModulePresentation<K> r_free = free_module<K>(p.ring(), 1, p.f);
    for (long i = 1; i <= max_index; ++i) {
        ExtResult<K> forward = ext_dimension(i, coker, r_free);
        if (!forward.finite || forward.dimension != 0) {
            report.ok = false;
            report.first_failure = i;
            report.side = "coker-vs-R";
            return report;
        }
        ExtResult<K> backward = ext_dimension(i, r_free, coker);
        if (!backward.finite || backward.dimension != 0) {
            report.ok = false;
            report.first_failure = i;
            report.side = "R-vs-coker";
            return report;
        }
        report.checked.push_back(i);
    }
    return report;
}

} // namespace mfact

#endif
