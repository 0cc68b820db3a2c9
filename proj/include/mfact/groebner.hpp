#ifndef MFACT_GROEBNER_HPP
#define MFACT_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <type_traits>
#include <vector>

#include "matrix.hpp"

namespace mfact {

// Element of a free module S^r, stored as one polynomial per component.
template <class K>
struct ModuleElement {
    std::vector<Polynomial<K>> c;

    ModuleElement() = default;
    explicit ModuleElement(std::vector<Polynomial<K>> comps) : c(std::move(comps)) {}

    static ModuleElement zero(const RingPtr& ring, std::size_t rank)
    {
        return ModuleElement(std::vector<Polynomial<K>>(rank, Polynomial<K>::zero(ring)));
    }

    static ModuleElement basis_vector(const RingPtr& ring, std::size_t rank, std::size_t i,
                                      Polynomial<K> value)
    {
        ModuleElement v = zero(ring, rank);
        v.c[i] = std::move(value);
        return v;
    }

    std::size_t rank() const { return c.size(); }

    bool is_zero() const
    {
        for (const auto& p : c)
            if (!p.is_zero())
                return false;
        return true;
    }

    ModuleElement operator+(const ModuleElement& o) const
    {
        ModuleElement r(*this);
        for (std::size_t i = 0; i < c.size(); ++i)
            r.c[i] = r.c[i] + o.c[i];
        return r;
    }

    ModuleElement operator-(const ModuleElement& o) const
    {
        ModuleElement r(*this);
        for (std::size_t i = 0; i < c.size(); ++i)
            r.c[i] = r.c[i] - o.c[i];
        return r;
    }

    ModuleElement operator-() const
    {
        ModuleElement r(*this);
        for (auto& p : r.c)
            p = -p;
        return r;
    }

    ModuleElement term_multiple(const Monomial& m, const K& k) const
    {
        ModuleElement r(*this);
        for (auto& p : r.c)
            p = p.term_multiple(m, k);
        return r;
    }

    ModuleElement poly_multiple(const Polynomial<K>& q) const
    {
        ModuleElement r(*this);
        for (auto& p : r.c)
            p = p * q;
        return r;
    }

    ModuleElement scaled(const K& k) const
    {
        ModuleElement r(*this);
        for (auto& p : r.c)
            p = p.scaled(k);
        return r;
    }

    bool operator==(const ModuleElement& o) const { return c == o.c; }

    std::string str() const
    {
        std::string out = "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i)
                out += ", ";
            out += c[i].str();
        }
        return out + ")";
    }
};

// Leading term of a module element: component index plus monomial/coefficient.
template <class K>
struct ModuleTerm {
    std::size_t component;
    Monomial monomial;
    K coefficient;
};

// Position-over-term: lower component index has priority, ties broken by the
// monomial order.
template <class K>
ModuleTerm<K> leading_module_term(const ModuleElement<K>& v, MonomialOrder order)
{
    for (std::size_t i = 0; i < v.c.size(); ++i) {
        if (!v.c[i].is_zero()) {
            auto [m, k] = v.c[i].leading_term(order);
            return {i, m, k};
        }
    }
    fail(ErrorKind::InvalidArgument, "leading term of zero module element");
}

template <class K>
std::vector<ModuleElement<K>> matrix_columns(const PolyMatrix<K>& m)
{
    std::vector<ModuleElement<K>> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<Polynomial<K>> v;
        v.reserve(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            v.push_back(m.at(i, j));
        cols.emplace_back(std::move(v));
    }
    return cols;
}

template <class K>
PolyMatrix<K> columns_to_matrix(const RingPtr& ring, std::size_t rank,
                                const std::vector<ModuleElement<K>>& cols)
{
    PolyMatrix<K> m(ring, rank, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rank; ++i)
            m.at(i, j) = cols[j].c[i];
    return m;
}

namespace engine_defaults {

// Thread-local engine configuration; the CLI's --order and --max-steps
// flags scope these. Library behavior stays deterministic per thread.
inline MonomialOrder& order()
{
    thread_local MonomialOrder o = MonomialOrder::Grevlex;
    return o;
}

inline std::size_t& max_steps()
{
    thread_local std::size_t budget = 5'000'000;
    return budget;
}

} // namespace engine_defaults

struct GroebnerOptions {
    MonomialOrder order = engine_defaults::order();
    // Runaway guard only; Buchberger terminates regardless (Dickson).
    std::size_t max_steps = engine_defaults::max_steps();
    // Collect input-coordinate syzygies from zero reductions. Pair-pruning
    // criteria are disabled in this mode: every skipped pair would also skip
    // its Schreyer syzygy.
    bool track_syzygies = false;
};

// RAII override of the thread-local engine defaults.
class ScopedEngineDefaults {
public:
    ScopedEngineDefaults(MonomialOrder order, std::size_t max_steps)
        : saved_order_(engine_defaults::order()), saved_steps_(engine_defaults::max_steps())
    {
        engine_defaults::order() = order;
        engine_defaults::max_steps() = max_steps;
    }
    ~ScopedEngineDefaults()
    {
        engine_defaults::order() = saved_order_;
        engine_defaults::max_steps() = saved_steps_;
    }
    ScopedEngineDefaults(const ScopedEngineDefaults&) = delete;
    ScopedEngineDefaults& operator=(const ScopedEngineDefaults&) = delete;

private:
    MonomialOrder saved_order_;
    std::size_t saved_steps_;
};

// Buchberger-complete basis of a submodule of S^rank, with the
// transformation expressing each basis element in the (possibly augmented)
// input generators. quotient_f adjoins f*e_i for every component, which is
// how computations over R = S/(f) are realized throughout.
template <class K>
struct GroebnerBasis {
    RingPtr ring;
    std::size_t rank = 0;
    MonomialOrder order = MonomialOrder::Grevlex;
    std::optional<Polynomial<K>> quotient_f;

    std::vector<ModuleElement<K>> input;        // generators, then f*e_i in quotient mode
    std::size_t original_count = 0;             // generators before augmentation
    std::vector<ModuleElement<K>> basis;        // monic Groebner basis
    std::vector<ModuleTerm<K>> leads;           // cached leading terms
    std::vector<std::vector<Polynomial<K>>> cofactor; // basis[k] = sum_i cofactor[k][i]*input[i]
    std::vector<ModuleElement<K>> syzygies;     // over input coordinates, if tracked
};

namespace detail {

template <class K>
struct Reduction {
    ModuleElement<K> remainder;
    std::vector<Polynomial<K>> quotients; // one per basis element
};

// Full normal form: every term of the remainder is irreducible against the
// basis leads. Quotients are recorded for lifting and syzygies.
template <class K>
Reduction<K> reduce_full(const ModuleElement<K>& v, const GroebnerBasis<K>& gb,
                         std::size_t* budget)
{
    const RingPtr& ring = gb.ring;
    Reduction<K> out;
    out.remainder = ModuleElement<K>::zero(ring, gb.rank);
    out.quotients.assign(gb.basis.size(), Polynomial<K>::zero(ring));
    ModuleElement<K> rest = v;
    while (!rest.is_zero()) {
        if (budget) {
            if (*budget == 0)
                fail(ErrorKind::StepBudgetExceeded, "reduction step budget exhausted");
            --(*budget);
        }
        ModuleTerm<K> lt = leading_module_term(rest, gb.order);
        bool reduced = false;
        for (std::size_t k = 0; k < gb.basis.size(); ++k) {
            const ModuleTerm<K>& bl = gb.leads[k];
            if (bl.component != lt.component || !bl.monomial.divides(lt.monomial))
                continue;
            Monomial m = lt.monomial / bl.monomial;
            K c = lt.coefficient / bl.coefficient;
            out.quotients[k].add_term(m, c);
            rest = rest - gb.basis[k].term_multiple(m, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            out.remainder.c[lt.component].add_term(lt.monomial, lt.coefficient);
            rest.c[lt.component].add_term(lt.monomial, -lt.coefficient);
        }
    }
    return out;
}

} // namespace detail

template <class K>
GroebnerBasis<K> groebner_basis(std::vector<ModuleElement<K>> gens, std::size_t rank,
                                const RingPtr& ring,
                                std::type_identity_t<std::optional<Polynomial<K>>> quotient_f = std::nullopt,
                                GroebnerOptions opts = {})
{
    for (const auto& g : gens)
        if (g.rank() != rank)
            fail(ErrorKind::RankMismatch, "generator rank differs from ambient rank");
    if (quotient_f) {
        require_same_ring(quotient_f->ring(), ring);
        if (quotient_f->is_zero())
            fail(ErrorKind::ZeroF, "quotient mode requires nonzero f");
    }

    GroebnerBasis<K> gb;
    gb.ring = ring;
    gb.rank = rank;
    gb.order = opts.order;
    gb.quotient_f = quotient_f;
    gb.original_count = gens.size();
    gb.input = std::move(gens);
    if (quotient_f)
        for (std::size_t i = 0; i < rank; ++i)
            gb.input.push_back(ModuleElement<K>::basis_vector(ring, rank, i, *quotient_f));

    std::size_t budget = opts.max_steps;
    const std::size_t m = gb.input.size();

    auto insert_element = [&](ModuleElement<K> elem, std::vector<Polynomial<K>> cof) {
        ModuleTerm<K> lt = leading_module_term(elem, gb.order);
        K inv = lt.coefficient.inverse();
        elem = elem.scaled(inv);
        for (auto& p : cof)
            p = p.scaled(inv);
        lt.coefficient = scalar_from_long<K>(*ring, 1);
        gb.basis.push_back(std::move(elem));
        gb.leads.push_back(std::move(lt));
        gb.cofactor.push_back(std::move(cof));
    };

    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Polynomial<K>> cof(m, Polynomial<K>::zero(ring));
        cof[i] = Polynomial<K>::one(ring);
        if (gb.input[i].is_zero()) {
            // A zero generator contributes the trivial syzygy e_i.
            if (opts.track_syzygies)
                gb.syzygies.push_back(ModuleElement<K>(std::move(cof)));
            continue;
        }
        insert_element(gb.input[i], std::move(cof));
    }

    struct Pair {
        long lcm_degree;
        std::size_t i, j;
        bool operator<(const Pair& o) const
        {
            if (lcm_degree != o.lcm_degree)
                return lcm_degree < o.lcm_degree;
            if (j != o.j)
                return j < o.j;
            return i < o.i;
        }
    };
    std::set<Pair> queue;

    auto enqueue_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (gb.leads[i].component != gb.leads[j].component)
                continue;
            Monomial l = Monomial::lcm(gb.leads[i].monomial, gb.leads[j].monomial);
            queue.insert(Pair{l.degree(), i, j});
        }
    };
    for (std::size_t j = 0; j < gb.basis.size(); ++j)
        enqueue_pairs(j);

    auto chain_criterion = [&](const Pair& p, const Monomial& l) {
        // Some completed basis element k strictly divides the pair lcm and
        // both side pairs were already processed (they are not in the queue).
        for (std::size_t k = 0; k < gb.basis.size(); ++k) {
            if (k == p.i || k == p.j)
                continue;
            if (gb.leads[k].component != gb.leads[p.i].component)
                continue;
            if (!gb.leads[k].monomial.divides(l))
                continue;
            Monomial lik = Monomial::lcm(gb.leads[p.i].monomial, gb.leads[k].monomial);
            Monomial lkj = Monomial::lcm(gb.leads[k].monomial, gb.leads[p.j].monomial);
            auto in_queue = [&](std::size_t a, std::size_t b, const Monomial& lm) {
                Pair q{lm.degree(), std::min(a, b), std::max(a, b)};
                return queue.count(q) != 0;
            };
            if (!in_queue(p.i, k, lik) && !in_queue(k, p.j, lkj))
                return true;
        }
        return false;
    };

    while (!queue.empty()) {
        if (budget == 0)
            fail(ErrorKind::StepBudgetExceeded, "pair budget exhausted");
        --budget;
        Pair p = *queue.begin();
        queue.erase(queue.begin());

        const ModuleTerm<K>&li = gb.leads[p.i];
        const ModuleTerm<K>&lj = gb.leads[p.j];
        Monomial l = Monomial::lcm(li.monomial, lj.monomial);

        if (!opts.track_syzygies) {
            // Product criterion is only valid in the rank-one (ideal) case.
            if (gb.rank == 1 && li.monomial.coprime(lj.monomial))
                continue;
            if (chain_criterion(p, l))
                continue;
        }

        Monomial mi = l / li.monomial;
        Monomial mj = l / lj.monomial;
        K one = scalar_from_long<K>(*ring, 1);
        ModuleElement<K> spoly =
            gb.basis[p.i].term_multiple(mi, one) - gb.basis[p.j].term_multiple(mj, one);
        auto red = detail::reduce_full(spoly, gb, &budget);

        if (red.remainder.is_zero()) {
            if (opts.track_syzygies) {
                // Schreyer syzygy mapped to input coordinates through the
                // cofactor bookkeeping.
                std::vector<Polynomial<K>> t(m, Polynomial<K>::zero(ring));
                auto accumulate = [&](const Polynomial<K>& scale, std::size_t k, bool negate) {
                    for (std::size_t a = 0; a < m; ++a) {
                        Polynomial<K> add = gb.cofactor[k][a] * scale;
                        t[a] = negate ? t[a] - add : t[a] + add;
                    }
                };
                Polynomial<K> pi = Polynomial<K>::term(ring, mi, one);
                Polynomial<K> pj = Polynomial<K>::term(ring, mj, one);
                accumulate(pi, p.i, false);
                accumulate(pj, p.j, true);
                for (std::size_t k = 0; k < gb.basis.size(); ++k)
                    if (!red.quotients[k].is_zero())
                        accumulate(red.quotients[k], k, true);
                ModuleElement<K> syz((std::move(t)));
                if (!syz.is_zero())
                    gb.syzygies.push_back(std::move(syz));
            }
            continue;
        }

        std::vector<Polynomial<K>> cof(m, Polynomial<K>::zero(ring));
        for (std::size_t a = 0; a < m; ++a) {
            cof[a] = gb.cofactor[p.i][a].term_multiple(mi, one) -
                     gb.cofactor[p.j][a].term_multiple(mj, one);
            for (std::size_t k = 0; k < gb.basis.size(); ++k)
                if (!red.quotients[k].is_zero())
                    cof[a] = cof[a] - gb.cofactor[k][a] * red.quotients[k];
        }
        insert_element(std::move(red.remainder), std::move(cof));
        enqueue_pairs(gb.basis.size() - 1);
    }

    return gb;
}

// Convenience overload for ideals (rank-one modules).
template <class K>
GroebnerBasis<K> groebner_basis(const std::vector<Polynomial<K>>& gens, const RingPtr& ring,
                                std::type_identity_t<std::optional<Polynomial<K>>> quotient_f = std::nullopt,
                                GroebnerOptions opts = {})
{
    std::vector<ModuleElement<K>> lifted;
    lifted.reserve(gens.size());
    for (const auto& g : gens)
        lifted.push_back(ModuleElement<K>(std::vector<Polynomial<K>>{g}));
    return groebner_basis(std::move(lifted), 1, ring, std::move(quotient_f), opts);
}

// Remainder of multivariate division; zero iff v lies in the submodule
// (augmented by f*e_i in quotient mode).
template <class K>
ModuleElement<K> normal_form(const ModuleElement<K>& v, const GroebnerBasis<K>& gb)
{
    if (v.rank() != gb.rank)
        fail(ErrorKind::RankMismatch, "element rank differs from basis rank");
    std::size_t budget = GroebnerOptions{}.max_steps;
    return detail::reduce_full(v, gb, &budget).remainder;
}

template <class K>
bool is_member(const ModuleElement<K>& v, const GroebnerBasis<K>& gb)
{
    return normal_form(v, gb).is_zero();
}

// Coefficients on the original generators, when the target is in the module.
template <class K>
std::optional<std::vector<Polynomial<K>>> lift_coefficients(const ModuleElement<K>& target,
                                                            const GroebnerBasis<K>& gb)
{
    if (target.rank() != gb.rank)
        fail(ErrorKind::RankMismatch, "target rank differs from basis rank");
    std::size_t budget = GroebnerOptions{}.max_steps;
    auto red = detail::reduce_full(target, gb, &budget);
    if (!red.remainder.is_zero())
        return std::nullopt;
    std::vector<Polynomial<K>> coeffs(gb.original_count, Polynomial<K>::zero(gb.ring));
    for (std::size_t k = 0; k < gb.basis.size(); ++k) {
        if (red.quotients[k].is_zero())
            continue;
        for (std::size_t i = 0; i < gb.original_count; ++i)
            coeffs[i] = coeffs[i] + gb.cofactor[k][i] * red.quotients[k];
    }
    return coeffs;
}

// One-shot lifting: coefficients c with sum c_i * gens_i = target, exactly
// over S or modulo f in quotient mode. Every successful lift is re-verified
// by substitution before being returned.
template <class K>
std::optional<std::vector<Polynomial<K>>> lift_through(const ModuleElement<K>& target,
                                                       const std::vector<ModuleElement<K>>& gens,
                                                       std::size_t rank, const RingPtr& ring,
                                                       std::type_identity_t<std::optional<Polynomial<K>>> quotient_f = std::nullopt,
                                                       GroebnerOptions opts = {})
{
    auto gb = groebner_basis(gens, rank, ring, quotient_f, opts);
    auto coeffs = lift_coefficients(target, gb);
    if (!coeffs)
        return std::nullopt;
    ModuleElement<K> check = ModuleElement<K>::zero(ring, rank);
    for (std::size_t i = 0; i < gens.size(); ++i)
        check = check + gens[i].poly_multiple((*coeffs)[i]);
    check = check - target;
    if (quotient_f)
        for (auto& p : check.c)
            p = reduce_mod(p, *quotient_f);
    if (!check.is_zero())
        fail(ErrorKind::VerificationFailed, "lift substitution check failed");
    return coeffs;
}

// Schreyer generators of all relations among gens (modulo f in quotient
// mode), reported in the original generator coordinates. Quotient-mode
// output is reduced entrywise modulo f and zero rows are dropped.
template <class K>
std::vector<ModuleElement<K>> syzygy_module(const std::vector<ModuleElement<K>>& gens,
                                            std::size_t rank, const RingPtr& ring,
                                            std::type_identity_t<std::optional<Polynomial<K>>> quotient_f = std::nullopt,
                                            GroebnerOptions opts = {})
{
    opts.track_syzygies = true;
    auto gb = groebner_basis(gens, rank, ring, quotient_f, opts);
    std::vector<ModuleElement<K>> out;
    for (const auto& s : gb.syzygies) {
        std::vector<Polynomial<K>> c(s.c.begin(), s.c.begin() + gens.size());
        if (quotient_f)
            for (auto& p : c)
                p = reduce_mod(p, *quotient_f);
        ModuleElement<K> t(std::move(c));
        if (!t.is_zero())
            out.push_back(std::move(t));
    }
    return out;
}

// One S-linear matrix equation: sum over terms of left * X_unknown * right
// equals rhs.
template <class K>
struct MatrixEquationTerm {
    std::size_t unknown;
    PolyMatrix<K> left;
    PolyMatrix<K> right;
};

template <class K>
struct MatrixEquation {
    std::vector<MatrixEquationTerm<K>> terms;
    PolyMatrix<K> rhs;
};

// Solves a simultaneous system of matrix equations in several matrix
// unknowns by flattening all unknown entries into a vector, building one
// generator column per entry, and delegating to lift_through. Returns any
// one solution; NoSolution is reported as nullopt.
template <class K>
std::optional<std::vector<PolyMatrix<K>>> solve_matrix_equation(
    const std::vector<std::pair<std::size_t, std::size_t>>& unknown_shapes,
    const std::vector<MatrixEquation<K>>& equations, const RingPtr& ring,
    std::type_identity_t<std::optional<Polynomial<K>>> quotient_f = std::nullopt, GroebnerOptions opts = {})
{
    std::vector<std::size_t> offset(unknown_shapes.size() + 1, 0);
    for (std::size_t u = 0; u < unknown_shapes.size(); ++u)
        offset[u + 1] = offset[u] + unknown_shapes[u].first * unknown_shapes[u].second;
    const std::size_t nunknowns = offset.back();

    std::size_t ambient = 0;
    for (const auto& eq : equations)
        ambient += eq.rhs.rows() * eq.rhs.cols();

    std::vector<ModuleElement<K>> columns(nunknowns, ModuleElement<K>::zero(ring, ambient));
    ModuleElement<K> target = ModuleElement<K>::zero(ring, ambient);

    std::size_t row0 = 0;
    for (const auto& eq : equations) {
        const std::size_t p = eq.rhs.rows(), q = eq.rhs.cols();
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < q; ++j)
                target.c[row0 + i * q + j] = eq.rhs.at(i, j);
        for (const auto& term : eq.terms) {
            const auto [ru, cu] = unknown_shapes[term.unknown];
            if (term.left.rows() != p || term.left.cols() != ru || term.right.rows() != cu ||
                term.right.cols() != q)
                fail(ErrorKind::DimensionMismatch, "matrix equation term shapes");
            for (std::size_t a = 0; a < ru; ++a)
                for (std::size_t b = 0; b < cu; ++b) {
                    std::size_t col = offset[term.unknown] + a * cu + b;
                    for (std::size_t i = 0; i < p; ++i) {
                        if (term.left.at(i, a).is_zero())
                            continue;
                        for (std::size_t j = 0; j < q; ++j) {
                            if (term.right.at(b, j).is_zero())
                                continue;
                            auto& slot = columns[col].c[row0 + i * q + j];
                            slot = slot + term.left.at(i, a) * term.right.at(b, j);
                        }
                    }
                }
        }
        row0 += p * q;
    }

    auto coeffs = lift_through(target, columns, ambient, ring, quotient_f, opts);
    if (!coeffs)
        return std::nullopt;

    std::vector<PolyMatrix<K>> solution;
    solution.reserve(unknown_shapes.size());
    for (std::size_t u = 0; u < unknown_shapes.size(); ++u) {
        const auto [ru, cu] = unknown_shapes[u];
        PolyMatrix<K> x(ring, ru, cu);
        for (std::size_t a = 0; a < ru; ++a)
            for (std::size_t b = 0; b < cu; ++b)
                x.at(a, b) = (*coeffs)[offset[u] + a * cu + b];
        solution.push_back(std::move(x));
    }
    return solution;
}

} // namespace mfact

#endif
