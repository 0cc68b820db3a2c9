#ifndef MFACT_POLYNOMIAL_HPP
#define MFACT_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "ring.hpp"

namespace mfact {

// Sparse exact multivariate polynomial over the ring's coefficient field.
// Terms are kept in ascending grevlex order with no zero coefficients.
template <class K>
class Polynomial {
public:
    using TermMap = std::map<Monomial, K, GrevlexLess>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, K c)
    {
        Polynomial p(std::move(ring));
        if (!c.is_zero())
            p.terms_.emplace(Monomial(p.ring_->nvars()), std::move(c));
        return p;
    }

    static Polynomial one(RingPtr ring)
    {
        K c = scalar_from_long<K>(*ring, 1);
        return constant(std::move(ring), std::move(c));
    }

    static Polynomial from_long(RingPtr ring, long n)
    {
        K c = scalar_from_long<K>(*ring, n);
        return constant(std::move(ring), std::move(c));
    }

    static Polynomial variable(RingPtr ring, std::size_t index, std::uint32_t power = 1)
    {
        if (index >= ring->nvars())
            fail(ErrorKind::InvalidArgument, "variable index out of range");
        Monomial m(ring->nvars());
        m.e[index] = power;
        Polynomial p(ring);
        p.terms_.emplace(std::move(m), scalar_from_long<K>(*ring, 1));
        return p;
    }

    static Polynomial term(RingPtr ring, Monomial m, K c)
    {
        Polynomial p(std::move(ring));
        if (!c.is_zero())
            p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }

    bool is_one() const
    {
        return terms_.size() == 1 && terms_.begin()->first.is_constant() && terms_.begin()->second.is_one();
    }

    // Coefficient of the constant term; this is evaluation at the origin.
    K constant_term() const
    {
        Monomial m(ring_->nvars());
        auto it = terms_.find(m);
        if (it == terms_.end())
            return scalar_from_long<K>(*ring_, 0);
        return it->second;
    }

    long degree() const
    {
        long d = -1;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m.degree());
        return d;
    }

    // Weighted degree when homogeneous; nullopt for 0 or inhomogeneous input.
    std::optional<long> homogeneous_degree() const
    {
        if (terms_.empty())
            return std::nullopt;
        long d = terms_.begin()->first.weighted_degree(*ring_);
        for (const auto& [m, c] : terms_)
            if (m.weighted_degree(*ring_) != d)
                return std::nullopt;
        return d;
    }

    bool is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }

    void add_term(const Monomial& m, const K& c)
    {
        if (c.is_zero())
            return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }

    Polynomial operator-() const
    {
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_)
            r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial operator+(const Polynomial& o) const
    {
        require_same_ring(ring_, o.ring_);
        Polynomial r(*this);
        for (const auto& [m, c] : o.terms_)
            r.add_term(m, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const
    {
        require_same_ring(ring_, o.ring_);
        Polynomial r(*this);
        for (const auto& [m, c] : o.terms_)
            r.add_term(m, -c);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const
    {
        require_same_ring(ring_, o.ring_);
        Polynomial r(ring_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_)
                r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial scaled(const K& c) const
    {
        Polynomial r(ring_);
        if (c.is_zero())
            return r;
        for (const auto& [m, k] : terms_)
            r.add_term(m, k * c);
        return r;
    }

    Polynomial term_multiple(const Monomial& m, const K& c) const
    {
        Polynomial r(ring_);
        if (c.is_zero())
            return r;
        for (const auto& [mm, k] : terms_)
            r.terms_.emplace(mm * m, k * c);
        return r;
    }

    bool operator==(const Polynomial& o) const
    {
        return same_ring(ring_, o.ring_) && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Leading term with respect to a monomial order.
    std::pair<Monomial, K> leading_term(MonomialOrder order) const
    {
        if (terms_.empty())
            fail(ErrorKind::InvalidArgument, "leading term of zero polynomial");
        if (order == MonomialOrder::Grevlex)
            return *terms_.rbegin();
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (monomial_less(best->first, it->first, order))
                best = it;
        return *best;
    }

    std::string str() const;

private:
    RingPtr ring_;
    TermMap terms_;
};

namespace detail {

template <class K>
void print_coefficient(std::ostringstream& out, const K& c, bool leading, bool monomial_follows)
{
    K a = c.abs();
    if (c.is_negative())
        out << (leading ? "-" : " - ");
    else if (!leading)
        out << " + ";
    if (!a.is_one() || !monomial_follows) {
        out << a.str();
        if (monomial_follows)
            out << "*";
    }
}

} // namespace detail

// Canonical form: terms in descending grevlex order, signs folded into the
// coefficients, unit coefficients suppressed, e.g. "x^2 + 3*x*y - 1/2*y^3".
template <class K>
std::string Polynomial<K>::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool leading = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        detail::print_coefficient(out, it->second, leading, !m.is_constant());
        bool first_var = true;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (!m.e[i])
                continue;
            if (!first_var)
                out << "*";
            out << ring_->variables[i];
            if (m.e[i] > 1)
                out << "^" << m.e[i];
            first_var = false;
        }
        leading = false;
    }
    return out.str();
}

// Single-divisor division: p = q*f + r where no term of r is divisible by
// the leading monomial of f. The remainder is the canonical representative
// of p modulo the principal ideal (f).
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> divide_by(const Polynomial<K>& p, const Polynomial<K>& f,
                                                  MonomialOrder order = MonomialOrder::Grevlex)
{
    require_same_ring(p.ring(), f.ring());
    if (f.is_zero())
        fail(ErrorKind::InvalidArgument, "division by zero polynomial");
    auto [lm, lc] = f.leading_term(order);
    Polynomial<K> q(p.ring()), r(p.ring()), rest(p);
    while (!rest.is_zero()) {
        auto [m, c] = rest.leading_term(order);
        if (lm.divides(m)) {
            Monomial mm = m / lm;
            K cc = c / lc;
            q.add_term(mm, cc);
            rest = rest - f.term_multiple(mm, cc);
        } else {
            r.add_term(m, c);
            rest.add_term(m, -c);
        }
    }
    return {q, r};
}

// Canonical representative of p modulo (f).
template <class K>
Polynomial<K> reduce_mod(const Polynomial<K>& p, const Polynomial<K>& f)
{
    return divide_by(p, f).second;
}

// Exact quotient p / f; nullopt when f does not divide p.
template <class K>
std::optional<Polynomial<K>> exact_quotient(const Polynomial<K>& p, const Polynomial<K>& f)
{
    auto [q, r] = divide_by(p, f);
    if (!r.is_zero())
        return std::nullopt;
    return q;
}

} // namespace mfact

#endif
