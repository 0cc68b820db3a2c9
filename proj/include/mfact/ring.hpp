#ifndef MFACT_RING_HPP
#define MFACT_RING_HPP

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace mfact {

enum class FieldKind { Rationals, PrimeField };

enum class MonomialOrder { Grevlex, Lex };

// Ambient polynomial ring S = k[x_1..x_n]: ordered variable names, the
// coefficient field, and a positive grading used for homogeneity checks.
struct Ring {
    std::vector<std::string> variables;
    FieldKind field = FieldKind::Rationals;
    std::uint64_t prime = 0;
    std::vector<long> weights; // one positive weight per variable

    std::size_t nvars() const { return variables.size(); }

    bool standard_grading() const
    {
        for (long w : weights)
            if (w != 1)
                return false;
        return true;
    }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, FieldKind field = FieldKind::Rationals,
                         std::uint64_t prime = 0, std::vector<long> weights = {})
{
    auto r = std::make_shared<Ring>();
    r->variables = std::move(vars);
    r->field = field;
    r->prime = prime;
    if (field == FieldKind::PrimeField && !detail::is_prime_u64(prime))
        fail(ErrorKind::InvalidArgument, "modulus " + std::to_string(prime) + " is not prime");
    if (weights.empty())
        weights.assign(r->variables.size(), 1);
    if (weights.size() != r->variables.size())
        fail(ErrorKind::InvalidArgument, "weight count does not match variable count");
    for (long w : weights)
        if (w <= 0)
            fail(ErrorKind::InvalidArgument, "grading weights must be positive");
    r->weights = std::move(weights);
    for (std::size_t i = 0; i < r->variables.size(); ++i)
        for (std::size_t j = i + 1; j < r->variables.size(); ++j)
            if (r->variables[i] == r->variables[j])
                fail(ErrorKind::DuplicateName, "variable '" + r->variables[i] + "' declared twice");
    return r;
}

inline bool same_ring(const RingPtr& a, const RingPtr& b)
{
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return a->variables == b->variables && a->field == b->field && a->prime == b->prime &&
           a->weights == b->weights;
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b)
{
    if (!same_ring(a, b))
        fail(ErrorKind::ContextMismatch, "operands live in different rings");
}

// Exponent vector; the length always equals the ambient variable count.
struct Monomial {
    std::vector<std::uint32_t> e;

    explicit Monomial(std::size_t nvars = 0) : e(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

    long degree() const { return std::accumulate(e.begin(), e.end(), 0L); }

    long weighted_degree(const Ring& ring) const
    {
        long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            d += ring.weights[i] * static_cast<long>(e[i]);
        return d;
    }

    bool is_constant() const
    {
        for (auto x : e)
            if (x)
                return false;
        return true;
    }

    bool divides(const Monomial& m) const
    {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i])
                return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const
    {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i)
            r.e[i] += m.e[i];
        return r;
    }

    // Quotient of exact division; caller guarantees divisibility.
    Monomial operator/(const Monomial& m) const
    {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i)
            r.e[i] -= m.e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b)
    {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e.size(); ++i)
            r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    bool coprime(const Monomial& m) const
    {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] && m.e[i])
                return false;
        return true;
    }

    bool operator==(const Monomial& m) const { return e == m.e; }
    bool operator!=(const Monomial& m) const { return e != m.e; }
};

// a < b in graded reverse lexicographic order.
inline bool grevlex_less(const Monomial& a, const Monomial& b)
{
    long da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    for (std::size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i])
            return a.e[i] > b.e[i];
    }
    return false;
}

// a < b in lexicographic order with x_1 > x_2 > ... .
inline bool lex_less(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.e.size(); ++i) {
        if (a.e[i] != b.e[i])
            return a.e[i] < b.e[i];
    }
    return false;
}

inline bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order)
{
    return order == MonomialOrder::Grevlex ? grevlex_less(a, b) : lex_less(a, b);
}

// Fixed storage comparator for term maps; independent of the order used by
// Groebner computations.
struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};

// Scalar constructors that know which field the ring uses.
template <class K>
K scalar_from_long(const Ring& ring, long n);

template <>
inline Rat scalar_from_long<Rat>(const Ring&, long n)
{
    return Rat(n);
}

template <>
inline Fp scalar_from_long<Fp>(const Ring& ring, long n)
{
    return Fp::from_int(n, ring.prime);
}

template <class K>
K scalar_from_fraction(const Ring& ring, long num, long den);

template <>
inline Rat scalar_from_fraction<Rat>(const Ring&, long num, long den)
{
    return Rat(num, den);
}

template <>
inline Fp scalar_from_fraction<Fp>(const Ring& ring, long num, long den)
{
    Fp d = Fp::from_int(den, ring.prime);
    if (d.is_zero())
        fail(ErrorKind::InvalidArgument, "denominator vanishes modulo p");
    return Fp::from_int(num, ring.prime) / d;
}

} // namespace mfact

#endif
