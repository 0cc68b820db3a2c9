#ifndef MFACT_FIELD_HPP
#define MFACT_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "error.hpp"

namespace mfact {

// Exact rational coefficient. GMP keeps the canonical form (fully reduced,
// positive denominator), which is exactly the storage invariant we need.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) : v_(num, den)
    {
        if (den == 0)
            fail(ErrorKind::InvalidArgument, "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const
    {
        if (o.is_zero())
            fail(ErrorKind::InvalidArgument, "division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat inverse() const
    {
        if (is_zero())
            fail(ErrorKind::InvalidArgument, "inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }

    // True when the canonical textual form needs a leading minus sign.
    bool is_negative() const { return sgn(v_) < 0; }
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    std::string str() const { return v_.get_str(); }

    const mpq_class& value() const { return v_; }

private:
    mpq_class v_;
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0)
            return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

} // namespace detail

// Residue in [0, p) for a machine-word prime p. Each value carries its
// modulus so mixed-modulus arithmetic is caught instead of silently wrong.
class Fp {
public:
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

    static Fp from_int(long n, std::uint64_t p)
    {
        long r = n % static_cast<long>(p);
        if (r < 0)
            r += static_cast<long>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp operator+(const Fp& o) const
    {
        check(o);
        std::uint64_t s = v_ + o.v_;
        if (s >= p_)
            s -= p_;
        return Fp(s, p_);
    }
    Fp operator-(const Fp& o) const
    {
        check(o);
        return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
    }
    Fp operator*(const Fp& o) const
    {
        check(o);
        return Fp(detail::mulmod_u64(v_, o.v_, p_), p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }

    Fp inverse() const
    {
        if (v_ == 0)
            fail(ErrorKind::InvalidArgument, "inverse of zero residue");
        return Fp(detail::powmod_u64(v_, p_ - 2, p_), p_);
    }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    // Canonical residues are printed as-is; no sign folding over F_p.
    bool is_negative() const { return false; }
    Fp abs() const { return *this; }

    std::string str() const { return std::to_string(v_); }

private:
    void check(const Fp& o) const
    {
        if (p_ != o.p_)
            fail(ErrorKind::ContextMismatch, "residues with different moduli");
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

} // namespace mfact

#endif
