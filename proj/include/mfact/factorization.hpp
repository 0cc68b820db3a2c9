#ifndef MFACT_FACTORIZATION_HPP
#define MFACT_FACTORIZATION_HPP

#include <optional>
#include <utility>

#include "groebner.hpp"

namespace mfact {

// Linear factorization of f with finite free modules: square matrices
// d1: M1 -> M0 and d0: M0 -> M1 with d1*d0 = d0*d1 = f*I. Rank 0 is the
// zero object. Instances are only created through validate_factorization,
// so every held object satisfies the axioms.
template <class K>
struct LinearFactorization {
    Polynomial<K> f;
    PolyMatrix<K> d1;
    PolyMatrix<K> d0;

    std::size_t rank() const { return d1.rows(); }
    const RingPtr& ring() const { return f.ring(); }
};

template <class K>
bool same_object(const LinearFactorization<K>& a, const LinearFactorization<K>& b)
{
    return a.f == b.f && a.d1 == b.d1 && a.d0 == b.d0;
}

// Checks every axiom: shapes, nonzero f vanishing at the origin, both
// products equal to f*I, and injectivity of d1, d0 realized as emptiness of
// the column syzygy modules over S.
template <class K>
LinearFactorization<K> validate_factorization(const Polynomial<K>& f, const PolyMatrix<K>& d1,
                                              const PolyMatrix<K>& d0)
{
    require_same_ring(f.ring(), d1.ring());
    require_same_ring(f.ring(), d0.ring());
    if (!d1.is_square() || !d0.is_square() || d1.rows() != d0.rows())
        fail(ErrorKind::DimensionMismatch,
             "factorization needs equal square matrices, got " + d1.shape() + " and " + d0.shape());
    if (f.is_zero())
        fail(ErrorKind::ZeroF, "f must be nonzero");
    if (!f.constant_term().is_zero())
        fail(ErrorKind::NotLocal, "f does not vanish at the origin");

    const RingPtr& ring = f.ring();
    const std::size_t n = d1.rows();
    PolyMatrix<K> fI = PolyMatrix<K>::scalar(ring, n, f);
    if (d1 * d0 != fI)
        fail(ErrorKind::AxiomFailed, "d1*d0 != f*I");
    if (d0 * d1 != fI)
        fail(ErrorKind::AxiomFailed, "d0*d1 != f*I");

    // f regular forces both differentials injective; certify by computing
    // the syzygies of the columns.
    for (const auto* m : {&d1, &d0}) {
        auto syz = syzygy_module(matrix_columns(*m), n, ring);
        if (!syz.empty())
            fail(ErrorKind::AxiomFailed, "differential columns admit a nonzero syzygy");
    }
    return LinearFactorization<K>{f, d1, d0};
}

// The contractible rank-one objects (1, f) and (f, 1).
template <class K>
std::pair<LinearFactorization<K>, LinearFactorization<K>> trivial_factorizations(const Polynomial<K>& f)
{
    const RingPtr& ring = f.ring();
    PolyMatrix<K> one = PolyMatrix<K>::identity(ring, 1);
    PolyMatrix<K> ff = PolyMatrix<K>::scalar(ring, 1, f);
    return {validate_factorization(f, one, ff), validate_factorization(f, ff, one)};
}

// Translation: modules swapped, both differentials negated, so that
// shift(shift(p)) = p on the nose.
template <class K>
LinearFactorization<K> shift(const LinearFactorization<K>& p)
{
    return LinearFactorization<K>{p.f, -p.d0, -p.d1};
}

template <class K>
LinearFactorization<K> direct_sum(const LinearFactorization<K>& p, const LinearFactorization<K>& q)
{
    if (p.f != q.f)
        fail(ErrorKind::FMismatch, "direct sum of factorizations of different f");
    return LinearFactorization<K>{p.f, block_diagonal(p.d1, q.d1), block_diagonal(p.d0, q.d0)};
}

// Morphism of factorizations: alpha0: M0 -> M0', alpha1: M1 -> M1' with
// both squares commuting exactly over S.
template <class K>
struct MfMorphism {
    LinearFactorization<K> source;
    LinearFactorization<K> target;
    PolyMatrix<K> alpha0;
    PolyMatrix<K> alpha1;
};

template <class K>
MfMorphism<K> make_morphism(const LinearFactorization<K>& source, const LinearFactorization<K>& target,
                            const PolyMatrix<K>& alpha0, const PolyMatrix<K>& alpha1)
{
    require_same_ring(source.ring(), target.ring());
    if (alpha0.rows() != target.rank() || alpha0.cols() != source.rank() ||
        alpha1.rows() != target.rank() || alpha1.cols() != source.rank())
        fail(ErrorKind::DimensionMismatch, "morphism component shapes");
    if (target.d1 * alpha1 != alpha0 * source.d1)
        fail(ErrorKind::AxiomFailed, "morphism square d1'*a1 = a0*d1 fails");
    if (target.d0 * alpha0 != alpha1 * source.d0)
        fail(ErrorKind::AxiomFailed, "morphism square d0'*a0 = a1*d0 fails");
    return MfMorphism<K>{source, target, alpha0, alpha1};
}

template <class K>
MfMorphism<K> identity_morphism(const LinearFactorization<K>& p)
{
    PolyMatrix<K> id = PolyMatrix<K>::identity(p.ring(), p.rank());
    return MfMorphism<K>{p, p, id, id};
}

template <class K>
MfMorphism<K> zero_morphism(const LinearFactorization<K>& p, const LinearFactorization<K>& q)
{
    return MfMorphism<K>{p, q, PolyMatrix<K>::zero(p.ring(), q.rank(), p.rank()),
                         PolyMatrix<K>::zero(p.ring(), q.rank(), p.rank())};
}

template <class K>
MfMorphism<K> compose(const MfMorphism<K>& m2, const MfMorphism<K>& m1)
{
    if (!same_object(m1.target, m2.source))
        fail(ErrorKind::ComposabilityMismatch, "target of inner morphism differs from source of outer");
    return MfMorphism<K>{m1.source, m2.target, m2.alpha0 * m1.alpha0, m2.alpha1 * m1.alpha1};
}

template <class K>
MfMorphism<K> morphism_difference(const MfMorphism<K>& a, const MfMorphism<K>& b)
{
    if (!same_object(a.source, b.source) || !same_object(a.target, b.target))
        fail(ErrorKind::SignatureMismatch, "morphisms with different endpoints");
    return MfMorphism<K>{a.source, a.target, a.alpha0 - b.alpha0, a.alpha1 - b.alpha1};
}

// Mapping cone of a morphism: the standard matrix-factorization cone on
// shift(source) + target. Always validates for a valid morphism.
template <class K>
LinearFactorization<K> cone(const MfMorphism<K>& m)
{
    const RingPtr& ring = m.source.ring();
    std::size_t n = m.source.rank(), np = m.target.rank();
    PolyMatrix<K> z_top(ring, n, np);
    PolyMatrix<K> c1 = block_2x2(-m.source.d0, z_top, m.alpha0, m.target.d1);
    PolyMatrix<K> c0 = block_2x2(-m.source.d1, z_top, m.alpha1, m.target.d0);
    return validate_factorization(m.source.f, c1, c0);
}

// Homotopy witness: h0: M0 -> M1', h1: M1 -> M0' with
// alpha0 = h1*d0 + d1'*h0 and alpha1 = h0*d1 + d0'*h1.
template <class K>
struct Homotopy {
    PolyMatrix<K> h0;
    PolyMatrix<K> h1;
};

template <class K>
bool homotopy_witnesses(const MfMorphism<K>& m, const Homotopy<K>& h)
{
    const auto& s = m.source;
    const auto& t = m.target;
    return m.alpha0 == h.h1 * s.d0 + t.d1 * h.h0 && m.alpha1 == h.h0 * s.d1 + t.d0 * h.h1;
}

// Decides null-homotopy by solving the two simultaneous matrix equations
// over S. The returned witness is re-verified by exact substitution.
template <class K>
std::optional<Homotopy<K>> is_null_homotopic(const MfMorphism<K>& m)
{
    const RingPtr& ring = m.source.ring();
    const auto& s = m.source;
    const auto& t = m.target;
    std::size_t n = s.rank(), np = t.rank();

    // Unknowns h0, h1, both np x n.
    std::vector<std::pair<std::size_t, std::size_t>> shapes{{np, n}, {np, n}};
    PolyMatrix<K> idn = PolyMatrix<K>::identity(ring, n);
    PolyMatrix<K> idnp = PolyMatrix<K>::identity(ring, np);
    std::vector<MatrixEquation<K>> eqs;
    eqs.push_back(MatrixEquation<K>{{MatrixEquationTerm<K>{1, idnp, s.d0},
                                     MatrixEquationTerm<K>{0, t.d1, idn}},
                                    m.alpha0});
    eqs.push_back(MatrixEquation<K>{{MatrixEquationTerm<K>{0, idnp, s.d1},
                                     MatrixEquationTerm<K>{1, t.d0, idn}},
                                    m.alpha1});
    auto sol = solve_matrix_equation(shapes, eqs, ring);
    if (!sol)
        return std::nullopt;
    Homotopy<K> h{(*sol)[0], (*sol)[1]};
    if (!homotopy_witnesses(m, h))
        fail(ErrorKind::VerificationFailed, "homotopy witness substitution failed");
    return h;
}

// alpha ~ beta iff alpha - beta is null-homotopic.
template <class K>
std::optional<Homotopy<K>> homotopic(const MfMorphism<K>& a, const MfMorphism<K>& b)
{
    return is_null_homotopic(morphism_difference(a, b));
}

} // namespace mfact

#endif
