#ifndef MFACT_PERIODIC_HPP
#define MFACT_PERIODIC_HPP

#include <optional>
#include <vector>

#include "factorization.hpp"
#include "presentation.hpp"

namespace mfact {

// 2-periodic complex of free R-modules, R = S/(f), stored by its two
// distinct differentials as S-matrices read modulo f:
//   ... -> M1 --a_bar--> M0 --b_bar--> M1 -> ...
// The infinite unrolling is never materialized.
template <class K>
struct TwoPeriodicComplex {
    Polynomial<K> f;
    PolyMatrix<K> a_bar; // odd differential, M1 -> M0
    PolyMatrix<K> b_bar; // even differential, M0 -> M1

    const RingPtr& ring() const { return f.ring(); }
    std::size_t rank0() const { return a_bar.rows(); }
    std::size_t rank1() const { return a_bar.cols(); }
};

template <class K>
TwoPeriodicComplex<K> make_complex(const Polynomial<K>& f, const PolyMatrix<K>& a,
                                   const PolyMatrix<K>& b)
{
    require_same_ring(f.ring(), a.ring());
    require_same_ring(f.ring(), b.ring());
    if (f.is_zero())
        fail(ErrorKind::ZeroF, "complex over R requires nonzero f");
    if (a.cols() != b.rows() || a.rows() != b.cols())
        fail(ErrorKind::DimensionMismatch, "periodic differentials do not alternate");
    PolyMatrix<K> ra = reduce_mod(a, f), rb = reduce_mod(b, f);
    if (!reduce_mod(ra * rb, f).is_zero() || !reduce_mod(rb * ra, f).is_zero())
        fail(ErrorKind::AxiomFailed, "differentials do not compose to zero mod f");
    return TwoPeriodicComplex<K>{f, ra, rb};
}

// T(M, d): same matrices, now read modulo f.
template <class K>
TwoPeriodicComplex<K> apply_T(const LinearFactorization<K>& p)
{
    return make_complex(p.f, p.d1, p.d0);
}

// Translation of a 2-periodic complex, matching the factorization shift.
template <class K>
TwoPeriodicComplex<K> shift(const TwoPeriodicComplex<K>& c)
{
    return make_complex(c.f, -c.b_bar, -c.a_bar);
}

// Hom(-, R) of the complex: transposed differentials in swapped roles.
template <class K>
TwoPeriodicComplex<K> transpose(const TwoPeriodicComplex<K>& c)
{
    return make_complex(c.f, c.b_bar.transpose(), c.a_bar.transpose());
}

// Degree-0 chain map between 2-periodic complexes: u0 on even modules, u1
// on odd modules, both squares commuting mod f.
template <class K>
struct PeriodicChainMap {
    TwoPeriodicComplex<K> source;
    TwoPeriodicComplex<K> target;
    PolyMatrix<K> u0;
    PolyMatrix<K> u1;
};

template <class K>
PeriodicChainMap<K> make_chain_map(const TwoPeriodicComplex<K>& source,
                                   const TwoPeriodicComplex<K>& target, const PolyMatrix<K>& u0,
                                   const PolyMatrix<K>& u1)
{
    const Polynomial<K>& f = source.f;
    if (f != target.f)
        fail(ErrorKind::FMismatch, "chain map between complexes over different f");
    if (u0.rows() != target.rank0() || u0.cols() != source.rank0() ||
        u1.rows() != target.rank1() || u1.cols() != source.rank1())
        fail(ErrorKind::DimensionMismatch, "chain map component shapes");
    if (!equal_mod(u0 * source.a_bar, target.a_bar * u1, f))
        fail(ErrorKind::AxiomFailed, "chain map square at the odd differential fails mod f");
    if (!equal_mod(u1 * source.b_bar, target.b_bar * u0, f))
        fail(ErrorKind::AxiomFailed, "chain map square at the even differential fails mod f");
    return PeriodicChainMap<K>{source, target, reduce_mod(u0, f), reduce_mod(u1, f)};
}

// T on morphisms: components read mod f.
template <class K>
PeriodicChainMap<K> apply_T_morphism(const MfMorphism<K>& m)
{
    return make_chain_map(apply_T(m.source), apply_T(m.target), m.alpha0, m.alpha1);
}

template <class K>
PeriodicChainMap<K> zero_chain_map(const TwoPeriodicComplex<K>& source,
                                   const TwoPeriodicComplex<K>& target)
{
    const RingPtr& ring = source.ring();
    return PeriodicChainMap<K>{source, target,
                               PolyMatrix<K>::zero(ring, target.rank0(), source.rank0()),
                               PolyMatrix<K>::zero(ring, target.rank1(), source.rank1())};
}

// One kernel generator together with its certified image membership.
template <class K>
struct ExactnessWitness {
    ModuleElement<K> kernel_generator;
    std::vector<Polynomial<K>> image_coefficients;
};

template <class K>
struct AcyclicityReport {
    bool acyclic = false;
    // 0: position with incoming b_bar and outgoing a_bar fails; 1: the other.
    // -1 when acyclic.
    int failed_position = -1;
    bool dual_failure = false; // total-acyclicity checks tag the Hom(-,R) side
    std::optional<ModuleElement<K>> witness; // kernel element not in the image
    std::vector<ExactnessWitness<K>> certificates;
};

// Acyclicity at both positions: every syzygy of one differential's columns
// (over R) is certified to lie in the image of the other differential.
template <class K>
AcyclicityReport<K> verify_acyclic(const TwoPeriodicComplex<K>& c)
{
    AcyclicityReport<K> report;
    const RingPtr& ring = c.ring();
    auto check_position = [&](const PolyMatrix<K>& out, const PolyMatrix<K>& in, int pos) {
        auto kernel = syzygy_module(matrix_columns(out), out.rows(), ring,
                                    std::optional<Polynomial<K>>(c.f));
        auto image_cols = matrix_columns(in);
        auto gb = groebner_basis(image_cols, in.rows(), ring, std::optional<Polynomial<K>>(c.f));
        for (auto& ker_gen : kernel) {
            // Kernel generators live in the domain of `out`, which is the
            // codomain of `in`.
            auto lifted = lift_coefficients(ker_gen, gb);
            if (!lifted) {
                report.acyclic = false;
                report.failed_position = pos;
                report.witness = ker_gen;
                return false;
            }
            lifted->resize(image_cols.size(), Polynomial<K>::zero(ring));
            report.certificates.push_back(ExactnessWitness<K>{ker_gen, std::move(*lifted)});
        }
        return true;
    };
    report.acyclic = true;
    // ker(a_bar) vs im(b_bar), then ker(b_bar) vs im(a_bar).
    if (!check_position(c.a_bar, c.b_bar, 1))
        return report;
    if (!check_position(c.b_bar, c.a_bar, 0))
        return report;
    return report;
}

// Total acyclicity against the test module R: plain acyclicity plus
// acyclicity of the transposed complex Hom(-, R). Hom(R, -) is the identity
// and Hom into finite free sums reduces componentwise, so this suffices for
// W = finite free R-modules.
template <class K>
AcyclicityReport<K> verify_total_acyclicity(const TwoPeriodicComplex<K>& c)
{
    AcyclicityReport<K> plain = verify_acyclic(c);
    if (!plain.acyclic)
        return plain;
    AcyclicityReport<K> dual = verify_acyclic(transpose(c));
    if (!dual.acyclic) {
        dual.dual_failure = true;
        for (auto& cert : plain.certificates)
            dual.certificates.push_back(cert);
        return dual;
    }
    for (auto& cert : dual.certificates)
        plain.certificates.push_back(std::move(cert));
    return plain;
}

// R-module presentation of the chosen differential's cokernel: generators
// are the target basis, relations its columns read mod f.
template <class K>
ModulePresentation<K> coker_presentation(const LinearFactorization<K>& p, bool use_d1 = true)
{
    return make_r_module(use_d1 ? p.d1 : p.d0, p.f);
}

// 2-periodic homotopy witness between chain maps.
template <class K>
struct PeriodicHomotopy {
    PolyMatrix<K> s0; // even module of the source -> odd module of the target
    PolyMatrix<K> s1; // odd module of the source -> even module of the target
};

template <class K>
bool periodic_homotopy_witnesses(const PeriodicChainMap<K>& u, const PeriodicHomotopy<K>& s)
{
    const Polynomial<K>& f = u.source.f;
    return equal_mod(u.u0, u.target.a_bar * s.s0 + s.s1 * u.source.b_bar, f) &&
           equal_mod(u.u1, u.target.b_bar * s.s1 + s.s0 * u.source.a_bar, f);
}

// Difference of the chain maps followed by the two homotopy equations mod f,
// restricted to 2-periodic witnesses (s0, s1).
template <class K>
std::optional<PeriodicHomotopy<K>> periodic_homotopic(const PeriodicChainMap<K>& m1,
                                                      const PeriodicChainMap<K>& m2)
{
    const Polynomial<K>& f = m1.source.f;
    if (m1.source.a_bar != m2.source.a_bar || m1.source.b_bar != m2.source.b_bar ||
        m1.target.a_bar != m2.target.a_bar || m1.target.b_bar != m2.target.b_bar || f != m2.source.f)
        fail(ErrorKind::SignatureMismatch, "chain maps with different endpoints");

    const RingPtr& ring = m1.source.ring();
    const auto& s = m1.source;
    const auto& t = m1.target;
    PolyMatrix<K> v0 = m1.u0 - m2.u0;
    PolyMatrix<K> v1 = m1.u1 - m2.u1;

    std::vector<std::pair<std::size_t, std::size_t>> shapes{{t.rank1(), s.rank0()},
                                                            {t.rank0(), s.rank1()}};
    PolyMatrix<K> id0 = PolyMatrix<K>::identity(ring, s.rank0());
    PolyMatrix<K> id1 = PolyMatrix<K>::identity(ring, s.rank1());
    std::vector<MatrixEquation<K>> eqs;
    eqs.push_back(MatrixEquation<K>{{MatrixEquationTerm<K>{0, t.a_bar, id0},
                                     MatrixEquationTerm<K>{1, PolyMatrix<K>::identity(ring, t.rank0()), s.b_bar}},
                                    v0});
    eqs.push_back(MatrixEquation<K>{{MatrixEquationTerm<K>{1, t.b_bar, id1},
                                     MatrixEquationTerm<K>{0, PolyMatrix<K>::identity(ring, t.rank1()), s.a_bar}},
                                    v1});
    auto sol = solve_matrix_equation(shapes, eqs, ring, std::optional<Polynomial<K>>(f));
    if (!sol)
        return std::nullopt;
    PeriodicHomotopy<K> h{reduce_mod((*sol)[0], f), reduce_mod((*sol)[1], f)};
    PeriodicChainMap<K> diff{m1.source, m1.target, v0, v1};
    if (!periodic_homotopy_witnesses(diff, h))
        fail(ErrorKind::VerificationFailed, "periodic homotopy witness substitution failed");
    return h;
}

template <class K>
std::optional<PeriodicHomotopy<K>> periodic_null_homotopic(const PeriodicChainMap<K>& u)
{
    return periodic_homotopic(u, zero_chain_map(u.source, u.target));
}

} // namespace mfact

#endif
