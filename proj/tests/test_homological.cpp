#include <catch2/catch_amalgamated.hpp>

#include <mfact/mfact.hpp>

#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace mfact;

namespace {

struct QXFixture {
    RingPtr ring = make_ring({"x"});
    Polynomial<Rat> x = Polynomial<Rat>::variable(ring, 0);
    Polynomial<Rat> f = x * x;
    ModulePresentation<Rat> k_over_S = make_s_module(PolyMatrix<Rat>::scalar(ring, 1, x));
    ModulePresentation<Rat> k_over_R = make_r_module(PolyMatrix<Rat>::scalar(ring, 1, x), f);
    ModulePresentation<Rat> S_free = free_module<Rat>(ring, 1);
};

} // namespace

TEST_CASE("free_resolution matches the worked examples")
{
    SECTION("S/(x) over Q[x]: 0 -> S -> S")
    {
        QXFixture q;
        auto res = free_resolution(q.k_over_S);
        REQUIRE(res.diffs.size() >= 1);
        CHECK(res.diffs[0].cols() == 1);
        CHECK(res.diffs[0].at(0, 0) == q.x);
        CHECK(res.complete);
        CHECK(res.rank_at(2) == 0);
    }
    SECTION("Koszul resolution of k over Q[x,y] has ranks 1, 2, 1")
    {
        auto ring = make_ring({"x", "y"});
        auto x = Polynomial<Rat>::variable(ring, 0);
        auto y = Polynomial<Rat>::variable(ring, 1);
        PolyMatrix<Rat> rel(ring, 1, 2);
        rel.at(0, 0) = x;
        rel.at(0, 1) = y;
        auto res = free_resolution(make_s_module(rel));
        CHECK(res.complete);
        CHECK(res.rank_at(0) == 1);
        CHECK(res.rank_at(1) == 2);
        CHECK(res.rank_at(2) == 1);
        CHECK(res.rank_at(3) == 0);
        // exactness certificate: step-2 column is a syzygy of step-1 columns
        CHECK((res.diffs[0] * res.diffs[1]).is_zero());
    }
    SECTION("k over R = Q[x]/(x^2) is 2-periodic with differentials (x)")
    {
        QXFixture q;
        auto res = free_resolution(q.k_over_R, 4);
        CHECK(!res.complete);
        REQUIRE(res.diffs.size() == 4);
        for (const auto& d : res.diffs) {
            REQUIRE(d.cols() == 1);
            CHECK(d.at(0, 0) == q.x);
        }
    }
    SECTION("minimalization on inhomogeneous input is NotGraded")
    {
        QXFixture q;
        auto m = make_s_module(PolyMatrix<Rat>::scalar(q.ring, 1, q.x + q.x * q.x));
        CHECK_THROWS_MATCHES(free_resolution(m, 3, Minimalize::On), Error,
                             Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.kind() == ErrorKind::NotGraded;
                             }));
        CHECK_NOTHROW(free_resolution(m, 3)); // Auto falls back to plain syzygies
    }
}

TEST_CASE("resolutions are exact at interior steps", "[property]")
{
    auto ring = make_ring({"x", "y"}, FieldKind::PrimeField, 101);
    testgen::Rng rng(103);
    for (int t = 0; t < 4; ++t) {
        auto rel = testgen::random_linear_matrix<Fp>(ring, rng, 2);
        auto res = free_resolution(make_s_module(rel));
        for (std::size_t i = 0; i + 1 < res.diffs.size(); ++i) {
            if (res.diffs[i + 1].cols() == 0)
                continue;
            CHECK((res.diffs[i] * res.diffs[i + 1]).is_zero());
            // every syzygy of step-i columns lifts through step-(i+1) columns
            auto syz = syzygy_module(matrix_columns(res.diffs[i]), res.diffs[i].rows(), ring);
            auto gb = groebner_basis(matrix_columns(res.diffs[i + 1]), res.diffs[i].cols(), ring);
            for (const auto& s : syz)
                CHECK(is_member(s, gb));
        }
    }
}

TEST_CASE("ext_dimension matches the worked examples")
{
    QXFixture q;
    SECTION("Ext^0(S, S) is S itself: not finite length, no relations")
    {
        auto e = ext_dimension(0, q.S_free, q.S_free);
        CHECK(!e.finite);
        REQUIRE(e.presentation.has_value());
        CHECK(e.presentation->cols() == 0);
    }
    SECTION("Ext^1(k, S) over Q[x] has dimension 1")
    {
        auto e = ext_dimension(1, q.k_over_S, q.S_free);
        CHECK(e.finite);
        CHECK(e.dimension == 1);
    }
    SECTION("Ext^2(k, S) over Q[x] vanishes")
    {
        auto e = ext_dimension(2, q.k_over_S, q.S_free);
        CHECK(e.finite);
        CHECK(e.dimension == 0);
    }
    SECTION("Ext^0(k, k) = k in both modes")
    {
        auto e = ext_dimension(0, q.k_over_S, q.k_over_S);
        CHECK((e.finite && e.dimension == 1));
        auto er = ext_dimension(0, q.k_over_R, q.k_over_R);
        CHECK((er.finite && er.dimension == 1));
    }
    SECTION("free modules are self-orthogonal: Ext^i(S^2, M) = 0 for i >= 1")
    {
        auto free2 = free_module<Rat>(q.ring, 2);
        for (long i : {1L, 2L}) {
            auto e = ext_dimension(i, free2, q.k_over_S);
            CHECK((e.finite && e.dimension == 0));
        }
    }
}

TEST_CASE("rees checks agree with hand-built resolutions on fixture 1 (Q[x], f = x^2)")
{
    QXFixture q;

    // Independent oracle data: k over S resolves by [x]; k over R is
    // 2-periodic with differential [x]. Verify the resolutions, then take
    // Ext dimensions against the free rank-1 target by degreewise ranks.
    auto xm = PolyMatrix<Rat>::scalar(q.ring, 1, q.x);
    oracle::HandComplex<Rat> res_S{q.ring, std::nullopt, {xm}, {1, 1}};
    CHECK(oracle::verify_hand_complex(res_S, 6, /*left_exact=*/true));

    Monomial x2(1);
    x2.e[0] = 2;
    oracle::HandComplex<Rat> res_R{q.ring, x2, {xm, xm, xm}, {1, 1, 1, 1}};
    CHECK(oracle::verify_hand_complex(res_R, 6));

    // Dual (Hom(-, ring)) complexes with a rank-0 dummy in position 0, so
    // Ext^j is the homology at position j + 1.
    PolyMatrix<Rat> zero_in(q.ring, 1, 0);
    PolyMatrix<Rat> to_zero(q.ring, 0, 1);
    PolyMatrix<Rat> zz(q.ring, 0, 0);
    oracle::HandComplex<Rat> dual_S{q.ring, std::nullopt, {zero_in, xm, to_zero, zz, zz},
                                    {0, 1, 1, 0, 0, 0}};
    oracle::HandComplex<Rat> dual_R{q.ring, x2, {zero_in, xm, xm, xm, xm}, {0, 1, 1, 1, 1, 1}};

    // Expected: Ext_S^{i+1}(k, S) and Ext_R^i(k, R) for i = 0, 1, 2, from
    // the dual complexes (position j + 1 carries Ext^j).
    std::vector<long> expect_S, expect_R;
    for (long i = 0; i <= 2; ++i) {
        expect_S.push_back(oracle::homology_dimension(dual_S, static_cast<std::size_t>(i + 1) + 1, 8));
        expect_R.push_back(oracle::homology_dimension(dual_R, static_cast<std::size_t>(i) + 1, 8));
    }
    CHECK(expect_S == std::vector<long>{1, 0, 0});
    CHECK(expect_R == std::vector<long>{1, 0, 0});

    for (long i = 0; i <= 2; ++i) {
        auto v = rees_check_i(i, q.k_over_R, q.S_free, q.f);
        CHECK(v.comparable);
        CHECK(v.equal);
        CHECK(v.dim_S == expect_S[static_cast<std::size_t>(i)]);
        CHECK(v.dim_R == expect_R[static_cast<std::size_t>(i)]);

        auto w = rees_check_ii(i, q.S_free, q.k_over_R, q.f);
        CHECK(w.comparable);
        CHECK(w.equal);
        // Ext_S^i(S, k) = Ext_R^i(R, k) = k for i = 0, zero above.
        CHECK(w.dim_S == (i == 0 ? 1 : 0));
    }
}

TEST_CASE("rees on the zero module compares 0 = 0")
{
    QXFixture q;
    auto zero = make_r_module(PolyMatrix<Rat>::identity(q.ring, 1), q.f);
    REQUIRE(presents_zero_module(zero));
    for (long i : {0L, 1L, 3L}) {
        auto v = rees_check_i(i, zero, q.S_free, q.f);
        CHECK((v.comparable && v.equal && v.dim_S == 0 && v.dim_R == 0));
    }
}

TEST_CASE("rees over one variable compares R against itself")
{
    QXFixture q;
    // N = R: Ext_S^1(R, S) = S/(x^2) has k-dimension 2 over Q[x], and
    // Hom_R(R, R) = R matches it.
    auto n = free_module<Rat>(q.ring, 1, q.f);
    auto v = rees_check_i(0, n, q.S_free, q.f);
    CHECK(v.comparable);
    CHECK(v.equal);
    CHECK(v.dim_S == 2);
}

TEST_CASE("rees reports incomparable verdicts when a side has infinite length")
{
    // With a second variable, Ext_S^1(R, S) = S/(x^2) is infinite over k.
    auto ring = make_ring({"x", "y"});
    auto x = Polynomial<Rat>::variable(ring, 0);
    auto f = x * x;
    auto n = free_module<Rat>(ring, 1, f);
    auto v = rees_check_i(0, n, free_module<Rat>(ring, 1), f);
    CHECK(!v.comparable);
    CHECK(!v.finite_S);
    CHECK(!v.equal);
}

TEST_CASE("rees regularity precondition rejects torsion modules")
{
    QXFixture q;
    // M = S/(x) with f = x^2: multiplication by f kills the generator.
    CHECK(!f_regular_on(q.k_over_S, q.f));
    CHECK_THROWS_MATCHES(rees_check_ii(1, q.k_over_S, q.k_over_R, q.f), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::RegularityFailed;
                         }));
    CHECK(f_regular_on(q.S_free, q.f));
}

TEST_CASE("coker ext vanishing on the worked examples")
{
    SECTION("(x, x) over Q[x]/(x^2), L = 2")
    {
        QXFixture q;
        auto p = validate_factorization(q.f, PolyMatrix<Rat>::scalar(q.ring, 1, q.x),
                                        PolyMatrix<Rat>::scalar(q.ring, 1, q.x));
        auto report = coker_ext_vanishing(p, 2);
        CHECK(report.ok);
        CHECK(report.checked == std::vector<long>{1, 2});
    }
    SECTION("trivial (f, 1): coker is free, all Ext vanish")
    {
        QXFixture q;
        auto [one_f, f_one] = trivial_factorizations(q.f);
        CHECK(coker_ext_vanishing(f_one, 2).ok);
        CHECK(coker_ext_vanishing(one_f, 2).ok);
    }
    SECTION("(x, y) over Q[x,y]/(xy), L = 2")
    {
        auto ring = make_ring({"x", "y"});
        auto x = Polynomial<Rat>::variable(ring, 0);
        auto y = Polynomial<Rat>::variable(ring, 1);
        auto p = validate_factorization(x * y, PolyMatrix<Rat>::scalar(ring, 1, x),
                                        PolyMatrix<Rat>::scalar(ring, 1, y));
        CHECK(coker_ext_vanishing(p, 2).ok);
    }
}

TEST_CASE("ext dimensions for k over F_101[x,y]/(xy) via quotient machinery")
{
    // This is the second Rees fixture; the acceptance suite carries the
    // oracle comparison, here we pin the directly computed values.
    auto ring = make_ring({"x", "y"}, FieldKind::PrimeField, 101);
    auto x = Polynomial<Fp>::variable(ring, 0);
    auto y = Polynomial<Fp>::variable(ring, 1);
    auto f = x * y;
    PolyMatrix<Fp> rel(ring, 1, 2);
    rel.at(0, 0) = x;
    rel.at(0, 1) = y;
    auto k_R = make_r_module(rel, f);
    auto R_free = free_module<Fp>(ring, 1, f);

    auto e0 = ext_dimension(0, k_R, R_free);
    CHECK((e0.finite && e0.dimension == 0)); // Hom_R(k, R) = 0: socle of R is trivial
    auto e1 = ext_dimension(1, k_R, R_free);
    CHECK((e1.finite && e1.dimension == 1));
    auto e2 = ext_dimension(2, k_R, R_free);
    CHECK((e2.finite && e2.dimension == 0));

    // Ext_R^i(k, k) picks up the minimal resolution ranks 1, 2, 2, ...
    auto kk0 = ext_dimension(0, k_R, k_R);
    CHECK((kk0.finite && kk0.dimension == 1));
    auto kk1 = ext_dimension(1, k_R, k_R);
    CHECK((kk1.finite && kk1.dimension == 2));
    auto kk2 = ext_dimension(2, k_R, k_R);
    CHECK((kk2.finite && kk2.dimension == 2));
}

TEST_CASE("self-ext of the residue field over Q[x]/(x^2) is one-dimensional everywhere")
{
    QXFixture q;
    for (long i : {0L, 1L, 2L, 3L}) {
        auto e = ext_dimension(i, q.k_over_R, q.k_over_R);
        CHECK((e.finite && e.dimension == 1));
    }
}
