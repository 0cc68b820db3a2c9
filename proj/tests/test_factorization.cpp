#include <catch2/catch_amalgamated.hpp>

#include <mfact/mfact.hpp>

#include "support/gen.hpp"

using namespace mfact;

namespace {

struct Library {
    RingPtr ring = make_ring({"x", "y"});
    Polynomial<Rat> x = Polynomial<Rat>::variable(ring, 0);
    Polynomial<Rat> y = Polynomial<Rat>::variable(ring, 1);

    LinearFactorization<Rat> xx_over_x2()
    {
        auto r = make_ring({"x"});
        auto t = Polynomial<Rat>::variable(r, 0);
        return validate_factorization(t * t, PolyMatrix<Rat>::scalar(r, 1, t),
                                      PolyMatrix<Rat>::scalar(r, 1, t));
    }
    LinearFactorization<Rat> xy()
    {
        return validate_factorization(x * y, PolyMatrix<Rat>::scalar(ring, 1, x),
                                      PolyMatrix<Rat>::scalar(ring, 1, y));
    }
    LinearFactorization<Rat> rotation()
    {
        auto d1 = PolyMatrix<Rat>::from_rows(ring, {{x, y}, {-y, x}});
        auto d0 = PolyMatrix<Rat>::from_rows(ring, {{x, -y}, {y, x}});
        return validate_factorization(x * x + y * y, d1, d0);
    }
};

bool kind_is(const Error& e, ErrorKind k) { return e.kind() == k; }

} // namespace

TEST_CASE("validate_factorization accepts the library and rejects broken axioms")
{
    Library lib;
    SECTION("(x, x) over Q[x] with f = x^2")
    {
        auto p = lib.xx_over_x2();
        CHECK(p.rank() == 1);
    }
    SECTION("(x, y) with f = xy")
    {
        CHECK(lib.xy().rank() == 1);
    }
    SECTION("2x2 rotation pair with f = x^2 + y^2")
    {
        CHECK(lib.rotation().rank() == 2);
    }
    SECTION("f = x^3 with d1 = d0 = x fails the axiom")
    {
        auto r = make_ring({"x"});
        auto t = Polynomial<Rat>::variable(r, 0);
        CHECK_THROWS_MATCHES(validate_factorization(t * t * t, PolyMatrix<Rat>::scalar(r, 1, t),
                                                    PolyMatrix<Rat>::scalar(r, 1, t)),
                             Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return kind_is(e, ErrorKind::AxiomFailed);
                             }));
    }
    SECTION("f with nonzero constant term is rejected")
    {
        auto r = make_ring({"x"});
        auto t = Polynomial<Rat>::variable(r, 0);
        auto one = Polynomial<Rat>::one(r);
        CHECK_THROWS_MATCHES(validate_factorization(t + one, PolyMatrix<Rat>::scalar(r, 1, t + one),
                                                    PolyMatrix<Rat>::identity(r, 1)),
                             Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return kind_is(e, ErrorKind::NotLocal);
                             }));
    }
    SECTION("f = 0 is rejected")
    {
        auto r = make_ring({"x"});
        PolyMatrix<Rat> z(r, 1, 1);
        CHECK_THROWS_MATCHES(validate_factorization(Polynomial<Rat>::zero(r), z, z), Error,
                             Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return kind_is(e, ErrorKind::ZeroF);
                             }));
    }
    SECTION("rank-0 object validates")
    {
        auto f = lib.x * lib.y;
        PolyMatrix<Rat> empty(lib.ring, 0, 0);
        auto z = validate_factorization(f, empty, empty);
        CHECK(z.rank() == 0);
    }
}

TEST_CASE("random single-entry perturbations are rejected", "[property]")
{
    Library lib;
    auto p = lib.rotation();
    testgen::Rng rng(41);
    std::uniform_int_distribution<std::size_t> pick(0, 1);
    int rejected = 0;
    for (int t = 0; t < 30; ++t) {
        auto d1 = p.d1;
        auto d0 = p.d0;
        auto bump = testgen::random_polynomial<Rat>(lib.ring, rng, 2, 1);
        if (bump.is_zero())
            bump = Polynomial<Rat>::one(lib.ring);
        if (pick(rng))
            d1.at(pick(rng), pick(rng)) = d1.at(pick(rng), pick(rng)) + bump;
        else
            d0.at(pick(rng), pick(rng)) = d0.at(pick(rng), pick(rng)) + bump;
        try {
            validate_factorization(p.f, d1, d0);
        } catch (const Error&) {
            ++rejected;
        }
    }
    CHECK(rejected == 30);
}

TEST_CASE("trivial factorizations and their contractibility")
{
    auto ring = make_ring({"x"});
    auto x = Polynomial<Rat>::variable(ring, 0);
    auto [one_f, f_one] = trivial_factorizations(x * x);
    CHECK(one_f.d1.at(0, 0).is_one());
    CHECK(one_f.d0.at(0, 0) == x * x);
    CHECK(f_one.d1.at(0, 0) == x * x);

    // identity on (1, f) is null-homotopic via h0 = 1, h1 = 0
    auto h = is_null_homotopic(identity_morphism(one_f));
    REQUIRE(h.has_value());
    CHECK(homotopy_witnesses(identity_morphism(one_f), *h));

    auto ring2 = make_ring({"x", "y"});
    auto xy = Polynomial<Rat>::variable(ring2, 0) * Polynomial<Rat>::variable(ring2, 1);
    auto [a, b] = trivial_factorizations(xy);
    CHECK(a.d0.at(0, 0) == xy);
}

TEST_CASE("shift is the swap-and-negate involution")
{
    Library lib;
    auto p = lib.xy();
    auto sp = shift(p);
    CHECK(sp.d1 == -p.d0);
    CHECK(sp.d0 == -p.d1);
    CHECK(same_object(shift(sp), p));

    auto q = lib.xx_over_x2();
    auto sq = shift(q);
    // (-x)(-x) = x^2 still validates
    CHECK_NOTHROW(validate_factorization(sq.f, sq.d1, sq.d0));
}

TEST_CASE("direct_sum builds block diagonals with the zero object as identity")
{
    auto ring = make_ring({"x"});
    auto x = Polynomial<Rat>::variable(ring, 0);
    auto f = x * x;
    auto p = validate_factorization(f, PolyMatrix<Rat>::scalar(ring, 1, x),
                                    PolyMatrix<Rat>::scalar(ring, 1, x));
    auto [one_f, f_one] = trivial_factorizations(f);

    auto s = direct_sum(p, one_f);
    CHECK(s.rank() == 2);
    CHECK(s.d1.at(0, 0) == x);
    CHECK(s.d1.at(1, 1).is_one());
    CHECK_NOTHROW(validate_factorization(s.f, s.d1, s.d0));

    PolyMatrix<Rat> empty(ring, 0, 0);
    auto zero_obj = validate_factorization(f, empty, empty);
    CHECK(same_object(direct_sum(p, zero_obj), p));

    auto other = make_ring({"x"});
    auto g = Polynomial<Rat>::variable(other, 0);
    auto q = validate_factorization(g * g * g, PolyMatrix<Rat>::scalar(other, 1, g),
                                    PolyMatrix<Rat>::scalar(other, 1, g * g));
    CHECK_THROWS_MATCHES(direct_sum(p, q), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return kind_is(e, ErrorKind::FMismatch); }));
}

TEST_CASE("cone constructions")
{
    Library lib;
    auto p = lib.xy();
    SECTION("cone of the zero morphism is shift(source) + target")
    {
        auto z = zero_morphism(p, p);
        auto c = cone(z);
        auto expected = direct_sum(shift(p), p);
        CHECK(same_object(c, expected));
    }
    SECTION("cone of the identity validates and is contractible")
    {
        auto q = lib.xx_over_x2();
        auto c = cone(identity_morphism(q));
        auto h = is_null_homotopic(identity_morphism(c));
        REQUIRE(h.has_value());
        CHECK(homotopy_witnesses(identity_morphism(c), *h));
    }
    SECTION("cone validates for random valid morphisms", "[property]")
    {
        auto ring = make_ring({"x", "y"}, FieldKind::PrimeField, 101);
        testgen::Rng rng(59);
        for (int t = 0; t < 8; ++t) {
            auto a = testgen::random_determinant_factorization<Fp>(ring, rng, 2);
            auto [pm, pm_inv] = testgen::random_invertible_constant<Fp>(ring, rng, 2);
            auto [qm, qm_inv] = testgen::random_invertible_constant<Fp>(ring, rng, 2);
            auto b = validate_factorization(a.f, pm * a.d1 * qm, qm_inv * a.d0 * pm_inv);
            auto m = testgen::random_boundary_morphism(a, b, rng, 1, 2);
            CHECK_NOTHROW(cone(m));
        }
    }
}

TEST_CASE("composition and identities")
{
    Library lib;
    auto p = lib.xy();
    testgen::Rng rng(61);
    auto m = testgen::random_boundary_morphism(p, p, rng);
    SECTION("id o m = m")
    {
        auto c = compose(identity_morphism(p), m);
        CHECK(c.alpha0 == m.alpha0);
        CHECK(c.alpha1 == m.alpha1);
    }
    SECTION("composite of valid morphisms satisfies the squares")
    {
        auto n = testgen::random_boundary_morphism(p, p, rng);
        auto c = compose(n, m);
        CHECK_NOTHROW(make_morphism(c.source, c.target, c.alpha0, c.alpha1));
        CHECK(c.alpha0 == n.alpha0 * m.alpha0);
    }
    SECTION("composability mismatch is rejected")
    {
        auto q = lib.rotation();
        auto idq = identity_morphism(q);
        CHECK_THROWS_MATCHES(compose(idq, m), Error,
                             Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return kind_is(e, ErrorKind::ComposabilityMismatch);
                             }));
    }
}

TEST_CASE("is_null_homotopic decides the worked examples")
{
    auto ring = make_ring({"x"});
    auto x = Polynomial<Rat>::variable(ring, 0);
    auto f = x * x;
    auto p = validate_factorization(f, PolyMatrix<Rat>::scalar(ring, 1, x),
                                    PolyMatrix<Rat>::scalar(ring, 1, x));

    SECTION("zero morphism has the zero witness")
    {
        auto h = is_null_homotopic(zero_morphism(p, p));
        REQUIRE(h.has_value());
        CHECK(h->h0.is_zero());
        CHECK(h->h1.is_zero());
    }
    SECTION("identity on (1, f) is null-homotopic")
    {
        auto [one_f, f_one] = trivial_factorizations(f);
        CHECK(is_null_homotopic(identity_morphism(one_f)).has_value());
        CHECK(is_null_homotopic(identity_morphism(f_one)).has_value());
    }
    SECTION("identity on (x, x) is not null-homotopic")
    {
        CHECK(!is_null_homotopic(identity_morphism(p)).has_value());
    }
    SECTION("x * id on (x, x) is null-homotopic by direct substitution")
    {
        auto xm = PolyMatrix<Rat>::scalar(ring, 1, x);
        auto m = make_morphism(p, p, xm, xm);
        auto h = is_null_homotopic(m);
        REQUIRE(h.has_value());
        CHECK(homotopy_witnesses(m, *h));
    }
}

TEST_CASE("homotopic is reflexive and transported by composition", "[property]")
{
    auto ring = make_ring({"x", "y"}, FieldKind::PrimeField, 101);
    testgen::Rng rng(67);
    auto p = testgen::random_determinant_factorization<Fp>(ring, rng, 2);

    auto id = identity_morphism(p);
    auto self = homotopic(id, id);
    REQUIRE(self.has_value());
    CHECK(self->h0.is_zero());

    for (int t = 0; t < 5; ++t) {
        auto boundary = testgen::random_boundary_morphism(p, p, rng, 1, 2);
        // alpha = id + boundary ~ id
        auto alpha = make_morphism(p, p, id.alpha0 + boundary.alpha0, id.alpha1 + boundary.alpha1);
        auto w = homotopic(alpha, id);
        REQUIRE(w.has_value());

        // gamma o alpha ~ gamma o id with the transported witness
        // (gamma1 h0, gamma0 h1), built rather than solved for
        auto gamma = testgen::random_boundary_morphism(p, p, rng, 1, 2);
        auto left = compose(gamma, alpha);
        auto right = compose(gamma, id);
        Homotopy<Fp> transported{gamma.alpha1 * w->h0, gamma.alpha0 * w->h1};
        CHECK(homotopy_witnesses(morphism_difference(left, right), transported));
        CHECK(homotopic(left, right).has_value());
        // and on the other side with (h0 gamma0, h1 gamma1)
        Homotopy<Fp> pre{w->h0 * gamma.alpha0, w->h1 * gamma.alpha1};
        CHECK(homotopy_witnesses(
            morphism_difference(compose(alpha, gamma), compose(id, gamma)), pre));
    }
}

TEST_CASE("signature mismatch is reported for homotopic")
{
    Library lib;
    auto p = lib.xy();
    auto q = lib.rotation();
    CHECK_THROWS_MATCHES(homotopic(identity_morphism(p), identity_morphism(q)), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return kind_is(e, ErrorKind::SignatureMismatch);
                         }));
}
