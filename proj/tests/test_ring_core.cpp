#include <catch2/catch_amalgamated.hpp>

#include <mfact/mfact.hpp>

#include "support/gen.hpp"

using namespace mfact;

namespace {

RingPtr qxy() { return make_ring({"x", "y"}); }

template <class K>
Polynomial<K> parse(const std::string& text, const RingPtr& ring)
{
    return parse_polynomial<K>(text, ring);
}

} // namespace

TEST_CASE("rational scalars stay reduced with positive denominator")
{
    Rat a(2, 4);
    CHECK(a.str() == "1/2");
    Rat b(3, -6);
    CHECK(b.str() == "-1/2");
    CHECK((a + b).is_zero());
    CHECK((Rat(1, 3) * Rat(3, 1)).is_one());
    CHECK_THROWS_AS(Rat(1, 0), Error);
    CHECK_THROWS_AS(Rat(1).inverse() / Rat(0), Error);
}

TEST_CASE("prime field residues lie in [0, p)")
{
    Fp a = Fp::from_int(-1, 101);
    CHECK(a.value() == 100);
    CHECK((a + Fp::from_int(1, 101)).is_zero());
    CHECK((Fp::from_int(2, 101) * Fp::from_int(51, 101)).is_one());
    CHECK(Fp::from_int(7, 101).inverse().value() == 29);
    CHECK_THROWS_AS(make_ring({"x"}, FieldKind::PrimeField, 100), Error); // not prime
    auto r = make_ring({"x"}, FieldKind::PrimeField, 101);
    CHECK(r->prime == 101);
}

TEST_CASE("poly_arith matches the worked examples")
{
    auto ring = qxy();
    auto x = Polynomial<Rat>::variable(ring, 0);
    auto one = Polynomial<Rat>::one(ring);

    SECTION("(x+1)*(x-1) = x^2 - 1")
    {
        CHECK((x + one) * (x - one) == x * x - one);
    }
    SECTION("p + 0 = p")
    {
        auto p = parse<Rat>("x^2 + 3*x*y - 1/2*y^3", ring);
        CHECK(p + Polynomial<Rat>::zero(ring) == p);
    }
    SECTION("over F_2: (x+1)^2 = x^2 + 1")
    {
        auto r2 = make_ring({"x"}, FieldKind::PrimeField, 2);
        auto xb = Polynomial<Fp>::variable(r2, 0);
        auto ob = Polynomial<Fp>::one(r2);
        CHECK((xb + ob) * (xb + ob) == xb * xb + ob);
    }
    SECTION("context mismatch is rejected")
    {
        auto other = make_ring({"x", "z"});
        CHECK_THROWS_AS(x + Polynomial<Rat>::variable(other, 1), Error);
    }
}

TEST_CASE("ring axioms hold on random polynomials", "[property]")
{
    auto ring = make_ring({"x", "y", "z"}, FieldKind::PrimeField, 101);
    testgen::Rng rng(7);
    for (int t = 0; t < 40; ++t) {
        auto a = testgen::random_polynomial<Fp>(ring, rng, 3, 4);
        auto b = testgen::random_polynomial<Fp>(ring, rng, 3, 4);
        auto c = testgen::random_polynomial<Fp>(ring, rng, 3, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
    auto qring = make_ring({"x", "y"});
    for (int t = 0; t < 10; ++t) {
        auto a = testgen::random_polynomial<Rat>(qring, rng, 3, 3);
        auto b = testgen::random_polynomial<Rat>(qring, rng, 3, 3);
        auto c = testgen::random_polynomial<Rat>(qring, rng, 3, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b - c) == a * b - a * c);
    }
}

TEST_CASE("evaluate_at_origin returns the constant term")
{
    auto ring = qxy();
    CHECK(parse<Rat>("x^2 + 3", ring).constant_term() == Rat(3));
    CHECK(Polynomial<Rat>::zero(ring).constant_term().is_zero());
    CHECK(parse<Rat>("x*y", ring).constant_term().is_zero());
}

TEST_CASE("mat_arith matches the worked examples")
{
    auto ring = qxy();
    auto x = Polynomial<Rat>::variable(ring, 0);
    auto y = Polynomial<Rat>::variable(ring, 1);

    SECTION("[[x]] * [[y]] = [[x*y]]")
    {
        auto a = PolyMatrix<Rat>::scalar(ring, 1, x);
        auto b = PolyMatrix<Rat>::scalar(ring, 1, y);
        CHECK((a * b).at(0, 0) == x * y);
    }
    SECTION("A * I = A")
    {
        testgen::Rng rng(3);
        auto a = testgen::random_matrix<Rat>(ring, rng, 2, 2, 2, 3);
        CHECK(a * PolyMatrix<Rat>::identity(ring, 2) == a);
    }
    SECTION("rotation-style 2x2 product is (x^2+y^2)*I")
    {
        auto d1 = PolyMatrix<Rat>::from_rows(ring, {{x, y}, {-y, x}});
        auto d0 = PolyMatrix<Rat>::from_rows(ring, {{x, -y}, {y, x}});
        auto f = x * x + y * y;
        CHECK(d1 * d0 == PolyMatrix<Rat>::scalar(ring, 2, f));
        CHECK(d0 * d1 == PolyMatrix<Rat>::scalar(ring, 2, f));
    }
    SECTION("dimension mismatch is rejected")
    {
        PolyMatrix<Rat> a(ring, 2, 3), b(ring, 2, 3);
        CHECK_THROWS_AS(a * b, Error);
    }
}

TEST_CASE("matrix multiplication is associative with identity", "[property]")
{
    auto ring = make_ring({"x", "y"}, FieldKind::PrimeField, 101);
    testgen::Rng rng(11);
    for (int t = 0; t < 15; ++t) {
        auto a = testgen::random_matrix<Fp>(ring, rng, 2, 3, 2, 2);
        auto b = testgen::random_matrix<Fp>(ring, rng, 3, 2, 2, 2);
        auto c = testgen::random_matrix<Fp>(ring, rng, 2, 2, 2, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(PolyMatrix<Fp>::identity(ring, 2) * a == a);
    }
}

TEST_CASE("divide_exact_by_f matches the worked examples")
{
    auto ring = make_ring({"x"});
    auto x = Polynomial<Rat>::variable(ring, 0);

    SECTION("[[x^2]] / x = [[x]]")
    {
        auto m = PolyMatrix<Rat>::scalar(ring, 1, x * x);
        CHECK(divide_exact_by_f(m, x).at(0, 0) == x);
    }
    SECTION("zero matrix divides by anything")
    {
        PolyMatrix<Rat> z(ring, 1, 1);
        CHECK(divide_exact_by_f(z, x).is_zero());
    }
    SECTION("[[x^2+x]] / x^2 leaves remainder x")
    {
        auto m = PolyMatrix<Rat>::scalar(ring, 1, x * x + x);
        CHECK_THROWS_MATCHES(divide_exact_by_f(m, x * x), Error,
                             Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.kind() == ErrorKind::NotDivisible;
                             }));
    }
    SECTION("f = 0 is rejected")
    {
        PolyMatrix<Rat> z(ring, 1, 1);
        CHECK_THROWS_AS(divide_exact_by_f(z, Polynomial<Rat>::zero(ring)), Error);
    }
}

TEST_CASE("divide_exact_by_f inverts multiplication by f", "[property]")
{
    auto ring = make_ring({"x", "y"}, FieldKind::PrimeField, 101);
    testgen::Rng rng(23);
    for (int t = 0; t < 20; ++t) {
        auto q = testgen::random_matrix<Fp>(ring, rng, 2, 2, 3, 3);
        auto f = testgen::random_polynomial<Fp>(ring, rng, 2, 2);
        if (f.is_zero())
            continue;
        CHECK(divide_exact_by_f(q.scaled(f), f) == q);
    }
}

TEST_CASE("canonical printing round-trips through the parser")
{
    auto ring = qxy();
    SECTION("descending grevlex with folded signs")
    {
        auto p = parse<Rat>("3*x*y - 1/2*y^3 + x^2", ring);
        CHECK(p.str() == "-1/2*y^3 + x^2 + 3*x*y");
        CHECK(parse<Rat>(p.str(), ring) == p);
    }
    SECTION("zero, units, leading minus")
    {
        CHECK(Polynomial<Rat>::zero(ring).str() == "0");
        CHECK(parse<Rat>("-x", ring).str() == "-x");
        CHECK(parse<Rat>("x - x", ring).str() == "0");
        CHECK(parse<Rat>("2/4*x", ring).str() == "1/2*x");
    }
    SECTION("residue coefficients print canonically")
    {
        auto rp = make_ring({"x"}, FieldKind::PrimeField, 101);
        auto p = parse<Fp>("-x + 1/2", rp);
        CHECK(p.str() == "100*x + 51");
        CHECK(parse<Fp>(p.str(), rp) == p);
    }
    SECTION("random print/parse fixed point", "[property]")
    {
        testgen::Rng rng(31);
        for (int t = 0; t < 25; ++t) {
            auto p = testgen::random_polynomial<Rat>(ring, rng, 4, 5);
            CHECK(parse<Rat>(p.str(), ring) == p);
        }
    }
    SECTION("unknown variable is a parse error")
    {
        CHECK_THROWS_MATCHES(parse<Rat>("x + z", ring), Error,
                             Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.kind() == ErrorKind::ParseError;
                             }));
    }
}
