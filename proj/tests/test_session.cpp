#include <catch2/catch_amalgamated.hpp>

#include <mfact/mfact.hpp>

using namespace mfact;

namespace {

Session<Rat> parse_q(const std::string& text)
{
    TextCursor cur(text);
    SessionHeader h = parse_session_header(cur);
    REQUIRE(h.field == FieldKind::Rationals);
    auto ring = make_ring(h.variables, h.field, h.prime, h.weights);
    return parse_session_body<Rat>(cur, ring);
}

const char* kMinimal = R"(field Q
ring x
f: x^2
factorization P { d1: [[x]] d0: [[x]] }
)";

const char* kFull = R"(# library objects over f = x*y
field Q
ring x, y
f: x*y

factorization P {
  d1: [[x]]
  d0: [[y]]
}

factorization Q2 {
  d1: [[y]]
  d0: [[x]]
}

morphism zero : P -> Q2 {
  a0: [[0]]
  a1: [[0]]
}

module M over R {
  relations: [[x]]
}

module N over S {
  relations: []
}

chainmap c : T(P) -> T(P) {
  a2: [[1]]
  a1: [[1]]
  a0: [[1]]
}

homotopy s : P -> P {
  s0: [[0]]
  s1: [[0]]
}
)";

} // namespace

TEST_CASE("minimal session file parses")
{
    auto s = parse_q(kMinimal);
    CHECK(s.objects.size() == 1);
    CHECK(session_factorization(s, "P").rank() == 1);
}

TEST_CASE("session parse errors carry their kinds")
{
    SECTION("unknown variable in a matrix")
    {
        CHECK_THROWS_MATCHES(parse_q("field Q\nring x\nf: x^2\nfactorization P { d1: [[z]] d0: [[x]] }"),
                             Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.kind() == ErrorKind::ParseError;
                             }));
    }
    SECTION("morphism referencing an undefined factorization")
    {
        CHECK_THROWS_MATCHES(
            parse_q("field Q\nring x\nf: x^2\nmorphism a : P -> P { a0: [[1]] a1: [[1]] }"), Error,
            Catch::Matchers::Predicate<Error>(
                [](const Error& e) { return e.kind() == ErrorKind::UndefinedName; }));
    }
    SECTION("duplicate names are rejected")
    {
        std::string text = std::string(kMinimal) + "factorization P { d1: [[x]] d0: [[x]] }\n";
        CHECK_THROWS_MATCHES(parse_q(text), Error,
                             Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.kind() == ErrorKind::DuplicateName;
                             }));
    }
    SECTION("factorization axioms are deferred to validation, shapes are not")
    {
        auto s = parse_q("field Q\nring x\nf: x^3\nfactorization P { d1: [[x]] d0: [[x]] }");
        CHECK_THROWS_MATCHES(session_factorization(s, "P"), Error,
                             Catch::Matchers::Predicate<Error>([](const Error& e) {
                                 return e.kind() == ErrorKind::AxiomFailed;
                             }));
        CHECK_THROWS_MATCHES(
            parse_q("field Q\nring x\nf: x^2\nfactorization P { d1: [[x], [x]] d0: [[x]] }"), Error,
            Catch::Matchers::Predicate<Error>(
                [](const Error& e) { return e.kind() == ErrorKind::DimensionMismatch; }));
    }
}

TEST_CASE("print of a parsed session is a fixed point")
{
    for (const char* text : {kMinimal, kFull}) {
        auto s = parse_q(text);
        std::string once = print_session(s);
        auto s2 = parse_q(once);
        std::string twice = print_session(s2);
        CHECK(once == twice);
    }
}

TEST_CASE("prime-field sessions parse and reprint")
{
    const char* text = "field F_101\nring x, y\nf: x*y\nfactorization P { d1: [[100*x]] d0: [[100*y]] }\n";
    TextCursor cur(text);
    SessionHeader h = parse_session_header(cur);
    REQUIRE(h.field == FieldKind::PrimeField);
    REQUIRE(h.prime == 101);
    auto ring = make_ring(h.variables, h.field, h.prime, h.weights);
    auto s = parse_session_body<Fp>(cur, ring);
    std::string once = print_session(s);
    CHECK(once.find("field F_101") == 0);
    TextCursor cur2(once);
    auto h2 = parse_session_header(cur2);
    auto s2 = parse_session_body<Fp>(cur2, make_ring(h2.variables, h2.field, h2.prime, h2.weights));
    CHECK(print_session(s2) == once);
}

TEST_CASE("weighted gradings round-trip")
{
    const char* text = "field Q\nring x:2, y:3\nf: x^3 + y^2\nmodule M over R { relations: [[x]] }\n";
    TextCursor cur(text);
    SessionHeader h = parse_session_header(cur);
    CHECK(h.weights == std::vector<long>{2, 3});
    auto ring = make_ring(h.variables, h.field, h.prime, h.weights);
    auto s = parse_session_body<Rat>(cur, ring);
    CHECK(s.f.is_homogeneous());
    std::string once = print_session(s);
    CHECK(once.find("ring x:2, y:3") != std::string::npos);
}

TEST_CASE("rank-0 factorization blocks parse")
{
    auto s = parse_q("field Q\nring x\nf: x^2\nfactorization Z { d1: [] d0: [] }\n");
    auto z = session_factorization(s, "Z");
    CHECK(z.rank() == 0);
    std::string once = print_session(s);
    CHECK(once.find("d1: []") != std::string::npos);
    auto s2 = parse_q(once);
    CHECK(print_session(s2) == once);
}

TEST_CASE("chainmap blocks validate the mod-f squares")
{
    std::string bad = "field Q\nring x, y\nf: x*y\n"
                      "factorization P { d1: [[x]] d0: [[y]] }\n"
                      "chainmap c : T(P) -> T(P) { a2: [[1]] a1: [[x]] a0: [[1]] }\n";
    CHECK_THROWS_MATCHES(parse_q(bad), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::AxiomFailed;
                         }));
}
