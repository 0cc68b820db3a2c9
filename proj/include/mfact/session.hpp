#ifndef MFACT_SESSION_HPP
#define MFACT_SESSION_HPP

#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "correspondence.hpp"
#include "parse.hpp"

namespace mfact {

// Session file object kinds. Factorization blocks hold raw matrices; the
// axioms are checked by the validate operation, not the parser, which only
// enforces shapes and ring membership. A chainmap block stores the three
// consecutive lifts (a2, a1, a0) of a degree-0 chain map between T(P) and
// T(Q); a homotopy block stores the diagonals (s0, s1, s2) used by the
// faithfulness algorithm.
template <class K>
struct NamedFactorization {
    Polynomial<K> f;
    PolyMatrix<K> d1;
    PolyMatrix<K> d0;

    std::size_t rank() const { return d1.rows(); }
};

template <class K>
struct NamedMorphism {
    std::string source, target;
    PolyMatrix<K> a0, a1;
};

template <class K>
struct NamedModule {
    ModulePresentation<K> value;
};

template <class K>
struct NamedChainMap {
    std::string source, target;
    PolyMatrix<K> a2, a1, a0;
};

template <class K>
struct NamedHomotopy {
    std::string source, target;
    SigmaWitness<K> value;
    bool s2_given = false;
};

template <class K>
struct SessionObject {
    std::string name;
    std::variant<NamedFactorization<K>, NamedMorphism<K>, NamedModule<K>, NamedChainMap<K>,
                 NamedHomotopy<K>>
        value;
};

template <class K>
struct Session {
    RingPtr ring;
    Polynomial<K> f;
    std::vector<SessionObject<K>> objects;

    const SessionObject<K>* find(const std::string& name) const
    {
        for (const auto& obj : objects)
            if (obj.name == name)
                return &obj;
        return nullptr;
    }

    const SessionObject<K>& require(const std::string& name) const
    {
        const SessionObject<K>* obj = find(name);
        if (!obj)
            fail(ErrorKind::UndefinedName, "no object named '" + name + "'");
        return *obj;
    }

    template <class T>
    const T& require_as(const std::string& name, const char* kind) const
    {
        const SessionObject<K>& obj = require(name);
        const T* v = std::get_if<T>(&obj.value);
        if (!v)
            fail(ErrorKind::InvalidArgument, "object '" + name + "' is not a " + kind);
        return *v;
    }

    Session(RingPtr r, Polynomial<K> ff) : ring(std::move(r)), f(std::move(ff)) {}
};

// Header of a session file: the field and ring declarations, needed before
// the field-specific parse can start.
struct SessionHeader {
    FieldKind field = FieldKind::Rationals;
    std::uint64_t prime = 0;
    std::vector<std::string> variables;
    std::vector<long> weights;
};

inline SessionHeader parse_session_header(TextCursor& cur)
{
    SessionHeader h;
    cur.skip_space();
    if (cur.identifier() != "field")
        cur.error("'field' declaration");
    cur.skip_space();
    std::string name = cur.identifier();
    if (name == "Q") {
        h.field = FieldKind::Rationals;
    } else if (name == "F" || (name.size() > 1 && name[0] == 'F')) {
        h.field = FieldKind::PrimeField;
        std::string digits = name.substr(1);
        if (!digits.empty() && digits[0] == '_')
            digits = digits.substr(1);
        if (digits.empty()) {
            cur.skip_space();
            cur.expect('_');
            h.prime = static_cast<std::uint64_t>(cur.natural());
        } else {
            for (char c : digits)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    cur.error("prime field such as F_101");
            h.prime = std::stoull(digits);
        }
    } else {
        cur.error("field Q or F_<prime>");
    }

    cur.skip_space();
    if (cur.identifier() != "ring")
        cur.error("'ring' declaration");
    while (true) {
        std::string var = cur.identifier();
        long weight = 1;
        cur.skip_space();
        if (cur.try_consume(':')) {
            weight = cur.natural();
            cur.skip_space();
        }
        h.variables.push_back(var);
        h.weights.push_back(weight);
        if (!cur.try_consume(','))
            break;
    }
    return h;
}

template <class K>
class SessionParser {
public:
    SessionParser(TextCursor& cur, RingPtr ring) : cur_(cur), ring_(std::move(ring)) {}

    Session<K> parse()
    {
        cur_.skip_space();
        std::string kw = cur_.identifier();
        if (kw != "f")
            cur_.error("'f' declaration");
        cur_.skip_space();
        cur_.expect(':');
        Session<K> session(ring_, parse_poly_until_newline());

        while (true) {
            cur_.skip_space();
            if (cur_.eof())
                break;
            parse_block(session);
        }
        return session;
    }

private:
    Polynomial<K> parse_poly_until_newline()
    {
        PolynomialParser<K> parser(cur_, ring_);
        return parser.parse();
    }

    PolyMatrix<K> parse_matrix()
    {
        cur_.skip_space();
        cur_.expect('[');
        std::vector<std::vector<Polynomial<K>>> rows;
        cur_.skip_space();
        if (cur_.try_consume(']'))
            return PolyMatrix<K>::from_rows(ring_, rows); // 0 x 0
        while (true) {
            cur_.skip_space();
            cur_.expect('[');
            std::vector<Polynomial<K>> row;
            cur_.skip_space();
            if (!cur_.try_consume(']')) {
                while (true) {
                    PolynomialParser<K> parser(cur_, ring_);
                    row.push_back(parser.parse());
                    cur_.skip_space();
                    if (cur_.try_consume(','))
                        continue;
                    cur_.expect(']');
                    break;
                }
            }
            rows.push_back(std::move(row));
            cur_.skip_space();
            if (cur_.try_consume(','))
                continue;
            cur_.expect(']');
            break;
        }
        return PolyMatrix<K>::from_rows(ring_, std::move(rows));
    }

    void check_fresh(const Session<K>& session, const std::string& name)
    {
        if (session.find(name))
            fail(ErrorKind::DuplicateName, "object '" + name + "' defined twice");
    }

    std::map<std::string, PolyMatrix<K>> parse_body(const std::vector<std::string>& required,
                                                    const std::vector<std::string>& optional = {})
    {
        cur_.skip_space();
        cur_.expect('{');
        std::map<std::string, PolyMatrix<K>> entries;
        while (true) {
            cur_.skip_space();
            if (cur_.try_consume('}'))
                break;
            std::string key = cur_.identifier();
            cur_.skip_space();
            cur_.expect(':');
            bool known = false;
            for (const auto& k : required)
                known = known || k == key;
            for (const auto& k : optional)
                known = known || k == key;
            if (!known)
                cur_.error("one of the block keys");
            if (entries.count(key))
                fail(ErrorKind::DuplicateName, "block key '" + key + "' repeated");
            entries.emplace(key, parse_matrix());
        }
        for (const auto& k : required)
            if (!entries.count(k))
                fail(ErrorKind::ParseError, "block is missing key '" + k + "'");
        return entries;
    }

    void parse_block(Session<K>& session)
    {
        std::string kind = cur_.identifier();
        if (kind == "factorization") {
            std::string name = cur_.identifier();
            check_fresh(session, name);
            auto body = parse_body({"d1", "d0"});
            const auto& d1 = body.at("d1");
            const auto& d0 = body.at("d0");
            if (!d1.is_square() || !d0.is_square() || d1.rows() != d0.rows())
                fail(ErrorKind::DimensionMismatch,
                     "factorization '" + name + "' needs equal square matrices");
            session.objects.push_back(
                SessionObject<K>{name, NamedFactorization<K>{session.f, d1, d0}});
        } else if (kind == "module") {
            std::string name = cur_.identifier();
            check_fresh(session, name);
            std::string over = cur_.identifier();
            if (over != "over")
                cur_.error("'over R' or 'over S'");
            std::string mode = cur_.identifier();
            if (mode != "R" && mode != "S")
                cur_.error("'R' or 'S'");
            auto body = parse_body({"relations"});
            ModulePresentation<K> value = mode == "R"
                                              ? make_r_module(body.at("relations"), session.f)
                                              : make_s_module(body.at("relations"));
            session.objects.push_back(SessionObject<K>{name, NamedModule<K>{std::move(value)}});
        } else if (kind == "morphism" || kind == "chainmap" || kind == "homotopy") {
            std::string name = cur_.identifier();
            check_fresh(session, name);
            cur_.skip_space();
            cur_.expect(':');
            bool wrapped = kind == "chainmap";
            auto endpoint = [&]() {
                cur_.skip_space();
                if (wrapped) {
                    std::string t = cur_.identifier();
                    if (t != "T")
                        cur_.error("'T(<factorization>)'");
                    cur_.skip_space();
                    cur_.expect('(');
                    std::string inner = cur_.identifier();
                    cur_.skip_space();
                    cur_.expect(')');
                    return inner;
                }
                return cur_.identifier();
            };
            std::string source = endpoint();
            cur_.skip_space();
            cur_.expect('-');
            cur_.expect('>');
            std::string target = endpoint();
            const auto& src = session.template require_as<NamedFactorization<K>>(source, "factorization");
            const auto& tgt = session.template require_as<NamedFactorization<K>>(target, "factorization");
            const std::size_t n = src.rank(), np = tgt.rank();
            auto check_shape = [&](const PolyMatrix<K>& m, const char* key) {
                if (m.rows() != np || m.cols() != n)
                    fail(ErrorKind::DimensionMismatch,
                         std::string(key) + " must be " + std::to_string(np) + "x" + std::to_string(n));
            };

            if (kind == "morphism") {
                auto body = parse_body({"a0", "a1"});
                check_shape(body.at("a0"), "a0");
                check_shape(body.at("a1"), "a1");
                if (tgt.d1 * body.at("a1") != body.at("a0") * src.d1 ||
                    tgt.d0 * body.at("a0") != body.at("a1") * src.d0)
                    fail(ErrorKind::AxiomFailed, "morphism '" + name + "' squares do not commute");
                session.objects.push_back(SessionObject<K>{
                    name, NamedMorphism<K>{source, target, body.at("a0"), body.at("a1")}});
            } else if (kind == "chainmap") {
                auto body = parse_body({"a2", "a1", "a0"});
                for (const char* key : {"a2", "a1", "a0"})
                    check_shape(body.at(key), key);
                PolyMatrix<K> lower = body.at("a1") * src.d0 - tgt.d0 * body.at("a2");
                PolyMatrix<K> upper = body.at("a0") * src.d1 - tgt.d1 * body.at("a1");
                if (!reduce_mod(lower, session.f).is_zero() || !reduce_mod(upper, session.f).is_zero())
                    fail(ErrorKind::AxiomFailed, "chainmap '" + name + "' squares fail mod f");
                session.objects.push_back(SessionObject<K>{
                    name, NamedChainMap<K>{source, target, body.at("a2"), body.at("a1"), body.at("a0")}});
            } else {
                auto body = parse_body({"s0", "s1"}, {"s2"});
                bool has_s2 = body.count("s2") != 0;
                SigmaWitness<K> sigma{body.at("s0"), body.at("s1"),
                                      has_s2 ? body.at("s2") : body.at("s0")};
                check_shape(sigma.s0, "s0");
                check_shape(sigma.s1, "s1");
                check_shape(sigma.s2, "s2");
                session.objects.push_back(SessionObject<K>{
                    name, NamedHomotopy<K>{source, target, std::move(sigma), has_s2}});
            }
        } else {
            cur_.error("a block ('factorization', 'morphism', 'module', 'chainmap', 'homotopy')");
        }
    }

    TextCursor& cur_;
    RingPtr ring_;
};

template <class K>
Session<K> parse_session_body(TextCursor& cur, const RingPtr& ring)
{
    SessionParser<K> parser(cur, ring);
    return parser.parse();
}

// Validated views over session objects. Factorization axioms are deferred
// to here so that the validate operation can report a mathematical "no"
// instead of a parse failure.
template <class K>
LinearFactorization<K> session_factorization(const Session<K>& session, const std::string& name)
{
    const auto& raw = session.template require_as<NamedFactorization<K>>(name, "factorization");
    return validate_factorization(raw.f, raw.d1, raw.d0);
}

template <class K>
MfMorphism<K> session_morphism(const Session<K>& session, const std::string& name)
{
    const auto& raw = session.template require_as<NamedMorphism<K>>(name, "morphism");
    return make_morphism(session_factorization(session, raw.source),
                         session_factorization(session, raw.target), raw.a0, raw.a1);
}

namespace detail {

template <class K>
std::string matrix_text(const PolyMatrix<K>& m)
{
    return m.str();
}

} // namespace detail

// Canonical session text; printing a parsed session reproduces itself.
template <class K>
std::string print_session(const Session<K>& session)
{
    std::ostringstream out;
    const Ring& ring = *session.ring;
    if (ring.field == FieldKind::Rationals)
        out << "field Q\n";
    else
        out << "field F_" << ring.prime << "\n";
    out << "ring ";
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
        if (i)
            out << ", ";
        out << ring.variables[i];
        if (!ring.standard_grading())
            out << ":" << ring.weights[i];
    }
    out << "\n";
    out << "f: " << session.f.str() << "\n";

    for (const auto& obj : session.objects) {
        out << "\n";
        if (const auto* fac = std::get_if<NamedFactorization<K>>(&obj.value)) {
            out << "factorization " << obj.name << " {\n";
            out << "  d1: " << detail::matrix_text(fac->d1) << "\n";
            out << "  d0: " << detail::matrix_text(fac->d0) << "\n";
            out << "}\n";
        } else if (const auto* mor = std::get_if<NamedMorphism<K>>(&obj.value)) {
            out << "morphism " << obj.name << " : " << mor->source << " -> " << mor->target
                << " {\n";
            out << "  a0: " << detail::matrix_text(mor->a0) << "\n";
            out << "  a1: " << detail::matrix_text(mor->a1) << "\n";
            out << "}\n";
        } else if (const auto* mod = std::get_if<NamedModule<K>>(&obj.value)) {
            out << "module " << obj.name << " over " << (mod->value.over_R ? "R" : "S") << " {\n";
            out << "  relations: " << detail::matrix_text(mod->value.relations) << "\n";
            out << "}\n";
        } else if (const auto* cm = std::get_if<NamedChainMap<K>>(&obj.value)) {
            out << "chainmap " << obj.name << " : T(" << cm->source << ") -> T(" << cm->target
                << ") {\n";
            out << "  a2: " << detail::matrix_text(cm->a2) << "\n";
            out << "  a1: " << detail::matrix_text(cm->a1) << "\n";
            out << "  a0: " << detail::matrix_text(cm->a0) << "\n";
            out << "}\n";
        } else if (const auto* ho = std::get_if<NamedHomotopy<K>>(&obj.value)) {
            out << "homotopy " << obj.name << " : " << ho->source << " -> " << ho->target << " {\n";
            out << "  s0: " << detail::matrix_text(ho->value.s0) << "\n";
            out << "  s1: " << detail::matrix_text(ho->value.s1) << "\n";
            if (ho->s2_given)
                out << "  s2: " << detail::matrix_text(ho->value.s2) << "\n";
            out << "}\n";
        }
    }
    return out.str();
}

} // namespace mfact

#endif
