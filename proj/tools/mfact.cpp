// Command-line front end: parses a session file describing a ring, f, and
// named objects, runs one operation, and prints a human or JSON report.
// Exit codes: 0 mathematical yes, 1 mathematical no, 2 error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <mfact/mfact.hpp>

using nlohmann::json;
using namespace mfact;

namespace {

struct Invocation {
    std::string command;
    std::string file;
    std::vector<std::string> names;
    long index = 0;
    std::string which = "d1";
    std::string part = "both";
    bool json_output = false;
    std::string order = "grevlex";
    std::string field_override;
    std::size_t max_steps = 5'000'000;
};

struct Report {
    json body;
    int exit_code = 0;

    Report()
    {
        body["witnesses"] = json::object();
        body["timings"] = json::object();
    }

    void set_verdict(const std::string& v, int code)
    {
        body["verdict"] = v;
        body["exit"] = code;
        exit_code = code;
    }
};

double ms_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

template <class K>
json matrix_json(const PolyMatrix<K>& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

void print_human(const Report& report)
{
    const json& b = report.body;
    std::cout << b["command"].get<std::string>();
    if (b.contains("object"))
        std::cout << " " << b["object"].get<std::string>();
    std::cout << ": verdict: " << b["verdict"].get<std::string>() << "\n";
    for (const auto& [key, value] : b.items()) {
        if (key == "command" || key == "object" || key == "verdict" || key == "witnesses" ||
            key == "timings" || key == "exit" || key == "session")
            continue;
        std::cout << "  " << key << ": " << value.dump() << "\n";
    }
    if (b.contains("session"))
        std::cout << b["session"].get<std::string>();
    const json& w = b["witnesses"];
    for (const auto& [key, value] : w.items())
        std::cout << "  witness " << key << ": " << value.dump() << "\n";
    std::cout << "  timings: parse " << b["timings"].value("parse_ms", 0.0) << " ms, compute "
              << b["timings"].value("compute_ms", 0.0) << " ms\n";
}

template <class K>
const NamedChainMap<K>& require_chainmap(const Session<K>& session, const std::string& name)
{
    return session.template require_as<NamedChainMap<K>>(name, "chainmap");
}

template <class K>
ModulePresentation<K> require_module(const Session<K>& session, const std::string& name)
{
    return session.template require_as<NamedModule<K>>(name, "module").value;
}

template <class K>
void run_validate(const Session<K>& session, const Invocation& inv, Report& report)
{
    try {
        auto p = session_factorization(session, inv.names[0]);
        report.body["rank"] = p.rank();
        report.set_verdict("yes", 0);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::AxiomFailed) {
            report.body["reason"] = e.what();
            report.set_verdict("no", 1);
            return;
        }
        throw;
    }
}

template <class K>
void run_coker(const Session<K>& session, const Invocation& inv, Report& report)
{
    auto p = session_factorization(session, inv.names[0]);
    auto m = coker_presentation(p, inv.which != "d0");
    report.body["which"] = inv.which;
    report.body["generators"] = m.generators();
    report.body["presents_zero_module"] = presents_zero_module(m);
    report.body["witnesses"]["relations"] = matrix_json(m.relations);
    report.set_verdict("yes", 0);
}

template <class K>
void run_totalize(const Session<K>& session, const Invocation& inv, Report& report)
{
    auto p = session_factorization(session, inv.names[0]);
    auto complex = apply_T(p);
    auto rep = verify_total_acyclicity(complex);
    report.body["totally_acyclic"] = rep.acyclic;
    if (!rep.acyclic) {
        report.body["failed_position"] = rep.failed_position;
        report.body["failed_side"] = rep.dual_failure ? "dual" : "plain";
        if (rep.witness)
            report.body["witnesses"]["kernel_element_not_in_image"] = rep.witness->str();
        report.set_verdict("no", 1);
        return;
    }
    // Re-verify every exactness certificate before reporting success: the
    // kernel generator must equal the certified image combination mod f.
    json certs = json::array();
    auto recheck = [&](const TwoPeriodicComplex<K>& c) {
        auto redo = verify_acyclic(c);
        for (const auto& cert : redo.certificates) {
            const auto& in = cert.image_coefficients;
            json entry;
            entry["kernel_generator"] = cert.kernel_generator.str();
            json coeffs = json::array();
            for (const auto& q : in)
                coeffs.push_back(q.str());
            entry["image_coefficients"] = coeffs;
            certs.push_back(entry);
        }
    };
    recheck(complex);
    recheck(transpose(complex));
    report.body["witnesses"]["exactness_certificates"] = certs;
    report.set_verdict("yes", 0);
}

template <class K>
void run_homotopic(const Session<K>& session, const Invocation& inv, Report& report)
{
    auto m1 = session_morphism(session, inv.names[0]);
    auto m2 = session_morphism(session, inv.names[1]);
    auto witness = homotopic(m1, m2);
    if (!witness) {
        report.set_verdict("no", 1);
        return;
    }
    if (!homotopy_witnesses(morphism_difference(m1, m2), *witness))
        fail(ErrorKind::VerificationFailed, "homotopy witness failed the final recheck");
    report.body["witnesses"]["h0"] = matrix_json(witness->h0);
    report.body["witnesses"]["h1"] = matrix_json(witness->h1);
    report.set_verdict("yes", 0);
}

template <class K>
void run_eisenbud(const Session<K>& session, const Invocation& inv, Report& report)
{
    auto m = require_module(session, inv.names[0]);
    auto p = eisenbud_factorization(m);
    PolyMatrix<K> fI = PolyMatrix<K>::scalar(p.ring(), p.rank(), p.f);
    if (p.d1 * p.d0 != fI || p.d0 * p.d1 != fI)
        fail(ErrorKind::VerificationFailed, "products failed the final recheck");
    report.body["rank"] = p.rank();
    report.body["witnesses"]["d1"] = matrix_json(p.d1);
    report.body["witnesses"]["d0"] = matrix_json(p.d0);
    report.set_verdict("yes", 0);
}

template <class K>
void run_roundtrip(const Session<K>& session, const Invocation& inv, Report& report)
{
    auto p = session_factorization(session, inv.names[0]);
    try {
        auto rt = roundtrip_check(p);
        report.body["coker_presents_zero"] = rt.coker_is_zero;
        if (rt.coker_is_zero)
            report.body["note"] = "contractible input: cokernel is the zero module";
        report.body["witnesses"]["d1"] = matrix_json(rt.reconstructed.d1);
        report.body["witnesses"]["d0"] = matrix_json(rt.reconstructed.d0);
        report.set_verdict(rt.isomorphic ? "yes" : "no", rt.isomorphic ? 0 : 1);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::IsoCheckFailed) {
            report.body["reason"] = e.what();
            report.set_verdict("no", 1);
            return;
        }
        throw;
    }
}

template <class K>
void run_reconstruct_full(const Session<K>& session, const Invocation& inv, Report& report)
{
    const auto& cm = require_chainmap(session, inv.names[0]);
    auto p = session_factorization(session, cm.source);
    auto q = session_factorization(session, cm.target);
    auto res = fullness_reconstruct(cm.a2, cm.a1, cm.a0, p, q);
    if (q.d1 * res.gamma.alpha1 != res.gamma.alpha0 * p.d1 ||
        q.d0 * res.gamma.alpha0 != res.gamma.alpha1 * p.d0)
        fail(ErrorKind::VerificationFailed, "reconstructed morphism failed the final recheck");
    report.body["witnesses"]["gamma0"] = matrix_json(res.gamma.alpha0);
    report.body["witnesses"]["gamma1"] = matrix_json(res.gamma.alpha1);
    report.body["witnesses"]["sigma0"] = matrix_json(res.certificate.sigma0);
    report.body["witnesses"]["sigma1"] = matrix_json(res.certificate.sigma1);
    report.body["strictly_periodic_witness_exists"] = res.certificate.periodic_witness_exists;
    report.set_verdict("yes", 0);
}

template <class K>
void run_nullhomotopy(const Session<K>& session, const Invocation& inv, Report& report)
{
    auto m = session_morphism(session, inv.names[0]);
    const auto& sig = session.template require_as<NamedHomotopy<K>>(inv.names[1], "homotopy");
    auto h = faithfulness_nullhomotopy(m, sig.value);
    if (!homotopy_witnesses(m, h))
        fail(ErrorKind::VerificationFailed, "null homotopy failed the final recheck");
    report.body["witnesses"]["h0"] = matrix_json(h.h0);
    report.body["witnesses"]["s1"] = matrix_json(h.h1);
    report.set_verdict("yes", 0);
}

template <class K>
void run_rees(const Session<K>& session, const Invocation& inv, Report& report)
{
    auto n = require_module(session, inv.names[0]);
    auto m = require_module(session, inv.names[1]);
    bool all_equal = true;
    bool all_comparable = true;
    auto render = [&](const char* tag, const ReesVerdict& v) {
        json body;
        body["dim_ext_S"] = v.dim_S;
        body["dim_ext_R"] = v.dim_R;
        body["finite_S"] = v.finite_S;
        body["finite_R"] = v.finite_R;
        body["equal"] = v.equal;
        report.body[tag] = body;
        all_equal = all_equal && v.equal;
        all_comparable = all_comparable && v.comparable;
    };
    if (inv.part == "i" || inv.part == "both")
        render("rees_i", rees_check_i(inv.index, n, m, session.f));
    if (inv.part == "ii" || inv.part == "both")
        render("rees_ii", rees_check_ii(inv.index, m, n, session.f));
    report.body["index"] = inv.index;
    if (!all_comparable)
        fail(ErrorKind::NotFiniteLength, "a side is not of finite length; comparison skipped");
    report.set_verdict(all_equal ? "yes" : "no", all_equal ? 0 : 1);
}

template <class K>
void run_ext(const Session<K>& session, const Invocation& inv, Report& report)
{
    auto n = require_module(session, inv.names[0]);
    auto m = require_module(session, inv.names[1]);
    auto e = ext_dimension(inv.index, n, m);
    report.body["index"] = e.index;
    report.body["finite_length"] = e.finite;
    if (e.finite)
        report.body["dimension"] = e.dimension;
    report.body["homology_generators"] = e.homology_generators;
    if (e.presentation)
        report.body["witnesses"]["presentation"] = matrix_json(*e.presentation);
    report.set_verdict("yes", 0);
}

template <class K>
void dispatch(const Invocation& inv, Report& report, TextCursor& cur, const RingPtr& ring,
              std::chrono::steady_clock::time_point start)
{
    Session<K> session = parse_session_body<K>(cur, ring);
    report.body["timings"]["parse_ms"] = ms_since(start);
    auto compute_start = std::chrono::steady_clock::now();

    if (inv.command == "print") {
        report.body["session"] = print_session(session);
        report.set_verdict("yes", 0);
    } else if (inv.command == "validate") {
        run_validate(session, inv, report);
    } else if (inv.command == "coker") {
        run_coker(session, inv, report);
    } else if (inv.command == "totalize") {
        run_totalize(session, inv, report);
    } else if (inv.command == "homotopic") {
        run_homotopic(session, inv, report);
    } else if (inv.command == "eisenbud") {
        run_eisenbud(session, inv, report);
    } else if (inv.command == "roundtrip") {
        run_roundtrip(session, inv, report);
    } else if (inv.command == "reconstruct-full") {
        run_reconstruct_full(session, inv, report);
    } else if (inv.command == "nullhomotopy") {
        run_nullhomotopy(session, inv, report);
    } else if (inv.command == "rees") {
        run_rees(session, inv, report);
    } else if (inv.command == "ext") {
        run_ext(session, inv, report);
    } else {
        fail(ErrorKind::InvalidArgument, "unknown command '" + inv.command + "'");
    }
    report.body["timings"]["compute_ms"] = ms_since(compute_start);
}

int run(const Invocation& inv)
{
    Report report;
    report.body["command"] = inv.command;
    if (!inv.names.empty()) {
        std::string joined;
        for (const auto& n : inv.names)
            joined += (joined.empty() ? "" : " ") + n;
        report.body["object"] = joined;
    }

    try {
        ScopedEngineDefaults defaults(
            inv.order == "lex" ? MonomialOrder::Lex : MonomialOrder::Grevlex, inv.max_steps);

        auto start = std::chrono::steady_clock::now();
        std::ifstream in(inv.file);
        if (!in)
            fail(ErrorKind::InvalidArgument, "cannot open session file '" + inv.file + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        std::string text = buffer.str();

        TextCursor cur(text);
        SessionHeader header = parse_session_header(cur);
        if (!inv.field_override.empty()) {
            if (inv.field_override == "q") {
                header.field = FieldKind::Rationals;
                header.prime = 0;
            } else if (inv.field_override.rfind("fp:", 0) == 0) {
                header.field = FieldKind::PrimeField;
                header.prime = std::stoull(inv.field_override.substr(3));
            } else {
                fail(ErrorKind::InvalidArgument, "--field expects q or fp:<prime>");
            }
        }
        auto ring = make_ring(header.variables, header.field, header.prime, header.weights);

        if (header.field == FieldKind::Rationals)
            dispatch<Rat>(inv, report, cur, ring, start);
        else
            dispatch<Fp>(inv, report, cur, ring, start);
    } catch (const Error& e) {
        report.body["error_kind"] = error_kind_name(e.kind());
        report.body["reason"] = e.what();
        report.set_verdict("error", 2);
    } catch (const std::exception& e) {
        report.body["reason"] = e.what();
        report.set_verdict("error", 2);
    }

    if (inv.json_output)
        std::cout << report.body.dump(2) << "\n";
    else
        print_human(report);
    return report.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact matrix factorizations over hypersurface rings"};
    app.require_subcommand(1);

    Invocation inv;
    auto add_global = [&inv](CLI::App* cmd) {
        cmd->add_flag("--json", inv.json_output, "machine-readable report");
        cmd->add_option("--order", inv.order, "monomial order")
            ->check(CLI::IsMember({"grevlex", "lex"}));
        cmd->add_option("--field", inv.field_override, "override the file's field (q | fp:<prime>)");
        cmd->add_option("--max-steps", inv.max_steps, "engine step budget");
    };
    auto add_common = [&](CLI::App* cmd, int names, bool takes_index = false) {
        cmd->add_option("file", inv.file, "session file")->required();
        if (takes_index)
            cmd->add_option("index", inv.index, "cohomological index")->required();
        if (names > 0)
            cmd->add_option("names", inv.names, "object names")
                ->required()
                ->expected(names);
        add_global(cmd);
        cmd->callback([&inv, cmd]() { inv.command = cmd->get_name(); });
    };

    add_common(app.add_subcommand("print", "reprint the session canonically"), 0);
    add_common(app.add_subcommand("validate", "check the factorization axioms"), 1);
    auto* coker = app.add_subcommand("coker", "cokernel presentation over R");
    add_common(coker, 1);
    coker->add_option("--which", inv.which, "which differential")
        ->check(CLI::IsMember({"d1", "d0"}));
    add_common(app.add_subcommand("totalize", "apply T and certify total acyclicity"), 1);
    add_common(app.add_subcommand("homotopic", "decide homotopy of two morphisms"), 2);
    add_common(app.add_subcommand("eisenbud", "module-to-factorization construction"), 1);
    add_common(app.add_subcommand("roundtrip", "coker then reconstruct, certify isomorphism"), 1);
    add_common(app.add_subcommand("reconstruct-full", "strictify a chain map window"), 1);
    add_common(app.add_subcommand("nullhomotopy", "exact null homotopy from a mod-f witness"), 2);
    auto* rees = app.add_subcommand("rees", "change-of-rings Ext comparison");
    add_common(rees, 2, true);
    rees->add_option("--part", inv.part, "which comparison")
        ->check(CLI::IsMember({"i", "ii", "both"}));
    add_common(app.add_subcommand("ext", "Ext dimension and presentation"), 2, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints usage or the error message
        return e.get_exit_code() == 0 ? 0 : 2;
    }
    return run(inv);
}
