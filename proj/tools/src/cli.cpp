#include "dedekind/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dedekind/parse.hpp"

namespace dedekind::cli {

using Json = nlohmann::ordered_json;

std::string_view command_name(Command c)
{
    switch (c) {
    case Command::Check: return "check";
    case Command::Eisenstein: return "eisenstein";
    case Command::Radical: return "radical";
    case Command::Transform: return "transform";
    case Command::Ramify: return "ramify";
    }
    return "?";
}

namespace {

bool needs_poly(Command c) { return c == Command::Check || c == Command::Eisenstein || c == Command::Ramify; }

struct RawArgs {
    std::string field;
    std::string poly;
    std::string a;
    long n = 0;
    std::string mode = "assert";
    std::string output = "text";
};

} // namespace

RunConfig parse_config(const std::vector<std::string>& args)
{
    CLI::App app{"Integral closedness of R_nu[alpha] via residue factorization", "dedekind"};
    app.require_subcommand(1, 1);
    RawArgs raw;

    const std::vector<std::pair<Command, std::string>> commands = {
        {Command::Check, "Run the criterion and print certificates"},
        {Command::Eisenstein, "Test whether the polynomial is nu-Eisenstein"},
        {Command::Radical, "Run the criterion on x^n - a"},
        {Command::Transform, "Transform x^n - a into an Eisenstein polynomial"},
        {Command::Ramify, "Print e_i, f_i for an integrally closed R_nu[alpha]"},
    };
    std::vector<std::pair<Command, CLI::App*>> subs;
    for (const auto& [cmd, help] : commands) {
        CLI::App* sub = app.add_subcommand(std::string(command_name(cmd)), help);
        sub->add_option("--field", raw.field, "qp:P, lex:FQ, lambda-trivial:FQ[:sqrtD], lambda-composite:pP:sqrtD")
            ->required();
        if (needs_poly(cmd)) {
            sub->add_option("--poly", raw.poly, "monic polynomial in x, e.g. \"x^3 + (Y)*x + (X)\"")->required();
        } else {
            sub->add_option("--n", raw.n, "exponent n")->required();
            sub->add_option("--a", raw.a, "field element a")->required();
        }
        sub->add_option("--mode", raw.mode, "irreducibility handling")
            ->check(CLI::IsMember({"strict", "assert", "assert-irreducible"}));
        sub->add_option("--output", raw.output, "report format")->check(CLI::IsMember({"text", "json"}));
        subs.emplace_back(cmd, sub);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig config;
    for (const auto& [cmd, sub] : subs) {
        if (sub->parsed()) config.command = cmd;
    }
    config.mode = raw.mode == "strict" ? IrreducibilityMode::Strict : IrreducibilityMode::Assert;
    config.output = raw.output == "json" ? Output::Json : Output::Text;
    try {
        config.field = parse_descriptor(raw.field);
        if (needs_poly(config.command)) {
            config.poly = parse_poly(raw.poly, config.field);
        } else {
            config.n = raw.n;
            config.a = parse_field_element(raw.a, config.field);
        }
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    return config;
}

std::vector<std::string> canonical_args(const RunConfig& config)
{
    std::vector<std::string> out = {std::string(command_name(config.command)), "--field", to_string(config.field)};
    if (config.poly) {
        out.insert(out.end(), {"--poly", to_string(*config.poly)});
    }
    if (config.n) out.insert(out.end(), {"--n", std::to_string(*config.n)});
    if (config.a) out.insert(out.end(), {"--a", to_string(*config.a)});
    out.insert(out.end(), {"--mode", config.mode == IrreducibilityMode::Strict ? "strict" : "assert"});
    out.insert(out.end(), {"--output", config.output == Output::Json ? "json" : "text"});
    return out;
}

namespace {

Json integer(const mpz_class& z)
{
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Json optional_string(const auto& value)
{
    if (!value) return nullptr;
    return to_string(*value);
}

std::string_view verdict_detail(Verdict v)
{
    switch (v) {
    case Verdict::Closed: return "CLOSED";
    case Verdict::NotClosed: return "NOT_CLOSED";
    case Verdict::GroupHasNoMinWithRepeatedFactor: return "GROUP_HAS_NO_MIN_WITH_REPEATED_FACTOR";
    }
    return "?";
}

std::string factorization_string(const ResidueFactorization& fac)
{
    std::string out;
    for (const auto& f : fac.factors) {
        if (!out.empty()) out += "*";
        const std::string phi = to_string(f.phi);
        const bool bare = f.phi.degree() == 1 && phi == "x";
        std::string piece = bare || (f.multiplicity == 1 && fac.factors.size() == 1) ? phi : "(" + phi + ")";
        if (f.multiplicity > 1) piece += "^" + std::to_string(f.multiplicity);
        out += piece;
    }
    return out.empty() ? "1" : out;
}

Json header(const RunConfig& config)
{
    Json j;
    j["command"] = command_name(config.command);
    j["field"] = to_string(config.field);
    j["mode"] = config.mode == IrreducibilityMode::Strict ? "strict" : "assert";
    return j;
}

Json criterion_report(const RunConfig& config, const DedekindReport& rep, const CheckOptions& opts)
{
    Json j = header(config);
    j["poly"] = to_string(rep.f);
    if (config.n) {
        j["n"] = *config.n;
        j["a"] = to_string(*config.a);
    }
    j["verdict"] = verdict_name(rep.verdict);
    j["verdict_detail"] = verdict_detail(rep.verdict);
    j["sigma"] = optional_string(rep.sigma);
    j["separable"] = rep.separable;
    j["irreducibility"] = irreducibility_name(rep.irreducibility);
    j["residue_factorization"] = factorization_string(rep.factorization);

    Json factors = Json::array();
    for (const auto& c : rep.certificates) {
        Json f;
        f["phi"] = to_string(c.phi);
        f["l"] = c.l;
        f["r"] = to_string(c.r);
        f["r_value"] = to_string(c.r_value);
        f["passes"] = c.l >= 2 ? Json(c.passes) : Json(nullptr);
        factors.push_back(std::move(f));
    }
    j["factors"] = std::move(factors);

    Json witnesses;
    const ErshovResult ershov = ershov_test(rep.f, opts);
    Json e;
    e["verdict"] = verdict_name(ershov.verdict);
    e["product"] = to_string(ershov.product);
    e["pi"] = optional_string(ershov.pi);
    e["T"] = optional_string(ershov.t);
    e["T_bar"] = optional_string(ershov.t_bar);
    witnesses["ershov"] = std::move(e);
    if (rep.sigma && !rep.repeated().empty()) {
        const MFormResult m = dedekind_test_m_form(rep.f, opts);
        Json mj;
        mj["verdict"] = verdict_name(m.verdict);
        mj["pi"] = to_string(m.pi);
        mj["M"] = to_string(m.m);
        mj["M_bar"] = to_string(m.m_bar);
        witnesses["m_form"] = std::move(mj);
    } else {
        witnesses["m_form"] = nullptr;
    }
    j["witnesses"] = std::move(witnesses);

    if (rep.closed()) {
        const RamificationReport ram = ramification_report(rep);
        Json r;
        r["s"] = ram.s;
        Json rows = Json::array();
        for (const auto& row : ram.rows) {
            Json x;
            x["phi"] = to_string(row.phi);
            x["e"] = row.e;
            x["f"] = row.f;
            x["phi_alpha_value"] = row.phi_alpha_value ? Json(*row.phi_alpha_value) : Json(nullptr);
            rows.push_back(std::move(x));
        }
        r["rows"] = std::move(rows);
        r["total"] = ram.total;
        j["ramification"] = std::move(r);
    } else {
        j["ramification"] = nullptr;
    }
    return j;
}

Json eisenstein_report(const RunConfig& config)
{
    const EisensteinResult res = is_nu_eisenstein(*config.poly);
    Json j = header(config);
    j["poly"] = to_string(*config.poly);
    j["eisenstein"] = res.eisenstein;
    j["reason"] = eisenstein_reason_name(res.reason);
    j["sigma"] = optional_string(res.sigma);
    j["psi"] = optional_string(res.psi);
    j["r"] = optional_string(res.r);
    j["r_value"] = optional_string(res.r_value);
    return j;
}

Json transform_report(const RunConfig& config)
{
    const RadicalTransform t = radical_transform(*config.n, *config.a);
    Json j = header(config);
    j["n"] = t.n;
    j["a"] = to_string(*config.a);
    j["m"] = integer(t.m);
    j["u"] = integer(t.u);
    j["v"] = integer(t.v);
    j["pi"] = to_string(t.pi);
    j["A"] = to_string(t.a_transformed);
    j["g"] = to_string(t.g);
    j["eisenstein"] = t.eisenstein;
    return j;
}

std::string scalar(const Json& v)
{
    if (v.is_null()) return "none";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    return v.dump();
}

void render_factor(std::ostream& os, std::size_t index, const Json& f, const Json& sigma)
{
    os << "factor " << index << ": phi = " << scalar(f["phi"]) << ", l = " << scalar(f["l"]) << ", r = "
       << scalar(f["r"]) << ", nuG(r) = " << scalar(f["r_value"]);
    if (f["passes"].is_null()) {
        os << " (l = 1, not tested)\n";
    } else if (f["passes"].get<bool>()) {
        os << " = sigma [pass]\n";
    } else if (sigma.is_null()) {
        os << ", sigma: none [fail]\n";
    } else {
        os << " > sigma = " << scalar(sigma) << " [fail]\n";
    }
}

} // namespace

Json build_report(const RunConfig& config)
{
    CheckOptions opts;
    opts.mode = config.mode;
    switch (config.command) {
    case Command::Check:
        return criterion_report(config, dedekind_test(*config.poly, opts), opts);
    case Command::Ramify: {
        const DedekindReport rep = dedekind_test(*config.poly, opts);
        if (!rep.closed()) {
            fail(Errc::PreconditionError, "verdict is " + std::string(verdict_name(rep.verdict)) +
                                              "; ramification data needs an integrally closed R_nu[alpha]");
        }
        return criterion_report(config, rep, opts);
    }
    case Command::Radical:
        return criterion_report(config, radical_test(*config.n, *config.a, opts), opts);
    case Command::Eisenstein:
        return eisenstein_report(config);
    case Command::Transform:
        return transform_report(config);
    }
    fail(Errc::PreconditionError, "unknown command");
}

std::string render_text(const Json& report)
{
    std::ostringstream os;
    const std::string command = report["command"].get<std::string>();
    for (const char* key : {"command", "field", "poly", "n", "a", "mode"}) {
        if (report.contains(key)) os << key << ": " << scalar(report[key]) << "\n";
    }
    if (command == "eisenstein") {
        for (const char* key : {"eisenstein", "reason", "sigma", "psi", "r", "r_value"}) {
            os << key << ": " << scalar(report[key]) << "\n";
        }
        return os.str();
    }
    if (command == "transform") {
        for (const char* key : {"m", "u", "v", "pi", "A", "g", "eisenstein"}) {
            os << key << ": " << scalar(report[key]) << "\n";
        }
        return os.str();
    }

    os << "verdict: " << scalar(report["verdict"]);
    if (report["verdict_detail"] != report["verdict"]) os << " (" << scalar(report["verdict_detail"]) << ")";
    os << "\n";
    for (const char* key : {"sigma", "separable", "irreducibility", "residue_factorization"}) {
        os << key << ": " << scalar(report[key]) << "\n";
    }
    std::size_t index = 1;
    for (const auto& f : report["factors"]) render_factor(os, index++, f, report["sigma"]);

    const Json& e = report["witnesses"]["ershov"];
    os << "ershov: product = " << scalar(e["product"]) << ", pi = " << scalar(e["pi"]) << ", T = " << scalar(e["T"])
       << ", T_bar = " << scalar(e["T_bar"]) << " -> " << scalar(e["verdict"]) << "\n";
    const Json& m = report["witnesses"]["m_form"];
    if (m.is_null()) {
        os << "m_form: none\n";
    } else {
        os << "m_form: pi = " << scalar(m["pi"]) << ", M = " << scalar(m["M"]) << ", M_bar = " << scalar(m["M_bar"])
           << " -> " << scalar(m["verdict"]) << "\n";
    }

    const Json& ram = report["ramification"];
    if (ram.is_null()) {
        os << "ramification: none\n";
    } else {
        os << "ramification: s = " << scalar(ram["s"]) << ", total = " << scalar(ram["total"]) << "\n";
        for (const auto& row : ram["rows"]) {
            os << "  phi = " << scalar(row["phi"]) << ": e = " << scalar(row["e"]) << ", f = " << scalar(row["f"]);
            if (!row["phi_alpha_value"].is_null()) os << ", w(phi(alpha)) = " << scalar(row["phi_alpha_value"]);
            os << "\n";
        }
    }
    return os.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        const Json report = build_report(config);
        if (config.output == Output::Json) {
            out << report.dump(2) << "\n";
        } else {
            out << render_text(report);
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        const bool input = e.code() == Errc::ParseError || e.code() == Errc::DomainError;
        return input ? kExitInput : kExitPrecondition;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig config;
    try {
        config = parse_config(args);
    } catch (const HelpRequested& h) {
        out << h.what();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return run(config, out, err);
}

} // namespace dedekind::cli
