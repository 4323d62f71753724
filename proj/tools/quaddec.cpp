#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pretty.hpp"
#include "quaddec/errors.hpp"
#include "quaddec/families.hpp"
#include "quaddec/serialize.hpp"
#include "quaddec/study.hpp"

using namespace quaddec;

namespace {

enum Exit { ok = 0, mismatch = 1, usage = 2, domain = 3 };

struct Options {
    std::string family;
    std::string coeff_file;
    std::optional<std::string> p, q, a;
    std::optional<std::string> alpha, beta, gamma, mu;
    std::vector<std::string> param;
    std::size_t nmax = 8;
    std::size_t samples = 5;
    std::optional<std::uint64_t> seed;
    std::string cases = "all";
    bool pretty = false;
};

std::optional<Rational> opt_rational(const std::optional<std::string>& s)
{
    if (!s) {
        return std::nullopt;
    }
    return Rational::parse(*s);
}

Params family_params(const Options& o)
{
    Params ps;
    auto put = [&](const char* key, const std::optional<std::string>& v) {
        if (v) {
            ps[key] = Rational::parse(*v);
        }
    };
    put("alpha", o.alpha);
    put("beta", o.beta);
    put("gamma", o.gamma);
    put("mu", o.mu);
    for (const auto& kv : o.param) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ParseError("--param expects name=value, got '" + kv + "'");
        }
        ps[kv.substr(0, eq)] = Rational::parse(kv.substr(eq + 1));
    }
    return ps;
}

QuadMap quad_map(const Options& o)
{
    return {opt_rational(o.p).value_or(Rational(0)), opt_rational(o.q).value_or(Rational(0)),
            opt_rational(o.a).value_or(Rational(0))};
}

std::uint64_t seed_of(const Options& o)
{
    if (o.seed) {
        return *o.seed;
    }
    if (const char* env = std::getenv("QUADDEC_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError(std::string("QUADDEC_SEED is not an integer: '") + env + "'");
        }
    }
    return default_seed;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

void emit(const json& j, bool pretty, std::string (*render)(const json&))
{
    if (pretty) {
        std::cout << render(j);
    } else {
        std::cout << j.dump() << "\n";
    }
}

int cmd_decompose(const Options& o)
{
    const QuadMap map = quad_map(o);
    if (!o.coeff_file.empty()) {
        if (!o.family.empty()) {
            throw ParseError("give either a family or --coeff-file, not both");
        }
        const CoeffFile file = parse_coeff_file(read_json_file(o.coeff_file));
        if (const auto* rc = std::get_if<RecurrencePrefix>(&file)) {
            const RecurrenceCoeffs coeffs = RecurrenceCoeffs::from_prefix(*rc);
            const ExtendedCoeffs ec(coeffs, map);
            emit(to_json(gqd_orthogonal(coeffs, map, o.nmax), &ec), o.pretty, pretty::decomposition);
        } else {
            const auto& table = std::get<StructureTable>(file);
            emit(to_json(gqd_structured(StructureCoeffs::from_table(table), map, o.nmax)), o.pretty,
                 pretty::decomposition);
        }
        return ok;
    }
    if (o.family.empty()) {
        throw ParseError("decompose needs a family or --coeff-file");
    }
    const FamilySpec spec = build(o.family, family_params(o));
    const ExtendedCoeffs ec(spec.rc, map);
    emit(to_json(gqd_orthogonal(spec.rc, map, o.nmax), &ec), o.pretty, pretty::decomposition);
    return ok;
}

int cmd_study(const Options& o)
{
    const FamilySpec spec = build(o.family, family_params(o));
    CaseSpec fixed;
    fixed.p = opt_rational(o.p);
    fixed.q = opt_rational(o.q);
    fixed.a = opt_rational(o.a);
    const auto reports = study(spec, select_cases(o.family, o.cases), o.nmax, seed_of(o), fixed);
    json out = json::array();
    bool agree = true;
    for (const auto& r : reports) {
        out.push_back(to_json(r));
        agree = agree && (!r.expected || r.matches_expected());
    }
    emit(out, o.pretty, pretty::studies);
    return agree ? ok : mismatch;
}

int cmd_verify(const Options& o)
{
    std::vector<std::string> names;
    if (o.family == "all") {
        for (const auto& f : family_catalog()) {
            names.push_back(f.name);
        }
    } else {
        (void)family_info(o.family);
        names.push_back(o.family);
    }
    const VerifyReport report = verify(names, o.samples, o.nmax, seed_of(o));
    emit(to_json(report), o.pretty, pretty::verification);
    return report.pass() ? ok : mismatch;
}

int cmd_moments(const Options& o)
{
    const FamilySpec spec = build(o.family, family_params(o));
    const MomentsReport m = moments(spec, quad_map(o), o.nmax);
    emit(to_json(m), o.pretty, pretty::moments);
    const bool good = m.printed_match.value_or(true) && m.binomial_identity.value_or(true);
    return good ? ok : mismatch;
}

int cmd_families(const Options& o)
{
    json fams = json::array();
    for (const auto& f : family_catalog()) {
        json cases = json::array();
        for (const auto& c : tabulated_cases(f.name)) {
            cases.push_back(c.id);
        }
        fams.push_back({{"name", f.name},
                        {"description", f.description},
                        {"params", f.params},
                        {"recurrence", f.recurrence},
                        {"cases", cases},
                        {"printed_extended", has_printed_extended(f.name)}});
    }
    json errs = json::array();
    for (const auto& e : errata()) {
        errs.push_back({{"family", e.family},
                        {"item", e.item},
                        {"printed", e.printed},
                        {"correction", e.correction},
                        {"locus", e.locus}});
    }
    emit({{"families", fams}, {"errata", errs}}, o.pretty, pretty::families);
    return ok;
}

int fail(const json& err, bool pretty_out, int code, const std::string& message)
{
    emit(err, pretty_out, pretty::error);
    std::cerr << "quaddec: " << message << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"General quadratic decomposition of monic polynomial sequences"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "quaddec 0.1.0");
    Options o;

    auto add_map = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "linear coefficient of omega(x) = x^2 + px + q");
        sub->add_option("--q", o.q, "constant coefficient of omega");
        sub->add_option("--a", o.a, "node of the factor (x - a)");
    };
    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--alpha", o.alpha, "family parameter alpha");
        sub->add_option("--beta", o.beta, "family parameter beta");
        sub->add_option("--gamma", o.gamma, "family parameter gamma");
        sub->add_option("--mu", o.mu, "family parameter mu");
        sub->add_option("--param", o.param, "family parameter as name=value (repeatable)");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--nmax", o.nmax, "component depth")->capture_default_str();
        sub->add_flag("--pretty", o.pretty, "render text tables instead of JSON");
    };

    auto* decompose =
        app.add_subcommand("decompose", "components P, R, a, b of a family or coefficient file");
    decompose->add_option("family", o.family, "family name");
    decompose->add_option("--coeff-file", o.coeff_file, "JSON file with beta and gamma (or chi) arrays");
    add_map(decompose);
    add_params(decompose);
    add_common(decompose);

    auto* study_cmd = app.add_subcommand("study", "classify components across parameter cases");
    study_cmd->add_option("family", o.family, "family name")->required();
    study_cmd->add_option("--cases", o.cases, "all, special, or comma-separated case ids")
        ->capture_default_str();
    study_cmd->add_option("--seed", o.seed, "sampling seed (default: QUADDEC_SEED or built-in)");
    add_map(study_cmd);
    add_params(study_cmd);
    add_common(study_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "check printed formulas and classifications");
    verify_cmd->add_option("family", o.family, "family name or 'all'")->required();
    verify_cmd->add_option("--samples", o.samples, "parameter tuples per family")->capture_default_str();
    verify_cmd->add_option("--seed", o.seed, "sampling seed (default: QUADDEC_SEED or built-in)");
    add_common(verify_cmd);

    auto* moments_cmd = app.add_subcommand("moments", "canonical moments of W, P and R");
    moments_cmd->add_option("family", o.family, "family name")->required();
    add_map(moments_cmd);
    add_params(moments_cmd);
    add_common(moments_cmd);

    auto* families_cmd = app.add_subcommand("families", "list the catalog and registered errata");
    families_cmd->add_flag("--pretty", o.pretty, "render a text table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(error_json("usage", e.what()), false, usage, e.what());
    }

    try {
        if (*decompose) {
            return cmd_decompose(o);
        }
        if (*study_cmd) {
            return cmd_study(o);
        }
        if (*verify_cmd) {
            return cmd_verify(o);
        }
        if (*moments_cmd) {
            return cmd_moments(o);
        }
        return cmd_families(o);
    } catch (const ParseError& e) {
        return fail(error_json("parse", e.what()), o.pretty, usage, e.what());
    } catch (const RegularityError& e) {
        json err = error_json("regularity", e.what());
        err["error"]["coefficient"] = e.coefficient();
        err["error"]["index"] = e.index();
        return fail(err, o.pretty, domain, e.what());
    } catch (const PreconditionError& e) {
        json err = error_json("precondition", e.what());
        err["error"]["index"] = e.index();
        return fail(err, o.pretty, domain, e.what());
    } catch (const Error& e) {
        return fail(error_json("domain", e.what()), o.pretty, domain, e.what());
    }
}
