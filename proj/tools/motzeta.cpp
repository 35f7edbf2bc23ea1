// Command-line front end: resolve plane curves, compute zeta functions,
// specialize series and check the monodromy conjecture. JSON in and out.

#include "motzeta/corpus.hpp"
#include "motzeta/curve_resolver.hpp"
#include "motzeta/errors.hpp"
#include "motzeta/json_io.hpp"
#include "motzeta/topological_zeta.hpp"
#include "motzeta/zeta_engine.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

namespace {

using namespace motzeta;
namespace fs = std::filesystem;

constexpr int exit_usage = 1;
constexpr int exit_domain = 2;

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        throw ParseError("cannot write " + out_path);
    out << text;
}

ResolutionData load_resolution(const std::string& path)
{
    ResolutionData res = io::resolution_from_json(io::read_file(path));
    if (auto report = validate(res); !report.ok())
        throw DomainError(path + ": invalid resolution data: " + report.violations.front());
    return res;
}

RationalFunctionS topological(const ResolutionData& res, const std::string& variant, const ZetaOptions& opts)
{
    if (variant == "top")
        return z_top(res);
    if (variant == "branch")
        return z_branch(res, opts);
    throw UsageError("unknown variant '" + variant + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Motivic and topological zeta functions of hypersurface germs"};
    app.require_subcommand(1);

    std::string out_path;
    long order = 12;
    std::string space_name = "arcs-mod-cstar";
    std::string weight_name = "nu-plus-m";
    std::string variant = "top";

    auto add_order = [&](CLI::App* cmd) {
        cmd->add_option("--order", order, "Truncation order D")->check(CLI::PositiveNumber);
    };
    auto add_weight = [&](CLI::App* cmd) {
        cmd->add_option("--branch-weight", weight_name, "Branch weight convention")
            ->check(CLI::IsMember({"nu-plus-m", "nu-minus-m"}));
    };
    auto add_variant = [&](CLI::App* cmd) {
        cmd->add_option("--variant", variant, "Topological zeta variant")->check(CLI::IsMember({"top", "branch"}));
    };

    // resolve
    auto* resolve = app.add_subcommand("resolve", "Embedded resolution of a plane-curve germ");
    std::string polynomial;
    int max_depth = 64;
    resolve->add_option("polynomial", polynomial, "Polynomial in x, y, e.g. \"x^2+y^3\"")->required();
    resolve->add_option("-o,--output", out_path, "Output file (default stdout)");
    resolve->add_option("--max-depth", max_depth, "Blowup depth cap")->check(CLI::PositiveNumber);

    // zeta
    auto* zeta = app.add_subcommand("zeta", "Motivic series from resolution data");
    std::string res_path;
    zeta->add_option("resolution", res_path, "Resolution JSON")->required()->check(CLI::ExistingFile);
    zeta->add_option("-o,--output", out_path, "Output file (default stdout)");
    zeta->add_option("--space", space_name, "arcs | arcs-mod-cstar | branches")
        ->check(CLI::IsMember({"arcs", "arcs-mod-cstar", "branches"}));
    add_order(zeta);
    add_weight(zeta);
    auto* what = zeta->add_option_group("quantity");
    bool want_motivic = false, want_contact = false, want_eta = false, want_acampo = false, want_product = false,
         want_two_var = false;
    what->add_flag("--motivic", want_motivic, "Motivic monodromy zeta function");
    what->add_flag("--contact", want_contact, "Contact series");
    what->add_flag("--eta", want_eta, "eta = Exp(contact series)");
    what->add_flag("--acampo", want_acampo, "Monodromy zeta function by A'Campo's formula");
    what->add_flag("--product", want_product, "Motivic zeta via the double product formula");
    what->add_flag("--two-variable", want_two_var, "Contact series graded by the order of the arc");
    what->require_option(1);

    // specialize
    auto* specialize = app.add_subcommand("specialize", "Euler characteristic of a series, coefficientwise");
    std::string series_path;
    specialize->add_option("series", series_path, "Series JSON")->required()->check(CLI::ExistingFile);
    specialize->add_option("-o,--output", out_path, "Output file (default stdout)");

    // topzeta
    auto* topzeta = app.add_subcommand("topzeta", "Topological zeta function Z_top or Z_B");
    bool as_json = false;
    topzeta->add_option("resolution", res_path, "Resolution JSON")->required()->check(CLI::ExistingFile);
    topzeta->add_option("-o,--output", out_path, "Output file (default stdout)");
    topzeta->add_flag("--json", as_json, "Structured output");
    add_variant(topzeta);
    add_weight(topzeta);

    // check-mc
    auto* check = app.add_subcommand("check-mc", "Check the monodromy conjecture for the poles");
    check->add_option("resolution", res_path, "Resolution JSON")->required()->check(CLI::ExistingFile);
    check->add_option("-o,--output", out_path, "Output file (default stdout)");
    check->add_flag("--json", as_json, "Structured output");
    add_variant(check);
    add_weight(check);

    // examples
    auto* examples = app.add_subcommand("examples", "Emit the built-in germs with their resolutions");
    std::string out_dir;
    examples->add_option("-d,--dir", out_dir, "Write one <name>.json per germ into this directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        const ZetaOptions opts{parse_branch_weight(weight_name)};

        if (*resolve) {
            auto res = resolve_germ(polynomial, max_depth);
            emit(io::dump(io::to_json(res.data)), out_path);
        } else if (*zeta) {
            const ResolutionData res = load_resolution(res_path);
            const SpaceKind space = parse_space(space_name);
            io::json out;
            if (want_acampo)
                out = io::to_json(acampo_zeta(res));
            else if (want_contact)
                out = io::to_json(contact_series(res, space, order, opts));
            else if (want_eta)
                out = io::to_json(eta(res, space, order, opts));
            else if (want_motivic)
                out = io::to_json(motivic_monodromy_zeta(res, space, order, opts));
            else if (want_product)
                out = io::to_json(theorem1_expansion(res, space, order, opts));
            else
                out = io::to_json(two_variable_contact_series(res, order));
            emit(io::dump(out), out_path);
        } else if (*specialize) {
            auto series = io::series_from_json(io::read_file(series_path));
            emit(io::dump(io::to_json(euler_specialize_series(series))), out_path);
        } else if (*topzeta) {
            auto rf = topological(load_resolution(res_path), variant, opts);
            emit(as_json ? io::dump(io::to_json(rf)) : rf.to_string() + "\n", out_path);
        } else if (*check) {
            const ResolutionData res = load_resolution(res_path);
            auto report = mc_check(topological(res, variant, opts), acampo_zeta(res));
            if (as_json) {
                emit(io::dump(io::to_json(report)), out_path);
            } else {
                std::string text;
                for (const auto& e : report.entries)
                    text += "pole s=" + to_string(e.pole.q) + " order " + std::to_string(e.pole.order) +
                            ": eigenvalue of order " + std::to_string(e.root_order) + " " +
                            (e.eigenvalue ? "present" : "absent") + "\n";
                emit(text + report.verdict() + "\n", out_path);
            }
        } else if (*examples) {
            io::json all = io::json::object();
            for (const auto& g : builtin_germs()) {
                io::json entry = {{"polynomial", g.polynomial},
                                  {"resolution", io::to_json(resolve_germ(g.polynomial).data)}};
                if (!out_dir.empty())
                    io::write_file(fs::path(out_dir) / (g.name + ".json"), entry["resolution"]);
                all[g.name] = entry;
            }
            if (out_dir.empty())
                emit(io::dump(all), "");
        }
    } catch (const ResolverError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return 0;
}
