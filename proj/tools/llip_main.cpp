// llip: batch front door for the lattice Lipschitz toolkit.
//
// Results go to stdout as JSON with fixed key order; diagnostics to stderr.
// Exit codes: 0 ok, 1 failed verification, 2 input/schema error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "llip/algebra.hpp"
#include "llip/bounds.hpp"
#include "llip/extension.hpp"
#include "llip/io.hpp"
#include "llip/selftest.hpp"

namespace {

using llip::json;

llip::Config load_config(const std::string& config_path) {
    llip::Config c;
    const char* env = std::getenv("LLIP_CONFIG");
    if (!config_path.empty())
        c = llip::config_from_json(llip::parse_json_file(config_path));
    else if (env && *env)
        c = llip::config_from_json(llip::parse_json_file(env));
    return c;
}

llip::GridPtr load_grid_opt(const std::string& path) {
    if (path.empty()) return nullptr;
    return llip::grid_from_json(llip::parse_json_file(path));
}

double radius_for(const llip::GridPtr& grid, const llip::Config& cfg) {
    return cfg.adjacency_radius_factor * grid->median_spacing();
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice Lipschitz operator toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (overrides LLIP_CONFIG)");

    // grid
    auto* grid_cmd = app.add_subcommand("grid", "build or validate grids");
    std::vector<double> interval;
    std::size_t interval_n = 0;
    std::string grid_in, grid_csv;
    grid_cmd->add_option("--make-interval", interval, "a b endpoints")->expected(2);
    grid_cmd->add_option("--points", interval_n, "number of interval points");
    grid_cmd->add_option("--in", grid_in, "grid JSON to validate");
    grid_cmd->add_option("--csv", grid_csv, "grid+function CSV to convert");

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "apply an operator to a function");
    std::string eval_op, eval_input, eval_grid;
    eval_cmd->add_option("--op", eval_op, "operator JSON")->required();
    eval_cmd->add_option("--input", eval_input, "function JSON")->required();
    eval_cmd->add_option("--grid", eval_grid, "grid JSON (if not embedded in the operator)");

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "bound-function calculus");
    std::string bound_source, bound_mode = "minimal", bound_phi, bound_f, bound_g, bound_grid;
    double bound_L = 0.0, bound_tol = 1e-9;
    bound_cmd->add_option("--source", bound_source, "sample operator JSON")->required();
    bound_cmd->add_option("--mode", bound_mode, "minimal|constant|verify|ratio|majorant");
    bound_cmd->add_option("--phi", bound_phi, "bound function JSON (verify/majorant)");
    bound_cmd->add_option("--f", bound_f, "function JSON (ratio)");
    bound_cmd->add_option("--g", bound_g, "function JSON (ratio)");
    bound_cmd->add_option("--L", bound_L, "Lipschitz constant (majorant)");
    bound_cmd->add_option("--tolerance", bound_tol, "acceptance tolerance for verify");
    bound_cmd->add_option("--grid", bound_grid, "grid JSON fallback");

    // norms
    auto* norms_cmd = app.add_subcommand("norms", "operator norm and probe estimate");
    std::string norms_op, norms_probes, norms_grid;
    norms_cmd->add_option("--op", norms_op, "operator JSON")->required();
    norms_cmd->add_option("--probes", norms_probes, "JSON array of {\"f\":..., \"g\":...}");
    norms_cmd->add_option("--grid", norms_grid, "grid JSON fallback");

    // extend
    auto* extend_cmd = app.add_subcommand("extend", "pointwise extension of a sampled operator");
    std::string ext_source, ext_phi, ext_input, ext_method = "mcshane", ext_grid;
    bool ext_diagnose = false;
    extend_cmd->add_option("--source", ext_source, "sample operator JSON")->required();
    extend_cmd->add_option("--phi", ext_phi, "bound function JSON")->required();
    extend_cmd->add_option("--input", ext_input, "function JSON")->required();
    extend_cmd->add_option("--method", ext_method, "mcshane|whitney|midpoint");
    extend_cmd->add_flag("--diagnose", ext_diagnose, "attach continuity and bound diagnostics");
    extend_cmd->add_option("--grid", ext_grid, "grid JSON fallback");

    // compose
    auto* compose_cmd = app.add_subcommand("compose", "compose superposition fields");
    std::string comp_left, comp_right, comp_out;
    bool comp_check = false;
    compose_cmd->add_option("--left", comp_left, "outer field JSON")->required();
    compose_cmd->add_option("--right", comp_right, "inner field JSON")->required();
    compose_cmd->add_option("--out", comp_out, "write composed field here (else stdout)");
    compose_cmd->add_flag("--check-submult", comp_check, "check submultiplicativity");

    // tensor
    auto* tensor_cmd = app.add_subcommand("tensor", "tensor <-> superposition conversion");
    std::string tensor_in;
    tensor_cmd->add_option("--in", tensor_in, "tensor operator JSON")->required();

    // selftest
    app.add_subcommand("selftest", "run the built-in regression cases");

    CLI11_PARSE(app, argc, argv);

    try {
        llip::Config cfg = load_config(config_path);

        if (grid_cmd->parsed()) {
            llip::GridPtr grid;
            if (!grid_csv.empty()) {
                std::ifstream in(grid_csv);
                if (!in) llip::fail(llip::errc::bad_input, "cannot open '" + grid_csv + "'");
                llip::GridFunction f = llip::function_from_csv(in, llip::Metric::euclidean);
                json out;
                out["grid"] = llip::grid_to_json(*f.grid);
                out["function"] = llip::function_to_json(f);
                emit(out);
                return 0;
            }
            if (!grid_in.empty())
                grid = llip::grid_from_json(llip::parse_json_file(grid_in));
            else if (interval.size() == 2 && interval_n >= 2)
                grid = llip::make_interval_grid(interval[0], interval[1], interval_n);
            else
                llip::fail(llip::errc::bad_input,
                           "grid needs --in, --csv, or --make-interval with --points");
            emit(llip::grid_to_json(*grid));
            return 0;
        }

        if (eval_cmd->parsed()) {
            llip::OperatorRep op =
                llip::operator_from_json(llip::parse_json_file(eval_op), load_grid_opt(eval_grid));
            llip::GridFunction f =
                llip::function_from_json(llip::parse_json_file(eval_input), llip::grid_of(op));
            emit(llip::function_to_json(llip::eval(op, f)));
            return 0;
        }

        if (bound_cmd->parsed()) {
            llip::OperatorRep rep = llip::operator_from_json(llip::parse_json_file(bound_source),
                                                             load_grid_opt(bound_grid));
            const auto* sample = std::get_if<llip::SampleOperator>(&rep);
            const llip::GridPtr& grid = llip::grid_of(rep);
            double radius = radius_for(grid, cfg);

            if (bound_mode == "ratio") {
                if (bound_f.empty() || bound_g.empty())
                    llip::fail(llip::errc::bad_input, "ratio mode needs --f and --g");
                llip::GridFunction f = llip::function_from_json(llip::parse_json_file(bound_f), grid);
                llip::GridFunction g = llip::function_from_json(llip::parse_json_file(bound_g), grid);
                emit(llip::function_to_json(llip::ratio_function(rep, f, g, cfg.zero_tol)));
                return 0;
            }
            if (!sample)
                llip::fail(llip::errc::bad_input, "--source must be a sample operator");
            if (bound_mode == "minimal" || bound_mode == "constant") {
                llip::BoundReport br =
                    bound_mode == "minimal"
                        ? llip::minimal_envelope(*sample, cfg.zero_tol, radius, -1.0,
                                                 cfg.continuity_threshold_factor)
                        : llip::constant_bound(*sample, cfg.zero_tol, radius, -1.0,
                                               cfg.continuity_threshold_factor);
                emit(llip::bound_report_to_json(br));
                return 0;
            }
            if (bound_mode == "verify") {
                if (bound_phi.empty()) llip::fail(llip::errc::bad_input, "verify needs --phi");
                llip::GridFunction phi =
                    llip::function_from_json(llip::parse_json_file(bound_phi), grid);
                llip::BoundReport br = llip::verify_bound(*sample, phi, cfg.zero_tol, radius, -1.0,
                                                          cfg.continuity_threshold_factor);
                emit(llip::bound_report_to_json(br));
                if (br.max_violation > bound_tol) {
                    std::cerr << "bound violated: max_violation " << br.max_violation << "\n";
                    return 1;
                }
                return 0;
            }
            if (bound_mode == "majorant") {
                llip::GridFunction base =
                    bound_phi.empty()
                        ? llip::minimal_envelope(*sample, cfg.zero_tol, radius, -1.0,
                                                 cfg.continuity_threshold_factor)
                              .phi
                        : llip::function_from_json(llip::parse_json_file(bound_phi), grid);
                emit(llip::function_to_json(llip::lipschitz_majorant(base, bound_L)));
                return 0;
            }
            llip::fail(llip::errc::bad_input, "unknown bound mode '" + bound_mode + "'");
        }

        if (norms_cmd->parsed()) {
            llip::OperatorRep op = llip::operator_from_json(llip::parse_json_file(norms_op),
                                                            load_grid_opt(norms_grid));
            const llip::GridPtr& grid = llip::grid_of(op);
            json out;
            out["llip_norm"] = llip::llip_norm(op);
            out["llip_norm_is_lower_bound"] = std::holds_alternative<llip::SampleOperator>(op);
            std::vector<std::pair<llip::GridFunction, llip::GridFunction>> probes;
            if (!norms_probes.empty()) {
                for (const auto& e : llip::parse_json_file(norms_probes))
                    probes.emplace_back(llip::function_from_json(e.at("f"), grid),
                                        llip::function_from_json(e.at("g"), grid));
            } else if (const auto* field = std::get_if<llip::SuperpositionField>(&op)) {
                auto [r, s] = llip::witness_probe(*field);
                probes.emplace_back(llip::constant_function(grid, r),
                                    llip::constant_function(grid, s));
                out["witness_probe"] = {r, s};
            }
            out["lip_norm_estimate"] =
                probes.empty() ? 0.0 : llip::lip_norm_estimate(op, probes);
            emit(out);
            return 0;
        }

        if (extend_cmd->parsed()) {
            llip::OperatorRep rep = llip::operator_from_json(llip::parse_json_file(ext_source),
                                                             load_grid_opt(ext_grid));
            const auto* sample = std::get_if<llip::SampleOperator>(&rep);
            if (!sample) llip::fail(llip::errc::bad_input, "--source must be a sample operator");
            const llip::GridPtr& grid = sample->grid;
            llip::ExtensionSpec spec{
                llip::extension_method_from_string(ext_method),
                llip::function_from_json(llip::parse_json_file(ext_phi), grid), *sample};
            llip::GridFunction f =
                llip::function_from_json(llip::parse_json_file(ext_input), grid);
            json out;
            if (ext_diagnose) {
                double radius = radius_for(grid, cfg);
                auto diag = llip::extend_and_diagnose(spec, f, radius, -1.0,
                                                      cfg.continuity_threshold_factor);
                out["extension"] = llip::function_to_json(diag.extension);
                out["continuity"] = llip::continuity_to_json(diag.continuity);
                out["bound_report"] = llip::bound_report_to_json(diag.bound);
                out["gap"] = llip::function_to_json(llip::extension_gap(spec, f));
            } else {
                out["extension"] = llip::function_to_json(llip::extend(spec, f));
            }
            emit(out);
            return 0;
        }

        if (compose_cmd->parsed()) {
            auto as_field = [](const json& j) {
                llip::OperatorRep rep = llip::operator_from_json(j);
                const auto* f = std::get_if<llip::SuperpositionField>(&rep);
                if (!f) llip::fail(llip::errc::bad_input, "compose needs superposition fields");
                return *f;
            };
            llip::SuperpositionField outer = as_field(llip::parse_json_file(comp_left));
            llip::SuperpositionField inner = as_field(llip::parse_json_file(comp_right));
            llip::SuperpositionField composed =
                llip::compose(outer, inner, cfg.max_breakpoints);
            json cj = llip::operator_to_json(llip::OperatorRep{composed});
            if (!comp_out.empty()) {
                std::ofstream o(comp_out);
                if (!o) llip::fail(llip::errc::bad_input, "cannot write '" + comp_out + "'");
                o << cj.dump(2) << "\n";
            }
            json out;
            out["llip_norm"] = llip::llip_norm(llip::OperatorRep{composed});
            if (comp_check) {
                llip::SubmultReport sub = llip::submultiplicativity_check(outer, inner);
                json sj;
                sj["pointwise_ok"] = sub.pointwise_ok;
                sj["global_ok"] = sub.global_ok;
                sj["worst_point"] = sub.worst_point;
                sj["worst_excess"] = sub.worst_excess;
                out["submultiplicativity"] = sj;
                if (comp_out.empty()) out["operator"] = cj;
                emit(out);
                return sub.pointwise_ok && sub.global_ok ? 0 : 1;
            }
            if (comp_out.empty()) out["operator"] = cj;
            emit(out);
            return 0;
        }

        if (tensor_cmd->parsed()) {
            llip::OperatorRep rep = llip::operator_from_json(llip::parse_json_file(tensor_in));
            const auto* t = std::get_if<llip::TensorOperator>(&rep);
            if (!t) llip::fail(llip::errc::bad_input, "--in must be a tensor operator");
            llip::SuperpositionField field = llip::tensor_to_superposition(*t);
            json out;
            out["epsilon_norm"] = llip::llip_norm(llip::OperatorRep{field});
            out["operator"] = llip::operator_to_json(llip::OperatorRep{field});
            emit(out);
            return 0;
        }

        // selftest
        int failures = llip::run_selftest(std::cout);
        return failures == 0 ? 0 : 1;
    } catch (const llip::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
