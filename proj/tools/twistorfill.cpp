// twistorfill -- CLI front-end for the fillability machinery.
//
// Exit codes: 0 success / solvable, 1 negative verdict (obstructed input,
// failed rank check), 2 malformed input or usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <limits>

#include "twistorfill/cohomology.hpp"
#include "twistorfill/json_io.hpp"
#include "twistorfill/parallel.hpp"

namespace {

using twf::io::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw twf::io::SchemaError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw twf::io::SchemaError("JSON parse error in '" + path + "': " + e.what());
    }
    return j;
}

void write_output(const json& j, const std::string& path) {
    std::string text = twf::io::dump_sorted(j);
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    out << text;
}

constexpr int kCutoffUnset = std::numeric_limits<int>::min();

twf::io::RunConfig load_config(const std::string& config_path, int cutoff, double tol, int band,
                               const std::string& arith) {
    twf::io::RunConfig cfg;
    if (!config_path.empty()) cfg = twf::io::RunConfig::from_json(read_json_file(config_path));
    if (cutoff != kCutoffUnset) {
        if (cutoff < 0) throw std::invalid_argument("--cutoff must be nonnegative");
        cfg.cutoff = cutoff;
    }
    if (tol > 0) cfg.tolerance = tol;
    if (band > 0) cfg.band = band;
    if (!arith.empty()) {
        if (arith != "exact" && arith != "float")
            throw twf::io::SchemaError("--arith must be exact or float");
        cfg.exact = (arith == "exact");
    }
    return cfg;
}

int run(int argc, char** argv) {
    CLI::App app{"equivariant fillability analysis on the twistor space of S^3"};
    app.require_subcommand(1);

    std::string config_path, output_path, input_path;
    int cutoff = kCutoffUnset, band = 0;
    double tol = 0;
    std::string arith;
    bool as_json = false;
    app.add_option("--config", config_path, "configuration file (JSON)");
    app.add_option("--cutoff", cutoff, "K,L cutoff for per-representation scans");
    app.add_option("--tol", tol, "tolerance for floating verdicts");
    app.add_option("--band", band, "Fourier/Taylor truncation band");
    app.add_option("--arith", arith, "arithmetic mode: exact|float");
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("-o,--output", output_path, "output file (default: stdout)");

    auto* fill_check = app.add_subcommand("fill-check",
                                          "solvability of the negative-weight Hessian problem");
    fill_check->add_option("input", input_path, "CR deformation tensor document")->required();

    auto* decompose = app.add_subcommand("decompose", "Coulomb decomposition phi = hess f + phi_W");
    decompose->add_option("input", input_path, "CR deformation tensor document")->required();

    auto* tangent = app.add_subcommand("tangent-dims", "tangent dimensions of fillable data");
    std::string family = "M+";
    tangent->add_option("--family", family, "B+, B-, M+ or M-");

    auto* rh = app.add_subcommand("rh-solve", "linearized extremal-disk problem");
    rh->add_option("input", input_path, "RH problem document")->required();

    auto* extend = app.add_subcommand("extend-disk", "holomorphic extension of boundary data");
    extend->add_option("input", input_path, "Fourier series document")->required();

    auto* coho = app.add_subcommand("cohomology", "line-bundle cohomology tables");
    std::string bundle = "O", base = "P1xP1", range = "-20..20";
    int qdeg = -1, quat_m = 0;
    coho->add_option("--bundle", bundle, "O, L, Omega1_1xL, Omega1_2xL, OmegaPrimexL");
    coho->add_option("--base", base, "P1xP1 (descent bundles) or quaternionic");
    coho->add_option("--q", qdeg, "report only this cohomology degree");
    coho->add_option("--range", range, "weight range a..b");
    coho->add_option("--quaternionic-m", quat_m, "verify the P^{2m-1} x P^1 vanishing instead");

    auto* prank = app.add_subcommand("p-rank", "surjectivity certificates for the P operator");

    CLI11_PARSE(app, argc, argv);
    twf::io::RunConfig cfg = load_config(config_path, cutoff, tol, band, arith);

    if (*fill_check) {
        auto phi = twf::io::tensor_from_json(read_json_file(input_path));
        if (phi.fiber() != twf::calc::Fiber::CRDeform)
            throw twf::io::SchemaError("fill-check: document fiber must be cr_deform");
        auto solved = twf::fill::solve_hessian_negative(phi, cfg.tol());
        json out = twf::io::obstruction_report_to_json(solved.report);
        out["f"] = twf::io::tensor_to_json(solved.f, cfg.exact);
        write_output(out, output_path);
        if (!as_json) {
            std::cerr << (solved.report.solvable ? "solvable: all obstruction coefficients vanish"
                                                 : "obstructed")
                      << "\n";
            for (const auto& rv : solved.report.reps)
                for (const auto& b : rv.blocking)
                    std::cerr << "  V^{" << rv.K << "," << rv.L << "}  w["
                              << twf::calc::fiber_spec(twf::calc::Fiber::CRDeform)
                                     .basis[b.basis]
                                     .label
                              << "](" << b.k << "," << b.l << ") = " << b.value.str() << "\n";
        }
        return solved.report.solvable ? 0 : 1;
    }

    if (*decompose) {
        auto phi = twf::io::tensor_from_json(read_json_file(input_path));
        auto split = twf::fill::coulomb_decompose(phi, cfg.tol());
        json out{{"schema", "twistorfill/coulomb/1"},
                 {"f", twf::io::tensor_to_json(split.f, false)},
                 {"phi_w", twf::io::tensor_to_json(split.phi_w, false)},
                 {"residual", split.residual},
                 {"orthogonality", split.orthogonality}};
        write_output(out, output_path);
        return 0;
    }

    if (*tangent) {
        if (cfg.cutoff < 0) throw twf::io::SchemaError("tangent-dims: cutoff must be >= 0");
        auto desc = twf::fill::tangent_bg_dims(twf::fill::family_from_string(family), cfg.cutoff);
        if (as_json) {
            write_output(twf::io::tangent_description_to_json(desc), output_path);
        } else {
            long long running = 0;
            for (const auto& c : desc.components) {
                running += c.dim * c.multiplicity;
                std::cout << c.part << "  [V^{" << c.K << "," << c.L << "}]  mult "
                          << c.multiplicity << "  dim " << c.dim << "  total " << running << "\n";
            }
            std::cout << "total " << desc.total_dim() << "\n";
        }
        return 0;
    }

    if (*rh) {
        // the disk solvers are floating by nature; an explicit exact request
        // is a configuration error
        if (arith == "exact")
            throw twf::io::SchemaError(
                "rh-solve: exact arithmetic is not available for the disk solvers");
        auto prob = twf::io::rh_problem_from_json(read_json_file(input_path));
        if (band > 0) prob.band = band;
        auto sol = twf::disk::solve_rh(prob, cfg.radial_resolution);
        write_output(twf::io::rh_solution_to_json(sol), output_path);
        return 0;
    }

    if (*extend) {
        auto series = twf::io::fourier_series_from_json(read_json_file(input_path));
        auto ext = twf::disk::extend_disk(series, cfg.tolerance);
        json out{{"schema", "twistorfill/disk-extension/1"},
                 {"taylor", twf::io::disk_function_to_json(ext.f)},
                 {"sup_bound", ext.sup_bound}};
        write_output(out, output_path);
        return 0;
    }

    if (*coho) {
        if (quat_m > 0) {
            auto rep = twf::coh::quaternionic_vanishing(quat_m, std::max(1, cfg.cutoff));
            json entries = json::array();
            for (const auto& e : rep.entries)
                entries.push_back(json{{"k", e.k},
                                       {"scalar_vanishes", e.scalar_vanishes},
                                       {"tangent_vanishes", e.tangent_vanishes}});
            write_output(json{{"schema", "twistorfill/quaternionic/1"},
                              {"m", rep.m},
                              {"entries", entries},
                              {"all_vanish", rep.all_vanish}},
                         output_path);
            return rep.all_vanish ? 0 : 1;
        }
        if (base != "P1xP1") throw twf::io::SchemaError("cohomology: base must be P1xP1");
        auto dot = range.find("..");
        if (dot == std::string::npos)
            throw twf::io::SchemaError("cohomology: --range expects a..b");
        int kmin = std::stoi(range.substr(0, dot));
        int kmax = std::stoi(range.substr(dot + 2));
        auto rows = twf::coh::circle_bundle_decomposition(
            twf::coh::descent_bundle_from_string(bundle), kmin, kmax);
        json table = json::array();
        for (const auto& r : rows) {
            if (qdeg >= 0)
                table.push_back(json{{"k", r.k}, {"q", qdeg}, {"dim", r.h[std::size_t(qdeg)]}});
            else
                table.push_back(
                    json{{"k", r.k}, {"h0", r.h[0]}, {"h1", r.h[1]}, {"h2", r.h[2]}});
        }
        write_output(json{{"schema", "twistorfill/cohomology/1"},
                          {"bundle", bundle},
                          {"table", table}},
                     output_path);
        return 0;
    }

    if (*prank) {
        std::vector<std::pair<int, int>> reps;
        for (int K = 0; K <= cfg.cutoff; ++K)
            for (int L = 0; L <= cfg.cutoff; ++L)
                if ((K + L) % 2 == 0) reps.emplace_back(K, L);
        std::vector<twf::fill::RankCertificate> certs(reps.size());
        twf::parallel_for(static_cast<int>(reps.size()), cfg.effective_threads(), [&](int i) {
            certs[std::size_t(i)] =
                twf::fill::verify_p_surjectivity(reps[std::size_t(i)].first,
                                                 reps[std::size_t(i)].second);
        });
        json out = json::array();
        bool all = true;
        for (const auto& c : certs) {
            out.push_back(twf::io::rank_certificate_to_json(c));
            all = all && c.surjective_onto_compatible;
        }
        write_output(json{{"schema", "twistorfill/p-rank/1"},
                          {"cutoff", cfg.cutoff},
                          {"all_surjective", all},
                          {"certificates", out}},
                     output_path);
        return all ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const twf::io::SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const twf::fill::ConstraintViolation& e) {
        std::cerr << "constraint violation: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
