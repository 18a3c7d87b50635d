// maslov-lab: compute Maslov indices of Lagrangian loops, run the
// verification suites, and sample the invariant Lagrangian spheres of the
// surfaces z1^2 + z2^2 + z3^{n+1} = 1.
//
// Exit codes: 0 pass, 1 check failure, 2 input error, 3 numeric
// non-convergence, 4 I/O error.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "maslovlab/dynamics.hpp"
#include "maslovlab/errors.hpp"
#include "maslovlab/maslov.hpp"
#include "maslovlab/stein.hpp"
#include "maslovlab/suite.hpp"
#include "maslovlab/topology.hpp"

namespace {

using maslovlab::SuiteReport;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitIoError = 4;

int run_maslov(const std::string& path, double plane_tol, std::size_t n_max) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return kExitIoError;
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid JSON: " << e.what() << "\n";
        return kExitInputError;
    }
    const maslovlab::LagrangianLoop loop = maslovlab::loop_from_json(doc, plane_tol);
    const maslovlab::MaslovResult res = maslovlab::maslov_index(loop, n_max);
    std::cout << "index: " << res.index << "\n"
              << "samples_used: " << res.samples_used << "\n"
              << "max_phase_step: " << res.max_phase_step << "\n";
    return kExitPass;
}

int run_verify(const std::string& which, std::uint64_t seed, int resolution, double dt,
               const std::string& out_path, const std::string& format) {
    SuiteReport report;
    if (which == "example22")
        report = maslovlab::run_example22_suite(seed, dt);
    else if (which == "wn")
        report = maslovlab::run_wn_suite(seed, 5, resolution);
    else if (which == "topology")
        report = maslovlab::run_topology_suite(seed);
    else if (which == "all")
        report = maslovlab::run_all_suites(seed);
    else {
        std::cerr << "unknown suite '" << which << "' (example22|wn|topology|all)\n";
        return kExitInputError;
    }

    if (format == "json")
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.summary();
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return kExitIoError;
        }
        out << report.to_json().dump(2) << "\n";
    }
    return report.all_passed() ? kExitPass : kExitCheckFailure;
}

int write_or_print(const nlohmann::json& doc, const std::string& out_path) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return kExitPass;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return kExitIoError;
    }
    out << text;
    return out.good() ? kExitPass : kExitIoError;
}

int run_profile(int n, int g, int b, const std::string& out_path) {
    return write_or_print(maslovlab::profile_report_json({n, g, b}), out_path);
}

int run_flow(const std::string& field, const std::vector<double>& start, double T, double dt,
             int weight, const std::string& out_path) {
    const maslovlab::Vec4 p0{start[0], start[1], start[2], start[3]};
    const maslovlab::FieldKind kind = field == "hamiltonian"
                                          ? maslovlab::FieldKind::HamiltonianField
                                          : maslovlab::FieldKind::GradientField;
    const maslovlab::FlowTrajectory traj = maslovlab::integrate_flow(kind, p0, T, dt, weight);
    return write_or_print(maslovlab::trajectory_to_json(traj), out_path);
}

int run_sample(int n, int k, int resolution, const std::string& out_path) {
    return write_or_print(maslovlab::sphere_to_json(maslovlab::sample_sphere(n, k, resolution)),
                          out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for the model Hamiltonian circle actions"};
    app.require_subcommand(1);

    std::string loop_path;
    double loop_tol = maslovlab::tol::frame;
    std::size_t n_max = std::size_t{1} << 20;
    CLI::App* maslov = app.add_subcommand("maslov", "Maslov index of a loop/1 file");
    maslov->add_option("loop_file", loop_path, "path to a loop/1 JSON document")->required();
    maslov->add_option("--tol", loop_tol, "plane-closure tolerance for the loop reader")
        ->check(CLI::Range(1e-15, 1e-3));
    maslov->add_option("--n-max", n_max, "refinement cap for generator-backed loops");

    std::string suite_name = "all";
    std::uint64_t seed = 20260808;
    int verify_resolution = 64;
    double verify_dt = 1e-3;
    std::string out_path;
    std::string format = "text";
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite_name, "example22|wn|topology|all");
    verify->add_option("--seed", seed, "seed for the randomized sweeps");
    verify->add_option("--resolution", verify_resolution, "sphere mesh resolution");
    verify->add_option("--dt", verify_dt, "RK4 step for the flow checks")
        ->check(CLI::Range(1e-6, 1e-1));
    verify->add_option("--out", out_path, "write the JSON report here");
    verify->add_option("--format", format, "stdout format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    int sample_n = 1, sample_k = 1, sample_resolution = 32;
    std::string sample_out;
    CLI::App* sample = app.add_subcommand("sample", "sample a Lagrangian sphere to sphere/1 JSON");
    sample->add_option("-n", sample_n, "surface index n")->required();
    sample->add_option("-k", sample_k, "sphere index, 1 <= k <= n")->required();
    sample->add_option("--resolution", sample_resolution, "mesh points per axis");
    sample->add_option("--out", sample_out, "output path ('-' for stdout)");

    int profile_n = 0, profile_g = 0, profile_b = 1;
    std::string profile_out;
    CLI::App* profile = app.add_subcommand("profile", "emit a profile/1 report for (n, g, b)");
    profile->add_option("n", profile_n, "fixed points minus one")->required();
    profile->add_option("g", profile_g, "genus of the reduced surface")->required();
    profile->add_option("b", profile_b, "boundary components")->required();
    profile->add_option("--out", profile_out, "output path ('-' for stdout)");

    std::string flow_field = "gradient";
    std::vector<double> flow_start{1, 0, 0, 0};
    double flow_T = 5.0, flow_dt = 1e-3;
    int flow_weight = 1;
    std::string flow_out;
    CLI::App* flow = app.add_subcommand("flow", "integrate a field to a traj/1 document");
    flow->add_option("field", flow_field, "hamiltonian|gradient")
        ->check(CLI::IsMember({"hamiltonian", "gradient"}));
    flow->add_option("--start", flow_start, "initial point x1 x2 y1 y2")->expected(4);
    flow->add_option("--T", flow_T, "integration time");
    flow->add_option("--dt", flow_dt, "RK4 step");
    flow->add_option("--weight", flow_weight, "action weight");
    flow->add_option("--out", flow_out, "output path ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInputError;
    }

    try {
        if (maslov->parsed()) return run_maslov(loop_path, loop_tol, n_max);
        if (verify->parsed())
            return run_verify(suite_name, seed, verify_resolution, verify_dt, out_path, format);
        if (sample->parsed()) return run_sample(sample_n, sample_k, sample_resolution, sample_out);
        if (profile->parsed()) return run_profile(profile_n, profile_g, profile_b, profile_out);
        if (flow->parsed())
            return run_flow(flow_field, flow_start, flow_T, flow_dt, flow_weight, flow_out);
    } catch (const maslovlab::PhaseStepTooLarge& e) {
        std::cerr << "non-convergent: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const maslovlab::NoConvergence& e) {
        std::cerr << "non-convergent: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const maslovlab::SingularGradient& e) {
        std::cerr << "non-convergent: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const maslovlab::Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
