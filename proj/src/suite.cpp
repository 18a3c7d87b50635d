#include "maslovlab/suite.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "maslovlab/dynamics.hpp"
#include "maslovlab/errors.hpp"
#include "maslovlab/geometry.hpp"
#include "maslovlab/maslov.hpp"
#include "maslovlab/parallel.hpp"
#include "maslovlab/stein.hpp"
#include "maslovlab/topology.hpp"

namespace maslovlab {

namespace {

constexpr double kPi = std::numbers::pi;

struct SuiteBuilder {
    SuiteReport rep;

    explicit SuiteBuilder(std::string name, std::uint64_t seed) {
        rep.suite = std::move(name);
        rep.seed = seed;
    }

    void check(std::string name, double measured, double tolerance, std::string citation) {
        const bool ok = std::isfinite(measured) && measured <= tolerance;
        rep.checks.push_back({std::move(name), ok ? "pass" : "fail", measured, tolerance,
                              std::move(citation)});
    }

    void check_count(std::string name, long violations, std::string citation) {
        check(std::move(name), static_cast<double>(violations), 0.0, std::move(citation));
    }
};

Vec4 random_in_ball(std::mt19937_64& rng, double radius = 1.0) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vec4 p;
    do {
        p = {u(rng), u(rng), u(rng), u(rng)};
    } while (dot(p, p) > 1.0 || dot(p, p) < 1e-6);
    return p * radius;
}

// Point of the span of (a, b) with norm in [lo, hi].
Vec4 random_on_plane(std::mt19937_64& rng, const Vec4& a, const Vec4& b, double lo, double hi) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> rad(lo, hi);
    const double t = ang(rng);
    Vec4 p = a * std::cos(t) + b * std::sin(t);
    return p * (rad(rng) / norm(p));
}

double max_entry_diff(const Mat4& a, const Mat4& b) {
    double worst = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    return worst;
}

const Mat4 kHessian{{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}};

// 1e-12-quantized key of a C^3 point, for exact mesh intersection tests.
std::array<long long, 6> quantize(const C3& z) {
    auto q = [](double x) { return std::llround(x * 1e12); };
    return {q(z.z1.real()), q(z.z1.imag()), q(z.z2.real()),
            q(z.z2.imag()), q(z.z3.real()), q(z.z3.imag())};
}

}  // namespace

bool SuiteReport::all_passed() const {
    for (const CheckResult& c : checks)
        if (c.status == "fail") return false;
    return true;
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& c : checks)
        arr.push_back({{"name", c.name},
                       {"status", c.status},
                       {"measured", c.measured},
                       {"tolerance", c.tolerance},
                       {"citation", c.citation}});
    return {{"schema", "report/1"},
            {"suite", suite},
            {"seed", seed},
            {"pass", all_passed()},
            {"checks", std::move(arr)}};
}

std::string SuiteReport::summary() const {
    std::ostringstream out;
    int failed = 0;
    for (const CheckResult& c : checks) {
        if (c.status == "fail") ++failed;
        out << (c.status == "pass" ? "  ok   " : c.status == "skip" ? "  skip " : "  FAIL ")
            << c.name << "  (measured " << c.measured << ", bound " << c.tolerance << ")  "
            << c.citation << "\n";
    }
    out << "suite " << suite << ": " << (checks.size() - failed) << "/" << checks.size()
        << " checks passed\n";
    return out.str();
}

SuiteReport run_example22_suite(std::uint64_t seed, double dt) {
    SuiteBuilder b("example22", seed);
    std::mt19937_64 rng(seed);

    const HessianReport hess = hessian_at_origin(1);
    b.check("hessian-matrix", max_entry_diff(hess.matrix, kHessian), 0.0,
            "Hess_0 h has -1 at (x1,y2) and +1 at (x2,y1), symmetric");
    const std::array<double, 4> lam{-1, -1, 1, 1};
    double lam_err = 0;
    for (int i = 0; i < 4; ++i) lam_err = std::max(lam_err, std::abs(hess.eigenvalues[i] - lam[i]));
    b.check("hessian-eigenvalues", lam_err, 1e-12, "eigenvalues of Hess_0 h are (-1,-1,1,1)");
    b.check_count("morse-index", std::abs(hess.morse_index - 2), "Morse index at the origin is 2");

    const LagrangianFrame neg_expect{{1, 0, 0, 1}, {0, -1, 1, 0}};  // dx1+dy2, dy1-dx2
    const LagrangianFrame pos_expect{{1, 0, 0, -1}, {0, 1, 1, 0}};  // dx1-dy2, dy1+dx2
    b.check("eigenspace-negative",
            plane_distance({hess.neg_eigenspace.a, hess.neg_eigenspace.b}, neg_expect), 1e-9,
            "E_{-1} = span{dx1+dy2, dy1-dx2} = {z1 + i z2 = 0}");
    b.check("eigenspace-positive",
            plane_distance({hess.pos_eigenspace.a, hess.pos_eigenspace.b}, pos_expect), 1e-9,
            "E_{+1} = span{dx1-dy2, dy1+dx2} = {z1 - i z2 = 0}");
    const double sym_neg = std::abs(omega_eval(hess.neg_eigenspace.a, hess.neg_eigenspace.b));
    const double sym_pos = std::abs(omega_eval(hess.pos_eigenspace.a, hess.pos_eigenspace.b));
    b.check("eigenspaces-symplectic", 0.5 - std::min(sym_neg, sym_pos), 0.0,
            "both eigenplanes are omega-symplectic: |omega(e1,e2)| > 0.5");

    double worst_moment = 0, worst_liouville = 0;
    for (int i = 0; i < 100; ++i) {
        const Vec4 p = random_in_ball(rng);
        worst_moment = std::max(worst_moment, verify_moment_identity(p, 1e-5));
        worst_liouville = std::max(worst_liouville, verify_liouville_identity(p));
    }
    b.check("moment-identity", worst_moment, 1e-8, "omega(X, .) = -dh at 100 random points");
    b.check("liouville-identity", worst_liouville, 1e-12,
            "lambda0(X) = h at 100 random points");

    {
        const Vec4 start{1, 0, 0, 1};  // (z1, z2) = (1, i)
        const FlowTrajectory traj = integrate_flow(FieldKind::GradientField, start, 5.0, dt);
        const double decay = std::exp(-5.0);
        const Vec4 expect{decay, 0, 0, decay};
        b.check("gradient-flow-stable-ray", norm(traj.states.back() - expect), 2e-3,
                "flow of grad h through (1, i) is t -> (e^-t, i e^-t)");
    }
    {
        const Vec4 start{1, 0, 0, -1};  // (z1, z2) = (1, -i)
        const FlowTrajectory traj = integrate_flow(FieldKind::GradientField, start, 5.0, dt);
        const double expect = std::exp(5.0) * std::sqrt(2.0);
        b.check("gradient-flow-unstable-ray",
                std::abs(norm(traj.states.back()) - expect) / expect, 1e-2,
                "flow of grad h through (1, -i) is t -> (e^t, -i e^t)");
    }
    {
        const Vec4 start{1, 0, 0, 0};
        const auto steps = std::max<long long>(8, std::llround(2.0 * kPi / dt));
        const FlowTrajectory traj =
            integrate_flow(FieldKind::HamiltonianField, start, 2.0 * kPi, 2.0 * kPi / steps);
        b.check("hamiltonian-flow-periodic", norm(traj.states.back() - start), 1e-6,
                "the X-orbit of (1, 0) closes after one turn");
        double h_drift = 0;
        for (const Vec4& s : traj.states)
            h_drift = std::max(h_drift, std::abs(moment_map(s) - moment_map(start)));
        b.check("energy-conservation", h_drift, 1e-8, "h is constant along X-trajectories");
    }
    {
        const Vec4 p = random_in_ball(rng, 0.8);
        const FlowTrajectory traj = integrate_flow(FieldKind::GradientField, p, 5.0, dt);
        double worst_drop = 0;
        for (std::size_t i = 1; i < traj.states.size(); ++i)
            worst_drop = std::max(worst_drop, moment_map(traj.states[i - 1]) -
                                                  moment_map(traj.states[i]));
        b.check("gradient-monotonicity", worst_drop, 1e-12,
                "h is non-decreasing along grad-h trajectories");
    }
    {
        std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
        double worst = 0;
        for (int i = 0; i < 5; ++i) {
            const Vec4 p = random_in_ball(rng, 0.8);
            const double theta = ang(rng);
            for (FieldKind kind : {FieldKind::HamiltonianField, FieldKind::GradientField}) {
                const Vec4 a =
                    integrate_flow(kind, model_rotation(p, theta), 1.0, dt).states.back();
                const Vec4 c =
                    model_rotation(integrate_flow(kind, p, 1.0, dt).states.back(), theta);
                worst = std::max(worst, norm(a - c));
            }
        }
        b.check("flow-equivariance", worst, 1e-8,
                "rotating then flowing equals flowing then rotating");
    }
    {
        const Vec4 e_minus_a{1, 0, 0, 1}, e_minus_b{0, -1, 1, 0};
        const Vec4 e_plus_a{1, 0, 0, -1}, e_plus_b{0, 1, 1, 0};
        long bad = 0;
        for (int i = 0; i < 50; ++i) {
            if (stable_manifold_test(random_on_plane(rng, e_minus_a, e_minus_b, 0.1, 5.0)) !=
                ManifoldClass::Stable)
                ++bad;
            if (stable_manifold_test(random_on_plane(rng, e_plus_a, e_plus_b, 0.1, 5.0)) !=
                ManifoldClass::Unstable)
                ++bad;
        }
        b.check_count("invariant-plane-classification", bad,
                      "{z1+iz2=0} flows to 0, {z1-iz2=0} escapes");
        b.check_count("off-plane-classification",
                      stable_manifold_test({1, 0, 0, 0}) == ManifoldClass::Unstable ? 0 : 1,
                      "(1,0) has an unstable component, so its norm crosses 10");
    }
    {
        const LagrangianFrame real_plane{{1, 0, 0, 0}, {0, 1, 0, 0}};
        b.check_count("maslov-constant", std::abs(maslov_index(constant_loop(real_plane)).index),
                      "a constant plane field has index 0");
        const LagrangianLoop orbit = orbit_lagrangian_loop({1, 0, 0, 0}, {-1, 0, 0, 0}, 1);
        b.check_count("maslov-orbit", std::abs(maslov_index(orbit).index),
                      "the orbit plane field through (1,0) is the constant real plane");
        auto central = [](double t) {
            const complexd u = std::polar(1.0, 2.0 * kPi * t);
            return Mat2c{u, 0, 0, u};
        };
        b.check_count("maslov-central",
                      std::abs(maslov_index(loop_from_unitary_family(central, 64)).index - 4),
                      "deg det^2 of e^{it} I is 4");
        auto central_inv = [](double t) {
            const complexd u = std::polar(1.0, -2.0 * kPi * t);
            return Mat2c{u, 0, 0, u};
        };
        b.check_count("maslov-central-inverse",
                      std::abs(maslov_index(loop_from_unitary_family(central_inv, 64)).index + 4),
                      "deg det^2 of e^{-it} I is -4");
    }
    return b.rep;
}

SuiteReport run_wn_suite(std::uint64_t seed, int n_max, int resolution) {
    SuiteBuilder b("wn", seed);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);

    for (int n = 0; n <= n_max; ++n) {
        const std::string tag = "n" + std::to_string(n);
        const std::vector<WnPoint> fps = fixed_points(n);

        double fp_res = 0;
        long fp_bad = fps.size() == static_cast<std::size_t>(n + 1) ? 0 : 1;
        for (int k = 0; k <= n; ++k) {
            const WnPoint& p = fps[k];
            if (std::abs(p.z.z1) != 0.0 || std::abs(p.z.z2) != 0.0) ++fp_bad;
            if (std::abs(p.z.z3 - std::polar(1.0, 2.0 * kPi * k / (n + 1))) != 0.0) ++fp_bad;
            fp_res = std::max(fp_res, std::abs(wn_residual(p.z, n)));
            const WnPoint moved = group_action(ang(rng), p);
            if (norm(moved.z + p.z * -1.0) != 0.0) ++fp_bad;
        }
        b.check_count("fixed-points-" + tag, fp_bad,
                      "Fix = {(0,0,xi^k)}, xi = exp(2 pi i/(n+1)), each action-fixed");
        b.check("fixed-points-residual-" + tag, fp_res, tol::surface,
                "every fixed point satisfies the defining equation");

        double act_res = 0, act_h = 0, red_shift = 0;
        for (int trial = 0; trial < 20; ++trial) {
            const C3 raw{complexd{ang(rng) - kPi, ang(rng) - kPi} * 0.3,
                         complexd{ang(rng) - kPi, ang(rng) - kPi} * 0.3,
                         complexd{ang(rng) - kPi, ang(rng) - kPi} * 0.3};
            const WnPoint p = project_to_wn(raw, n);
            const double theta = ang(rng);
            const WnPoint q = group_action(theta, p);
            act_res = std::max(act_res, std::abs(std::abs(wn_residual(q.z, n)) -
                                                 std::abs(wn_residual(p.z, n))));
            act_h = std::max(act_h, std::abs(moment_map_c3(q.z) - moment_map_c3(p.z)));
            red_shift = std::max(red_shift, std::abs(reduction_map(q) - reduction_map(p)));
        }
        b.check("action-preserves-constraint-" + tag, act_res, 1e-12,
                "z1^2 + z2^2 is rotation invariant, so the residual is unchanged");
        b.check("action-preserves-moment-" + tag, act_h, 1e-12,
                "Im(z1 conj z2) is invariant under the rotation");
        b.check("reduction-equivariance-" + tag, red_shift, 0.0,
                "z3 is untouched by the action");

        std::pair<int, int> gb = riemann_surface_profile(n);
        b.check_count("reduced-surface-" + tag,
                      std::abs(gb.first - n / 2) + std::abs(gb.second - ((n + 1) - 2 * (n / 2))),
                      "(g, b) = (floor(n/2), n+1-2 floor(n/2))");
    }

    // sphere checks are independent per (n, k); fan out and append in order
    struct SphereChecks {
        int n = 0, k = 0;
        double residual = 0, moment = 0, lagrangian = 0, endpoint = 0;
    };
    std::vector<SphereChecks> slots;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k) slots.push_back({n, k, 0, 0, 0, 0});
    parallel_for(slots.size(), [&](std::size_t idx) {
        SphereChecks& sc = slots[idx];
        const SphereSample sample = sample_sphere(sc.n, sc.k, resolution);
        for (const WnPoint& p : sample.points) {
            sc.residual = std::max(sc.residual, std::abs(wn_residual(p.z, sc.n)));
            sc.moment = std::max(sc.moment, std::abs(moment_map_c3(p.z)));
        }
        sc.lagrangian = check_lagrangian_sphere(sample);
        const WnPoint lo = fixed_point(sc.n, sc.k - 1), hi = fixed_point(sc.n, sc.k);
        for (int i = 0; i < resolution; ++i) {
            sc.endpoint = std::max(sc.endpoint, norm(sample.at(0, i).z + lo.z * -1.0));
            sc.endpoint =
                std::max(sc.endpoint, norm(sample.at(resolution - 1, i).z + hi.z * -1.0));
        }
    });
    for (const SphereChecks& sc : slots) {
        const std::string tag = "n" + std::to_string(sc.n) + "-k" + std::to_string(sc.k);
        b.check("sphere-residual-" + tag, sc.residual, 1e-10,
                "every mesh point satisfies the defining equation");
        b.check("sphere-moment-" + tag, sc.moment, 1e-10, "the sphere lies in h^{-1}(0)");
        b.check("sphere-lagrangian-" + tag, sc.lagrangian, 1e-6,
                "omega(d/dphi, d/ds) = 0 on the sphere");
        b.check("sphere-endpoints-" + tag, sc.endpoint, 0.0,
                "the arc endpoints collapse to the poles p_{k-1}, p_k");
    }

    // adjacency: consecutive spheres meet exactly in the shared pole
    for (int n = 2; n <= n_max; ++n) {
        long bad = 0;
        std::vector<SphereSample> spheres;
        for (int k = 1; k <= n; ++k) spheres.push_back(sample_sphere(n, k, resolution));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::set<std::array<long long, 6>> seen;
                for (const WnPoint& p : spheres[i].points) seen.insert(quantize(p.z));
                std::set<std::array<long long, 6>> shared;
                for (const WnPoint& p : spheres[j].points)
                    if (seen.count(quantize(p.z))) shared.insert(quantize(p.z));
                if (j == i + 1) {
                    if (shared.size() != 1 || *shared.begin() != quantize(fixed_point(n, j).z))
                        ++bad;
                } else if (!shared.empty()) {
                    ++bad;
                }
            }
        b.check_count("sphere-adjacency-n" + std::to_string(n), bad,
                      "S_k meets S_{k+1} exactly in p_k; non-neighbours are disjoint");
    }

    // Morse data at the fixed points: the moment map is independent of z3,
    // so its Hessian on the tangent plane C^2_{z1 z2} is the model one.
    {
        double worst = 0;
        const double h = 1e-2;
        const Mat4 model = hessian_at_origin(1).matrix;
        for (int n = 0; n <= n_max; ++n)
            for (int k = 0; k <= n; ++k) {
                const WnPoint p = fixed_point(n, k);
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) {
                        auto shift = [&](double si, double sj) {
                            Vec4 q{0, 0, 0, 0};
                            q[i] += si;
                            q[j] += sj;
                            return moment_map_c3(
                                {p.z.z1 + complexd(q.x1, q.y1), p.z.z2 + complexd(q.x2, q.y2),
                                 p.z.z3});
                        };
                        const double dij = (shift(h, h) - shift(h, -h) - shift(-h, h) +
                                            shift(-h, -h)) / (4 * h * h);
                        worst = std::max(worst, std::abs(dij - model[i][j]));
                    }
            }
        b.check("fixed-point-morse-data", worst, 1e-9,
                "tangent Hessian at each p_k equals the model Hessian (index 2)");
    }
    return b.rep;
}

SuiteReport run_topology_suite(std::uint64_t seed) {
    SuiteBuilder b("topology", seed);
    long bad = 0;
    for (int n = 0; n <= 20; ++n)
        for (int g = 0; g <= 20; ++g)
            for (int bb = 1; bb <= 20; ++bb) {
                const SpaceProfile p{n, g, bb};
                const HandleInventory inv = handle_decomposition(p);
                const HomologyProfile hom = homology(p);
                const int loops = 2 * g + bb - 1;
                if (inv.zero_handles != 1 || inv.one_handles != loops ||
                    inv.two_handles != n + loops)
                    ++bad;
                for (int f : inv.two_handle_framings)
                    if (f != -1) ++bad;
                if (hom.ranks != std::array<int, 5>{1, loops, loops + n, 0, 0}) ++bad;
                const int euler = euler_characteristic(p);
                if (euler != n + 1) ++bad;
                if (euler != inv.zero_handles - inv.one_handles + inv.two_handles) ++bad;
                if ((hom.ranks[1] == 0) != (g == 0 && bb == 1)) ++bad;
            }
    b.check_count("profile-grid", bad,
                  "handles (1, 2g+b-1, n+2g+b-1), ranks (1, 2g+b-1, 2g+b-1+n), euler = n+1");

    b.check_count("framing-winding-disc",
                  std::abs(framing_winding(gradient_contact_framing, {1.0, 0.0}) - 1),
                  "grad h makes one positive turn against dy1 along the attaching circle");
    b.check_count("framing-winding-annulus", std::abs(framing_winding_2handle(0.5) - 1),
                  "the annulus-case contact framing also winds +1");
    auto reversed = [](double t) { return gradient_contact_framing(2.0 * kPi - t); };
    b.check_count("framing-winding-reversed",
                  std::abs(framing_winding(reversed, {1.0, 0.0}) + 1),
                  "reversing the attaching circle negates the winding");
    auto constant_field = [](double) { return std::array<double, 2>{0.3, 0.4}; };
    b.check_count("framing-winding-constant",
                  std::abs(framing_winding(constant_field, {1.0, 0.0})),
                  "a constant field does not wind");
    return b.rep;
}

SuiteReport run_all_suites(std::uint64_t seed) {
    SuiteReport all;
    all.suite = "all";
    all.seed = seed;
    for (const SuiteReport& part :
         {run_example22_suite(seed), run_wn_suite(seed), run_topology_suite(seed)}) {
        for (const CheckResult& c : part.checks) {
            CheckResult prefixed = c;
            prefixed.name = part.suite + "/" + c.name;
            all.checks.push_back(std::move(prefixed));
        }
    }
    return all;
}

}  // namespace maslovlab
