#include "maslovlab/stein.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "maslovlab/dynamics.hpp"
#include "maslovlab/errors.hpp"

namespace maslovlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

double norm(const C3& z) {
    return std::sqrt(std::norm(z.z1) + std::norm(z.z2) + std::norm(z.z3));
}

double moment_map_c3(const C3& z) { return std::imag(z.z1 * std::conj(z.z2)); }

double omega_c3(const C3& u, const C3& v) {
    return std::imag(std::conj(u.z1) * v.z1) + std::imag(std::conj(u.z2) * v.z2) +
           std::imag(std::conj(u.z3) * v.z3);
}

complexd cpow_int(complexd z, int m) {
    complexd acc{1, 0};
    for (int i = 0; i < m; ++i) acc *= z;
    return acc;
}

complexd wn_residual(const C3& z, int n) {
    return z.z1 * z.z1 + z.z2 * z.z2 + cpow_int(z.z3, n + 1) - 1.0;
}

bool is_on_surface(const WnPoint& p, double tolerance) {
    return std::abs(wn_residual(p.z, p.n)) <= tolerance;
}

WnPoint project_to_wn(const C3& z, int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    C3 cur = z;
    for (int iter = 0; iter < 50; ++iter) {
        const complexd f = wn_residual(cur, n);
        if (std::abs(f) < 1e-12) return {cur, n};
        const complexd g1 = 2.0 * cur.z1;
        const complexd g2 = 2.0 * cur.z2;
        const complexd g3 = static_cast<double>(n + 1) * cpow_int(cur.z3, n);
        const double g_sq = std::norm(g1) + std::norm(g2) + std::norm(g3);
        if (std::sqrt(g_sq) <= 1e-8)
            throw SingularGradient("defining polynomial has vanishing gradient here");
        const complexd scale = -f / g_sq;
        cur.z1 += scale * std::conj(g1);
        cur.z2 += scale * std::conj(g2);
        cur.z3 += scale * std::conj(g3);
    }
    throw NoConvergence("Newton projection did not reach |residual| < 1e-12 in 50 steps");
}

WnPoint group_action(double theta, const WnPoint& p) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {{p.z.z1 * c - p.z.z2 * s, p.z.z1 * s + p.z.z2 * c, p.z.z3}, p.n};
}

complexd reduction_map(const WnPoint& p) { return p.z.z3; }

WnPoint fixed_point(int n, int k) {
    return {{complexd{0, 0}, complexd{0, 0}, std::polar(1.0, 2.0 * kPi * k / (n + 1))}, n};
}

std::vector<WnPoint> fixed_points(int n) {
    std::vector<WnPoint> pts;
    pts.reserve(n + 1);
    for (int k = 0; k <= n; ++k) pts.push_back(fixed_point(n, k));
    return pts;
}

SphereSample sample_sphere(int n, int k, int resolution) {
    if (k < 1 || k > n) throw InvalidIndex("sphere index k must satisfy 1 <= k <= n");
    if (resolution < 8) throw std::invalid_argument("resolution must be >= 8");
    SphereSample sample;
    sample.n = n;
    sample.k = k;
    sample.resolution = resolution;
    const double phi_lo = 2.0 * kPi * (k - 1) / (n + 1);
    const double phi_hi = 2.0 * kPi * k / (n + 1);
    for (int j = 0; j < resolution; ++j)
        sample.phi.push_back(phi_lo + (phi_hi - phi_lo) * j / (resolution - 1));
    for (int i = 0; i < resolution; ++i) sample.s.push_back(2.0 * kPi * i / resolution);

    sample.points.reserve(static_cast<std::size_t>(resolution) * resolution);
    for (int j = 0; j < resolution; ++j) {
        if (j == 0 || j == resolution - 1) {
            // branch collapse: the arc endpoint rows are the poles themselves
            const WnPoint pole = fixed_point(n, j == 0 ? k - 1 : k);
            for (int i = 0; i < resolution; ++i) sample.points.push_back(pole);
            continue;
        }
        const complexd z3 = std::polar(1.0, sample.phi[j]);
        // z3^{n+1} on the unit circle, evaluated in polar form
        const complexd a = std::sqrt(1.0 - std::polar(1.0, (n + 1) * sample.phi[j]));
        for (int i = 0; i < resolution; ++i) {
            const double cs = std::cos(sample.s[i]), sn = std::sin(sample.s[i]);
            sample.points.push_back({{a * cs, a * sn, z3}, n});
        }
    }
    return sample;
}

double check_lagrangian_sphere(const SphereSample& sample) {
    const int res = sample.resolution;
    if (res < 16) throw std::invalid_argument("resolution must be >= 16 for the tangency check");
    const double dphi = sample.phi[1] - sample.phi[0];
    const double ds = sample.s[1] - sample.s[0];
    double worst = 0.0;
    for (int j = 1; j + 1 < res; ++j) {
        for (int i = 0; i < res; ++i) {
            const int ip = (i + 1) % res, im = (i + res - 1) % res;
            const C3& pj_plus = sample.at(j + 1, i).z;
            const C3& pj_minus = sample.at(j - 1, i).z;
            const C3& pi_plus = sample.at(j, ip).z;
            const C3& pi_minus = sample.at(j, im).z;
            const C3 t_phi = (pj_plus + pj_minus * -1.0) * (1.0 / (2.0 * dphi));
            const C3 t_s = (pi_plus + pi_minus * -1.0) * (1.0 / (2.0 * ds));
            worst = std::max(worst, std::abs(omega_c3(t_phi, t_s)));
        }
    }
    return worst;
}

std::pair<int, int> riemann_surface_profile(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    const int g = n / 2;
    return {g, (n + 1) - 2 * g};
}

std::vector<C3> integrate_ambient_gradient(const C3& z0, double T, double dt) {
    if (!(dt > 0) || !(T / dt <= 1e7)) throw std::invalid_argument("bad step configuration");
    // gradient of Im(z1 conj z2) in the real coordinates of C^3: the C^2
    // formula in (z1, z2), no z3 component.
    auto field = [](const C3& z) {
        const Vec4 p = vec_of(z.z1, z.z2);
        const Vec4 g = gradient_field(p, 1);
        return C3{z1_of(g), z2_of(g), complexd{0, 0}};
    };
    const auto steps = static_cast<std::size_t>(std::llround(T / dt));
    std::vector<C3> states;
    states.reserve(steps + 1);
    states.push_back(z0);
    C3 cur = z0;
    for (std::size_t i = 0; i < steps; ++i) {
        cur = rk4_step(field, cur, dt);
        if (norm(cur) > 1e6) break;
        states.push_back(cur);
    }
    return states;
}

nlohmann::json sphere_to_json(const SphereSample& sample) {
    nlohmann::json points = nlohmann::json::array();
    for (const WnPoint& p : sample.points)
        points.push_back({p.z.z1.real(), p.z.z1.imag(), p.z.z2.real(), p.z.z2.imag(),
                          p.z.z3.real(), p.z.z3.imag()});
    return {{"schema", "sphere/1"},
            {"n", sample.n},
            {"k", sample.k},
            {"resolution", sample.resolution},
            {"points", std::move(points)}};
}

nlohmann::json ambient_trajectory_to_json(const std::vector<C3>& states, double dt) {
    nlohmann::json arr = nlohmann::json::array();
    for (const C3& z : states)
        arr.push_back({z.z1.real(), z.z1.imag(), z.z2.real(), z.z2.imag(), z.z3.real(), z.z3.imag()});
    return {{"schema", "traj/1"}, {"field", "gradient"}, {"dt", dt}, {"states", std::move(arr)}};
}

}  // namespace maslovlab
