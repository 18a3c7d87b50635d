#include "maslovlab/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "maslovlab/errors.hpp"

namespace maslovlab {

double moment_map(const Vec4& p, int weight) {
    return weight * (p.x2 * p.y1 - p.x1 * p.y2);
}

Vec4 hamiltonian_field(const Vec4& p, int weight) {
    return Vec4{-p.x2, p.x1, -p.y2, p.y1} * static_cast<double>(weight);
}

Vec4 gradient_field(const Vec4& p, int weight) {
    return Vec4{-p.y2, p.y1, p.x2, -p.x1} * static_cast<double>(weight);
}

Vec4 liouville_covector(const Vec4& p) {
    return {-0.5 * p.y1, -0.5 * p.y2, 0.5 * p.x1, 0.5 * p.x2};
}

std::variant<double, Vec4> eval_field(FieldKind kind, const Vec4& p, int weight) {
    switch (kind) {
        case FieldKind::MomentMap: return moment_map(p, weight);
        case FieldKind::HamiltonianField: return hamiltonian_field(p, weight);
        case FieldKind::GradientField: return gradient_field(p, weight);
        default: return liouville_covector(p);
    }
}

double liouville_pairing(const Vec4& p, const Vec4& w) {
    return dot(liouville_covector(p), w);
}

double verify_moment_identity(const Vec4& p, double fd_step, int weight) {
    if (!(fd_step > 1e-8 && fd_step < 1e-2))
        throw std::invalid_argument("fd_step must lie in (1e-8, 1e-2)");
    const Vec4 xp = hamiltonian_field(p, weight);
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        Vec4 e{};
        e[i] = 1.0;
        Vec4 fwd = p, bwd = p;
        fwd[i] += fd_step;
        bwd[i] -= fd_step;
        const double dh = (moment_map(fwd, weight) - moment_map(bwd, weight)) / (2.0 * fd_step);
        worst = std::max(worst, std::abs(omega_eval(xp, e) + dh));
    }
    return worst;
}

double verify_liouville_identity(const Vec4& p, int weight) {
    return std::abs(liouville_pairing(p, hamiltonian_field(p, weight)) - moment_map(p, weight));
}

namespace {

// Cyclic Jacobi for a symmetric 4x4: good to machine precision in a handful
// of sweeps at this size.
void jacobi_eigen4(const Mat4& a_in, std::array<double, 4>& evals, Mat4& evecs) {
    Mat4 a = a_in;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) evecs[i][j] = (i == j) ? 1.0 : 0.0;
    for (int sweep = 0; sweep < 50; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-28) break;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 4; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 4; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < 4; ++k) {
                    const double vkp = evecs[k][p], vkq = evecs[k][q];
                    evecs[k][p] = c * vkp - s * vkq;
                    evecs[k][q] = s * vkp + c * vkq;
                }
            }
    }
    std::array<int, 4> order{0, 1, 2, 3};
    std::array<double, 4> diag{a[0][0], a[1][1], a[2][2], a[3][3]};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (diag[order[j]] < diag[order[i]]) std::swap(order[i], order[j]);
    Mat4 sorted_vecs;
    for (int i = 0; i < 4; ++i) {
        evals[i] = diag[order[i]];
        for (int k = 0; k < 4; ++k) sorted_vecs[k][i] = evecs[k][order[i]];
    }
    evecs = sorted_vecs;
}

Vec4 column_of(const Mat4& m, int j) {
    return {m[0][j], m[1][j], m[2][j], m[3][j]};
}

const Vec4& require_finite(const Vec4& p) {
    if (!finite(p)) throw std::invalid_argument("non-finite state");
    return p;
}

}  // namespace

HessianReport hessian_at_origin(int weight) {
    if (weight == 0) throw std::invalid_argument("weight must be nonzero");
    const double m = weight;
    HessianReport rep;
    // d^2 h: only the x1-y2 and x2-y1 pairings are nonzero.
    rep.matrix = Mat4{{{0, 0, 0, -m}, {0, 0, m, 0}, {0, m, 0, 0}, {-m, 0, 0, 0}}};
    Mat4 vecs;
    jacobi_eigen4(rep.matrix, rep.eigenvalues, vecs);
    rep.morse_index = 0;
    for (double lam : rep.eigenvalues)
        if (lam < 0) ++rep.morse_index;
    rep.neg_eigenspace = {column_of(vecs, 0), column_of(vecs, 1)};
    rep.pos_eigenspace = {column_of(vecs, 2), column_of(vecs, 3)};
    return rep;
}

FlowTrajectory integrate_flow(FieldKind kind, const Vec4& p0, double T, double dt, int weight) {
    if (kind != FieldKind::HamiltonianField && kind != FieldKind::GradientField)
        throw std::invalid_argument("only vector fields can be integrated");
    if (!(dt > 0)) throw std::invalid_argument("dt must be positive");
    if (!(T / dt <= 1e7)) throw std::invalid_argument("too many steps: T/dt exceeds 1e7");
    require_finite(p0);

    auto field = [kind, weight](const Vec4& p) {
        return kind == FieldKind::HamiltonianField ? hamiltonian_field(p, weight)
                                                   : gradient_field(p, weight);
    };
    const auto steps = static_cast<std::size_t>(std::llround(T / dt));
    FlowTrajectory traj;
    traj.field = kind;
    traj.weight = weight;
    traj.step_size = dt;
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    Vec4 state = p0;
    traj.times.push_back(0.0);
    traj.states.push_back(state);
    for (std::size_t i = 1; i <= steps; ++i) {
        state = rk4_step(field, state, dt);
        if (norm(state) > 1e6) {
            traj.divergent = true;
            break;
        }
        traj.times.push_back(static_cast<double>(i) * dt);
        traj.states.push_back(state);
    }
    return traj;
}

ManifoldClass stable_manifold_test(const Vec4& p0) {
    const double r = norm(require_finite(p0));
    if (!(r >= 1e-3 && r <= 10.0))
        throw std::invalid_argument("initial norm must lie in [1e-3, 10]");
    constexpr double kInner = 1e-6, kOuter = 10.0, kHorizon = 30.0, kDt = 1e-3;
    auto field = [](const Vec4& p) { return gradient_field(p, 1); };
    Vec4 state = p0;
    const auto steps = static_cast<std::size_t>(std::llround(kHorizon / kDt));
    for (std::size_t i = 0; i < steps; ++i) {
        state = rk4_step(field, state, kDt);
        const double n = norm(state);
        if (n < kInner) return ManifoldClass::Stable;
        if (n > kOuter) return ManifoldClass::Unstable;
    }
    return ManifoldClass::Mixed;
}

nlohmann::json trajectory_to_json(const FlowTrajectory& traj) {
    nlohmann::json states = nlohmann::json::array();
    for (const Vec4& s : traj.states) states.push_back({s.x1, s.x2, s.y1, s.y2});
    return {{"schema", "traj/1"},
            {"field", traj.field == FieldKind::HamiltonianField ? "hamiltonian" : "gradient"},
            {"weight", traj.weight},
            {"dt", traj.step_size},
            {"divergent", traj.divergent},
            {"states", std::move(states)}};
}

}  // namespace maslovlab
