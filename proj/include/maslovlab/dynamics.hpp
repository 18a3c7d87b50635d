#pragma once

// Closed-form data of the model circle action on C^2: moment map
//   h(z1, z2) = Im(z1 conj(z2)) = x2 y1 - x1 y2,
// its Hamiltonian field X (omega(X, .) = -dh), the Euclidean gradient field,
// the primitive 1-form lambda0 of omega0, Morse data at the origin, and RK4
// flows probing the stable/unstable manifolds.

#include <array>
#include <cstddef>
#include <variant>
#include <vector>

#include <json.hpp>

#include "maslovlab/geometry.hpp"

namespace maslovlab {

enum class FieldKind { MomentMap, HamiltonianField, GradientField, LiouvilleForm };

// Weight m scales h, X and grad h by m (the action rotates m times as fast);
// lambda0 is weight-independent.
double moment_map(const Vec4& p, int weight = 1);
Vec4 hamiltonian_field(const Vec4& p, int weight = 1);
Vec4 gradient_field(const Vec4& p, int weight = 1);

// Kind-dispatched evaluation: a real for the moment map, a vector for the
// fields, the covector components for lambda0.
std::variant<double, Vec4> eval_field(FieldKind kind, const Vec4& p, int weight = 1);

// Components of lambda0 = (1/2) sum_j (x_j dy_j - y_j dx_j) at p, in the
// basis (dx1, dx2, dy1, dy2), and its pairing with a tangent vector.
Vec4 liouville_covector(const Vec4& p);
double liouville_pairing(const Vec4& p, const Vec4& w);

// max over coordinate directions e of |omega(X(p), e) + D_e h(p)| with the
// directional derivative taken by central differences of step fd_step.
// Requires fd_step in (1e-8, 1e-2).
double verify_moment_identity(const Vec4& p, double fd_step, int weight = 1);

// |lambda0(X(p)) - h(p)|; the identity holds pointwise.
double verify_liouville_identity(const Vec4& p, int weight = 1);

using Mat4 = std::array<std::array<double, 4>, 4>;

// Unordered eigen-plane spanning pair (eigenspaces here are symplectic, not
// Lagrangian, so this is a plain pair of vectors).
struct Frame2 {
    Vec4 a, b;
};

struct HessianReport {
    Mat4 matrix{};                        // basis order (dx1, dx2, dy1, dy2)
    std::array<double, 4> eigenvalues{};  // ascending
    int morse_index = 0;                  // count of negative eigenvalues
    Frame2 neg_eigenspace, pos_eigenspace;
};

// Analytic Hessian of the weight-m moment map at the origin with its
// eigen-decomposition. weight must be nonzero.
HessianReport hessian_at_origin(int weight);

struct FlowTrajectory {
    FieldKind field = FieldKind::GradientField;
    int weight = 1;
    double step_size = 0;
    std::vector<double> times;
    std::vector<Vec4> states;
    bool divergent = false;  // truncated after the state norm exceeded 1e6
};

// Fixed-step RK4 trajectory of X or grad h. Requires dt > 0 and T/dt <= 1e7.
// Truncates and flags divergent once the state norm exceeds 1e6.
FlowTrajectory integrate_flow(FieldKind kind, const Vec4& p0, double T, double dt, int weight = 1);

enum class ManifoldClass { Stable, Unstable, Mixed };

// Forward gradient flow from p0 (norm in [1e-3, 10]): Stable once the norm
// falls below 1e-6, Unstable once it exceeds 10, Mixed if neither happens by
// T = 30. Points of {z1 + i z2 = 0} classify Stable, of {z1 - i z2 = 0}
// Unstable.
ManifoldClass stable_manifold_test(const Vec4& p0);

// One classical RK4 step of an autonomous field. State needs +, scalar *.
template <class State, class F>
State rk4_step(F&& f, const State& y, double dt) {
    const State k1 = f(y);
    const State k2 = f(y + k1 * (dt / 2));
    const State k3 = f(y + k2 * (dt / 2));
    const State k4 = f(y + k3 * dt);
    return y + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
}

// traj/1 file schema: {"schema": "traj/1", "field", "dt", "states": [[4 reals], ...]}.
nlohmann::json trajectory_to_json(const FlowTrajectory& traj);

}  // namespace maslovlab
