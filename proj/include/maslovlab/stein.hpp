#pragma once

// The affine surface W_n : z1^2 + z2^2 + z3^{n+1} = 1 in C^3 with the circle
// action rotating (z1, z2), its n+1 fixed points p_k = (0, 0, xi^k), the
// reduction map z3, and the chain of invariant Lagrangian spheres S_1..S_n
// lying over the unit-circle arcs between consecutive fixed points.

#include <complex>
#include <utility>
#include <vector>

#include <json.hpp>

#include "maslovlab/geometry.hpp"

namespace maslovlab {

struct C3 {
    complexd z1{0, 0}, z2{0, 0}, z3{0, 0};

    C3 operator+(const C3& o) const { return {z1 + o.z1, z2 + o.z2, z3 + o.z3}; }
    C3 operator*(double c) const { return {z1 * c, z2 * c, z3 * c}; }
};

double norm(const C3& z);

// Im(z1 conj(z2)); the moment map of the ambient action, constant in z3.
double moment_map_c3(const C3& z);

// Standard symplectic pairing on C^3 ~ R^6 of two tangent vectors:
// sum_j Im(conj(u_j) v_j).
double omega_c3(const C3& u, const C3& v);

// z^m by repeated multiplication (m >= 0).
complexd cpow_int(complexd z, int m);

struct WnPoint {
    C3 z;
    int n = 0;
};

// z1^2 + z2^2 + z3^{n+1} - 1.
complexd wn_residual(const C3& z, int n);

bool is_on_surface(const WnPoint& p, double tolerance = tol::surface);

// Newton iteration along the defining polynomial's gradient until
// |residual| < 1e-12 (at most 50 steps). Throws SingularGradient if the
// gradient norm drops to 1e-8, NoConvergence on iteration exhaustion.
WnPoint project_to_wn(const C3& z, int n);

// (z1, z2, z3) -> (z1 cos t - z2 sin t, z1 sin t + z2 cos t, z3); preserves
// the defining constraint exactly.
WnPoint group_action(double theta, const WnPoint& p);

// The reduction map: z3 restricted to W_n. Constant on orbits and along
// gradient trajectories of the moment map.
complexd reduction_map(const WnPoint& p);

// p_k = (0, 0, xi^k), xi = exp(2 pi i / (n+1)), k = 0..n.
WnPoint fixed_point(int n, int k);
std::vector<WnPoint> fixed_points(int n);

// Mesh over the sphere S_k: z3 = e^{i phi} along the arc from xi^{k-1} to
// xi^k, (z1, z2) = a (cos s, sin s) with a the principal square root of
// 1 - z3^{n+1} (a = 0 at the arc endpoints, which collapse to the poles).
struct SphereSample {
    int n = 0, k = 0, resolution = 0;
    std::vector<double> phi;       // arc parameter, size = resolution
    std::vector<double> s;         // orbit parameter in [0, 2 pi), size = resolution
    std::vector<WnPoint> points;   // row-major, phi-major: points[j * resolution + i]

    const WnPoint& at(int j, int i) const { return points[static_cast<std::size_t>(j) * resolution + i]; }
};

// Requires 1 <= k <= n (InvalidIndex otherwise) and resolution >= 8.
SphereSample sample_sphere(int n, int k, int resolution);

// max |omega(d/dphi, d/ds)| over interior mesh points, tangents by central
// differences (s wraps; the collapsed pole rows are excluded).
double check_lagrangian_sphere(const SphereSample& sample);

// (genus, boundary components) of the reduced-level surface: (floor(n/2),
// (n+1) - 2 floor(n/2)).
std::pair<int, int> riemann_surface_profile(int n);

// RK4 flow of the ambient gradient field of the moment map (zero z3
// component); z3 stays constant along it.
std::vector<C3> integrate_ambient_gradient(const C3& z0, double T, double dt);

// sphere/1 file schema: {"schema": "sphere/1", "n", "k", "resolution",
// "points": [[6 reals], ...]}.
nlohmann::json sphere_to_json(const SphereSample& sample);

// traj/1 document with 6-real states for ambient trajectories.
nlohmann::json ambient_trajectory_to_json(const std::vector<C3>& states, double dt);

}  // namespace maslovlab
