#pragma once

// Lagrangian loops and their Maslov index: the degree of
//   t -> det^2(U(t)) in U(1),
// with U(t) the canonical unitary of the sampled plane at parameter t.

#include <cstddef>
#include <functional>
#include <vector>

#include <json.hpp>

#include "maslovlab/geometry.hpp"

namespace maslovlab {

// Closed sampled path of Lagrangian frames. samples covers the loop
// including the closing sample; first and last must span the same plane
// (the frames themselves may differ by O(2)). A loop built from a
// parametrization keeps its generator (t in [0,1]) so the index computation
// can refine adaptively; loops read from files have none.
struct LagrangianLoop {
    std::vector<LagrangianFrame> samples;
    std::function<LagrangianFrame(double)> generator;  // optional
    bool closed = true;

    bool refinable() const { return static_cast<bool>(generator); }
};

struct MaslovResult {
    long index = 0;
    std::size_t samples_used = 0;
    double max_phase_step = 0;  // radians
};

// Throws if the loop violates its invariants: >= 8 samples, every sample a
// valid Lagrangian frame, first/last spanning the same plane, consecutive
// det^2 phase steps < pi.
void validate_loop(const LagrangianLoop& loop, double plane_tol = tol::frame);

// Sample a generator (t in [0,1], gen(0) and gen(1) spanning the same plane)
// at n+1 equispaced parameters.
LagrangianLoop loop_from_generator(std::function<LagrangianFrame(double)> gen, std::size_t n);

// Loop traced by a family of unitaries, t in [0,1].
LagrangianLoop loop_from_unitary_family(std::function<Mat2c(double)> family, std::size_t n);

// Constant loop at a fixed frame.
LagrangianLoop constant_loop(const LagrangianFrame& frame, std::size_t n = 64);

// Winding number of det^2 along the loop, by unwrapped phase accumulation.
// Generator-backed loops refine dyadically from 64 up to n_max samples until
// every phase step is < pi/2; fixed-sample loops are used as given and
// rejected (PhaseStepTooLarge) if a step reaches pi.
MaslovResult maslov_index(const LagrangianLoop& loop, std::size_t n_max = std::size_t{1} << 20);

// Group-orbit loop through p: t -> (dG_t X(p), dG_t v) for the weight-m
// model action, traversing the orbit once (direction = sign of the weight).
// Throws FixedPointOrbit when X(p) vanishes, NotLagrangian when
// |omega(X(p), v)| > frame_tol.
LagrangianLoop orbit_lagrangian_loop(const Vec4& p, const Vec4& v, int weight);

// Model obstruction loop along the unit circle of the z1-plane: tangent
// X = -y1 dx1 + x1 dy1 paired with v = dx2. direction -1 reverses the
// traversal. Index is +2 / -2.
LagrangianLoop ruled_fiber_loop(int direction);

// Reverse traversal order (index negates).
LagrangianLoop reverse_loop(const LagrangianLoop& loop);

// Concatenate two loops sharing their base plane (index adds).
LagrangianLoop concat_loops(const LagrangianLoop& a, const LagrangianLoop& b);

// loop/1 file schema: {"schema": "loop/1", "samples": [[[4 reals],[4 reals]], ...]}.
// The reader validates all loop invariants; throws SchemaError on malformed
// documents. plane_tol bounds the allowed first/last plane mismatch.
nlohmann::json loop_to_json(const LagrangianLoop& loop);
LagrangianLoop loop_from_json(const nlohmann::json& doc, double plane_tol = tol::frame);

}  // namespace maslovlab
