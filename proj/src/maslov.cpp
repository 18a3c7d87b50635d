#include "maslovlab/maslov.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "maslovlab/errors.hpp"
#include "maslovlab/winding.hpp"

namespace maslovlab {

namespace {

constexpr double kPi = std::numbers::pi;

double det2_phase(const LagrangianFrame& f) {
    const complexd d = unitary_from_frame(f).det();
    return std::arg(d * d);
}

std::vector<double> phases_of(const std::vector<LagrangianFrame>& samples) {
    std::vector<double> phases;
    phases.reserve(samples.size());
    for (const LagrangianFrame& f : samples) phases.push_back(det2_phase(f));
    return phases;
}

std::vector<LagrangianFrame> sample_generator(const std::function<LagrangianFrame(double)>& gen,
                                              std::size_t n) {
    std::vector<LagrangianFrame> samples;
    samples.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        samples.push_back(gen(static_cast<double>(i) / static_cast<double>(n)));
    return samples;
}

// Weight-1 model Hamiltonian field; the loop construction only needs the
// direction at the base point.
Vec4 model_field(const Vec4& p) {
    return {-p.x2, p.x1, -p.y2, p.y1};
}

}  // namespace

void validate_loop(const LagrangianLoop& loop, double plane_tol) {
    if (!loop.closed) throw SchemaError("open Lagrangian paths are not supported");
    if (loop.samples.size() < 8) throw SchemaError("loop must carry at least 8 samples");
    for (const LagrangianFrame& f : loop.samples) {
        if (!finite(f.u) || !finite(f.v)) throw SchemaError("loop sample has non-finite entries");
        if (!is_lagrangian(f, tol::frame)) throw NotLagrangian("loop sample is not Lagrangian");
    }
    if (plane_distance(loop.samples.front(), loop.samples.back()) > plane_tol)
        throw SchemaError("loop endpoints span different planes");
    const PhaseAccumulation acc = accumulate_phase(phases_of(loop.samples));
    if (acc.max_step >= kPi) throw PhaseStepTooLarge("consecutive det^2 phase step >= pi");
}

LagrangianLoop loop_from_generator(std::function<LagrangianFrame(double)> gen, std::size_t n) {
    LagrangianLoop loop;
    loop.samples = sample_generator(gen, n);
    loop.generator = std::move(gen);
    return loop;
}

LagrangianLoop loop_from_unitary_family(std::function<Mat2c(double)> family, std::size_t n) {
    return loop_from_generator(
        [family = std::move(family)](double t) { return frame_from_unitary(family(t)); }, n);
}

LagrangianLoop constant_loop(const LagrangianFrame& frame, std::size_t n) {
    return loop_from_generator([frame](double) { return frame; }, n);
}

MaslovResult maslov_index(const LagrangianLoop& loop, std::size_t n_max) {
    if (!loop.closed) throw SchemaError("open Lagrangian paths are not supported");
    DegreeResult res;
    if (loop.refinable()) {
        const std::size_t n0 = std::max<std::size_t>(kRefineStart,
                                                     loop.samples.empty() ? 0 : loop.samples.size() - 1);
        res = degree_adaptive(
            [&](std::size_t n) { return phases_of(sample_generator(loop.generator, n)); }, n0,
            n_max);
    } else {
        if (loop.samples.size() < 8) throw SchemaError("loop must carry at least 8 samples");
        res = degree_fixed(phases_of(loop.samples));
    }
    return {res.degree, res.samples_used, res.max_phase_step};
}

LagrangianLoop orbit_lagrangian_loop(const Vec4& p, const Vec4& v, int weight) {
    if (weight == 0) throw Error("orbit loop needs a nonzero weight");
    const Vec4 xp = model_field(p);
    if (norm(xp) < tol::frame) throw FixedPointOrbit("orbit through a fixed point of the action");
    if (std::abs(omega_eval(xp, v)) > tol::frame)
        throw NotLagrangian("X(p) and v do not span a Lagrangian plane");
    // one traversal of the orbit: group parameter over one period 2*pi/|m|,
    // so the rotation angle sweeps sign(m) * 2*pi.
    const double sweep = (weight > 0 ? 1.0 : -1.0) * 2.0 * kPi;
    auto gen = [xp, v, sweep](double t) {
        const double a = sweep * t;
        return LagrangianFrame{model_rotation(xp, a), model_rotation(v, a)};
    };
    return loop_from_generator(gen, kRefineStart);
}

LagrangianLoop ruled_fiber_loop(int direction) {
    // tangent field X = -y1 dx1 + x1 dy1 along (x1, y1) = (cos t, sin t),
    // paired with the constant v = dx2.
    auto gen = [](double t) {
        const double a = 2.0 * kPi * t;
        const Vec4 tangent{-std::sin(a), 0.0, std::cos(a), 0.0};
        const Vec4 v{0.0, 1.0, 0.0, 0.0};
        return LagrangianFrame{tangent, v};
    };
    LagrangianLoop loop = loop_from_generator(gen, kRefineStart);
    return direction >= 0 ? loop : reverse_loop(loop);
}

LagrangianLoop reverse_loop(const LagrangianLoop& loop) {
    LagrangianLoop rev;
    rev.samples.assign(loop.samples.rbegin(), loop.samples.rend());
    rev.closed = loop.closed;
    if (loop.generator) {
        auto gen = loop.generator;
        rev.generator = [gen](double t) { return gen(1.0 - t); };
    }
    return rev;
}

LagrangianLoop concat_loops(const LagrangianLoop& a, const LagrangianLoop& b) {
    if (a.samples.empty() || b.samples.empty()) throw SchemaError("cannot concatenate empty loops");
    if (plane_distance(a.samples.back(), b.samples.front()) > tol::frame)
        throw SchemaError("loops do not share a base plane");
    LagrangianLoop out;
    out.samples = a.samples;
    out.samples.pop_back();
    out.samples.insert(out.samples.end(), b.samples.begin(), b.samples.end());
    if (a.generator && b.generator) {
        auto ga = a.generator, gb = b.generator;
        out.generator = [ga, gb](double t) { return t < 0.5 ? ga(2.0 * t) : gb(2.0 * t - 1.0); };
    }
    return out;
}

nlohmann::json loop_to_json(const LagrangianLoop& loop) {
    nlohmann::json samples = nlohmann::json::array();
    for (const LagrangianFrame& f : loop.samples) {
        samples.push_back({{f.u.x1, f.u.x2, f.u.y1, f.u.y2},
                           {f.v.x1, f.v.x2, f.v.y1, f.v.y2}});
    }
    return {{"schema", "loop/1"}, {"samples", std::move(samples)}};
}

LagrangianLoop loop_from_json(const nlohmann::json& doc, double plane_tol) {
    if (!doc.is_object() || doc.value("schema", "") != "loop/1")
        throw SchemaError("document is not a loop/1 file");
    const auto it = doc.find("samples");
    if (it == doc.end() || !it->is_array()) throw SchemaError("loop/1: missing samples array");
    LagrangianLoop loop;
    for (const auto& entry : *it) {
        if (!entry.is_array() || entry.size() != 2) throw SchemaError("loop/1: sample must be [u, v]");
        Vec4 uv[2];
        for (int j = 0; j < 2; ++j) {
            const auto& arr = entry[j];
            if (!arr.is_array() || arr.size() != 4)
                throw SchemaError("loop/1: vector must have 4 real entries");
            for (int i = 0; i < 4; ++i) {
                if (!arr[i].is_number()) throw SchemaError("loop/1: vector entry is not a number");
                uv[j][i] = arr[i].get<double>();
            }
        }
        loop.samples.push_back({uv[0], uv[1]});
    }
    validate_loop(loop, plane_tol);
    return loop;
}

}  // namespace maslovlab
