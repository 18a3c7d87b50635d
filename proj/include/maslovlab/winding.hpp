#pragma once

// Phase-unwrapping kernel: the degree of a circle-valued map from sampled
// phases. Shared by the Maslov index (phases of det^2) and the framing
// winding computations.

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

#include "maslovlab/errors.hpp"

namespace maslovlab {

struct PhaseAccumulation {
    double total = 0;     // unwrapped phase change over the closed loop
    double max_step = 0;  // largest |principal step| seen
};

// Sum of principal-value steps between consecutive phases. phases must cover
// the closed loop including the closing sample (length N+1 for N intervals).
inline PhaseAccumulation accumulate_phase(const std::vector<double>& phases) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    PhaseAccumulation acc;
    for (std::size_t k = 0; k + 1 < phases.size(); ++k) {
        const double step = std::remainder(phases[k + 1] - phases[k], two_pi);
        acc.total += step;
        acc.max_step = std::max(acc.max_step, std::abs(step));
    }
    return acc;
}

struct DegreeResult {
    long degree = 0;
    std::size_t samples_used = 0;  // number of samples including the closing one
    double max_phase_step = 0;     // radians
};

inline constexpr std::size_t kRefineStart = 64;
inline constexpr std::size_t kRefineMax = std::size_t{1} << 20;

// Adaptive dyadic refinement: sampler(N) must return N+1 phases covering the
// closed loop. Doubles N from n0 until every step is < pi/2 (anti-aliasing
// guard with margin); throws PhaseStepTooLarge if a step >= pi survives at
// n_max or the accumulated total is not an integer multiple of 2*pi.
template <class Sampler>
DegreeResult degree_adaptive(Sampler&& sampler, std::size_t n0 = kRefineStart,
                             std::size_t n_max = kRefineMax) {
    constexpr double pi = std::numbers::pi;
    constexpr double two_pi = 2.0 * pi;
    for (std::size_t n = n0;; n *= 2) {
        const std::vector<double> phases = sampler(n);
        const PhaseAccumulation acc = accumulate_phase(phases);
        if (acc.max_step < pi / 2 || n >= n_max) {
            if (acc.max_step >= pi)
                throw PhaseStepTooLarge("phase step >= pi at maximum refinement");
            const double turns = acc.total / two_pi;
            const long degree = std::lround(turns);
            if (std::abs(turns - static_cast<double>(degree)) > 1e-6)
                throw PhaseStepTooLarge("accumulated phase is not an integer number of turns");
            return {degree, phases.size(), acc.max_step};
        }
    }
}

// One-shot variant for loops that cannot be resampled.
inline DegreeResult degree_fixed(const std::vector<double>& phases) {
    constexpr double pi = std::numbers::pi;
    const PhaseAccumulation acc = accumulate_phase(phases);
    if (acc.max_step >= pi)
        throw PhaseStepTooLarge("phase step >= pi on a non-refinable loop");
    const double turns = acc.total / (2.0 * pi);
    const long degree = std::lround(turns);
    if (std::abs(turns - static_cast<double>(degree)) > 1e-6)
        throw PhaseStepTooLarge("accumulated phase is not an integer number of turns");
    return {degree, phases.size(), acc.max_step};
}

}  // namespace maslovlab
