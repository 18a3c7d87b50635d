#include "maslovlab/topology.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "maslovlab/errors.hpp"
#include "maslovlab/winding.hpp"

namespace maslovlab {

void validate_profile(const SpaceProfile& p) {
    if (p.n < 0 || p.g < 0 || p.b < 1)
        throw InvalidProfile("profile requires n >= 0, g >= 0, b >= 1");
}

HandleInventory handle_decomposition(const SpaceProfile& p) {
    validate_profile(p);
    HandleInventory inv;
    inv.zero_handles = 1;
    inv.one_handles = 2 * p.g + p.b - 1;
    inv.two_handles = p.n + inv.one_handles;
    inv.two_handle_framings.assign(inv.two_handles, -1);
    return inv;
}

HomologyProfile homology(const SpaceProfile& p) {
    validate_profile(p);
    HomologyProfile h;
    const int loops = 2 * p.g + p.b - 1;
    h.ranks = {1, loops, loops + p.n, 0, 0};
    return h;
}

int euler_characteristic(const SpaceProfile& p) {
    const HomologyProfile h = homology(p);
    return h.ranks[0] - h.ranks[1] + h.ranks[2] - h.ranks[3] + h.ranks[4];
}

long framing_winding(const std::function<std::array<double, 2>(double)>& field,
                     std::array<double, 2> reference) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double ref_angle = std::atan2(reference[1], reference[0]);
    auto sampler = [&](std::size_t n) {
        std::vector<double> phases;
        phases.reserve(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            const std::array<double, 2> f = field(two_pi * static_cast<double>(i) / n);
            if (std::hypot(f[0], f[1]) <= 1e-8)
                throw VanishingField("framing field vanishes on the attaching circle");
            phases.push_back(std::atan2(f[1], f[0]) - ref_angle);
        }
        return phases;
    };
    return degree_adaptive(sampler).degree;
}

std::array<double, 2> gradient_contact_framing(double theta) {
    // grad h along x1^2 + x2^2 = 1 is -x1 dy2 + x2 dy1
    return {std::sin(theta), -std::cos(theta)};
}

std::array<double, 2> annulus_contact_framing(double theta) {
    // x1 dy2 - x2 dy1 along the smoothed disc boundary
    return {-std::sin(theta), std::cos(theta)};
}

long framing_winding_2handle(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    return framing_winding(annulus_contact_framing, {1.0, 0.0});
}

nlohmann::json profile_report_json(const SpaceProfile& p) {
    const HandleInventory inv = handle_decomposition(p);
    const HomologyProfile h = homology(p);
    bool framings_ok = true;
    for (int f : inv.two_handle_framings) framings_ok = framings_ok && f == -1;
    const bool windings_ok = framing_winding(gradient_contact_framing, {1.0, 0.0}) == 1 &&
                             framing_winding_2handle(0.5) == 1;
    return {{"schema", "profile/1"},
            {"n", p.n},
            {"g", p.g},
            {"b", p.b},
            {"handles",
             {{"zero", inv.zero_handles},
              {"one", inv.one_handles},
              {"two", inv.two_handles},
              {"framings", inv.two_handle_framings}}},
            {"homology", {{"ranks", h.ranks}}},
            {"euler", euler_characteristic(p)},
            {"stein_framing_ok", framings_ok && windings_ok}};
}

}  // namespace maslovlab
