#pragma once

// Combinatorial side: handle decompositions and homology ranks determined by
// a profile (n, g, b), meaning n+1 fixed points over a genus-g surface with
// b boundary circles, plus the numerical winding checks certifying that every
// 2-handle framing sits one left twist below the contact framing.

#include <array>
#include <functional>
#include <vector>

#include <json.hpp>

namespace maslovlab {

struct SpaceProfile {
    int n = 0;  // n + 1 fixed points
    int g = 0;  // genus of the reduced surface
    int b = 1;  // boundary components, >= 1
};

// Throws InvalidProfile unless n >= 0, g >= 0, b >= 1. (g, b) = (0, 1) is
// the 1-connected case; every other admissible profile has g + b >= 2.
void validate_profile(const SpaceProfile& p);

struct HandleInventory {
    int zero_handles = 0;
    int one_handles = 0;
    int two_handles = 0;
    std::vector<int> two_handle_framings;  // all -1
};

// 1 zero-handle, n two-handles over the fixed points, and 2g+b-1 pairs of
// (1-handle, 2-handle); every 2-handle framed -1.
HandleInventory handle_decomposition(const SpaceProfile& p);

struct HomologyProfile {
    std::array<int, 5> ranks{};  // degrees 0..4
};

// ranks (1, 2g+b-1, 2g+b-1+n, 0, 0).
HomologyProfile homology(const SpaceProfile& p);

// Alternating sum of the homology ranks; equals n+1 and the handle
// alternating sum.
int euler_characteristic(const SpaceProfile& p);

// Winding number of an angle-parametrized plane field relative to a constant
// reference vector, by phase unwrapping (same refinement policy as the
// Maslov kernel). Throws VanishingField if the field norm drops to 1e-8.
long framing_winding(const std::function<std::array<double, 2>(double)>& field,
                     std::array<double, 2> reference);

// The gradient field of the moment map restricted to the attaching circle of
// a fixed-point 2-handle, in the (dy1, dy2) frame of the normal bundle:
// theta -> (sin theta, -cos theta). Winds +1 around dy1.
std::array<double, 2> gradient_contact_framing(double theta);

// Contact framing along the boundary of the annulus-derived 2-handle disc:
// theta -> (-sin theta, cos theta). Winds +1 as well.
std::array<double, 2> annulus_contact_framing(double theta);

// Winding of the annulus-case contact framing relative to dy1 along the
// attaching circle; epsilon is the handle thickness, 0 < epsilon < 1, and
// does not affect the count.
long framing_winding_2handle(double epsilon);

// profile/1 file schema: {"schema": "profile/1", "n", "g", "b", "handles",
// "homology", "euler", "stein_framing_ok"}.
nlohmann::json profile_report_json(const SpaceProfile& p);

}  // namespace maslovlab
