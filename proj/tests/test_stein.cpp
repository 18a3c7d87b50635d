#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>
#include <set>

#include "maslovlab/dynamics.hpp"
#include "maslovlab/errors.hpp"
#include "maslovlab/stein.hpp"

using namespace maslovlab;

namespace {
constexpr double kPi = std::numbers::pi;

std::array<long long, 6> quantize(const C3& z) {
    auto q = [](double x) { return std::llround(x * 1e12); };
    return {q(z.z1.real()), q(z.z1.imag()), q(z.z2.real()),
            q(z.z2.imag()), q(z.z3.real()), q(z.z3.imag())};
}
}  // namespace

TEST_CASE("surface residual") {
    CHECK(std::abs(wn_residual({1, 0, 0}, 0)) == 0.0);
    CHECK(std::abs(wn_residual({1, 0, 0}, 4)) == 0.0);
    CHECK(std::abs(wn_residual({0, 0, 1}, 2)) == 0.0);
    CHECK(wn_residual({0, 0, 0}, 0) == complexd(-1, 0));
}

TEST_CASE("Newton projection") {
    const WnPoint same = project_to_wn({1, 0, 0}, 3);
    CHECK(norm(same.z + C3{1, 0, 0} * -1.0) == 0.0);

    const WnPoint nudged = project_to_wn({1.001, 0, 0}, 2);
    CHECK(is_on_surface(nudged, 1e-12));
    CHECK(norm(nudged.z + C3{1.001, 0, 0} * -1.0) < 2e-3);

    // gradient (2 z1, 2 z2, 2 z3) vanishes at the origin for n = 1
    CHECK_THROWS_AS(project_to_wn({0, 0, 0}, 1), SingularGradient);

    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    for (int n = 0; n <= 5; ++n)
        for (int i = 0; i < 30; ++i) {
            const C3 raw{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
            const WnPoint p = project_to_wn(raw, n);
            CHECK(std::abs(wn_residual(p.z, n)) < 1e-12);
        }
}

TEST_CASE("group action") {
    const WnPoint p{{1, 0, 0}, 1};
    const WnPoint quarter = group_action(kPi / 2, p);
    CHECK(std::abs(quarter.z.z1) < 1e-15);
    CHECK(std::abs(quarter.z.z2 - complexd(1, 0)) < 1e-15);

    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(-0.7, 0.7), ang(0.0, 2.0 * kPi);
    for (int i = 0; i < 50; ++i) {
        const WnPoint q = project_to_wn({{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}}, 2);
        const double theta = ang(rng);
        const WnPoint moved = group_action(theta, q);
        CHECK(std::abs(std::abs(wn_residual(moved.z, 2)) - std::abs(wn_residual(q.z, 2))) < 1e-13);
        CHECK(std::abs(moment_map_c3(moved.z) - moment_map_c3(q.z)) < 1e-13);
        CHECK(reduction_map(moved) == reduction_map(q));
        const WnPoint full = group_action(2.0 * kPi, q);
        CHECK(norm(full.z + q.z * -1.0) < 1e-12);
    }
}

TEST_CASE("fixed points") {
    for (int n = 0; n <= 6; ++n) {
        const std::vector<WnPoint> fps = fixed_points(n);
        REQUIRE(fps.size() == static_cast<std::size_t>(n + 1));
        for (int k = 0; k <= n; ++k) {
            CHECK(fps[k].z.z1 == complexd(0, 0));
            CHECK(fps[k].z.z2 == complexd(0, 0));
            CHECK(std::abs(fps[k].z.z3 - std::polar(1.0, 2.0 * kPi * k / (n + 1))) == 0.0);
            CHECK(std::abs(wn_residual(fps[k].z, n)) < tol::surface);
            const WnPoint moved = group_action(1.234, fps[k]);
            CHECK(norm(moved.z + fps[k].z * -1.0) == 0.0);
            CHECK(std::abs(reduction_map(fps[k]) - fps[k].z.z3) == 0.0);
        }
    }
}

TEST_CASE("reduction is constant along ambient gradient flow") {
    const std::vector<C3> traj = integrate_ambient_gradient({1, 0, 0}, 4.0, 1e-3);
    for (const C3& z : traj) CHECK(std::abs(z.z3 - traj.front().z3) == 0.0);
    CHECK(std::abs(traj.back().z3) < 1e-8);
}

TEST_CASE("sphere samples lie in the zero level of the surface") {
    for (auto [n, k] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{3, 2}, std::pair{5, 4}}) {
        const SphereSample sample = sample_sphere(n, k, 32);
        REQUIRE(sample.points.size() == 32u * 32u);
        for (const WnPoint& p : sample.points) {
            CHECK(std::abs(wn_residual(p.z, n)) < 1e-10);
            CHECK(std::abs(moment_map_c3(p.z)) < 1e-10);
        }
    }
    CHECK_THROWS_AS(sample_sphere(2, 3, 32), InvalidIndex);
    CHECK_THROWS_AS(sample_sphere(2, 0, 32), InvalidIndex);
    CHECK_THROWS_AS(sample_sphere(0, 1, 32), InvalidIndex);
}

TEST_CASE("sphere endpoints collapse to the poles") {
    const SphereSample sample = sample_sphere(1, 1, 16);
    const WnPoint lo = fixed_point(1, 0), hi = fixed_point(1, 1);
    CHECK(std::abs(lo.z.z3 - complexd(1, 0)) == 0.0);
    CHECK(std::abs(hi.z.z3 - std::polar(1.0, kPi)) == 0.0);
    for (int i = 0; i < 16; ++i) {
        CHECK(norm(sample.at(0, i).z + lo.z * -1.0) == 0.0);
        CHECK(norm(sample.at(15, i).z + hi.z * -1.0) == 0.0);
    }
}

TEST_CASE("spheres are Lagrangian and G-invariant") {
    CHECK(check_lagrangian_sphere(sample_sphere(1, 1, 64)) < 1e-6);
    CHECK(check_lagrangian_sphere(sample_sphere(3, 2, 64)) < 1e-6);

    // the action shifts the s-parameter: each rotated mesh point is again a
    // surface point of vanishing moment map on the same fiber
    const SphereSample sample = sample_sphere(2, 1, 16);
    for (const WnPoint& p : sample.points) {
        const WnPoint q = group_action(0.77, p);
        CHECK(std::abs(wn_residual(q.z, 2)) < 1e-10);
        CHECK(std::abs(moment_map_c3(q.z)) < 1e-10);
        CHECK(reduction_map(q) == reduction_map(p));
    }

    // rotating by one s-grid step maps the mesh onto itself
    const double ds = sample.s[1] - sample.s[0];
    for (int j = 0; j < 16; ++j)
        for (int i = 0; i < 16; ++i) {
            const WnPoint rotated = group_action(ds, sample.at(j, i));
            CHECK(norm(rotated.z + sample.at(j, (i + 1) % 16).z * -1.0) < 1e-12);
        }
}

TEST_CASE("adjacent spheres meet exactly in the shared pole") {
    const int n = 3, res = 24;
    std::vector<SphereSample> spheres;
    for (int k = 1; k <= n; ++k) spheres.push_back(sample_sphere(n, k, res));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::set<std::array<long long, 6>> seen, shared;
            for (const WnPoint& p : spheres[i].points) seen.insert(quantize(p.z));
            for (const WnPoint& p : spheres[j].points)
                if (seen.count(quantize(p.z))) shared.insert(quantize(p.z));
            if (j == i + 1) {
                REQUIRE(shared.size() == 1);
                CHECK(*shared.begin() == quantize(fixed_point(n, j).z));
            } else {
                CHECK(shared.empty());
            }
        }
}

TEST_CASE("reduced surface profile") {
    CHECK(riemann_surface_profile(0) == std::pair{0, 1});
    CHECK(riemann_surface_profile(2) == std::pair{1, 1});
    CHECK(riemann_surface_profile(3) == std::pair{1, 2});
    for (int n = 0; n <= 40; ++n) {
        const auto [g, b] = riemann_surface_profile(n);
        CHECK(b >= 1);
        CHECK((b == 1 || b == 2));
        // Euler count of the double branched cover: 2 - 2g - b = 2 - (n+1)
        CHECK(2 - 2 * g - b == 2 - (n + 1));
    }
}

TEST_CASE("sphere JSON document") {
    const SphereSample sample = sample_sphere(2, 2, 8);
    const nlohmann::json doc = sphere_to_json(sample);
    CHECK(doc["schema"] == "sphere/1");
    CHECK(doc["n"] == 2);
    CHECK(doc["k"] == 2);
    CHECK(doc["resolution"] == 8);
    CHECK(doc["points"].size() == 64);
    CHECK(doc["points"][0].size() == 6);
}
