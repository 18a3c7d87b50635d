#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "maslovlab/dynamics.hpp"
#include "maslovlab/geometry.hpp"
#include "oracles.hpp"

using namespace maslovlab;

namespace {
constexpr double kPi = std::numbers::pi;

Vec4 random_point(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return Vec4{u(rng), u(rng), u(rng), u(rng)} * scale;
}
}  // namespace

TEST_CASE("closed-form field values") {
    // h at (z1, z2) = (1, i): Im(1 * conj(i)) = -1
    CHECK(moment_map({1, 0, 0, 1}) == -1.0);
    CHECK(moment_map({0, 0, 0, 0}) == 0.0);
    // X at (1, 0) is dx2
    CHECK(norm(hamiltonian_field({1, 0, 0, 0}) - Vec4{0, 1, 0, 0}) == 0.0);
    // grad h at (1, 0) is -dy2
    CHECK(norm(gradient_field({1, 0, 0, 0}) - Vec4{0, 0, 0, -1}) == 0.0);
    // omega(X, grad h) = -|grad h|^2 there
    CHECK(omega_eval(hamiltonian_field({1, 0, 0, 0}), gradient_field({1, 0, 0, 0})) == -1.0);
}

TEST_CASE("eval_field dispatch") {
    const Vec4 p{1, 0, 0, 0};
    CHECK(std::get<double>(eval_field(FieldKind::MomentMap, p)) == moment_map(p));
    CHECK(norm(std::get<Vec4>(eval_field(FieldKind::HamiltonianField, p, 2)) -
               hamiltonian_field(p, 2)) == 0.0);
    CHECK(norm(std::get<Vec4>(eval_field(FieldKind::GradientField, p)) - gradient_field(p)) == 0.0);
    // lambda0 at (1,0): (0, 0, 1/2, 0) in (dx1, dx2, dy1, dy2)
    CHECK(norm(std::get<Vec4>(eval_field(FieldKind::LiouvilleForm, p)) - Vec4{0, 0, 0.5, 0}) ==
          0.0);
}

TEST_CASE("weight scaling") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const Vec4 p = random_point(rng, 2.0);
        for (int m : {-3, -1, 2, 5}) {
            CHECK(moment_map(p, m) == doctest::Approx(m * moment_map(p)).epsilon(1e-14));
            CHECK(norm(hamiltonian_field(p, m) - hamiltonian_field(p) * double(m)) < 1e-14);
            CHECK(norm(gradient_field(p, m) - gradient_field(p) * double(m)) < 1e-14);
        }
    }
}

TEST_CASE("moment identity omega(X,.) = -dh") {
    CHECK(verify_moment_identity({1, 0, 0, 0}, 1e-5) < 1e-8);
    CHECK(verify_moment_identity({0, 0, 0, 0}, 1e-5) < 1e-12);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        CHECK(verify_moment_identity(random_point(rng), 1e-5) < 1e-8);
        CHECK(verify_moment_identity(random_point(rng), 1e-5, 3) < 1e-7);
    }
    CHECK_THROWS_AS(verify_moment_identity({1, 0, 0, 0}, 0.5), std::invalid_argument);
}

TEST_CASE("primitive identity lambda0(X) = h") {
    CHECK(verify_liouville_identity({1, 0, 0, 0}) < 1e-12);
    CHECK(verify_liouville_identity({0, 0, 0, 0}) == 0.0);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        CHECK(verify_liouville_identity(random_point(rng)) < 1e-12);
        CHECK(verify_liouville_identity(random_point(rng), -2) < 1e-12);
    }
}

TEST_CASE("Hessian at the origin") {
    const HessianReport rep = hessian_at_origin(1);
    const Mat4 expect{{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(rep.matrix[i][j] == expect[i][j]);
    CHECK(rep.eigenvalues[0] == doctest::Approx(-1).epsilon(1e-13));
    CHECK(rep.eigenvalues[1] == doctest::Approx(-1).epsilon(1e-13));
    CHECK(rep.eigenvalues[2] == doctest::Approx(1).epsilon(1e-13));
    CHECK(rep.eigenvalues[3] == doctest::Approx(1).epsilon(1e-13));
    CHECK(rep.morse_index == 2);

    // E_{-1} = span{dx1 + dy2, dy1 - dx2}, E_{+1} = span{dx1 - dy2, dy1 + dx2}
    CHECK(plane_distance({rep.neg_eigenspace.a, rep.neg_eigenspace.b},
                         {{1, 0, 0, 1}, {0, -1, 1, 0}}) < 1e-9);
    CHECK(plane_distance({rep.pos_eigenspace.a, rep.pos_eigenspace.b},
                         {{1, 0, 0, -1}, {0, 1, 1, 0}}) < 1e-9);

    // eigenplanes are omega-symplectic, not Lagrangian
    CHECK(std::abs(omega_eval(rep.neg_eigenspace.a, rep.neg_eigenspace.b)) > 0.5);
    CHECK(std::abs(omega_eval(rep.pos_eigenspace.a, rep.pos_eigenspace.b)) > 0.5);
}

TEST_CASE("Hessian scales with the weight and matches finite differences") {
    const HessianReport rep = hessian_at_origin(2);
    CHECK(rep.eigenvalues[0] == doctest::Approx(-2).epsilon(1e-13));
    CHECK(rep.eigenvalues[3] == doctest::Approx(2).epsilon(1e-13));
    CHECK(rep.morse_index == 2);

    // central second differences of the weight-2 moment map at the origin
    const double h = 1e-2;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            auto at = [&](double si, double sj) {
                Vec4 p{};
                p[i] += si;
                p[j] += sj;
                return moment_map(p, 2);
            };
            const double dij = (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
            CHECK(dij == doctest::Approx(rep.matrix[i][j]).epsilon(1e-10).scale(1.0));
        }
    CHECK_THROWS_AS(hessian_at_origin(0), std::invalid_argument);
}

TEST_CASE("gradient flow follows the closed-form rays") {
    const FlowTrajectory down = integrate_flow(FieldKind::GradientField, {1, 0, 0, 1}, 5.0, 1e-3);
    const double d = std::exp(-5.0);
    CHECK(norm(down.states.back() - Vec4{d, 0, 0, d}) < 2e-3);
    CHECK(down.times.size() == down.states.size());
    CHECK_FALSE(down.divergent);

    const FlowTrajectory up = integrate_flow(FieldKind::GradientField, {1, 0, 0, -1}, 5.0, 1e-3);
    const double expect = std::exp(5.0) * std::sqrt(2.0);
    CHECK(std::abs(norm(up.states.back()) - expect) / expect < 0.01);
}

TEST_CASE("Hamiltonian flow is periodic and conserves h") {
    const Vec4 start{1, 0, 0, 0};
    const std::size_t steps = 6283;
    const FlowTrajectory traj =
        integrate_flow(FieldKind::HamiltonianField, start, 2.0 * kPi, 2.0 * kPi / steps);
    CHECK(norm(traj.states.back() - start) < 1e-6);

    std::mt19937_64 rng(15);
    const Vec4 p = random_point(rng, 1.5);
    const FlowTrajectory orbit = integrate_flow(FieldKind::HamiltonianField, p, 100.0, 1e-3);
    double drift = 0;
    for (const Vec4& s : orbit.states) drift = std::max(drift, std::abs(moment_map(s) - moment_map(p)));
    CHECK(drift < 1e-8);
}

TEST_CASE("gradient flow is monotone and equivariant") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 10; ++i) {
        const Vec4 p = random_point(rng);
        const FlowTrajectory traj = integrate_flow(FieldKind::GradientField, p, 3.0, 1e-3);
        for (std::size_t k = 1; k < traj.states.size(); ++k)
            CHECK(moment_map(traj.states[k]) >= moment_map(traj.states[k - 1]) - 1e-12);
    }
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    for (int i = 0; i < 10; ++i) {
        const Vec4 p = random_point(rng);
        const double theta = ang(rng);
        for (FieldKind kind : {FieldKind::HamiltonianField, FieldKind::GradientField}) {
            const Vec4 a = integrate_flow(kind, model_rotation(p, theta), 1.0, 1e-3).states.back();
            const Vec4 b = model_rotation(integrate_flow(kind, p, 1.0, 1e-3).states.back(), theta);
            CHECK(norm(a - b) < 1e-8);
        }
    }
}

TEST_CASE("weighted flow has period 2 pi / |m|") {
    const Vec4 start{1, 0, 0, 0};
    for (int m : {2, -3}) {
        const double period = 2.0 * kPi / std::abs(m);
        const std::size_t steps = 4000;
        const FlowTrajectory traj =
            integrate_flow(FieldKind::HamiltonianField, start, period, period / steps, m);
        CHECK(norm(traj.states.back() - start) < 1e-6);
    }
}

TEST_CASE("divergence guard truncates") {
    const FlowTrajectory traj = integrate_flow(FieldKind::GradientField, {1, 0, 0, -1}, 20.0, 1e-2);
    CHECK(traj.divergent);
    CHECK(traj.states.size() < 2002);
    CHECK(norm(traj.states.back()) <= 1e6);
    CHECK_THROWS_AS(integrate_flow(FieldKind::MomentMap, {1, 0, 0, 0}, 1.0, 1e-3),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate_flow(FieldKind::GradientField, {1, 0, 0, 0}, 1.0, -1e-3),
                    std::invalid_argument);
}

TEST_CASE("stable/unstable classification") {
    CHECK(stable_manifold_test({1, 0, 0, 1}) == ManifoldClass::Stable);    // (1, i)
    CHECK(stable_manifold_test({1, 0, 0, -1}) == ManifoldClass::Unstable); // (1, -i)
    // (1, 0) = half stable + half unstable; the growing part wins
    CHECK(stable_manifold_test({1, 0, 0, 0}) == ManifoldClass::Unstable);

    std::mt19937_64 rng(33);
    const Vec4 em_a{1, 0, 0, 1}, em_b{0, -1, 1, 0};
    const Vec4 ep_a{1, 0, 0, -1}, ep_b{0, 1, 1, 0};
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi), rad(0.01, 5.0);
    for (int i = 0; i < 50; ++i) {
        const double t = ang(rng), r = rad(rng);
        Vec4 ps = em_a * std::cos(t) + em_b * std::sin(t);
        Vec4 pu = ep_a * std::cos(t) + ep_b * std::sin(t);
        CHECK(stable_manifold_test(ps * (r / norm(ps))) == ManifoldClass::Stable);
        CHECK(stable_manifold_test(pu * (r / norm(pu))) == ManifoldClass::Unstable);
    }
    CHECK_THROWS_AS(stable_manifold_test({1e-4, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("trajectory JSON document") {
    const FlowTrajectory traj = integrate_flow(FieldKind::GradientField, {1, 0, 0, 1}, 0.1, 1e-2);
    const nlohmann::json doc = trajectory_to_json(traj);
    CHECK(doc["schema"] == "traj/1");
    CHECK(doc["field"] == "gradient");
    CHECK(doc["dt"] == 1e-2);
    CHECK(doc["states"].size() == traj.states.size());
    CHECK(doc["states"][0].size() == 4);
}
