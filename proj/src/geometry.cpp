#include "maslovlab/geometry.hpp"

#include <cmath>
#include <limits>

#include "maslovlab/errors.hpp"

namespace maslovlab {

double& Vec4::operator[](int i) {
    switch (i) {
        case 0: return x1;
        case 1: return x2;
        case 2: return y1;
        default: return y2;
    }
}

double Vec4::operator[](int i) const {
    switch (i) {
        case 0: return x1;
        case 1: return x2;
        case 2: return y1;
        default: return y2;
    }
}

double dot(const Vec4& a, const Vec4& b) {
    return a.x1 * b.x1 + a.x2 * b.x2 + a.y1 * b.y1 + a.y2 * b.y2;
}

double norm(const Vec4& v) { return std::sqrt(dot(v, v)); }

bool finite(const Vec4& v) {
    return std::isfinite(v.x1) && std::isfinite(v.x2) && std::isfinite(v.y1) && std::isfinite(v.y2);
}

double omega_eval(const Vec4& u, const Vec4& v) {
    return u.x1 * v.y1 - u.y1 * v.x1 + u.x2 * v.y2 - u.y2 * v.x2;
}

complexd z1_of(const Vec4& v) { return {v.x1, v.y1}; }
complexd z2_of(const Vec4& v) { return {v.x2, v.y2}; }

Vec4 vec_of(complexd c1, complexd c2) {
    return {c1.real(), c2.real(), c1.imag(), c2.imag()};
}

Vec4 model_rotation(const Vec4& p, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {p.x1 * c - p.x2 * s, p.x1 * s + p.x2 * c,
            p.y1 * c - p.y2 * s, p.y1 * s + p.y2 * c};
}

Mat2c Mat2c::from_columns(complexd c1_top, complexd c1_bot, complexd c2_top, complexd c2_bot) {
    return {c1_top, c2_top, c1_bot, c2_bot};
}

Mat2c operator*(const Mat2c& a, const Mat2c& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

double unitary_defect(const Mat2c& m) {
    // rows of M M* - I
    const complexd r11 = m.a11 * std::conj(m.a11) + m.a12 * std::conj(m.a12) - 1.0;
    const complexd r12 = m.a11 * std::conj(m.a21) + m.a12 * std::conj(m.a22);
    const complexd r21 = m.a21 * std::conj(m.a11) + m.a22 * std::conj(m.a12);
    const complexd r22 = m.a21 * std::conj(m.a21) + m.a22 * std::conj(m.a22) - 1.0;
    return std::sqrt(std::norm(r11) + std::norm(r12) + std::norm(r21) + std::norm(r22));
}

double frame_condition(const LagrangianFrame& f) {
    // Singular values of [u; v] are the square roots of the eigenvalues of
    // the 2x2 Gram matrix.
    const double guu = dot(f.u, f.u), gvv = dot(f.v, f.v), guv = dot(f.u, f.v);
    const double tr = guu + gvv;
    const double det = guu * gvv - guv * guv;
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    const double lam_max = 0.5 * (tr + disc);
    const double lam_min = 0.5 * (tr - disc);
    if (lam_min <= 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(lam_max / lam_min);
}

static void require_nondegenerate(const LagrangianFrame& f) {
    if (!(frame_condition(f) <= tol::cond_max))
        throw DegenerateFrame("frame condition number exceeds cond_max");
}

bool is_lagrangian(const LagrangianFrame& f, double tolerance) {
    require_nondegenerate(f);
    return std::abs(omega_eval(f.u, f.v)) <= tolerance;
}

Mat2c unitary_from_frame(const LagrangianFrame& f) {
    require_nondegenerate(f);
    const double nu = norm(f.u);
    const Vec4 e1 = f.u * (1.0 / nu);
    Vec4 w = f.v - e1 * dot(f.v, e1);
    const double nw = norm(w);
    if (!(nw > 0.0) || !std::isfinite(nw))
        throw DegenerateFrame("frame collapsed under orthonormalization");
    const Vec4 e2 = w * (1.0 / nw);
    return Mat2c::from_columns(z1_of(e1), z2_of(e1), z1_of(e2), z2_of(e2));
}

LagrangianFrame frame_from_unitary(const Mat2c& u) {
    return {vec_of(u.a11, u.a21), vec_of(u.a12, u.a22)};
}

double plane_distance(const LagrangianFrame& a, const LagrangianFrame& b) {
    const Mat2c ua = unitary_from_frame(a);
    const Mat2c ub = unitary_from_frame(b);
    const LagrangianFrame fa = frame_from_unitary(ua);
    const LagrangianFrame fb = frame_from_unitary(ub);
    // P = e1 e1^T + e2 e2^T for each orthonormal pair, compared entrywise.
    double sum = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double pa = fa.u[i] * fa.u[j] + fa.v[i] * fa.v[j];
            const double pb = fb.u[i] * fb.u[j] + fb.v[i] * fb.v[j];
            sum += (pa - pb) * (pa - pb);
        }
    return std::sqrt(sum);
}

}  // namespace maslovlab
