#pragma once

// Symplectic linear algebra on (R^4, omega0) ~ C^2 with
//   omega0 = dx1^dy1 + dx2^dy2,   z_j = x_j + i y_j.
// Lagrangian 2-planes are handled as ordered spanning pairs (frames) and
// canonicalized to U(2) matrices; det^2 of the canonical unitary is the
// plane invariant everything downstream consumes.

#include <array>
#include <complex>

namespace maslovlab {

using complexd = std::complex<double>;

namespace tol {
// Lagrangian defect allowed in a frame: |omega(u,v)| <= frame.
inline constexpr double frame = 1e-9;
// ||U U* - I||_F allowed for a canonical unitary.
inline constexpr double unitary = 1e-9;
// Condition-number ceiling of [u; v] before a frame counts as degenerate.
inline constexpr double cond_max = 1e8;
// |z1^2 + z2^2 + z3^{n+1} - 1| allowed for a point of W_n.
inline constexpr double surface = 1e-10;
}  // namespace tol

// Vector (or point) of R^4 in coordinates (x1, x2, y1, y2).
struct Vec4 {
    double x1 = 0, x2 = 0, y1 = 0, y2 = 0;

    double& operator[](int i);
    double operator[](int i) const;

    Vec4 operator+(const Vec4& o) const { return {x1 + o.x1, x2 + o.x2, y1 + o.y1, y2 + o.y2}; }
    Vec4 operator-(const Vec4& o) const { return {x1 - o.x1, x2 - o.x2, y1 - o.y1, y2 - o.y2}; }
    Vec4 operator*(double c) const { return {c * x1, c * x2, c * y1, c * y2}; }
    Vec4 operator-() const { return {-x1, -x2, -y1, -y2}; }
    Vec4& operator+=(const Vec4& o) { x1 += o.x1; x2 += o.x2; y1 += o.y1; y2 += o.y2; return *this; }
};

inline Vec4 operator*(double c, const Vec4& v) { return v * c; }

double dot(const Vec4& a, const Vec4& b);
double norm(const Vec4& v);
bool finite(const Vec4& v);

// omega0(u, v) = sum_j (u_xj v_yj - u_yj v_xj). Bilinear, antisymmetric.
double omega_eval(const Vec4& u, const Vec4& v);

// Complexification z_j = x_j + i y_j and its inverse.
complexd z1_of(const Vec4& v);
complexd z2_of(const Vec4& v);
Vec4 vec_of(complexd c1, complexd c2);

// The model circle action on C^2: (z1, z2) -> (z1 cos a - z2 sin a, z1 sin a + z2 cos a).
Vec4 model_rotation(const Vec4& p, double angle);

// Ordered pair spanning a (candidate) Lagrangian plane.
struct LagrangianFrame {
    Vec4 u, v;
};

// 2x2 complex matrix, row-major.
struct Mat2c {
    complexd a11{1, 0}, a12{0, 0}, a21{0, 0}, a22{1, 0};

    complexd det() const { return a11 * a22 - a12 * a21; }
    static Mat2c from_columns(complexd c1_top, complexd c1_bot, complexd c2_top, complexd c2_bot);
};

Mat2c operator*(const Mat2c& a, const Mat2c& b);

// ||M M* - I||_F; zero iff M is unitary.
double unitary_defect(const Mat2c& m);

// Condition number of the 2x4 matrix [u; v] (via the 2x2 Gram matrix).
// Returns +inf for a rank-deficient frame.
double frame_condition(const LagrangianFrame& f);

// True iff |omega(u, v)| <= tolerance. Throws DegenerateFrame when the frame
// condition number exceeds cond_max.
bool is_lagrangian(const LagrangianFrame& f, double tolerance = tol::frame);

// Gram-Schmidt against the Euclidean metric (u first), then complexify the
// orthonormal pair into the columns of a U(2) matrix. Frames spanning the
// same plane map to unitaries differing by right O(2)-multiplication, so
// det^2 depends on the plane only.
Mat2c unitary_from_frame(const LagrangianFrame& f);

// Columns of a unitary, read back as a real frame of the plane it represents.
LagrangianFrame frame_from_unitary(const Mat2c& u);

// Frobenius distance between the orthogonal projectors of the two spanned
// planes; zero iff the planes coincide.
double plane_distance(const LagrangianFrame& a, const LagrangianFrame& b);

}  // namespace maslovlab
