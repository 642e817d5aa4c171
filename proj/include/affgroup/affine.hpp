#pragma once

#include "affgroup/errors.hpp"

#include <algorithm>
#include <cmath>

namespace affgroup {

/// Matrices with |det| at or below this are rejected as singular.
inline constexpr double kDetEpsilon = 1e-9;
/// Tolerance for factorization round-trips (relative Frobenius norm).
inline constexpr double kReconstructTol = 1e-10;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }
    double norm() const { return std::hypot(x, y); }
};

inline double sup_dist(Vec2 a, Vec2 b)
{
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

/// Row-major 2x2 matrix [[a, b], [c, d]] stored as four scalars.
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    double det() const { return a * d - b * c; }

    Mat2 operator*(const Mat2& o) const
    {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Vec2 operator*(Vec2 z) const { return {a * z.x + b * z.y, c * z.x + d * z.y}; }

    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }

    Mat2 transpose() const { return {a, c, b, d}; }

    Mat2 inverse() const
    {
        const double dt = det();
        if (std::abs(dt) <= kDetEpsilon)
            throw SingularMatrix("Mat2::inverse: |det| <= detEpsilon");
        const double r = 1.0 / dt;
        return {d * r, -b * r, -c * r, a * r};
    }

    double frob_norm() const { return std::sqrt(a * a + b * b + c * c + d * d); }
    double sup_norm() const
    {
        return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
    }

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 rotation(double theta)
    {
        const double cs = std::cos(theta), sn = std::sin(theta);
        return {cs, -sn, sn, cs};
    }
    static Mat2 diagonal(double p, double q) { return {p, 0.0, 0.0, q}; }
};

inline double frob_dist(const Mat2& l, const Mat2& r)
{
    return (l - r).frob_norm();
}

/// Group element [x, A] of the affine group: z -> x + A z.
struct AffineElement {
    Vec2 x{};
    Mat2 A{};

    static AffineElement identity() { return {{0.0, 0.0}, Mat2::identity()}; }
};

/// [x,A][y,B] = [x + A y, A B] (composition of the affine maps).
inline AffineElement compose(const AffineElement& g, const AffineElement& h)
{
    return {g.x + g.A * h.x, g.A * h.A};
}

/// [y,B]^{-1} = [-B^{-1} y, B^{-1}].
inline AffineElement invert(const AffineElement& g)
{
    const Mat2 inv = g.A.inverse();
    return {-(inv * g.x), inv};
}

inline Vec2 apply(const AffineElement& g, Vec2 z)
{
    return g.x + g.A * z;
}

/// Factors of the decomposition A = M C with M = [[s,-t],[t,s]] in K0 and
/// C = [[1,0],[u,v]] in the stabilizer H_(1,0). Valid when s^2+t^2 > 0 and
/// v != 0.
struct IwasawaFactors {
    double s = 1.0, t = 0.0, u = 0.0, v = 1.0;

    Mat2 k0() const { return {s, -t, t, s}; }
    Mat2 h10() const { return {1.0, 0.0, u, v}; }
};

/// Unique factorization of an invertible matrix:
///   s = d*det/(b^2+d^2), t = -b*det/(b^2+d^2),
///   u = (c*d + a*b)/det,  v = (b^2+d^2)/det.
inline IwasawaFactors iwasawa(const Mat2& m)
{
    const double dt = m.det();
    if (std::abs(dt) <= kDetEpsilon)
        throw SingularMatrix("iwasawa: |det| <= detEpsilon");
    const double q = m.b * m.b + m.d * m.d;
    // q > 0 whenever det != 0 (b = d = 0 forces det = 0).
    IwasawaFactors f;
    f.s = m.d * dt / q;
    f.t = -m.b * dt / q;
    f.u = (m.c * m.d + m.a * m.b) / dt;
    f.v = q / dt;
    return f;
}

/// Rebuild the matrix from chart coordinates: M(s,t) * C(u,v), i.e.
/// a = s - u t, b = -t v, c = t + u s, d = s v.
inline Mat2 from_chart(double s, double t, double u, double v)
{
    if (s * s + t * t <= 0.0 || v == 0.0 || !std::isfinite(s) || !std::isfinite(t) ||
        !std::isfinite(u) || !std::isfinite(v))
        throw InvalidChartPoint("from_chart: need s^2+t^2 > 0 and v != 0");
    return {s - u * t, -t * v, t + u * s, s * v};
}

inline Mat2 from_chart(const IwasawaFactors& f)
{
    return from_chart(f.s, f.t, f.u, f.v);
}

} // namespace affgroup
