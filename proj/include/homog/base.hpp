#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace homog {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
};

inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm2(Vec2 a) { return std::sqrt(dot(a, a)); }

/// 2x2 matrix, row order (xx, xy; yx, yy).
struct Mat2 {
    double xx = 0.0, xy = 0.0, yx = 0.0, yy = 0.0;

    Vec2 apply(Vec2 v) const { return {xx * v.x + xy * v.y, yx * v.x + yy * v.y}; }
    Mat2 sym() const { return {xx, 0.5 * (xy + yx), 0.5 * (xy + yx), yy}; }
};

inline bool finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Fractional part in [0,1); exact for arguments that are already exact sums
/// of an integer and a representable fraction.
inline double frac01(double t) {
    double f = t - std::floor(t);
    if (f >= 1.0) f = 0.0;  // guards against floor rounding at the upper edge
    return f;
}

inline Vec2 frac01(Vec2 p) { return {frac01(p.x), frac01(p.y)}; }

/// Requested scale cannot be resolved on the given mesh.
class ResolutionError : public std::runtime_error {
public:
    explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

/// Lookup outside a tabulated box. Never clamped.
class TableRangeError : public std::out_of_range {
public:
    explicit TableRangeError(const std::string& what) : std::out_of_range(what) {}
};

/// Linear-algebra kernel failed (CG breakdown, singular fit, ...).
class NumericalBreakdown : public std::runtime_error {
public:
    explicit NumericalBreakdown(const std::string& what) : std::runtime_error(what) {}
};

/// Probe region contains no triangles.
class DegenerateRegionError : public std::runtime_error {
public:
    explicit DegenerateRegionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace homog
