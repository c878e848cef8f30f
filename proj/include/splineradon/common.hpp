// Shared small types: points, boxes, error categories.
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace splineradon {

// Point in R^d for d <= 2. One-dimensional data keeps y == 0 so that the
// Euclidean norm works unchanged for both dimensions.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }

  constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  constexpr double norm_sq() const { return x * x + y * y; }
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

struct Box {
  Vec2 lo;
  Vec2 hi;

  constexpr double width(int axis) const { return axis == 0 ? hi.x - lo.x : hi.y - lo.y; }
  constexpr bool contains(Vec2 p, int dim) const {
    bool in = p.x >= lo.x && p.x <= hi.x;
    if (dim > 1) in = in && p.y >= lo.y && p.y <= hi.y;
    return in;
  }
};

// Invalid user-facing configuration (bad dimensions, spacings, file schema).
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Spline order incompatible with the ambient dimension (k <= d/2).
class unsupported_order_error : public std::domain_error {
 public:
  explicit unsupported_order_error(const std::string& what) : std::domain_error(what) {}
};

// A local Gram system could not be solved to the required residual.
class ill_conditioned_error : public std::runtime_error {
 public:
  ill_conditioned_error(const std::string& what, double condition_estimate,
                        std::size_t knot_index)
      : std::runtime_error(what),
        condition_estimate(condition_estimate),
        knot_index(knot_index) {}

  double condition_estimate = 0.0;
  std::size_t knot_index = 0;
};

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace splineradon
