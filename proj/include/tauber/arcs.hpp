#pragma once

#include <numbers>
#include <string>
#include <string_view>
#include <vector>

namespace tauber {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Circle distance between two angles, in [0, pi].
double circle_distance(double x, double y);

// Reduces an angle to [0, 2pi).
double wrap_angle(double x);

// A finite union of closed arcs on the circle R/2piZ.
//
// Canonical form: intervals [start, end] inside [0, 2pi], sorted by start,
// pairwise disjoint and merged.  An arc through 0 is stored as the two pieces
// [a, 2pi] and [0, b].  The set is closed by construction, so anything built
// from arcs is already its own closure.
class ClosedArcSet {
 public:
  struct Arc {
    double start = 0.0;
    double end = 0.0;
  };

  ClosedArcSet() = default;
  // Each input arc runs counterclockwise from `start` to `end` (radians); an
  // end below the start wraps through 0, a span of 2pi or more is the circle.
  explicit ClosedArcSet(const std::vector<Arc>& arcs);

  static ClosedArcSet full();
  // Parses "a1:b1,a2:b2" in radians.  Throws std::invalid_argument.
  static ClosedArcSet parse(std::string_view text);

  const std::vector<Arc>& arcs() const { return arcs_; }
  bool empty() const { return arcs_.empty(); }
  bool is_full() const;
  double measure() const;

  // Circle distance from x to the set, 0 inside.
  double distance(double x) const;
  bool contains(double x, double slack = 1e-12) const {
    return distance(x) <= slack;
  }

  std::string to_string() const;

 private:
  std::vector<Arc> arcs_;
};

}  // namespace tauber
