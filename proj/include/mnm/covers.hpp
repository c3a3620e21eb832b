#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mnm/errors.hpp"

namespace mnm {

struct Interval {
  double lo = 0;
  double hi = 0;
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval open(double a, double b) { return {a, b, false, false}; }
  static Interval closed(double a, double b) { return {a, b, true, true}; }

  bool contains(double x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
  }
  // Does this interval meet the closed range [a, b]?
  bool meets_range(double a, double b) const {
    double l = lo > a ? lo : a;
    double h = hi < b ? hi : b;
    if (l < h) return true;
    if (l > h) return false;
    return contains(l) || (l == a && a == b && contains(a));
  }
  double length() const { return hi - lo; }
  double mid() const { return (lo + hi) / 2; }
};

struct GomicCover {
  std::vector<Interval> intervals;  // all open, sorted by lo

  std::size_t size() const { return intervals.size(); }
  double lo() const { return intervals.front().lo; }
  double hi() const { return intervals.back().hi; }
  double granularity() const {
    double g = 0;
    for (const auto& iv : intervals) g = iv.length() > g ? iv.length() : g;
    return g;
  }
  // Sorted endpoint values (all distinct in a valid gomic).
  std::vector<double> endpoints() const;
  bool covers(double x) const {
    for (const auto& iv : intervals)
      if (iv.contains(x)) return true;
    return false;
  }
};

struct DecomposedInterval {
  std::optional<Interval> lower_overlap;
  Interval proper;
  std::optional<Interval> upper_overlap;
};

enum class StairKind { OrdStair, RelStair, ExtMinusStair, ExtStair };
enum class Side { above, below };

struct Square {
  Interval iv;
  Side side;

  bool contains(double x, double y) const {
    if (side == Side::above && !(x <= y)) return false;
    if (side == Side::below && !(y < x)) return false;
    return iv.contains(x) && iv.contains(y);
  }
  // l-inf distance to the square's closure.
  double dist(double x, double y) const;
};

struct Staircase {
  StairKind kind;
  std::vector<Square> squares;
};

struct Classify {
  bool inside = false;
  double dist = 0;
};

GomicCover validate_gomic(std::vector<Interval> intervals);
DecomposedInterval decompose_interval(const GomicCover& cover, std::size_t index);
GomicCover uniform_cover(double lo, double hi, int n, double overlap_fraction);
Staircase build_staircase(const GomicCover& cover, StairKind kind);
Classify classify_point(const Staircase& stair, double x, double y);

}  // namespace mnm
