#include "mnm/covers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace mnm {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_open: return "NotOpen";
    case errc::not_minimal: return "NotMinimal";
    case errc::triple_overlap: return "TripleOverlap";
    case errc::not_generic: return "NotGeneric";
    case errc::disconnected: return "Disconnected";
    case errc::invalid_parameters: return "InvalidParameters";
    case errc::band_occupied: return "BandOccupied";
    case errc::degenerate_cover: return "DegenerateCover";
    case errc::non_generic_values: return "NonGenericValues";
    case errc::slab_attachment_ambiguous: return "SlabAttachmentAmbiguous";
    case errc::out_of_range: return "OutOfRange";
    case errc::invalid_epsilon: return "InvalidEpsilon";
    case errc::endpoint_collision: return "EndpointCollision";
    case errc::uncovered_value: return "UncoveredValue";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

namespace {

std::string ivs(const Interval& iv) {
  std::ostringstream os;
  os << (iv.lo_closed ? '[' : '(') << iv.lo << ", " << iv.hi
     << (iv.hi_closed ? ']' : ')');
  return os.str();
}

}  // namespace

std::vector<double> GomicCover::endpoints() const {
  std::vector<double> e;
  for (const auto& iv : intervals) {
    e.push_back(iv.lo);
    e.push_back(iv.hi);
  }
  std::sort(e.begin(), e.end());
  return e;
}

GomicCover validate_gomic(std::vector<Interval> intervals) {
  std::vector<std::pair<errc, std::string>> bad;
  if (intervals.empty()) {
    bad.emplace_back(errc::invalid_parameters, "empty interval list");
    throw cover_error(std::move(bad));
  }
  for (const auto& iv : intervals) {
    if (iv.lo_closed || iv.hi_closed)
      bad.emplace_back(errc::not_open, "interval " + ivs(iv) + " is not open");
    if (!(iv.lo < iv.hi))
      bad.emplace_back(errc::not_generic,
                       "interval " + ivs(iv) + " is empty or degenerate");
  }
  if (!bad.empty()) throw cover_error(std::move(bad));

  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  const std::size_t n = intervals.size();

  // Union connectivity: consecutive intervals must properly overlap.
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (intervals[i + 1].lo >= intervals[i].hi)
      bad.emplace_back(errc::disconnected,
                       "gap between " + ivs(intervals[i]) + " and " + ivs(intervals[i + 1]));

  // Only consecutive intervals may intersect.
  for (std::size_t i = 0; i + 2 < n; ++i)
    if (intervals[i + 2].lo < intervals[i].hi)
      bad.emplace_back(errc::triple_overlap,
                       ivs(intervals[i]) + " meets non-neighbor " + ivs(intervals[i + 2]));

  // Minimality: no interval inside the union of the others.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Interval> rest;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) rest.push_back(intervals[j]);
    // Merge strictly-overlapping open intervals into maximal components.
    std::vector<Interval> comps;
    for (const auto& iv : rest) {
      if (!comps.empty() && iv.lo < comps.back().hi)
        comps.back().hi = std::max(comps.back().hi, iv.hi);
      else
        comps.push_back(iv);
    }
    for (const auto& c : comps)
      if (c.lo <= intervals[i].lo && intervals[i].hi <= c.hi) {
        bad.emplace_back(errc::not_minimal,
                         ivs(intervals[i]) + " is contained in the union of the others");
        break;
      }
  }

  // Genericity: every proper subinterval has positive length.
  for (std::size_t i = 0; i < n; ++i) {
    double start = (i > 0 && intervals[i - 1].hi > intervals[i].lo) ? intervals[i - 1].hi
                                                                    : intervals[i].lo;
    double end = (i + 1 < n && intervals[i + 1].lo < intervals[i].hi) ? intervals[i + 1].lo
                                                                      : intervals[i].hi;
    if (!(start < end))
      bad.emplace_back(errc::not_generic,
                       "proper part of " + ivs(intervals[i]) + " is degenerate");
  }

  if (!bad.empty()) throw cover_error(std::move(bad));
  return GomicCover{std::move(intervals)};
}

DecomposedInterval decompose_interval(const GomicCover& cover, std::size_t index) {
  const auto& iv = cover.intervals.at(index);
  DecomposedInterval d;
  bool has_prev = index > 0 && cover.intervals[index - 1].hi > iv.lo;
  bool has_next =
      index + 1 < cover.size() && cover.intervals[index + 1].lo < iv.hi;
  if (has_prev)
    d.lower_overlap = Interval::open(iv.lo, cover.intervals[index - 1].hi);
  if (has_next)
    d.upper_overlap = Interval::open(cover.intervals[index + 1].lo, iv.hi);
  d.proper.lo = has_prev ? cover.intervals[index - 1].hi : iv.lo;
  d.proper.lo_closed = has_prev;
  d.proper.hi = has_next ? cover.intervals[index + 1].lo : iv.hi;
  d.proper.hi_closed = has_next;
  return d;
}

GomicCover uniform_cover(double lo, double hi, int n, double overlap_fraction) {
  if (!(n >= 1) || !(lo < hi) || !(overlap_fraction > 0) || !(overlap_fraction < 0.5))
    throw error(errc::invalid_parameters, "uniform_cover needs n>=1, lo<hi, 0<g<0.5");
  const double g = overlap_fraction;
  const double len = (hi - lo) / (n - g * (n - 1));
  std::vector<Interval> ivs;
  for (int i = 0; i < n; ++i) {
    double a = lo + i * (1 - g) * len;
    ivs.push_back(Interval::open(a, a + len));
  }
  ivs.back().hi = hi;  // guard against accumulated rounding
  return validate_gomic(std::move(ivs));
}

double Square::dist(double x, double y) const {
  double a = iv.lo, b = iv.hi;
  double d = 0;
  auto acc = [&d](double t) {
    if (t > d) d = t;
  };
  if (side == Side::above) {
    acc(a - x);
    acc(x - b);
    acc(a - y);
    acc(y - b);
    acc((x - y) / 2);
  } else {
    acc(a - y);
    acc(y - b);
    acc(a - x);
    acc(x - b);
    acc((y - x) / 2);
  }
  return d;
}

Staircase build_staircase(const GomicCover& cover, StairKind kind) {
  Staircase s{kind, {}};
  const auto& iv = cover.intervals;
  const std::size_t n = iv.size();
  switch (kind) {
    case StairKind::OrdStair:
      for (std::size_t i = 0; i < n; ++i) {
        Interval q;
        q.lo = i == 0 ? iv[i].lo : iv[i - 1].hi;
        q.lo_closed = i > 0;
        q.hi = iv[i].hi;
        q.hi_closed = false;
        s.squares.push_back({q, Side::above});
      }
      break;
    case StairKind::RelStair:
      for (std::size_t i = 0; i < n; ++i) {
        Interval q;
        q.lo = iv[i].lo;
        q.lo_closed = false;
        q.hi = i + 1 == n ? iv[i].hi : iv[i + 1].lo;
        q.hi_closed = i + 1 < n;
        s.squares.push_back({q, Side::below});
      }
      break;
    case StairKind::ExtMinusStair:
      for (std::size_t i = 0; i < n; ++i)
        s.squares.push_back({iv[i], Side::below});
      break;
    case StairKind::ExtStair: {
      std::vector<Interval> qs;
      for (std::size_t i = 0; i < n; ++i) qs.push_back(iv[i]);
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (iv[i + 1].lo < iv[i].hi)
          qs.push_back(Interval::open(iv[i].lo, iv[i + 1].hi));
      // Keep only maximal squares.
      for (std::size_t i = 0; i < qs.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < qs.size() && !dominated; ++j)
          if (j != i && qs[j].lo <= qs[i].lo && qs[i].hi <= qs[j].hi &&
              (qs[j].lo < qs[i].lo || qs[i].hi < qs[j].hi))
            dominated = true;
        if (!dominated) s.squares.push_back({qs[i], Side::below});
      }
      break;
    }
  }
  return s;
}

Classify classify_point(const Staircase& stair, double x, double y) {
  Classify c;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& sq : stair.squares) {
    if (sq.contains(x, y)) return {true, 0.0};
    best = std::min(best, sq.dist(x, y));
  }
  c.inside = false;
  c.dist = stair.squares.empty() ? std::numeric_limits<double>::infinity() : best;
  return c;
}

}  // namespace mnm
