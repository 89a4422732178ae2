#include "burau4/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "burau4/admissibility.hpp"
#include "burau4/error.hpp"
#include "burau4/tracer.hpp"

namespace burau4 {

int StrandDiagram::rail_of(std::int64_t id) const noexcept {
  auto it = std::upper_bound(first.begin(), first.end(), id);
  return static_cast<int>(it - first.begin()) - 1;
}

StrandDiagram build_diagram(const RailWeights& w) {
  if (!satisfies_switch_conditions(w)) {
    throw Error(ErrorCode::InvalidWeights, "switch conditions fail");
  }
  StrandDiagram d;
  d.weights = w;
  for (std::size_t r = 0; r < kRailCount; ++r) d.first[r + 1] = d.first[r] + w[r];
  d.link.assign(static_cast<std::size_t>(2 * d.strand_count()), -1);

  // Position P counted from the left in the switch frame, converted to the
  // rail's own frame.
  auto rail_pos = [&](RailEnd e, bool stem, std::int64_t P) {
    const bool same = stem ? e.end == End::Head : e.end == End::Tail;
    return same ? P : w[e.rail] - 1 - P;
  };
  auto code = [&](RailEnd e, std::int64_t pos) {
    return 2 * d.id(e.rail, pos) + static_cast<int>(e.end);
  };

  for (const auto& sw : kSwitches) {
    const auto a = w[sw.left.rail];
    for (std::int64_t P = 0; P < w[sw.stem.rail]; ++P) {
      const auto s = code(sw.stem, rail_pos(sw.stem, true, P));
      const auto b = P < a ? code(sw.left, rail_pos(sw.left, false, P))
                           : code(sw.right, rail_pos(sw.right, false, P - a));
      d.link[static_cast<std::size_t>(s)] = b;
      d.link[static_cast<std::size_t>(b)] = s;
    }
  }
  return d;
}

StrandDiagram build_diagram(const WeightTuple& t) { return build_diagram(derive_weights(t)); }

std::vector<std::vector<std::int64_t>> components(const StrandDiagram& d) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<char> seen(static_cast<std::size_t>(d.strand_count()), 0);
  for (std::int64_t s = 0; s < d.strand_count(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<std::int64_t> cycle;
    std::int64_t cur = s;
    int exit_end = 1;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = 1;
      cycle.push_back(cur);
      const auto next = d.link[static_cast<std::size_t>(2 * cur + exit_end)];
      if (next < 0) throw Error(ErrorCode::InvalidWeights, "unglued strand end");
      cur = next / 2;
      exit_end = 1 - static_cast<int>(next % 2);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

ReferenceWalk walk_arc(const RailWeights& w, std::size_t max_visits) {
  ReferenceWalk out;
  int rail = kSwitches[kStartSwitch].stem.rail;
  int d = 1;
  std::int64_t g = w[kSwitches[kStartSwitch].left.rail];
  std::int64_t level = 0;

  for (;;) {
    if (out.visits.size() >= max_visits) {
      throw Error(ErrorCode::StepBudgetExceeded, "reference walk did not reach a cusp");
    }
    const auto idx = out.visits.size();
    out.visits.push_back({static_cast<std::uint8_t>(rail), static_cast<std::int8_t>(d), g});

    if (is_loop(rail)) {
      auto ev = loop_events(rail);
      auto apply = [&](const LoopEvent& e, int sgn) {
        const auto v = static_cast<std::int8_t>(e.value * sgn);
        if (!e.fixed_arc) {
          level += v;
          out.max_abs_level = std::max(out.max_abs_level, std::abs(level));
        }
        out.events.push_back({e.fixed_arc, v, level, idx});
      };
      if (d == 1) {
        for (const auto& e : ev) apply(e, 1);
      } else {
        for (auto it = ev.rbegin(); it != ev.rend(); ++it) apply(*it, -1);
      }
    }

    const RailEnd here{static_cast<std::uint8_t>(rail), d == 1 ? End::Head : End::Tail};
    const auto inc = incidence(here);
    const auto& sw = kSwitches[inc.sw];
    if (inc.role == SwitchRole::Stem) {
      const auto G = sw.stem.end == End::Head ? g : w[rail] - g;
      const auto a = w[sw.left.rail];
      RailEnd branch{};
      std::int64_t gb = 0;
      if (G < a) {
        branch = sw.left;
        gb = G;
      } else if (G > a) {
        branch = sw.right;
        gb = G - a;
      } else {
        out.end_switch = inc.sw;
        return out;
      }
      rail = branch.rail;
      if (branch.end == End::Tail) {
        d = 1;
        g = gb;
      } else {
        d = -1;
        g = w[rail] - gb;
      }
    } else {
      const auto gb = here.end == End::Tail ? g : w[rail] - g;
      const auto gs = inc.role == SwitchRole::Left ? gb : w[sw.left.rail] + gb;
      rail = sw.stem.rail;
      if (sw.stem.end == End::Head) {
        d = -1;
        g = gs;
      } else {
        d = 1;
        g = w[rail] - gs;
      }
    }
  }
}

namespace {

struct Letter {
  bool fixed_arc;
  int value;
  std::int64_t level;
  int loop;
  std::size_t visit;
};

// Free reduction over cut letters; a fixed-arc crossing directly on top of
// another one closes a bigon and both go.
std::vector<ArcCrossing> cancel_bigons(const std::vector<Letter>& letters) {
  std::vector<Letter> stack;
  for (const auto& l : letters) {
    if (!stack.empty()) {
      const auto& top = stack.back();
      if (!l.fixed_arc && !top.fixed_arc && top.loop == l.loop && top.value == -l.value) {
        stack.pop_back();
        continue;
      }
      if (l.fixed_arc && top.fixed_arc) {
        if (top.value != -l.value || top.level != l.level) {
          throw Error(ErrorCode::NotAnArcBoundary, "bigon with mismatched crossings");
        }
        stack.pop_back();
        continue;
      }
    }
    stack.push_back(l);
  }
  std::vector<ArcCrossing> out;
  for (const auto& l : stack) {
    if (l.fixed_arc) out.push_back({l.value, l.level, l.visit});
  }
  return out;
}

std::vector<Letter> letters_of(const ReferenceWalk& walk) {
  std::vector<Letter> out;
  out.reserve(walk.events.size());
  for (const auto& e : walk.events) {
    out.push_back({e.fixed_arc, e.value, e.level, walk.visits[e.visit].rail, e.visit});
  }
  return out;
}

std::int64_t total_weight(const RailWeights& w) {
  std::int64_t s = 0;
  for (auto x : w) s += x;
  return s;
}

}  // namespace

std::vector<ArcCrossing> essential_crossings(const ReferenceWalk& walk) {
  return cancel_bigons(letters_of(walk));
}

std::vector<ArcCrossing> all_crossings(const ReferenceWalk& walk) {
  std::vector<ArcCrossing> out;
  for (const auto& e : walk.events) {
    if (e.fixed_arc) out.push_back({e.value, e.level, e.visit});
  }
  return out;
}

TraceOutcome trace_reference(const WeightTuple& t) {
  TraceOutcome out;
  out.mode = TraceMode::Exact;
  if (!is_admissible(t)) return out;

  const auto w = derive_weights(t);
  const auto diagram = build_diagram(w);
  const auto comps = components(diagram);
  const auto walk = walk_arc(w, static_cast<std::size_t>(total_weight(w)) + 4);
  const auto crossings = essential_crossings(walk);
  out.crossings = static_cast<std::int64_t>(crossings.size());

  if (comps.size() != 1) {
    out.status = TraceStatus::ProperMulticurve;
    return out;
  }

  // A single curve bounds a neighbourhood of the arc exactly when it runs
  // twice along every rail the arc uses and once more around each end.
  if (walk.end_switch != kEndSwitch) {
    throw Error(ErrorCode::NotAnArcBoundary, "arc from p3 ends at switch " +
                                                 std::string(kSwitches[walk.end_switch].name));
  }
  RailWeights visits{};
  for (const auto& v : walk.visits) ++visits[v.rail];
  for (std::size_t r = 0; r < kRailCount; ++r) {
    const std::int64_t extra = (r == 2 || r == 3) ? 1 : 0;
    if (w[r] != 2 * visits[r] + extra) {
      throw Error(ErrorCode::NotAnArcBoundary,
                  "rail " + std::to_string(r) + " is not covered twice by " + to_string(t));
    }
  }

  LaurentPolynomial p;
  for (const auto& c : crossings) p += LaurentPolynomial::monomial(c.sign, c.level);

  ArcRecord record;
  const auto left = left_thresholds(w);
  const auto right = right_thresholds(w);
  std::vector<const WalkVisit*> passes;
  for (const auto& v : walk.visits) {
    if (v.rail == 14) passes.push_back(&v);
  }
  for (std::size_t i = 0; i + 1 < passes.size(); ++i) {
    const auto& v = *passes[i];
    const int sym = v.dir < 0 ? left_symbol(left, w[14] - v.gap) : right_symbol(right, v.gap);
    record.entries.push_back(static_cast<std::uint8_t>(sym));
  }

  out.status = TraceStatus::GenuineArc;
  out.record = std::move(record);
  out.polynomial = std::move(p);
  return out;
}

// ---------------------------------------------------------------------------
// Planar picture. Punctures sit at (k, 0), k = 1..4, the fixed arc is the
// segment from p1 to p2 and cuts hang straight down from each puncture.

namespace {

struct Vec {
  double x = 0, y = 0;
};

Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }
Vec operator-(Vec a, Vec b) { return {a.x - b.x, a.y - b.y}; }
Vec operator*(double k, Vec a) { return {k * a.x, k * a.y}; }
Vec left_of(Vec v) { return {-v.y, v.x}; }
Vec unit(Vec v) {
  const double n = std::hypot(v.x, v.y);
  return n > 0 ? Vec{v.x / n, v.y / n} : Vec{0, 0};
}

constexpr double kBand = 0.06;
constexpr double kCuspY = 0.55;

Vec bezier(Vec p0, Vec p1, Vec p2, double s) {
  return ((1 - s) * (1 - s)) * p0 + (2 * (1 - s) * s) * p1 + (s * s) * p2;
}

Vec centerline(int rail, double s) {
  if (rail < 4) {
    const double th = 2 * std::numbers::pi * s;
    return {rail + 1 + 0.45 * std::sin(th) * std::sin(th / 2), kCuspY * std::cos(th)};
  }
  if (rail < 8) {
    const double x = rail - 3;
    return {x, kCuspY + (1.0 - kCuspY) * s};
  }
  switch (rail) {
    case 8: return bezier({1, 1}, {1.5, 1.5}, {2, 1}, s);
    case 9: return bezier({2, 1}, {2.1, 1.6}, {1.5, 1.9}, s);
    case 10: return bezier({1, 1}, {0.9, 1.6}, {1.5, 1.9}, s);
    case 11: return bezier({3, 1}, {2.9, 1.6}, {3.5, 1.9}, s);
    case 12: return bezier({3, 1}, {3.5, 1.5}, {4, 1}, s);
    case 13: return bezier({3.5, 1.9}, {4.1, 1.6}, {4, 1}, s);
    default: return bezier({1.5, 1.9}, {2.5, 3.2}, {3.5, 1.9}, s);
  }
}

Vec switch_point(std::size_t sw) {
  static constexpr std::array<Vec, kSwitchCount> kPoints{{
      {1, kCuspY}, {2, kCuspY}, {3, kCuspY}, {4, kCuspY},
      {1, 1}, {2, 1}, {1.5, 1.9}, {3.5, 1.9}, {3, 1}, {4, 1},
  }};
  return kPoints[sw];
}

// Direction of travel from the stem into the branches.
Vec switch_direction(std::size_t sw) {
  return (sw < 4 || sw == 6 || sw == 7) ? Vec{0, -1} : Vec{0, 1};
}

// Point at a rail end for something at fraction f across the rail, counted
// from the left facing along the rail.
Vec end_point(const RailWeights& w, RailEnd e, double f) {
  const auto inc = incidence(e);
  const auto& sw = kSwitches[inc.sw];
  const bool stem = inc.role == SwitchRole::Stem;
  const bool same = stem ? e.end == End::Head : e.end == End::Tail;
  const double phi = same ? f : 1 - f;
  const double ws = static_cast<double>(w[sw.stem.rail]);
  double F = phi;
  if (inc.role == SwitchRole::Left) F = phi * static_cast<double>(w[e.rail]) / ws;
  if (inc.role == SwitchRole::Right) {
    F = (static_cast<double>(w[sw.left.rail]) + phi * static_cast<double>(w[e.rail])) / ws;
  }
  return switch_point(inc.sw) + ((0.5 - F) * kBand) * left_of(switch_direction(inc.sw));
}

std::vector<Vec> rail_polyline(const RailWeights& w, int rail, double f) {
  const bool stem = rail >= 4 && rail < 8;
  const int samples = rail < 4 ? 40 : 16;
  const double margin = stem ? 0.0 : (rail < 4 ? 0.06 : 0.15);
  std::vector<Vec> pts;
  pts.push_back(end_point(w, {static_cast<std::uint8_t>(rail), End::Tail}, f));
  if (!stem) {
    for (int i = 0; i <= samples; ++i) {
      const double s = margin + (1 - 2 * margin) * i / samples;
      const Vec c = centerline(rail, s);
      const Vec tangent = unit(centerline(rail, s + 1e-4) - centerline(rail, s - 1e-4));
      pts.push_back(c + ((0.5 - f) * kBand) * left_of(tangent));
    }
  }
  pts.push_back(end_point(w, {static_cast<std::uint8_t>(rail), End::Head}, f));
  return pts;
}

std::vector<std::vector<Vec>> strand_polylines(const RailWeights& w) {
  std::vector<std::vector<Vec>> out;
  for (int r = 0; r < static_cast<int>(kRailCount); ++r) {
    for (std::int64_t p = 0; p < w[r]; ++p) {
      out.push_back(rail_polyline(w, r, (static_cast<double>(p) + 0.5) / static_cast<double>(w[r])));
    }
  }
  return out;
}

std::vector<Vec> arc_polyline(const RailWeights& w, const ReferenceWalk& walk) {
  std::vector<Vec> pts{{3, 0}};
  for (const auto& v : walk.visits) {
    auto seg = rail_polyline(w, v.rail, static_cast<double>(v.gap) / static_cast<double>(w[v.rail]));
    if (v.dir < 0) std::reverse(seg.begin(), seg.end());
    pts.insert(pts.end(), seg.begin() + (pts.size() > 1 ? 1 : 0), seg.end());
  }
  pts.push_back({4, 0});
  return pts;
}

double orient(Vec a, Vec b, Vec c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

bool proper_intersection(Vec a, Vec b, Vec c, Vec d) {
  constexpr double eps = 1e-12;
  const double o1 = orient(a, b, c), o2 = orient(a, b, d);
  const double o3 = orient(c, d, a), o4 = orient(c, d, b);
  return ((o1 > eps && o2 < -eps) || (o1 < -eps && o2 > eps)) &&
         ((o3 > eps && o4 < -eps) || (o3 < -eps && o4 > eps));
}

struct Segment {
  Vec a, b;
  std::size_t owner;
};

// Counts properly crossing pairs between group x and group y (or within x
// when y is null) using a uniform grid.
std::int64_t count_crossings(const std::vector<Segment>& x, const std::vector<Segment>* y) {
  constexpr double x0 = 0.3, y0 = -0.8, cell = 0.025;
  constexpr int nx = 180, ny = 180;
  auto cell_of = [&](double vx, double vy) {
    const int cx = std::clamp(static_cast<int>((vx - x0) / cell), 0, nx - 1);
    const int cy = std::clamp(static_cast<int>((vy - y0) / cell), 0, ny - 1);
    return std::pair{cx, cy};
  };
  std::vector<std::vector<std::uint32_t>> grid(nx * ny);
  const auto& target = y ? *y : x;
  for (std::uint32_t i = 0; i < target.size(); ++i) {
    const auto& s = target[i];
    auto [ax, ay] = cell_of(std::min(s.a.x, s.b.x), std::min(s.a.y, s.b.y));
    auto [bx, by] = cell_of(std::max(s.a.x, s.b.x), std::max(s.a.y, s.b.y));
    for (int cx = ax; cx <= bx; ++cx) {
      for (int cy = ay; cy <= by; ++cy) grid[cx * ny + cy].push_back(i);
    }
  }
  std::int64_t count = 0;
  std::unordered_set<std::uint64_t> hit;
  for (std::uint32_t i = 0; i < x.size(); ++i) {
    const auto& s = x[i];
    auto [ax, ay] = cell_of(std::min(s.a.x, s.b.x), std::min(s.a.y, s.b.y));
    auto [bx, by] = cell_of(std::max(s.a.x, s.b.x), std::max(s.a.y, s.b.y));
    for (int cx = ax; cx <= bx; ++cx) {
      for (int cy = ay; cy <= by; ++cy) {
        for (auto j : grid[cx * ny + cy]) {
          if (!y && j <= i) continue;
          const auto& o = target[j];
          if (!proper_intersection(s.a, s.b, o.a, o.b)) continue;
          if (hit.insert((static_cast<std::uint64_t>(i) << 32) | j).second) ++count;
        }
      }
    }
  }
  return count;
}

std::vector<Segment> segments_of(const std::vector<std::vector<Vec>>& lines) {
  std::vector<Segment> out;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    for (std::size_t i = 0; i + 1 < lines[k].size(); ++i) out.push_back({lines[k][i], lines[k][i + 1], k});
  }
  return out;
}

struct Picture {
  RailWeights w{};
  std::vector<std::vector<Vec>> strands;
  std::vector<Vec> arc;
};

Picture draw(const WeightTuple& t) {
  Picture pic;
  pic.w = derive_weights(t);
  pic.strands = strand_polylines(pic.w);
  const auto walk = walk_arc(pic.w, static_cast<std::size_t>(total_weight(pic.w)) + 4);
  pic.arc = arc_polyline(pic.w, walk);
  return pic;
}

struct DrawnCrossing {
  double x;
  int sign;
  std::int64_t level;
};

// Walks the drawn arc, tracking the level by crossings of the drawn cuts.
std::vector<DrawnCrossing> drawn_crossings(const std::vector<Vec>& arc) {
  std::vector<DrawnCrossing> out;
  std::int64_t level = 0;
  for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
    const Vec a = arc[i], b = arc[i + 1];
    for (int k = 1; k <= 4; ++k) {
      if ((a.x < k) == (b.x < k)) continue;
      const double y = a.y + (b.y - a.y) * (k - a.x) / (b.x - a.x);
      if (y < 0) level += a.x < k ? -1 : 1;
    }
    if ((a.y < 0) != (b.y < 0)) {
      const double x = a.x + (b.x - a.x) * (0 - a.y) / (b.y - a.y);
      if (x > 1 && x < 2) out.push_back({x, b.y > a.y ? 1 : -1, level});
    }
  }
  return out;
}

}  // namespace

LaurentPolynomial geometric_polynomial(const WeightTuple& t) {
  const auto pic = draw(t);
  LaurentPolynomial p;
  for (const auto& c : drawn_crossings(pic.arc)) p += LaurentPolynomial::monomial(c.sign, c.level);
  return p;
}

LaurentPolynomial polynomial_lifting_fixed_arc(const WeightTuple& t) {
  const auto pic = draw(t);
  auto crossings = drawn_crossings(pic.arc);
  // The fixed arc never meets a cut, so its lift stays on level 0 and each
  // crossing sits at the difference of the two levels.
  std::sort(crossings.begin(), crossings.end(),
            [](const DrawnCrossing& a, const DrawnCrossing& b) { return a.x < b.x; });
  LaurentPolynomial p;
  for (const auto& c : crossings) p += LaurentPolynomial::monomial(-c.sign, -c.level);
  return p;
}

PlanarityReport check_planarity(const WeightTuple& t) {
  const auto pic = draw(t);
  const auto strands = segments_of(pic.strands);
  const auto arc = segments_of({pic.arc});
  const std::vector<Segment> fixed{{{1, 0}, {2, 0}, 0}};
  PlanarityReport r;
  r.strand_self_intersections = count_crossings(strands, nullptr);
  r.strand_fixed_arc_intersections = count_crossings(strands, &fixed);
  r.arc_strand_intersections = count_crossings(arc, &strands);
  r.arc_self_intersections = count_crossings(arc, nullptr);
  r.arc_fixed_arc_intersections = count_crossings(arc, &fixed);
  return r;
}

std::string render_svg(const WeightTuple& t) {
  const auto pic = draw(t);
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(4);
  auto pt = [&](Vec v) { os << v.x * 200 << ',' << (3.4 - v.y) * 200 << ' '; };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"880\" viewBox=\"0 0 1000 880\">\n";
  os << "<rect width=\"1000\" height=\"880\" fill=\"white\"/>\n";
  for (int k = 1; k <= 4; ++k) {
    os << "<line x1=\"" << k * 200 << "\" y1=\"" << 3.4 * 200 << "\" x2=\"" << k * 200
       << "\" y2=\"880\" stroke=\"#bbb\" stroke-dasharray=\"4 4\"/>\n";
  }
  for (const auto& line : pic.strands) {
    os << "<polyline fill=\"none\" stroke=\"#555\" stroke-width=\"0.6\" points=\"";
    for (auto v : line) pt(v);
    os << "\"/>\n";
  }
  os << "<polyline fill=\"none\" stroke=\"#c00\" stroke-width=\"1.2\" points=\"";
  for (auto v : pic.arc) pt(v);
  os << "\"/>\n";
  os << "<line x1=\"200\" y1=\"680\" x2=\"400\" y2=\"680\" stroke=\"#06c\" stroke-width=\"1.5\"/>\n";
  for (int k = 1; k <= 4; ++k) {
    os << "<circle cx=\"" << k * 200 << "\" cy=\"680\" r=\"4\" fill=\"black\"/>\n";
  }
  os << "<text x=\"10\" y=\"20\" font-family=\"monospace\" font-size=\"14\">" << to_string(t) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::vector<WeightTuple> default_probe_set(std::int64_t max_crossings) {
  std::vector<WeightTuple> out;
  for (std::int64_t c = 2; c <= max_crossings; c += 2) {
    for (const auto& t : enumerate_level(c)) {
      if (trace_reference(t).status == TraceStatus::GenuineArc) out.push_back(t);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Symbolic composition of the walk along a fixed path.

namespace {

struct Affine {
  std::int64_t ell = 0;
  std::array<std::int64_t, kRailCount> w{};
  std::int64_t c = 0;

  static Affine weight(int rail) {
    Affine a;
    a.w[rail] = 1;
    return a;
  }
  Affine operator+(const Affine& o) const {
    Affine r = *this;
    r.ell += o.ell;
    r.c += o.c;
    for (std::size_t i = 0; i < kRailCount; ++i) r.w[i] += o.w[i];
    return r;
  }
  Affine operator-() const {
    Affine r = *this;
    r.ell = -r.ell;
    r.c = -r.c;
    for (auto& x : r.w) x = -x;
    return r;
  }
  Affine operator-(const Affine& o) const { return *this + (-o); }
};

using PathKey = std::tuple<int, int, bool>;  // side, symbol, terminal

PathRule compose(Side side, int symbol, bool terminal, const std::vector<PathStep>& path) {
  PathRule rule;
  rule.side = side;
  rule.symbol = static_cast<std::uint8_t>(symbol);
  rule.terminal = terminal;
  if (path.size() > kMaxPathLength) throw Error(ErrorCode::SymbolUncovered, "path too long");
  rule.path_length = static_cast<std::uint8_t>(path.size());
  std::copy(path.begin(), path.end(), rule.path.begin());

  int rail = 14;
  int d = side == Side::Left ? -1 : 1;
  Affine ell;
  ell.ell = 1;
  Affine g = d < 0 ? Affine::weight(14) - ell : ell;

  std::vector<Letter> letters;
  std::int64_t level = 0;

  auto cross = [&](int next_rail, int next_dir) {
    const RailEnd here{static_cast<std::uint8_t>(rail), d == 1 ? End::Head : End::Tail};
    const auto inc = incidence(here);
    const auto& sw = kSwitches[inc.sw];
    if (inc.role == SwitchRole::Stem) {
      const Affine G = sw.stem.end == End::Head ? g : Affine::weight(rail) - g;
      const RailEnd target{static_cast<std::uint8_t>(next_rail), next_dir == 1 ? End::Tail : End::Head};
      Affine gb;
      if (target == sw.left) {
        gb = G;
      } else if (target == sw.right) {
        gb = G - Affine::weight(sw.left.rail);
      } else {
        throw Error(ErrorCode::SymbolUncovered, "path leaves a switch by a missing branch");
      }
      g = target.end == End::Tail ? gb : Affine::weight(next_rail) - gb;
    } else {
      if (next_rail != sw.stem.rail) throw Error(ErrorCode::SymbolUncovered, "path skips a stem");
      const Affine gb = here.end == End::Tail ? g : Affine::weight(rail) - g;
      const Affine gs = inc.role == SwitchRole::Left ? gb : Affine::weight(sw.left.rail) + gb;
      const int nd = sw.stem.end == End::Head ? -1 : 1;
      if (nd != next_dir) throw Error(ErrorCode::SymbolUncovered, "path direction mismatch");
      g = nd < 0 ? gs : Affine::weight(next_rail) - gs;
    }
    rail = next_rail;
    d = next_dir;
  };

  for (std::size_t i = 0; i < path.size(); ++i) {
    cross(path[i].rail, path[i].dir);
    if (is_loop(rail)) {
      auto ev = loop_events(rail);
      auto apply = [&](const LoopEvent& e, int sgn) {
        const int v = e.value * sgn;
        if (!e.fixed_arc) level += v;
        letters.push_back({e.fixed_arc, v, level, rail, i});
      };
      if (d == 1) {
        for (const auto& e : ev) apply(e, 1);
      } else {
        for (auto it = ev.rbegin(); it != ev.rend(); ++it) apply(*it, -1);
      }
    }
  }

  const auto crossings = cancel_bigons(letters);
  if (crossings.size() > kMaxCrossingTerms) throw Error(ErrorCode::SymbolUncovered, "too many crossings");
  rule.crossing_terms = static_cast<std::uint8_t>(crossings.size());
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    rule.crossings[i] = {static_cast<std::int8_t>(crossings[i].sign),
                         static_cast<std::int8_t>(crossings[i].level)};
  }
  rule.level_delta = static_cast<std::int8_t>(level);

  if (terminal) {
    rule.ell_sign = 0;
    return rule;
  }
  cross(14, side == Side::Left ? 1 : -1);
  const Affine out = d < 0 ? Affine::weight(14) - g : g;
  rule.ell_sign = static_cast<std::int8_t>(out.ell);
  rule.constant = static_cast<std::int8_t>(out.c);
  for (std::size_t r = 0; r < kRailCount; ++r) {
    rule.weight_coefficients[r] = static_cast<std::int8_t>(out.w[r]);
  }
  return rule;
}

}  // namespace

std::vector<PathRule> derive_transition_table(std::span<const WeightTuple> probes) {
  std::map<PathKey, std::vector<PathStep>> paths;
  for (const auto& t : probes) {
    if (trace_reference(t).status != TraceStatus::GenuineArc) continue;
    const auto w = derive_weights(t);
    const auto walk = walk_arc(w, static_cast<std::size_t>(total_weight(w)) + 4);
    const auto left = left_thresholds(w);
    const auto right = right_thresholds(w);
    for (std::size_t i = 0; i < walk.visits.size(); ++i) {
      const auto& v = walk.visits[i];
      if (v.rail != 14) continue;
      std::vector<PathStep> path;
      std::size_t j = i + 1;
      for (; j < walk.visits.size() && walk.visits[j].rail != 14; ++j) {
        path.push_back({walk.visits[j].rail, walk.visits[j].dir});
      }
      const bool terminal = j == walk.visits.size();
      const Side side = v.dir < 0 ? Side::Left : Side::Right;
      const int sym = side == Side::Left ? left_symbol(left, w[14] - v.gap) : right_symbol(right, v.gap);
      const PathKey key{static_cast<int>(side), terminal ? 0 : sym, terminal};
      auto [it, fresh] = paths.emplace(key, path);
      if (!fresh && it->second != path) {
        throw Error(ErrorCode::SymbolUncovered,
                    "symbol " + std::to_string(sym) + " takes two different paths, e.g. in " + to_string(t));
      }
    }
  }

  std::vector<PathRule> rules;
  const std::array<int, 8> left_symbols{1, 2, 3, 4, 5, 6, 8, 9};
  for (int s : left_symbols) {
    auto it = paths.find({static_cast<int>(Side::Left), s, false});
    if (it == paths.end()) throw Error(ErrorCode::SymbolUncovered, "left symbol " + std::to_string(s));
    rules.push_back(compose(Side::Left, s, false, it->second));
  }
  for (int s = 1; s <= 6; ++s) {
    auto it = paths.find({static_cast<int>(Side::Right), s, false});
    if (it == paths.end()) throw Error(ErrorCode::SymbolUncovered, "right symbol " + std::to_string(s));
    rules.push_back(compose(Side::Right, s, false, it->second));
  }
  auto it = paths.find({static_cast<int>(Side::Right), 0, true});
  if (it == paths.end()) throw Error(ErrorCode::SymbolUncovered, "terminal path");
  if (paths.size() != rules.size() + 1) {
    throw Error(ErrorCode::SymbolUncovered, "unexpected path kinds in probes");
  }
  rules.push_back(compose(Side::Right, 3, true, it->second));
  return rules;
}

}  // namespace burau4
