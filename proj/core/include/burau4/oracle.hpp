#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "burau4/laurent.hpp"
#include "burau4/outcome.hpp"
#include "burau4/track.hpp"
#include "burau4/transition_table.hpp"
#include "burau4/weights.hpp"

namespace burau4 {

// Slow reference implementation. Everything here works on explicit strands
// and is meant for validating the tracer on small tuples.

/// The multicurve realizing a set of rail weights: strand p of rail r is the
/// one with p strands to its left facing along the rail.
struct StrandDiagram {
  RailWeights weights{};
  /// Strand id of the first strand on each rail; back() is the total.
  std::array<std::int64_t, kRailCount + 1> first{};
  /// For each strand end (2 * id + end) the strand end glued to it.
  std::vector<std::int64_t> link;

  std::int64_t strand_count() const noexcept { return first.back(); }
  std::int64_t id(int rail, std::int64_t pos) const noexcept { return first[rail] + pos; }
  int rail_of(std::int64_t id) const noexcept;
};

/// Throws InvalidWeights if the weights break a switch condition.
StrandDiagram build_diagram(const RailWeights& w);
StrandDiagram build_diagram(const WeightTuple& t);

/// Closed curves of the diagram, each as strand ids in traversal order.
std::vector<std::vector<std::int64_t>> components(const StrandDiagram& d);

struct WalkVisit {
  std::uint8_t rail;
  std::int8_t dir;
  std::int64_t gap;  // strands to the left facing along the rail
};

struct WalkEvent {
  bool fixed_arc;       // crossing of the fixed arc, else a puncture cut
  std::int8_t value;    // crossing sign, or change of level
  std::int64_t level;   // level after the event
  std::size_t visit;
};

/// The arc from p3 followed through the gaps between strands.
struct ReferenceWalk {
  std::vector<WalkVisit> visits;
  std::vector<WalkEvent> events;
  std::uint8_t end_switch = 0;
  std::int64_t max_abs_level = 0;
};

/// Follows the gap the arc from p3 occupies until it runs into a cusp.
/// Throws StepBudgetExceeded after max_visits rail traversals.
ReferenceWalk walk_arc(const RailWeights& w, std::size_t max_visits);

struct ArcCrossing {
  int sign;
  std::int64_t level;
  std::size_t visit;
};

/// Crossings with the fixed arc after removing bigons: two consecutive
/// crossings cancel when the cut word between them reduces to the identity.
std::vector<ArcCrossing> essential_crossings(const ReferenceWalk& walk);

/// Every crossing of the walk with the fixed arc, bigons included.
std::vector<ArcCrossing> all_crossings(const ReferenceWalk& walk);

/// Full reference classification: component count, recognition of the arc
/// neighbourhood, polynomial, crossings and record.
TraceOutcome trace_reference(const WeightTuple& t);

/// Polynomial of the arc computed from the planar picture: levels come from
/// crossing the drawn cuts and signs from the drawn crossing directions.
LaurentPolynomial geometric_polynomial(const WeightTuple& t);

/// Same data read from the fixed arc's side: lifts the fixed arc and
/// intersects with the traced arc's lift.
LaurentPolynomial polynomial_lifting_fixed_arc(const WeightTuple& t);

struct PlanarityReport {
  std::int64_t strand_self_intersections = 0;
  std::int64_t strand_fixed_arc_intersections = 0;
  std::int64_t arc_strand_intersections = 0;
  std::int64_t arc_self_intersections = 0;
  std::int64_t arc_fixed_arc_intersections = 0;
};

/// Draws the multicurve and the arc on a fixed picture of the track and
/// counts intersections by segment geometry.
PlanarityReport check_planarity(const WeightTuple& t);

/// Debug picture of the strands, the traced arc and the fixed arc.
std::string render_svg(const WeightTuple& t);

/// All genuine arcs up to the given crossing count, in enumeration order.
std::vector<WeightTuple> default_probe_set(std::int64_t max_crossings = 24);

/// Reads off the path taken after each rail-14 pass in reference walks and
/// composes the position updates symbolically. Throws SymbolUncovered if a
/// reachable symbol is missing from the probes.
std::vector<PathRule> derive_transition_table(std::span<const WeightTuple> probes);

}  // namespace burau4
