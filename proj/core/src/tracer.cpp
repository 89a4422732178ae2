#include "burau4/tracer.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "burau4/admissibility.hpp"
#include "burau4/error.hpp"

namespace burau4 {

LeftThresholds left_thresholds(const RailWeights& w) noexcept {
  return {std::min({w[1], w[8], w[9]}),
          std::min(w[1], w[9]),
          w[9],
          w[0] + w[9] - w[8],
          w[10] + w[9] - w[8],
          w[1] + w[10] - w[8],
          w[14] - w[1],
          std::min({w[10], w[0] + w[10] - w[8], 2 * w[10] - w[8]})};
}

RightThresholds right_thresholds(const RailWeights& w) noexcept {
  return {std::min({w[3], w[12], w[13]}), std::min(w[3], w[13]), w[13], w[2] + w[13] - w[12],
          w[11] + w[13] - w[12]};
}

int left_symbol(const LeftThresholds& list, std::int64_t ell) noexcept {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (ell < list[i]) return static_cast<int>(i) + 1;
  }
  return 9;
}

int right_symbol(const RightThresholds& list, std::int64_t ell) noexcept {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (ell < list[i]) return static_cast<int>(i) + 1;
  }
  return 6;
}

bool is_terminal_position(const RailWeights& w, std::int64_t ell) noexcept {
  if (ell == w[3] && ell < w[13]) return true;
  const auto right = right_thresholds(w);
  const bool beyond = std::all_of(right.begin(), right.end(), [&](auto x) { return ell >= x; });
  return beyond && ell == 3 * w[3] + w[14];
}

std::string_view to_string(ScreenResult r) noexcept {
  switch (r) {
    case ScreenResult::DefinitelyNonzero: return "DefinitelyNonzero";
    case ScreenResult::PossiblyZero: return "PossiblyZero";
    case ScreenResult::ProperMulticurve: return "ProperMulticurve";
  }
  return "?";
}

std::int64_t step_budget(const WeightTuple& t) noexcept {
  return 4 * (crossing_count(t) + t.w14) + 16;
}

namespace {

constexpr std::uint8_t kNoRule = 0xff;

// Rule index by symbol; left symbol 7 has no rule because its threshold
// interval is always empty.
constexpr std::array<std::uint8_t, 10> kLeftRule{kNoRule, 0, 1, 2, 3, 4, 5, kNoRule, 6, 7};
constexpr std::array<std::uint8_t, 7> kRightRule{kNoRule, 8, 9, 10, 11, 12, 13};

// Each rail weight as a linear form in (w0, w1, w2, w3, w14/2).
constexpr std::int64_t kRailForm[kRailCount][5] = {
    {1, 0, 0, 0, 0},  {0, 1, 0, 0, 0},  {0, 0, 1, 0, 0},   {0, 0, 0, 1, 0},  {2, 0, 0, 0, 0},
    {0, 2, 0, 0, 0},  {0, 0, 2, 0, 0},  {0, 0, 0, 2, 0},   {1, 1, 0, 0, -1}, {-1, 1, 0, 0, 1},
    {1, -1, 0, 0, 1}, {0, 0, 1, -1, 1}, {0, 0, 1, 1, -1}, {0, 0, -1, 1, 1}, {0, 0, 0, 0, 2}};

// The hot loop relies on every rule moving ell by a constant and crossing
// the fixed arc at most once. Checked once against the frozen table.
struct HotRules {
  std::array<std::int8_t, 14> term_sign{};
  std::array<std::int8_t, 14> term_level{};
  std::array<std::int8_t, 14> level_delta{};
  // Position change per rule as a linear form in (w0, w1, w2, w3, w14/2).
  std::array<std::array<std::int64_t, 5>, 14> coefficients{};
  std::array<std::int64_t, 14> constant{};

  HotRules() {
    const auto rules = transition_table();
    if (rules.size() != 15) throw Error(ErrorCode::PreconditionViolated, "transition table size");
    for (std::size_t i = 0; i < 14; ++i) {
      const auto& r = rules[i];
      if (r.ell_sign != 1 || r.crossing_terms > 1 || r.terminal) {
        throw Error(ErrorCode::PreconditionViolated, "transition table shape");
      }
      if (r.crossing_terms == 1) {
        term_sign[i] = r.crossings[0].sign;
        term_level[i] = r.crossings[0].level;
      }
      level_delta[i] = r.level_delta;
      for (std::size_t k = 0; k < kRailCount; ++k) {
        for (std::size_t f = 0; f < 5; ++f) coefficients[i][f] += r.weight_coefficients[k] * kRailForm[k][f];
      }
      constant[i] = r.constant;
    }
  }
};

const HotRules& hot_rules() {
  static const HotRules rules;
  return rules;
}

// Per-symbol data for one direction of travel, indexed by symbol.
template <std::size_t N>
struct SideTable {
  // Symbol s is taken exactly when breaks[s-2] <= ell < breaks[s-1]: the
  // breaks are running maxima of the threshold list, so the symbol is one
  // more than the number of breaks at or below ell.
  std::array<std::int64_t, N> breaks{};
  std::array<std::int64_t, N + 2> delta{};
  std::array<std::int8_t, N + 2> sign{};
  std::array<std::int8_t, N + 2> term_level{};
  std::array<std::int8_t, N + 2> level_delta{};

  int symbol(std::int64_t ell) const noexcept {
    std::array<int, N> above{};
    for (std::size_t i = 0; i < N; ++i) above[i] = ell >= breaks[i];
    return 1 + tree_sum(above);
  }

  template <class T>
  static T tree_sum(const std::array<T, N>& v) noexcept {
    if constexpr (N == 8) {
      return ((v[0] + v[1]) + (v[2] + v[3])) + ((v[4] + v[5]) + (v[6] + v[7]));
    } else if constexpr (N == 5) {
      return ((v[0] + v[1]) + (v[2] + v[3])) + v[4];
    } else {
      T s{};
      for (auto x : v) s += x;
      return s;
    }
  }
};

// Everything the hot loop needs, computed once per tuple.
struct Prepared {
  RailWeights w{};
  std::int64_t right_max = 0;
  std::int64_t far_end = 0;
  SideTable<8> left;
  SideTable<5> right;

  explicit Prepared(const WeightTuple& t) : w(derive_weights(t)) {
    const auto& hot = hot_rules();
    std::array<std::int64_t, 14> delta{};
    for (std::size_t i = 0; i < delta.size(); ++i) {
      const auto& c = hot.coefficients[i];
      delta[i] = hot.constant[i] + c[0] * t.w0 + c[1] * t.w1 + c[2] * t.w2 + c[3] * t.w3 +
                 c[4] * (t.w14 / 2);
    }
    auto fill = [&](auto& side, const auto& list, const auto& lut) {
      std::int64_t run = list[0];
      for (std::size_t i = 0; i < list.size(); ++i) {
        run = std::max(run, list[i]);
        side.breaks[i] = run;
      }
      for (std::size_t s = 1; s < lut.size(); ++s) {
        const auto idx = lut[s];
        if (idx == kNoRule) {
          side.delta[s] = side.delta[s - 1];
          continue;
        }
        side.delta[s] = delta[idx];
        side.sign[s] = hot.term_sign[idx];
        side.term_level[s] = hot.term_level[idx];
        side.level_delta[s] = hot.level_delta[idx];
      }
    };
    fill(left, left_thresholds(w), kLeftRule);
    fill(right, right_thresholds(w), kRightRule);
    right_max = right.breaks.back();
    far_end = 3 * w[3] + w[14];
  }

  bool terminal(std::int64_t ell) const noexcept {
    return ((ell == w[3]) & (ell < w[13])) | ((ell >= right_max) & (ell == far_end));
  }
};

[[noreturn]] void out_of_range(Side side, std::int64_t ell) {
  throw Error(side == Side::Left ? ErrorCode::LeftOverflow : ErrorCode::PreconditionViolated,
              "position " + std::to_string(ell) + " outside rail 14");
}

template <bool Record, class Table, class Acc>
inline void take(const Table& table, int sym, TraceState& s, Acc& acc) {
  const int sign = table.sign[static_cast<std::size_t>(sym)];
  acc(s.level + table.term_level[static_cast<std::size_t>(sym)], sign);
  s.crossings += sign != 0;
  s.level += table.level_delta[static_cast<std::size_t>(sym)];
  s.ell += table.delta[static_cast<std::size_t>(sym)];
  ++s.steps;
  if constexpr (Record) s.record.entries.push_back(static_cast<std::uint8_t>(sym));
}

// Advances one pass. Returns false once the arc has reached p4.
template <bool Record, class Acc>
inline bool advance(const Prepared& p, TraceState& s, Acc& acc) {
  if (static_cast<std::uint64_t>(s.ell) > static_cast<std::uint64_t>(p.w[14])) {
    out_of_range(s.direction, s.ell);
  }
  if (s.direction == Side::Left) {
    take<Record>(p.left, p.left.symbol(s.ell), s, acc);
    s.direction = Side::Right;
    return true;
  }
  if (p.terminal(s.ell)) {
    s.finished = true;
    return false;
  }
  take<Record>(p.right, p.right.symbol(s.ell), s, acc);
  s.direction = Side::Left;
  return true;
}

// Symbol of every position 0..top, so the hot loop reads one byte per pass
// instead of comparing against each break.
template <std::size_t N>
void fill_symbols(const SideTable<N>& table, std::int64_t top, std::vector<std::uint8_t>& out) {
  out.resize(static_cast<std::size_t>(top) + 1);
  std::int64_t from = 0;
  for (std::size_t i = 0; i <= N; ++i) {
    const auto to = i < N ? std::clamp(table.breaks[i], from, top + 1) : top + 1;
    std::fill(out.begin() + from, out.begin() + to, static_cast<std::uint8_t>(i + 1));
    from = to;
  }
}

// Same as repeated advance() but keeps the state in locals: the
// accumulator writes through a pointer that could otherwise alias it.
template <bool Record, class Acc>
TraceState run(const Prepared& p, const WeightTuple& t, Acc& acc) {
  TraceState s = initial_state(t);
  const auto budget = step_budget(t);
  const auto top = static_cast<std::uint64_t>(p.w[14]);
  thread_local std::vector<std::uint8_t> left_map, right_map;
  fill_symbols(p.left, p.w[14], left_map);
  fill_symbols(p.right, p.w[14], right_map);
  const std::uint8_t* left = left_map.data();
  const std::uint8_t* right = right_map.data();
  std::int64_t ell = s.ell, level = 0, crossings = 0, steps = 0;
  auto pass = [&](const auto& table, int sym) {
    const auto i = static_cast<std::size_t>(sym);
    const int sign = table.sign[i];
    acc(level + table.term_level[i], sign);
    crossings += sign != 0;
    level += table.level_delta[i];
    ell += table.delta[i];
    ++steps;
    if constexpr (Record) s.record.entries.push_back(static_cast<std::uint8_t>(sym));
  };
  for (;;) {
    if (static_cast<std::uint64_t>(ell) > top) [[unlikely]] out_of_range(Side::Left, ell);
    pass(p.left, left[ell]);
    if (static_cast<std::uint64_t>(ell) > top) [[unlikely]] out_of_range(Side::Right, ell);
    if (p.terminal(ell)) break;
    pass(p.right, right[ell]);
    if (steps > budget) [[unlikely]] {
      throw Error(ErrorCode::StepBudgetExceeded, "trace of " + to_string(t) + " exceeded " +
                                                     std::to_string(budget) + " passes");
    }
  }
  s.ell = ell;
  s.level = level;
  s.crossings = crossings;
  s.steps = steps;
  s.direction = Side::Right;
  s.finished = true;
  return s;
}

template <class Acc>
TraceState run(const Prepared& p, const WeightTuple& t, Acc& acc, bool keep_record) {
  return keep_record ? run<true>(p, t, acc) : run<false>(p, t, acc);
}

// Dense exact coefficients around level 0, grown on demand.
struct DenseAccumulator {
  std::vector<std::int64_t> coeffs;
  std::int64_t origin;

  explicit DenseAccumulator(std::int64_t span)
      : coeffs(static_cast<std::size_t>(2 * span + 1), 0), origin(span) {}

  void operator()(std::int64_t level, int sign) {
    auto i = level + origin;
    if (i < 0 || i >= static_cast<std::int64_t>(coeffs.size())) {
      const auto grow = static_cast<std::int64_t>(coeffs.size());
      coeffs.insert(coeffs.begin(), static_cast<std::size_t>(grow), 0);
      coeffs.resize(coeffs.size() + static_cast<std::size_t>(grow), 0);
      origin += grow;
      i = level + origin;
    }
    coeffs[static_cast<std::size_t>(i)] += sign;
  }

  LaurentPolynomial polynomial() const { return LaurentPolynomial(-origin, coeffs); }
};

struct ModularAccumulator {
  std::int64_t* cells;
  std::uint64_t mask;

  void operator()(std::int64_t level, int sign) {
    cells[static_cast<std::uint64_t>(level) & mask] += sign;
  }
};

void check_bits(int bits) {
  if (bits < 1 || bits > kMaxScreenBits) {
    throw Error(ErrorCode::PreconditionViolated, "screen width must be 1.." +
                                                     std::to_string(kMaxScreenBits) + " bits");
  }
}

TraceStatus classify(const WeightTuple& t, std::int64_t counted) {
  const auto expected = crossing_count(t);
  if (counted == expected) return TraceStatus::GenuineArc;
  if (counted < expected) return TraceStatus::ProperMulticurve;
  throw Error(ErrorCode::PreconditionViolated, "counted " + std::to_string(counted) +
                                                   " crossings, more than the " +
                                                   std::to_string(expected) + " possible for " +
                                                   to_string(t));
}

}  // namespace

TraceState initial_state(const WeightTuple& t) {
  TraceState s;
  s.ell = t.w2;
  s.direction = Side::Left;
  return s;
}

void step(TraceState& state, const RailWeights& w, CrossingSink& sink) {
  if (state.finished) throw Error(ErrorCode::PreconditionViolated, "trace already finished");
  const WeightTuple t{w[0], w[1], w[2], w[3], w[14]};
  const Prepared p(t);
  auto acc = [&](std::int64_t level, int sign) {
    if (sign != 0) sink.add(level, sign);
  };
  advance<true>(p, state, acc);
}

TraceOutcome trace(const WeightTuple& t, const TraceOptions& options) {
  TraceOutcome out;
  out.mode = options.mode;
  if (!is_admissible(t)) return out;
  const Prepared p(t);

  TraceState s;
  if (options.mode == TraceMode::Exact) {
    DenseAccumulator acc(crossing_count(t) + 8);
    s = run(p, t, acc, options.keep_record);
    out.polynomial = acc.polynomial();
  } else {
    check_bits(options.screen_bits);
    out.residues.assign(std::size_t{1} << options.screen_bits, 0);
    ModularAccumulator acc{out.residues.data(), (std::uint64_t{1} << options.screen_bits) - 1};
    s = run(p, t, acc, options.keep_record);
  }
  out.crossings = s.crossings;
  out.status = classify(t, s.crossings);
  if (out.status == TraceStatus::GenuineArc) {
    if (options.keep_record) out.record = std::move(s.record);
  } else {
    out.polynomial.reset();
  }
  return out;
}

std::vector<std::int64_t> reduce_mod_power_of_two(const LaurentPolynomial& p, int bits) {
  check_bits(bits);
  std::vector<std::int64_t> cells(std::size_t{1} << bits, 0);
  const auto mask = (std::uint64_t{1} << bits) - 1;
  if (p.is_zero()) return cells;
  for (auto e = p.min_exponent(); e <= p.max_exponent(); ++e) {
    cells[static_cast<std::uint64_t>(e) & mask] += p.coefficient(e);
  }
  return cells;
}

Screening screen(const WeightTuple& t, int bits) {
  Screening out;
  if (!is_admissible(t)) return out;
  check_bits(bits);
  // Cells are left zeroed after each call; a throwing trace marks them dirty.
  thread_local std::vector<std::int64_t> cells;
  thread_local bool dirty = true;
  const auto width = std::size_t{1} << bits;
  if (dirty || cells.size() != width) cells.assign(width, 0);
  dirty = true;
  const Prepared p(t);
  ModularAccumulator acc{cells.data(), width - 1};
  const auto s = run<false>(p, t, acc);
  for (auto& c : cells) {
    out.residue_norm += c < 0 ? -c : c;
    c = 0;
  }
  dirty = false;
  out.crossings = s.crossings;
  out.passes = s.steps;
  out.status = classify(t, s.crossings);
  return out;
}

ScreenResult screen_zero(const WeightTuple& t, int bits) {
  if (!is_admissible(t)) {
    throw Error(ErrorCode::PreconditionViolated, to_string(t) + " is not admissible");
  }
  const auto s = screen(t, bits);
  if (s.status == TraceStatus::ProperMulticurve) return ScreenResult::ProperMulticurve;
  return s.residue_norm == 0 ? ScreenResult::PossiblyZero : ScreenResult::DefinitelyNonzero;
}

}  // namespace burau4
