#include <algorithm>
#include <map>
#include <numeric>

#include "burau4/admissibility.hpp"
#include "burau4/analysis.hpp"
#include "burau4/error.hpp"

namespace burau4 {

std::string_view to_string(FamilyKind k) noexcept {
  return k == FamilyKind::TightlyKnit ? "tight" : "loose";
}

FamilyKind parse_family_kind(std::string_view text) {
  if (text == "tight" || text == "tightly-knit" || text == "TightlyKnit") return FamilyKind::TightlyKnit;
  if (text == "loose" || text == "loosely-knit" || text == "LooselyKnit") return FamilyKind::LooselyKnit;
  throw Error(ErrorCode::ParseError, "unknown family kind '" + std::string(text) + "'");
}

ArcSummary summarize(const LaurentPolynomial& p) { return {poly_norm(p), coefficient_signature(p)}; }

const std::optional<ArcSummary>& ArcCache::summary(const WeightTuple& t) {
  if (auto it = map_.find(t); it != map_.end()) return it->second;
  std::optional<ArcSummary> s;
  if (is_admissible(t)) {
    const auto o = trace(t, {TraceMode::Exact, kDefaultScreenBits, false});
    if (o.status == TraceStatus::GenuineArc) s = summarize(*o.polynomial);
  }
  return map_.emplace(t, std::move(s)).first->second;
}

void ArcCache::insert(const WeightTuple& t, const LaurentPolynomial& p) {
  map_.insert_or_assign(t, summarize(p));
}

namespace {

bool member_fits(const ArcSummary& base, const ArcSummary& member, FamilyKind kind) {
  if (kind == FamilyKind::TightlyKnit) return member.signature == base.signature;
  return member.norm >= base.norm;
}

// Members are not cached: deep members are large and rarely shared. The
// screen settles multicurves and, since the residue norm bounds the exact
// norm from below, most loose members without an exact trace.
bool member_ok(const ArcSummary& base, const WeightTuple& t, FamilyKind kind) {
  if (!t.nonnegative() || !is_admissible(t)) return false;
  const auto s = screen(t);
  if (s.status != TraceStatus::GenuineArc) return false;
  if (kind == FamilyKind::LooselyKnit && s.residue_norm >= base.norm) return true;
  const auto o = trace(t, {TraceMode::Exact, kDefaultScreenBits, false});
  return member_fits(base, summarize(*o.polynomial), kind);
}

}  // namespace

std::int64_t knit_depth(const WeightTuple& base, const WeightTuple& step, std::int64_t depth,
                        FamilyKind kind, ArcCache* cache) {
  if (step.is_zero()) throw Error(ErrorCode::PreconditionViolated, "family step is zero");
  if (depth < 1) throw Error(ErrorCode::PreconditionViolated, "family depth must be positive");
  ArcCache local;
  auto& c = cache ? *cache : local;
  const auto b = c.summary(base);
  if (!b) return -1;
  const ArcSummary base_summary = *b;
  for (std::int64_t i = 1; i <= depth; ++i) {
    if (!member_ok(base_summary, base + step * i, kind)) return i - 1;
  }
  return depth;
}

bool is_knit(const WeightTuple& base, const WeightTuple& step, std::int64_t depth,
             FamilyKind kind, ArcCache* cache) {
  return knit_depth(base, step, depth, kind, cache) == depth;
}

namespace {

struct IndexedArc {
  WeightTuple tuple;
  ArcSummary summary;
};

std::int64_t tuple_gcd(const WeightTuple& d) {
  return std::gcd(std::gcd(std::gcd(d.w0, d.w1), std::gcd(d.w2, d.w3)), d.w14);
}

class FamilyIndex {
 public:
  FamilyIndex(FamilyKind kind, std::int64_t depth) : kind_(kind), depth_(depth) {}

  void add_level(std::int64_t level, std::vector<IndexedArc> arcs) {
    levels_[level] = std::move(arcs);
  }

  // True if some family based at a smaller level has `arc` as member i >= 1.
  // Closer bases and shorter steps are tried first: their families are
  // cheaper to verify.
  bool excluded(std::int64_t level, const IndexedArc& arc) {
    for (auto it = levels_.lower_bound(level); it != levels_.begin();) {
      --it;
      for (const auto& base : it->second) {
        if (kind_ == FamilyKind::TightlyKnit) {
          if (base.summary.norm != arc.summary.norm || base.summary.signature != arc.summary.signature)
            continue;
        } else if (base.summary.norm > arc.summary.norm) {
          continue;
        }
        const auto d = arc.tuple - base.tuple;
        if (!d.nonnegative() || d.is_zero()) continue;
        const auto g = tuple_gcd(d);
        for (auto i = std::min(g, depth_); i >= 1; --i) {
          if (g % i != 0) continue;
          const WeightTuple step{d.w0 / i, d.w1 / i, d.w2 / i, d.w3 / i, d.w14 / i};
          if (knit(base, step)) return true;
        }
      }
    }
    return false;
  }

 private:
  bool knit(const IndexedArc& base, const WeightTuple& step) {
    const auto key = std::make_pair(base.tuple, step);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = true;
    for (std::int64_t i = 1; i <= depth_ && ok; ++i) ok = member_ok(base.summary, base.tuple + step * i, kind_);
    memo_.emplace(key, ok);
    return ok;
  }

  FamilyKind kind_;
  std::int64_t depth_;
  std::map<std::int64_t, std::vector<IndexedArc>> levels_;
  std::map<std::pair<WeightTuple, WeightTuple>, bool> memo_;
};

}  // namespace

std::vector<Min2kRow> min_excluding_families(std::int64_t lo, std::int64_t hi,
                                             const Min2kOptions& options) {
  if (lo < 2 || lo % 2 != 0 || hi % 2 != 0 || lo > hi) {
    throw Error(ErrorCode::PreconditionViolated, "level range must be even with 2 <= lo <= hi");
  }
  if (options.depth < 1) throw Error(ErrorCode::PreconditionViolated, "depth must be positive");
  if (options.initial_cap < 1) throw Error(ErrorCode::PreconditionViolated, "norm cap must be positive");

  for (auto cap = options.initial_cap;; cap *= 2) {
    const bool last = options.max_cap > 0 && cap * 2 > options.max_cap;
    auto sweep = options.sweep;
    sweep.keep_norm_cap = cap;
    FamilyIndex index(options.kind, options.depth);
    std::vector<Min2kRow> rows;
    bool short_cap = false;
    for (std::int64_t level = 2; level <= hi && (!short_cap || last); level += 2) {
      auto tally = scan_level(level, sweep);
      if (!tally) throw Error(ErrorCode::PreconditionViolated, "min2k sweep cancelled");
      std::vector<IndexedArc> arcs;
      arcs.reserve(tally->kept.size());
      for (const auto& k : tally->kept) arcs.push_back({k.tuple, summarize(k.polynomial)});
      std::stable_sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) {
        return a.summary.norm < b.summary.norm;
      });
      if (level >= lo) {
        Min2kRow row{level, options.kind, options.depth, std::nullopt, std::nullopt};
        for (const auto& a : arcs) {
          if (!index.excluded(level, a)) {
            row.value = a.summary.norm;
            row.witness = a.tuple;
            break;
          }
        }
        // Arcs above the cap were never looked at; only a complete index
        // can show that everything is excluded.
        // A value under the cap is exact either way: every base that could
        // exclude such an arc has norm at most the arc's.
        if (!row.value && static_cast<std::int64_t>(arcs.size()) < tally->genuine) {
          short_cap = true;
          row.unresolved = true;
        }
        rows.push_back(std::move(row));
        if (options.on_level) options.on_level(level, cap, &rows.back());
      } else if (options.on_level) {
        options.on_level(level, cap, nullptr);
      }
      index.add_level(level, std::move(arcs));
    }
    if (!short_cap || last) return rows;
  }
}

namespace {

struct Chain {
  std::vector<WeightTuple> members;
  std::optional<WeightTuple> step;
  ArcSummary summary;
  std::int64_t base_level = 0;
  std::int64_t last_level = 0;
};

}  // namespace

std::vector<FamilyDescriptor> extract_families(const std::vector<LevelStats>& levels,
                                               FamilyKind kind) {
  struct Witness {
    std::int64_t level;
    WeightTuple tuple;
  };
  std::vector<Witness> witnesses;
  for (const auto& l : levels) {
    for (const auto& t : l.witnesses) witnesses.push_back({l.level, t});
  }
  std::sort(witnesses.begin(), witnesses.end(), [](const auto& a, const auto& b) {
    return std::tie(a.level, a.tuple) < std::tie(b.level, b.tuple);
  });

  ArcCache cache;
  std::vector<Chain> chains;
  for (const auto& w : witnesses) {
    const auto s = cache.summary(w.tuple);
    if (!s) throw Error(ErrorCode::PreconditionViolated, to_string(w.tuple) + " is not a genuine arc");
    auto fits = [&](const Chain& c) { return member_fits(c.summary, *s, kind); };

    Chain* target = nullptr;
    for (auto& c : chains) {
      if (c.step && c.members.back() + *c.step == w.tuple && fits(c)) {
        target = &c;
        break;
      }
    }
    if (target) {
      target->members.push_back(w.tuple);
      target->last_level = w.level;
      continue;
    }
    for (auto& c : chains) {
      if (c.step || c.base_level >= w.level || !fits(c)) continue;
      const auto d = w.tuple - c.members.front();
      if (!d.nonnegative() || d.is_zero()) continue;
      if (!target || c.base_level > target->base_level) target = &c;
    }
    if (target) {
      target->step = w.tuple - target->members.front();
      target->members.push_back(w.tuple);
      target->last_level = w.level;
      continue;
    }
    chains.push_back({{w.tuple}, std::nullopt, *s, w.level, w.level});
  }

  std::vector<FamilyDescriptor> out;
  out.reserve(chains.size());
  for (const auto& c : chains) {
    FamilyDescriptor f;
    f.base = c.members.front();
    f.step = c.step.value_or(WeightTuple{});
    f.kind = kind;
    if (kind == FamilyKind::TightlyKnit) f.signature = c.summary.signature;
    f.verified_depth = static_cast<std::int64_t>(c.members.size()) - 1;
    f.base_level = c.base_level;
    f.base_norm = c.summary.norm;
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.base_level, a.base) < std::tie(b.base_level, b.base);
  });
  return out;
}

}  // namespace burau4
