#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "burau4/admissibility.hpp"
#include "burau4/analysis.hpp"
#include "burau4/error.hpp"
#include "burau4/oracle.hpp"
#include "burau4/report.hpp"
#include "burau4/tracer.hpp"
#include "burau4/transition_table.hpp"
#include "checkpoint.hpp"
#include "sweep.hpp"

namespace burau4::cli {

namespace {

namespace fs = std::filesystem;

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error(ErrorCode::ParseError, "range must look like LO..HI");
  Range r;
  try {
    std::size_t used = 0;
    r.lo = std::stoll(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    const auto tail = text.substr(dots + 2);
    r.hi = std::stoll(tail, &used);
    if (used != tail.size()) throw std::invalid_argument(text);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "range must look like LO..HI, got '" + text + "'");
  }
  if (r.lo < 2 || r.lo > r.hi || r.lo % 2 != 0 || r.hi % 2 != 0) {
    throw Error(ErrorCode::ParseError, "range bounds must be even with 2 <= LO <= HI");
  }
  return r;
}

std::vector<std::int64_t> even_levels(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (auto l = lo; l <= hi; l += 2) out.push_back(l);
  return out;
}

std::string in_dir(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

// Options shared by the commands that sweep whole levels.
struct SweepArgs {
  int bits = kDefaultScreenBits;
  int workers = default_worker_count();
  std::string checkpoint;
  std::int64_t checkpoint_every = 1'000'000;
  std::int64_t stop_after = 0;
  std::string out_dir = ".";
  bool quiet = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("-m,--bits", bits, "Screening modulus exponent")->check(CLI::Range(1, 62));
    cmd->add_option("-j,--workers", workers, "Worker threads (default BURAU4_WORKERS or 1)")
        ->check(CLI::Range(1, 1024));
    cmd->add_option("--checkpoint", checkpoint, "Checkpoint file; resumed from when present");
    cmd->add_option("--checkpoint-every", checkpoint_every, "Tuples between checkpoint writes")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--stop-after", stop_after, "Stop after scanning this many tuples (exit 75)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("-o,--out", out_dir, "Output directory");
    cmd->add_flag("-q,--quiet", quiet, "No progress lines");
  }

  SweepPlan plan(std::vector<std::int64_t> levels, const std::string& config) const {
    SweepPlan p;
    p.levels = std::move(levels);
    p.options.screen_bits = bits;
    p.options.workers = workers;
    p.checkpoint_path = checkpoint;
    p.fingerprint = fingerprint(config + ";bits=" + std::to_string(bits) +
                                ";schema=" + std::to_string(kCheckpointSchema));
    p.checkpoint_every = checkpoint_every;
    p.stop_after = stop_after;
    p.quiet = quiet;
    return p;
  }
};

std::vector<LevelRow> level_rows(const std::vector<LevelTally>& done) {
  std::vector<LevelRow> rows;
  for (const auto& t : done) rows.push_back(to_row(stats_from_tally(t)));
  return rows;
}

int interrupted_exit() { return interrupt_flag().load() ? 130 : kInterrupted; }

int cmd_trace(const std::vector<std::string>& words, std::optional<int> screen_bits,
              std::ostream& out) {
  std::string text;
  for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
  const auto t = parse_tuple(text);
  out << "tuple: " << to_string(t) << '\n';
  const auto o = screen_bits ? trace_preliminary(t, *screen_bits) : trace_exact(t);
  out << "status: " << to_string(o.status) << '\n';
  if (o.status == TraceStatus::NonAdmissible) return kNotAdmissible;
  out << "crossings: " << o.crossings << '\n';
  if (o.status == TraceStatus::ProperMulticurve) return kMulticurve;
  out << "record: " << to_string(*o.record) << '\n';
  if (screen_bits) {
    out << "residues:";
    for (auto r : o.residues) out << ' ' << r;
    out << "\nscreen: " << to_string(screen_zero(t, *screen_bits)) << '\n';
  } else {
    const auto p = canonical_form(*o.polynomial);
    out << "polynomial: " << to_string(p) << '\n';
    out << "norm: " << poly_norm(p) << '\n';
  }
  return kOk;
}

int cmd_certify(std::int64_t max, const SweepArgs& args, std::ostream& out, std::ostream& err) {
  if (max < 2 || max % 2 != 0) throw Error(ErrorCode::ParseError, "--max must be even and >= 2");
  auto plan = args.plan(even_levels(2, max), "certify;max=" + std::to_string(max));
  plan.on_level = [&](const std::vector<LevelTally>& done) {
    std::vector<CertifyRow> rows;
    for (const auto& t : done) rows.push_back(to_certify_row(t));
    write_file(in_dir(args.out_dir, "levels.csv"), format_levels_csv(level_rows(done)));
    write_file(in_dir(args.out_dir, "certify.csv"), format_certify_csv(rows));
  };
  const auto result = run_sweep(plan, err);
  if (result.interrupted) return interrupted_exit();

  std::int64_t tuples = 0;
  std::vector<ArcEntry> zeros;
  for (const auto& t : result.levels) {
    tuples += t.tuples;
    for (const auto& z : t.zeros) zeros.push_back(describe_arc(z));
  }
  out << "levels 2.." << max << ": " << tuples << " tuples screened, " << zeros.size()
      << " zero polynomials\n";
  if (zeros.empty()) return kOk;
  write_file(in_dir(args.out_dir, "zeros.jsonl"), format_arcs_jsonl(zeros));
  for (const auto& z : zeros) out << "zero polynomial at " << to_string(z.tuple) << '\n';
  return kFound;
}

// Level sweep shared by stats, periodicity and families. Writes levels.csv
// and arcs.jsonl; nullopt when interrupted.
std::optional<std::vector<LevelStats>> sweep_stats(const std::string& command, const Range& r,
                                                   const SweepArgs& args, std::ostream& err) {
  auto plan = args.plan(even_levels(r.lo, r.hi),
                        command + ";range=" + std::to_string(r.lo) + ".." + std::to_string(r.hi));
  plan.on_level = [&](const std::vector<LevelTally>& done) {
    write_file(in_dir(args.out_dir, "levels.csv"), format_levels_csv(level_rows(done)));
  };
  const auto result = run_sweep(plan, err);
  if (result.interrupted) return std::nullopt;
  std::vector<LevelStats> stats;
  std::vector<ArcEntry> arcs;
  for (const auto& t : result.levels) {
    stats.push_back(stats_from_tally(t));
    for (const auto& w : t.witnesses) arcs.push_back(describe_arc(w));
  }
  write_file(in_dir(args.out_dir, "arcs.jsonl"), format_arcs_jsonl(arcs));
  return stats;
}

int cmd_stats(const Range& r, const SweepArgs& args, std::ostream& out, std::ostream& err) {
  const auto stats = sweep_stats("stats", r, args, err);
  if (!stats) return interrupted_exit();
  out << "level minnorm mult\n";
  for (const auto& s : *stats) out << s.level << ' ' << s.minnorm << ' ' << s.mult << '\n';
  return kOk;
}

int cmd_periodicity(const Range& r, const SweepArgs& args, std::ostream& out, std::ostream& err) {
  if (r.lo < 44 || r.hi > 500) throw Error(ErrorCode::ParseError, "periodicity range must lie in 44..500");
  const auto stats = sweep_stats("periodicity", r, args, err);
  if (!stats) return interrupted_exit();
  int bad = 0;
  for (const auto& s : *stats) {
    const auto em = periodic_minnorm(s.level);
    const auto ec = periodic_mult(s.level);
    if (s.minnorm == em && s.mult == ec) continue;
    ++bad;
    out << "level " << s.level << ": minnorm " << s.minnorm << " mult " << s.mult << ", expected "
        << em << ' ' << ec << '\n';
  }
  out << (bad == 0 ? "pattern holds" : "pattern broken") << " on " << r.lo << ".." << r.hi << '\n';
  return bad == 0 ? kOk : kFound;
}

int cmd_families(const Range& r, FamilyKind kind, std::int64_t depth, const std::string& arcs_path,
                 const SweepArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<LevelStats> stats;
  if (!arcs_path.empty()) {
    std::map<std::int64_t, LevelStats> by_level;
    for (const auto& e : parse_arcs_jsonl(read_file(arcs_path))) {
      if (e.level < r.lo || e.level > r.hi) continue;
      auto& s = by_level[e.level];
      s.level = e.level;
      s.minnorm = e.norm;
      s.witnesses.push_back(e.tuple);
      s.mult = static_cast<std::int64_t>(s.witnesses.size());
    }
    for (auto& [level, s] : by_level) stats.push_back(std::move(s));
  } else {
    auto swept = sweep_stats("families", r, args, err);
    if (!swept) return interrupted_exit();
    stats = std::move(*swept);
  }
  auto families = extract_families(stats, kind);
  ArcCache cache;
  std::size_t progressions = 0;
  for (auto& f : families) {
    if (f.step.is_zero()) continue;
    ++progressions;
    if (depth > 0) f.verified_depth = std::max(f.verified_depth, knit_depth(f.base, f.step, depth, kind, &cache));
  }
  write_file(in_dir(args.out_dir, "families.json"), format_families_json(families));
  out << families.size() << " families (" << progressions << " progressions, "
      << families.size() - progressions << " isolated witnesses)\n";
  return kOk;
}

int cmd_min2k(const Range& r, const std::vector<std::string>& kinds, const std::vector<std::int64_t>& depths,
              std::int64_t initial_cap, std::int64_t max_cap, const std::string& plot,
              const SweepArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<Min2kRow> rows;
  for (const auto& k : kinds) {
    for (const auto depth : depths) {
      Min2kOptions o;
      o.kind = parse_family_kind(k);
      o.depth = depth;
      o.sweep.screen_bits = args.bits;
      o.sweep.workers = args.workers;
      o.initial_cap = initial_cap;
      o.max_cap = max_cap;
      if (!args.quiet) {
        o.on_level = [&](std::int64_t level, std::int64_t cap, const Min2kRow* row) {
          err << to_string(o.kind) << " depth " << depth << " cap " << cap << " level " << level;
          if (row) {
            err << ": "
                << (row->value ? std::to_string(*row->value) : row->unresolved ? "unresolved" : "all excluded");
          }
          err << '\n';
        };
      }
      auto part = min_excluding_families(r.lo, r.hi, o);
      rows.insert(rows.end(), part.begin(), part.end());
    }
  }
  write_file(in_dir(args.out_dir, "min2k.csv"), format_min2k_csv(rows));
  if (!plot.empty()) write_file(plot, render_min2k_svg(rows));
  std::int64_t zeros = 0, excluded = 0, unresolved = 0;
  for (const auto& row : rows) {
    if (row.value && *row.value == 0) ++zeros;
    if (!row.value && !row.unresolved) ++excluded;
    if (row.unresolved) ++unresolved;
  }
  out << rows.size() << " rows, " << zeros << " zero values, " << excluded << " all excluded, "
      << unresolved << " unresolved\n";
  return zeros == 0 ? kOk : kFound;
}

int cmd_plot(const std::string& input, const std::string& output, std::ostream& out, std::ostream& err) {
  if (!fs::exists(input)) {
    err << "burau4: no such file " << input << '\n';
    return kNoInput;
  }
  const auto rows = parse_min2k_csv(read_file(input));
  write_file(output, render_min2k_svg(rows));
  out << "wrote " << output << '\n';
  return kOk;
}

int cmd_derive_table(std::int64_t max_crossings, bool emit, std::ostream& out) {
  const auto probes = default_probe_set(max_crossings);
  const auto derived = derive_transition_table(probes);
  const auto frozen = transition_table();
  const bool same = std::equal(derived.begin(), derived.end(), frozen.begin(), frozen.end());
  if (emit) out << format_table_source(derived);
  out << derived.size() << " rules derived from " << probes.size() << " probes; "
      << (same ? "identical to" : "different from") << " the built-in table\n";
  return same ? kOk : kFound;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Burau faithfulness sweeps for the 4-strand braid group"};
  app.name("burau4");
  app.require_subcommand(1);
  std::function<int()> action;

  std::vector<std::string> tuple_words;
  bool exact = false;
  std::optional<int> screen_bits;
  auto* trace = app.add_subcommand("trace", "Trace one weight tuple");
  trace->add_option("tuple", tuple_words, "w0 w1 w2 w3 w14")->required()->expected(1, 5);
  auto* exact_flag = trace->add_flag("--exact", exact, "Exact polynomial (default)");
  trace->add_option("--screen", screen_bits, "Preliminary trace mod 2^m")
      ->check(CLI::Range(1, 62))
      ->excludes(exact_flag);
  trace->callback([&] { action = [&] { return cmd_trace(tuple_words, screen_bits, out); }; });

  SweepArgs certify_args;
  std::int64_t max = 0;
  auto* certify = app.add_subcommand("certify", "Screen every admissible tuple up to a crossing bound");
  certify->add_option("--max", max, "Largest crossing count")->required();
  certify_args.attach(certify);
  certify->callback([&] { action = [&] { return cmd_certify(max, certify_args, out, err); }; });

  SweepArgs stats_args;
  std::string stats_range;
  auto* stats = app.add_subcommand("stats", "Minimum norm and multiplicity per level");
  stats->add_option("--range", stats_range, "Levels LO..HI")->required();
  stats_args.attach(stats);
  stats->callback([&] { action = [&] { return cmd_stats(parse_range(stats_range), stats_args, out, err); }; });

  SweepArgs periodic_args;
  std::string periodic_range = "44..150";
  auto* periodic = app.add_subcommand("periodicity", "Check the mod-6 pattern of minnorm and mult");
  periodic->add_option("--range", periodic_range, "Levels LO..HI within 44..500")->capture_default_str();
  periodic_args.attach(periodic);
  periodic->callback([&] {
    action = [&] { return cmd_periodicity(parse_range(periodic_range), periodic_args, out, err); };
  });

  SweepArgs family_args;
  std::string family_range = "44..200", family_kind = "tight", family_arcs;
  std::int64_t family_depth = 100;
  auto* families = app.add_subcommand("families", "Group minimum-norm witnesses into progressions");
  families->add_option("--range", family_range, "Levels LO..HI")->capture_default_str();
  families->add_option("--kind", family_kind, "tight or loose")->capture_default_str();
  families->add_option("--depth", family_depth, "Members checked per progression; 0 skips")->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  families->add_option("--arcs", family_arcs, "Reuse witnesses from an arcs.jsonl");
  family_args.attach(families);
  families->callback([&] {
    action = [&] {
      return cmd_families(parse_range(family_range), parse_family_kind(family_kind), family_depth,
                          family_arcs, family_args, out, err);
    };
  });

  SweepArgs min2k_args;
  std::string min2k_range;
  std::vector<std::string> min2k_kinds{"tight"};
  std::vector<std::int64_t> min2k_depths{100};
  std::int64_t initial_cap = 16, max_cap = 0;
  std::string min2k_plot;
  auto* min2k = app.add_subcommand("min2k", "Minimum norm ignoring later family members");
  min2k->add_option("--range", min2k_range, "Levels LO..HI")->required();
  min2k->add_option("--kind", min2k_kinds, "tight and/or loose")->delimiter(',');
  min2k->add_option("--depth", min2k_depths, "Members checked per family")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  min2k->add_option("--initial-cap", initial_cap, "First norm cap for indexed arcs")->capture_default_str()
      ->check(CLI::PositiveNumber);
  min2k->add_option("--max-cap", max_cap, "Largest norm cap; 0 for none")->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  min2k->add_option("--plot", min2k_plot, "Also write an SVG plot here");
  min2k_args.attach(min2k);
  min2k->callback([&] {
    action = [&] {
      return cmd_min2k(parse_range(min2k_range), min2k_kinds, min2k_depths, initial_cap, max_cap,
                       min2k_plot, min2k_args, out, err);
    };
  });

  std::string plot_in, plot_out;
  auto* plot = app.add_subcommand("plot", "SVG scatter of a min2k.csv");
  plot->add_option("input", plot_in, "min2k.csv")->required();
  plot->add_option("output", plot_out, "SVG file")->required();
  plot->callback([&] { action = [&] { return cmd_plot(plot_in, plot_out, out, err); }; });

  std::int64_t probe_max = 24;
  bool emit = false;
  auto* derive = app.add_subcommand("derive-table", "Rederive the transition table with the reference walker");
  derive->add_option("--max-crossings", probe_max, "Probe tuples up to this crossing count")->capture_default_str()
      ->check(CLI::Range(2, 200));
  derive->add_flag("--emit", emit, "Print the derived table as C++");
  derive->callback([&] { action = [&] { return cmd_derive_table(probe_max, emit, out); }; });

  std::vector<std::string> svg_words;
  std::string svg_out;
  auto* svg = app.add_subcommand("svg", "Draw the traced arc and curve as SVG");
  svg->add_option("tuple", svg_words, "w0 w1 w2 w3 w14")->required()->expected(1, 5);
  svg->add_option("-o,--output", svg_out, "SVG file")->required();
  svg->callback([&] {
    action = [&] {
      std::string text;
      for (const auto& w : svg_words) text += (text.empty() ? "" : " ") + w;
      write_file(svg_out, render_svg(parse_tuple(text)));
      out << "wrote " << svg_out << '\n';
      return int(kOk);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "burau4: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::ParseError:
        return kUsage;
      case ErrorCode::CheckpointMismatch:
        return kCheckpointMismatch;
      case ErrorCode::IoError:
        return kIo;
      default:
        return kInternal;
    }
  } catch (const std::exception& e) {
    err << "burau4: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace burau4::cli
