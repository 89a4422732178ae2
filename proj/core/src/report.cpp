#include "burau4/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "burau4/admissibility.hpp"
#include "burau4/error.hpp"
#include "json.hpp"

namespace burau4 {

namespace {

using nlohmann::json;

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

std::vector<std::string_view> lines(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto l : split(text, '\n')) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    if (!l.empty()) out.push_back(l);
  }
  return out;
}

std::int64_t to_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::ParseError, "expected integer, got '" + std::string(s) + "'");
  }
  return v;
}

// Rows of a CSV with the given header; every row must have as many fields.
std::vector<std::vector<std::string_view>> csv_rows(std::string_view text, std::string_view header) {
  const auto ls = lines(text);
  if (ls.empty() || ls.front() != header) {
    throw Error(ErrorCode::ParseError, "expected header '" + std::string(header) + "'");
  }
  const auto width = split(header, ',').size();
  std::vector<std::vector<std::string_view>> out;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    auto f = split(ls[i], ',');
    if (f.size() != width) throw Error(ErrorCode::ParseError, "bad row '" + std::string(ls[i]) + "'");
    out.push_back(std::move(f));
  }
  return out;
}

json tuple_json(const WeightTuple& t) { return json::array({t.w0, t.w1, t.w2, t.w3, t.w14}); }

WeightTuple tuple_from_json(const json& j) {
  if (!j.is_array() || j.size() != 5) throw Error(ErrorCode::ParseError, "tuple must be 5 integers");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>(),
          j[3].get<std::int64_t>(), j[4].get<std::int64_t>()};
}

std::string spaced(const WeightTuple& t) {
  return std::to_string(t.w0) + " " + std::to_string(t.w1) + " " + std::to_string(t.w2) + " " +
         std::to_string(t.w3) + " " + std::to_string(t.w14);
}

template <class F>
auto parse_json(std::string_view text, F&& f) {
  try {
    return f(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

constexpr std::string_view kLevelsHeader = "level,minnorm,mult,arcs_tested";
constexpr std::string_view kCertifyHeader =
    "level,arcs_tested,genuine,proper_multicurves,possibly_zero,zero_polynomials";
constexpr std::string_view kMin2kHeader = "level,kind,depth,value,witness";
constexpr std::string_view kAllExcluded = "all-excluded";
constexpr std::string_view kUnresolved = "unresolved";

}  // namespace

LevelRow to_row(const LevelStats& s) { return {s.level, s.minnorm, s.mult, s.arcs_tested}; }

std::string format_levels_csv(const std::vector<LevelRow>& rows) {
  std::string out(kLevelsHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.level) + ',' + std::to_string(r.minnorm) + ',' + std::to_string(r.mult) +
           ',' + std::to_string(r.arcs_tested) + '\n';
  }
  return out;
}

std::vector<LevelRow> parse_levels_csv(std::string_view text) {
  std::vector<LevelRow> out;
  for (const auto& f : csv_rows(text, kLevelsHeader)) {
    out.push_back({to_int(f[0]), to_int(f[1]), to_int(f[2]), to_int(f[3])});
  }
  return out;
}

CertifyRow to_certify_row(const LevelTally& t) {
  return {t.level, t.tuples, t.genuine, t.multicurves, t.possibly_zero,
          static_cast<std::int64_t>(t.zeros.size())};
}

std::string format_certify_csv(const std::vector<CertifyRow>& rows) {
  std::string out(kCertifyHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.level) + ',' + std::to_string(r.arcs_tested) + ',' +
           std::to_string(r.genuine) + ',' + std::to_string(r.multicurves) + ',' +
           std::to_string(r.possibly_zero) + ',' + std::to_string(r.zeros) + '\n';
  }
  return out;
}

std::vector<CertifyRow> parse_certify_csv(std::string_view text) {
  std::vector<CertifyRow> out;
  for (const auto& f : csv_rows(text, kCertifyHeader)) {
    out.push_back({to_int(f[0]), to_int(f[1]), to_int(f[2]), to_int(f[3]), to_int(f[4]), to_int(f[5])});
  }
  return out;
}

ArcEntry describe_arc(const WeightTuple& t) {
  const auto o = trace_exact(t);
  if (o.status != TraceStatus::GenuineArc) {
    throw Error(ErrorCode::PreconditionViolated, to_string(t) + " is not a genuine arc");
  }
  ArcEntry e;
  e.level = crossing_count(t);
  e.tuple = t;
  e.crossings = o.crossings;
  e.polynomial = canonical_form(*o.polynomial);
  e.norm = poly_norm(e.polynomial);
  e.record = *o.record;
  const auto cs = case_set(t);
  if (cs.case1) e.cases.push_back(1);
  if (cs.case2) e.cases.push_back(2);
  if (cs.case3) e.cases.push_back(3);
  return e;
}

std::string format_arc_line(const ArcEntry& e) {
  json j;
  j["level"] = e.level;
  j["tuple"] = tuple_json(e.tuple);
  j["crossings"] = e.crossings;
  j["polynomial"] = to_string(e.polynomial);
  j["norm"] = e.norm;
  j["record"] = to_string(e.record);
  j["cases"] = e.cases;
  return j.dump();
}

ArcEntry parse_arc_line(std::string_view line) {
  return parse_json(line, [](const json& j) {
    ArcEntry e;
    e.level = j.at("level").get<std::int64_t>();
    e.tuple = tuple_from_json(j.at("tuple"));
    e.crossings = j.at("crossings").get<std::int64_t>();
    e.polynomial = parse_polynomial(j.at("polynomial").get<std::string>());
    e.norm = j.at("norm").get<std::int64_t>();
    e.record = parse_record(j.at("record").get<std::string>());
    e.cases = j.at("cases").get<std::vector<int>>();
    return e;
  });
}

std::string format_arcs_jsonl(const std::vector<ArcEntry>& entries) {
  std::string out;
  for (const auto& e : entries) out += format_arc_line(e) + '\n';
  return out;
}

std::vector<ArcEntry> parse_arcs_jsonl(std::string_view text) {
  std::vector<ArcEntry> out;
  for (auto l : lines(text)) out.push_back(parse_arc_line(l));
  return out;
}

std::string format_families_json(const std::vector<FamilyDescriptor>& families) {
  json arr = json::array();
  for (const auto& f : families) {
    json j;
    j["base"] = tuple_json(f.base);
    j["step"] = tuple_json(f.step);
    j["kind"] = std::string(to_string(f.kind));
    j["signature"] = f.signature;
    j["verified_depth"] = f.verified_depth;
    j["base_level"] = f.base_level;
    j["base_norm"] = f.base_norm;
    arr.push_back(std::move(j));
  }
  json doc;
  doc["count"] = families.size();
  doc["families"] = std::move(arr);
  return doc.dump(2) + '\n';
}

std::vector<FamilyDescriptor> parse_families_json(std::string_view text) {
  return parse_json(text, [](const json& doc) {
    std::vector<FamilyDescriptor> out;
    for (const auto& j : doc.at("families")) {
      FamilyDescriptor f;
      f.base = tuple_from_json(j.at("base"));
      f.step = tuple_from_json(j.at("step"));
      f.kind = parse_family_kind(j.at("kind").get<std::string>());
      f.signature = j.at("signature").get<std::vector<std::int64_t>>();
      f.verified_depth = j.at("verified_depth").get<std::int64_t>();
      f.base_level = j.at("base_level").get<std::int64_t>();
      f.base_norm = j.at("base_norm").get<std::int64_t>();
      out.push_back(std::move(f));
    }
    return out;
  });
}

std::string format_min2k_csv(const std::vector<Min2kRow>& rows) {
  std::string out(kMin2kHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.level) + ',' + std::string(to_string(r.kind)) + ',' +
           std::to_string(r.depth) + ',' + (r.value ? std::to_string(*r.value) : std::string()) + ',' +
           (r.witness ? spaced(*r.witness) : std::string(r.unresolved ? kUnresolved : kAllExcluded)) + '\n';
  }
  return out;
}

std::vector<Min2kRow> parse_min2k_csv(std::string_view text) {
  std::vector<Min2kRow> out;
  for (const auto& f : csv_rows(text, kMin2kHeader)) {
    Min2kRow r;
    r.level = to_int(f[0]);
    r.kind = parse_family_kind(f[1]);
    r.depth = to_int(f[2]);
    if (!f[3].empty()) r.value = to_int(f[3]);
    if (f[4] == kUnresolved) {
      r.unresolved = true;
    } else if (f[4] != kAllExcluded) {
      r.witness = parse_tuple(std::string(f[4]));
    }
    if (r.value.has_value() != r.witness.has_value() || (r.unresolved && r.value)) {
      throw Error(ErrorCode::ParseError, "min2k row needs both value and witness or neither");
    }
    out.push_back(r);
  }
  return out;
}

std::string render_min2k_svg(const std::vector<Min2kRow>& rows) {
  constexpr double kWidth = 720, kHeight = 420, kLeft = 60, kRight = 160, kTop = 30, kBottom = 50;
  std::int64_t lo = 0, hi = 2, vmax = 1;
  bool first = true;
  for (const auto& r : rows) {
    lo = first ? r.level : std::min(lo, r.level);
    hi = first ? r.level : std::max(hi, r.level);
    first = false;
    if (r.value) vmax = std::max(vmax, *r.value);
  }
  if (hi == lo) hi = lo + 2;
  const double plot_w = kWidth - kLeft - kRight, plot_h = kHeight - kTop - kBottom;
  auto x = [&](double level) { return kLeft + (level - lo) / double(hi - lo) * plot_w; };
  auto y = [&](double v) { return kTop + plot_h - v / double(vmax) * plot_h; };

  std::map<std::pair<int, std::int64_t>, std::vector<const Min2kRow*>> series;
  for (const auto& r : rows) series[{static_cast<int>(r.kind), r.depth}].push_back(&r);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
     << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
     << kTop + plot_h << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double level = lo + (hi - lo) * i / 5.0;
    const double v = vmax * i / 5.0;
    os << "<text x=\"" << x(level) << "\" y=\"" << kTop + plot_h + 18
       << "\" font-size=\"11\" text-anchor=\"middle\">" << static_cast<std::int64_t>(level) << "</text>\n";
    os << "<text x=\"" << kLeft - 6 << "\" y=\"" << y(v) + 4
       << "\" font-size=\"11\" text-anchor=\"end\">" << static_cast<std::int64_t>(v + 0.5) << "</text>\n";
  }
  os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
     << "\" font-size=\"12\" text-anchor=\"middle\">crossings 2k</text>\n";
  os << "<text x=\"16\" y=\"" << kTop + plot_h / 2 << "\" font-size=\"12\" text-anchor=\"middle\""
     << " transform=\"rotate(-90 16 " << kTop + plot_h / 2 << ")\">min(2k)</text>\n";

  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  int index = 0;
  for (const auto& [key, members] : series) {
    const char* color = kColors[index % 4];
    const auto kind = static_cast<FamilyKind>(key.first);
    os << "<g class=\"series\" data-kind=\"" << to_string(kind) << "\" data-depth=\"" << key.second
       << "\" fill=\"" << color << "\">\n";
    for (const auto* r : members) {
      if (!r->value) continue;
      os << "<circle class=\"point\" cx=\"" << x(double(r->level)) << "\" cy=\"" << y(double(*r->value))
         << "\" r=\"2.5\"><title>" << r->level << ": " << *r->value << "</title></circle>\n";
    }
    os << "</g>\n";
    const double ly = kTop + 16.0 * index;
    os << "<circle cx=\"" << kLeft + plot_w + 16 << "\" cy=\"" << ly << "\" r=\"4\" fill=\"" << color
       << "\"/>\n<text x=\"" << kLeft + plot_w + 26 << "\" y=\"" << ly + 4 << "\" font-size=\"11\">"
       << to_string(kind) << ", depth " << key.second << "</text>\n";
    ++index;
  }
  os << "</svg>\n";
  return os.str();
}

void write_file(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot rename onto " + path + ": " + ec.message());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace burau4
