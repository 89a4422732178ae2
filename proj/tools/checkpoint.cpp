#include "checkpoint.hpp"

#include <cstdio>
#include <filesystem>

#include "burau4/error.hpp"
#include "burau4/report.hpp"
#include "json.hpp"

namespace burau4::cli {

namespace {

using nlohmann::json;

json tuple_json(const WeightTuple& t) { return json::array({t.w0, t.w1, t.w2, t.w3, t.w14}); }

WeightTuple tuple_from(const json& j) {
  if (!j.is_array() || j.size() != 5) throw Error(ErrorCode::ParseError, "tuple must be 5 integers");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>(),
          j[3].get<std::int64_t>(), j[4].get<std::int64_t>()};
}

json tuples_json(const std::vector<WeightTuple>& ts) {
  json a = json::array();
  for (const auto& t : ts) a.push_back(tuple_json(t));
  return a;
}

std::vector<WeightTuple> tuples_from(const json& j) {
  std::vector<WeightTuple> out;
  for (const auto& t : j) out.push_back(tuple_from(t));
  return out;
}

// Kept arcs are not stored: sweeps that checkpoint never keep any.
json tally_json(const LevelTally& t) {
  return {{"level", t.level},
          {"tuples", t.tuples},
          {"genuine", t.genuine},
          {"multicurves", t.multicurves},
          {"possibly_zero", t.possibly_zero},
          {"zeros", tuples_json(t.zeros)},
          {"minnorm", t.minnorm},
          {"witnesses", tuples_json(t.witnesses)}};
}

LevelTally tally_from(const json& j) {
  LevelTally t;
  t.level = j.at("level").get<std::int64_t>();
  t.tuples = j.at("tuples").get<std::int64_t>();
  t.genuine = j.at("genuine").get<std::int64_t>();
  t.multicurves = j.at("multicurves").get<std::int64_t>();
  t.possibly_zero = j.at("possibly_zero").get<std::int64_t>();
  t.zeros = tuples_from(j.at("zeros"));
  t.minnorm = j.at("minnorm").get<std::int64_t>();
  t.witnesses = tuples_from(j.at("witnesses"));
  return t;
}

}  // namespace

std::string fingerprint(std::string_view config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : config) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_checkpoint(const Checkpoint& c) {
  json j;
  j["schema"] = c.schema;
  j["fingerprint"] = c.fingerprint;
  j["done"] = json::array();
  for (const auto& t : c.done) j["done"].push_back(tally_json(t));
  if (c.cursor) {
    j["cursor"] = {{"level", c.cursor->level},
                   {"next_partition", c.cursor->next_partition},
                   {"tally", tally_json(c.cursor->tally)}};
  } else {
    j["cursor"] = nullptr;
  }
  return j.dump(1) + '\n';
}

Checkpoint parse_checkpoint(std::string_view text) {
  try {
    const auto j = json::parse(text);
    Checkpoint c;
    c.schema = j.at("schema").get<int>();
    if (c.schema != kCheckpointSchema) {
      throw Error(ErrorCode::ParseError, "checkpoint schema " + std::to_string(c.schema) + " not supported");
    }
    c.fingerprint = j.at("fingerprint").get<std::string>();
    for (const auto& t : j.at("done")) c.done.push_back(tally_from(t));
    if (const auto& cur = j.at("cursor"); !cur.is_null()) {
      LevelCursor lc;
      lc.level = cur.at("level").get<std::int64_t>();
      lc.next_partition = cur.at("next_partition").get<std::size_t>();
      lc.tally = tally_from(cur.at("tally"));
      c.cursor = std::move(lc);
    }
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("checkpoint: ") + e.what());
  }
}

std::optional<Checkpoint> load_checkpoint(const std::string& path, const std::string& fp) {
  if (path.empty() || !std::filesystem::exists(path)) return std::nullopt;
  auto c = parse_checkpoint(read_file(path));
  if (c.fingerprint != fp) {
    throw Error(ErrorCode::CheckpointMismatch,
                path + " belongs to a different run (fingerprint " + c.fingerprint + ", expected " + fp + ")");
  }
  return c;
}

}  // namespace burau4::cli
