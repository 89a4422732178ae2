#include "burau4/weights.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "burau4/error.hpp"

namespace burau4 {

namespace {

RailWeights unchecked_derive(const WeightTuple& t) noexcept {
  const auto h = t.w14 / 2;
  return {t.w0,
          t.w1,
          t.w2,
          t.w3,
          2 * t.w0,
          2 * t.w1,
          2 * t.w2,
          2 * t.w3,
          t.w0 + t.w1 - h,
          -t.w0 + t.w1 + h,
          t.w0 - t.w1 + h,
          t.w2 - t.w3 + h,
          t.w2 + t.w3 - h,
          -t.w2 + t.w3 + h,
          t.w14};
}

}  // namespace

RailWeights derive_weights(const WeightTuple& t) {
  if (t.w14 % 2 != 0) throw Error(ErrorCode::OddHalf, "w14 is odd in " + to_string(t));
  if (!t.nonnegative()) throw Error(ErrorCode::DerivedNegative, "negative free weight in " + to_string(t));
  auto w = unchecked_derive(t);
  for (std::size_t r = 8; r <= 13; ++r) {
    if (w[r] < 0) {
      throw Error(ErrorCode::DerivedNegative,
                  "w" + std::to_string(r) + " = " + std::to_string(w[r]) + " for " + to_string(t));
    }
  }
  return w;
}

std::optional<RailWeights> try_derive_weights(const WeightTuple& t) noexcept {
  if (t.w14 % 2 != 0 || !t.nonnegative()) return std::nullopt;
  auto w = unchecked_derive(t);
  for (std::size_t r = 8; r <= 13; ++r) {
    if (w[r] < 0) return std::nullopt;
  }
  return w;
}

bool satisfies_switch_conditions(const RailWeights& w) noexcept {
  for (auto v : w) {
    if (v < 0) return false;
  }
  // Loop switches, then the two trigons.
  return w[4] == 2 * w[0] && w[5] == 2 * w[1] && w[6] == 2 * w[2] && w[7] == 2 * w[3] &&
         w[4] == w[8] + w[10] && w[5] == w[8] + w[9] && w[14] == w[9] + w[10] &&
         w[6] == w[11] + w[12] && w[7] == w[12] + w[13] && w[14] == w[11] + w[13];
}

std::string to_string(const WeightTuple& t) {
  return "(" + std::to_string(t.w0) + "," + std::to_string(t.w1) + "," + std::to_string(t.w2) +
         "," + std::to_string(t.w3) + "," + std::to_string(t.w14) + ")";
}

WeightTuple parse_tuple(const std::string& text) {
  std::vector<std::int64_t> values;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc()) throw Error(ErrorCode::ParseError, "bad tuple '" + text + "'");
      values.push_back(v);
      i = static_cast<std::size_t>(ptr - text.data());
    } else if (c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      throw Error(ErrorCode::ParseError, "unexpected character in tuple '" + text + "'");
    }
  }
  if (values.size() != 5) throw Error(ErrorCode::ParseError, "tuple needs 5 entries: '" + text + "'");
  return {values[0], values[1], values[2], values[3], values[4]};
}

}  // namespace burau4
