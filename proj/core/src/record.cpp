#include "burau4/record.hpp"

#include <cctype>

#include "burau4/error.hpp"
#include "burau4/outcome.hpp"

namespace burau4 {

ArcRecord::ArcRecord(std::initializer_list<int> symbols) {
  entries.reserve(symbols.size());
  for (int s : symbols) entries.push_back(static_cast<std::uint8_t>(s));
}

bool is_left_symbol(int s) noexcept { return s >= 1 && s <= 9 && s != 7; }
bool is_right_symbol(int s) noexcept { return s >= 1 && s <= 6; }

bool ArcRecord::well_formed() const noexcept {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const bool ok = (i % 2 == 0) ? is_left_symbol(entries[i]) : is_right_symbol(entries[i]);
    if (!ok) return false;
  }
  return true;
}

std::string to_string(const ArcRecord& r) {
  std::string out = "(";
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(static_cast<int>(r.entries[i]));
  }
  return out + ")";
}

ArcRecord parse_record(const std::string& text) {
  ArcRecord r;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      r.entries.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != '(' && c != ')' && c != ',' && c != ' ') {
      throw Error(ErrorCode::ParseError, "bad record '" + text + "'");
    }
  }
  return r;
}

std::string_view to_string(TraceStatus s) noexcept {
  switch (s) {
    case TraceStatus::GenuineArc: return "GenuineArc";
    case TraceStatus::ProperMulticurve: return "ProperMulticurve";
    case TraceStatus::NonAdmissible: return "NonAdmissible";
  }
  return "Unknown";
}

const LaurentPolynomial& TraceOutcome::exact_polynomial() const {
  if (mode != TraceMode::Exact) {
    throw Error(ErrorCode::ModeMisuse, "exact polynomial requested from a preliminary trace");
  }
  if (!polynomial) {
    throw Error(ErrorCode::PreconditionViolated, std::string("no polynomial for status ") +
                                                     std::string(to_string(status)));
  }
  return *polynomial;
}

}  // namespace burau4
