#include "burau4/laurent.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>

#include "burau4/error.hpp"

namespace burau4 {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DerivedNegative: return "DerivedNegative";
    case ErrorCode::OddHalf: return "OddHalf";
    case ErrorCode::NoZeroWeight: return "NoZeroWeight";
    case ErrorCode::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorCode::LeftOverflow: return "LeftOverflow";
    case ErrorCode::ModeMisuse: return "ModeMisuse";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::NotAnArcBoundary: return "NotAnArcBoundary";
    case ErrorCode::SymbolUncovered: return "SymbolUncovered";
    case ErrorCode::EmptyLevel: return "EmptyLevel";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CheckpointMismatch: return "CheckpointMismatch";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::ArithmeticOverflow, "coefficient addition overflowed");
  }
  return out;
}

LaurentPolynomial::LaurentPolynomial(std::int64_t min_exponent,
                                     std::vector<std::int64_t> coefficients)
    : min_exp_(min_exponent), coeffs_(std::move(coefficients)) {
  normalize();
}

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t coefficient, std::int64_t exponent) {
  return LaurentPolynomial(exponent, {coefficient});
}

void LaurentPolynomial::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](auto c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](auto c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  min_exp_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
}

std::int64_t LaurentPolynomial::coefficient(std::int64_t exponent) const noexcept {
  if (exponent < min_exp_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - min_exp_)];
}

std::size_t LaurentPolynomial::term_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](auto c) { return c != 0; }));
}

LaurentPolynomial LaurentPolynomial::shifted(std::int64_t k) const {
  if (is_zero()) return {};
  LaurentPolynomial out = *this;
  out.min_exp_ += k;
  return out;
}

LaurentPolynomial LaurentPolynomial::negated() const {
  LaurentPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) {
    *this = other;
    return *this;
  }
  const std::int64_t lo = std::min(min_exp_, other.min_exp_);
  const std::int64_t hi = std::max(max_exponent(), other.max_exponent());
  std::vector<std::int64_t> sum(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    sum[static_cast<std::size_t>(min_exp_ - lo) + i] = coeffs_[i];
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    auto& slot = sum[static_cast<std::size_t>(other.min_exp_ - lo) + i];
    slot = checked_add(slot, other.coeffs_[i]);
  }
  min_exp_ = lo;
  coeffs_ = std::move(sum);
  normalize();
  return *this;
}

std::int64_t poly_norm(const LaurentPolynomial& p) {
  std::int64_t n = 0;
  for (auto c : p.coefficients()) n = checked_add(n, c < 0 ? -c : c);
  return n;
}

LaurentPolynomial poly_dual(const LaurentPolynomial& p) {
  if (p.is_zero()) return {};
  auto c = p.coefficients();
  std::vector<std::int64_t> rev(c.rbegin(), c.rend());
  for (auto& x : rev) x = -x;
  return LaurentPolynomial(-p.max_exponent(), std::move(rev));
}

LaurentPolynomial canonical_form(const LaurentPolynomial& p) {
  if (p.is_zero()) return {};
  LaurentPolynomial out = p.shifted(-p.min_exponent());
  if (out.coefficients().front() < 0) out = out.negated();
  return out;
}

bool poly_equal_up_to_unit(const LaurentPolynomial& p, const LaurentPolynomial& q) {
  return canonical_form(p) == canonical_form(q);
}

std::vector<std::int64_t> coefficient_signature(const LaurentPolynomial& p) {
  std::vector<std::int64_t> sig;
  for (auto c : p.coefficients()) {
    if (c != 0) sig.push_back(c);
  }
  return sig;
}

std::int64_t evaluate_at_one(const LaurentPolynomial& p) {
  std::int64_t s = 0;
  for (auto c : p.coefficients()) s = checked_add(s, c);
  return s;
}

std::string to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += std::to_string(c[i]);
    out += "*t^";
    out += std::to_string(p.min_exponent() + static_cast<std::int64_t>(i));
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::ParseError, "bad integer '" + std::string(s) + "' in '" +
                                           std::string(whole) + "'");
  }
  return v;
}

}  // namespace

LaurentPolynomial parse_polynomial(std::string_view text) {
  const auto body = trim(text);
  if (body == "0") return {};
  if (body.empty()) throw Error(ErrorCode::ParseError, "empty polynomial text");

  std::map<std::int64_t, std::int64_t> terms;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    auto next = body.find(" + ", pos);
    auto term = trim(body.substr(pos, next == std::string_view::npos ? body.npos : next - pos));
    auto star = term.find("*t^");
    if (star == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "term '" + std::string(term) + "' lacks '*t^'");
    }
    auto c = parse_int(term.substr(0, star), body);
    auto e = parse_int(term.substr(star + 3), body);
    terms[e] = checked_add(terms[e], c);
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  LaurentPolynomial out;
  for (auto [e, c] : terms) out += LaurentPolynomial::monomial(c, e);
  return out;
}

}  // namespace burau4
