#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace burau4 {

/// Adds two coefficients, raising ErrorCode::ArithmeticOverflow instead of
/// wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);

/// Exact integer Laurent polynomial in t.
///
/// Stored as a dense coefficient window starting at min_exponent(). The
/// window is always trimmed: the first and last stored coefficients are
/// nonzero, and the zero polynomial has an empty window (its min_exponent is
/// reported as 0).
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(std::int64_t min_exponent, std::vector<std::int64_t> coefficients);

  static LaurentPolynomial monomial(std::int64_t coefficient, std::int64_t exponent);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t min_exponent() const noexcept { return min_exp_; }
  /// Highest exponent with a nonzero coefficient; equals min_exponent() - 1
  /// for the zero polynomial.
  std::int64_t max_exponent() const noexcept {
    return min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  std::span<const std::int64_t> coefficients() const noexcept { return coeffs_; }
  std::int64_t coefficient(std::int64_t exponent) const noexcept;
  std::size_t term_count() const noexcept;

  LaurentPolynomial shifted(std::int64_t k) const;
  LaurentPolynomial negated() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b.negated();
    return a;
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void normalize();

  std::int64_t min_exp_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// Sum of absolute values of the coefficients.
std::int64_t poly_norm(const LaurentPolynomial& p);

/// -p(t^-1): the polynomial obtained by exchanging the roles of the two arcs.
LaurentPolynomial poly_dual(const LaurentPolynomial& p);

/// True iff q = ±t^k p for some integer k.
bool poly_equal_up_to_unit(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// Shifted so the lowest exponent is 0 and negated if the lowest coefficient
/// is negative. Two polynomials are equal up to unit iff their canonical
/// forms coincide.
LaurentPolynomial canonical_form(const LaurentPolynomial& p);

/// Nonzero coefficients in increasing exponent order; gap widths are
/// dropped.
std::vector<std::int64_t> coefficient_signature(const LaurentPolynomial& p);

/// p(1).
std::int64_t evaluate_at_one(const LaurentPolynomial& p);

/// "c*t^e" terms in increasing exponent order joined by " + "; the zero
/// polynomial prints as "0".
std::string to_string(const LaurentPolynomial& p);

/// Inverse of to_string. Also accepts terms in any order and repeated
/// exponents, which are summed.
LaurentPolynomial parse_polynomial(std::string_view text);

}  // namespace burau4
