#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace tutte {

using Integer = mpz_class;
using Rational = mpq_class;

struct Exponent {
  unsigned x = 0;
  unsigned y = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Sparse polynomial in two indeterminates with integer coefficients.
///
/// Terms are kept in a map keyed lexicographically on (x-exponent,
/// y-exponent); a stored coefficient is never zero, so structural equality is
/// polynomial equality. The same type carries the coboundary polynomial, with
/// x playing the role of lambda and y the role of t.
class BiPoly {
 public:
  using TermMap = std::map<Exponent, Integer>;

  BiPoly() = default;
  BiPoly(long constant);               // NOLINT(google-explicit-constructor)
  BiPoly(const Integer& constant);     // NOLINT(google-explicit-constructor)

  static BiPoly x(unsigned power = 1);
  static BiPoly y(unsigned power = 1);
  static BiPoly term(const Integer& coefficient, unsigned x_power, unsigned y_power);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  unsigned degree_x() const;
  unsigned degree_y() const;
  Integer coefficient(unsigned x_power, unsigned y_power) const;

  /// Accumulates c * x^i * y^j, dropping the entry if it cancels.
  void add_term(const Integer& c, unsigned x_power, unsigned y_power);

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  /// p(y, x).
  BiPoly swapped() const;

  Rational eval(const Rational& x0, const Rational& y0) const;
  Integer eval(const Integer& x0, const Integer& y0) const;

  bool has_nonnegative_coefficients() const;

 private:
  TermMap terms_;
};

BiPoly pow(const BiPoly& base, unsigned exponent);
BiPoly scale(const BiPoly& p, const Integer& c);

/// Quotient of an exact division in Z[x, y]. Throws NonExactDivision when d
/// does not divide p.
BiPoly exact_div(const BiPoly& p, const BiPoly& d);

/// p(x_sub, y_sub) for polynomial substitutions.
BiPoly compose(const BiPoly& p, const BiPoly& x_sub, const BiPoly& y_sub);

/// 1 + v + ... + v^(k-1) for v = x or y; used by thickening, stretching and the
/// class lemmas.
BiPoly geometric_sum_x(unsigned k);
BiPoly geometric_sum_y(unsigned k);

struct RationalFunction {
  BiPoly num;
  BiPoly den{1};
};

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

/// p(x_sub, y_sub) as an unreduced fraction: the denominator is
/// x_sub.den^deg_x(p) * y_sub.den^deg_y(p).
RationalFunction subst_fraction(const BiPoly& p, const RationalFunction& x_sub,
                                const RationalFunction& y_sub);

/// factor * p(x_sub, y_sub), cleared to a polynomial by one exact division.
BiPoly subst_rational(const BiPoly& p, const RationalFunction& x_sub,
                      const RationalFunction& y_sub, const RationalFunction& factor);

/// clear_factor * p(x_num / x_den, y_num / y_den).
BiPoly subst_rational(const BiPoly& p, const BiPoly& x_num, const BiPoly& x_den,
                      const BiPoly& y_num, const BiPoly& y_den, const BiPoly& clear_factor);

/// Exact value of a rational function that is known to be a polynomial.
BiPoly to_polynomial(const RationalFunction& f);

// ---------------------------------------------------------------------------
// Textual forms

struct VariableNames {
  std::string x = "x";
  std::string y = "y";
};

/// "x^2 + 3*x + 3*y + 2*y^2 + y^3": terms grouped by ascending y-exponent and,
/// within a group, descending x-exponent.
std::string to_text(const BiPoly& p, const VariableNames& names = {});
std::string to_latex(const BiPoly& p, const VariableNames& names = {});

/// [[i, j, "c"], ...] in graded order (total degree ascending, x first).
std::string to_json(const BiPoly& p);

/// Accepts the output of to_text, plus implicit products ("3x^2y") and
/// parentheses-free sums with '-' signs.
BiPoly parse_poly(std::string_view text, const VariableNames& names = {});
BiPoly parse_json_poly(std::string_view json);

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

// ---------------------------------------------------------------------------
// Univariate rational polynomials

class UniPoly {
 public:
  using TermMap = std::map<unsigned, Rational>;

  UniPoly() = default;
  UniPoly(long constant);             // NOLINT(google-explicit-constructor)
  UniPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static UniPoly var(unsigned power = 1);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned degree() const;
  Rational coefficient(unsigned power) const;
  void add_term(const Rational& c, unsigned power);

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }

  Rational eval(const Rational& v) const;
  bool is_integral() const;

  /// The polynomial with its variable renamed to x; throws NonExactDivision
  /// if a coefficient is not an integer.
  BiPoly to_bipoly_x() const;
  /// Reads a BiPoly that only involves x; y must not occur.
  static UniPoly from_bipoly_x(const BiPoly& p);

 private:
  TermMap terms_;
};

/// Newton interpolation through (node, value) pairs with distinct nodes.
UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

std::string to_text(const UniPoly& p, std::string_view var = "t");

// ---------------------------------------------------------------------------
// Dense matrices of BiPoly

class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols);

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BiPoly& at(std::size_t r, std::size_t c);
  const BiPoly& at(std::size_t r, std::size_t c) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BiPoly> entries_;
};

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mat_pow(const PolyMatrix& a, unsigned k);
BiPoly trace(const PolyMatrix& a);

}  // namespace tutte
