#include "tutte/bipoly.hpp"

#include <algorithm>
#include <utility>

#include "tutte/error.hpp"

namespace tutte {

namespace {

// Products whose dense exponent grid stays below this many cells are
// accumulated in a flat array instead of the term map.
constexpr std::size_t kDenseProductCells = std::size_t{1} << 22;

}  // namespace

BiPoly::BiPoly(long constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0}, Integer(constant));
}

BiPoly::BiPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0}, constant);
}

BiPoly BiPoly::x(unsigned power) { return term(1, power, 0); }

BiPoly BiPoly::y(unsigned power) { return term(1, 0, power); }

BiPoly BiPoly::term(const Integer& coefficient, unsigned x_power, unsigned y_power) {
  BiPoly p;
  if (coefficient != 0) p.terms_.emplace(Exponent{x_power, y_power}, coefficient);
  return p;
}

unsigned BiPoly::degree_x() const {
  // Lexicographic order: the last key has the largest x-exponent.
  return terms_.empty() ? 0 : terms_.rbegin()->first.x;
}

unsigned BiPoly::degree_y() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.y);
  return d;
}

Integer BiPoly::coefficient(unsigned x_power, unsigned y_power) const {
  auto it = terms_.find(Exponent{x_power, y_power});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BiPoly::add_term(const Integer& c, unsigned x_power, unsigned y_power) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{x_power, y_power}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(c, e.x, e.y);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(-c, e.x, e.y);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) {
  *this = *this * other;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  if (a.is_zero() || b.is_zero()) return out;

  const std::size_t width = std::size_t{a.degree_y()} + b.degree_y() + 1;
  const std::size_t height = std::size_t{a.degree_x()} + b.degree_x() + 1;
  const std::size_t pairs = a.term_count() * b.term_count();

  if (width * height <= kDenseProductCells && width * height <= 64 * pairs) {
    std::vector<Integer> grid(width * height);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Integer& cell = grid[(std::size_t{ea.x} + eb.x) * width + ea.y + eb.y];
        mpz_addmul(cell.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      }
    }
    for (std::size_t i = 0; i < height; ++i) {
      for (std::size_t j = 0; j < width; ++j) {
        Integer& cell = grid[i * width + j];
        if (cell != 0) {
          out.terms_.emplace_hint(out.terms_.end(),
                                  Exponent{static_cast<unsigned>(i), static_cast<unsigned>(j)},
                                  std::move(cell));
        }
      }
    }
    return out;
  }

  Integer product;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      product = ca * cb;
      out.add_term(product, ea.x + eb.x, ea.y + eb.y);
    }
  }
  return out;
}

BiPoly operator-(const BiPoly& a) {
  BiPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BiPoly BiPoly::swapped() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.y, e.x}, c);
  return out;
}

Rational BiPoly::eval(const Rational& x0, const Rational& y0) const {
  const unsigned dx = degree_x();
  const unsigned dy = degree_y();
  std::vector<Rational> xp(dx + 1, Rational(1));
  std::vector<Rational> yp(dy + 1, Rational(1));
  for (unsigned i = 1; i <= dx; ++i) xp[i] = xp[i - 1] * x0;
  for (unsigned j = 1; j <= dy; ++j) yp[j] = yp[j - 1] * y0;
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += Rational(c) * xp[e.x] * yp[e.y];
  sum.canonicalize();
  return sum;
}

Integer BiPoly::eval(const Integer& x0, const Integer& y0) const {
  const unsigned dx = degree_x();
  const unsigned dy = degree_y();
  std::vector<Integer> xp(dx + 1, Integer(1));
  std::vector<Integer> yp(dy + 1, Integer(1));
  for (unsigned i = 1; i <= dx; ++i) xp[i] = xp[i - 1] * x0;
  for (unsigned j = 1; j <= dy; ++j) yp[j] = yp[j - 1] * y0;
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c * xp[e.x] * yp[e.y];
  return sum;
}

bool BiPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second > 0; });
}

BiPoly pow(const BiPoly& base, unsigned exponent) {
  BiPoly result(1);
  BiPoly square = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent > 0) square = square * square;
  }
  return result;
}

BiPoly scale(const BiPoly& p, const Integer& c) {
  if (c == 0) return {};
  BiPoly out;
  for (const auto& [e, coeff] : p.terms()) out.add_term(coeff * c, e.x, e.y);
  return out;
}

BiPoly exact_div(const BiPoly& p, const BiPoly& d) {
  if (d.is_zero()) fail(ErrorKind::NonExactDivision, "division by the zero polynomial");
  const auto& [lead_exp, lead_coeff] = *d.terms().rbegin();

  BiPoly::TermMap rem = p.terms();
  BiPoly quotient;
  Integer q;
  Integer product;
  while (!rem.empty()) {
    const auto [exp, coeff] = *rem.rbegin();
    if (exp.x < lead_exp.x || exp.y < lead_exp.y ||
        !mpz_divisible_p(coeff.get_mpz_t(), lead_coeff.get_mpz_t())) {
      fail(ErrorKind::NonExactDivision, "remainder is nonzero");
    }
    mpz_divexact(q.get_mpz_t(), coeff.get_mpz_t(), lead_coeff.get_mpz_t());
    const Exponent shift{exp.x - lead_exp.x, exp.y - lead_exp.y};
    for (const auto& [de, dc] : d.terms()) {
      product = q * dc;
      const Exponent target{de.x + shift.x, de.y + shift.y};
      auto [it, inserted] = rem.try_emplace(target, -product);
      if (!inserted) {
        it->second -= product;
        if (it->second == 0) rem.erase(it);
      }
    }
    quotient.add_term(q, shift.x, shift.y);
  }
  return quotient;
}

BiPoly compose(const BiPoly& p, const BiPoly& x_sub, const BiPoly& y_sub) {
  if (p.is_zero()) return {};
  const unsigned dx = p.degree_x();
  const unsigned dy = p.degree_y();

  // Coefficient rows P_i(y) such that p = sum_i x^i P_i(y).
  std::vector<std::vector<Integer>> rows(dx + 1, std::vector<Integer>(dy + 1));
  for (const auto& [e, c] : p.terms()) rows[e.x][e.y] = c;

  BiPoly result;
  for (unsigned ii = dx + 1; ii-- > 0;) {
    BiPoly inner;
    for (unsigned jj = dy + 1; jj-- > 0;) {
      inner = inner * y_sub + BiPoly(rows[ii][jj]);
    }
    result = result * x_sub + inner;
  }
  return result;
}

BiPoly geometric_sum_x(unsigned k) {
  BiPoly s;
  for (unsigned i = 0; i < k; ++i) s.add_term(1, i, 0);
  return s;
}

BiPoly geometric_sum_y(unsigned k) {
  BiPoly s;
  for (unsigned j = 0; j < k; ++j) s.add_term(1, 0, j);
  return s;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num * b.num, a.den * b.den};
}

RationalFunction subst_fraction(const BiPoly& p, const RationalFunction& x_sub,
                                const RationalFunction& y_sub) {
  if (p.is_zero()) return {BiPoly{}, BiPoly{1}};
  const unsigned dx = p.degree_x();
  const unsigned dy = p.degree_y();

  auto powers = [](const BiPoly& base, unsigned n) {
    std::vector<BiPoly> out;
    out.reserve(n + 1);
    out.emplace_back(1);
    for (unsigned k = 1; k <= n; ++k) out.push_back(out.back() * base);
    return out;
  };
  const auto xn = powers(x_sub.num, dx);
  const auto xd = powers(x_sub.den, dx);
  const auto yn = powers(y_sub.num, dy);
  const auto yd = powers(y_sub.den, dy);

  std::vector<BiPoly> inner(dx + 1);
  for (const auto& [e, c] : p.terms()) {
    inner[e.x] += scale(yn[e.y] * yd[dy - e.y], c);
  }
  BiPoly num;
  for (unsigned i = 0; i <= dx; ++i) {
    if (inner[i].is_zero()) continue;
    num += xn[i] * xd[dx - i] * inner[i];
  }
  return {num, xd[dx] * yd[dy]};
}

BiPoly subst_rational(const BiPoly& p, const RationalFunction& x_sub,
                      const RationalFunction& y_sub, const RationalFunction& factor) {
  const RationalFunction f = subst_fraction(p, x_sub, y_sub);
  return exact_div(factor.num * f.num, factor.den * f.den);
}

BiPoly subst_rational(const BiPoly& p, const BiPoly& x_num, const BiPoly& x_den,
                      const BiPoly& y_num, const BiPoly& y_den, const BiPoly& clear_factor) {
  return subst_rational(p, {x_num, x_den}, {y_num, y_den}, {clear_factor, BiPoly(1)});
}

BiPoly to_polynomial(const RationalFunction& f) { return exact_div(f.num, f.den); }

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) fail(ErrorKind::DimensionMismatch, "matrix dimensions must be positive");
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = BiPoly(1);
  return m;
}

BiPoly& PolyMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) fail(ErrorKind::DimensionMismatch, "matrix index out of range");
  return entries_[r * cols_ + c];
}

const BiPoly& PolyMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) fail(ErrorKind::DimensionMismatch, "matrix index out of range");
  return entries_[r * cols_ + c];
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) {
    fail(ErrorKind::DimensionMismatch, "inner dimensions differ in matrix product");
  }
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BiPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const BiPoly& bkj = b.at(k, j);
        if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

PolyMatrix mat_pow(const PolyMatrix& a, unsigned k) {
  if (a.rows() != a.cols()) fail(ErrorKind::DimensionMismatch, "power of a non-square matrix");
  PolyMatrix result = PolyMatrix::identity(a.rows());
  PolyMatrix square = a;
  while (k > 0) {
    if (k & 1U) result = mat_mul(result, square);
    k >>= 1U;
    if (k > 0) square = mat_mul(square, square);
  }
  return result;
}

BiPoly trace(const PolyMatrix& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::DimensionMismatch, "trace of a non-square matrix");
  BiPoly t;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a.at(i, i);
  return t;
}

}  // namespace tutte
