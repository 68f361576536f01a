#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tutte/bipoly.hpp"
#include "tutte/error.hpp"

using namespace tutte;

namespace {

const BiPoly x = BiPoly::x();
const BiPoly y = BiPoly::y();

BiPoly random_poly(std::mt19937_64& rng, unsigned max_deg) {
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  BiPoly p;
  for (int i = 0; i < 6; ++i) p.add_term(Integer(coef(rng)), deg(rng), deg(rng));
  return p;
}

// Coefficients of a product computed by the schoolbook double loop.
oracle::Coeffs naive_product(const oracle::Coeffs& a, const oracle::Coeffs& b) {
  oracle::Coeffs out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

TEST_CASE("zero coefficients are never stored") {
  BiPoly p = x + y;
  p -= x;
  CHECK(p == y);
  CHECK(p.term_count() == 1);
  p.add_term(-1, 0, 1);
  CHECK(p.is_zero());
  CHECK(BiPoly(0).is_zero());
}

TEST_CASE("product matches schoolbook multiplication") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const BiPoly a = random_poly(rng, 5);
    const BiPoly b = random_poly(rng, 5);
    CHECK(oracle::coeffs_of(a * b) == naive_product(oracle::coeffs_of(a), oracle::coeffs_of(b)));
  }
}

TEST_CASE("power, swap and degree") {
  const BiPoly p = pow(x + y, 3);
  CHECK(p == x * x * x + 3 * x * x * y + 3 * x * y * y + y * y * y);
  CHECK(p.degree_x() == 3);
  CHECK((x * y * y).degree_y() == 2);
  CHECK((x + 2 * y * y).swapped() == y + 2 * x * x);
  CHECK(pow(x, 0) == BiPoly(1));
}

TEST_CASE("evaluation at integer and rational points") {
  const BiPoly p = x * x + 3 * x * y - y + 5;
  CHECK(p.eval(Integer(2), Integer(-1)) == Integer(4 - 6 + 1 + 5));
  CHECK(p.eval(Rational(1, 2), Rational(2, 3)) == Rational(1, 4) + Rational(1) - Rational(2, 3) + 5);
}

TEST_CASE("exact division recovers the factor") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const BiPoly a = random_poly(rng, 4);
    BiPoly b = random_poly(rng, 3);
    if (b.is_zero()) b = x + 1;
    CHECK(exact_div(a * b, b) == a);
  }
  CHECK_THROWS_AS(exact_div(x * x + 1, x + 1), Error);
  CHECK_THROWS_AS(exact_div(x, BiPoly()), Error);
}

TEST_CASE("composition and rational substitution") {
  const BiPoly p = x * x * y + 2 * y;
  CHECK(compose(p, y, x) == p.swapped());
  CHECK(compose(p, x + 1, BiPoly(3)) == 3 * pow(x + 1, 2) + 6);
  // (x-1)^2 * p((x+1)/(x-1), y) for p = x^2: (x+1)^2.
  CHECK(subst_rational(x * x, x + 1, x - 1, y, BiPoly(1), pow(x - 1, 2)) == pow(x + 1, 2));
  CHECK(geometric_sum_x(3) == 1 + x + x * x);
  CHECK(geometric_sum_y(1) == BiPoly(1));
}

TEST_CASE("text rendering order") {
  // Ascending y, descending x within each y group.
  const BiPoly wheel3 = x * x * x + 3 * x * x + 2 * x + 4 * x * y + 2 * y + 3 * y * y + y * y * y;
  CHECK(to_text(wheel3) == "x^3 + 3*x^2 + 2*x + 4*x*y + 2*y + 3*y^2 + y^3");
  CHECK(to_text(BiPoly()) == "0");
  CHECK(to_text(BiPoly(1)) == "1");
  CHECK(to_text(x - y) == "x - y");
  CHECK(to_text(-x) == "-x");
}

TEST_CASE("text parses back, including implicit products") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const BiPoly p = random_poly(rng, 6);
    CHECK(parse_poly(to_text(p)) == p);
    CHECK(parse_json_poly(to_json(p)) == p);
  }
  CHECK(parse_poly("x^3+4x^2+3x+7xy+3y+6y^2+3y^3+y^4") ==
        pow(x, 3) + 4 * x * x + 3 * x + 7 * x * y + 3 * y + 6 * y * y + 3 * pow(y, 3) + pow(y, 4));
  CHECK(parse_poly("- 2 x y^2 + 1") == 1 - 2 * x * y * y);
  CHECK_THROWS_AS(parse_poly("x^"), Error);
  CHECK_THROWS_AS(parse_poly("x + z"), Error);
  CHECK_THROWS_AS(parse_json_poly("[[1, 0]]"), Error);
}

TEST_CASE("json keeps big integers as strings in graded order") {
  BiPoly p = y + x;
  p.add_term(Integer("123456789012345678901234567890"), 0, 0);
  CHECK(to_json(p) == R"([[0, 0, "123456789012345678901234567890"], [1, 0, "1"], [0, 1, "1"]])");
}

TEST_CASE("latex rendering") {
  CHECK(to_latex(x * x + 2 * x * y + pow(y, 10)) == "x^{2} + 2xy + y^{10}");
}

TEST_CASE("univariate interpolation reproduces a cubic") {
  const UniPoly t = UniPoly::var();
  const UniPoly p = t * t * t - 2 * t + Rational(1, 3);
  std::vector<std::pair<Rational, Rational>> pts;
  for (int i = 0; i < 4; ++i) pts.emplace_back(Rational(i), p.eval(Rational(i)));
  CHECK(interpolate(pts) == p);
  CHECK_FALSE(p.is_integral());
  CHECK_THROWS_AS((void)p.to_bipoly_x(), Error);
  CHECK(UniPoly::from_bipoly_x(x * x + 1).to_bipoly_x() == x * x + 1);
}

TEST_CASE("polynomial matrices") {
  PolyMatrix a(2, 2);
  a.at(0, 0) = x;
  a.at(0, 1) = BiPoly(1);
  a.at(1, 0) = BiPoly(1);
  CHECK(mat_pow(a, 0) == PolyMatrix::identity(2));
  const PolyMatrix a2 = mat_mul(a, a);
  CHECK(a2.at(0, 0) == x * x + 1);
  CHECK(trace(mat_pow(a, 3)) == trace(mat_mul(a2, a)));
  CHECK_THROWS_AS(mat_mul(a, PolyMatrix(3, 1)), Error);
}
