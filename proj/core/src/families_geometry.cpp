#include <string>

#include "binomial.hpp"
#include "tutte/conversions.hpp"
#include "tutte/error.hpp"
#include "tutte/families.hpp"

namespace tutte::families {

using detail::ipow;

namespace {

// Ground sets beyond this are refused: the t-exponent is the flat size.
constexpr unsigned long kMaxGeometrySize = 100000;

unsigned checked_size(const Integer& s) {
  if (s > kMaxGeometrySize) {
    fail(ErrorKind::SizeBudgetExceeded,
         "geometry has more than " + std::to_string(kMaxGeometrySize) + " points");
  }
  return static_cast<unsigned>(s.get_ui());
}

void require_prime_power(const Integer& q) {
  if (!is_prime_power(q)) fail(ErrorKind::NotPrimePower, q.get_str() + " is not a prime power");
}

// prod_{i=0}^{k-1} (lambda - q^i), lambda as x.
BiPoly falling_q(unsigned k, const Integer& q) {
  BiPoly out(1);
  for (unsigned i = 0; i < k; ++i) out *= BiPoly::x() - BiPoly(ipow(q, i));
  return out;
}

// Sum over the nonempty-rank flats of AG(dim, q): t^|F| times the
// characteristic polynomial of the contraction, a projective geometry.
BiPoly affine_flat_sum(unsigned dim, const Integer& q, bool at_t_one) {
  BiPoly out;
  for (unsigned k = 0; k <= dim; ++k) {
    const BiPoly t_part = at_t_one ? BiPoly(1) : BiPoly::y(checked_size(ipow(q, k)));
    out += scale(t_part * falling_q(dim - k, q), ipow(q, dim - k) * gaussian(dim, k, q));
  }
  return out;
}

}  // namespace

Integer gaussian(unsigned m, unsigned k, const Integer& q) {
  if (k > m) return 0;
  Integer num = 1;
  Integer den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= ipow(q, m) - ipow(q, i);
    den *= ipow(q, k) - ipow(q, i);
  }
  return num / den;
}

bool is_prime_power(const Integer& q) {
  if (q < 2) return false;
  Integer rest = q;
  // Smallest prime factor, then check that nothing else divides.
  Integer p = 2;
  while (p * p <= rest && !mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) ++p;
  if (p * p > rest) return true;  // q itself is prime
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) rest /= p;
  return rest == 1;
}

BiPoly projective_coboundary(unsigned dim, const Integer& q) {
  if (dim < 1) fail(ErrorKind::InvalidParameters, "projective dimension must be at least 1");
  require_prime_power(q);
  const unsigned r = dim + 1;
  checked_size(gaussian(r, 1, q));
  BiPoly out;
  for (unsigned k = 0; k <= r; ++k) {
    const BiPoly t_part = BiPoly::y(checked_size(gaussian(k, 1, q)));
    out += scale(t_part * falling_q(r - k, q), gaussian(r, k, q));
  }
  return out;
}

BiPoly projective(unsigned dim, const Integer& q) {
  return tutte_from_coboundary(projective_coboundary(dim, q), dim + 1);
}

BiPoly affine_coboundary(unsigned dim, const Integer& q) {
  if (dim < 1) fail(ErrorKind::InvalidParameters, "affine dimension must be at least 1");
  require_prime_power(q);
  checked_size(ipow(q, dim));
  // The empty flat contributes chi(lambda); summing the coboundary at t = 1
  // gives lambda^rank, which pins chi down from the other flats.
  const BiPoly chi = BiPoly::x(dim + 1) - affine_flat_sum(dim, q, true);
  return chi + affine_flat_sum(dim, q, false);
}

BiPoly affine(unsigned dim, const Integer& q) {
  return tutte_from_coboundary(affine_coboundary(dim, q), dim + 1);
}

BiPoly q_cone(const BiPoly& t, unsigned r, const Integer& q) {
  require_prime_power(q);
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  const BiPoly ym1 = y - 1;
  const BiPoly yq = BiPoly::y(checked_size(q));
  const BiPoly yq1 = yq - 1;

  // y (y^q - 1)^r / (y - 1)^(r+1) * T((x-1)(y-1)/(y^q-1) + 1, y^q)
  const RationalFunction first =
      RationalFunction{y * pow(yq1, r), pow(ym1, r + 1)} *
      subst_fraction(t, {(x - 1) * ym1 + yq1, yq1}, {yq, BiPoly(1)});
  // q^r (xy - x - y) / (y - 1) * T((x-1)/q + 1, y)
  const RationalFunction second =
      RationalFunction{scale(x * y - x - y, ipow(q, r)), ym1} *
      subst_fraction(t, {x - 1 + BiPoly(q), BiPoly(q)}, {y, BiPoly(1)});
  return to_polynomial(first + second);
}

}  // namespace tutte::families
