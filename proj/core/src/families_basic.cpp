#include <string>

#include "binomial.hpp"
#include "tutte/error.hpp"
#include "tutte/families.hpp"

namespace tutte::families {

using detail::binom;

namespace {

const BiPoly& xm1() {
  static const BiPoly v = BiPoly::x() - 1;
  return v;
}

const BiPoly& ym1() {
  static const BiPoly v = BiPoly::y() - 1;
  return v;
}

// xy - x - y: the change made by one relaxation.
BiPoly relax_delta() { return BiPoly::x() * BiPoly::y() - BiPoly::x() - BiPoly::y(); }

// Subset-size form: independent sets below rank, spanning sets above.
BiPoly uniform_by_size(unsigned r, unsigned n) {
  BiPoly out;
  for (unsigned i = 0; i < r; ++i) out += scale(pow(xm1(), r - i), binom(n, i));
  out += BiPoly(binom(n, r));
  for (unsigned i = r + 1; i <= n; ++i) out += scale(pow(ym1(), i - r), binom(n, i));
  return out;
}

// Basis-activity form.
BiPoly uniform_by_activity(unsigned r, unsigned n) {
  if (r == n) return BiPoly::x(n);
  if (r == 0) return BiPoly::y(n);
  BiPoly out;
  for (unsigned j = 1; j <= n - r; ++j) out.add_term(binom(n - j - 1, r - 1), 0, j);
  for (unsigned i = 1; i <= r; ++i) out.add_term(binom(n - i - 1, n - r - 1), i, 0);
  return out;
}

}  // namespace

BiPoly uniform(unsigned r, unsigned n) {
  if (r > n) fail(ErrorKind::InvalidRank, "uniform matroid needs 0 <= r <= n");
  BiPoly a = uniform_by_size(r, n);
  if (a != uniform_by_activity(r, n)) {
    fail(ErrorKind::PreconditionViolated, "uniform formulas disagree");
  }
  return a;
}

BiPoly cycle(unsigned n) {
  if (n < 2) fail(ErrorKind::InvalidSize, "cycle needs n >= 2");
  BiPoly out = BiPoly::y();
  for (unsigned i = 1; i < n; ++i) out += BiPoly::x(i);
  return out;
}

BiPoly multilink(unsigned n) { return cycle(n).swapped(); }

BiPoly sparse_paving(unsigned r, unsigned n, const Integer& ch_count) {
  if (r == 0 || r >= n) fail(ErrorKind::InvalidParameters, "sparse paving needs 0 < r < n");
  if (ch_count < 0 || ch_count >= binom(n, r)) {
    fail(ErrorKind::InvalidParameters, "circuit-hyperplane count out of range");
  }
  return uniform_by_size(r, n) + scale(relax_delta(), ch_count);
}

BiPoly relax_poly(const BiPoly& t) { return t - relax_delta(); }
BiPoly unrelax_poly(const BiPoly& t) { return t + relax_delta(); }

BiPoly at_x_equals_one(const BiPoly& t) { return compose(t, BiPoly(1), BiPoly::y()); }

BiPoly free_ext_poly(const BiPoly& t, const BiPoly& t_at_x1) {
  const BiPoly num = BiPoly::x() * t + (xm1() * BiPoly::y() - BiPoly::x()) * t_at_x1;
  return exact_div(num, xm1());
}

void validate(const PavingSpec& spec) {
  if (spec.r < 2) fail(ErrorKind::InvalidPartition, "paving rank must be at least 2");
  if (spec.n <= spec.r) fail(ErrorKind::InvalidPartition, "paving spec needs n > r");
  Integer covered = 0;
  for (const auto& [k, b] : spec.block_sizes) {
    if (k + 1 < spec.r || k > spec.n) {
      fail(ErrorKind::InvalidPartition, "block size " + std::to_string(k) + " out of range");
    }
    if (b < 0) fail(ErrorKind::InvalidPartition, "negative block count");
    covered += b * binom(k, spec.r - 1);
  }
  if (covered != binom(spec.n, spec.r - 1)) {
    fail(ErrorKind::InvalidPartition, "blocks do not cover every (r-1)-set exactly once");
  }
}

BiPoly paving(const PavingSpec& spec) {
  validate(spec);
  const long r = spec.r;
  const long n = spec.n;
  auto b = [&](long k) -> Integer {
    const auto it = spec.block_sizes.find(static_cast<unsigned>(k));
    return it == spec.block_sizes.end() ? Integer(0) : it->second;
  };
  // Sums over blocks of size >= j + r - 1, weighted by C(base + k, base).
  auto tail = [&](long j, long base) {
    Integer s = 0;
    for (long k = 0; k + j + r - 1 <= n; ++k) s += binom(base + k, base) * b(k + j + r - 1);
    return s;
  };

  BiPoly out;
  for (long i = 2; i <= r; ++i) out.add_term(binom(n - i - 1, r - i), i, 0);
  out.add_term(tail(0, r - 2) + binom(n - 2, r - 1) - binom(n, r - 1), 1, 0);
  for (long j = 1; j <= n; ++j) {
    out.add_term(tail(j, r - 2), 1, j);
    out.add_term(binom(n - j - 1, r - 1) - tail(j, r - 1), 0, j);
  }
  return out;
}

BiPoly catalan(unsigned n) {
  if (n < 2) fail(ErrorKind::InvalidSize, "Catalan matroid needs n >= 2");
  BiPoly out;
  const long nn = n;
  for (long s = 3; s <= nn + 1; ++s) {
    Integer c = (s - 2) * binom(2 * nn - s - 1, nn - s + 1);
    if (!mpz_divisible_ui_p(c.get_mpz_t(), n - 1)) {
      fail(ErrorKind::NonExactDivision, "Catalan coefficient is not integral");
    }
    c /= static_cast<unsigned long>(n - 1);
    if (c == 0) continue;
    for (long i = 1; i < s; ++i) out.add_term(c, static_cast<unsigned>(i), static_cast<unsigned>(s - i));
  }
  return out;
}

BiPoly grid2(unsigned n) {
  if (n < 1) fail(ErrorKind::InvalidSize, "grid needs n >= 1");
  const BiPoly a = BiPoly::x(2) + BiPoly::x() + 1;
  const BiPoly c = BiPoly::x() + 1;
  BiPoly l = BiPoly::x();
  BiPoly q(1);  // the grid with its last rung contracted
  for (unsigned k = 2; k <= n; ++k) {
    BiPoly next_l = a * l + BiPoly::y() * q;
    BiPoly next_q = c * l + BiPoly::y() * q;
    l = std::move(next_l);
    q = std::move(next_q);
  }
  return l;
}

BiPoly wheel_power_sum(unsigned k) {
  const BiPoly s = 1 + BiPoly::x() + BiPoly::y();
  const BiPoly xy = BiPoly::x() * BiPoly::y();
  BiPoly prev(2);
  if (k == 0) return prev;
  BiPoly cur = s;
  for (unsigned i = 2; i <= k; ++i) {
    BiPoly next = s * cur - xy * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BiPoly wheel(unsigned n) {
  if (n < 3) fail(ErrorKind::InvalidSize, "wheel needs n >= 3");
  return wheel_power_sum(n) + relax_delta() - 1;
}

BiPoly whirl(unsigned n) {
  if (n < 2) fail(ErrorKind::InvalidSize, "whirl needs n >= 2");
  return wheel_power_sum(n) - 1;
}

BiPoly one_sum(const std::vector<BiPoly>& polys) {
  BiPoly out(1);
  for (const auto& p : polys) out *= p;
  return out;
}

namespace {

// Derived Steiner systems S(t, t+1, n) with t = 4, 5 that are known to exist,
// beyond the small Witt designs.
bool known_steiner(unsigned r, unsigned n) {
  switch (r) {
    case 2: return n >= 4 && n % 2 == 0;
    case 3: return n >= 7 && (n % 6 == 1 || n % 6 == 3);
    case 4: return n >= 8 && (n % 6 == 2 || n % 6 == 4);
    case 5:
      for (unsigned v : {11U, 23U, 47U, 71U, 83U, 107U, 131U, 167U, 243U}) {
        if (n == v) return true;
      }
      return false;
    case 6:
      for (unsigned v : {12U, 24U, 48U, 72U, 84U, 108U, 132U, 168U, 244U}) {
        if (n == v) return true;
      }
      return false;
    default: return false;
  }
}

}  // namespace

BiPoly steiner_sparse(unsigned r, unsigned n, const Integer& ch_count) {
  if (!known_steiner(r, n)) {
    fail(ErrorKind::UnknownSystem, "no known Steiner system S(" + std::to_string(r - 1) + "," +
                                       std::to_string(r) + "," + std::to_string(n) + ")");
  }
  // Every (r-1)-set lies in exactly one block of size r.
  const Integer blocks = binom(n, r - 1) / r;
  if (ch_count != blocks) {
    fail(ErrorKind::UnknownSystem, "a Steiner system with these parameters has " +
                                       blocks.get_str() + " blocks");
  }
  return sparse_paving(r, n, ch_count);
}

}  // namespace tutte::families
