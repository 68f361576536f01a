#include <string>

#include "binomial.hpp"
#include "tutte/conversions.hpp"
#include "tutte/error.hpp"
#include "tutte/families.hpp"

namespace tutte::families {

using detail::binom;

namespace {

// Dense polynomial in t.
using TPoly = std::vector<Integer>;

// acc += c * t^shift * p
void add_scaled(TPoly& acc, const TPoly& p, const Integer& c, std::size_t shift) {
  if (p.empty()) return;
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) mpz_addmul(acc[i + shift].get_mpz_t(), c.get_mpz_t(), p[i].get_mpz_t());
  }
}

// values[lambda] = B(lambda, t) for lambda = 0..d. Recovers B as a polynomial
// in lambda (degree <= d), divides by lambda and returns it with x = lambda,
// y = t.
BiPoly coboundary_from_samples(const std::vector<TPoly>& values) {
  std::size_t tdeg = 0;
  for (const auto& v : values) tdeg = std::max(tdeg, v.size());
  BiPoly out;
  for (std::size_t j = 0; j < tdeg; ++j) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (std::size_t l = 0; l < values.size(); ++l) {
      const Integer v = j < values[l].size() ? values[l][j] : Integer(0);
      pts.emplace_back(Rational(static_cast<long>(l)), Rational(v));
    }
    const UniPoly p = interpolate(pts);
    for (const auto& [k, c] : p.terms()) {
      if (c.get_den() != 1) fail(ErrorKind::NonExactDivision, "non-integral coboundary coefficient");
      if (k == 0) fail(ErrorKind::NonExactDivision, "bad colouring polynomial not divisible by lambda");
      out.add_term(c.get_num(), k - 1, static_cast<unsigned>(j));
    }
  }
  return out;
}

}  // namespace

BiPoly complete_graph_coboundary(unsigned n) {
  if (n < 1) fail(ErrorKind::InvalidSize, "complete graph needs n >= 1");
  if (n > kCompleteGraphLimit) {
    fail(ErrorKind::SizeBudgetExceeded,
         "complete graph limited to n <= " + std::to_string(kCompleteGraphLimit));
  }
  // f[m] = bad colouring polynomial of K_m with the colours used so far: the
  // newest colour class takes k of the m vertices, each pair of them bad.
  std::vector<TPoly> f(n + 1);
  f[0] = TPoly{1};
  std::vector<TPoly> samples{TPoly{}};
  for (unsigned colours = 1; colours <= n; ++colours) {
    std::vector<TPoly> next(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
      for (unsigned k = 0; k <= m; ++k) {
        add_scaled(next[m], f[m - k], binom(m, k), std::size_t{k} * (k - (k > 0 ? 1 : 0)) / 2);
      }
    }
    f = std::move(next);
    samples.push_back(f[n]);
  }
  return coboundary_from_samples(samples);
}

BiPoly complete_graph(unsigned n) {
  return tutte_from_coboundary(complete_graph_coboundary(n), n - 1);
}

BiPoly complete_bipartite_coboundary(unsigned n, unsigned m) {
  if (n < 1 || m < 1) fail(ErrorKind::InvalidSize, "complete bipartite graph needs n, m >= 1");
  if (n * m > kCompleteBipartiteLimit) {
    fail(ErrorKind::SizeBudgetExceeded, "complete bipartite graph limited to n*m <= " +
                                            std::to_string(kCompleteBipartiteLimit));
  }
  const unsigned w = m + 1;
  std::vector<TPoly> f((n + 1) * w);
  f[0] = TPoly{1};
  std::vector<TPoly> samples{TPoly{}};
  for (unsigned colours = 1; colours <= n + m; ++colours) {
    std::vector<TPoly> next((n + 1) * w);
    for (unsigned a = 0; a <= n; ++a) {
      for (unsigned b = 0; b <= m; ++b) {
        for (unsigned i = 0; i <= a; ++i) {
          for (unsigned j = 0; j <= b; ++j) {
            add_scaled(next[a * w + b], f[(a - i) * w + (b - j)], binom(a, i) * binom(b, j),
                       std::size_t{i} * j);
          }
        }
      }
    }
    f = std::move(next);
    samples.push_back(f[n * w + m]);
  }
  return coboundary_from_samples(samples);
}

BiPoly complete_bipartite(unsigned n, unsigned m) {
  return tutte_from_coboundary(complete_bipartite_coboundary(n, m), n + m - 1);
}

}  // namespace tutte::families
