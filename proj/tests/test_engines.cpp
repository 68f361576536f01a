#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "tutte/conversions.hpp"
#include "tutte/engines.hpp"
#include "tutte/error.hpp"
#include "tutte/matroid.hpp"

using namespace tutte;

namespace {

const BiPoly x = BiPoly::x();
const BiPoly y = BiPoly::y();

// Signed corank sum straight from the rank function.
std::vector<mpz_class> char_oracle(const Matroid& m) {
  std::vector<mpz_class> out(m.rank() + 1);
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << m.size()); ++a) {
    const ElementSet s(a);
    out[m.rank() - m.rank(s)] += (s.size() % 2) ? -1 : 1;
  }
  return out;
}

}  // namespace

TEST_CASE("every engine matches the oracle on random matroids") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const Matroid m = oracle::random_matroid(rng, 9);
    const auto want = oracle::tutte_coeffs(m);
    CAPTURE(m.variant_name());
    CHECK(oracle::coeffs_of(tutte_subset(m)) == want);
    CHECK(oracle::coeffs_of(tutte_dc(m)) == want);
    CHECK(oracle::coeffs_of(tutte_activities(m)) == want);
    CHECK(oracle::coeffs_of(tutte_from_coboundary(coboundary(m), m.rank())) == want);
  }
}

TEST_CASE("graph recursion matches the oracle on multigraphs") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_graph(rng, 7, 11);
    const auto want =
        oracle::tutte_coeffs(g.edge_count(), [&g](std::uint64_t a) { return oracle::graph_rank(g, a); });
    CHECK(oracle::coeffs_of(tutte_dc(g)) == want);
  }
}

TEST_CASE("subset expansion does not depend on the thread count") {
  const Matroid m = graphic_matroid(graphs::complete(5));
  const BiPoly one = tutte_subset(m, 1);
  for (unsigned t : {2U, 3U, 8U}) CHECK(tutte_subset(m, t) == one);
}

TEST_CASE("activities do not depend on the element order") {
  const Matroid m = graphic_matroid(graphs::wheel(4));
  std::vector<unsigned> order(m.size());
  std::iota(order.begin(), order.end(), 0U);
  std::mt19937_64 rng(1);
  const BiPoly base = tutte_activities(m);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(tutte_activities(m, order) == base);
  }
  CHECK_THROWS_AS(tutte_activities(m, {0, 1}), Error);
}

TEST_CASE("small closed forms") {
  CHECK(tutte_dc(graphs::cycle(4)) == x * x * x + x * x + x + y);
  CHECK(tutte_dc(uniform_matroid(0, 0)) == BiPoly(1));
  CHECK(tutte_dc(uniform_matroid(1, 1)) == x);
  CHECK(tutte_dc(uniform_matroid(0, 1)) == y);
  CHECK(tutte_lattice_path(catalan_matroid(3)) == tutte_subset(catalan_matroid(3)));
  CHECK_THROWS_AS(tutte_lattice_path(uniform_matroid(2, 4)), Error);
}

TEST_CASE("budgets and size guards") {
  DcStats stats;
  (void)tutte_dc(graphs::complete(5), {}, &stats);
  CHECK(stats.nodes > 0);
  CHECK_THROWS_AS(tutte_dc(graphs::complete(7), DcOptions{5}), Error);
  try {
    (void)tutte_dc(uniform_matroid(5, 12), DcOptions{3});
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceBudgetExceeded);
  }
  try {
    (void)tutte_subset(uniform_matroid(2, 40));
    FAIL("expected a size error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GroundSetTooLarge);
  }
  CHECK_THROWS_AS(tutte_by_engine(uniform_matroid(1, 2), "magic"), Error);
}

TEST_CASE("characteristic polynomial agrees with the corank sum and with T") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 25; ++i) {
    const Matroid m = oracle::random_matroid(rng, 8);
    const UniPoly chi = char_poly(m);
    const auto want = char_oracle(m);
    for (unsigned k = 0; k < want.size(); ++k) CHECK(chi.coefficient(k) == Rational(want[k]));
    CHECK(characteristic_from_tutte(tutte_subset(m), m.rank()) == chi);
    CHECK(characteristic_from_coboundary(coboundary(m)) == chi);
  }
}

TEST_CASE("bad colouring polynomial against enumeration") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph(rng, 5, 7);
    for (unsigned c = 1; c <= 3; ++c) {
      auto got = oracle::coefficients(bad_colouring(g, c));
      auto want = oracle::bad_colouring(g, c);
      got.resize(std::max(got.size(), want.size()));
      want.resize(got.size());
      CHECK(got == want);
    }
  }
  CHECK_THROWS_AS(bad_colouring(graphs::complete(13), 2), Error);
}

TEST_CASE("grid transfer matrices") {
  for (unsigned m = 2; m <= 4; ++m) {
    for (unsigned n = 1; n <= 3; ++n) {
      const Graph g = graphs::grid(m, n);
      const auto want =
          oracle::tutte_coeffs(g.edge_count(), [&g](std::uint64_t a) { return oracle::graph_rank(g, a); });
      CHECK(oracle::coeffs_of(transfer_grid(m, n)) == want);
    }
  }
  CHECK(transfer_state_count(2) == 2);
  CHECK(transfer_state_count(3) == 5);
  CHECK(transfer_state_count(4) == 14);
  CHECK_THROWS_AS(transfer_grid(5, 2), Error);
}

TEST_CASE("wheel transfer against enumeration") {
  for (unsigned n = 3; n <= 5; ++n) {
    for (unsigned c = 2; c <= 3; ++c) {
      auto got = oracle::coefficients(transfer_wheel(n, c));
      auto want = oracle::bad_colouring(graphs::wheel(n), c);
      got.resize(std::max(got.size(), want.size()));
      want.resize(got.size());
      CHECK(got == want);
    }
  }
  CHECK(wheel_transfer_matrix(3).rows() == 3);
}
