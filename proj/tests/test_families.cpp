#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tutte/conversions.hpp"
#include "tutte/engines.hpp"
#include "tutte/error.hpp"
#include "tutte/families.hpp"
#include "tutte/matroid.hpp"

using namespace tutte;
namespace fam = tutte::families;

namespace {

const BiPoly x = BiPoly::x();
const BiPoly y = BiPoly::y();

oracle::Coeffs brute(const Matroid& m) { return oracle::tutte_coeffs(m); }
oracle::Coeffs brute(const Graph& g) { return brute(graphic_matroid(g)); }
oracle::Coeffs of(const BiPoly& p) { return oracle::coeffs_of(p); }

// Every nonzero vector of GF(p)^rank whose first nonzero entry is 1.
std::vector<std::vector<long>> projective_points(long p, unsigned rank) {
  std::vector<std::vector<long>> cols;
  std::vector<long> v(rank, 0);
  while (true) {
    unsigned i = 0;
    while (i < rank && ++v[i] == p) v[i++] = 0;
    if (i == rank) break;
    unsigned lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] == 1) cols.push_back(v);
  }
  return cols;
}

Matroid from_columns(long p, const std::vector<std::vector<long>>& cols) {
  std::vector<std::vector<long>> rows(cols.front().size(), std::vector<long>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r][c] = cols[c][r];
  }
  return linear_matroid(GFMatrix(static_cast<unsigned>(p), rows));
}

// Points (v, 1) for every v in GF(p)^dim.
Matroid affine_geometry(long p, unsigned dim) {
  std::vector<std::vector<long>> cols;
  std::vector<long> v(dim + 1, 0);
  v.back() = 1;
  while (true) {
    cols.push_back(v);
    unsigned i = 0;
    while (i < dim && ++v[i] == p) v[i++] = 0;
    if (i == dim) break;
  }
  return from_columns(p, cols);
}

// q-cone over the columns: apex e_{r+1} plus v + c * apex for every point v.
Matroid cone(long q, const std::vector<std::vector<long>>& cols) {
  std::vector<std::vector<long>> out;
  std::vector<long> apex(cols.front().size() + 1, 0);
  apex.back() = 1;
  out.push_back(apex);
  for (const auto& v : cols) {
    for (long c = 0; c < q; ++c) {
      auto w = v;
      w.push_back(c);
      out.push_back(w);
    }
  }
  return from_columns(q, out);
}

fam::DeltaMinors delta_minors(const Matroid& m, Triangle t) {
  auto mn = [&](std::initializer_list<unsigned> del, std::initializer_list<unsigned> con) {
    return tutte_subset(minor(m, ElementSet(del), ElementSet(con)));
  };
  return {mn({t.p, t.s, t.q}, {}), mn({t.p, t.q}, {t.s}), mn({t.s, t.q}, {t.p}), mn({}, {t.p, t.s, t.q}),
          mn({t.p, t.s}, {t.q})};
}

}  // namespace

TEST_CASE("uniform, cycle and multilink") {
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned r = 0; r <= n; ++r) CHECK(of(fam::uniform(r, n)) == brute(uniform_matroid(r, n)));
  }
  for (unsigned n = 2; n <= 8; ++n) {
    CHECK(of(fam::cycle(n)) == brute(graphs::cycle(n)));
    CHECK(of(fam::multilink(n)) == brute(graphs::multilink(n)));
  }
  CHECK_THROWS_AS(fam::uniform(3, 2), Error);
}

TEST_CASE("sparse paving formula against random sparse paving matroids") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    const Matroid m = oracle::random_sparse_paving(rng, 9);
    const auto* sp = m.as<SparsePavingOracle>();
    REQUIRE(sp != nullptr);
    CHECK(of(fam::sparse_paving(sp->r(), m.size(), Integer(sp->circuit_hyperplanes().size()))) == brute(m));
  }
  CHECK_THROWS_AS(fam::sparse_paving(3, 3, 0), Error);
}

TEST_CASE("relaxation and free extension formulas") {
  const Matroid k4 = graphic_matroid(graphs::complete(4));
  const BiPoly t = tutte_subset(k4);
  // Every triangle of K4 is a circuit-hyperplane.
  for (ElementSet h : hyperplanes(k4)) {
    if (h.size() != 3) continue;
    CHECK(of(fam::relax_poly(t)) == brute(relax(k4, h)));
  }
  CHECK(fam::unrelax_poly(fam::relax_poly(t)) == t);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 15; ++i) {
    const Matroid m = oracle::random_matroid(rng, 7);
    const BiPoly tm = tutte_subset(m);
    CHECK(of(fam::free_ext_poly(tm, fam::at_x_equals_one(tm))) == brute(free_extension(m)));
  }
}

TEST_CASE("paving matroids from block counts") {
  // Rank 3 on 7 points: the Fano plane has seven 3-point lines.
  CHECK(of(fam::paving({3, 7, {{3, 7}}})) == brute(linear_matroid(GFMatrix(2, {{1, 0, 0, 1, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 1, 1, 1}}))));
  // One 4-point line and the remaining 15 - 6 pairs on 6 points.
  std::vector<ElementSet> blocks{ElementSet{0, 1, 2, 3}};
  for (unsigned a = 0; a < 6; ++a) {
    for (unsigned b = a + 1; b < 6; ++b) {
      if (a >= 4 || b >= 4) blocks.push_back(ElementSet{a, b});
    }
  }
  CHECK(of(fam::paving({3, 6, {{4, 1}, {2, 9}}})) == brute(paving_matroid(3, 6, blocks)));
  CHECK_THROWS_AS(fam::paving({3, 6, {{4, 2}}}), Error);
  CHECK_THROWS_AS(fam::validate({3, 3, {}}), Error);
}

TEST_CASE("Catalan and lattice path") {
  for (unsigned n = 2; n <= 5; ++n) CHECK(of(fam::catalan(n)) == brute(catalan_matroid(n)));
  CHECK_THROWS_AS(fam::catalan(1), Error);
}

TEST_CASE("grids, complete graphs and complete bipartite graphs") {
  for (unsigned n = 1; n <= 5; ++n) CHECK(of(fam::grid2(n)) == brute(graphs::grid(2, n)));
  for (unsigned n = 1; n <= 6; ++n) CHECK(of(fam::complete_graph(n)) == brute(graphs::complete(n)));
  for (unsigned a = 1; a <= 3; ++a) {
    for (unsigned b = a; b <= 4; ++b) {
      CHECK(of(fam::complete_bipartite(a, b)) == brute(graphs::complete_bipartite(a, b)));
      CHECK(fam::complete_bipartite(a, b) == fam::complete_bipartite(b, a));
    }
  }
  CHECK(fam::complete_graph_coboundary(4) == coboundary(graphic_matroid(graphs::complete(4))));
  CHECK_THROWS_AS(fam::complete_graph(31), Error);
  CHECK_THROWS_AS(fam::complete_bipartite(8, 9), Error);
}

TEST_CASE("Gaussian coefficients and prime powers") {
  CHECK(fam::gaussian(4, 2, 2) == 35);
  CHECK(fam::gaussian(3, 1, 3) == 13);
  CHECK(fam::gaussian(5, 0, 7) == 1);
  CHECK(fam::is_prime_power(9));
  CHECK(fam::is_prime_power(8));
  CHECK_FALSE(fam::is_prime_power(6));
  CHECK_FALSE(fam::is_prime_power(1));
  CHECK_THROWS_AS(fam::projective(2, 6), Error);
}

TEST_CASE("projective and affine geometries against explicit coordinates") {
  CHECK(of(fam::projective(1, 2)) == brute(from_columns(2, projective_points(2, 2))));
  CHECK(of(fam::projective(2, 2)) == brute(from_columns(2, projective_points(2, 3))));
  CHECK(of(fam::projective(2, 3)) == brute(from_columns(3, projective_points(3, 3))));
  CHECK(of(fam::projective(3, 2)) == brute(from_columns(2, projective_points(2, 4))));
  CHECK(of(fam::affine(2, 3)) == brute(affine_geometry(3, 2)));
  CHECK(of(fam::affine(3, 2)) == brute(affine_geometry(2, 3)));
  CHECK(of(fam::affine(2, 2)) == brute(affine_geometry(2, 2)));
  CHECK(tutte_from_coboundary(fam::projective_coboundary(2, 3), 3) == fam::projective(2, 3));
  CHECK(tutte_from_coboundary(fam::affine_coboundary(2, 3), 3) == fam::affine(2, 3));
}

TEST_CASE("q-cones against explicit coordinates") {
  const std::vector<std::vector<long>> u23{{1, 0}, {0, 1}, {1, 1}};
  CHECK(of(fam::q_cone(fam::uniform(2, 3), 2, 2)) == brute(cone(2, u23)));
  const std::vector<std::vector<long>> u24{{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  CHECK(of(fam::q_cone(fam::uniform(2, 4), 2, 3)) == brute(cone(3, u24)));
  const std::vector<std::vector<long>> u23_gf3{{1, 0}, {0, 1}, {1, 1}};
  CHECK(of(fam::q_cone(fam::uniform(2, 3), 2, 3)) == brute(cone(3, u23_gf3)));
  const auto fano = projective_points(2, 3);
  CHECK(of(fam::q_cone(fam::projective(2, 2), 3, 2)) == brute(cone(2, fano)));
}

TEST_CASE("wheels and whirls") {
  for (unsigned n = 3; n <= 6; ++n) {
    const Matroid w = graphic_matroid(graphs::wheel(n));
    CHECK(of(fam::wheel(n)) == brute(w));
    CHECK(of(fam::whirl(n)) == brute(relax(w, ElementSet::full(n))));
  }
  CHECK(fam::wheel_power_sum(0) == BiPoly(2));
  CHECK(fam::wheel_power_sum(1) == 1 + x + y);
}

TEST_CASE("one-sum and two-sum formulas against structural sums") {
  std::mt19937_64 rng(41);
  int tried = 0;
  while (tried < 20) {
    const Matroid a = oracle::random_matroid(rng, 6);
    const Matroid b = oracle::random_matroid(rng, 6);
    CHECK(of(fam::one_sum({tutte_subset(a), tutte_subset(b)})) == brute(direct_sum({a, b})));
    if (a.size() == 0 || b.size() == 0 || a.is_loop(0) || a.is_coloop(0) || b.is_loop(0) || b.is_coloop(0)) {
      continue;
    }
    ++tried;
    const BiPoly got = fam::two_sum_poly(tutte_subset(contract_element(a, 0)), tutte_subset(delete_element(a, 0)),
                                         tutte_subset(contract_element(b, 0)), tutte_subset(delete_element(b, 0)));
    CHECK(of(got) == brute(two_sum(PointedMatroid(a, 0), PointedMatroid(b, 0))));
  }
}

TEST_CASE("delta-sum formula against structural graphic sums") {
  // K4 triangle 01 02 12 is elements 0 1 3; in W4 (rim 01 12 23 30, spokes
  // h0 h1 h2 h3) the triangle 01 h0 h1 is elements 0 4 5.
  const Matroid k4 = graphic_matroid(graphs::complete(4));
  const Matroid w4 = graphic_matroid(graphs::wheel(4));
  const std::vector<std::pair<Matroid, Triangle>> sides{{k4, {0, 1, 3}}, {k4, {3, 0, 1}}, {w4, {0, 4, 5}},
                                                        {w4, {4, 5, 0}}};
  for (const auto& [m1, t1] : sides) {
    for (const auto& [m2, t2] : sides) {
      const BiPoly got = fam::delta_sum_poly(delta_minors(m1, t1), delta_minors(m2, t2));
      CHECK(of(got) == brute(delta_sum(m1, t1, m2, t2)));
    }
  }
}

TEST_CASE("thickening, stretching and tensor products") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 12; ++i) {
    const Matroid m = oracle::random_matroid(rng, 4);
    const BiPoly t = tutte_subset(m);
    for (unsigned k = 1; k <= 3; ++k) {
      if (m.size() * k > 12) continue;
      CHECK(of(fam::thicken_poly(t, m.rank(), k)) == brute(thicken(m, k)));
      CHECK(of(fam::stretch_poly(t, m.corank(), k)) == brute(stretch(m, k)));
    }
  }
  const std::vector<PointedMatroid> pointed{PointedMatroid(uniform_matroid(2, 3), 0),
                                            PointedMatroid(uniform_matroid(2, 4), 1),
                                            PointedMatroid(graphic_matroid(graphs::complete(4)), 2)};
  for (const Matroid& m : {uniform_matroid(1, 2), uniform_matroid(2, 3), graphic_matroid(graphs::path(3))}) {
    for (const PointedMatroid& n : pointed) {
      const fam::TensorInputs in{tutte_subset(m), m.rank(), m.size(), tutte_subset(delete_element(n.matroid, n.point)),
                                 tutte_subset(contract_element(n.matroid, n.point))};
      CHECK(of(fam::tensor_poly(in)) == brute(tensor(m, n)));
    }
  }
}

TEST_CASE("Steiner systems as sparse paving matroids") {
  CHECK(fam::steiner_sparse(3, 7, 7) == fam::sparse_paving(3, 7, 7));
  CHECK(fam::steiner_sparse(6, 12, 132) == fam::sparse_paving(6, 12, 132));
  CHECK_THROWS_AS(fam::steiner_sparse(3, 8, 7), Error);
  CHECK_THROWS_AS(fam::steiner_sparse(3, 7, 6), Error);
}

TEST_CASE("coboundary and characteristic conversions") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Matroid m = oracle::random_matroid(rng, 7);
    const BiPoly t = tutte_subset(m);
    CHECK(coboundary_from_tutte(t, m.rank()) == coboundary(m));
    CHECK(tutte_from_coboundary(coboundary_from_tutte(t, m.rank()), m.rank()) == t);
  }
}
