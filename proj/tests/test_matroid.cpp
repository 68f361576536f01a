#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "tutte/error.hpp"
#include "tutte/io.hpp"
#include "tutte/matroid.hpp"
#include "tutte/recipe.hpp"

using namespace tutte;

namespace {

const std::vector<std::vector<long>> kFano{{1, 0, 0, 1, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 1, 1, 1}};

bool same_ranks(const Matroid& m, const oracle::RankFn& rank) {
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << m.size()); ++a) {
    if (m.rank(ElementSet(a)) != rank(a)) return false;
  }
  return true;
}

std::size_t count_of_size(const std::vector<ElementSet>& sets, unsigned k) {
  std::size_t c = 0;
  for (ElementSet s : sets) c += s.size() == k;
  return c;
}

}  // namespace

TEST_CASE("element sets") {
  ElementSet s{0, 3, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK(s.bound() == 6);
  CHECK(s.min() == 0);
  CHECK(s.without(0).with(1) == ElementSet{1, 3, 5});
  CHECK(s.to_vector() == std::vector<unsigned>{0, 3, 5});
  CHECK(ElementSet::full(64).size() == 64);
}

TEST_CASE("graphic rank agrees with union-find") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_graph(rng, 6, 9);
    const Matroid m = graphic_matroid(g);
    CHECK(same_ranks(m, [&g](std::uint64_t a) { return oracle::graph_rank(g, a); }));
  }
}

TEST_CASE("linear rank agrees with plain elimination") {
  std::mt19937_64 rng(9);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int i = 0; i < 8; ++i) {
      const auto rows = oracle::random_matrix(rng, p, 3, 7);
      const Matroid m = linear_matroid(GFMatrix(static_cast<unsigned>(p), rows));
      CHECK(same_ranks(m, [&](std::uint64_t a) { return oracle::gf_rank(rows, p, a); }));
    }
  }
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(13));
}

TEST_CASE("Fano plane basics") {
  const Matroid f7 = linear_matroid(GFMatrix(2, kFano));
  CHECK(f7.rank() == 3);
  CHECK(bases(f7).size() == 28);  // 35 triples minus 7 lines
  CHECK(count_of_size(circuits(f7), 3) == 7);
  CHECK(count_of_size(circuits(f7), 4) == 7);
  CHECK(hyperplanes(f7).size() == 7);
  CHECK(flats(f7).size() == 1 + 7 + 7 + 1);
  for (ElementSet h : hyperplanes(f7)) CHECK(is_modular_flat(f7, h));
  const Matroid f7_over_gf3 = linear_matroid(GFMatrix(3, kFano));
  CHECK(bases(f7_over_gf3).size() == 29);  // the line {3,4,5} is independent in odd characteristic
}

TEST_CASE("dual rank formula") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const Matroid m = oracle::random_matroid(rng, 8);
    const Matroid d = dual(m);
    const auto full = m.ground();
    CHECK(same_ranks(d, [&](std::uint64_t a) {
      const ElementSet s(a);
      return s.size() - m.rank() + m.rank(full - s);
    }));
    CHECK(rank_equal(dual(d), m));
  }
}

TEST_CASE("minors renumber surviving elements") {
  const Matroid k4 = graphic_matroid(graphs::complete(4));
  const Matroid del = delete_element(k4, 0);
  const Matroid con = contract_element(k4, 0);
  CHECK(del.size() == 5);
  CHECK(del.rank() == 3);
  CHECK(con.rank() == 2);
  CHECK(count_of_size(parallel_classes(con), 2) == 2);
  CHECK(rank_equal(minor(k4, ElementSet{0}, ElementSet{}), del));
  CHECK(rank_equal(restriction(k4, ElementSet{1, 2, 3, 4, 5}), del));
  CHECK_THROWS_AS(k4.rank(ElementSet{6}), Error);
  CHECK_THROWS_AS(delete_element(k4, 6), Error);
}

TEST_CASE("relaxation adds exactly one basis") {
  const Matroid f7 = linear_matroid(GFMatrix(2, kFano));
  const Matroid f7minus = relax(f7, ElementSet{3, 4, 5});
  CHECK(bases(f7minus).size() == 29);
  CHECK(rank_equal(f7minus, linear_matroid(GFMatrix(3, kFano))));
  CHECK_THROWS_AS(relax(f7, ElementSet{0, 1, 2}), Error);
}

TEST_CASE("extensions") {
  const Matroid u23 = uniform_matroid(2, 3);
  CHECK(rank_equal(free_extension(u23), uniform_matroid(2, 4)));
  const Matroid par = add_parallel(u23, 1);
  CHECK(par.rank(ElementSet{1, 3}) == 1);
  const Matroid sum = direct_sum({uniform_matroid(1, 2), uniform_matroid(0, 1)});
  CHECK(sum.rank() == 1);
  CHECK(sum.is_loop(2));
}

TEST_CASE("thickening and stretching act on elements") {
  const Matroid u12 = uniform_matroid(1, 2);
  CHECK(rank_equal(thicken(u12, 3), uniform_matroid(1, 6)));
  // Stretching a 3-cycle by 2 gives a 6-cycle.
  CHECK(rank_equal(stretch(uniform_matroid(2, 3), 2), uniform_matroid(5, 6)));
}

TEST_CASE("two-sum of two triangles is a 4-cycle") {
  const Matroid c3 = uniform_matroid(2, 3);
  const Matroid s = two_sum(PointedMatroid(c3, 0), PointedMatroid(c3, 2));
  CHECK(rank_equal(s, uniform_matroid(3, 4)));
}

TEST_CASE("delta-sum of two K4 graphs along a triangle") {
  // K4 edges: 01 02 03 12 13 23; triangle 01 02 12 = elements 0 1 3.
  const Matroid k4 = graphic_matroid(graphs::complete(4));
  const Matroid s = delta_sum(k4, {0, 1, 3}, k4, {0, 1, 3});
  // Two apexes joined to the same three vertices, triangle removed: K_{2,3}.
  CHECK(s.size() == 6);
  CHECK(s.rank() == 4);
  CHECK(oracle::tutte_coeffs(s) ==
        oracle::tutte_coeffs(graphic_matroid(graphs::complete_bipartite(2, 3))));
}

TEST_CASE("tensor with a pointed triangle is stretching") {
  const Matroid m = uniform_matroid(1, 2);
  const Matroid t = tensor(m, PointedMatroid(uniform_matroid(2, 3), 0));
  CHECK(rank_equal(t, stretch(m, 2)));
}

TEST_CASE("uniform matroid rejects bad parameters") {
  CHECK_THROWS_AS(uniform_matroid(4, 3), Error);
  CHECK_THROWS_AS(sparse_paving_matroid(3, 6, {ElementSet{0, 1, 2}, ElementSet{0, 1, 3}}), Error);
  CHECK_THROWS_AS(basis_matroid(2, 4, {ElementSet{0, 1}, ElementSet{2, 3}}), Error);
}

TEST_CASE("paving matroid from a partition") {
  // Rank 3 on 6 points: lines {0 1 2}, {0 3 4}, and the remaining pairs.
  std::vector<ElementSet> blocks{ElementSet{0, 1, 2}, ElementSet{0, 3, 4}};
  for (unsigned a = 0; a < 6; ++a) {
    for (unsigned b = a + 1; b < 6; ++b) {
      bool covered = false;
      for (ElementSet bl : std::vector<ElementSet>{blocks[0], blocks[1]}) {
        covered = covered || (bl.contains(a) && bl.contains(b));
      }
      if (!covered) blocks.push_back(ElementSet{a, b});
    }
  }
  const Matroid m = paving_matroid(3, 6, blocks);
  CHECK(bases(m).size() == 20 - 2);
  blocks.pop_back();
  CHECK_THROWS_AS(paving_matroid(3, 6, blocks), Error);
}

TEST_CASE("lattice path matroids") {
  const Matroid m3 = catalan_matroid(3);
  CHECK(m3.size() == 6);
  CHECK(m3.rank() == 3);
  CHECK(bases(m3).size() == 5);  // third Catalan number
  const Matroid widest = lattice_path_matroid("EEENNN", "NNNEEE");
  CHECK(rank_equal(widest, uniform_matroid(3, 6)));
  CHECK_THROWS_AS(lattice_path_matroid("NNEE", "EENN"), Error);
}

TEST_CASE("graph file round trip and errors") {
  const Graph g = graphs::wheel(4);
  CHECK(parse_graph(format_graph(g)) == g);
  CHECK(parse_graph("c comment\np 2 1\n# another\ne 0 1\n").edge_count() == 1);
  CHECK_THROWS_AS(parse_graph("p 2 2\ne 0 1\n"), Error);
  CHECK_THROWS_AS(parse_graph("p 2 1\ne 0 2\n"), Error);
  CHECK_THROWS_AS(parse_graph("e 0 1\n"), Error);
}

TEST_CASE("matrix file round trip and errors") {
  const GFMatrix m(3, {{1, 2, 0}, {0, 1, 1}});
  CHECK(parse_gf_matrix(format_gf_matrix(m)) == m);
  CHECK_THROWS_AS(parse_gf_matrix("gf 4 1 1 1"), Error);
  CHECK_THROWS_AS(parse_gf_matrix("gf 2 1 2 1"), Error);
}

TEST_CASE("matroid json round trips through every base kind") {
  const std::vector<Matroid> ms{
      uniform_matroid(2, 5),
      graphic_matroid(graphs::cycle(4)),
      linear_matroid(GFMatrix(2, kFano)),
      sparse_paving_matroid(3, 6, {ElementSet{0, 1, 2}, ElementSet{3, 4, 5}}),
      catalan_matroid(2),
      dual(graphic_matroid(graphs::complete(4))),
  };
  for (const Matroid& m : ms) {
    const Matroid back = parse_matroid_json(matroid_to_json(m));
    CHECK(rank_equal(back, m));
  }
  CHECK(parse_matroid_json(R"({"kind": "uniform", "r": 0, "n": 0})").size() == 0);
  CHECK(rank_equal(parse_matroid_json(R"j({"kind": "recipe", "recipe": "dual(uniform(2,5))"})j"),
                   uniform_matroid(3, 5)));
  CHECK_THROWS_AS(parse_matroid_json("{"), Error);
  CHECK_THROWS_AS(parse_matroid_json(R"({"kind": "nope"})"), Error);
  CHECK_THROWS_AS(parse_matroid_json(R"({"kind": "linear", "p": 4, "rows": [[1]]})"), Error);
}

TEST_CASE("recipes") {
  CHECK(rank_equal(build_recipe("uniform(2, 4)"), uniform_matroid(2, 4)));
  CHECK(rank_equal(build_recipe("gf(2, [1 0 0 1 1 0 1; 0 1 0 1 0 1 1; 0 0 1 0 1 1 1])"),
                   linear_matroid(GFMatrix(2, kFano))));
  CHECK(rank_equal(build_recipe("relax(gf(2,[1 0 0 1 1 0 1;0 1 0 1 0 1 1;0 0 1 0 1 1 1]), {3 4 5})"),
                   linear_matroid(GFMatrix(3, kFano))));
  CHECK(build_recipe("graph(3, [0 1; 1 2; 2 0])").rank() == 2);
  CHECK(build_recipe("twosum(uniform(2,4), 0, uniform(2,4), 0)").size() == 6);
  CHECK(rank_equal(build_recipe("cyclic(7, 3, [0 1 3])"), build_recipe("sparse(3, 7, [0 1 3; 1 2 4; 2 3 5; 3 4 6; 0 4 5; 1 5 6; 0 2 6])")));
  CHECK_THROWS_AS(build_recipe("uniform(2"), Error);
  CHECK_THROWS_AS(build_recipe("nosuch(1)"), Error);
  CHECK_THROWS_AS(build_recipe("dual(3)"), Error);
}

TEST_CASE("Witt design blocks") {
  const auto blocks = witt12_blocks();
  CHECK(blocks.size() == 132);
  // Every 5-set lies in exactly one block.
  std::set<std::uint64_t> covered;
  for (ElementSet b : blocks) {
    CHECK(b.size() == 6);
    for (unsigned skip : b) covered.insert(b.without(skip).bits());
  }
  CHECK(covered.size() == 792);  // C(12, 5)
}
