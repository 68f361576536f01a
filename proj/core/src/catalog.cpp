#include "tutte/catalog.hpp"

#include <sstream>

#include <json.hpp>

#include "tutte/error.hpp"
#include "tutte/families.hpp"
#include "tutte/recipe.hpp"

namespace tutte {

namespace {

namespace fam = families;

// Printed polynomials that other entries reuse.
constexpr const char* kU24 = "x^2+2x+2y+y^2";
constexpr const char* kF7 = "x^3 +4x^2 +3x +7xy +3y +6y^2 +3y^3 +y^4";
constexpr const char* kR8 = "x^4+4x^3+10x^2+8x +12xy +8y+10y^2+4y^3+y^4";
constexpr const char* kH = "x^4+ 3x^3+ 3x^2+x+3xy+3x^2y+3xy^2+y+y^2 + y^3";

// Recipes that other recipes build on.
const std::string kK4e = "graph(4, [0 1; 0 2; 0 3; 1 2; 1 3])";
const std::string kFano = "gf(2, [1 0 0 1 1 0 1; 0 1 0 1 0 1 1; 0 0 1 0 1 1 1])";
const std::string kFanoMinus = "relax(" + kFano + ", {3 4 5})";
const std::string kQ6 = "freeext(" + kK4e + ")";
const std::string kAG32 =
    "gf(2, [1 1 1 1 1 1 1 1; 0 0 0 0 1 1 1 1; 0 0 1 1 0 0 1 1; 0 1 0 1 0 1 0 1])";
const std::string kAG32p = "relax(" + kAG32 + ", {1 3 4 6})";
const std::string kR8Chain = "relax(" + kAG32p + ", {0 2 5 7})";
const std::string kS8 =
    "gf(2, [1 0 0 0 0 1 1 1; 0 1 0 0 1 0 1 1; 0 0 1 0 1 1 0 1; 0 0 0 1 1 1 1 1])";
const std::string kJ =
    "gf(3, [1 0 0 0 1 0 0 1; 0 1 0 0 1 1 1 0; 0 0 1 0 0 1 0 1; 0 0 0 1 0 0 1 1])";
const std::string kPappus =
    "sparse(3, 9, [0 1 2; 3 4 5; 0 4 6; 1 3 6; 0 5 7; 2 3 7; 1 5 8; 2 4 8; 6 7 8])";
const std::string kDesargues =
    "sparse(3, 10, [0 1 4; 0 2 5; 0 3 6; 1 2 7; 4 5 7; 1 3 8; 4 6 8; 2 3 9; 5 6 9; 7 8 9])";

CatalogPath formula(std::string label, std::function<BiPoly()> f) {
  return {"formula: " + std::move(label), std::move(f)};
}

CatalogPath construction(std::string recipe) {
  const std::string label = "construction: " + recipe;
  return {label, [r = std::move(recipe)] { return tutte_dc(build_recipe(r)); }};
}

// T(M) = T(M \ e) + T(M / e) with both minors computed separately.
CatalogPath split_on(const std::string& recipe, unsigned e) {
  const std::string del = "delete(" + recipe + ", " + std::to_string(e) + ")";
  const std::string con = "contract(" + recipe + ", " + std::to_string(e) + ")";
  return {"deletion-contraction on element " + std::to_string(e),
          [del, con] { return tutte_dc(build_recipe(del)) + tutte_dc(build_recipe(con)); }};
}

BiPoly printed(const char* text) { return parse_poly(text); }

CatalogFlags sparse_flags(bool self_dual, std::string fields) {
  return CatalogFlags{self_dual, true, true, std::move(fields)};
}

std::vector<CatalogEntry> build_catalog() {
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  std::vector<CatalogEntry> c;
  auto add = [&](std::string name, std::string recipe, std::string text, std::string provenance,
                 CatalogFlags flags, std::vector<CatalogPath> alternatives) {
    c.push_back(CatalogEntry{std::move(name), std::move(recipe), std::move(text),
                             std::move(provenance), std::move(flags), std::move(alternatives)});
  };

  add("U24", "uniform(2, 4)", kU24, "uniform matroids", sparse_flags(true, "all fields except GF(2)"),
      {formula("uniform(2,4)", [] { return fam::uniform(2, 4); }),
       formula("whirl(2)", [] { return fam::whirl(2); })});
  add("U25", "uniform(2, 5)", "x^2+3x+3y+2y^2+y^3", "uniform matroids",
      sparse_flags(false, "GF(q), q >= 4"),
      {formula("uniform(2,5)", [] { return fam::uniform(2, 5); }),
       construction("dual(uniform(3, 5))")});
  add("U35", "dual(uniform(2, 5))", "x^3+2x^2+3x+3y+y^2", "uniform matroids, dual of U25",
      sparse_flags(false, "GF(q), q >= 4"),
      {formula("uniform(3,5)", [] { return fam::uniform(3, 5); }),
       formula("U25 with x and y swapped", [] { return fam::uniform(2, 5).swapped(); })});
  add("U36", "uniform(3, 6)", "x^3 +3x^2+6x+6y+3y^2+y^3", "uniform matroids; relaxation of P6",
      sparse_flags(true, "GF(q), q >= 4"),
      {formula("uniform(3,6)", [] { return fam::uniform(3, 6); }),
       formula("relax P6", [] { return fam::relax_poly(fam::sparse_paving(3, 6, 1)); })});

  add("W3", "complete(4)", "x^3+3x^2+2x+4xy+2y+3y^2+y^3", "wheels and whirls; M(K4)",
      sparse_flags(true, "all fields"),
      {formula("wheel(3)", [] { return fam::wheel(3); }),
       formula("sparse paving, 4 circuit-hyperplanes", [] { return fam::sparse_paving(3, 6, 4); }),
       construction("wheelgraph(3)")});
  add("W4", "wheelgraph(4)",
      "x^4 +4x^3 +6x^2 +3x +4x^2y +4xy^2 +9xy +3y +6y^2+4y^3 +y^4", "wheels and whirls",
      CatalogFlags{true, false, false, "all fields"},
      {formula("wheel(4)", [] { return fam::wheel(4); })});
  add("Whirl2", "relax(graph(3, [0 1; 0 1; 2 0; 2 1]), {0 1})", kU24,
      "wheels and whirls; the 2-whirl is U24", sparse_flags(true, "all fields except GF(2)"),
      {formula("whirl(2)", [] { return fam::whirl(2); }),
       formula("uniform(2,4)", [] { return fam::uniform(2, 4); })});
  add("Whirl3", "relax(wheelgraph(3), {0 1 2})", "x^3+3x^2+3x+3xy+3y+3y^2+y^3",
      "wheels and whirls; relaxation of M(K4)", sparse_flags(true, "all fields except GF(2)"),
      {formula("whirl(3)", [] { return fam::whirl(3); }),
       formula("relax W3", [] { return fam::relax_poly(fam::wheel(3)); })});
  add("Whirl4", "relax(wheelgraph(4), {0 1 2 3})",
      "x^4 +4x^3 +6x^2 +4x +4x^2y +4xy^2 +8xy +4y+6y^2+4y^3+y^4", "wheels and whirls",
      CatalogFlags{true, false, false, "all fields except GF(2)"},
      {formula("whirl(4)", [] { return fam::whirl(4); }),
       formula("relax W4", [] { return fam::relax_poly(fam::wheel(4)); })});

  add("Q6", kQ6, "x^3 +3x^2 +4x +2xy +4y +3y^2 +y^3",
      "free extension of M(K4\\e); relaxation chain to U36", sparse_flags(true, "GF(q), q >= 4"),
      {formula("free extension of K4\\e",
               [] {
                 const BiPoly t = fam::sparse_paving(3, 5, 2);
                 return fam::free_ext_poly(t, fam::at_x_equals_one(t));
               }),
       formula("relaxation chain from U36",
               [] { return fam::unrelax_poly(fam::unrelax_poly(fam::uniform(3, 6))); }),
       formula("sparse paving, 2 circuit-hyperplanes", [] { return fam::sparse_paving(3, 6, 2); })});
  add("P6", "relax(" + kQ6 + ", {0 1 3})", "x^3 +3x^2+5x+xy+5y+3y^2+y^3",
      "relaxation chain; relaxation of Q6", sparse_flags(true, "GF(q), q >= 4"),
      {formula("unrelax U36", [] { return fam::unrelax_poly(fam::uniform(3, 6)); }),
       formula("sparse paving, 1 circuit-hyperplane", [] { return fam::sparse_paving(3, 6, 1); })});
  add("R6", "twosum(uniform(2, 4), 0, uniform(2, 4), 0)", "x^3 +3x^2 +4x +2xy +4y +3y^2 +y^3",
      "2-sum of U24 with itself; sparse paving count", sparse_flags(true, "all fields except GF(2)"),
      {formula("2-sum of U24 minors",
               [] {
                 const BiPoly con = fam::uniform(1, 3);
                 const BiPoly del = fam::uniform(2, 3);
                 return fam::two_sum_poly(con, del, con, del);
               }),
       formula("sparse paving, 2 circuit-hyperplanes", [] { return fam::sparse_paving(3, 6, 2); })});
  add("K4-e", kK4e, "x^3+2x^2+x+2xy+y+y^2", "free extension example; M(K4\\e)",
      sparse_flags(false, "all fields"),
      {formula("sparse paving, 2 circuit-hyperplanes", [] { return fam::sparse_paving(3, 5, 2); }),
       construction("delete(complete(4), 5)")});

  add("F7", kFano, kF7, "Fano plane; binary representation", sparse_flags(false, "char 2 only"),
      {formula("sparse paving, 7 circuit-hyperplanes", [] { return fam::sparse_paving(3, 7, 7); }),
       formula("projective(2,2)", [] { return fam::projective(2, 2); }),
       formula("Steiner S(2,3,7)", [] { return fam::steiner_sparse(3, 7, 7); }),
       construction("cyclic(7, 3, [0 1 3])")});
  add("F7*", "dual(" + kFano + ")", "x^4 +3x^3 +6x^2 +3x +7xy +3y +4y^2 +y^3",
      "dual of the Fano plane", sparse_flags(false, "char 2 only"),
      {formula("F7 with x and y swapped", [] { return printed(kF7).swapped(); })});
  add("F7-", kFanoMinus, "x^3 +4x^2 +4x +6xy +4y +6y^2 +3y^3 +y^4", "relaxation of the Fano plane",
      sparse_flags(false, "char != 2"),
      {formula("relax F7", [] { return fam::relax_poly(printed(kF7)); }),
       construction("gf(3, [1 0 0 1 1 0 1; 0 1 0 1 0 1 1; 0 0 1 0 1 1 1])")});
  add("F7-*", "dual(" + kFanoMinus + ")", "x^4+3x^3+6x^2+4x+6xy+4y+4y^2+y^3",
      "relaxation of the dual Fano plane", sparse_flags(false, "char != 2"),
      {formula("relax F7*", [] { return fam::relax_poly(printed(kF7).swapped()); })});
  add("P7", "gf(3, [1 0 0 1 0 1 1; 0 1 0 1 1 0 1; 0 0 1 2 1 1 0])",
      "x^3 +4x^2 +5x +5xy +5y +6y^2 +3y^3 +y^4", "ternary representation with a = 2",
      sparse_flags(false, "GF(q), q >= 3"),
      {formula("sparse paving, 5 circuit-hyperplanes", [] { return fam::sparse_paving(3, 7, 5); })});
  add("P8", "gf(3, [1 0 0 0 0 1 1 -1; 0 1 0 0 1 0 1 1; 0 0 1 0 1 1 0 1; 0 0 0 1 -1 1 1 0])",
      "x^4 +4x^3 +10x^2 +10x +10xy +10y +10y^2 +4y^3 +y^4", "ternary representation",
      sparse_flags(true, "char != 2"),
      {formula("sparse paving, 10 circuit-hyperplanes", [] { return fam::sparse_paving(4, 8, 10); })});
  add("Q3", "gf(3, [1 0 0 1 1 1 1 0 0; 0 1 0 1 -1 0 0 1 1; 0 0 1 0 0 1 -1 -1 1])",
      "x^3 +6x^2 +8x +3xy^2 +10xy +8y +12y^2 +10y^3 +6y^4 +3y^5 +y^6",
      "ternary Dowling geometry, ternary representation",
      CatalogFlags{false, false, true, "char != 2"},
      {formula("paving blocks 6x2, 4x3, 3x4",
               [] { return fam::paving({3, 9, {{2, 6}, {3, 4}, {4, 3}}}); })});
  add("Whirl3+", "parallel(relax(wheelgraph(3), {0 1 2}), 0)",
      "x^3+3x^2 +3x +x^2y +5xy+xy^2+3y+5y^2+3y^3+y^4",
      "whirl with a parallel element; deletion-contraction",
      CatalogFlags{false, false, false, "all fields except GF(2)"},
      {formula("T(W^3) + y T(U24) + T(U13 + U02)",
               [y] {
                 return fam::whirl(3) + y * fam::uniform(2, 4) +
                        fam::one_sum({fam::uniform(1, 3), fam::uniform(0, 2)});
               })});

  add("AG32", kAG32, "x^4+4x^3+10x^2+6x +14xy +6y+10y^2+4y^3+y^4",
      "binary affine cube; Steiner system S(3,4,8)", sparse_flags(true, "char 2 only"),
      {formula("affine(3,2)", [] { return fam::affine(3, 2); }),
       formula("Steiner S(3,4,8)", [] { return fam::steiner_sparse(4, 8, 14); })});
  add("AG32'", kAG32p, "x^4 +4x^3+10x^2+7x +13xy +7y+10y^2+4y^3+y^4",
      "relaxation of a twisted plane of AG32", sparse_flags(true, "all fields except GF(2)"),
      {formula("relax AG32", [] { return fam::relax_poly(fam::affine(3, 2)); }),
       formula("sparse paving, 13 circuit-hyperplanes", [] { return fam::sparse_paving(4, 8, 13); })});
  add("R8", kR8Chain, kR8, "relaxation chain; real affine cube",
      sparse_flags(true, "char != 2"),
      {construction(
           "gf(3, [1 0 0 0 -1 1 1 1; 0 1 0 0 1 -1 1 1; 0 0 1 0 1 1 -1 1; 0 0 0 1 1 1 1 -1])"),
       formula("sparse paving, 12 circuit-hyperplanes", [] { return fam::sparse_paving(4, 8, 12); })});
  add("Q8", "relax(" + kR8Chain + ", {0 1 6 7})", "x^4+4x^3+10x^2 +7x +11xy +7y+10y^2+4y^3+y^4",
      "relaxation of a diagonal plane of R8", sparse_flags(true, "none"),
      {formula("relax R8", [] { return fam::relax_poly(printed(kR8)); })});
  add("F8", "relax(" + kAG32p + ", {0 1 6 7})", kR8,
      "relaxation chain; delta-sum of F7 and F7-", sparse_flags(true, "none"),
      {formula("delta-sum of the printed F7 and F7- minors",
               [x, y] {
                 const BiPoly u34 = x * x * x + x * x + x + y;
                 const BiPoly pair = pow(x + y, 2);
                 const BiPoly u14 = y * y * y + y * y + y + x;
                 const BiPoly c3p = x * x + x + x * y + y + y * y;
                 return fam::delta_sum_poly({u34, pair, pair, u14, pair},
                                            {u34, c3p, pair, u14, pair});
               }),
       formula("sparse paving, 12 circuit-hyperplanes", [] { return fam::sparse_paving(4, 8, 12); })});
  add("L8",
      "sparse(4, 8, [0 1 2 3; 0 1 4 5; 0 3 4 7; 1 2 5 6; 2 3 6 7; 4 5 6 7; 0 2 5 7; 1 3 4 6])",
      "x^4+4x^3+10x^2 +12x +8xy +12y+10y^2+4y^3+y^4", "cube faces plus the two twisted planes",
      sparse_flags(true, ""),
      {formula("sparse paving, 8 circuit-hyperplanes", [] { return fam::sparse_paving(4, 8, 8); })});

  add("S8", kS8, "x^4+ 4x^3+ 7x^2 + 4x+ 10xy + 3xy^2 + 3x^2y+ 4y + 7y^2 + 4y^3 + y^4",
      "binary representation; deletion-contraction into H and F7",
      CatalogFlags{true, false, false, "char 2 only"},
      {split_on(kS8, 3),
       formula("T(H) + T(F7) as printed", [] { return printed(kH) + printed(kF7); })});
  add("T8", "gf(3, [1 0 0 0 0 1 1 1; 0 1 0 0 1 0 1 1; 0 0 1 0 1 1 0 1; 0 0 0 1 1 1 1 0])",
      "x^4+4x^3+10x^2+9x +11xy +9y+10y^2+4y^3+y^4", "ternary representation [I | J - I]",
      sparse_flags(true, "char 3 only"),
      {formula("sparse paving, 11 circuit-hyperplanes", [] { return fam::sparse_paving(4, 8, 11); })});
  add("J", kJ, "x^4 +4x^3 +7x^2 +6x +3x^2y +3xy^2 +8xy +6y +7y^2 +4y^3 +y^4",
      "ternary representation; deletion-contraction on element 2",
      CatalogFlags{true, false, false, "GF(q), q >= 3"},
      {split_on(kJ, 1),
       {"J\\2 as sparse paving with 5 circuit-hyperplanes, plus J/2",
        [] {
          return fam::sparse_paving(4, 7, 5) + tutte_dc(build_recipe("contract(" + kJ + ", 1)"));
        }}});
  add("V8", "sparse(4, 8, [0 1 2 3; 0 1 4 5; 0 1 6 7; 2 3 4 5; 2 3 6 7])",
      "x^4+4x^3+10x^2+15x +5xy +15y+10y^2+4y^3+y^4", "Vamos matroid", sparse_flags(true, "none"),
      {formula("sparse paving, 5 circuit-hyperplanes", [] { return fam::sparse_paving(4, 8, 5); }),
       formula("relax V8+", [] { return fam::relax_poly(fam::sparse_paving(4, 8, 6)); })});
  add("V8+", "sparse(4, 8, [0 1 2 3; 0 1 4 5; 0 1 6 7; 2 3 4 5; 2 3 6 7; 4 5 6 7])",
      "x^4+4x^3+10x^2+14x +6xy +14y+10y^2+4y^3+y^4", "Vamos matroid with {5,6,7,8} a hyperplane",
      sparse_flags(true, ""),
      {formula("sparse paving, 6 circuit-hyperplanes", [] { return fam::sparse_paving(4, 8, 6); })});

  add("R9", "gf(3, [1 0 0 1 1 1 1 1 1; 0 1 0 1 -1 -1 -1 1 0; 0 0 1 0 0 1 -1 1 -1])",
      "x^3 +6x^2 +8x+ 11xy + 2xy^2+ 8y+13y^2+10y^3+6y^4+3y^5+y^6",
      "ternary Reid geometry; paving block counts", CatalogFlags{false, false, true, "char 3 only"},
      {formula("paving blocks 3x2, 7x3, 2x4",
               [] { return fam::paving({3, 9, {{2, 3}, {3, 7}, {4, 2}}}); })});
  add("R10",
      "gf(2, [1 0 0 0 0 1 1 0 0 1; 0 1 0 0 0 1 1 1 0 0; 0 0 1 0 0 0 1 1 1 0; "
      "0 0 0 1 0 0 0 1 1 1; 0 0 0 0 1 1 0 0 1 1])",
      "x^5 +5x^4 +15x^3 +20x^2 +10x +15x^2y +30xy +15xy^2 +10y+20y^2+15y^3+5y^4+y^5",
      "regular, neither graphic nor cographic; deletions are M(K33)",
      CatalogFlags{true, false, false, "all fields"},
      {formula("T(K33) + T(K33) with x and y swapped",
               [] {
                 const BiPoly k33 = fam::complete_bipartite(3, 3);
                 return k33 + k33.swapped();
               })});
  add("R12",
      "gf(2, [1 0 0 0 0 0 1 1 1 0 0 0; 0 1 0 0 0 0 1 1 0 1 0 0; 0 0 1 0 0 0 1 0 0 0 1 0; "
      "0 0 0 1 0 0 0 1 0 0 0 1; 0 0 0 0 1 0 0 0 1 0 1 1; 0 0 0 0 0 1 0 0 0 1 1 1])",
      "x^6 +6x^5 +19x^4 +35x^3 +35x^2 +14x +2x^4y +19x^3y +53x^2y +17x^2y^2 +56xy +53xy^2 "
      "+19xy^3 +2xy^4 +14y+35y^2+ 35y^3+19y^4+6y^5+y^6",
      "regular, neither graphic nor cographic; binary representation",
      CatalogFlags{true, false, false, "all fields"}, {});

  add("Pappus", kPappus, "x^3+6x^2+12x+9xy+12y+15y^2+10y^3+6y^4+3y^5+y^6", "Pappus configuration",
      sparse_flags(false, ""),
      {formula("sparse paving, 9 circuit-hyperplanes", [] { return fam::sparse_paving(3, 9, 9); })});
  add("nonPappus", "relax(" + kPappus + ", {6 7 8})",
      "x^3+6x^2+13x+8xy+13y+15y^2+10y^3+6y^4+3y^5+y^6", "relaxation of the Pappus matroid",
      sparse_flags(false, "none"),
      {formula("sparse paving, 8 circuit-hyperplanes", [] { return fam::sparse_paving(3, 9, 8); }),
       construction("sparse(3, 9, [0 1 2; 3 4 5; 0 4 6; 1 3 6; 0 5 7; 2 3 7; 1 5 8; 2 4 8])")});
  add("nonDesargues", "relax(" + kDesargues + ", {7 8 9})",
      "x^3+7x^2+19x+9xy+19y+21y^2+15y^3+10y^4+6y^5+3y^6+y^7",
      "Desargues configuration without its axis line", sparse_flags(false, "none"),
      {formula("sparse paving, 9 circuit-hyperplanes", [] { return fam::sparse_paving(3, 10, 9); })});
  add("S(2,3,13)", "cyclic(13, 3, [0 1 4; 0 2 7])",
      "x^3+10x^2+29x+26xy+29y+45y^2+36y^3+28y^4+21y^5+15y^6+10y^7+6y^8+3y^9+y^10",
      "Steiner triple system on 13 points", sparse_flags(false, ""),
      {formula("Steiner S(2,3,13)", [] { return fam::steiner_sparse(3, 13, 26); })});
  add("S(5,6,12)", "witt12()",
      "x^6+6x^5+21x^4+56x^3+126x^2+120x+132xy+120y+126y^2+56y^3+21y^4+6y^5+y^6",
      "small Witt design", sparse_flags(true, ""),
      {formula("Steiner S(5,6,12)", [] { return fam::steiner_sparse(6, 12, 132); })});

  add("PG22", "gf(2, [0 0 0 1 1 1 1; 0 1 1 0 0 1 1; 1 0 1 0 1 0 1])", kF7,
      "projective plane over GF(2)", sparse_flags(false, "char 2 only"),
      {formula("projective(2,2)", [] { return fam::projective(2, 2); }),
       formula("2-cone of U23", [] { return fam::q_cone(fam::uniform(2, 3), 2, 2); })});
  add("PG23",
      "gf(3, [1 0 0 1 2 2 1 1 0 0 1 1 2; 0 1 0 1 1 1 0 1 1 1 0 1 1; 0 0 1 0 1 2 1 2 1 2 2 1 0])",
      "x^3+10x^2+13xy^2+26xy+16x+16y+32y^2+36y^3+28y^4+21y^5+15y^6+10y^7+6y^8+3y^9+y^10",
      "projective plane over GF(3); coboundary formula", CatalogFlags{false, false, true, "char 3 only"},
      {formula("projective(2,3)", [] { return fam::projective(2, 3); }),
       formula("3-cone of U24", [] { return fam::q_cone(fam::uniform(2, 4), 2, 3); })});
  add("AG23", "gf(3, [1 1 1 1 1 1 1 1 1; 0 0 0 1 1 1 2 2 2; 0 1 2 0 1 2 0 1 2])",
      "x^3+6x^2+12xy+9x+9y+15y^2+10y^3+6y^4+3y^5+y^6",
      "affine plane over GF(3); coboundary formula", sparse_flags(false, "char 3 only"),
      {formula("affine(2,3)", [] { return fam::affine(2, 3); }),
       formula("Steiner S(2,3,9)", [] { return fam::steiner_sparse(3, 9, 12); })});

  add("K5", "complete(5)",
      "y^6+4y^5+x^4+5xy^3+10y^4+6x^3+10x^2y+15xy^2+15y^3+11x^2+20xy+15y^2+6x+6y",
      "complete graphs, generating function", CatalogFlags{false, false, false, "all fields"},
      {formula("complete_graph(5)", [] { return fam::complete_graph(5); })});
  add("K33", "bipartite(3, 3)",
      "x^5+4x^4+10x^3+9x^2y+11x^2+6xy^2+15xy+5x+y^4+5y^3+9y^2+5y",
      "complete bipartite graphs, generating function",
      CatalogFlags{false, false, false, "all fields"},
      {formula("complete_bipartite(3,3)", [] { return fam::complete_bipartite(3, 3); })});
  add("L22", "grid(2, 2)", "x^3 + x^2 + x + y", "grid recurrence start; the 4-cycle",
      CatalogFlags{false, true, true, "all fields"},
      {formula("grid2(2)", [] { return fam::grid2(2); }),
       formula("transfer_grid(2,2)", [] { return transfer_grid(2, 2); }),
       formula("cycle(4)", [] { return fam::cycle(4); })});
  add("M3", "catalan(3)", "x^3y + x^2y + x^2y^2 + xy^2 + xy^3", "Catalan matroids",
      CatalogFlags{true, false, false, "all infinite fields"},
      {formula("catalan(3)", [] { return fam::catalan(3); })});
  add("H", "contract(bipartite(2, 4), 0)", kH, "K24 with an edge contracted",
      CatalogFlags{false, false, false, "all fields"},
      // Deleting an edge of K24 leaves a pendant edge on K23, hence the factor x.
      {formula("T(K24) - x T(K23)",
               [x] { return fam::complete_bipartite(2, 4) - x * fam::complete_bipartite(2, 3); }),
       formula("2-stretches of multilinks",
               [x] {
                 return fam::stretch_poly(fam::multilink(4), 3, 2) -
                        x * fam::stretch_poly(fam::multilink(3), 2, 2);
               })});
  return c;
}

}  // namespace

BiPoly CatalogEntry::ground_truth() const { return parse_poly(printed); }

Matroid CatalogEntry::build() const { return build_recipe(recipe); }

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& lookup(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  fail(ErrorKind::UnknownEntry, "no catalog entry named '" + std::string(name) + "'");
}

std::size_t VerifyReport::agreeing() const {
  std::size_t n = 0;
  for (const auto& p : paths) n += matches(p) ? 1 : 0;
  return n;
}

bool VerifyReport::basis_count_ok() const {
  return basis_count.has_value() && ground_truth.eval(Integer(1), Integer(1)) == *basis_count;
}

bool VerifyReport::passed() const {
  return build_error.empty() && !paths.empty() && agreeing() == paths.size() && basis_count_ok();
}

bool VerifyReport::erratum_candidate() const {
  if (paths.empty()) return false;
  for (const auto& p : paths) {
    if (!p.ok() || *p.poly != *paths.front().poly) return false;
  }
  return *paths.front().poly != ground_truth;
}

VerifyReport verify(const CatalogEntry& entry, const VerifyOptions& options) {
  VerifyReport report;
  report.name = entry.name;
  report.ground_truth = entry.ground_truth();
  auto run = [&](const std::string& label, const std::function<BiPoly()>& f) {
    PathResult r{label, std::nullopt, {}};
    try {
      r.poly = f();
    } catch (const std::exception& ex) {
      r.error = ex.what();
    }
    report.paths.push_back(std::move(r));
  };

  try {
    const Matroid m = entry.build();
    for (const auto& engine : options.engines) {
      run(engine, [&] { return tutte_by_engine(m, engine, options.threads, options.budget_nodes); });
    }
    if (m.size() <= kEnumerationLimit) report.basis_count = bases(m).size();
  } catch (const std::exception& ex) {
    report.build_error = ex.what();
  }
  if (options.alternatives) {
    for (const auto& alt : entry.alternatives) run(alt.label, alt.compute);
  }
  return report;
}

std::string report_text(const VerifyReport& r) {
  std::ostringstream out;
  const char* verdict = r.passed() ? "PASS" : (r.erratum_candidate() ? "ERRATUM?" : "FAIL");
  out << r.name << ": " << verdict << " (" << r.agreeing() << "/" << r.paths.size()
      << " paths match the printed polynomial)\n";
  out << "  printed: " << to_text(r.ground_truth) << '\n';
  if (!r.build_error.empty()) out << "  build failed: " << r.build_error << '\n';
  for (const auto& p : r.paths) {
    out << "  " << p.path << ": ";
    if (!p.ok()) {
      out << "error: " << p.error;
    } else if (r.matches(p)) {
      out << "match";
    } else {
      out << "MISMATCH " << to_text(*p.poly);
    }
    out << '\n';
  }
  if (r.basis_count) {
    out << "  bases: " << *r.basis_count << (r.basis_count_ok() ? " (= T(1,1))" : " (!= T(1,1))")
        << '\n';
  }
  return out.str();
}

std::string report_json(const VerifyReport& r) {
  using nlohmann::json;
  json paths = json::array();
  for (const auto& p : r.paths) {
    json item{{"path", p.path}, {"match", r.matches(p)}};
    if (p.ok()) {
      item["polynomial"] = json::parse(to_json(*p.poly));
    } else {
      item["error"] = p.error;
    }
    paths.push_back(std::move(item));
  }
  json doc{{"name", r.name},
           {"passed", r.passed()},
           {"erratum_candidate", r.erratum_candidate()},
           {"ground_truth", json::parse(to_json(r.ground_truth))},
           {"paths", paths}};
  if (r.basis_count) doc["basis_count"] = *r.basis_count;
  if (!r.build_error.empty()) doc["build_error"] = r.build_error;
  return doc.dump();
}

namespace {

nlohmann::json entry_doc(const CatalogEntry& e) {
  using nlohmann::json;
  json alternatives = json::array();
  for (const auto& a : e.alternatives) alternatives.push_back(a.label);
  return json{{"name", e.name},
              {"recipe", e.recipe},
              {"polynomial", json::parse(to_json(e.ground_truth()))},
              {"printed", e.printed},
              {"provenance", e.provenance},
              {"flags",
               {{"self_dual", e.flags.self_dual},
                {"sparse_paving", e.flags.sparse_paving},
                {"paving", e.flags.paving},
                {"representable", e.flags.representable}}},
              {"alternatives", alternatives}};
}

}  // namespace

std::string entry_json(const CatalogEntry& entry) { return entry_doc(entry).dump(); }

std::string catalog_json() {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& e : catalog()) doc.push_back(entry_doc(e));
  return doc.dump(2);
}

}  // namespace tutte
