#pragma once

#include <array>
#include <map>
#include <vector>

#include "tutte/bipoly.hpp"

namespace tutte::families {

/// Uniform matroid U_{r,n}. Both the subset-size form and the activity form
/// are evaluated and must agree.
BiPoly uniform(unsigned r, unsigned n);

/// The n-cycle: x + x^2 + ... + x^(n-1) + y.
BiPoly cycle(unsigned n);
/// n parallel edges; the dual of cycle(n).
BiPoly multilink(unsigned n);

/// Rank-r sparse paving matroid on n elements with ch_count circuit-hyperplanes.
BiPoly sparse_paving(unsigned r, unsigned n, const Integer& ch_count);

/// T - xy + x + y.
BiPoly relax_poly(const BiPoly& t);
/// T + xy - x - y.
BiPoly unrelax_poly(const BiPoly& t);

/// Free extension from T and T(1, y) (given as a polynomial in y).
BiPoly free_ext_poly(const BiPoly& t, const BiPoly& t_at_x1);

/// T(1, y) as a polynomial in y.
BiPoly at_x_equals_one(const BiPoly& t);

/// Paving matroid described by its hyperplanes: block_sizes[k] blocks of
/// cardinality k in an (r-1)-partition of an n-set.
struct PavingSpec {
  unsigned r = 2;
  unsigned n = 0;
  std::map<unsigned, Integer> block_sizes;
};

void validate(const PavingSpec& spec);
BiPoly paving(const PavingSpec& spec);

/// Catalan matroid M_n.
BiPoly catalan(unsigned n);

/// The 2-by-n grid, from the coupled recurrence with the auxiliary family
/// obtained by contracting the last rung.
BiPoly grid2(unsigned n);

/// Largest n accepted by complete_graph.
inline constexpr unsigned kCompleteGraphLimit = 30;
/// Largest n*m accepted by complete_bipartite.
inline constexpr unsigned kCompleteBipartiteLimit = 64;

BiPoly complete_graph(unsigned n);
BiPoly complete_bipartite(unsigned n, unsigned m);

/// Coboundary polynomials (x = lambda, y = t) behind the two functions above.
BiPoly complete_graph_coboundary(unsigned n);
BiPoly complete_bipartite_coboundary(unsigned n, unsigned m);

/// Gaussian coefficient [m k]_q.
Integer gaussian(unsigned m, unsigned k, const Integer& q);

bool is_prime_power(const Integer& q);

/// PG(dim, q), rank dim + 1.
BiPoly projective(unsigned dim, const Integer& q);
/// AG(dim, q), rank dim + 1.
BiPoly affine(unsigned dim, const Integer& q);
BiPoly projective_coboundary(unsigned dim, const Integer& q);
BiPoly affine_coboundary(unsigned dim, const Integer& q);

/// Tutte polynomial of a q-cone over a rank-r simple GF(q)-representable
/// matroid with polynomial t. NonExactDivision means the input was not such
/// a matroid.
BiPoly q_cone(const BiPoly& t, unsigned r, const Integer& q);

/// p_k = (1+x+y) p_{k-1} - xy p_{k-2}, p_0 = 2, p_1 = 1+x+y.
BiPoly wheel_power_sum(unsigned k);
BiPoly wheel(unsigned n);
BiPoly whirl(unsigned n);

BiPoly one_sum(const std::vector<BiPoly>& polys);

/// 2-sum from the contraction and deletion of the base point on both sides.
BiPoly two_sum_poly(const BiPoly& m1_contract, const BiPoly& m1_delete,
                    const BiPoly& m2_contract, const BiPoly& m2_delete);

/// The five minors, in the order
/// \p\s\q, \p/s\q, /p\s\q, /p/s/q, \p\s/q.
using DeltaMinors = std::array<BiPoly, 5>;
BiPoly delta_sum_poly(const DeltaMinors& q_vec, const DeltaMinors& p_vec);

BiPoly thicken_poly(const BiPoly& t, unsigned rank, unsigned k);
BiPoly stretch_poly(const BiPoly& t, unsigned corank, unsigned k);

struct TensorInputs {
  BiPoly t_m;
  unsigned rank = 0;
  unsigned size = 0;
  BiPoly t_n_delete;
  BiPoly t_n_contract;
};

/// f and g of the pointed matroid N_d.
std::pair<BiPoly, BiPoly> tensor_fg(const BiPoly& t_n_delete, const BiPoly& t_n_contract);
BiPoly tensor_poly(const TensorInputs& in);

/// Steiner system S(r-1, r, n) viewed as a sparse paving matroid; only
/// parameter sets from known infinite families or sporadic systems are
/// accepted.
BiPoly steiner_sparse(unsigned r, unsigned n, const Integer& ch_count);

}  // namespace tutte::families
