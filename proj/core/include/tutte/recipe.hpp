#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tutte/matroid.hpp"

namespace tutte {

/// Construction programs such as "relax(gf(2, [1 0 0 1; 0 1 0 1]), {0 3})".
///
/// A recipe is one call. Arguments are nested calls, integers, element sets
/// "{0 3 5}", tables "[0 1; 1 2]" (rows split by ';') and bare words such as
/// lattice paths "ENEN". Elements are 0-indexed.
///
///   uniform(r, n)                 graph(V, [u v; ...])
///   complete(n)                   bipartite(a, b)
///   wheelgraph(n)                 cyclegraph(n)
///   grid(m, n)                    gf(p, [rows])
///   sparse(r, n, [sets])          paving(r, n, [blocks])
///   bases(r, n, [sets])           latticepath(P, Q)
///   catalan(n)                    cyclic(n, r, [base blocks])
///   witt12()
///   dual(M)  delete(M, e)  contract(M, e)  restrict(M, {set})
///   relax(M, {set})  freeext(M)  parallel(M, e)  sum(M, ...)
///   twosum(M, p, M, p)  deltasum(M, {p s q}, M, {p s q})
///   thicken(M, k)  stretch(M, k)  tensor(M, N, d)
///
/// Throws ParseError on malformed text; construction errors keep their own
/// kind.
Matroid build_recipe(std::string_view recipe);

/// Blocks of the S(5, 6, 12) Witt design: the orbit of {inf, 1, 3, 4, 5, 9}
/// under PSL(2, 11) acting on the projective line, with inf as element 11.
std::vector<ElementSet> witt12_blocks();

/// All translates mod n of the base blocks, without repeats.
std::vector<ElementSet> develop_cyclic(unsigned n, const std::vector<std::vector<unsigned>>& base);

}  // namespace tutte
