#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "tutte/bipoly.hpp"
#include "tutte/graph.hpp"
#include "tutte/matroid.hpp"

namespace tutte {

/// Default cap on deletion-contraction recursion nodes.
inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Sum over all subsets of (x-1)^corank (y-1)^nullity. The subset space is
/// split into chunks evaluated on `threads` workers (0 = hardware default);
/// the result does not depend on the thread count.
BiPoly tutte_subset(const Matroid& m, unsigned threads = 0);

struct DcOptions {
  std::uint64_t budget_nodes = kDefaultNodeBudget;
};

struct DcStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
};

/// Deletion-contraction with the parallel and series class shortcuts.
/// Graphic matroids go through a multigraph recursion memoised on an exact
/// relabelled encoding; other matroids recurse on minors of the rank oracle.
BiPoly tutte_dc(const Matroid& m, const DcOptions& options = {}, DcStats* stats = nullptr);
BiPoly tutte_dc(const Graph& g, const DcOptions& options = {}, DcStats* stats = nullptr);

/// Sum over bases of x^i(B) y^e(B) for the given element order (a permutation
/// of the ground set; empty means 0 < 1 < ... < n-1).
BiPoly tutte_activities(const Matroid& m, const std::vector<unsigned>& order = {});

/// Activities read off the lattice paths: internal activity counts north
/// steps shared with the upper path, external activity counts east steps
/// shared with the lower path. Requires a lattice-path matroid.
BiPoly tutte_lattice_path(const Matroid& m);

/// sum over subsets of (-1)^|A| lambda^(r(E) - r(A)).
UniPoly char_poly(const Matroid& m);

/// Sum over flats X of t^|X| chi_{M/X}(lambda), with x = lambda and y = t.
BiPoly coboundary(const Matroid& m);

/// Largest vertex count accepted by bad_colouring.
inline constexpr unsigned kColouringVertexLimit = 12;

/// Sum over all colourings with `colors` colours of t^(number of bad edges).
/// A loop is always bad.
UniPoly bad_colouring(const Graph& g, unsigned colors);

/// Tutte polynomial of the m-by-n grid (m in {2, 3, 4}) from a transfer
/// matrix over non-crossing partitions of a column.
BiPoly transfer_grid(unsigned m, unsigned n);

/// Number of non-crossing states used by transfer_grid for width m.
std::size_t transfer_state_count(unsigned m);

/// lambda * trace(D^n) for the lambda-by-lambda wheel matrix D; this is the
/// bad colouring polynomial of the wheel W_n.
UniPoly transfer_wheel(unsigned n, unsigned colors);

/// The matrix D used by transfer_wheel, in the variable x (standing for t).
PolyMatrix wheel_transfer_matrix(unsigned colors);

/// Engine selected by name: "subset", "dc", "activities", "coboundary".
BiPoly tutte_by_engine(const Matroid& m, std::string_view engine, unsigned threads = 0,
                       std::uint64_t budget_nodes = kDefaultNodeBudget);

}  // namespace tutte
