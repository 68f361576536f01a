#include "tutte/matroid.hpp"

#include <string>

#include "tutte/bipoly.hpp"
#include "tutte/error.hpp"

namespace tutte {

Matroid::Matroid(unsigned n, std::shared_ptr<const RankOracle> oracle)
    : n_(n), oracle_(std::move(oracle)) {
  if (n > ElementSet::kCapacity) {
    fail(ErrorKind::GroundSetTooLarge, "ground sets are limited to 64 elements");
  }
  full_rank_ = oracle_->rank(ElementSet::full(n));
}

unsigned Matroid::rank(ElementSet a) const {
  if (!a.subset_of(ground())) {
    fail(ErrorKind::ElementOutOfRange,
         "element " + std::to_string(a.bound() - 1) + " outside ground set of size " + std::to_string(n_));
  }
  return oracle_->rank(a);
}

bool Matroid::is_loop(unsigned e) const {
  if (e >= n_) fail(ErrorKind::ElementOutOfRange, "element " + std::to_string(e));
  return oracle_->rank(ElementSet::single(e)) == 0;
}

bool Matroid::is_coloop(unsigned e) const {
  if (e >= n_) fail(ErrorKind::ElementOutOfRange, "element " + std::to_string(e));
  return oracle_->rank(ground().without(e)) < full_rank_;
}

ElementSet Matroid::closure(ElementSet a) const {
  const unsigned r = rank(a);
  ElementSet out = a;
  for (unsigned e : ground() - a) {
    if (oracle_->rank(a.with(e)) == r) out = out.with(e);
  }
  return out;
}

// ---------------------------------------------------------------------------

SparsePavingOracle::SparsePavingOracle(unsigned r, std::vector<ElementSet> circuit_hyperplanes)
    : r_(r), list_(std::move(circuit_hyperplanes)), lookup_(list_.begin(), list_.end()) {}

unsigned SparsePavingOracle::rank(ElementSet a) const {
  const unsigned k = a.size();
  if (k < r_) return k;
  if (k > r_) return r_;
  return lookup_.count(a) != 0 ? r_ - 1 : r_;
}

unsigned PavingOracle::rank(ElementSet a) const {
  const unsigned k = a.size();
  if (k < r_) return k;
  for (ElementSet b : blocks_) {
    if (a.subset_of(b)) return r_ - 1;
  }
  return r_;
}

unsigned BasisListOracle::rank(ElementSet a) const {
  const unsigned cap = std::min(a.size(), r_);
  unsigned best = 0;
  for (ElementSet b : bases_) {
    best = std::max(best, (a & b).size());
    if (best == cap) break;
  }
  return best;
}

unsigned LatticePathOracle::count_north(const std::string& path) {
  return static_cast<unsigned>(std::count(path.begin(), path.end(), 'N'));
}


// ---------------------------------------------------------------------------

namespace {

void check_within(const std::vector<ElementSet>& sets, unsigned n, const char* what) {
  for (ElementSet s : sets) {
    if (!s.subset_of(ElementSet::full(n))) {
      fail(ErrorKind::ElementOutOfRange, std::string(what) + " uses an element outside the ground set");
    }
  }
}

// Prefix counts of north steps; entry k covers the first k steps.
std::vector<unsigned> north_profile(const std::string& path) {
  std::vector<unsigned> out(path.size() + 1, 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] != 'N' && path[i] != 'E') {
      fail(ErrorKind::InvalidParameters, "lattice paths use only the letters E and N");
    }
    out[i + 1] = out[i] + (path[i] == 'N' ? 1U : 0U);
  }
  return out;
}

}  // namespace

Matroid uniform_matroid(unsigned r, unsigned n) {
  if (r > n) fail(ErrorKind::InvalidParameters, "uniform matroid needs r <= n");
  return Matroid(n, std::make_shared<UniformOracle>(r));
}

Matroid graphic_matroid(Graph g) {
  const unsigned n = g.edge_count();
  return Matroid(n, std::make_shared<GraphicOracle>(std::move(g)));
}

Matroid linear_matroid(GFMatrix m) {
  const unsigned n = m.cols();
  return Matroid(n, std::make_shared<LinearOracle>(std::move(m)));
}

Matroid sparse_paving_matroid(unsigned r, unsigned n, std::vector<ElementSet> chs) {
  if (r > n) fail(ErrorKind::InvalidParameters, "sparse paving matroid needs r <= n");
  check_within(chs, n, "circuit-hyperplane");
  for (std::size_t i = 0; i < chs.size(); ++i) {
    if (chs[i].size() != r) {
      fail(ErrorKind::InvalidMatroid, "circuit-hyperplanes must have exactly r elements");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if ((chs[i] ^ chs[j]).size() <= 2) {
        fail(ErrorKind::InvalidMatroid, "two circuit-hyperplanes differ in at most two elements");
      }
    }
  }
  return Matroid(n, std::make_shared<SparsePavingOracle>(r, std::move(chs)));
}

Matroid paving_matroid(unsigned r, unsigned n, std::vector<ElementSet> blocks) {
  if (r < 2 || r > n) fail(ErrorKind::InvalidParameters, "paving partition needs 2 <= r <= n");
  check_within(blocks, n, "block");
  // Each (r-1)-set lies in at most one block when blocks meet in fewer than
  // r-1 elements; the count identity then forces exactly one.
  Integer covered = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() < r - 1) fail(ErrorKind::InvalidMatroid, "block smaller than r-1");
    for (std::size_t j = 0; j < i; ++j) {
      if ((blocks[i] & blocks[j]).size() >= r - 1) {
        fail(ErrorKind::InvalidMatroid, "two blocks share an (r-1)-subset");
      }
    }
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), blocks[i].size(), r - 1);
    covered += c;
  }
  Integer total;
  mpz_bin_uiui(total.get_mpz_t(), n, r - 1);
  if (covered != total) fail(ErrorKind::InvalidMatroid, "blocks do not cover every (r-1)-subset");
  return Matroid(n, std::make_shared<PavingOracle>(r, std::move(blocks)));
}

Matroid basis_matroid(unsigned r, unsigned n, std::vector<ElementSet> bases) {
  if (bases.empty()) fail(ErrorKind::InvalidMatroid, "a matroid has at least one basis");
  check_within(bases, n, "basis");
  for (ElementSet b : bases) {
    if (b.size() != r) fail(ErrorKind::InvalidMatroid, "bases must all have r elements");
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (n <= 16) {
    const std::unordered_set<ElementSet, ElementSetHash> lookup(bases.begin(), bases.end());
    for (ElementSet b1 : bases) {
      for (ElementSet b2 : bases) {
        for (unsigned e : b1 - b2) {
          bool found = false;
          for (unsigned f : b2 - b1) {
            if (lookup.count(b1.without(e).with(f)) != 0) {
              found = true;
              break;
            }
          }
          if (!found) fail(ErrorKind::InvalidMatroid, "basis exchange axiom fails");
        }
      }
    }
  }
  return Matroid(n, std::make_shared<BasisListOracle>(r, std::move(bases)));
}

Matroid lattice_path_matroid(const std::string& lower, const std::string& upper) {
  if (lower.size() != upper.size()) fail(ErrorKind::InvalidParameters, "paths must have equal length");
  const auto lo = north_profile(lower);
  const auto hi = north_profile(upper);
  if (lo.back() != hi.back()) fail(ErrorKind::InvalidParameters, "paths must end at the same point");
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (lo[k] > hi[k]) fail(ErrorKind::InvalidParameters, "lower path rises above the upper path");
  }
  const unsigned n = static_cast<unsigned>(lower.size());
  if (n > ElementSet::kCapacity) fail(ErrorKind::GroundSetTooLarge, "path longer than 64 steps");

  std::vector<ElementSet> bases;
  // Depth-first walk over bounded paths; `support` holds the north steps.
  auto walk = [&](auto&& self, unsigned step, unsigned north, ElementSet support) -> void {
    if (step == n) {
      bases.push_back(support);
      return;
    }
    if (north + 1 <= hi[step + 1]) self(self, step + 1, north + 1, support.with(step));
    if (north >= lo[step + 1]) self(self, step + 1, north, support);
  };
  walk(walk, 0, 0, ElementSet{});
  std::sort(bases.begin(), bases.end());
  return Matroid(n, std::make_shared<LatticePathOracle>(lower, upper, std::move(bases)));
}

Matroid catalan_matroid(unsigned n) {
  if (n == 0) fail(ErrorKind::InvalidParameters, "Catalan matroid needs n >= 1");
  std::string lower(n, 'E');
  lower += std::string(n, 'N');
  std::string upper;
  for (unsigned i = 0; i < n; ++i) upper += "EN";
  return lattice_path_matroid(lower, upper);
}

}  // namespace tutte
