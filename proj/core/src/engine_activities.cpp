#include <algorithm>
#include <string>
#include <unordered_set>

#include "tutte/engines.hpp"
#include "tutte/error.hpp"

namespace tutte {

namespace {

// Grouped counts of bases by (internal, external) activity.
BiPoly from_counts(const std::vector<std::vector<unsigned long>>& t) {
  BiPoly out;
  for (unsigned i = 0; i < t.size(); ++i) {
    for (unsigned j = 0; j < t[i].size(); ++j) {
      if (t[i][j] != 0) out.add_term(Integer(t[i][j]), i, j);
    }
  }
  return out;
}

}  // namespace

BiPoly tutte_activities(const Matroid& m, const std::vector<unsigned>& order) {
  const unsigned n = m.size();
  std::vector<unsigned> pos(n);
  if (order.empty()) {
    for (unsigned e = 0; e < n; ++e) pos[e] = e;
  } else {
    if (order.size() != n) fail(ErrorKind::InvalidParameters, "order must list every element once");
    std::vector<char> seen(n, 0);
    for (unsigned i = 0; i < n; ++i) {
      if (order[i] >= n || seen[order[i]]) {
        fail(ErrorKind::InvalidParameters, "order must be a permutation of the ground set");
      }
      seen[order[i]] = 1;
      pos[order[i]] = i;
    }
  }

  const std::vector<ElementSet> all = bases(m);
  const std::unordered_set<ElementSet, ElementSetHash> lookup(all.begin(), all.end());
  std::vector<std::vector<unsigned long>> counts(m.rank() + 1,
                                                 std::vector<unsigned long>(m.corank() + 1, 0));
  const ElementSet ground = m.ground();
  for (ElementSet b : all) {
    unsigned internal = 0;
    for (unsigned e : b) {
      bool active = true;
      for (unsigned f : ground - b) {
        if (pos[f] < pos[e] && lookup.count(b.without(e).with(f)) != 0) {
          active = false;
          break;
        }
      }
      internal += active ? 1 : 0;
    }
    unsigned external = 0;
    for (unsigned f : ground - b) {
      bool active = true;
      for (unsigned e : b) {
        if (pos[e] < pos[f] && lookup.count(b.without(e).with(f)) != 0) {
          active = false;
          break;
        }
      }
      external += active ? 1 : 0;
    }
    ++counts[internal][external];
  }
  return from_counts(counts);
}

BiPoly tutte_lattice_path(const Matroid& m) {
  const auto* lp = m.as<LatticePathOracle>();
  if (lp == nullptr) fail(ErrorKind::UnsupportedEngine, "matroid is not a lattice-path matroid");
  const std::string& lower = lp->lower();
  const std::string& upper = lp->upper();
  const unsigned n = m.size();

  std::vector<unsigned> lo(n + 1, 0);
  std::vector<unsigned> hi(n + 1, 0);
  for (unsigned k = 0; k < n; ++k) {
    lo[k + 1] = lo[k] + (lower[k] == 'N' ? 1U : 0U);
    hi[k + 1] = hi[k] + (upper[k] == 'N' ? 1U : 0U);
  }
  std::vector<std::vector<unsigned long>> counts(m.rank() + 1,
                                                 std::vector<unsigned long>(m.corank() + 1, 0));
  for (ElementSet b : lp->bases()) {
    unsigned internal = 0;
    unsigned external = 0;
    unsigned north = 0;
    for (unsigned k = 0; k < n; ++k) {
      // A step is shared with a bounding path when both start at the same
      // point and move in the same direction.
      if (b.contains(k)) {
        if (north == hi[k] && upper[k] == 'N') ++internal;
        ++north;
      } else if (north == lo[k] && lower[k] == 'E') {
        ++external;
      }
    }
    ++counts[internal][external];
  }
  return from_counts(counts);
}

}  // namespace tutte
