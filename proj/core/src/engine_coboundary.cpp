#include <string>

#include "tutte/engines.hpp"
#include "tutte/error.hpp"

namespace tutte {

BiPoly coboundary(const Matroid& m) {
  const unsigned r = m.rank();
  // counts[|X|][k]: signed weight of lambda^k t^|X|.
  std::vector<std::vector<long>> counts(m.size() + 1, std::vector<long>(r + 1, 0));
  for (ElementSet flat : flats(m)) {
    const std::uint64_t rest = (m.ground() - flat).bits();
    // Walk every subset B of the complement, including the empty one.
    std::uint64_t b = 0;
    for (;;) {
      const ElementSet sub(b);
      const unsigned k = r - m.rank_unchecked(flat | sub);
      counts[flat.size()][k] += (sub.size() % 2 == 0) ? 1 : -1;
      if (b == rest) break;
      b = (b - rest) & rest;
    }
  }
  BiPoly out;
  for (unsigned size = 0; size <= m.size(); ++size) {
    for (unsigned k = 0; k <= r; ++k) {
      if (counts[size][k] != 0) out.add_term(Integer(counts[size][k]), k, size);
    }
  }
  return out;
}

UniPoly bad_colouring(const Graph& g, unsigned colors) {
  if (colors == 0) fail(ErrorKind::InvalidParameters, "need at least one colour");
  const unsigned nv = g.vertex_count();
  if (nv > kColouringVertexLimit) {
    fail(ErrorKind::GraphTooLarge, "colouring enumeration limited to " +
                                       std::to_string(kColouringVertexLimit) + " vertices");
  }
  std::vector<unsigned long> by_bad(g.edge_count() + 1, 0);
  std::vector<unsigned> colour(nv, 0);
  for (;;) {
    unsigned bad = 0;
    for (const Edge& e : g.edges()) bad += colour[e.u] == colour[e.v] ? 1 : 0;
    ++by_bad[bad];
    unsigned v = 0;
    while (v < nv && ++colour[v] == colors) colour[v++] = 0;
    if (v == nv) break;
  }
  UniPoly out;
  for (unsigned j = 0; j < by_bad.size(); ++j) {
    if (by_bad[j] != 0) out.add_term(Rational(Integer(by_bad[j])), j);
  }
  return out;
}

}  // namespace tutte
