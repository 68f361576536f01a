#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "tutte/engines.hpp"
#include "tutte/error.hpp"

namespace tutte {

namespace {

// x + y + ... + y^(m-1): a class of m parallel edges forming a cocircuit.
BiPoly parallel_cocircuit_factor(unsigned m) { return BiPoly::x() + geometric_sum_y(m) - 1; }

// y + x + ... + x^(m-1): a class of m series elements forming a circuit.
BiPoly series_circuit_factor(unsigned m) { return BiPoly::y() + geometric_sum_x(m) - 1; }

class Budget {
 public:
  Budget(std::uint64_t limit, DcStats* stats) : limit_(limit), stats_(stats) {}

  void tick() {
    if (++nodes_ > limit_) {
      fail(ErrorKind::ResourceBudgetExceeded,
           "deletion-contraction exceeded " + std::to_string(limit_) + " nodes");
    }
    if (stats_ != nullptr) stats_->nodes = nodes_;
  }
  void hit() {
    if (stats_ != nullptr) ++stats_->memo_hits;
  }

 private:
  std::uint64_t limit_;
  DcStats* stats_;
  std::uint64_t nodes_ = 0;
};

// ---------------------------------------------------------------------------
// Rank-oracle recursion on minors M \ (E - R - C) / C.

class OracleRecursion {
 public:
  OracleRecursion(const Matroid& m, Budget& budget) : m_(m), budget_(budget) {}

  BiPoly run(ElementSet rest, ElementSet con) {
    budget_.tick();
    if (rest.empty()) return BiPoly(1);

    const unsigned r_all = rank(rest | con);
    unsigned loops = 0;
    unsigned coloops = 0;
    {
      const unsigned rc = rank(con);
      for (unsigned e : rest) {
        if (rank(con.with(e)) == rc) {
          rest = rest.without(e);
          ++loops;
        }
      }
      for (unsigned e : rest) {
        if (rank((rest | con).without(e)) < r_all) {
          rest = rest.without(e);
          con = con.with(e);
          ++coloops;
        }
      }
    }
    const BiPoly factor = BiPoly::term(1, coloops, loops);
    if (rest.empty()) return factor;

    const unsigned rc = rank(con);
    const ElementSet all = rest | con;

    ElementSet best;
    {
      ElementSet seen;
      for (unsigned e : rest) {
        if (seen.contains(e)) continue;
        ElementSet cls = ElementSet::single(e);
        for (unsigned f : rest - seen) {
          if (f > e && rank(con.with(e).with(f)) == rc + 1) cls = cls.with(f);
        }
        seen |= cls;
        if (cls.size() > best.size()) best = cls;
      }
    }
    if (best.size() >= 2) {
      const unsigned size = best.size();
      if (rank(all - best) < r_all) {
        return factor * parallel_cocircuit_factor(size) * run(rest - best, con | best);
      }
      return factor * (run(rest - best, con) + geometric_sum_y(size) * run(rest - best, con | best));
    }

    best = ElementSet{};
    {
      ElementSet seen;
      for (unsigned e : rest) {
        if (seen.contains(e)) continue;
        ElementSet cls = ElementSet::single(e);
        for (unsigned f : rest - seen) {
          if (f > e && rank(all.without(e).without(f)) + 1 == r_all) cls = cls.with(f);
        }
        seen |= cls;
        if (cls.size() > best.size()) best = cls;
      }
    }
    if (best.size() >= 2) {
      const unsigned size = best.size();
      if (rank(best | con) - rc < size) {
        return factor * series_circuit_factor(size) * run(rest - best, con);
      }
      return factor * (geometric_sum_x(size) * run(rest - best, con) + run(rest - best, con | best));
    }

    const unsigned pivot = rest.bound() - 1;
    const ElementSet smaller = rest.without(pivot);
    return factor * (run(smaller, con) + run(smaller, con.with(pivot)));
  }

 private:
  unsigned rank(ElementSet a) const { return m_.rank_unchecked(a); }

  const Matroid& m_;
  Budget& budget_;
};

// ---------------------------------------------------------------------------
// Multigraph recursion. Parallel edges are a single entry with a
// multiplicity; loops never appear because they are peeled off as factors.

struct MultiGraph {
  unsigned n = 0;
  std::vector<std::uint32_t> mult;  // n*n, symmetric, zero diagonal

  std::uint32_t at(unsigned a, unsigned b) const { return mult[a * n + b]; }
  void set(unsigned a, unsigned b, std::uint32_t m) {
    mult[a * n + b] = m;
    mult[b * n + a] = m;
  }
  unsigned neighbours(unsigned v) const {
    unsigned c = 0;
    for (unsigned w = 0; w < n; ++w) c += at(v, w) != 0 ? 1 : 0;
    return c;
  }
  bool has_edges() const {
    return std::any_of(mult.begin(), mult.end(), [](std::uint32_t m) { return m != 0; });
  }
};

MultiGraph induced(const MultiGraph& g, const std::vector<unsigned>& keep) {
  MultiGraph out;
  out.n = static_cast<unsigned>(keep.size());
  out.mult.assign(std::size_t{out.n} * out.n, 0);
  for (unsigned i = 0; i < out.n; ++i) {
    for (unsigned j = 0; j < out.n; ++j) out.mult[i * out.n + j] = g.at(keep[i], keep[j]);
  }
  return out;
}

// Merges b into a; edges between them disappear.
MultiGraph contract(const MultiGraph& g, unsigned a, unsigned b) {
  MultiGraph h = g;
  for (unsigned w = 0; w < g.n; ++w) {
    if (w == a || w == b) continue;
    const std::uint32_t m = g.at(a, w) + g.at(b, w);
    h.set(a, w, m);
  }
  h.set(a, b, 0);
  std::vector<unsigned> keep;
  for (unsigned v = 0; v < g.n; ++v) {
    if (v != b) keep.push_back(v);
  }
  return induced(h, keep);
}

std::vector<unsigned> component_labels(const MultiGraph& g, unsigned& count) {
  std::vector<unsigned> label(g.n, ~0U);
  count = 0;
  std::vector<unsigned> stack;
  for (unsigned s = 0; s < g.n; ++s) {
    if (label[s] != ~0U) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const unsigned v = stack.back();
      stack.pop_back();
      for (unsigned w = 0; w < g.n; ++w) {
        if (g.at(v, w) != 0 && label[w] == ~0U) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return label;
}

bool connected_without(const MultiGraph& g, unsigned a, unsigned b) {
  std::vector<char> seen(g.n, 0);
  std::vector<unsigned> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    const unsigned v = stack.back();
    stack.pop_back();
    for (unsigned w = 0; w < g.n; ++w) {
      if (seen[w] || g.at(v, w) == 0) continue;
      if ((v == a && w == b) || (v == b && w == a)) continue;
      if (w == b) return true;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return false;
}

// Vertex order from iterated colour refinement, ties broken by index. The key
// is the full adjacency under that order, so equal keys mean isomorphic
// graphs; refinement only raises the hit rate.
std::string memo_key(const MultiGraph& g) {
  std::vector<unsigned> colour(g.n);
  for (unsigned v = 0; v < g.n; ++v) {
    unsigned deg = 0;
    for (unsigned w = 0; w < g.n; ++w) deg += g.at(v, w);
    colour[v] = deg * 64 + g.neighbours(v);
  }
  unsigned classes = 0;
  for (unsigned round = 0; round < g.n; ++round) {
    std::vector<std::vector<std::uint64_t>> sig(g.n);
    for (unsigned v = 0; v < g.n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<std::uint64_t> nb;
      for (unsigned w = 0; w < g.n; ++w) {
        if (g.at(v, w) != 0) nb.push_back((std::uint64_t{colour[w]} << 32) | g.at(v, w));
      }
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::map<std::vector<std::uint64_t>, unsigned> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    unsigned next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (unsigned v = 0; v < g.n; ++v) colour[v] = ids[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  std::vector<unsigned> order(g.n);
  for (unsigned v = 0; v < g.n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](unsigned a, unsigned b) { return colour[a] < colour[b]; });

  std::string key;
  key.reserve(4 + std::size_t{g.n} * g.n * 2);
  auto put = [&key](std::uint32_t v) {
    do {
      key.push_back(static_cast<char>((v & 0x7FU) | (v >= 0x80U ? 0x80U : 0U)));
      v >>= 7U;
    } while (v != 0);
  };
  put(g.n);
  for (unsigned i = 0; i < g.n; ++i) {
    for (unsigned j = i + 1; j < g.n; ++j) put(g.at(order[i], order[j]));
  }
  return key;
}

class GraphRecursion {
 public:
  explicit GraphRecursion(Budget& budget) : budget_(budget) {}

  BiPoly run(MultiGraph g) {
    budget_.tick();
    BiPoly factor(1);

    // Peel leaves: the edges to a degree-one vertex are a cocircuit.
    for (;;) {
      unsigned leaf = g.n;
      for (unsigned v = 0; v < g.n && leaf == g.n; ++v) {
        if (g.neighbours(v) == 1) leaf = v;
      }
      if (leaf == g.n) break;
      unsigned u = 0;
      while (g.at(leaf, u) == 0) ++u;
      factor *= parallel_cocircuit_factor(g.at(leaf, u));
      g.set(leaf, u, 0);
    }
    {
      std::vector<unsigned> keep;
      for (unsigned v = 0; v < g.n; ++v) {
        if (g.neighbours(v) != 0) keep.push_back(v);
      }
      if (keep.size() != g.n) g = induced(g, keep);
    }
    if (!g.has_edges()) return factor;

    unsigned count = 0;
    const auto label = component_labels(g, count);
    if (count > 1) {
      for (unsigned c = 0; c < count; ++c) {
        std::vector<unsigned> keep;
        for (unsigned v = 0; v < g.n; ++v) {
          if (label[v] == c) keep.push_back(v);
        }
        factor *= run(induced(g, keep));
      }
      return factor;
    }

    const std::string key = memo_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) {
      budget_.hit();
      return factor * it->second;
    }

    // Largest parallel class first; among equals prefer low-degree ends.
    unsigned pa = 0;
    unsigned pb = 0;
    std::uint32_t best_mult = 0;
    unsigned best_deg = ~0U;
    for (unsigned a = 0; a < g.n; ++a) {
      const unsigned da = g.neighbours(a);
      for (unsigned b = a + 1; b < g.n; ++b) {
        const std::uint32_t m = g.at(a, b);
        if (m == 0) continue;
        const unsigned deg = std::min(da, g.neighbours(b)) * 64 + std::max(da, g.neighbours(b));
        if (m > best_mult || (m == best_mult && deg < best_deg)) {
          best_mult = m;
          best_deg = deg;
          pa = a;
          pb = b;
        }
      }
    }

    BiPoly value;
    if (!connected_without(g, pa, pb)) {
      value = parallel_cocircuit_factor(best_mult) * run(contract(g, pa, pb));
    } else {
      MultiGraph deleted = g;
      deleted.set(pa, pb, 0);
      value = run(std::move(deleted)) + geometric_sum_y(best_mult) * run(contract(g, pa, pb));
    }
    memo_.emplace(key, value);
    return factor * value;
  }

 private:
  Budget& budget_;
  std::unordered_map<std::string, BiPoly> memo_;
};

}  // namespace

BiPoly tutte_dc(const Graph& graph, const DcOptions& options, DcStats* stats) {
  if (stats != nullptr) *stats = {};
  Budget budget(options.budget_nodes, stats);
  MultiGraph g;
  g.n = graph.vertex_count();
  g.mult.assign(std::size_t{g.n} * g.n, 0);
  unsigned loops = 0;
  for (const Edge& e : graph.edges()) {
    if (e.is_loop()) {
      ++loops;
    } else {
      g.set(e.u, e.v, g.at(e.u, e.v) + 1);
    }
  }
  GraphRecursion rec(budget);
  return BiPoly::y(loops) * rec.run(std::move(g));
}

BiPoly tutte_dc(const Matroid& m, const DcOptions& options, DcStats* stats) {
  if (const auto* g = m.as<GraphicOracle>()) return tutte_dc(g->graph(), options, stats);
  if (stats != nullptr) *stats = {};
  Budget budget(options.budget_nodes, stats);
  OracleRecursion rec(m, budget);
  return rec.run(m.ground(), ElementSet{});
}

}  // namespace tutte
