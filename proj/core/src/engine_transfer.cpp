#include <algorithm>
#include <map>
#include <string>

#include "tutte/conversions.hpp"
#include "tutte/engines.hpp"
#include "tutte/error.hpp"

namespace tutte {

namespace {

// Connectivity of frontier vertices: label[i] is the block of vertex i,
// numbered by first occurrence.
using Partition = std::vector<unsigned char>;
// Random-cluster weights in X = x - 1 and Y = y - 1.
using Distribution = std::map<Partition, BiPoly>;

Partition canonical(const Partition& p) {
  Partition out(p.size());
  std::vector<int> rename(256, -1);
  unsigned next = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (rename[p[i]] < 0) rename[p[i]] = static_cast<int>(next++);
    out[i] = static_cast<unsigned char>(rename[p[i]]);
  }
  return out;
}

unsigned block_count(const Partition& p) {
  return p.empty() ? 0 : 1U + *std::max_element(p.begin(), p.end());
}

void accumulate(Distribution& d, const Partition& p, const BiPoly& w) {
  auto [it, inserted] = d.try_emplace(p, w);
  if (!inserted) it->second += w;
}

// Each edge is either absent or present; a present edge inside a block closes
// a cycle (factor Y), otherwise it merges two blocks.
Distribution add_edge(const Distribution& in, unsigned a, unsigned b) {
  Distribution out;
  for (const auto& [p, w] : in) {
    accumulate(out, p, w);
    if (p[a] == p[b]) {
      accumulate(out, p, w * BiPoly::y());
    } else {
      Partition q = p;
      const unsigned char from = p[b];
      for (auto& c : q) {
        if (c == from) c = p[a];
      }
      accumulate(out, canonical(q), w);
    }
  }
  return out;
}

// Drops the first `count` frontier vertices; every block left without a
// frontier vertex is a finished component (factor X).
Distribution drop_prefix(const Distribution& in, unsigned count) {
  Distribution out;
  for (const auto& [p, w] : in) {
    const Partition kept(p.begin() + count, p.end());
    unsigned finished = 0;
    for (unsigned i = 0; i < count; ++i) {
      const bool first = std::find(p.begin(), p.begin() + i, p[i]) == p.begin() + i;
      if (first && std::find(kept.begin(), kept.end(), p[i]) == kept.end()) ++finished;
    }
    accumulate(out, canonical(kept), w * BiPoly::x(finished));
  }
  return out;
}

Distribution first_column(unsigned m) {
  Partition singletons(m);
  for (unsigned i = 0; i < m; ++i) singletons[i] = static_cast<unsigned char>(i);
  Distribution d{{singletons, BiPoly(1)}};
  for (unsigned i = 0; i + 1 < m; ++i) d = add_edge(d, i, i + 1);
  return d;
}

Distribution next_column(const Partition& from, unsigned m) {
  Partition wide(2 * m);
  for (unsigned i = 0; i < m; ++i) {
    wide[i] = from[i];
    wide[m + i] = static_cast<unsigned char>(m + i);
  }
  Distribution d{{canonical(wide), BiPoly(1)}};
  for (unsigned i = 0; i < m; ++i) d = add_edge(d, i, m + i);
  for (unsigned i = 0; i + 1 < m; ++i) d = add_edge(d, m + i, m + i + 1);
  return drop_prefix(d, m);
}

struct GridTransfer {
  std::vector<Partition> states;
  PolyMatrix initial{1, 1};
  PolyMatrix step{1, 1};
  PolyMatrix final{1, 1};
};

GridTransfer build_grid_transfer(unsigned m) {
  if (m < 2 || m > 4) fail(ErrorKind::UnsupportedWidth, "grid width must be 2, 3 or 4");
  const Distribution start = first_column(m);

  std::map<Partition, std::size_t> index;
  std::vector<Partition> states;
  std::vector<Distribution> rows;
  auto intern = [&](const Partition& p) {
    auto [it, inserted] = index.try_emplace(p, states.size());
    if (inserted) states.push_back(p);
    return it->second;
  };
  for (const auto& [p, w] : start) intern(p);
  for (std::size_t i = 0; i < states.size(); ++i) {
    rows.push_back(next_column(states[i], m));
    for (const auto& [p, w] : rows.back()) intern(p);
  }

  GridTransfer t;
  const std::size_t s = states.size();
  t.initial = PolyMatrix(1, s);
  t.step = PolyMatrix(s, s);
  t.final = PolyMatrix(s, 1);
  for (const auto& [p, w] : start) t.initial.at(0, index.at(p)) = w;
  for (std::size_t i = 0; i < s; ++i) {
    for (const auto& [p, w] : rows[i]) t.step.at(i, index.at(p)) = w;
    t.final.at(i, 0) = BiPoly::x(block_count(states[i]) - 1);
  }
  t.states = std::move(states);
  return t;
}

}  // namespace

std::size_t transfer_state_count(unsigned m) { return build_grid_transfer(m).states.size(); }

BiPoly transfer_grid(unsigned m, unsigned n) {
  if (n == 0) fail(ErrorKind::InvalidParameters, "grid needs at least one column");
  const GridTransfer t = build_grid_transfer(m);
  // Row vector times the step matrix, one column at a time: cheaper than
  // squaring when the entries grow.
  PolyMatrix v = t.initial;
  for (unsigned k = 1; k < n; ++k) v = mat_mul(v, t.step);
  const PolyMatrix result = mat_mul(v, t.final);
  return compose(result.at(0, 0), BiPoly::x() - 1, BiPoly::y() - 1);
}

PolyMatrix wheel_transfer_matrix(unsigned colors) {
  if (colors < 2) fail(ErrorKind::InvalidParameters, "wheel transfer needs at least two colours");
  PolyMatrix d(colors, colors);
  // Colour 0 is the hub's colour: stepping onto it makes the spoke bad.
  for (unsigned i = 0; i < colors; ++i) {
    for (unsigned j = 0; j < colors; ++j) {
      d.at(i, j) = BiPoly::x((i == j ? 1U : 0U) + (j == 0 ? 1U : 0U));
    }
  }
  return d;
}

UniPoly transfer_wheel(unsigned n, unsigned colors) {
  if (n < 3) fail(ErrorKind::InvalidParameters, "wheel needs at least three spokes");
  const BiPoly tr = trace(mat_pow(wheel_transfer_matrix(colors), n));
  return UniPoly::from_bipoly_x(scale(tr, Integer(colors)));
}

BiPoly tutte_by_engine(const Matroid& m, std::string_view engine, unsigned threads,
                       std::uint64_t budget_nodes) {
  if (engine == "subset") return tutte_subset(m, threads);
  if (engine == "dc") return tutte_dc(m, DcOptions{budget_nodes});
  if (engine == "activities") {
    if (m.kind() == MatroidKind::LatticePath) return tutte_lattice_path(m);
    return tutte_activities(m);
  }
  if (engine == "coboundary") return tutte_from_coboundary(coboundary(m), m.rank());
  fail(ErrorKind::UnsupportedEngine, "unknown engine '" + std::string(engine) + "'");
}

}  // namespace tutte
