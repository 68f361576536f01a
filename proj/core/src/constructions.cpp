#include <array>
#include <numeric>
#include <string>

#include "tutte/error.hpp"
#include "tutte/matroid.hpp"

namespace tutte {

namespace {

ElementSet shifted(ElementSet a, unsigned offset, unsigned width) {
  if (offset >= 64) return {};
  return ElementSet(a.bits() >> offset) & ElementSet::full(width);
}

ElementSet lifted(ElementSet a, unsigned offset) {
  return offset >= 64 ? ElementSet{} : ElementSet(a.bits() << offset);
}

class DualOracle final : public RankOracle {
 public:
  explicit DualOracle(Matroid base) : base_(std::move(base)) {}
  unsigned rank(ElementSet a) const override {
    return a.size() + base_.rank_unchecked(base_.ground() - a) - base_.rank();
  }
  std::string name() const override { return "dual"; }
  const Matroid& base() const noexcept { return base_; }

 private:
  Matroid base_;
};

/// Minor of `base`: new element i is base element map[i]; `contracted` is in
/// base coordinates.
class MinorOracle final : public RankOracle {
 public:
  MinorOracle(Matroid base, std::vector<unsigned> map, ElementSet contracted)
      : base_(std::move(base)),
        map_(std::move(map)),
        contracted_(contracted),
        contracted_rank_(base_.rank_unchecked(contracted)) {}

  unsigned rank(ElementSet a) const override {
    return base_.rank_unchecked(lift(a) | contracted_) - contracted_rank_;
  }
  std::string name() const override { return "minor"; }

  ElementSet lift(ElementSet a) const {
    ElementSet out;
    for (unsigned e : a) out = out.with(map_[e]);
    return out;
  }
  const Matroid& base() const noexcept { return base_; }
  const std::vector<unsigned>& map() const noexcept { return map_; }
  ElementSet contracted() const noexcept { return contracted_; }

 private:
  Matroid base_;
  std::vector<unsigned> map_;
  ElementSet contracted_;
  unsigned contracted_rank_;
};

class RelaxedOracle final : public RankOracle {
 public:
  RelaxedOracle(Matroid base, ElementSet x) : base_(std::move(base)), x_(x) {}
  unsigned rank(ElementSet a) const override { return a == x_ ? base_.rank() : base_.rank_unchecked(a); }
  std::string name() const override { return "relaxation"; }

 private:
  Matroid base_;
  ElementSet x_;
};

class FreeExtensionOracle final : public RankOracle {
 public:
  explicit FreeExtensionOracle(Matroid base) : base_(std::move(base)) {}
  unsigned rank(ElementSet a) const override {
    const unsigned added = base_.size();
    if (!a.contains(added)) return base_.rank_unchecked(a);
    return std::min(base_.rank_unchecked(a.without(added)) + 1, base_.rank());
  }
  std::string name() const override { return "free-extension"; }

 private:
  Matroid base_;
};

/// Every element stands for a base element; several may share one, which
/// makes them parallel copies.
class ParentMapOracle final : public RankOracle {
 public:
  ParentMapOracle(Matroid base, std::vector<unsigned> parent)
      : base_(std::move(base)), parent_(std::move(parent)) {}
  unsigned rank(ElementSet a) const override {
    ElementSet image;
    for (unsigned e : a) image = image.with(parent_[e]);
    return base_.rank_unchecked(image);
  }
  std::string name() const override { return "parallel-extension"; }

 private:
  Matroid base_;
  std::vector<unsigned> parent_;
};

class DirectSumOracle final : public RankOracle {
 public:
  explicit DirectSumOracle(std::vector<Matroid> parts) : parts_(std::move(parts)) {
    unsigned offset = 0;
    for (const Matroid& m : parts_) {
      offsets_.push_back(offset);
      offset += m.size();
    }
  }
  unsigned rank(ElementSet a) const override {
    unsigned r = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      r += parts_[i].rank_unchecked(shifted(a, offsets_[i], parts_[i].size()));
    }
    return r;
  }
  std::string name() const override { return "direct-sum"; }

 private:
  std::vector<Matroid> parts_;
  std::vector<unsigned> offsets_;
};

/// Parallel connection along p, with p deleted.
class TwoSumOracle final : public RankOracle {
 public:
  TwoSumOracle(PointedMatroid m1, PointedMatroid m2) : m1_(std::move(m1)), m2_(std::move(m2)) {}

  unsigned rank(ElementSet a) const override {
    const unsigned n1 = m1_.matroid.size() - 1;
    const ElementSet x1 = reinsert(shifted(a, 0, n1), m1_.point);
    const ElementSet x2 = reinsert(shifted(a, n1, m2_.matroid.size() - 1), m2_.point);
    const unsigned apart = m1_.matroid.rank_unchecked(x1) + m2_.matroid.rank_unchecked(x2);
    const unsigned joined = m1_.matroid.rank_unchecked(x1.with(m1_.point)) +
                            m2_.matroid.rank_unchecked(x2.with(m2_.point)) - 1;
    return std::min(apart, joined);
  }
  std::string name() const override { return "two-sum"; }

 private:
  // Reopens a gap at position `point` in a compacted set.
  static ElementSet reinsert(ElementSet compact, unsigned point) {
    const std::uint64_t low = compact.bits() & ((std::uint64_t{1} << point) - 1);
    const std::uint64_t high = (compact.bits() >> point) << (point + 1);
    return ElementSet(low | high);
  }

  PointedMatroid m1_;
  PointedMatroid m2_;
};

/// Generalized parallel connection of `a` and `b` across a shared triangle
/// that is a modular flat of `a`, restricted to the non-triangle elements.
class TriangleSumOracle final : public RankOracle {
 public:
  TriangleSumOracle(Matroid a, std::array<unsigned, 3> ta, Matroid b, std::array<unsigned, 3> tb,
                    bool a_first)
      : a_(std::move(a)), b_(std::move(b)), ta_(ta), tb_(tb), a_first_(a_first) {
    const ElementSet tri_a{ta[0], ta[1], ta[2]};
    const ElementSet tri_b{tb[0], tb[1], tb[2]};
    rest_a_ = (a_.ground() - tri_a).to_vector();
    rest_b_ = (b_.ground() - tri_b).to_vector();
  }

  unsigned rank(ElementSet x) const override {
    const std::vector<unsigned>& first = a_first_ ? rest_a_ : rest_b_;
    ElementSet fa;
    ElementSet fb;
    unsigned k = 0;
    for (unsigned e = 0; e < first.size(); ++e, ++k) {
      if (x.contains(k)) (a_first_ ? fa : fb) = (a_first_ ? fa : fb).with(first[e]);
    }
    const std::vector<unsigned>& second = a_first_ ? rest_b_ : rest_a_;
    for (unsigned e = 0; e < second.size(); ++e, ++k) {
      if (x.contains(k)) (a_first_ ? fb : fa) = (a_first_ ? fb : fa).with(second[e]);
    }

    // Smallest set meeting each side in a flat; `t` tracks the shared
    // triangle positions already forced into it.
    unsigned t = 0;
    for (;;) {
      fa = a_.closure(fa | tri_part(ta_, t));
      const unsigned t1 = t | tri_bits(ta_, fa);
      fb = b_.closure(fb | tri_part(tb_, t1));
      const unsigned t2 = t1 | tri_bits(tb_, fb);
      t = t2;
      if (t2 == t1) break;
    }
    fa |= tri_part(ta_, t);
    const unsigned shared = std::min(static_cast<unsigned>(std::popcount(t)), 2U);
    return a_.rank_unchecked(fa) + b_.rank_unchecked(fb) - shared;
  }
  std::string name() const override { return "delta-sum"; }

 private:
  static ElementSet tri_part(const std::array<unsigned, 3>& tri, unsigned t) {
    ElementSet out;
    for (unsigned i = 0; i < 3; ++i) {
      if ((t >> i) & 1U) out = out.with(tri[i]);
    }
    return out;
  }
  static unsigned tri_bits(const std::array<unsigned, 3>& tri, ElementSet f) {
    unsigned t = 0;
    for (unsigned i = 0; i < 3; ++i) {
      if (f.contains(tri[i])) t |= 1U << i;
    }
    return t;
  }

  Matroid a_;
  Matroid b_;
  std::array<unsigned, 3> ta_;
  std::array<unsigned, 3> tb_;
  bool a_first_;
  std::vector<unsigned> rest_a_;
  std::vector<unsigned> rest_b_;
};

class StretchOracle final : public RankOracle {
 public:
  StretchOracle(Matroid base, unsigned k) : base_(std::move(base)), k_(k) {}
  unsigned rank(ElementSet a) const override {
    unsigned total = 0;
    ElementSet full_blocks;
    for (unsigned e = 0; e < base_.size(); ++e) {
      const unsigned c = shifted(a, e * k_, k_).size();
      total += c;
      if (c == k_) full_blocks = full_blocks.with(e);
    }
    return total - full_blocks.size() + base_.rank_unchecked(full_blocks);
  }
  std::string name() const override { return "stretch"; }

 private:
  Matroid base_;
  unsigned k_;
};

class TensorOracle final : public RankOracle {
 public:
  TensorOracle(Matroid base, PointedMatroid n) : base_(std::move(base)), n_(std::move(n)) {
    for (unsigned e = 0; e < n_.matroid.size(); ++e) {
      if (e != n_.point) copy_.push_back(e);
    }
  }
  unsigned rank(ElementSet a) const override {
    const unsigned width = static_cast<unsigned>(copy_.size());
    unsigned total = 0;
    ElementSet spanning_point;
    for (unsigned e = 0; e < base_.size(); ++e) {
      const ElementSet local = shifted(a, e * width, width);
      ElementSet in_n;
      for (unsigned i : local) in_n = in_n.with(copy_[i]);
      const unsigned r = n_.matroid.rank_unchecked(in_n);
      total += r;
      if (n_.matroid.rank_unchecked(in_n.with(n_.point)) == r) spanning_point = spanning_point.with(e);
    }
    return total - spanning_point.size() + base_.rank_unchecked(spanning_point);
  }
  std::string name() const override { return "tensor"; }

 private:
  Matroid base_;
  PointedMatroid n_;
  std::vector<unsigned> copy_;
};

void check_subset(const Matroid& m, ElementSet a, const char* what) {
  if (!a.subset_of(m.ground())) {
    fail(ErrorKind::ElementOutOfRange, std::string(what) + " mentions an element outside the ground set");
  }
}

void check_size(unsigned long n) {
  if (n > ElementSet::kCapacity) fail(ErrorKind::GroundSetTooLarge, "construction exceeds 64 elements");
}

Graph graphic_minor(const Graph& g, ElementSet deleted, ElementSet contracted) {
  // Merge the endpoints of contracted edges, then compact vertex labels.
  std::vector<unsigned> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](unsigned v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (unsigned e : contracted) {
    const unsigned a = find(g.edge(e).u);
    const unsigned b = find(g.edge(e).v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<unsigned> label(g.vertex_count(), 0);
  unsigned count = 0;
  for (unsigned v = 0; v < g.vertex_count(); ++v) {
    if (find(v) == v) label[v] = count++;
  }
  Graph out(count);
  for (unsigned e = 0; e < g.edge_count(); ++e) {
    if (deleted.contains(e) || contracted.contains(e)) continue;
    out.add_edge(label[find(g.edge(e).u)], label[find(g.edge(e).v)]);
  }
  return out;
}

// Vertices of a triangle given by three edges, ordered as
// (p meets s, s meets q, q meets p).
std::array<unsigned, 3> triangle_vertices(const Graph& g, const Triangle& t) {
  const Edge ep = g.edge(t.p);
  const Edge es = g.edge(t.s);
  const Edge eq = g.edge(t.q);
  auto common = [](const Edge& a, const Edge& b) -> unsigned {
    if (a.is_loop() || b.is_loop()) fail(ErrorKind::PreconditionViolated, "triangle contains a loop");
    if (a.u == b.u || a.u == b.v) return a.u;
    if (a.v == b.u || a.v == b.v) return a.v;
    fail(ErrorKind::PreconditionViolated, "triangle edges do not meet");
  };
  std::array<unsigned, 3> v{common(ep, es), common(es, eq), common(eq, ep)};
  if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) {
    fail(ErrorKind::PreconditionViolated, "edges do not form a triangle");
  }
  return v;
}

void check_triangle(const Matroid& m, const Triangle& t, const char* which) {
  const ElementSet tri{t.p, t.s, t.q};
  check_subset(m, tri, "triangle");
  if (tri.size() != 3 || !is_circuit(m, tri)) {
    fail(ErrorKind::PreconditionViolated, std::string("triangle is not a 3-circuit of ") + which);
  }
  // Circuits U + s and U' + p with U, U' avoiding the triangle exist exactly
  // when s and p lie in the closure of the remaining elements.
  const ElementSet rest = m.ground() - tri;
  const unsigned r = m.rank(rest);
  if (m.rank(rest.with(t.s)) != r || m.rank(rest.with(t.p)) != r) {
    fail(ErrorKind::PreconditionViolated,
         std::string("required circuits through s and p are missing in ") + which);
  }
}

}  // namespace

PointedMatroid::PointedMatroid(Matroid m, unsigned point) : matroid(std::move(m)), point(point) {
  if (point >= matroid.size()) fail(ErrorKind::ElementOutOfRange, "base point outside the ground set");
  if (matroid.is_loop(point) || matroid.is_coloop(point)) {
    fail(ErrorKind::PreconditionViolated, "base point must be neither a loop nor a coloop");
  }
}

Matroid dual(const Matroid& m) {
  if (const auto* d = m.as<DualOracle>()) return d->base();
  if (const auto* u = m.as<UniformOracle>()) return uniform_matroid(m.size() - u->r(), m.size());
  return Matroid(m.size(), std::make_shared<DualOracle>(m));
}

Matroid minor(const Matroid& m, ElementSet deleted, ElementSet contracted) {
  check_subset(m, deleted | contracted, "minor");
  if (!(deleted & contracted).empty()) {
    fail(ErrorKind::InvalidParameters, "an element cannot be both deleted and contracted");
  }
  const ElementSet removed = deleted | contracted;
  const unsigned n = m.size() - removed.size();

  if (const auto* g = m.as<GraphicOracle>()) {
    return graphic_matroid(graphic_minor(g->graph(), deleted, contracted));
  }
  if (const auto* u = m.as<UniformOracle>()) {
    const unsigned after_delete = std::min(u->r(), m.size() - deleted.size());
    return uniform_matroid(after_delete - std::min(after_delete, contracted.size()), n);
  }

  std::vector<unsigned> map;
  map.reserve(n);
  for (unsigned e : m.ground() - removed) map.push_back(e);
  if (const auto* inner = m.as<MinorOracle>()) {
    for (unsigned& e : map) e = inner->map()[e];
    return Matroid(n, std::make_shared<MinorOracle>(inner->base(), std::move(map),
                                                    inner->contracted() | inner->lift(contracted)));
  }
  return Matroid(n, std::make_shared<MinorOracle>(m, std::move(map), contracted));
}

Matroid delete_element(const Matroid& m, unsigned e) {
  if (e >= m.size()) fail(ErrorKind::ElementOutOfRange, "element " + std::to_string(e));
  return minor(m, ElementSet::single(e), {});
}

Matroid contract_element(const Matroid& m, unsigned e) {
  if (e >= m.size()) fail(ErrorKind::ElementOutOfRange, "element " + std::to_string(e));
  return minor(m, {}, ElementSet::single(e));
}

Matroid restriction(const Matroid& m, ElementSet kept) {
  check_subset(m, kept, "restriction");
  return minor(m, m.ground() - kept, {});
}

Matroid relax(const Matroid& m, ElementSet x) {
  check_subset(m, x, "relaxation");
  if (const auto* sp = m.as<SparsePavingOracle>()) {
    if (!sp->is_circuit_hyperplane(x)) {
      fail(ErrorKind::NotCircuitHyperplane, "set is not a circuit-hyperplane");
    }
    std::vector<ElementSet> rest;
    for (ElementSet c : sp->circuit_hyperplanes()) {
      if (c != x) rest.push_back(c);
    }
    return sparse_paving_matroid(sp->r(), m.size(), std::move(rest));
  }
  if (!is_circuit(m, x) || m.rank(x) + 1 != m.rank() || !is_flat(m, x)) {
    fail(ErrorKind::NotCircuitHyperplane, "set is not a circuit-hyperplane");
  }
  return Matroid(m.size(), std::make_shared<RelaxedOracle>(m, x));
}

Matroid free_extension(const Matroid& m) {
  check_size(m.size() + 1UL);
  if (const auto* u = m.as<UniformOracle>()) return uniform_matroid(u->r(), m.size() + 1);
  return Matroid(m.size() + 1, std::make_shared<FreeExtensionOracle>(m));
}

Matroid add_parallel(const Matroid& m, unsigned e) {
  if (e >= m.size()) fail(ErrorKind::ElementOutOfRange, "element " + std::to_string(e));
  check_size(m.size() + 1UL);
  if (const auto* g = m.as<GraphicOracle>()) {
    Graph h = g->graph();
    h.add_edge(h.edge(e).u, h.edge(e).v);
    return graphic_matroid(std::move(h));
  }
  std::vector<unsigned> parent(m.size() + 1);
  std::iota(parent.begin(), parent.end() - 1, 0U);
  parent.back() = e;
  return Matroid(m.size() + 1, std::make_shared<ParentMapOracle>(m, std::move(parent)));
}

Matroid direct_sum(const std::vector<Matroid>& parts) {
  unsigned long n = 0;
  for (const Matroid& m : parts) n += m.size();
  check_size(n);
  return Matroid(static_cast<unsigned>(n), std::make_shared<DirectSumOracle>(parts));
}

Matroid two_sum(const PointedMatroid& m1, const PointedMatroid& m2) {
  const unsigned long n = m1.matroid.size() + m2.matroid.size() - 2UL;
  check_size(n);
  const auto* g1 = m1.matroid.as<GraphicOracle>();
  const auto* g2 = m2.matroid.as<GraphicOracle>();
  if (g1 != nullptr && g2 != nullptr) {
    // Glue the two base-point edges end to end and drop them.
    const Graph& a = g1->graph();
    const Graph& b = g2->graph();
    const Edge pa = a.edge(m1.point);
    const Edge pb = b.edge(m2.point);
    std::vector<unsigned> label(b.vertex_count());
    Graph out(a.vertex_count());
    for (unsigned v = 0; v < b.vertex_count(); ++v) {
      if (v == pb.u) {
        label[v] = pa.u;
      } else if (v == pb.v) {
        label[v] = pa.v;
      } else {
        label[v] = out.add_vertex();
      }
    }
    for (unsigned e = 0; e < a.edge_count(); ++e) {
      if (e != m1.point) out.add_edge(a.edge(e).u, a.edge(e).v);
    }
    for (unsigned e = 0; e < b.edge_count(); ++e) {
      if (e != m2.point) out.add_edge(label[b.edge(e).u], label[b.edge(e).v]);
    }
    return graphic_matroid(std::move(out));
  }
  return Matroid(static_cast<unsigned>(n), std::make_shared<TwoSumOracle>(m1, m2));
}

Matroid delta_sum(const Matroid& m1, Triangle t1, const Matroid& m2, Triangle t2) {
  check_triangle(m1, t1, "the first matroid");
  check_triangle(m2, t2, "the second matroid");
  const unsigned long n = m1.size() + m2.size() - 6UL;
  check_size(n);

  const auto* g1 = m1.as<GraphicOracle>();
  const auto* g2 = m2.as<GraphicOracle>();
  if (g1 != nullptr && g2 != nullptr) {
    const Graph& a = g1->graph();
    const Graph& b = g2->graph();
    const auto va = triangle_vertices(a, t1);
    const auto vb = triangle_vertices(b, t2);
    const ElementSet tri_a{t1.p, t1.s, t1.q};
    const ElementSet tri_b{t2.p, t2.s, t2.q};
    Graph out(a.vertex_count());
    std::vector<unsigned> label(b.vertex_count());
    for (unsigned v = 0; v < b.vertex_count(); ++v) {
      if (v == vb[0]) {
        label[v] = va[0];
      } else if (v == vb[1]) {
        label[v] = va[1];
      } else if (v == vb[2]) {
        label[v] = va[2];
      } else {
        label[v] = out.add_vertex();
      }
    }
    for (unsigned e = 0; e < a.edge_count(); ++e) {
      if (!tri_a.contains(e)) out.add_edge(a.edge(e).u, a.edge(e).v);
    }
    for (unsigned e = 0; e < b.edge_count(); ++e) {
      if (!tri_b.contains(e)) out.add_edge(label[b.edge(e).u], label[b.edge(e).v]);
    }
    return graphic_matroid(std::move(out));
  }

  const std::array<unsigned, 3> a1{t1.p, t1.s, t1.q};
  const std::array<unsigned, 3> a2{t2.p, t2.s, t2.q};
  if (is_modular_flat(m1, ElementSet{t1.p, t1.s, t1.q})) {
    return Matroid(static_cast<unsigned>(n), std::make_shared<TriangleSumOracle>(m1, a1, m2, a2, true));
  }
  if (is_modular_flat(m2, ElementSet{t2.p, t2.s, t2.q})) {
    return Matroid(static_cast<unsigned>(n), std::make_shared<TriangleSumOracle>(m2, a2, m1, a1, false));
  }
  fail(ErrorKind::PreconditionViolated, "the triangle is a modular flat in neither matroid");
}

Matroid thicken(const Matroid& m, unsigned k) {
  if (k == 0) fail(ErrorKind::InvalidParameters, "thickening needs k >= 1");
  check_size(static_cast<unsigned long>(m.size()) * k);
  if (const auto* g = m.as<GraphicOracle>()) {
    Graph out(g->graph().vertex_count());
    for (const Edge& e : g->graph().edges()) {
      for (unsigned j = 0; j < k; ++j) out.add_edge(e.u, e.v);
    }
    return graphic_matroid(std::move(out));
  }
  std::vector<unsigned> parent(m.size() * k);
  for (unsigned i = 0; i < parent.size(); ++i) parent[i] = i / k;
  return Matroid(m.size() * k, std::make_shared<ParentMapOracle>(m, std::move(parent)));
}

Matroid stretch(const Matroid& m, unsigned k) {
  if (k == 0) fail(ErrorKind::InvalidParameters, "stretch needs k >= 1");
  check_size(static_cast<unsigned long>(m.size()) * k);
  if (const auto* g = m.as<GraphicOracle>()) {
    Graph out(g->graph().vertex_count());
    for (const Edge& e : g->graph().edges()) {
      unsigned from = e.u;
      for (unsigned j = 0; j + 1 < k; ++j) {
        const unsigned mid = out.add_vertex();
        out.add_edge(from, mid);
        from = mid;
      }
      out.add_edge(from, e.v);
    }
    return graphic_matroid(std::move(out));
  }
  return Matroid(m.size() * k, std::make_shared<StretchOracle>(m, k));
}

Matroid tensor(const Matroid& m, const PointedMatroid& n) {
  const unsigned width = n.matroid.size() - 1;
  check_size(static_cast<unsigned long>(m.size()) * width);
  return Matroid(m.size() * width, std::make_shared<TensorOracle>(m, n));
}

}  // namespace tutte
