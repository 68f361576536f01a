#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "tutte/element_set.hpp"
#include "tutte/gf_matrix.hpp"
#include "tutte/graph.hpp"

namespace tutte {

enum class MatroidKind {
  Uniform,
  Graphic,
  Linear,
  SparsePaving,
  PavingPartition,
  BasisList,
  LatticePath,
  View,
};

/// A rank function on {0, ..., n-1}. Implementations are immutable and may be
/// queried concurrently.
class RankOracle {
 public:
  virtual ~RankOracle() = default;
  virtual unsigned rank(ElementSet a) const = 0;
  virtual MatroidKind kind() const { return MatroidKind::View; }
  virtual std::string name() const = 0;
};

class Matroid {
 public:
  Matroid(unsigned n, std::shared_ptr<const RankOracle> oracle);

  unsigned size() const noexcept { return n_; }
  ElementSet ground() const noexcept { return ElementSet::full(n_); }
  unsigned rank() const noexcept { return full_rank_; }
  /// Throws ElementOutOfRange if a contains an element outside the ground set.
  unsigned rank(ElementSet a) const;
  unsigned rank_unchecked(ElementSet a) const { return oracle_->rank(a); }
  unsigned corank() const noexcept { return n_ - full_rank_; }

  MatroidKind kind() const { return oracle_->kind(); }
  std::string variant_name() const { return oracle_->name(); }
  const RankOracle& oracle() const noexcept { return *oracle_; }
  const std::shared_ptr<const RankOracle>& oracle_ptr() const noexcept { return oracle_; }

  template <typename T>
  const T* as() const {
    return dynamic_cast<const T*>(oracle_.get());
  }

  bool is_loop(unsigned e) const;
  bool is_coloop(unsigned e) const;
  ElementSet closure(ElementSet a) const;

 private:
  unsigned n_;
  std::shared_ptr<const RankOracle> oracle_;
  unsigned full_rank_;
};

// ---------------------------------------------------------------------------
// Base variants

class UniformOracle final : public RankOracle {
 public:
  explicit UniformOracle(unsigned r) : r_(r) {}
  unsigned rank(ElementSet a) const override { return std::min(a.size(), r_); }
  MatroidKind kind() const override { return MatroidKind::Uniform; }
  std::string name() const override { return "uniform"; }
  unsigned r() const noexcept { return r_; }

 private:
  unsigned r_;
};

class GraphicOracle final : public RankOracle {
 public:
  explicit GraphicOracle(Graph g) : graph_(std::move(g)) {}
  unsigned rank(ElementSet a) const override { return graph_.rank(a); }
  MatroidKind kind() const override { return MatroidKind::Graphic; }
  std::string name() const override { return "graphic"; }
  const Graph& graph() const noexcept { return graph_; }

 private:
  Graph graph_;
};

class LinearOracle final : public RankOracle {
 public:
  explicit LinearOracle(GFMatrix m) : matrix_(std::move(m)) {}
  unsigned rank(ElementSet a) const override { return matrix_.column_rank(a); }
  MatroidKind kind() const override { return MatroidKind::Linear; }
  std::string name() const override { return "linear"; }
  const GFMatrix& matrix() const noexcept { return matrix_; }

 private:
  GFMatrix matrix_;
};

class SparsePavingOracle final : public RankOracle {
 public:
  SparsePavingOracle(unsigned r, std::vector<ElementSet> circuit_hyperplanes);
  unsigned rank(ElementSet a) const override;
  MatroidKind kind() const override { return MatroidKind::SparsePaving; }
  std::string name() const override { return "sparse-paving"; }
  unsigned r() const noexcept { return r_; }
  const std::vector<ElementSet>& circuit_hyperplanes() const noexcept { return list_; }
  bool is_circuit_hyperplane(ElementSet a) const { return lookup_.count(a) != 0; }

 private:
  unsigned r_;
  std::vector<ElementSet> list_;
  std::unordered_set<ElementSet, ElementSetHash> lookup_;
};

/// Paving matroid given by the blocks of an (r-1)-partition, which are its
/// hyperplanes.
class PavingOracle final : public RankOracle {
 public:
  PavingOracle(unsigned r, std::vector<ElementSet> blocks) : r_(r), blocks_(std::move(blocks)) {}
  unsigned rank(ElementSet a) const override;
  MatroidKind kind() const override { return MatroidKind::PavingPartition; }
  std::string name() const override { return "paving"; }
  unsigned r() const noexcept { return r_; }
  const std::vector<ElementSet>& blocks() const noexcept { return blocks_; }

 private:
  unsigned r_;
  std::vector<ElementSet> blocks_;
};

class BasisListOracle : public RankOracle {
 public:
  BasisListOracle(unsigned r, std::vector<ElementSet> bases) : r_(r), bases_(std::move(bases)) {}
  unsigned rank(ElementSet a) const override;
  MatroidKind kind() const override { return MatroidKind::BasisList; }
  std::string name() const override { return "basis-list"; }
  unsigned r() const noexcept { return r_; }
  const std::vector<ElementSet>& bases() const noexcept { return bases_; }

 private:
  unsigned r_;
  std::vector<ElementSet> bases_;
};

/// Lattice-path matroid M[P, Q]: bases are the north-step supports of the
/// lattice paths lying between the lower path P and the upper path Q.
class LatticePathOracle final : public BasisListOracle {
 public:
  LatticePathOracle(std::string lower, std::string upper, std::vector<ElementSet> bases)
      : BasisListOracle(count_north(upper), std::move(bases)),
        lower_(std::move(lower)),
        upper_(std::move(upper)) {}
  MatroidKind kind() const override { return MatroidKind::LatticePath; }
  std::string name() const override { return "lattice-path"; }
  const std::string& lower() const noexcept { return lower_; }
  const std::string& upper() const noexcept { return upper_; }

  static unsigned count_north(const std::string& path);

 private:
  std::string lower_;
  std::string upper_;
};

// ---------------------------------------------------------------------------
// Constructors for the base variants

Matroid uniform_matroid(unsigned r, unsigned n);
Matroid graphic_matroid(Graph g);
Matroid linear_matroid(GFMatrix m);
/// Throws InvalidMatroid if two circuit-hyperplanes differ in exactly two
/// elements or a set has the wrong size.
Matroid sparse_paving_matroid(unsigned r, unsigned n, std::vector<ElementSet> circuit_hyperplanes);
/// Throws InvalidMatroid unless every (r-1)-subset lies in exactly one block.
Matroid paving_matroid(unsigned r, unsigned n, std::vector<ElementSet> blocks);
/// Validates the basis-exchange axiom when n <= 16.
Matroid basis_matroid(unsigned r, unsigned n, std::vector<ElementSet> bases);
/// Paths are words over {E, N}; P must stay weakly below Q.
Matroid lattice_path_matroid(const std::string& lower, const std::string& upper);
/// M_n: paths from (0,0) to (n,n) between y = 0 and y = x.
Matroid catalan_matroid(unsigned n);

// ---------------------------------------------------------------------------
// Constructions

struct PointedMatroid {
  PointedMatroid(Matroid m, unsigned point);

  Matroid matroid;
  unsigned point;
};

Matroid dual(const Matroid& m);
Matroid delete_element(const Matroid& m, unsigned e);
Matroid contract_element(const Matroid& m, unsigned e);
/// The minor M \ deleted / contracted; surviving elements keep their relative
/// order and are renumbered from 0.
Matroid minor(const Matroid& m, ElementSet deleted, ElementSet contracted);
Matroid restriction(const Matroid& m, ElementSet kept);

/// Throws NotCircuitHyperplane unless x is both a circuit and a hyperplane.
Matroid relax(const Matroid& m, ElementSet x);
/// Adds element n placed freely.
Matroid free_extension(const Matroid& m);
/// Adds element n parallel to e.
Matroid add_parallel(const Matroid& m, unsigned e);
Matroid direct_sum(const std::vector<Matroid>& parts);
/// Ground set is E1 - p1 followed by E2 - p2, each in original order.
Matroid two_sum(const PointedMatroid& m1, const PointedMatroid& m2);

/// Triangle labels for a Delta-sum: t1[i] in M1 is identified with t2[i] in
/// M2. Index 0 plays the role of p, 1 of s and 2 of q.
struct Triangle {
  unsigned p = 0;
  unsigned s = 0;
  unsigned q = 0;
};

/// Ground set is E1 - T1 followed by E2 - T2. Graphic inputs produce a
/// graphic result; otherwise T must be a modular flat of M1 or M2.
Matroid delta_sum(const Matroid& m1, Triangle t1, const Matroid& m2, Triangle t2);

/// Element e of M becomes elements e*k, ..., e*k + k - 1.
Matroid thicken(const Matroid& m, unsigned k);
Matroid stretch(const Matroid& m, unsigned k);
/// Element e of M is replaced by a copy of N - d, occupying indices
/// e*(|N|-1) .. e*(|N|-1) + |N|-2 in the order of N's elements.
Matroid tensor(const Matroid& m, const PointedMatroid& n);

// ---------------------------------------------------------------------------
// Enumeration

/// Guard for exponential enumeration.
inline constexpr unsigned kEnumerationLimit = 24;

std::vector<ElementSet> bases(const Matroid& m);
std::vector<ElementSet> circuits(const Matroid& m);
std::vector<ElementSet> flats(const Matroid& m);
std::vector<ElementSet> hyperplanes(const Matroid& m);
std::vector<ElementSet> spanning_sets(const Matroid& m);

struct Enumeration {
  std::vector<ElementSet> bases;
  std::vector<ElementSet> circuits;
  std::vector<ElementSet> flats;
  std::vector<ElementSet> hyperplanes;
  std::vector<ElementSet> spanning_sets;
};

Enumeration enumerate(const Matroid& m);

std::vector<ElementSet> parallel_classes(const Matroid& m);
std::vector<ElementSet> series_classes(const Matroid& m);

bool is_circuit(const Matroid& m, ElementSet a);
bool is_flat(const Matroid& m, ElementSet a);
bool is_modular_flat(const Matroid& m, ElementSet a);

/// True when the two matroids have the same size and the same rank on every
/// subset (exhaustive; n <= 24).
bool rank_equal(const Matroid& a, const Matroid& b);

}  // namespace tutte
