#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tutte/bipoly.hpp"
#include "tutte/engines.hpp"
#include "tutte/matroid.hpp"

namespace tutte {

struct CatalogFlags {
  bool self_dual = false;
  bool sparse_paving = false;
  bool paving = false;
  std::string representable;  // free text, e.g. "binary", "char 3 only", "none"
};

/// An extra way to reach an entry's polynomial: a closed formula, a different
/// construction, or a hand-made decomposition.
struct CatalogPath {
  std::string label;
  std::function<BiPoly()> compute;
};

struct CatalogEntry {
  std::string name;
  std::string recipe;
  std::string printed;  // ground truth, as printed in the source
  std::string provenance;
  CatalogFlags flags;
  std::vector<CatalogPath> alternatives;

  BiPoly ground_truth() const;
  Matroid build() const;
};

const std::vector<CatalogEntry>& catalog();

/// Throws UnknownEntry.
const CatalogEntry& lookup(std::string_view name);

inline const std::vector<std::string> kCatalogEngines{"subset", "dc", "activities", "coboundary"};

struct VerifyOptions {
  std::vector<std::string> engines = kCatalogEngines;
  bool alternatives = true;
  unsigned threads = 0;
  std::uint64_t budget_nodes = kDefaultNodeBudget;
};

struct PathResult {
  std::string path;
  std::optional<BiPoly> poly;
  std::string error;

  bool ok() const { return poly.has_value(); }
};

struct VerifyReport {
  std::string name;
  BiPoly ground_truth;
  std::vector<PathResult> paths;
  std::optional<std::size_t> basis_count;
  std::string build_error;

  bool matches(const PathResult& r) const { return r.ok() && *r.poly == ground_truth; }
  std::size_t agreeing() const;
  bool basis_count_ok() const;
  bool passed() const;
  /// Every computed path agrees with every other but not with the printed
  /// polynomial.
  bool erratum_candidate() const;
};

VerifyReport verify(const CatalogEntry& entry, const VerifyOptions& options = {});

std::string report_text(const VerifyReport& report);
std::string report_json(const VerifyReport& report);
std::string entry_json(const CatalogEntry& entry);
/// The whole catalog as one JSON array.
std::string catalog_json();

}  // namespace tutte
