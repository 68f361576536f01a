#include <algorithm>
#include <string>
#include <unordered_set>

#include "tutte/error.hpp"
#include "tutte/matroid.hpp"

namespace tutte {

namespace {

void guard(const Matroid& m) {
  if (m.size() > kEnumerationLimit) {
    fail(ErrorKind::GroundSetTooLarge, "enumeration limited to " + std::to_string(kEnumerationLimit) +
                                           " elements, got " + std::to_string(m.size()));
  }
}

// Calls f on every k-subset of {0..n-1} in increasing mask order.
template <typename F>
void for_each_subset_of_size(unsigned n, unsigned k, F&& f) {
  if (k > n) return;
  if (k == 0) {
    f(ElementSet{});
    return;
  }
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (s < limit) {
    f(ElementSet(s));
    // Gosper's hack: next mask with the same popcount.
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

}  // namespace

bool is_circuit(const Matroid& m, ElementSet a) {
  if (a.empty()) return false;
  const unsigned k = a.size();
  if (m.rank(a) != k - 1) return false;
  for (unsigned e : a) {
    if (m.rank(a.without(e)) != k - 1) return false;
  }
  return true;
}

bool is_flat(const Matroid& m, ElementSet a) { return m.closure(a) == a; }

bool is_modular_flat(const Matroid& m, ElementSet a) {
  if (!is_flat(m, a)) return false;
  const unsigned ra = m.rank(a);
  for (ElementSet f : flats(m)) {
    if (m.rank(f) + ra != m.rank(f | a) + m.rank(f & a)) return false;
  }
  return true;
}

std::vector<ElementSet> bases(const Matroid& m) {
  guard(m);
  std::vector<ElementSet> out;
  for_each_subset_of_size(m.size(), m.rank(), [&](ElementSet s) {
    if (m.rank_unchecked(s) == m.rank()) out.push_back(s);
  });
  return out;
}

std::vector<ElementSet> circuits(const Matroid& m) {
  guard(m);
  std::vector<ElementSet> out;
  for (unsigned k = 1; k <= std::min(m.rank() + 1, m.size()); ++k) {
    for_each_subset_of_size(m.size(), k, [&](ElementSet s) {
      if (is_circuit(m, s)) out.push_back(s);
    });
  }
  return out;
}

std::vector<ElementSet> flats(const Matroid& m) {
  guard(m);
  // Every flat other than cl(empty) covers some smaller flat, so growing by
  // one element at a time and closing reaches all of them.
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> frontier{m.closure({})};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (ElementSet f : frontier) {
      for (unsigned e : m.ground() - f) {
        const ElementSet g = m.closure(f.with(e));
        if (seen.insert(g).second) next.push_back(g);
      }
    }
    frontier = std::move(next);
  }
  std::vector<ElementSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [&](ElementSet a, ElementSet b) {
    const unsigned ra = m.rank(a);
    const unsigned rb = m.rank(b);
    return ra != rb ? ra < rb : a < b;
  });
  return out;
}

std::vector<ElementSet> hyperplanes(const Matroid& m) {
  std::vector<ElementSet> out;
  if (m.rank() == 0) return out;
  for (ElementSet f : flats(m)) {
    if (m.rank(f) + 1 == m.rank()) out.push_back(f);
  }
  return out;
}

std::vector<ElementSet> spanning_sets(const Matroid& m) {
  guard(m);
  std::vector<ElementSet> out;
  const std::uint64_t limit = std::uint64_t{1} << m.size();
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (m.rank_unchecked(ElementSet(s)) == m.rank()) out.push_back(ElementSet(s));
  }
  return out;
}

Enumeration enumerate(const Matroid& m) {
  return {bases(m), circuits(m), flats(m), hyperplanes(m), spanning_sets(m)};
}

std::vector<ElementSet> parallel_classes(const Matroid& m) {
  std::vector<ElementSet> out;
  ElementSet assigned;
  for (unsigned e = 0; e < m.size(); ++e) {
    if (assigned.contains(e) || m.is_loop(e)) continue;
    ElementSet cls = ElementSet::single(e);
    for (unsigned f = e + 1; f < m.size(); ++f) {
      if (!assigned.contains(f) && m.rank_unchecked(ElementSet{e, f}) == 1) cls = cls.with(f);
    }
    assigned |= cls;
    out.push_back(cls);
  }
  return out;
}

std::vector<ElementSet> series_classes(const Matroid& m) { return parallel_classes(dual(m)); }

bool rank_equal(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  guard(a);
  const std::uint64_t limit = std::uint64_t{1} << a.size();
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (a.rank_unchecked(ElementSet(s)) != b.rank_unchecked(ElementSet(s))) return false;
  }
  return true;
}

}  // namespace tutte
