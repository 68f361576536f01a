#include <algorithm>
#include <string>
#include <thread>

#include "tutte/engines.hpp"
#include "tutte/error.hpp"

namespace tutte {

namespace {

using CountTable = std::vector<std::uint64_t>;  // (corank, nullity) -> subsets

void count_range(const Matroid& m, std::uint64_t lo, std::uint64_t hi, CountTable& table) {
  const unsigned width = m.size() + 1;
  const unsigned r = m.rank();
  for (std::uint64_t s = lo; s < hi; ++s) {
    const ElementSet a(s);
    const unsigned ra = m.rank_unchecked(a);
    ++table[std::size_t{r - ra} * width + (a.size() - ra)];
  }
}

BiPoly expand(const CountTable& table, unsigned width) {
  const BiPoly xm1 = BiPoly::x() - 1;
  const BiPoly ym1 = BiPoly::y() - 1;
  std::vector<BiPoly> ypow{BiPoly(1)};
  for (unsigned j = 1; j < width; ++j) ypow.push_back(ypow.back() * ym1);

  BiPoly result;
  BiPoly xpow(1);
  const unsigned rows = static_cast<unsigned>(table.size() / width);
  for (unsigned z = 0; z < rows; ++z) {
    BiPoly inner;
    for (unsigned nu = 0; nu < width; ++nu) {
      const std::uint64_t c = table[std::size_t{z} * width + nu];
      if (c != 0) inner += scale(ypow[nu], Integer(std::to_string(c)));
    }
    if (!inner.is_zero()) result += xpow * inner;
    xpow *= xm1;
  }
  return result;
}

}  // namespace

BiPoly tutte_subset(const Matroid& m, unsigned threads) {
  if (m.size() > kEnumerationLimit) {
    fail(ErrorKind::GroundSetTooLarge, "subset expansion limited to " +
                                           std::to_string(kEnumerationLimit) + " elements");
  }
  const unsigned width = m.size() + 1;
  const std::size_t cells = std::size_t{m.rank() + 1} * width;
  const std::uint64_t total = std::uint64_t{1} << m.size();

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  // Small inputs are not worth a thread.
  if (total < (std::uint64_t{1} << 12)) threads = 1;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  std::vector<CountTable> partial(threads, CountTable(cells, 0));
  if (threads == 1) {
    count_range(m, 0, total, partial[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = std::min(total, t * chunk);
      const std::uint64_t hi = std::min(total, lo + chunk);
      pool.emplace_back(count_range, std::cref(m), lo, hi, std::ref(partial[t]));
    }
    for (auto& th : pool) th.join();
  }
  CountTable sum(cells, 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < cells; ++i) sum[i] += p[i];
  }
  return expand(sum, width);
}

UniPoly char_poly(const Matroid& m) {
  if (m.size() > kEnumerationLimit) {
    fail(ErrorKind::GroundSetTooLarge, "characteristic polynomial limited to " +
                                           std::to_string(kEnumerationLimit) + " elements");
  }
  std::vector<long> by_corank(m.rank() + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t s = 0; s < total; ++s) {
    const ElementSet a(s);
    const unsigned z = m.rank() - m.rank_unchecked(a);
    by_corank[z] += (a.size() % 2 == 0) ? 1 : -1;
  }
  UniPoly out;
  for (unsigned z = 0; z <= m.rank(); ++z) out.add_term(Rational(static_cast<long>(by_corank[z])), z);
  return out;
}

}  // namespace tutte
