#include "tutte/gf_matrix.hpp"

#include <string>
#include <utility>

#include "tutte/error.hpp"

namespace tutte {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1U) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

GFMatrix::GFMatrix(unsigned p, unsigned rows, unsigned cols)
    : p_(p), rows_(rows), cols_(cols), data_(std::size_t{rows} * cols) {
  if (!is_prime(p)) fail(ErrorKind::InvalidParameters, std::to_string(p) + " is not prime");
  if (cols > ElementSet::kCapacity) fail(ErrorKind::GroundSetTooLarge, "more than 64 columns");
}

GFMatrix::GFMatrix(unsigned p, const std::vector<std::vector<long>>& rows)
    : GFMatrix(p, static_cast<unsigned>(rows.size()),
               rows.empty() ? 0U : static_cast<unsigned>(rows.front().size())) {
  for (unsigned r = 0; r < rows_; ++r) {
    if (rows[r].size() != cols_) fail(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (unsigned c = 0; c < cols_; ++c) set(r, c, rows[r][c]);
  }
}

void GFMatrix::set(unsigned r, unsigned c, long value) {
  if (r >= rows_ || c >= cols_) fail(ErrorKind::DimensionMismatch, "matrix index out of range");
  long m = value % static_cast<long>(p_);
  if (m < 0) m += p_;
  data_[std::size_t{c} * rows_ + r] = static_cast<std::uint32_t>(m);
}

unsigned GFMatrix::column_rank(ElementSet columns) const {
  // Row-reduce the selected columns, each stored as a contiguous vector.
  std::vector<std::uint32_t> work;
  work.reserve(std::size_t{columns.size()} * rows_);
  for (unsigned c : columns) {
    work.insert(work.end(), data_.begin() + std::size_t{c} * rows_,
                data_.begin() + std::size_t{c + 1} * rows_);
  }
  const unsigned k = columns.size();
  unsigned rank = 0;
  for (unsigned row = 0; row < rows_ && rank < k; ++row) {
    unsigned pivot = rank;
    while (pivot < k && work[std::size_t{pivot} * rows_ + row] == 0) ++pivot;
    if (pivot == k) continue;
    if (pivot != rank) {
      for (unsigned i = 0; i < rows_; ++i) {
        std::swap(work[std::size_t{pivot} * rows_ + i], work[std::size_t{rank} * rows_ + i]);
      }
    }
    std::uint32_t* pc = &work[std::size_t{rank} * rows_];
    const std::uint64_t inv = inverse_mod(pc[row], p_);
    for (unsigned c = rank + 1; c < k; ++c) {
      std::uint32_t* oc = &work[std::size_t{c} * rows_];
      if (oc[row] == 0) continue;
      const std::uint64_t factor = oc[row] * inv % p_;
      for (unsigned i = row; i < rows_; ++i) {
        const std::uint64_t sub = factor * pc[i] % p_;
        oc[i] = static_cast<std::uint32_t>((oc[i] + p_ - sub) % p_);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace tutte
