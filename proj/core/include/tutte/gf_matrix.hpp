#pragma once

#include <cstdint>
#include <vector>

#include "tutte/element_set.hpp"

namespace tutte {

bool is_prime(unsigned long n);

/// Matrix over the prime field GF(p); columns are the matroid elements.
class GFMatrix {
 public:
  GFMatrix(unsigned p, unsigned rows, unsigned cols);
  /// Entries are reduced mod p, so negative literals such as -1 are accepted.
  GFMatrix(unsigned p, const std::vector<std::vector<long>>& rows);

  unsigned prime() const noexcept { return p_; }
  unsigned rows() const noexcept { return rows_; }
  unsigned cols() const noexcept { return cols_; }
  std::uint32_t at(unsigned r, unsigned c) const { return data_[c * rows_ + r]; }
  void set(unsigned r, unsigned c, long value);

  /// Rank of the submatrix formed by the chosen columns.
  unsigned column_rank(ElementSet columns) const;

  friend bool operator==(const GFMatrix&, const GFMatrix&) = default;

 private:
  unsigned p_;
  unsigned rows_;
  unsigned cols_;
  std::vector<std::uint32_t> data_;  // column-major
};

}  // namespace tutte
