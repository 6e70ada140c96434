#include "kr/linalg.hpp"

#include <utility>

namespace kr {

std::vector<std::size_t> RationalMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t found = row;
    while (found < rows_ && sgn(at(found, col)) == 0) ++found;
    if (found == rows_) continue;
    if (found != row) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(found, c), at(row, c));
    }
    const mpq_class inv = 1 / at(row, col);
    for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || sgn(at(r, col)) == 0) continue;
      const mpq_class factor = at(r, col);
      for (std::size_t c = col; c < cols_; ++c) {
        if (sgn(at(row, c)) != 0) at(r, c) -= factor * at(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return copy.rref().size();
}

}  // namespace kr
