#include "hypertutte/exact.hpp"

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace hypertutte {

long long integer_determinant(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("non-square matrix");

  int sign = 1;
  long long prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 num = static_cast<__int128>(m[i][j]) * m[k][k] -
                       static_cast<__int128>(m[i][k]) * m[k][j];
        __int128 q = num / prev;
        if (q > INT64_MAX || q < INT64_MIN)
          throw std::overflow_error("determinant overflow");
        m[i][j] = static_cast<long long>(q);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace hypertutte
