#ifndef LIEINDEX_ELIMINATION_HPP
#define LIEINDEX_ELIMINATION_HPP

#include <utility>
#include <vector>

namespace lieindex {

/// Fraction-free Bareiss elimination over any integral domain with exact
/// division. Works in place on a dense grid and returns the rank.
///
/// Ring must provide: default construction (zero), ring_is_zero(x),
/// a * b, a - b, ring_exact_div(num, den). Entries stay inside the ring at
/// every step (they are minors of the input matrix up to sign), which is
/// what keeps rational coefficient growth and polynomial degree growth
/// under control.
template <typename Ring, typename IsZero, typename ExactDiv>
int bareiss_rank(std::vector<std::vector<Ring>>& m, IsZero ring_is_zero,
                 ExactDiv ring_exact_div) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int rank = 0;
  Ring prev_pivot{};
  bool have_prev = false;
  int col = 0;
  for (int row = 0; row < rows && col < cols; ++col) {
    int pr = -1;
    for (int i = row; i < rows; ++i) {
      if (!ring_is_zero(m[i][col])) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != row) std::swap(m[pr], m[row]);
    for (int i = row + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        Ring t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
        m[i][j] = have_prev ? ring_exact_div(t, prev_pivot) : std::move(t);
      }
      m[i][col] = Ring{};
    }
    prev_pivot = m[row][col];
    have_prev = true;
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace lieindex

#endif
