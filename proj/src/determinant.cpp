#include "pseudoknot/determinant.hpp"

#include <vector>

namespace pk {

namespace {

using Int = __int128;

// Fraction-free Gaussian elimination (Bareiss).
Int bareiss(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

std::uint64_t determinant(const GaussDiagram& d) {
  if (d.precrossing_count() > 0) throw HasPrecrossings("determinant needs a classical diagram");
  if (!is_realizable(d)) throw NotRealizable("determinant needs a realizable diagram");
  const std::size_t n = d.chord_count();
  if (n == 0) return 1;

  // Arcs run from one under-passage to the next; arc k starts after the k-th
  // head met along the word (counting from the first head).
  const auto& w = d.word();
  std::size_t first_head = 0;
  while (w[first_head].role != Role::head) ++first_head;
  std::vector<std::size_t> arc(w.size());
  std::size_t k = n - 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t p = (first_head + i) % w.size();
    if (w[p].role == Role::head) k = (k + 1) % n;
    arc[p] = k;
  }

  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  std::size_t row = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w[p].role != Role::head) continue;
    std::size_t in = arc[(p + w.size() - 1) % w.size()], out = arc[p];
    std::size_t over = arc[d.tail_position(w[p].chord)];
    m[row][over] += 2;
    m[row][in] -= 1;
    m[row][out] -= 1;
    ++row;
  }
  m.pop_back();
  for (auto& r : m) r.pop_back();
  Int det = bareiss(std::move(m));
  return static_cast<std::uint64_t>(det < 0 ? -det : det);
}

}  // namespace pk
