#include <vector>

#include "pseudoknot/gauss_diagram.hpp"

namespace pk {

// Rosenstiehl's characterization, proved by de Fraysseix and Ossona de Mendez:
// a Gauss word is realizable by a closed planar curve iff its interlacement
// graph G satisfies
//   (a) every vertex has even degree,
//   (b) every pair of non-adjacent vertices has an even number of common
//       neighbours,
//   (c) the edges uv with an even number of common neighbours form a cocycle
//       (edge cut) of G.
bool is_realizable(const GaussDiagram& d) {
  std::vector<int> ids;
  for (const auto& [id, k] : d.chords()) ids.push_back(id);
  const std::size_t n = ids.size();
  if (n == 0) return true;

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      adj[i][j] = adj[j][i] = chords_interleave(d, ids[i], ids[j]);

  for (std::size_t i = 0; i < n; ++i) {
    int deg = 0;
    for (std::size_t j = 0; j < n; ++j) deg += adj[i][j];
    if (deg % 2) return false;
  }

  auto common = [&](std::size_t i, std::size_t j) {
    int c = 0;
    for (std::size_t k = 0; k < n; ++k) c += adj[i][k] && adj[j][k];
    return c;
  };

  // cut[i][j]: edge ij must join the two sides of the cocycle.
  std::vector<std::vector<char>> cut(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int c = common(i, j);
      if (!adj[i][j] && c % 2) return false;
      if (adj[i][j]) cut[i][j] = cut[j][i] = (c % 2 == 0);
    }

  // 2-colour G so that exactly the cut edges are bichromatic.
  std::vector<int> colour(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        if (!adj[u][v]) continue;
        int want = colour[u] ^ cut[u][v];
        if (colour[v] < 0) {
          colour[v] = want;
          stack.push_back(v);
        } else if (colour[v] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace pk
