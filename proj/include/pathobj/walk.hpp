#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pathobj/moore_path.hpp"

namespace pathobj {

using Rng = std::mt19937_64;

// Uniform index below n; plain modulo keeps sequences identical across standard libraries.
inline std::size_t pick(Rng& rng, std::size_t n) { return n ? static_cast<std::size_t>(rng() % n) : 0; }

inline Step random_step(Rng& rng, int dim) {
  return {static_cast<int>(pick(rng, dim + 1)), pick(rng, 2) ? Sign::minus : Sign::plus};
}

// A random Moore path of the given length starting at `start`. `up` lists every
// (n+1)-simplex; it must contain the degeneracies of each n-simplex so a step always exists.
template <SimplexLike S>
MoorePath<S> random_walk(const S& start, int length, const std::vector<S>& up, Rng& rng) {
  const int n = start.dim();
  std::vector<Step> steps;
  std::vector<S> zetas{start}, phis;
  for (int j = 0; j < length; ++j) {
    Step st = random_step(rng, n);
    const int lo = st.sign == Sign::plus ? st.vertex + 1 : st.vertex;
    const int hi = st.sign == Sign::plus ? st.vertex : st.vertex + 1;
    std::vector<const S*> cands;
    for (auto& u : up)
      if (u.act(SimplicialOperator::face(n + 1, lo)) == zetas.back()) cands.push_back(&u);
    if (cands.empty()) throw InternalInconsistency("random_walk: no step simplex over the current boundary");
    const S& phi = *cands[pick(rng, cands.size())];
    steps.push_back(st);
    phis.push_back(phi);
    zetas.push_back(phi.act(SimplicialOperator::face(n + 1, hi)));
  }
  return MoorePath<S>(Traversal(n, std::move(steps)), std::move(zetas), std::move(phis));
}

// A random Moore path ending at `end`.
template <SimplexLike S>
MoorePath<S> random_walk_to(const S& end, int length, const std::vector<S>& up, Rng& rng) {
  return reverse(random_walk(end, length, up, rng));
}

}  // namespace pathobj
