#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "pathobj/walk.hpp"

namespace pathobj {

template <class E>
struct Probes {
  std::vector<E> elements;
  bool exhaustive = false;
};

struct ProbeConfig {
  int samples = 200;
  int max_dim = 2;
  int max_length = 6;
  // Exhaustive backends sample `samples` elements from objects larger than this; 0 means never.
  int exhaustive_limit = 0;
};

// `samples` distinct elements of `all` in their original order.
template <class E>
Probes<E> subsample(const std::vector<E>& all, const ProbeConfig& cfg, Rng& rng) {
  if (cfg.exhaustive_limit <= 0 || all.size() <= static_cast<std::size_t>(cfg.exhaustive_limit) ||
      all.size() <= static_cast<std::size_t>(cfg.samples))
    return {all, true};
  std::vector<std::size_t> idx(all.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (std::size_t i = 0; i < static_cast<std::size_t>(cfg.samples); ++i) std::swap(idx[i], idx[i + pick(rng, idx.size() - i)]);
  idx.resize(static_cast<std::size_t>(cfg.samples));
  std::sort(idx.begin(), idx.end());
  Probes<E> p;
  for (auto i : idx) p.elements.push_back(all[i]);
  return p;
}

// A chosen pullback P of f : A -> C and g : B -> C, with first : P -> A and second : P -> B.
template <class Obj, class Mor>
struct PullbackOf {
  Obj object;
  Mor first;
  Mor second;
  Mor f;
  Mor g;
};

}  // namespace pathobj
