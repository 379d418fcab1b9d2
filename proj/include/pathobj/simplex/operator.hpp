#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "pathobj/errors.hpp"

namespace pathobj {

// A monotone map [m] -> [n], stored as its image vector (length m + 1).
class SimplicialOperator {
 public:
  SimplicialOperator() : codomain_rank_(0), images_{0} {}

  SimplicialOperator(int codomain_rank, std::vector<int> images)
      : codomain_rank_(codomain_rank), images_(std::move(images)) {
    if (codomain_rank_ < 0) throw InputError("operator: negative codomain rank");
    if (images_.empty()) throw InputError("operator: empty image vector");
    for (std::size_t x = 0; x < images_.size(); ++x) {
      if (images_[x] < 0 || images_[x] > codomain_rank_)
        throw InputError("operator: image " + std::to_string(images_[x]) + " outside [0," +
                         std::to_string(codomain_rank_) + "]");
      if (x > 0 && images_[x] < images_[x - 1]) throw InputError("operator: images not monotone");
    }
  }

  static SimplicialOperator identity(int n) {
    std::vector<int> im(n + 1);
    for (int x = 0; x <= n; ++x) im[x] = x;
    return {n, std::move(im)};
  }

  // delta_i : [n-1] -> [n], the face omitting i.
  static SimplicialOperator face(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw InputError("face: need 0 <= i <= n, n >= 1");
    std::vector<int> im;
    im.reserve(n);
    for (int x = 0; x <= n; ++x)
      if (x != i) im.push_back(x);
    return {n, std::move(im)};
  }

  // sigma_i : [n+1] -> [n], the degeneracy repeating i.
  static SimplicialOperator degeneracy(int n, int i) {
    if (n < 0 || i < 0 || i > n) throw InputError("degeneracy: need 0 <= i <= n");
    std::vector<int> im(n + 2);
    for (int x = 0; x <= n + 1; ++x) im[x] = x <= i ? x : x - 1;
    return {n, std::move(im)};
  }

  int domain_rank() const { return static_cast<int>(images_.size()) - 1; }
  int codomain_rank() const { return codomain_rank_; }
  int operator()(int x) const { return images_.at(x); }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const { return domain_rank() == codomain_rank_ && is_injective(); }
  bool is_injective() const {
    for (std::size_t x = 1; x < images_.size(); ++x)
      if (images_[x] == images_[x - 1]) return false;
    return true;
  }
  bool is_surjective() const {
    if (images_.front() != 0 || images_.back() != codomain_rank_) return false;
    for (std::size_t x = 1; x < images_.size(); ++x)
      if (images_[x] > images_[x - 1] + 1) return false;
    return true;
  }

  // Fiber over a as the half-open index range [first, last).
  std::pair<int, int> fiber(int a) const {
    auto lo = std::lower_bound(images_.begin(), images_.end(), a);
    auto hi = std::upper_bound(images_.begin(), images_.end(), a);
    return {static_cast<int>(lo - images_.begin()), static_cast<int>(hi - images_.begin())};
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t x = 0; x < images_.size(); ++x) {
      if (x) s += ",";
      s += std::to_string(images_[x]);
    }
    return s + "]->[" + std::to_string(codomain_rank_) + "]";
  }

  friend bool operator==(const SimplicialOperator&, const SimplicialOperator&) = default;
  friend auto operator<=>(const SimplicialOperator&, const SimplicialOperator&) = default;

 private:
  int codomain_rank_;
  std::vector<int> images_;
};

// outer o inner, i.e. x -> outer(inner(x)).
inline SimplicialOperator compose(const SimplicialOperator& outer, const SimplicialOperator& inner) {
  if (inner.codomain_rank() != outer.domain_rank())
    throw InputError("compose: rank mismatch " + outer.to_string() + " o " + inner.to_string());
  std::vector<int> im(inner.images().size());
  for (std::size_t x = 0; x < im.size(); ++x) im[x] = outer(inner(static_cast<int>(x)));
  return {outer.codomain_rank(), std::move(im)};
}

struct EpiMono {
  SimplicialOperator epi;
  SimplicialOperator mono;
};

// Unique factorization alpha = mono o epi.
inline EpiMono ez_factorize(const SimplicialOperator& alpha) {
  std::vector<int> image_set;
  for (int v : alpha.images())
    if (image_set.empty() || image_set.back() != v) image_set.push_back(v);
  const int k = static_cast<int>(image_set.size()) - 1;
  std::vector<int> epi(alpha.images().size());
  int pos = 0;
  for (std::size_t x = 0; x < epi.size(); ++x) {
    while (image_set[pos] != alpha.images()[x]) ++pos;
    epi[x] = pos;
  }
  return {SimplicialOperator(k, std::move(epi)), SimplicialOperator(alpha.codomain_rank(), image_set)};
}

// Every monotone map [m] -> [n], in lexicographic order of images.
inline std::vector<SimplicialOperator> all_operators(int m, int n) {
  std::vector<SimplicialOperator> out;
  std::vector<int> im(m + 1, 0);
  while (true) {
    out.emplace_back(n, im);
    int x = m;
    while (x >= 0 && im[x] == n) --x;
    if (x < 0) break;
    ++im[x];
    for (int y = x + 1; y <= m; ++y) im[y] = im[x];
  }
  return out;
}

inline std::vector<SimplicialOperator> all_epis(int m, int n) {
  std::vector<SimplicialOperator> out;
  for (auto& op : all_operators(m, n))
    if (op.is_surjective()) out.push_back(op);
  return out;
}

}  // namespace pathobj
