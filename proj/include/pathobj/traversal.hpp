#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pathobj/errors.hpp"
#include "pathobj/fault.hpp"
#include "pathobj/simplex/operator.hpp"

namespace pathobj {

enum class Sign : char { plus = '+', minus = '-' };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

struct Step {
  int vertex;
  Sign sign;
  friend bool operator==(const Step&, const Step&) = default;
};

// A finite word of (vertex, sign) pairs over [dim]. Steps are 0-indexed; step j joins
// boundaries j and j+1.
class Traversal {
 public:
  Traversal() = default;
  Traversal(int dim, std::vector<Step> steps) : dim_(dim), steps_(std::move(steps)) {
    if (dim_ < 0) throw InputError("traversal: negative dimension");
    for (auto& s : steps_)
      if (s.vertex < 0 || s.vertex > dim_)
        throw InputError("traversal: vertex " + std::to_string(s.vertex) + " outside [0," + std::to_string(dim_) +
                         "]");
  }

  int dim() const { return dim_; }
  int length() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }
  const Step& operator[](int j) const { return steps_.at(j); }
  const std::vector<Step>& steps() const { return steps_; }

  // Face index where step j meets boundary j.
  int lower(int j) const { return steps_.at(j).sign == Sign::plus ? steps_[j].vertex + 1 : steps_[j].vertex; }
  // Face index where step j meets boundary j + 1.
  int upper(int j) const { return steps_.at(j).sign == Sign::plus ? steps_[j].vertex : steps_[j].vertex + 1; }

  std::string to_string() const {
    std::string s = "(";
    for (int j = 0; j < length(); ++j) {
      if (j) s += ",";
      s += std::to_string(steps_[j].vertex) + static_cast<char>(steps_[j].sign);
    }
    return s + ")@" + std::to_string(dim_);
  }

  friend bool operator==(const Traversal&, const Traversal&) = default;

 private:
  int dim_ = 0;
  std::vector<Step> steps_;
};

// g_b : [m+1] -> [n+1], the simplex carried by the new step over fiber element b.
inline SimplicialOperator segment_operator(const SimplicialOperator& alpha, int b) {
  const int m = alpha.domain_rank();
  if (b < 0 || b > m) throw InputError("segment_operator: index outside the domain");
  std::vector<int> im(m + 2);
  for (int x = 0; x <= m + 1; ++x) im[x] = x <= b ? alpha(x) : alpha(x - 1) + 1;
  return {alpha.codomain_rank() + 1, std::move(im)};
}

// h_j : [m] -> [n+1], the boundary between consecutive new steps inside the fiber over a.
// j ranges over [first, last] where [first, last) is the fiber; an empty fiber admits only j = first.
inline SimplicialOperator boundary_operator(const SimplicialOperator& alpha, int a, int j) {
  auto [first, last] = alpha.fiber(a);
  if (j < first || j > last)
    throw InputError("boundary_operator: j=" + std::to_string(j) + " outside [" + std::to_string(first) + "," +
                     std::to_string(last) + "]");
  std::vector<int> im(alpha.images().size());
  for (int x = 0; x <= alpha.domain_rank(); ++x) im[x] = x < j ? alpha(x) : alpha(x) + 1;
  return {alpha.codomain_rank() + 1, std::move(im)};
}

// For each new step: the old step it lies over and the operator pulling the old simplex back.
struct Reindex {
  std::vector<int> parent;
  std::vector<SimplicialOperator> ops;
};

struct ActedTraversal {
  Traversal traversal;
  Reindex reindex;
};

inline ActedTraversal act_traversal(const Traversal& theta, const SimplicialOperator& alpha) {
  if (alpha.codomain_rank() != theta.dim())
    throw InputError("act_traversal: operator " + alpha.to_string() + " on a " + std::to_string(theta.dim()) +
                     "-dimensional traversal");
  const bool mirror_fault = fault::on(fault::plus_mirror);
  std::vector<Step> steps;
  Reindex r;
  for (int i = 0; i < theta.length(); ++i) {
    auto [first, last] = alpha.fiber(theta[i].vertex);
    auto emit = [&](int b) {
      steps.push_back({b, theta[i].sign});
      r.parent.push_back(i);
      r.ops.push_back(segment_operator(alpha, b));
    };
    if (theta[i].sign == Sign::minus || mirror_fault)
      for (int b = first; b < last; ++b) emit(b);
    else
      for (int b = last - 1; b >= first; --b) emit(b);
  }
  return {Traversal(alpha.domain_rank(), std::move(steps)), std::move(r)};
}

// Position in theta . alpha of the old boundary i.
inline int shift_index(const Traversal& theta, const SimplicialOperator& alpha, int i) {
  if (i < 0 || i > theta.length()) throw InputError("shift_index: boundary outside the traversal");
  int pos = 0;
  for (int j = 0; j < i; ++j) {
    auto [first, last] = alpha.fiber(theta[j].vertex);
    pos += last - first;
  }
  return pos;
}

inline Traversal concat(const Traversal& a, const Traversal& b) {
  if (a.dim() != b.dim()) throw InputError("concat: traversals of different dimensions");
  std::vector<Step> s = a.steps();
  s.insert(s.end(), b.steps().begin(), b.steps().end());
  return {a.dim(), std::move(s)};
}

inline Traversal reverse(const Traversal& t) {
  std::vector<Step> s;
  for (int j = t.length() - 1; j >= 0; --j) s.push_back({t[j].vertex, flip(t[j].sign)});
  return {t.dim(), std::move(s)};
}

// Drop the first i steps.
inline Traversal tail(const Traversal& t, int i) {
  if (i < 0 || i > t.length()) throw InputError("tail: index outside the traversal");
  return {t.dim(), std::vector<Step>(t.steps().begin() + i, t.steps().end())};
}

// Keep the first i steps.
inline Traversal head(const Traversal& t, int i) {
  if (i < 0 || i > t.length()) throw InputError("head: index outside the traversal");
  return {t.dim(), std::vector<Step>(t.steps().begin(), t.steps().begin() + i)};
}

// sigma_{vertex} per step: the degeneracies that make a constant path of shape t.
inline std::vector<SimplicialOperator> collapse_ops(const Traversal& t) {
  std::vector<SimplicialOperator> out;
  for (auto& s : t.steps()) out.push_back(SimplicialOperator::degeneracy(t.dim(), s.vertex));
  return out;
}

// ---- JSON: {"dim": 1, "entries": [[1, "+"], [0, "-"]]} ----------------------

inline Traversal traversal_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw InputError("traversal: expected {\"dim\", \"entries\"}");
  std::vector<Step> steps;
  for (auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 2) throw InputError("traversal: entry must be [vertex, sign]");
    std::string sg = e[1].get<std::string>();
    if (sg != "+" && sg != "-") throw InputError("traversal: sign must be \"+\" or \"-\"");
    steps.push_back({e[0].get<int>(), sg == "+" ? Sign::plus : Sign::minus});
  }
  return {j.at("dim").get<int>(), std::move(steps)};
}

inline nlohmann::ordered_json traversal_to_json(const Traversal& t) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (auto& s : t.steps()) entries.push_back({s.vertex, std::string(1, static_cast<char>(s.sign))});
  return {{"dim", t.dim()}, {"entries", entries}};
}

}  // namespace pathobj
