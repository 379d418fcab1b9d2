#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "pathobj/errors.hpp"
#include "pathobj/fault.hpp"
#include "pathobj/simplex/operator.hpp"
#include "pathobj/traversal.hpp"

namespace pathobj {

template <class S>
concept SimplexLike = std::equality_comparable<S> && requires(const S& s, const SimplicialOperator& a) {
  { s.dim() } -> std::convertible_to<int>;
  { s.act(a) } -> std::convertible_to<S>;
};

// Which side of step `step` failed the face discipline.
struct DisciplineViolation {
  int step;
  bool at_upper;  // false: zetas[step] vs lower face; true: zetas[step + 1] vs upper face
};

// An n-simplex of MX: a traversal of [n] with length + 1 boundary n-simplices and one
// (n+1)-simplex per step, subject to
//   zetas[j] = phis[j] . delta_{lower(j)},  zetas[j+1] = phis[j] . delta_{upper(j)}.
// Unconstrained so that a simplex type may hold paths of itself; checked on construction.
template <class S>
class MoorePath {
 public:
  MoorePath(Traversal theta, std::vector<S> zetas, std::vector<S> phis)
      : theta_(std::move(theta)), zetas_(std::move(zetas)), phis_(std::move(phis)) {
    static_assert(SimplexLike<S>);
    if (static_cast<int>(zetas_.size()) != theta_.length() + 1 || static_cast<int>(phis_.size()) != theta_.length())
      throw InputError("moore path: need length+1 boundaries and length steps");
    for (auto& z : zetas_)
      if (z.dim() != theta_.dim()) throw InputError("moore path: boundary of the wrong dimension");
    for (auto& p : phis_)
      if (p.dim() != theta_.dim() + 1) throw InputError("moore path: step simplex of the wrong dimension");
  }

  // Checked construction.
  static MoorePath make(Traversal theta, std::vector<S> zetas, std::vector<S> phis) {
    MoorePath p(std::move(theta), std::move(zetas), std::move(phis));
    if (auto v = p.violation())
      throw InputError("moore path: face discipline fails at step " + std::to_string(v->step) +
                       (v->at_upper ? " (upper)" : " (lower)"));
    return p;
  }

  static MoorePath refl(const S& x) { return MoorePath(Traversal(x.dim(), {}), {x}, {}); }

  int dim() const { return theta_.dim(); }
  int length() const { return theta_.length(); }
  const Traversal& traversal() const { return theta_; }
  const std::vector<S>& zetas() const { return zetas_; }
  const std::vector<S>& phis() const { return phis_; }
  const S& source() const { return zetas_.front(); }
  const S& target() const { return zetas_.back(); }

  std::optional<DisciplineViolation> violation() const {
    for (int j = 0; j < length(); ++j) {
      if (!(phis_[j].act(SimplicialOperator::face(dim() + 1, theta_.lower(j))) == zetas_[j])) return {{j, false}};
      if (!(phis_[j].act(SimplicialOperator::face(dim() + 1, theta_.upper(j))) == zetas_[j + 1])) return {{j, true}};
    }
    return std::nullopt;
  }
  bool valid() const { return !violation().has_value(); }

  // Right action by alpha : [m] -> [n]. Boundaries are forced by the discipline and
  // cross-checked against the pulled-back old boundaries.
  MoorePath act(const SimplicialOperator& alpha) const {
    auto [psi, r] = act_traversal(theta_, alpha);
    const int m = alpha.domain_rank();
    std::vector<S> phis;
    phis.reserve(psi.length());
    for (int j = 0; j < psi.length(); ++j) phis.push_back(phis_[r.parent[j]].act(r.ops[j]));
    std::vector<S> zetas;
    zetas.reserve(psi.length() + 1);
    zetas.push_back(zetas_.front().act(alpha));
    for (int j = 0; j < psi.length(); ++j) {
      if (!(phis[j].act(SimplicialOperator::face(m + 1, psi.lower(j))) == zetas.back()))
        throw InternalInconsistency("act_path: step " + std::to_string(j) + " of " + psi.to_string() +
                                    " does not meet the previous boundary");
      zetas.push_back(phis[j].act(SimplicialOperator::face(m + 1, psi.upper(j))));
    }
    for (int i = 0; i <= length(); ++i)
      if (!(zetas[shift_index(theta_, alpha, i)] == zetas_[i].act(alpha)))
        throw InternalInconsistency("act_path: pulled-back boundary " + std::to_string(i) + " disagrees");
    return MoorePath(std::move(psi), std::move(zetas), std::move(phis));
  }

  // Apply a dimension-preserving, simplicial map to every simplex.
  template <class F>
  auto map(F&& f) const -> MoorePath<std::decay_t<decltype(f(std::declval<const S&>()))>> {
    using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
    std::vector<T> z, p;
    z.reserve(zetas_.size());
    p.reserve(phis_.size());
    for (auto& x : zetas_) z.push_back(f(x));
    for (auto& x : phis_) p.push_back(f(x));
    return MoorePath<T>(theta_, std::move(z), std::move(p));
  }

  friend bool operator==(const MoorePath&, const MoorePath&) = default;

 private:
  Traversal theta_;
  std::vector<S> zetas_;
  std::vector<S> phis_;
};

// p then q; requires p.target() == q.source().
template <SimplexLike S>
MoorePath<S> compose(const MoorePath<S>& p, const MoorePath<S>& q) {
  if (p.dim() != q.dim()) throw ContractViolation("compose", "paths of different dimensions");
  if (!(p.target() == q.source())) throw ContractViolation("compose", "target of the first path is not the source of the second");
  std::vector<S> z = p.zetas(), ph = p.phis();
  z.insert(z.end(), q.zetas().begin() + 1, q.zetas().end());
  ph.insert(ph.end(), q.phis().begin(), q.phis().end());
  return MoorePath<S>(concat(p.traversal(), q.traversal()), std::move(z), std::move(ph));
}

template <SimplexLike S>
MoorePath<S> reverse(const MoorePath<S>& p) {
  return MoorePath<S>(reverse(p.traversal()), std::vector<S>(p.zetas().rbegin(), p.zetas().rend()),
                      std::vector<S>(p.phis().rbegin(), p.phis().rend()));
}

// The constant path of shape theta at x.
template <SimplexLike S>
MoorePath<S> const_path(const Traversal& theta, const S& x) {
  if (theta.dim() != x.dim()) throw InputError("const_path: traversal and simplex dimensions differ");
  std::vector<S> phis;
  for (auto& op : collapse_ops(theta)) phis.push_back(x.act(op));
  return MoorePath<S>(theta, std::vector<S>(theta.length() + 1, x), std::move(phis));
}

// Drop the first i steps.
template <SimplexLike S>
MoorePath<S> tail(const MoorePath<S>& p, int i) {
  return MoorePath<S>(tail(p.traversal(), i), std::vector<S>(p.zetas().begin() + i, p.zetas().end()),
                      std::vector<S>(p.phis().begin() + i, p.phis().end()));
}

// Keep the first i steps.
template <SimplexLike S>
MoorePath<S> head(const MoorePath<S>& p, int i) {
  return MoorePath<S>(head(p.traversal(), i), std::vector<S>(p.zetas().begin(), p.zetas().begin() + i + 1),
                      std::vector<S>(p.phis().begin(), p.phis().begin() + i));
}

// The contraction: a path in MX from p to the constant path at its target, whose
// boundaries are the successive tails of p.
template <SimplexLike S>
MoorePath<MoorePath<S>> eta(const MoorePath<S>& p) {
  const int k = p.length();
  const int drop = fault::on(fault::eta_keep_first) ? 0 : 1;
  std::vector<MoorePath<S>> zetas, phis;
  for (int i = 0; i <= k; ++i) zetas.push_back(tail(p, i));
  for (int i = 0; i < k; ++i) {
    MoorePath<S> lifted = zetas[i].act(SimplicialOperator::degeneracy(p.dim(), p.traversal()[i].vertex));
    phis.push_back(tail(lifted, drop));
  }
  return MoorePath<MoorePath<S>>(p.traversal(), std::move(zetas), std::move(phis));
}

}  // namespace pathobj
