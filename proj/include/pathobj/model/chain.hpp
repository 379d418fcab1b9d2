#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathobj/errors.hpp"
#include "pathobj/linalg.hpp"
#include "pathobj/model/common.hpp"

namespace pathobj {

// A homogeneous element: a vector in one degree.
template <class F>
struct CElem {
  int deg = 0;
  std::vector<F> v;
  friend bool operator==(const CElem&, const CElem&) = default;
};

template <class F>
struct CObj;
template <class F>
using CObjPtr = std::shared_ptr<const CObj<F>>;

// A bounded chain complex. Degrees outside [lo, hi] are zero; diff(n) : A_n -> A_{n-1} in the
// column convention (rows = dim(n-1), cols = dim(n)).
template <class F>
struct CObj {
  enum class Kind { base, terminal, pullback, paths };
  Kind kind = Kind::base;
  std::string name;
  int lo = 0, hi = 0;
  std::vector<int> dims;
  std::vector<Matrix<F>> diffs;

  CObjPtr<F> inner;  // paths
  // pullback: P_n sits in A_n + B_n as the column span of basis[n - lo]; coordinates are
  // read off at free[n - lo].
  std::vector<Matrix<F>> basis;
  std::vector<std::vector<int>> free;
  std::vector<int> left_dims;  // dim A_n, so the first block of a stacked vector is A's

  int dim(int n) const { return n < lo || n > hi ? 0 : dims[n - lo]; }
  Matrix<F> diff(int n) const {
    if (n < lo || n > hi || dim(n) == 0 || dim(n - 1) == 0) return Matrix<F>(dim(n - 1), dim(n));
    return diffs[n - lo];
  }
};

template <class F>
struct CMor {
  CObjPtr<F> dom, cod;
  std::map<int, Matrix<F>> mats;  // degree n : cod_n x dom_n
  std::string label;

  Matrix<F> at(int n) const {
    auto it = mats.find(n);
    return it == mats.end() ? Matrix<F>(cod->dim(n), dom->dim(n)) : it->second;
  }
};

template <class F>
CObjPtr<F> make_complex(std::string name, int lo, std::vector<int> dims, std::vector<Matrix<F>> diffs) {
  auto o = std::make_shared<CObj<F>>();
  o->name = std::move(name);
  o->lo = lo;
  o->hi = lo + static_cast<int>(dims.size()) - 1;
  o->dims = std::move(dims);
  if (static_cast<int>(diffs.size()) != static_cast<int>(o->dims.size()))
    throw InputError("chain complex: need one differential per degree");
  o->diffs = std::move(diffs);
  for (int n = o->lo; n <= o->hi; ++n) {
    const auto& d = o->diffs[n - o->lo];
    if (d.rows() != o->dim(n - 1) || d.cols() != o->dim(n))
      throw InputError("chain complex '" + o->name + "': differential in degree " + std::to_string(n) +
                       " has the wrong shape");
  }
  for (int n = o->lo + 1; n <= o->hi; ++n)
    if (!(o->diff(n - 1) * o->diff(n)).is_zero())
      throw InputError("chain complex '" + o->name + "': d o d is not zero in degree " + std::to_string(n));
  return o;
}

// The chain-complex path object category over a field. MA_n = A_n + A_{n+1} + A_n.
template <class F>
class ChainModel {
 public:
  using Object = CObjPtr<F>;
  using Element = CElem<F>;
  using Morphism = CMor<F>;
  using Pullback = PullbackOf<Object, Morphism>;

  static std::string backend_name() { return "chain"; }

  Object terminal() const {
    static const Object zero = [] {
      auto o = std::make_shared<CObj<F>>();
      o->kind = CObj<F>::Kind::terminal;
      o->name = "0";
      o->lo = o->hi = 0;
      o->dims = {0};
      o->diffs = {Matrix<F>(0, 0)};
      return Object(o);
    }();
    return zero;
  }

  Pullback pullback(const Morphism& f, const Morphism& g) const {
    if (f.cod->name != g.cod->name)
      throw ContractViolation("pullback", "codomains " + f.cod->name + " and " + g.cod->name + " differ");
    const Object &A = f.dom, &B = g.dom;
    auto o = std::make_shared<CObj<F>>();
    o->kind = CObj<F>::Kind::pullback;
    o->name = "(" + A->name + " x_" + f.cod->name + " " + B->name + " via " + f.label + "," + g.label + ")";
    o->lo = std::min(A->lo, B->lo);
    o->hi = std::max(A->hi, B->hi);
    for (int n = o->lo; n <= o->hi; ++n) {
      const int a = A->dim(n), b = B->dim(n), c = f.cod->dim(n);
      Matrix<F> joint(c, a + b);
      Matrix<F> fn = f.at(n), gn = g.at(n);
      for (int r = 0; r < c; ++r) {
        for (int j = 0; j < a; ++j) joint(r, j) = fn(r, j);
        for (int j = 0; j < b; ++j) joint(r, a + j) = -gn(r, j);
      }
      KernelBasisInfo info;
      o->basis.push_back(kernel(joint, &info));
      o->free.push_back(info.free_columns);
      o->dims.push_back(o->basis.back().cols());
      o->left_dims.push_back(a);
    }
    for (int n = o->lo; n <= o->hi; ++n) {
      const Matrix<F>& K = o->basis[n - o->lo];
      Matrix<F> d(o->dim(n - 1), o->dim(n));
      for (int c = 0; c < K.cols(); ++c) {
        std::vector<F> col = K.column(c);
        std::vector<F> da = A->diff(n) * std::vector<F>(col.begin(), col.begin() + A->dim(n));
        std::vector<F> db = B->diff(n) * std::vector<F>(col.begin() + A->dim(n), col.end());
        da.insert(da.end(), db.begin(), db.end());
        auto coords = coordinates(*o, n - 1, da);
        for (int r = 0; r < d.rows(); ++r) d(r, c) = coords[r];
      }
      o->diffs.push_back(d);
    }
    Object P = o;
    Morphism first{P, A, {}, "pr1"}, second{P, B, {}, "pr2"};
    for (int n = P->lo; n <= P->hi; ++n) {
      const Matrix<F>& K = o->basis[n - o->lo];
      Matrix<F> top(A->dim(n), K.cols()), bottom(B->dim(n), K.cols());
      for (int c = 0; c < K.cols(); ++c) {
        for (int r = 0; r < A->dim(n); ++r) top(r, c) = K(r, c);
        for (int r = 0; r < B->dim(n); ++r) bottom(r, c) = K(A->dim(n) + r, c);
      }
      first.mats[n] = top;
      second.mats[n] = bottom;
    }
    return {P, first, second, f, g};
  }

  Pullback product(const Object& A, const Object& B) const { return pullback(terminal_map(A), terminal_map(B)); }

  Element pair(const Pullback& P, const Element& a, const Element& b) const {
    if (a.deg != b.deg) throw ContractViolation("pair", "components of different degrees");
    std::vector<F> w = a.v;
    w.insert(w.end(), b.v.begin(), b.v.end());
    const int n = a.deg;
    if (P.object->dim(n) == 0) {
      for (auto& x : w)
        if (!(x == F(0))) throw ContractViolation("pair", "components do not agree in the base");
      return {n, {}};
    }
    return {n, coordinates(*P.object, n, w)};
  }

  Object path_object(const Object& A) const {
    auto o = std::make_shared<CObj<F>>();
    o->kind = CObj<F>::Kind::paths;
    o->name = "M" + A->name;
    o->inner = A;
    o->lo = A->lo - 1;
    o->hi = A->hi;
    for (int n = o->lo; n <= o->hi; ++n) o->dims.push_back(2 * A->dim(n) + A->dim(n + 1));
    for (int n = o->lo; n <= o->hi; ++n) {
      Matrix<F> d(o->dim(n - 1), o->dim(n));
      const int an = A->dim(n), an1 = A->dim(n + 1), am = A->dim(n - 1);
      Matrix<F> dn = A->diff(n), dn1 = A->diff(n + 1);
      // (a, f, b) -> (da, b - a - df, db)
      for (int r = 0; r < am; ++r)
        for (int c = 0; c < an; ++c) {
          d(r, c) = dn(r, c);
          d(am + an + r, an + an1 + c) = dn(r, c);
        }
      for (int r = 0; r < an; ++r) {
        d(am + r, r) -= F(1);
        d(am + r, an + an1 + r) += F(1);
        for (int c = 0; c < an1; ++c) d(am + r, an + c) = -dn1(r, c);
      }
      o->diffs.push_back(d);
    }
    return o;
  }

  // Split an element of MA in degree n into (a, f, b).
  struct Triple {
    Element a, f, b;
  };
  Triple split(const Object& A, const Element& p) const {
    const int n = p.deg, an = A->dim(n), an1 = A->dim(n + 1);
    if (static_cast<int>(p.v.size()) != 2 * an + an1) throw ContractViolation("split", "not an element of M" + A->name);
    auto slice = [&](int from, int len) { return std::vector<F>(p.v.begin() + from, p.v.begin() + from + len); };
    return {{n, slice(0, an)}, {n + 1, slice(an, an1)}, {n, slice(an + an1, an)}};
  }
  Element join(const Element& a, const Element& f, const Element& b) const {
    std::vector<F> v = a.v;
    v.insert(v.end(), f.v.begin(), f.v.end());
    v.insert(v.end(), b.v.begin(), b.v.end());
    return {a.deg, v};
  }

  Morphism map_path(const Morphism& h) const {
    return morphism(path_object(h.dom), path_object(h.cod), [this, h](const Element& p) {
      auto [a, f, b] = split(h.dom, p);
      return join(apply(h, a), apply(h, f), apply(h, b));
    }, "M(" + h.label + ")");
  }

  Element pair_paths(const Pullback& P, const Element& pa, const Element& pb) const {
    auto A = P.f.dom, B = P.g.dom;
    auto x = split(A, pa), y = split(B, pb);
    return join(pair(P, x.a, y.a), pair(P, x.f, y.f), pair(P, x.b, y.b));
  }

  Morphism source(const Object& A) const {
    return morphism(path_object(A), A, [this, A](const Element& p) { return split(A, p).a; }, "s_" + A->name);
  }
  Morphism target(const Object& A) const {
    return morphism(path_object(A), A, [this, A](const Element& p) { return split(A, p).b; }, "t_" + A->name);
  }
  Morphism refl(const Object& A) const {
    return morphism(A, path_object(A), [this, A](const Element& a) { return join(a, zero(A, a.deg + 1), a); },
                    "r_" + A->name);
  }

  Pullback composable(const Object& A) const { return pullback(source(A), target(A)); }

  // m(G, F) with G = (b, g, c) and F = (a, f, b) is (a, f + g, c).
  Morphism compose_paths(const Object& A) const {
    Pullback C = composable(A);
    return morphism(C.object, path_object(A), [this, A, C](const Element& e) {
      auto G = split(A, apply(C.first, e)), Fp = split(A, apply(C.second, e));
      return join(Fp.a, add(Fp.f, G.f), G.b);
    }, "m_" + A->name);
  }

  Morphism reverse_paths(const Object& A) const {
    return morphism(path_object(A), path_object(A), [this, A](const Element& e) {
      auto [a, f, b] = split(A, e);
      return join(b, neg(f), a);
    }, "tau_" + A->name);
  }

  Morphism strength(const Object& A) const {
    Pullback P = product(path_object(terminal()), A);
    return morphism(P.object, path_object(A), [this, A, P](const Element& e) {
      Element x = apply(P.second, e);
      return join(x, zero(A, x.deg + 1), x);
    }, "alpha_" + A->name);
  }

  // eta(a, f, b) = ((a, f, b), (f, 0, 0), (b, 0, b)).
  Morphism contract(const Object& A) const {
    Object MA = path_object(A);
    return morphism(MA, path_object(MA), [this, A](const Element& e) {
      auto [a, f, b] = split(A, e);
      return join(e, join(f, zero(A, f.deg + 1), zero(A, f.deg)), join(b, zero(A, b.deg + 1), b));
    }, "eta_" + A->name);
  }

  Morphism identity(const Object& A) const {
    Morphism m{A, A, {}, "id_" + A->name};
    for (int n = A->lo; n <= A->hi; ++n) m.mats[n] = Matrix<F>::identity(A->dim(n));
    return m;
  }

  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (f.cod->name != g.dom->name)
      throw ContractViolation("compose", g.label + " o " + f.label + ": " + f.cod->name + " is not " + g.dom->name);
    Morphism m{f.dom, g.cod, {}, g.label + " o " + f.label};
    for (int n = f.dom->lo; n <= f.dom->hi; ++n) m.mats[n] = g.at(n) * f.at(n);
    return m;
  }

  Morphism terminal_map(const Object& A) const { return morphism(A, terminal(), [](const Element& e) {
      return Element{e.deg, {}};
    }, "!_" + A->name); }

  // The matrix of a degree-preserving linear function, read off on basis vectors.
  Morphism morphism(const Object& dom, const Object& cod, const std::function<Element(const Element&)>& fn,
                    std::string label) const {
    Morphism m{dom, cod, {}, std::move(label)};
    for (int n = dom->lo; n <= dom->hi; ++n) {
      Matrix<F> mat(cod->dim(n), dom->dim(n));
      for (int c = 0; c < dom->dim(n); ++c) {
        Element img = fn(basis_vector(dom, n, c));
        if (img.deg != n || static_cast<int>(img.v.size()) != cod->dim(n))
          throw InternalInconsistency("morphism '" + m.label + "': image of a degree-" + std::to_string(n) +
                                      " basis vector has the wrong shape");
        for (int r = 0; r < cod->dim(n); ++r) mat(r, c) = img.v[r];
      }
      m.mats[n] = mat;
    }
    return m;
  }

  Element apply(const Morphism& f, const Element& x) const {
    if (static_cast<int>(x.v.size()) != f.dom->dim(x.deg))
      throw ContractViolation("apply", "element not in the domain of " + f.label);
    if (f.cod->dim(x.deg) == 0) return {x.deg, {}};
    return {x.deg, f.at(x.deg) * x.v};
  }

  // A basis, which decides linear laws; a sample of it above the configured limit.
  Probes<Element> probes(const Object& A, const ProbeConfig& cfg, Rng& rng) const {
    std::vector<Element> basis;
    for (int n = A->lo; n <= A->hi; ++n)
      for (int c = 0; c < A->dim(n); ++c) basis.push_back(basis_vector(A, n, c));
    return subsample(basis, cfg, rng);
  }

  Element basis_vector(const Object& A, int n, int c) const {
    Element e = zero(A, n);
    e.v[c] = F(1);
    return e;
  }
  Element zero(const Object& A, int n) const { return {n, std::vector<F>(A->dim(n), F(0))}; }
  Element add(Element a, const Element& b) const {
    for (std::size_t i = 0; i < a.v.size(); ++i) a.v[i] += b.v[i];
    return a;
  }
  Element neg(Element a) const {
    for (auto& x : a.v) x = -x;
    return a;
  }

  // The chain-map condition d f = f d in every degree.
  bool is_chain_map(const Morphism& f) const {
    for (int n = std::min(f.dom->lo, f.cod->lo); n <= std::max(f.dom->hi, f.cod->hi) + 1; ++n)
      if (!(f.cod->diff(n) * f.at(n) == f.at(n - 1) * f.dom->diff(n))) return false;
    return true;
  }

  nlohmann::ordered_json to_json(const Object&, const Element& e) const {
    nlohmann::ordered_json v = nlohmann::ordered_json::array();
    for (auto& x : e.v) v.push_back(FieldTraits<F>::format(x));
    return {{"deg", e.deg}, {"v", v}};
  }

 private:
  std::vector<F> coordinates(const CObj<F>& P, int n, const std::vector<F>& w) const {
    if (n < P.lo || n > P.hi) return {};
    const auto& fr = P.free[n - P.lo];
    std::vector<F> coords(fr.size());
    for (std::size_t i = 0; i < fr.size(); ++i) coords[i] = w[fr[i]];
    if (!(P.basis[n - P.lo] * coords == w))
      throw ContractViolation("pair", "components do not agree in the base");
    return coords;
  }
};

// ---- JSON -----------------------------------------------------------------

template <class F>
F field_from_json(const nlohmann::json& v) {
  if (v.is_string()) return FieldTraits<F>::parse(v.get<std::string>());
  if (v.is_number_integer()) return F(v.get<long long>());
  throw InputError("chain: matrix entries must be integers or \"p/q\" strings");
}

// Row-major matrix whose row i is the image of basis vector e_i; returned in the column convention.
template <class F>
Matrix<F> images_matrix_from_json(const nlohmann::json& rows, int dom_dim, int cod_dim, const std::string& what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dom_dim)
    throw InputError(what + ": expected " + std::to_string(dom_dim) + " rows");
  Matrix<F> m(cod_dim, dom_dim);
  for (int i = 0; i < dom_dim; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != cod_dim)
      throw InputError(what + ": row " + std::to_string(i) + " needs " + std::to_string(cod_dim) + " entries");
    for (int j = 0; j < cod_dim; ++j) m(j, i) = field_from_json<F>(rows[i][j]);
  }
  return m;
}

// {"range": [lo, hi], "dims": [d_lo, ..], "differentials": {"n": rows}}; a missing degree is zero.
template <class F>
CObjPtr<F> complex_from_json(const nlohmann::json& j, const std::string& name) {
  if (!j.is_object() || !j.contains("range") || !j.contains("dims"))
    throw InputError("chain complex: expected {\"range\", \"dims\", \"differentials\"}");
  auto range = j.at("range").get<std::vector<int>>();
  if (range.size() != 2 || range[1] < range[0]) throw InputError("chain complex: range must be [lo, hi]");
  auto dims = j.at("dims").get<std::vector<int>>();
  if (static_cast<int>(dims.size()) != range[1] - range[0] + 1)
    throw InputError("chain complex: dims must list every degree in the range");
  auto dim = [&](int n) { return n < range[0] || n > range[1] ? 0 : dims[n - range[0]]; };
  const nlohmann::json diffs = j.value("differentials", nlohmann::json::object());
  std::vector<Matrix<F>> ds;
  for (int n = range[0]; n <= range[1]; ++n) {
    auto key = std::to_string(n);
    if (diffs.contains(key))
      ds.push_back(images_matrix_from_json<F>(diffs.at(key), dim(n), dim(n - 1), "differential " + key));
    else
      ds.push_back(Matrix<F>(dim(n - 1), dim(n)));
  }
  return make_complex<F>(name, range[0], dims, ds);
}

// {"matrices": {"n": rows}} with rows the images of basis vectors; checked to be a chain map.
template <class F>
CMor<F> chain_map_from_json(const ChainModel<F>& M, const CObjPtr<F>& dom, const CObjPtr<F>& cod,
                            const nlohmann::json& j, const std::string& label) {
  CMor<F> f{dom, cod, {}, label};
  const nlohmann::json mats = j.value("matrices", nlohmann::json::object());
  for (int n = dom->lo; n <= dom->hi; ++n) {
    auto key = std::to_string(n);
    if (mats.contains(key))
      f.mats[n] = images_matrix_from_json<F>(mats.at(key), dom->dim(n), cod->dim(n), label + " degree " + key);
  }
  if (!M.is_chain_map(f)) throw InputError("chain map '" + label + "' does not commute with the differentials");
  return f;
}

// A random bounded complex: each differential is a random combination of a kernel basis of
// the one below, so d o d = 0 by construction.
template <class F>
CObjPtr<F> random_complex(Rng& rng, const std::string& name, int lo, int hi, int max_dim) {
  std::vector<int> dims;
  for (int n = lo; n <= hi; ++n) dims.push_back(1 + static_cast<int>(pick(rng, max_dim)));
  auto dim = [&](int n) { return n < lo || n > hi ? 0 : dims[n - lo]; };
  std::vector<Matrix<F>> ds;
  for (int n = lo; n <= hi; ++n) {
    Matrix<F> d(dim(n - 1), dim(n));
    if (n > lo) {
      Matrix<F> K = kernel(ds.back());
      Matrix<F> R(K.cols(), dim(n));
      for (int r = 0; r < R.rows(); ++r)
        for (int c = 0; c < R.cols(); ++c) R(r, c) = F(static_cast<long long>(pick(rng, 5)) - 2);
      d = K * R;
    }
    ds.push_back(d);
  }
  return make_complex<F>(name, lo, dims, ds);
}

// A random null-homotopic chain map d h + h d for a random degree-raising h.
template <class F>
CMor<F> random_chain_map(Rng& rng, const ChainModel<F>& M, const CObjPtr<F>& A, const CObjPtr<F>& B,
                         const std::string& label) {
  CMor<F> f{A, B, {}, label};
  std::map<int, Matrix<F>> h;  // h_n : A_n -> B_{n+1}
  for (int n = A->lo - 1; n <= A->hi; ++n) {
    Matrix<F> m(B->dim(n + 1), A->dim(n));
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) m(r, c) = F(static_cast<long long>(pick(rng, 3)) - 1);
    h[n] = m;
  }
  for (int n = A->lo; n <= A->hi; ++n) f.mats[n] = B->diff(n + 1) * h[n] + h[n - 1] * A->diff(n);
  if (!M.is_chain_map(f)) throw InternalInconsistency("random_chain_map: not a chain map");
  return f;
}

}  // namespace pathobj
