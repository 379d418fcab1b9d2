#pragma once

#include <functional>
#include <string>
#include <utility>

#include "pathobj/errors.hpp"
#include "pathobj/fault.hpp"

namespace pathobj {

// h : V -> MY with s h = from and t h = to.
template <class Model>
struct Homotopy {
  typename Model::Morphism h, from, to;
};

// f = rho o lambda through P = MY x_Y X, the pullback of t_Y along f.
template <class Model>
struct Factorization {
  typename Model::Morphism f;
  typename Model::Pullback P;  // first = d : P -> MY, second = e : P -> X
  typename Model::Morphism lambda, rho;
};

// On f : X -> Y: k f = id_X, theta : id_Y => f k, and theta f = r f.
template <class Model>
struct LStructure {
  typename Model::Morphism f, k;
  Homotopy<Model> theta;
  std::string name;
};

// On f : X -> Y: op(phi, x) for t(phi) = f(x), with op(r f x, x) = x and f op(phi, x) = s(phi).
template <class Model>
struct RStructure {
  using Element = typename Model::Element;
  typename Model::Morphism f;
  std::function<Element(const Element& phi, const Element& x)> op;
  std::string name;
};

// A commuting square from f : A -> B to g : X -> Y, with top a : A -> X and bottom b : B -> Y.
template <class Model>
struct Square {
  typename Model::Morphism f, g, a, b;
  std::string label;
};

template <class Model>
class Wfs {
 public:
  using Object = typename Model::Object;
  using Element = typename Model::Element;
  using Morphism = typename Model::Morphism;
  using H = Homotopy<Model>;
  using F = Factorization<Model>;
  using L = LStructure<Model>;
  using R = RStructure<Model>;

  explicit Wfs(const Model& M) : M_(M) {}
  const Model& model() const { return M_; }

  // ---- homotopies ----------------------------------------------------------

  H identity(const Morphism& f) const { return {M_.compose(M_.refl(f.cod), f), f, f}; }

  // a : f => g and b : g => k give f => k.
  H vcompose(const H& a, const H& b) const {
    const Model& M = M_;
    const auto C = M.composable(a.from.cod);
    const auto m = M.compose_paths(a.from.cod);
    const auto ah = a.h, bh = b.h;
    auto fn = [&M, C, m, ah, bh](const Element& v) { return M.apply(m, M.pair(C, M.apply(bh, v), M.apply(ah, v))); };
    return {M.morphism(ah.dom, ah.cod, fn, "(" + bh.label + " . " + ah.label + ")"), a.from, b.to};
  }

  // k a : k f => k g.
  H whisker_left(const Morphism& k, const H& a) const {
    return {M_.compose(M_.map_path(k), a.h), M_.compose(k, a.from), M_.compose(k, a.to)};
  }

  // a f : g f => h f.
  H whisker_right(const H& a, const Morphism& f) const {
    return {M_.compose(a.h, f), M_.compose(a.from, f), M_.compose(a.to, f)};
  }

  H reverse(const H& a) const { return {M_.compose(M_.reverse_paths(a.from.cod), a.h), a.to, a.from}; }

  // ---- factorization -------------------------------------------------------

  F factorize(const Morphism& f) const {
    const Model& M = M_;
    auto P = M.pullback(M.target(f.cod), f);
    const auto r = M.refl(f.cod);
    auto lam = M.morphism(
        f.dom, P.object, [&M, P, r, f](const Element& x) { return M.pair(P, M.apply(r, M.apply(f, x)), x); },
        "lambda_" + f.label);
    auto rho = M.compose(M.source(f.cod), P.first);
    rho.label = "rho_" + f.label;
    return {f, P, lam, rho};
  }

  // P(a, b) : Pf -> Pg, (phi, u) |-> (Mb phi, a u).
  Morphism fill(const F& Ff, const F& Fg, const Morphism& a, const Morphism& b) const {
    const Model& M = M_;
    const auto Mb = M.map_path(b);
    const auto P = Ff.P, Q = Fg.P;
    auto fn = [&M, P, Q, Mb, a](const Element& w) {
      return M.pair(Q, M.apply(Mb, M.apply(P.first, w)), M.apply(a, M.apply(P.second, w)));
    };
    return M.morphism(P.object, Q.object, fn, "P(" + a.label + "," + b.label + ")");
  }

  // L-structure on lambda_f: retraction e_f and theta(phi, x) = (eta phi, const path at x of phi's shape).
  L sigma(const F& Ff) const {
    const Model& M = M_;
    const auto P = Ff.P;
    const auto Y = Ff.f.cod, X = Ff.f.dom;
    const auto eta = M.contract(Y);
    const auto shape = M.map_path(M.terminal_map(Y));
    const auto lengths = M.product(M.path_object(M.terminal()), X);
    const auto alpha = M.strength(X);
    auto fn = [&M, P, eta, shape, lengths, alpha](const Element& w) {
      Element phi = M.apply(P.first, w), x = M.apply(P.second, w);
      return M.pair_paths(P, M.apply(eta, phi), M.apply(alpha, M.pair(lengths, M.apply(shape, phi), x)));
    };
    auto theta = M.morphism(P.object, M.path_object(P.object), fn, "theta_" + Ff.f.label);
    H hom{theta, M.identity(P.object), M.compose(Ff.lambda, P.second)};
    return {Ff.lambda, P.second, hom, "sigma_" + Ff.f.label};
  }

  // R-structure on rho_f: psi into s(phi) lifts to (m(phi, psi), x).
  R pi(const F& Ff) const {
    const Model& M = M_;
    const auto P = Ff.P;
    const auto C = M.composable(Ff.f.cod);
    const auto m = M.compose_paths(Ff.f.cod);
    auto op = [&M, P, C, m](const Element& psi, const Element& w) {
      Element phi = M.apply(P.first, w), x = M.apply(P.second, w);
      Element c = fault::on(fault::pi_order) ? M.pair(C, psi, phi) : M.pair(C, phi, psi);
      return M.pair(P, M.apply(m, c), x);
    };
    return {Ff.rho, op, "pi_" + Ff.f.label};
  }

  // Constant lifting on X -> 1.
  R fibrant(const Object& X) const {
    return {M_.terminal_map(X), [](const Element&, const Element& x) { return x; }, "const_" + X->name};
  }

  // On id_X the lift of phi is its source.
  R trivial(const Object& X) const {
    const Model& M = M_;
    const auto s = M.source(X);
    return {M.identity(X), [&M, s](const Element& phi, const Element&) { return M.apply(s, phi); },
            "source_" + X->name};
  }

  // The trivial L-structure on id_X.
  L trivial_l(const Object& X) const {
    auto id = M_.identity(X);
    return {id, id, identity(id), "refl_" + X->name};
  }

  // The induced section B -> Pf of an L-map f : A -> B, b |-> (theta b, k b).
  Morphism section(const L& l, const F& Ff) const {
    const Model& M = M_;
    const auto P = Ff.P;
    const auto th = l.theta.h, k = l.k;
    return M.morphism(l.f.cod, P.object,
                      [&M, P, th, k](const Element& b) { return M.pair(P, M.apply(th, b), M.apply(k, b)); },
                      "section_" + l.name);
  }

  // The R-structure as a morphism Pf -> X.
  Morphism lift_map(const R& r, const F& Ff) const {
    const Model& M = M_;
    const auto P = Ff.P;
    const auto op = r.op;
    return M.morphism(P.object, r.f.dom,
                      [&M, P, op](const Element& w) { return op(M.apply(P.first, w), M.apply(P.second, w)); },
                      "p_" + r.name);
  }

  // Diagonal filler j = p o P(h, k) o section for a square (h, k) from l.f to r.f.
  Morphism lift(const L& l, const R& r, const Morphism& h, const Morphism& k) const {
    const Model& M = M_;
    const auto th = l.theta.h, lk = l.k, Mk = M.map_path(k);
    const auto op = r.op;
    auto fn = [&M, th, lk, Mk, h, op](const Element& b) {
      return op(M.apply(Mk, M.apply(th, b)), M.apply(h, M.apply(lk, b)));
    };
    return M.morphism(l.f.cod, r.f.dom, fn, "lift(" + l.name + "," + r.name + ")");
  }

  // The lift of a whole path: phi with t(phi) = f(x) gives phibar in MX, from op(phi, x) to x,
  // with M f phibar = phi. Equal to M p o theta_f at (phi, x).
  struct PathLifter {
    F Ff;
    Morphism theta, Mp;
  };
  PathLifter path_lifter(const R& r) const {
    F Ff = factorize(r.f);
    return {Ff, sigma(Ff).theta.h, M_.map_path(lift_map(r, Ff))};
  }
  Element path_lift(const PathLifter& pl, const Element& phi, const Element& x) const {
    return M_.apply(pl.Mp, M_.apply(pl.theta, M_.pair(pl.Ff.P, phi, x)));
  }

 private:
  const Model& M_;
};

}  // namespace pathobj
