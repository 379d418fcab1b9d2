#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pathobj/errors.hpp"
#include "pathobj/model/derived.hpp"
#include "pathobj/wfs.hpp"

namespace pathobj {

// A type over ctx: the R-map proj : total -> ctx with its lifting operator.
template <class Model>
struct DependentType {
  typename Model::Object ctx, total;
  typename Model::Morphism proj;
  RStructure<Model> r;
  std::string name;
};

// M_G(x): paths in X sent by x to constant paths. P = MX x_{MG} (M1 x G) via (Mx, alpha).
template <class Model>
struct FiberwisePaths {
  typename Model::Morphism x;
  typename Model::Pullback P;  // first = j : P -> MX, second = u : P -> M1 x G
  typename Model::Pullback lengths;  // M1 x G
  typename Model::Morphism Mx, shape, alpha;  // Mx, M!_X, alpha_{1,G}
  typename Model::Morphism s, t, r;  // s_x, t_x : P -> X and r_x : X -> P
  typename Model::Morphism sX, m, rev;  // s_X, m_X, tau_X
  typename Model::Pullback C;  // composable paths of X
};

// A[f] over D for f : D -> G, with f+ : D.A[f] -> G.A. Y = D x_G X via (f, x).
template <class Model>
struct Substitution {
  DependentType<Model> type;
  typename Model::Pullback Y;
  typename Model::Morphism f, fplus;
};

template <class Model>
struct IdType {
  DependentType<Model> A;
  FiberwisePaths<Model> fp;
  typename Model::Pullback XX;  // G.A.A+ = X x_G X via (x, x)
  typename Model::Morphism diagonal;  // X -> XX
  DependentType<Model> id;  // (s_x, t_x) : M_G(x) -> XX
  LStructure<Model> refl;  // on r_x, with retraction t_x
};

// One Frobenius step: B pulled back along an L-map i, with the L-structure on i+.
template <class Model>
struct FrobeniusStep {
  Substitution<Model> sub;
  LStructure<Model> l;
};

template <class Model>
class IdModel {
 public:
  using Object = typename Model::Object;
  using Element = typename Model::Element;
  using Morphism = typename Model::Morphism;
  using Pullback = typename Model::Pullback;
  using T = DependentType<Model>;
  using FP = FiberwisePaths<Model>;

  explicit IdModel(const Model& M) : M_(M), W_(M) {}
  const Model& model() const { return M_; }
  const Wfs<Model>& wfs() const { return W_; }

  // ---- types -----------------------------------------------------------------

  T closed(const Object& X) const { return {M_.terminal(), X, M_.terminal_map(X), W_.fibrant(X), X->name}; }

  // The path fibration rho_u : Pu -> cod u with its canonical lift.
  T path_fibration(const Morphism& u) const {
    auto F = W_.factorize(u);
    return {u.cod, F.P.object, F.rho, W_.pi(F), "P(" + u.label + ")"};
  }

  // Pullback along f with q(phi, w) = (s phi, p(Mf phi, f+ w)).
  Substitution<Model> subst(const T& A, const Morphism& f) const {
    if (f.cod->name != A.ctx->name) throw ContractViolation("subst", f.label + " does not land in " + A.ctx->name);
    const Model& M = M_;
    const auto Y = M.pullback(f, A.proj);
    const auto Mf = M.map_path(f), sD = M.source(f.dom);
    const auto op = A.r.op;
    auto q = [&M, Y, Mf, sD, op](const Element& phi, const Element& w) {
      return M.pair(Y, M.apply(sD, phi), op(M.apply(Mf, phi), M.apply(Y.second, w)));
    };
    std::string name = A.name + "[" + f.label + "]";
    return {{f.dom, Y.object, Y.first, {Y.first, q, "q_" + name}, name}, Y, f, Y.second};
  }

  // ---- fiberwise path objects ---------------------------------------------------

  FP fiberwise(const Morphism& x) const {
    const Model& M = M_;
    const auto X = x.dom, G = x.cod;
    const auto lengths = M.product(M.path_object(M.terminal()), G);
    const auto alpha = M.strength(G);
    const auto Mx = M.map_path(x);
    const auto P = M.pullback(Mx, alpha);
    FP fp{x, P, lengths, Mx, M.map_path(M.terminal_map(X)), alpha, {}, {}, {},
          M.source(X), M.compose_paths(X), M.reverse_paths(X), M.composable(X)};
    fp.s = M.compose(M.source(X), P.first);
    fp.t = M.compose(M.target(X), P.first);
    const auto rX = M.refl(X);
    IdModel self = *this;
    fp.r = M.morphism(X, P.object, [self, fp, rX](const Element& e) { return self.embed(fp, self.M_.apply(rX, e)); },
                      "r_" + x.label);
    return fp;
  }

  bool member(const FP& fp, const Element& xi) const {
    const Element c = M_.apply(fp.x, M_.apply(fp.sX, xi));
    return M_.apply(fp.Mx, xi) == M_.apply(fp.alpha, M_.pair(fp.lengths, M_.apply(fp.shape, xi), c));
  }

  // A path of X constant over G, as an element of M_G(x).
  Element embed(const FP& fp, const Element& xi) const {
    const Element c = M_.apply(fp.x, M_.apply(fp.sX, xi));
    Element u = M_.pair(fp.lengths, M_.apply(fp.shape, xi), c);
    if (!(M_.apply(fp.Mx, xi) == M_.apply(fp.alpha, u)))
      throw ContractViolation("fiberwise path", "path is not constant over " + fp.x.cod->name);
    return M_.pair(fp.P, xi, u);
  }

  Element path_of(const FP& fp, const Element& xi) const { return M_.apply(fp.P.first, xi); }

  // m_x(b, a): a then b.
  Element compose(const FP& fp, const Element& b, const Element& a) const {
    return embed(fp, M_.apply(fp.m, M_.pair(fp.C, path_of(fp, b), path_of(fp, a))));
  }
  Element reverse(const FP& fp, const Element& a) const { return embed(fp, M_.apply(fp.rev, path_of(fp, a))); }

  // The homotopy id => r_x t_x, trivial on X: (eta_X j, alpha_{M1,G} (eta_1 x G) u) in M(M_G(x)).
  LStructure<Model> deformation(const FP& fp) const {
    const Model& M = M_;
    const auto P = fp.P;
    const auto L = fp.lengths;
    const auto etaX = M.contract(fp.x.dom), eta1 = M.contract(M.terminal());
    const auto D = derived(M);
    const auto S = D.strength(M.path_object(M.terminal()), fp.x.cod);
    auto fn = [&M, P, L, etaX, eta1, D, S](const Element& xi) {
      Element u = M.apply(P.second, xi);
      Element lengths_part = D.strength_apply(S, M.apply(eta1, M.apply(L.first, u)), M.apply(L.second, u));
      return M.pair_paths(P, M.apply(etaX, M.apply(P.first, xi)), lengths_part);
    };
    auto phi = M.morphism(P.object, M.path_object(P.object), fn, "phi_" + fp.x.label);
    return {fp.r, fp.t, {phi, M.identity(P.object), M.compose(fp.r, fp.t)}, "refl_" + fp.x.label};
  }

  // ---- the two lifting lemmas ------------------------------------------------------

  // delta : MX -> M_G(x) with s_x delta = s_X, t_x delta(xi) = p(Mx xi, t xi), delta r_X = r_x.
  Morphism precart(const T& A, const FP& fp) const {
    const Model& M = M_;
    const auto X = A.total;
    const auto Fx = W_.factorize(A.proj);
    const auto Px = Fx.P;
    const auto Mx = fp.Mx;
    const auto tX = M.target(X);
    const auto xi_map = M.morphism(
        M.path_object(X), Px.object,
        [&M, Px, Mx, tX](const Element& p) { return M.pair(Px, M.apply(Mx, p), M.apply(tX, p)); }, "xi_" + A.name);
    const auto Mxi = M.map_path(xi_map);
    const auto Mp = M.map_path(W_.lift_map(A.r, Fx));
    const auto tau = M.reverse_paths(X), tauM = M.reverse_paths(M.path_object(X)), Mtau = M.map_path(tau);
    const auto eta = M.contract(X);
    IdModel self = *this;
    auto fn = [self, fp, Mp, Mxi, tau, tauM, Mtau, eta](const Element& p) {
      const Model& M = self.M_;
      Element pp = M.apply(tauM, M.apply(Mtau, M.apply(eta, M.apply(tau, p))));
      return self.embed(fp, M.apply(Mp, M.apply(Mxi, pp)));
    };
    return M.morphism(M.path_object(X), fp.P.object, fn, "delta_" + A.name);
  }

  // psi*(xi) for psi : c' => c in G and xi in M_G(x) constant over c; Mp of (const at psi, j xi).
  struct Transport {
    FP fp;
    Pullback Px;
    Pullback lengthsMG;  // M1 x MG
    Morphism alphaMG, Mp;
  };
  Transport transport(const T& A, const FP& fp) const {
    const auto Fx = W_.factorize(A.proj);
    const auto MG = M_.path_object(A.ctx);
    return {fp, Fx.P, M_.product(M_.path_object(M_.terminal()), MG), M_.strength(MG),
            M_.map_path(W_.lift_map(A.r, Fx))};
  }
  Element transport_apply(const Transport& T_, const Element& psi, const Element& xi) const {
    const Model& M = M_;
    Element len = M.apply(T_.fp.lengths.first, M.apply(T_.fp.P.second, xi));
    Element const_psi = M.apply(T_.alphaMG, M.pair(T_.lengthsMG, len, psi));
    Element theta = M.pair_paths(T_.Px, const_psi, path_of(T_.fp, xi));
    return embed(T_.fp, M.apply(T_.Mp, theta));
  }

  // ---- identity types ---------------------------------------------------------------

  IdType<Model> id_type(const T& A) const {
    const Model& M = M_;
    const auto fp = fiberwise(A.proj);
    const auto XX = M.pullback(A.proj, A.proj);
    const auto diagonal = M.morphism(A.total, XX.object, [&M, XX](const Element& e) { return M.pair(XX, e, e); },
                                     "diag_" + A.name);
    const auto s = fp.s, t = fp.t;
    const auto st = M.morphism(fp.P.object, XX.object,
                               [&M, XX, s, t](const Element& xi) { return M.pair(XX, M.apply(s, xi), M.apply(t, xi)); },
                               "st_" + A.name);
    const auto delta = precart(A, fp);
    const auto tr = transport(A, fp);
    const auto M1st = M.map_path(XX.first), M2nd = M.map_path(XX.second);
    const auto Mx = fp.Mx;
    IdModel self = *this;
    // chi' = (phi2~)^o . psi*(chi) . phi1~, composed as m(m(rev phi2~, psi* chi), phi1~).
    auto op = [self, fp, delta, tr, M1st, M2nd, Mx](const Element& Phi, const Element& chi) {
      const Model& M = self.M_;
      Element phi1 = M.apply(M1st, Phi), phi2 = M.apply(M2nd, Phi);
      Element psi = M.apply(Mx, phi1);
      Element d1 = M.apply(delta, phi1), d2 = M.apply(delta, phi2);
      Element mid = self.transport_apply(tr, psi, chi);
      return self.compose(fp, self.compose(fp, self.reverse(fp, d2), mid), d1);
    };
    T id{XX.object, fp.P.object, st, {st, op, "chi_" + A.name}, "Id_" + A.name};
    return {A, fp, XX, diagonal, id, deformation(fp)};
  }

  // J(C, d) = p_C(phi(xi), d(t_x xi)) for C over M_G(x) and d with proj_C d = r_x.
  Morphism j_elim(const IdType<Model>& I, const T& C, const Morphism& d) const {
    if (C.ctx->name != I.fp.P.object->name) throw ContractViolation("j_elim", C.name + " is not a family over " + I.id.name);
    return W_.lift(I.refl, C.r, d, M_.identity(C.ctx));
  }

  // B over A pulled back along the L-map i : X -> A gives an L-structure on i+ : i*B -> B.
  // kbar(b) = (k f b, phi*(b)) with phi = (theta f)^o, and thetabar = (lift of phi at b)^o.
  FrobeniusStep<Model> frobenius(const T& B, const LStructure<Model>& l) const {
    const Model& M = M_;
    auto sub = subst(B, l.f);
    const auto Y = sub.Y;
    const auto f = B.proj, k = l.k, th = l.theta.h;
    const auto tau = M.reverse_paths(B.ctx), tauB = M.reverse_paths(B.total);
    const auto op = B.r.op;
    const auto pl = W_.path_lifter(B.r);
    const Wfs<Model> W = W_;
    auto phi = [&M, f, th, tau](const Element& b) { return M.apply(tau, M.apply(th, M.apply(f, b))); };
    auto kbar = M.morphism(
        B.total, Y.object,
        [&M, Y, f, k, op, phi](const Element& b) { return M.pair(Y, M.apply(k, M.apply(f, b)), op(phi(b), b)); },
        "kbar_" + l.name);
    auto thbar = M.morphism(
        B.total, M.path_object(B.total),
        [&M, W, pl, tauB, phi](const Element& b) { return M.apply(tauB, W.path_lift(pl, phi(b), b)); },
        "thetabar_" + l.name);
    LStructure<Model> out{sub.fplus, kbar, {thbar, M.identity(B.total), M.compose(sub.fplus, kbar)},
                          l.name + "+" + B.name};
    return {sub, out};
  }

  // The chain B_1, ..., B_n pulled back along r_A by iterated Frobenius, leftmost first.
  std::vector<FrobeniusStep<Model>> strong_context(const IdType<Model>& I, const std::vector<T>& chain) const {
    std::vector<FrobeniusStep<Model>> steps;
    LStructure<Model> l = I.refl;
    for (auto& B : chain) {
      if (B.ctx->name != l.f.cod->name) throw ContractViolation("strong_j", B.name + " is not over " + l.f.cod->name);
      steps.push_back(frobenius(B, l));
      l = steps.back().l;
    }
    return steps;
  }

  // J(chain, C, d) for C over the last total object and d with proj_C d = (r_A)^{+...+}.
  Morphism strong_j(const IdType<Model>& I, const std::vector<FrobeniusStep<Model>>& steps, const T& C,
                    const Morphism& d) const {
    const LStructure<Model>& l = steps.empty() ? I.refl : steps.back().l;
    if (C.ctx->name != l.f.cod->name) throw ContractViolation("strong_j", C.name + " is not over " + l.f.cod->name);
    return W_.lift(l, C.r, d, M_.identity(C.ctx));
  }

  // ---- stability -------------------------------------------------------------------------

  // Id_{A[f]} against Id_A[f++], with the canonical comparison and its inverse.
  struct Stability {
    Substitution<Model> Af;
    IdType<Model> IdAf;
    IdType<Model> IdA;
    Morphism fpp;  // Y x_D Y -> X x_G X
    Substitution<Model> pulled;  // Id_A[f++]
    Morphism fppp;  // M_D(y) -> M_G(x)
    Morphism to, from;  // M_D(y) <-> Id_A[f++] total
  };
  Stability stability(const T& A, const Morphism& f) const {
    const Model& M = M_;
    auto Af = subst(A, f);
    auto IdAf = id_type(Af.type);
    auto IdA = id_type(A);
    const auto YY = IdAf.XX, XX = IdA.XX;
    const auto g = Af.fplus;
    const auto fpp = [&] {
      if constexpr (requires { M.pullback_map(YY, XX, g, g, f.label); })
        return M.pullback_map(YY, XX, g, g, f.label + "++");
      else
        return M.morphism(
            YY.object, XX.object,
            [&M, YY, XX, g](const Element& w) {
              return M.pair(XX, M.apply(g, M.apply(YY.first, w)), M.apply(g, M.apply(YY.second, w)));
            },
            f.label + "++");
    }();
    auto pulled = subst(IdA.id, fpp);
    const auto Mg = M.map_path(g);
    const auto fpY = IdAf.fp, fpX = IdA.fp;
    IdModel self = *this;
    const auto fppp = M.morphism(
        fpY.P.object, fpX.P.object,
        [self, Mg, fpY, fpX](const Element& xi) { return self.embed(fpX, self.M_.apply(Mg, self.path_of(fpY, xi))); },
        f.label + "+++");
    const auto st = IdAf.id.proj;
    const auto Q = pulled.Y;
    const auto to = M.morphism(
        fpY.P.object, Q.object, [&M, Q, st, fppp](const Element& xi) { return M.pair(Q, M.apply(st, xi), M.apply(fppp, xi)); },
        "iso_" + f.label);
    // Back: the path in Y = D x_G X is (constant at y(w1) of chi's shape, chi).
    const auto Yp = Af.Y;
    const auto alphaD = M.strength(f.dom);
    const auto LD = M.product(M.path_object(M.terminal()), f.dom);
    const auto shapeX = fpX.shape;
    const auto from = M.morphism(
        Q.object, fpY.P.object,
        [self, Q, YY, Yp, alphaD, LD, shapeX, fpX, fpY](const Element& v) {
          const Model& M = self.M_;
          Element w1 = M.apply(YY.first, M.apply(Q.first, v));
          Element chi = self.path_of(fpX, M.apply(Q.second, v));
          Element c = M.apply(alphaD, M.pair(LD, M.apply(shapeX, chi), M.apply(Yp.first, w1)));
          return self.embed(fpY, M.pair_paths(Yp, c, chi));
        },
        "iso_inv_" + f.label);
    return {Af, IdAf, IdA, fpp, pulled, fppp, to, from};
  }

 private:
  const Model& M_;
  Wfs<Model> W_;
};

}  // namespace pathobj
