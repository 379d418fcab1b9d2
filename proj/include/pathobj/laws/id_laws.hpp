#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "pathobj/id_model.hpp"
#include "pathobj/laws/report.hpp"

namespace pathobj {

// A type and a morphism into its context, along which it is substituted.
template <class Model>
struct Situation {
  DependentType<Model> A;
  typename Model::Morphism f;
};

// Families over Id_A used to exercise J, each with its d : X -> C with proj_C d = r_x.
template <class Model>
struct Eliminator {
  DependentType<Model> C;
  typename Model::Morphism d;
  std::string label;
};

template <class Model>
std::vector<Eliminator<Model>> standard_eliminators(const IdModel<Model>& I, const IdType<Model>& T) {
  const Model& M = I.model();
  const auto& fp = T.fp;
  const auto x = T.A.proj, r = fp.r;
  std::vector<Eliminator<Model>> out;
  auto add = [&](const Substitution<Model>& S, std::function<typename Model::Element(const typename Model::Element&)> second,
                 const std::string& label) {
    const auto Y = S.Y;
    auto d = M.morphism(T.A.total, Y.object,
                        [&M, Y, r, second](const typename Model::Element& e) { return M.pair(Y, M.apply(r, e), second(e)); },
                        "d_" + label);
    out.push_back({S.type, d, label});
  };
  // Points over the start of a path: J is transport.
  add(I.subst(T.A, M.compose(x, fp.s)), [](const auto& e) { return e; }, "transport");
  // A constant family.
  add(I.subst(I.closed(T.A.total), M.terminal_map(fp.P.object)), [](const auto& e) { return e; }, "constant");
  // Points over the end of a path.
  add(I.subst(T.A, M.compose(x, fp.t)), [](const auto& e) { return e; }, "endpoint");
  return out;
}

template <class Model>
SuiteReport id_suite(const Model& M, const DependentType<Model>& A, ProbeConfig cfg, std::uint64_t seed) {
  using E = typename Model::Element;
  using J = std::optional<nlohmann::ordered_json>;
  using Case = typename LawRunner<Model>::Case;
  const auto start = std::chrono::steady_clock::now();
  LawRunner<Model> run(M, cfg, seed);
  IdModel<Model> I(M);
  const Wfs<Model>& W = I.wfs();
  const auto T = I.id_type(A);
  const auto& fp = T.fp;
  const auto P = fp.P.object;
  const auto X = A.total, G = A.ctx;
  const auto x = A.proj;
  const auto MX = M.path_object(X), MP = M.path_object(P);
  const auto sX = M.source(X), tX = M.target(X), rX = M.refl(X);
  const auto op = A.r.op;

  auto differs = [&M](const auto& obj, const E& a, const E& b) -> J {
    if (a == b) return std::nullopt;
    return nlohmann::ordered_json{{"lhs", M.to_json(obj, a)}, {"rhs", M.to_json(obj, b)}};
  };

  // ---- fiberwise path object ------------------------------------------------------
  run.law("members are paths constant over " + G->name, "fiberwise/membership", P, [&](const E& xi) -> J {
    if (!I.member(fp, I.path_of(fp, xi))) return nlohmann::ordered_json{{"error", "not constant"}};
    return differs(P, I.embed(fp, I.path_of(fp, xi)), xi);
  });
  run.equal("r_x is the identity path", "fiberwise/identity-constant", X, MX,
            [&](const E& e) { return I.path_of(fp, M.apply(fp.r, e)); }, [&](const E& e) { return M.apply(rX, e); });
  const auto CP = M.pullback(fp.s, fp.t);
  run.law("composites of constant paths are constant", "fiberwise/composite-constant", CP.object, [&](const E& c) -> J {
    E b = M.apply(CP.first, c), a = M.apply(CP.second, c);
    E ba = I.compose(fp, b, a);
    if (auto d = differs(X, M.apply(fp.s, ba), M.apply(fp.s, a))) return d;
    return differs(X, M.apply(fp.t, ba), M.apply(fp.t, b));
  });

  // ---- diagonal factorization and the L-structure on r_x ------------------------------
  run.equal("(s_x, t_x) o r_x = diagonal", "diagonal/factorization", X, T.XX.object,
            [&](const E& e) { return M.apply(T.id.proj, M.apply(fp.r, e)); },
            [&](const E& e) { return M.apply(T.diagonal, e); });
  const auto& L = T.refl;
  run.equal("t_x o r_x = id", "diagonal/retraction", X, X, [&](const E& e) { return M.apply(L.k, M.apply(L.f, e)); },
            [](const E& e) { return e; });
  run.equal("phi runs from the identity", "diagonal/homotopy-source", P, P,
            [&](const E& xi) { return M.apply(M.source(P), M.apply(L.theta.h, xi)); }, [](const E& xi) { return xi; });
  run.equal("phi runs to r_x t_x", "diagonal/homotopy-target", P, P,
            [&](const E& xi) { return M.apply(M.target(P), M.apply(L.theta.h, xi)); },
            [&](const E& xi) { return M.apply(fp.r, M.apply(fp.t, xi)); });
  run.equal("phi o r_x = r o r_x", "diagonal/trivial-on-domain", X, MP,
            [&](const E& e) { return M.apply(L.theta.h, M.apply(fp.r, e)); },
            [&](const E& e) { return M.apply(M.refl(P), M.apply(fp.r, e)); });

  // ---- path liftings constant over the base -------------------------------------------------
  const auto delta = I.precart(A, fp);
  const auto Mx = fp.Mx;
  run.equal("s_x o delta = s_X", "precart/source", MX, X, [&](const E& p) { return M.apply(fp.s, M.apply(delta, p)); },
            [&](const E& p) { return M.apply(sX, p); });
  run.equal("t_x o delta = p o xi", "precart/target", MX, X, [&](const E& p) { return M.apply(fp.t, M.apply(delta, p)); },
            [&](const E& p) { return op(M.apply(Mx, p), M.apply(tX, p)); });
  run.equal("delta o r_X = r_x", "precart/identity", X, P, [&](const E& e) { return M.apply(delta, M.apply(rX, e)); },
            [&](const E& e) { return M.apply(fp.r, e); });

  const auto tr = I.transport(A, fp);
  const auto rG = M.refl(G), sG = M.source(G);
  run.equal("identity paths transport trivially", "transport/identity", P, P,
            [&](const E& xi) { return I.transport_apply(tr, M.apply(rG, M.apply(x, M.apply(fp.s, xi))), xi); },
            [](const E& xi) { return xi; });
  const auto Px = tr.Px;
  run.equal("psi*(r y) = r psi*(y)", "transport/refl", Px.object, P,
            [&](const E& w) { return I.transport_apply(tr, M.apply(Px.first, w), M.apply(fp.r, M.apply(Px.second, w))); },
            [&](const E& w) { return M.apply(fp.r, op(M.apply(Px.first, w), M.apply(Px.second, w))); });
  const auto over = M.pullback(M.target(G), M.compose(x, fp.s));
  run.law("psi*(xi) runs from psi*(s xi) to psi*(t xi)", "transport/endpoints", over.object, [&](const E& v) -> J {
    E psi = M.apply(over.first, v), xi = M.apply(over.second, v);
    E out = I.transport_apply(tr, psi, xi);
    if (auto d = differs(X, M.apply(fp.s, out), op(psi, M.apply(fp.s, xi)))) return d;
    return differs(X, M.apply(fp.t, out), op(psi, M.apply(fp.t, xi)));
  });

  // ---- the R-structure on (s_x, t_x) -----------------------------------------------------------
  const auto st = T.id.proj;
  const auto chi = T.id.r.op;
  const auto rXX = M.refl(T.XX.object), sXX = M.source(T.XX.object);
  run.equal("chi' = chi along identity paths", "id-lift/unit", P, P,
            [&](const E& c) { return chi(M.apply(rXX, M.apply(st, c)), c); }, [](const E& c) { return c; });
  const auto Pst = W.factorize(st).P;
  run.equal("chi' lies over the source pair", "id-lift/lift", Pst.object, T.XX.object,
            [&](const E& v) { return M.apply(st, chi(M.apply(Pst.first, v), M.apply(Pst.second, v))); },
            [&](const E& v) { return M.apply(sXX, M.apply(Pst.first, v)); });

  // ---- J ------------------------------------------------------------------------------------------
  const auto elims = standard_eliminators(I, T);
  std::vector<Case> comp, sect;
  for (auto& el : elims) {
    const auto j = I.j_elim(T, el.C, el.d);
    const auto d = el.d, piC = el.C.proj, r = fp.r;
    const auto Ctot = el.C.total;
    comp.push_back({el.label, X, [=, &M](const E& e) { return differs(Ctot, M.apply(j, M.apply(r, e)), M.apply(d, e)); }});
    sect.push_back({el.label, P, [=, &M](const E& xi) { return differs(P, M.apply(piC, M.apply(j, xi)), xi); }});
  }
  run.law_cases("J(C, d) o r_A = d", "j/computation", comp);
  run.law_cases("proj_C o J(C, d) = id", "j/section", sect);

  // Strong J with one and two parameters.
  std::vector<Case> s_comp, s_sect, frob_ret, frob_src, frob_tgt, frob_triv;
  {
    const auto B1 = I.subst(A, M.compose(x, fp.s)).type;
    const auto B2 = I.subst(A, M.compose(M.compose(x, fp.s), B1.proj)).type;
    for (std::size_t n = 1; n <= 2; ++n) {
      std::vector<DependentType<Model>> chain{B1};
      if (n == 2) chain.push_back(B2);
      const auto steps = I.strong_context(T, chain);
      const auto& last = steps.back();
      const auto ctx = last.sub.Y;
      // Points over the start of the underlying path, pulled back to the last context.
      auto base = M.compose(x, fp.s);
      for (auto& B : chain) base = M.compose(base, B.proj);
      const auto C = I.subst(A, base);
      const auto CY = C.Y;
      const auto steps_copy = steps;
      auto point = [&M, steps_copy](E w) {
        for (std::size_t k = steps_copy.size(); k-- > 0;) w = M.apply(steps_copy[k].sub.Y.first, w);
        return w;
      };
      const auto d = M.morphism(ctx.object, CY.object,
                                [&M, CY, ctx, point](const E& w) { return M.pair(CY, M.apply(ctx.second, w), point(w)); },
                                "d_strong" + std::to_string(n));
      const auto j = I.strong_j(T, steps, C.type, d);
      const auto i = last.l.f, piC = C.type.proj;
      const auto Ctot = C.type.total, Btot = chain.back().total;
      const std::string lab = std::to_string(n) + " parameter" + (n > 1 ? "s" : "");
      s_comp.push_back({lab, ctx.object, [=, &M](const E& w) { return differs(Ctot, M.apply(j, M.apply(i, w)), M.apply(d, w)); }});
      s_sect.push_back({lab, Btot, [=, &M](const E& b) { return differs(Btot, M.apply(piC, M.apply(j, b)), b); }});
    }
    // Frobenius on each step type against r_x.
    std::vector<DependentType<Model>> fams{B1, I.subst(A, M.compose(x, fp.t)).type, I.subst(I.closed(X), M.terminal_map(P)).type};
    for (auto& B : fams) {
      const auto fr = I.frobenius(B, T.refl);
      const auto l = fr.l;
      const auto Yo = fr.sub.Y.object, Bt = B.total;
      const auto sB = M.source(Bt), tB = M.target(Bt), rB = M.refl(Bt);
      const auto MB = M.path_object(Bt);
      frob_ret.push_back({B.name, Yo, [=, &M](const E& w) { return differs(Yo, M.apply(l.k, M.apply(l.f, w)), w); }});
      frob_src.push_back({B.name, Bt, [=, &M](const E& b) { return differs(Bt, M.apply(sB, M.apply(l.theta.h, b)), b); }});
      frob_tgt.push_back({B.name, Bt, [=, &M](const E& b) {
                            return differs(Bt, M.apply(tB, M.apply(l.theta.h, b)), M.apply(l.f, M.apply(l.k, b)));
                          }});
      frob_triv.push_back({B.name, Yo, [=, &M](const E& w) {
                             return differs(MB, M.apply(l.theta.h, M.apply(l.f, w)), M.apply(rB, M.apply(l.f, w)));
                           }});
    }
  }
  run.law_cases("J o (r_A)^{+..+} = d", "strong-j/computation", s_comp);
  run.law_cases("proj_C o J = id", "strong-j/section", s_sect);
  run.law_cases("kbar o ibar = id", "frobenius/retraction", frob_ret);
  run.law_cases("thetabar runs from the identity", "frobenius/homotopy-source", frob_src);
  run.law_cases("thetabar runs to ibar kbar", "frobenius/homotopy-target", frob_tgt);
  run.law_cases("thetabar o ibar = r o ibar", "frobenius/trivial-on-domain", frob_triv);

  return finish(run, "id-model", start);
}


// Substitution of types along morphisms and stability of Id under it.
template <class Model>
SuiteReport stability_suite(const Model& M, const std::vector<Situation<Model>>& situations, ProbeConfig cfg,
                            std::uint64_t seed) {
  using E = typename Model::Element;
  using J = std::optional<nlohmann::ordered_json>;
  using Case = typename LawRunner<Model>::Case;
  const auto start = std::chrono::steady_clock::now();
  LawRunner<Model> run(M, cfg, seed);
  IdModel<Model> I(M);
  const Wfs<Model>& W = I.wfs();
  auto differs = [&M](const auto& obj, const E& a, const E& b) -> J {
    if (a == b) return std::nullopt;
    return nlohmann::ordered_json{{"lhs", M.to_json(obj, a)}, {"rhs", M.to_json(obj, b)}};
  };
  // Comparing liftings is the costliest check; each situation gets a fixed share of probes.
  ProbeConfig capped = cfg;
  capped.samples = std::max(4, cfg.samples / 16);
  capped.exhaustive_limit = 256;

  std::vector<Case> q_unit, q_lift, q_mor, iso_back, iso_fwd, iso_ends, sq_r, sq_rs, sq_j;
  for (auto& [A, f] : situations) {
    const auto S = I.stability(A, f);
    const auto X = A.total;
    const auto op = A.r.op;
    const auto XX = S.IdA.XX.object, P = S.IdA.fp.P.object;
    const auto& Af = S.Af.type;
    const auto Y = Af.total, D = Af.ctx;
    const auto y = Af.proj, g = S.Af.fplus;
    const auto q = Af.r.op;
    const auto rD = M.refl(D), sD = M.source(D), Mf = M.map_path(f);
    const auto FY = W.factorize(y).P;
    const auto lab = A.name + " along " + f.label;
    q_unit.push_back({lab, Y, [=, &M](const E& w) { return differs(Y, q(M.apply(rD, M.apply(y, w)), w), w); }});
    q_lift.push_back({lab, FY.object, [=, &M](const E& v) {
                        E phi = M.apply(FY.first, v), w = M.apply(FY.second, v);
                        return differs(D, M.apply(y, q(phi, w)), M.apply(sD, phi));
                      }});
    q_mor.push_back({lab, FY.object, [=, &M](const E& v) {
                       E phi = M.apply(FY.first, v), w = M.apply(FY.second, v);
                       return differs(X, M.apply(g, q(phi, w)), op(M.apply(Mf, phi), M.apply(g, w)));
                     }});
    const auto PY = S.IdAf.fp.P.object, Q = S.pulled.Y.object;
    const auto to = S.to, from = S.from, fppp = S.fppp;
    iso_back.push_back({lab, PY, [=, &M](const E& xi) { return differs(PY, M.apply(from, M.apply(to, xi)), xi); }});
    iso_fwd.push_back({lab, Q, [=, &M](const E& v) { return differs(Q, M.apply(to, M.apply(from, v)), v); }});
    const auto stY = S.IdAf.id.proj, fpp = S.fpp, stX = S.IdA.id.proj;
    iso_ends.push_back({lab, PY, [=, &M](const E& xi) {
                          return differs(XX, M.apply(stX, M.apply(fppp, xi)), M.apply(fpp, M.apply(stY, xi)));
                        }});
    const auto ry = S.IdAf.fp.r, rx = S.IdA.fp.r;
    sq_r.push_back({lab, Y, [=, &M](const E& w) { return differs(P, M.apply(fppp, M.apply(ry, w)), M.apply(rx, M.apply(g, w))); }});
    // Id_{A[f]} and Id_A[f++] carry the same lifting, through the comparison.
    const auto chiY = S.IdAf.id.r.op, chiQ = S.pulled.type.r.op;
    const auto FstY = W.factorize(stY).P;
    sq_rs.push_back({lab, FstY.object, [=, &M](const E& v) {
                       E Phi = M.apply(FstY.first, v), xi = M.apply(FstY.second, v);
                       return differs(Q, M.apply(to, chiY(Phi, xi)), chiQ(Phi, M.apply(to, xi)));
                     }});
    // The J square for the transport family.
    const auto el = standard_eliminators(I, S.IdA).front();
    const auto Cf = I.subst(el.C, fppp);
    const auto CfY = Cf.Y;
    const auto dC = el.d;
    const auto df = M.morphism(Y, CfY.object, [&M, CfY, ry, dC, g](const E& w) {
      return M.pair(CfY, M.apply(ry, w), M.apply(dC, M.apply(g, w)));
    }, "d[" + lab + "]");
    const auto jf = I.j_elim(S.IdAf, Cf.type, df);
    const auto jA = I.j_elim(S.IdA, el.C, el.d);
    const auto fpppp = Cf.fplus;
    const auto Ctot = el.C.total;
    sq_j.push_back({lab, PY, [=, &M](const E& xi) {
                      return differs(Ctot, M.apply(fpppp, M.apply(jf, xi)), M.apply(jA, M.apply(fppp, xi)));
                    }});
  }
  run.law_cases("q(r y w, w) = w", "subst/r-unit", q_unit);
  run.law_cases("y q(phi, w) = s phi", "subst/r-lift", q_lift);
  run.law_cases("(f+, f) is a morphism of R-maps", "subst/r-morphism", q_mor);
  run.law_cases("comparison then inverse is the identity", "stability/iso-inverse", iso_back);
  run.law_cases("inverse then comparison is the identity", "stability/iso-section", iso_fwd);
  run.law_cases("comparison commutes with (s, t)", "stability/iso-endpoints", iso_ends);
  run.law_cases("f+++ o r_{A[f]} = r_A o f+", "stability/refl-square", sq_r);
  run.law_cases("comparison carries one lifting to the other", "stability/r-structure", sq_rs, capped);
  run.law_cases("f++++ o J(C[f+++], d[f]) = J(C, d) o f+++", "stability/j-square", sq_j);
  return finish(run, "stability", start);
}

}  // namespace pathobj
