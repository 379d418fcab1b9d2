#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "pathobj/laws/report.hpp"
#include "pathobj/wfs.hpp"

namespace pathobj {

template <class Model>
struct WfsInput {
  typename Model::Object X;
  // Morphisms to factorize; defaults on X are always added.
  std::vector<typename Model::Morphism> maps;
  // Extra commuting squares; canonical squares are always added.
  std::vector<Square<Model>> squares;
};

// Squares id_A -> g and u -> id_Y for every composable pair u : A -> X, g : X -> Y.
template <class Model>
std::vector<Square<Model>> composable_squares(const Model& M, const std::vector<typename Model::Morphism>& us,
                                              const std::vector<typename Model::Morphism>& gs) {
  std::vector<Square<Model>> out;
  for (auto& u : us)
    for (auto& g : gs) {
      auto gu = M.compose(g, u);
      out.push_back({M.identity(u.dom), g, u, gu, "(" + u.label + "," + gu.label + ")"});
      out.push_back({u, M.identity(g.cod), gu, g, "(" + gu.label + "," + g.label + ")"});
    }
  return out;
}

namespace detail {

template <class Model>
Square<Model> compose_squares(const Model& M, const Square<Model>& first, const Square<Model>& second) {
  return {first.f, second.g, M.compose(second.a, first.a), M.compose(second.b, first.b),
          second.label + " . " + first.label};
}

// Squares every f : X -> Y supports, and composable pairs of them.
template <class Model>
void canonical_squares(const Model& M, const typename Model::Morphism& f, std::vector<Square<Model>>& sq,
                       std::vector<std::pair<Square<Model>, Square<Model>>>& pairs) {
  Wfs<Model> W(M);
  const auto X = f.dom, Y = f.cod;
  const auto Mf = M.map_path(f);
  const auto idX = M.identity(X), idY = M.identity(Y);
  const auto Ff = W.factorize(f);
  Square<Model> id{f, f, idX, idY, "(1,1) on " + f.label};
  Square<Model> refl{f, Mf, M.refl(X), M.refl(Y), "(r,r) on " + f.label};
  Square<Model> src{Mf, f, M.source(X), M.source(Y), "(s,s) on " + f.label};
  Square<Model> tgt{Mf, f, M.target(X), M.target(Y), "(t,t) on " + f.label};
  Square<Model> lam{f, Ff.rho, Ff.lambda, idY, "(lambda,1) on " + f.label};
  Square<Model> to_id{f, idY, f, idY, "(f,1) on " + f.label};
  Square<Model> from_id{idX, f, idX, f, "(1,f) on " + f.label};
  for (auto* s : {&id, &refl, &lam, &to_id, &from_id}) sq.push_back(*s);
  pairs.push_back({refl, src});
  pairs.push_back({refl, tgt});
  pairs.push_back({from_id, to_id});
  pairs.push_back({id, lam});
}

}  // namespace detail

template <class Model>
SuiteReport wfs_suite(const Model& M, const WfsInput<Model>& in, ProbeConfig cfg, std::uint64_t seed) {
  using E = typename Model::Element;
  using J = std::optional<nlohmann::ordered_json>;
  using Case = typename LawRunner<Model>::Case;
  const auto start = std::chrono::steady_clock::now();
  LawRunner<Model> run(M, cfg, seed);
  Wfs<Model> W(M);
  const auto X = in.X;

  std::vector<typename Model::Morphism> maps{M.terminal_map(X), M.identity(X), M.refl(X), M.source(X)};
  maps.insert(maps.end(), in.maps.begin(), in.maps.end());
  std::vector<Square<Model>> squares = in.squares;
  std::vector<std::pair<Square<Model>, Square<Model>>> pairs;
  for (auto& f : maps) detail::canonical_squares(M, f, squares, pairs);

  auto differs = [&M](const auto& obj, const E& a, const E& b) -> J {
    if (a == b) return std::nullopt;
    return nlohmann::ordered_json{{"lhs", M.to_json(obj, a)}, {"rhs", M.to_json(obj, b)}};
  };

  // ---- factorization and the two structures, per map ------------------------
  std::vector<Case> composite, retraction, h_source, h_target, trivial_on, fill_id;
  std::vector<Case> r_unit, r_lift, pl_covers, pl_ends, pl_identity;
  std::vector<Case> h_unit_s, h_unit_t, h_inv, h_rev_ends, h_comp_ends, h_whisker_id, h_whisker_coh;

  std::vector<RStructure<Model>> rs;
  for (auto& f : maps) {
    const auto Ff = W.factorize(f);
    const auto sg = W.sigma(Ff);
    const auto P = Ff.P.object;
    const auto MP = M.path_object(P);
    const auto rP = M.refl(P);
    const auto sP = M.source(P), tP = M.target(P);
    const auto lam = Ff.lambda, rho = Ff.rho, e = sg.k, th = sg.theta.h;
    const auto lab = f.label;
    composite.push_back({lab, f.dom, [=, &M](const E& x) { return differs(f.cod, M.apply(rho, M.apply(lam, x)), M.apply(f, x)); }});
    retraction.push_back({lab, f.dom, [=, &M](const E& x) { return differs(f.dom, M.apply(e, M.apply(lam, x)), x); }});
    h_source.push_back({lab, P, [=, &M](const E& w) { return differs(P, M.apply(sP, M.apply(th, w)), w); }});
    h_target.push_back(
        {lab, P, [=, &M](const E& w) { return differs(P, M.apply(tP, M.apply(th, w)), M.apply(lam, M.apply(e, w))); }});
    trivial_on.push_back(
        {lab, f.dom, [=, &M](const E& x) { return differs(MP, M.apply(th, M.apply(lam, x)), M.apply(rP, M.apply(lam, x))); }});
    const auto Pid = W.fill(Ff, Ff, M.identity(f.dom), M.identity(f.cod));
    fill_id.push_back({lab, P, [=, &M](const E& w) { return differs(P, M.apply(Pid, w), w); }});

    // Homotopy operations on theta_f : id => lambda e.
    const auto hom = sg.theta;
    const auto u_s = W.vcompose(W.identity(hom.from), hom).h, u_t = W.vcompose(hom, W.identity(hom.to)).h;
    const auto rr = W.reverse(W.reverse(hom)).h;
    const auto rev = W.reverse(hom);
    const auto loop = W.vcompose(hom, rev);
    const auto wl = W.whisker_left(M.identity(P), hom).h, wr = W.whisker_right(hom, M.identity(P)).h;
    const auto w_nest = W.whisker_left(lam, W.whisker_left(e, hom)).h;
    const auto w_once = W.whisker_left(M.compose(lam, e), hom).h;
    h_unit_s.push_back({lab, P, [=, &M](const E& w) { return differs(MP, M.apply(u_s, w), M.apply(th, w)); }});
    h_unit_t.push_back({lab, P, [=, &M](const E& w) { return differs(MP, M.apply(u_t, w), M.apply(th, w)); }});
    h_inv.push_back({lab, P, [=, &M](const E& w) { return differs(MP, M.apply(rr, w), M.apply(th, w)); }});
    h_rev_ends.push_back({lab, P, [=, &M](const E& w) -> J {
                            E p = M.apply(rev.h, w);
                            if (auto d = differs(P, M.apply(sP, p), M.apply(rev.from, w))) return d;
                            return differs(P, M.apply(tP, p), M.apply(rev.to, w));
                          }});
    h_comp_ends.push_back({lab, P, [=, &M](const E& w) -> J {
                             E p = M.apply(loop.h, w);
                             if (auto d = differs(P, M.apply(sP, p), w)) return d;
                             return differs(P, M.apply(tP, p), w);
                           }});
    h_whisker_id.push_back({lab, P, [=, &M](const E& w) -> J {
                              if (auto d = differs(MP, M.apply(wl, w), M.apply(th, w))) return d;
                              return differs(MP, M.apply(wr, w), M.apply(th, w));
                            }});
    h_whisker_coh.push_back({lab, P, [=, &M](const E& w) { return differs(MP, M.apply(w_nest, w), M.apply(w_once, w)); }});
    rs.push_back(W.pi(Ff));
  }
  rs.push_back(W.fibrant(X));
  rs.push_back(W.trivial(X));
  rs.push_back(W.trivial(M.path_object(X)));

  for (auto& r : rs) {
    const auto f = r.f;
    const auto Fr = W.factorize(f);
    const auto Q = Fr.P;
    const auto rY = M.refl(f.cod), sY = M.source(f.cod);
    const auto sX = M.source(f.dom), tX = M.target(f.dom), rX = M.refl(f.dom);
    const auto MX = M.path_object(f.dom), Mf = M.map_path(f);
    const auto op = r.op;
    const auto pl = W.path_lifter(r);
    const auto lab = r.name;
    r_unit.push_back({lab, f.dom, [=, &M](const E& x) { return differs(f.dom, op(M.apply(rY, M.apply(f, x)), x), x); }});
    r_lift.push_back({lab, Q.object, [=, &M](const E& w) {
                        E phi = M.apply(Q.first, w), x = M.apply(Q.second, w);
                        return differs(f.cod, M.apply(f, op(phi, x)), M.apply(sY, phi));
                      }});
    pl_covers.push_back({lab, Q.object, [=, &M](const E& w) {
                           E phi = M.apply(Q.first, w), x = M.apply(Q.second, w);
                           return differs(M.path_object(f.cod), M.apply(Mf, W.path_lift(pl, phi, x)), phi);
                         }});
    pl_ends.push_back({lab, Q.object, [=, &M](const E& w) -> J {
                         E phi = M.apply(Q.first, w), x = M.apply(Q.second, w);
                         E bar = W.path_lift(pl, phi, x);
                         if (auto d = differs(f.dom, M.apply(sX, bar), op(phi, x))) return d;
                         return differs(f.dom, M.apply(tX, bar), x);
                       }});
    pl_identity.push_back({lab, f.dom, [=, &M](const E& x) {
                             return differs(MX, W.path_lift(pl, M.apply(rY, M.apply(f, x)), x), M.apply(rX, x));
                           }});
  }

  run.law_cases("rho o lambda = f", "factorization/composite", composite);
  run.law_cases("e o lambda = id", "l-structure/retraction", retraction);
  run.law_cases("s o theta = id", "l-structure/homotopy-source", h_source);
  run.law_cases("t o theta = lambda o e", "l-structure/homotopy-target", h_target);
  run.law_cases("theta o lambda = r o lambda", "l-structure/trivial-on-domain", trivial_on);
  run.law_cases("p(r f x, x) = x", "r-structure/unit", r_unit);
  run.law_cases("f p(phi, x) = s phi", "r-structure/lift", r_lift);
  run.law_cases("M f o lifted path = path", "path-lift/covers", pl_covers);
  run.law_cases("lifted path runs from p(phi, x) to x", "path-lift/endpoints", pl_ends);
  run.law_cases("identity paths lift to identity paths", "path-lift/identity", pl_identity);
  run.law_cases("refl . theta = theta", "homotopy/unit-at-source", h_unit_s);
  run.law_cases("theta . refl = theta", "homotopy/unit-at-target", h_unit_t);
  run.law_cases("reverse of reverse = theta", "homotopy/involution", h_inv);
  run.law_cases("reverse swaps endpoints", "homotopy/reverse-endpoints", h_rev_ends);
  run.law_cases("theta then its reverse is a loop", "homotopy/composite-endpoints", h_comp_ends);
  run.law_cases("whiskering by identities is trivial", "homotopy/whisker-identity", h_whisker_id);
  run.law_cases("M(l) M(e) theta = M(l e) theta", "homotopy/whisker-coherence", h_whisker_coh);
  run.law_cases("P(1, 1) = id", "fill/identity", fill_id);

  // ---- squares ----------------------------------------------------------------
  std::vector<Case> fill_l, fill_r, fill_f, upper, lower, nat_l, nat_r, lmor, rmor;
  for (auto& sq : squares) {
    const auto Ff = W.factorize(sq.f), Fg = W.factorize(sq.g);
    const auto Pab = W.fill(Ff, Fg, sq.a, sq.b);
    const auto lf = W.sigma(Ff), lg = W.sigma(Fg);
    const auto rf = W.pi(Ff), rg = W.pi(Fg);
    const auto h = M.compose(Fg.lambda, sq.a), k = M.compose(sq.b, Ff.rho);
    const auto j = W.lift(lf, rg, h, k);
    const auto jf = W.lift(lf, rf, Ff.lambda, Ff.rho), jg = W.lift(lg, rg, Fg.lambda, Fg.rho);
    const auto P = Ff.P.object, Q = Fg.P.object;
    const auto lamf = Ff.lambda, lamg = Fg.lambda, rhof = Ff.rho, rhog = Fg.rho, a = sq.a, b = sq.b;
    const auto MPab = M.map_path(Pab), MQ = M.path_object(Q);
    const auto Mb = M.map_path(b);
    const auto R2 = W.factorize(rhof).P;
    const auto lab = sq.label;
    fill_l.push_back({lab, sq.f.dom, [=, &M](const E& x) { return differs(Q, M.apply(Pab, M.apply(lamf, x)), M.apply(lamg, M.apply(a, x))); }});
    fill_r.push_back({lab, P, [=, &M](const E& w) { return differs(sq.g.cod, M.apply(rhog, M.apply(Pab, w)), M.apply(b, M.apply(rhof, w))); }});
    upper.push_back({lab, sq.f.dom, [=, &M](const E& x) { return differs(Q, M.apply(j, M.apply(lamf, x)), M.apply(h, x)); }});
    lower.push_back({lab, P, [=, &M](const E& w) { return differs(sq.g.cod, M.apply(rhog, M.apply(j, w)), M.apply(k, w)); }});
    nat_l.push_back({lab, P, [=, &M](const E& w) { return differs(Q, M.apply(j, w), M.apply(jg, M.apply(Pab, w))); }});
    nat_r.push_back({lab, P, [=, &M](const E& w) { return differs(Q, M.apply(j, w), M.apply(Pab, M.apply(jf, w))); }});
    lmor.push_back({lab, P, [=, &M](const E& w) -> J {
                      if (auto d = differs(sq.g.dom, M.apply(lg.k, M.apply(Pab, w)), M.apply(a, M.apply(lf.k, w)))) return d;
                      return differs(MQ, M.apply(lg.theta.h, M.apply(Pab, w)), M.apply(MPab, M.apply(lf.theta.h, w)));
                    }});
    rmor.push_back({lab, R2.object, [=, &M](const E& v) {
                      E psi = M.apply(R2.first, v), w = M.apply(R2.second, v);
                      return differs(Q, M.apply(Pab, rf.op(psi, w)), rg.op(M.apply(Mb, psi), M.apply(Pab, w)));
                    }});
  }
  // Lifting against the default structures.
  for (auto& f : maps) {
    const auto Ff = W.factorize(f);
    const auto lf = W.sigma(Ff);
    const auto fib = W.fibrant(f.dom);
    const auto j = W.lift(lf, fib, M.identity(f.dom), M.terminal_map(Ff.P.object));
    const auto lamf = Ff.lambda;
    const auto P = Ff.P.object;
    const auto one = M.terminal();
    const auto bang_P = M.terminal_map(P), bang_X = M.terminal_map(f.dom);
    upper.push_back({"lambda vs X -> 1 on " + f.label, f.dom,
                     [=, &M](const E& x) { return differs(f.dom, M.apply(j, M.apply(lamf, x)), x); }});
    lower.push_back({"lambda vs X -> 1 on " + f.label, P,
                     [=, &M](const E& w) { return differs(one, M.apply(bang_X, M.apply(j, w)), M.apply(bang_P, w)); }});
    const auto triv = W.trivial_l(P);
    const auto rf = W.pi(Ff);
    const auto j2 = W.lift(triv, rf, M.identity(P), Ff.rho);
    const auto rho = Ff.rho;
    upper.push_back({"identity vs rho on " + f.label, P, [=, &M](const E& w) { return differs(P, M.apply(j2, w), w); }});
    lower.push_back({"identity vs rho on " + f.label, P,
                     [=, &M](const E& w) { return differs(f.cod, M.apply(rho, M.apply(j2, w)), M.apply(rho, w)); }});
  }
  for (auto& [s1, s2] : pairs) {
    const auto c = detail::compose_squares(M, s1, s2);
    const auto F1 = W.factorize(s1.f), F2 = W.factorize(s1.g), F3 = W.factorize(s2.g);
    const auto P12 = W.fill(F1, F2, s1.a, s1.b), P23 = W.fill(F2, F3, s2.a, s2.b), P13 = W.fill(F1, F3, c.a, c.b);
    const auto Q = F3.P.object;
    fill_f.push_back({c.label, F1.P.object, [=, &M](const E& w) { return differs(Q, M.apply(P13, w), M.apply(P23, M.apply(P12, w))); }});
  }

  run.law_cases("P(a, b) o lambda_f = lambda_g o a", "fill/lambda", fill_l);
  run.law_cases("rho_g o P(a, b) = b o rho_f", "fill/rho", fill_r);
  run.law_cases("P(a' a, b' b) = P(a', b') o P(a, b)", "fill/functorial", fill_f);
  run.law_cases("(a, P(a, b)) preserves the L-structures", "l-structure/morphism", lmor);
  run.law_cases("(P(a, b), b) preserves the R-structures", "r-structure/morphism", rmor);
  run.law_cases("j o l = h", "lift/upper-triangle", upper);
  run.law_cases("r o j = k", "lift/lower-triangle", lower);
  run.law_cases("lift of a precomposed square = lift o P(a, b)", "lift/natural-in-l", nat_l);
  run.law_cases("lift of a postcomposed square = P(a, b) o lift", "lift/natural-in-r", nat_r);
  return finish(run, "wfs", start);
}

}  // namespace pathobj
