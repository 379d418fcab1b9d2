#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "pathobj/errors.hpp"
#include "pathobj/laws/report.hpp"
#include "pathobj/model/derived.hpp"
#include "pathobj/simplex/operator.hpp"

namespace pathobj {

// The internal-category laws in full, without associativity and the involution's compatibility with composition,
// or additionally without the unit law m(r t, 1) = 1.
enum class AxiomLevel { full, prime, double_prime };

inline AxiomLevel parse_axiom_level(const std::string& s) {
  if (s == "1") return AxiomLevel::full;
  if (s == "1p") return AxiomLevel::prime;
  if (s == "1pp") return AxiomLevel::double_prime;
  throw InputError("--weak must be 1, 1p or 1pp, not '" + s + "'");
}

template <class Model>
struct AxiomInput {
  typename Model::Object X;
  // Extra morphisms for naturality, functoriality and pullback preservation.
  std::vector<typename Model::Morphism> maps;
};

namespace detail {

template <class Model>
void functor_laws(LawRunner<Model>& run, const typename Model::Morphism& f) {
  using E = typename Model::Element;
  const Model& M = run.model();
  const auto A = f.dom, B = f.cod;
  const auto MA = M.path_object(A), MB = M.path_object(B);
  const auto Mf = M.map_path(f), MMf = M.map_path(Mf);
  const auto sA = M.source(A), sB = M.source(B), tA = M.target(A), tB = M.target(B);
  const auto rA = M.refl(A), rB = M.refl(B), tauA = M.reverse_paths(A), tauB = M.reverse_paths(B);
  const auto CA = M.composable(A), CB = M.composable(B);
  const auto mA = M.compose_paths(A), mB = M.compose_paths(B);
  const auto LA = M.product(M.path_object(M.terminal()), A), LB = M.product(M.path_object(M.terminal()), B);
  const auto aA = M.strength(A), aB = M.strength(B);
  const auto eA = M.contract(A), eB = M.contract(B);
  const std::string at = " along " + f.label;

  run.equal("s natural" + at, "naturality/source", MA, B, [&](const E& p) { return M.apply(sB, M.apply(Mf, p)); },
            [&](const E& p) { return M.apply(f, M.apply(sA, p)); });
  run.equal("t natural" + at, "naturality/target", MA, B, [&](const E& p) { return M.apply(tB, M.apply(Mf, p)); },
            [&](const E& p) { return M.apply(f, M.apply(tA, p)); });
  run.equal("r natural" + at, "naturality/identity", A, MB, [&](const E& a) { return M.apply(Mf, M.apply(rA, a)); },
            [&](const E& a) { return M.apply(rB, M.apply(f, a)); });
  run.equal("tau natural" + at, "naturality/involution", MA, MB,
            [&](const E& p) { return M.apply(Mf, M.apply(tauA, p)); },
            [&](const E& p) { return M.apply(tauB, M.apply(Mf, p)); });
  run.equal("m natural" + at, "naturality/composition", CA.object, MB,
            [&](const E& c) { return M.apply(Mf, M.apply(mA, c)); },
            [&](const E& c) {
              E g = M.apply(Mf, M.apply(CA.first, c)), h = M.apply(Mf, M.apply(CA.second, c));
              return M.apply(mB, M.pair(CB, g, h));
            });
  run.equal("alpha natural" + at, "strength/naturality", LA.object, MB,
            [&](const E& e) { return M.apply(Mf, M.apply(aA, e)); },
            [&](const E& e) {
              return M.apply(aB, M.pair(LB, M.apply(LA.first, e), M.apply(f, M.apply(LA.second, e))));
            });
  run.equal("eta natural" + at, "contraction/naturality", MA, M.path_object(MB),
            [&](const E& p) { return M.apply(MMf, M.apply(eA, p)); },
            [&](const E& p) { return M.apply(eB, M.apply(Mf, p)); });

  const auto Mr_after = M.map_path(M.compose(rB, f)), MrB = M.map_path(rB);
  run.equal("M(r o " + f.label + ") = Mr o M" + f.label, "functor/composition", MA, M.path_object(MB),
            [&](const E& p) { return M.apply(Mr_after, p); },
            [&](const E& p) { return M.apply(MrB, M.apply(Mf, p)); });
}

template <class Model>
void pullback_laws(LawRunner<Model>& run, const typename Model::Pullback& P, const std::string& name) {
  using E = typename Model::Element;
  const Model& M = run.model();
  const auto MP = M.path_object(P.object);
  const auto Mp1 = M.map_path(P.first), Mp2 = M.map_path(P.second);
  const auto Q = M.pullback(M.map_path(P.f), M.map_path(P.g));
  run.law("M(" + name + ") pairs paths", "pullback-preservation/pairing", Q.object,
          [&](const E& e) -> std::optional<nlohmann::ordered_json> {
            E pa = M.apply(Q.first, e), pb = M.apply(Q.second, e);
            E q = M.pair_paths(P, pa, pb);
            if (M.apply(Mp1, q) == pa && M.apply(Mp2, q) == pb) return std::nullopt;
            return nlohmann::ordered_json{{"paired", M.to_json(MP, q)}};
          });
  run.equal("M(" + name + ") pairing is unique", "pullback-preservation/uniqueness", MP, MP,
            [&](const E& q) { return M.pair_paths(P, M.apply(Mp1, q), M.apply(Mp2, q)); },
            [](const E& q) { return q; });
}

// Structure maps commute with faces and degeneracies, for models whose elements carry an action.
template <class Model>
void simplicial_laws(LawRunner<Model>& run, const std::string& name, const typename Model::Object& dom,
                     const typename Model::Object& cod, const typename Model::Morphism& f) {
  using E = typename Model::Element;
  if constexpr (requires(const E& e, const SimplicialOperator& a) { e.act(a); }) {
    const Model& M = run.model();
    run.law(name + " commutes with faces and degeneracies", "simplicial/structure-maps", dom,
            [&](const E& e) -> std::optional<nlohmann::ordered_json> {
              const int n = e.dim();
              std::vector<SimplicialOperator> ops;
              for (int i = 0; n > 0 && i <= n; ++i) ops.push_back(SimplicialOperator::face(n, i));
              for (int i = 0; i <= n; ++i) ops.push_back(SimplicialOperator::degeneracy(n, i));
              for (auto& a : ops) {
                E lhs = M.apply(f, e.act(a)), rhs = M.apply(f, e).act(a);
                if (!(lhs == rhs))
                  return nlohmann::ordered_json{
                      {"operator", a.to_string()}, {"lhs", M.to_json(cod, lhs)}, {"rhs", M.to_json(cod, rhs)}};
              }
              return std::nullopt;
            });
  } else {
    (void)run, (void)name, (void)dom, (void)cod, (void)f;
  }
}

}  // namespace detail

template <class Model>
SuiteReport axiom_suite(const Model& M, const AxiomInput<Model>& in, AxiomLevel level, ProbeConfig cfg,
                        std::uint64_t seed) {
  using E = typename Model::Element;
  const auto start = std::chrono::steady_clock::now();
  LawRunner<Model> run(M, cfg, seed);
  const auto X = in.X;
  const auto MX = M.path_object(X), MMX = M.path_object(MX);
  const auto one = M.terminal();
  const auto M1 = M.path_object(one);
  const auto s = M.source(X), t = M.target(X), r = M.refl(X), tau = M.reverse_paths(X);
  const auto C = M.composable(X);
  const auto m = M.compose_paths(X);
  const auto id = [](const E& e) { return e; };
  auto pair_C = [&](const E& g, const E& f) { return M.pair(C, g, f); };

  // Internal category with involution.
  run.equal("s o r = id", "internal-category/source-of-identity", X, X,
            [&](const E& x) { return M.apply(s, M.apply(r, x)); }, id);
  run.equal("t o r = id", "internal-category/target-of-identity", X, X,
            [&](const E& x) { return M.apply(t, M.apply(r, x)); }, id);
  run.equal("s o m = s o pr2", "internal-category/source-of-composite", C.object, X,
            [&](const E& c) { return M.apply(s, M.apply(m, c)); },
            [&](const E& c) { return M.apply(s, M.apply(C.second, c)); });
  run.equal("t o m = t o pr1", "internal-category/target-of-composite", C.object, X,
            [&](const E& c) { return M.apply(t, M.apply(m, c)); },
            [&](const E& c) { return M.apply(t, M.apply(C.first, c)); });
  run.equal("m(1, r o s) = 1", "internal-category/unit-at-source", MX, MX,
            [&](const E& p) { return M.apply(m, pair_C(p, M.apply(r, M.apply(s, p)))); }, id);
  if (level != AxiomLevel::double_prime)
    run.equal("m(r o t, 1) = 1", "internal-category/unit-at-target", MX, MX,
              [&](const E& p) { return M.apply(m, pair_C(M.apply(r, M.apply(t, p)), p)); }, id);
  run.equal("s o tau = t", "involution/source", MX, X, [&](const E& p) { return M.apply(s, M.apply(tau, p)); },
            [&](const E& p) { return M.apply(t, p); });
  run.equal("t o tau = s", "involution/target", MX, X, [&](const E& p) { return M.apply(t, M.apply(tau, p)); },
            [&](const E& p) { return M.apply(s, p); });
  run.equal("tau o r = r", "involution/identity", X, MX, [&](const E& x) { return M.apply(tau, M.apply(r, x)); },
            [&](const E& x) { return M.apply(r, x); });
  run.equal("tau o tau = 1", "involution/twice", MX, MX, [&](const E& p) { return M.apply(tau, M.apply(tau, p)); },
            id);
  if (level == AxiomLevel::full) {
    const auto T = M.pullback(C.second, C.first);  // ((h, g), (g, f))
    run.equal("m(m(h, g), f) = m(h, m(g, f))", "internal-category/associativity", T.object, MX,
              [&](const E& e) {
                E hg = M.apply(T.first, e), gf = M.apply(T.second, e);
                E h = M.apply(C.first, hg), g = M.apply(C.second, hg), f = M.apply(C.second, gf);
                return M.apply(m, pair_C(M.apply(m, pair_C(h, g)), f));
              },
              [&](const E& e) {
                E hg = M.apply(T.first, e), gf = M.apply(T.second, e);
                E h = M.apply(C.first, hg), g = M.apply(C.second, hg), f = M.apply(C.second, gf);
                return M.apply(m, pair_C(h, M.apply(m, pair_C(g, f))));
              });
    run.equal("tau o m = m o (tau f, tau g)", "involution/anti-composition", C.object, MX,
              [&](const E& c) { return M.apply(tau, M.apply(m, c)); },
              [&](const E& c) {
                E g = M.apply(C.first, c), f = M.apply(C.second, c);
                return M.apply(m, pair_C(M.apply(tau, f), M.apply(tau, g)));
              });
  }

  // M is a pullback-preserving functor and the structure is natural.
  const auto Mid = M.map_path(M.identity(X));
  run.equal("M(id) = id", "functor/identity", MX, MX, [&](const E& p) { return M.apply(Mid, p); }, id);
  std::vector<typename Model::Morphism> maps = in.maps;
  maps.push_back(M.terminal_map(X));
  maps.push_back(r);
  for (auto& f : maps) detail::functor_laws(run, f);

  detail::pullback_laws(run, C, "composable pairs");
  detail::pullback_laws(run, M.product(X, X), X->name + " x " + X->name);
  for (std::size_t i = 0; i < in.maps.size(); ++i)
    for (std::size_t j = i + 1; j < in.maps.size(); ++j)
      if (in.maps[i].cod->name == in.maps[j].cod->name) {
        detail::pullback_laws(run, M.pullback(in.maps[i], in.maps[j]), in.maps[i].label + " x " + in.maps[j].label);
        i = j = in.maps.size();
      }

  // Strength.
  const auto L = M.product(M1, X);
  const auto alpha = M.strength(X);
  const auto r1 = M.refl(one), m1 = M.compose_paths(one), tau1 = M.reverse_paths(one);
  const auto C1 = M.composable(one);
  const auto bang = M.terminal_map(X);
  auto D = derived(M);
  run.equal("s o alpha = pr2", "strength/source", L.object, X,
            [&](const E& e) { return M.apply(s, M.apply(alpha, e)); },
            [&](const E& e) { return M.apply(L.second, e); });
  run.equal("t o alpha = pr2", "strength/target", L.object, X,
            [&](const E& e) { return M.apply(t, M.apply(alpha, e)); },
            [&](const E& e) { return M.apply(L.second, e); });
  run.equal("alpha(r !, 1) = r", "strength/identity", X, MX,
            [&](const E& x) { return M.apply(alpha, M.pair(L, M.apply(r1, M.apply(bang, x)), x)); },
            [&](const E& x) { return M.apply(r, x); });
  {
    const auto CL = M.product(C1.object, X);  // ((theta', theta), x)
    run.equal("alpha(m(theta', theta), x) = m(alpha(theta', x), alpha(theta, x))", "strength/composition",
              CL.object, MX,
              [&](const E& e) {
                E c = M.apply(CL.first, e), x = M.apply(CL.second, e);
                return M.apply(alpha, M.pair(L, M.apply(m1, c), x));
              },
              [&](const E& e) {
                E c = M.apply(CL.first, e), x = M.apply(CL.second, e);
                E a2 = M.apply(alpha, M.pair(L, M.apply(C1.first, c), x));
                E a1 = M.apply(alpha, M.pair(L, M.apply(C1.second, c), x));
                return M.apply(m, pair_C(a2, a1));
              });
  }
  run.equal("tau o alpha = alpha o (tau x 1)", "strength/involution", L.object, MX,
            [&](const E& e) { return M.apply(tau, M.apply(alpha, e)); },
            [&](const E& e) {
              return M.apply(alpha, M.pair(L, M.apply(tau1, M.apply(L.first, e)), M.apply(L.second, e)));
            });
  {
    auto ST = D.shape_target(X);
    run.equal("(M!, t) o alpha = id", "strength/retraction", L.object, L.object,
              [&](const E& e) { return D.shape_target_apply(ST, M.apply(alpha, e)); }, id);
  }
  {
    auto S = D.strength(X, X);
    const auto Mpi1 = M.map_path(S.out.first), Mpi2 = M.map_path(S.out.second);
    run.law("M pi1 o alpha_{X,X} = pi1 and M pi2 o alpha_{X,X} = alpha_{1,X} o (M! x 1)", "strength/components",
            S.in.object, [&](const E& e) -> std::optional<nlohmann::ordered_json> {
              E p = M.apply(S.in.first, e), y = M.apply(S.in.second, e);
              E q = D.strength_apply(S, p, y);
              E c = M.apply(S.alpha, M.pair(S.lengths, M.apply(S.shape, p), y));
              if (M.apply(Mpi1, q) == p && M.apply(Mpi2, q) == c) return std::nullopt;
              return nlohmann::ordered_json{{"paired", M.to_json(M.path_object(S.out.object), q)}};
            });
  }

  // Contraction.
  const auto eta = M.contract(X);
  const auto sM = M.source(MX), tM = M.target(MX), rM = M.refl(MX);
  const auto Ms = M.map_path(s), Mt = M.map_path(t);
  {
    auto ST = D.shape_target(X);
    run.equal("s o eta = id", "contraction/source", MX, MX, [&](const E& p) { return M.apply(sM, M.apply(eta, p)); },
              id);
    run.equal("t o eta = r o t", "contraction/target", MX, MX,
              [&](const E& p) { return M.apply(tM, M.apply(eta, p)); },
              [&](const E& p) { return M.apply(r, M.apply(t, p)); });
    run.equal("Ms o eta = id", "contraction/path-source", MX, MX,
              [&](const E& p) { return M.apply(Ms, M.apply(eta, p)); }, id);
    run.equal("Mt o eta = alpha o (M!, t)", "contraction/path-target", MX, MX,
              [&](const E& p) { return M.apply(Mt, M.apply(eta, p)); },
              [&](const E& p) { return M.apply(alpha, D.shape_target_apply(ST, p)); });
    run.equal("eta o r = r o r", "contraction/identity", X, MMX,
              [&](const E& x) { return M.apply(eta, M.apply(r, x)); },
              [&](const E& x) { return M.apply(rM, M.apply(r, x)); });
  }
  {
    const auto eta1 = M.contract(one);
    auto S = D.strength(M1, X);
    const auto Malpha = M.map_path(alpha);
    run.equal("eta o alpha = M(alpha) o alpha_{M1,X} o (eta x 1)", "contraction/strength", L.object, MMX,
              [&](const E& e) { return M.apply(eta, M.apply(alpha, e)); },
              [&](const E& e) {
                E big = D.strength_apply(S, M.apply(eta1, M.apply(L.first, e)), M.apply(L.second, e));
                return M.apply(Malpha, big);
              });
  }

  detail::simplicial_laws(run, "s", MX, X, s);
  detail::simplicial_laws(run, "t", MX, X, t);
  detail::simplicial_laws(run, "r", X, MX, r);
  detail::simplicial_laws(run, "m", C.object, MX, m);
  detail::simplicial_laws(run, "tau", MX, MX, tau);
  detail::simplicial_laws(run, "alpha", L.object, MX, alpha);
  detail::simplicial_laws(run, "eta", MX, MMX, eta);

  return finish(run, "axioms", start);
}

}  // namespace pathobj
