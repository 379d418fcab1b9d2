// One PASS/FAIL line per acceptance criterion. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pathobj/fault.hpp"
#include "pathobj/io/sset_json.hpp"
#include "pathobj/laws/anchors.hpp"
#include "pathobj/laws/axioms.hpp"
#include "pathobj/laws/id_laws.hpp"
#include "pathobj/laws/wfs_laws.hpp"
#include "pathobj/model/chain.hpp"
#include "pathobj/model/groupoid.hpp"
#include "pathobj/model/sset.hpp"
#include "pathobj/moore_path.hpp"
#include "pathobj/traversal.hpp"

using namespace pathobj;
using Q = Rational;
using Op = SimplicialOperator;
using Path = MoorePath<Simplex>;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

const LawRecord* find_law(const SuiteReport& r, const std::string& anchor) {
  for (auto& l : r.laws)
    if (l.anchor == anchor) return &l;
  return nullptr;
}

std::string first_failure(const SuiteReport& r) {
  for (auto& l : r.laws)
    if (!l.passed) return r.suite + " [" + r.backend + "] " + l.anchor;
  return {};
}

void require_passed(Outcome& out, const SuiteReport& r) {
  out.require(r.passed(), "law failed: " + first_failure(r));
}

void require_exhaustive(Outcome& out, const SuiteReport& r) {
  for (auto& l : r.laws) out.require(l.exhaustive, r.backend + " " + l.anchor + " was sampled");
}

void require_cases(Outcome& out, const SuiteReport& r, const std::string& anchor, int at_least) {
  const LawRecord* l = find_law(r, anchor);
  out.require(l != nullptr, r.backend + ": no law " + anchor);
  if (l) out.require(l->cases >= at_least, r.backend + " " + anchor + ": " + std::to_string(l->cases) + " cases");
}

void require_all_anchors(Outcome& out, const SuiteReport& r) {
  std::set<std::string> seen;
  for (auto& l : r.laws) seen.insert(l.anchor);
  auto expected = suite_anchors().at(r.suite);
  // Laws about the simplicial action exist only where elements carry one.
  if (r.backend != "sset") std::erase_if(expected, [](const std::string& a) { return a.starts_with("simplicial/"); });
  out.require(seen == expected, r.suite + " [" + r.backend + "] skipped registered laws");
}

constexpr Sign P = Sign::plus, M = Sign::minus;

// ---- 1 -------------------------------------------------------------------------------

Outcome traversal_oracle() {
  Outcome out;
  long cases = 0;
  for (int n = 0; n <= 2; ++n)
    for (int k = 0; k <= 4; ++k)
      for (auto& t : oracle::all_traversals(n, k))
        for (int m = 0; m <= 3; ++m)
          for (auto& a : all_operators(m, n)) {
            auto o = oracle::act(t, a);
            auto [psi, r] = act_traversal(t, a);
            const std::string at = t.to_string() + " . " + a.to_string();
            out.require(o.unique_psi && o.unique_ops && o.empty_fibers_consistent, "oracle not unique at " + at);
            out.require(psi.steps() == o.psi && r.parent == o.parent && r.ops == o.ops, "mismatch at " + at);
            ++cases;
          }
  if (out.pass) out.detail = std::to_string(cases) + " (traversal, operator) pairs";
  return out;
}

// ---- 2 -------------------------------------------------------------------------------

Outcome degeneracy_example() {
  Outcome out;
  const Traversal theta(0, {{0, P}, {0, P}, {0, M}, {0, P}, {0, M}});
  auto [psi, r] = act_traversal(theta, Op::degeneracy(0, 0));
  out.require(psi.length() == 10, "length " + std::to_string(psi.length()));
  out.require(psi == Traversal(1, {{1, P}, {0, P}, {1, P}, {0, P}, {0, M}, {1, M}, {1, P}, {0, P}, {0, M}, {1, M}}),
              "acted traversal " + psi.to_string());
  const Op s0 = Op::degeneracy(1, 0), s1 = Op::degeneracy(1, 1);
  out.require(r.ops.size() == 10, "operator count");
  for (int seg = 0; out.pass && seg < 5; ++seg) {
    out.require(r.parent[2 * seg] == seg && r.parent[2 * seg + 1] == seg, "segment parents");
    const Op &a = r.ops[2 * seg], &b = r.ops[2 * seg + 1];
    out.require((a == s0 && b == s1) || (a == s1 && b == s0), "segment " + std::to_string(seg) + " operators");
  }
  if (out.pass) out.detail = psi.to_string();
  return out;
}

// ---- 3 -------------------------------------------------------------------------------

Outcome traversal_list_example() {
  Outcome out;
  auto X = presentation_from_json(fixtures::load("typ1.json"));
  auto j = fixtures::load("typ1_path.json");
  Path p = path_from_json(X, j);
  out.require(p.traversal() == Traversal(1, {{1, P}, {1, M}, {0, P}, {0, P}, {0, M}, {1, P}, {0, P}, {0, M}}),
              "traversal " + p.traversal().to_string());
  out.require(p.valid(), "path fails the face discipline");
  auto written = path_to_json(p);
  Path q = path_from_json(X, nlohmann::json::parse(written.dump()));
  out.require(q == p, "json round trip changed the path");
  out.require(nlohmann::json::parse(written["traversal"].dump()) == j["traversal"], "serialized traversal differs");
  if (out.pass) out.detail = p.traversal().to_string();
  return out;
}

// ---- 4 -------------------------------------------------------------------------------

Outcome contraction_example() {
  Outcome out;
  auto X = presentation_from_json(fixtures::load("typ0.json"));
  Path p = path_from_json(X, fixtures::load("typ0_path.json"));
  auto e = eta(p);
  std::string lengths;
  for (auto& z : e.zetas()) lengths += (lengths.empty() ? "" : ",") + std::to_string(z.length());
  out.require(lengths == "5,4,3,2,1,0", "component lengths " + lengths);
  out.require(e.valid(), "contraction fails the face discipline");
  out.require(e.source() == p, "s eta != id");
  out.require(e.target() == Path::refl(p.target()), "t eta != r t");
  out.require(e.map([](const Path& q) { return q.source(); }) == p, "M(s) eta != id");
  out.require(e.map([](const Path& q) { return q.target(); }) == const_path(p.traversal(), p.target()),
              "M(t) eta != constant path at the target");
  out.require(eta(Path::refl(p.source())) == MoorePath<Path>::refl(Path::refl(p.source())), "eta r != r r");
  if (out.pass) out.detail = "lengths " + lengths;
  return out;
}

// ---- 5 -------------------------------------------------------------------------------

// Two objects a, b with an inverse pair and two objects c, d with an inverse pair.
const char* four_objects = R"({"objects": ["a", "b", "c", "d"],
  "arrows": [{"name": "i", "src": "a", "tgt": "b"}, {"name": "j", "src": "b", "tgt": "a"},
             {"name": "k", "src": "c", "tgt": "d"}, {"name": "l", "src": "d", "tgt": "c"}],
  "comp": [["j", "i", "id_a"], ["i", "j", "id_b"], ["l", "k", "id_c"], ["k", "l", "id_d"]]})";

Outcome axiom_suites() {
  Outcome out;
  GroupoidModel G;
  int groupoid_laws = 0;
  for (auto src : {fixtures::load("two_obj.json"), fixtures::load("swap_fix.json"), nlohmann::json::parse(four_objects)}) {
    auto X = G.base(groupoid_from_json(src), "X");
    auto r = axiom_suite(G, AxiomInput<GroupoidModel>{X, all_functors(G, X, X, "f", 4)}, AxiomLevel::full, {}, 1);
    require_passed(out, r);
    require_exhaustive(out, r);
    require_all_anchors(out, r);
    groupoid_laws += static_cast<int>(r.laws.size());
  }
  ChainModel<Q> C;
  Rng rng(17);
  for (int trial = 0; trial < 4; ++trial) {
    auto A = random_complex<Q>(rng, "A", 0, 1, 2);
    auto B = random_complex<Q>(rng, "B", 0, 1, 2);
    auto r = axiom_suite(C, AxiomInput<ChainModel<Q>>{A, {random_chain_map(rng, C, A, B, "f")}}, AxiomLevel::full, {}, 3);
    require_passed(out, r);
    require_exhaustive(out, r);
    require_all_anchors(out, r);
  }
  SSetModel S;
  int fewest = -1;
  auto T = presentation_from_json(fixtures::load("simplex2.json"));
  auto Y = S.presented(T, "S");
  for (const char* file : {"horn.json", "simplex2.json"}) {
    auto P = presentation_from_json(fixtures::load(file));
    auto X = S.presented(P, "X");
    // Two distinct maps into the 2-simplex agreeing on an edge, so their pullback has nontrivial paths.
    auto maps = all_maps(P, T);
    const int edge = P->find(file == std::string("horn.json") ? "f" : "e01");
    std::vector<SMor> fs;
    std::size_t first = 0;
    for (std::size_t i = 0; i < maps.size() && fs.size() < 2; ++i) {
      const Cell& c = maps[i].assignment()[edge];
      if (fs.empty() ? c.deg.is_identity() : c == maps[first].assignment()[edge]) {
        if (fs.empty()) first = i;
        fs.push_back(S.presented_map(X, Y, maps[i], "f" + std::to_string(i)));
      }
    }
    out.require(fs.size() == 2, std::string(file) + ": no pair of maps agreeing on an edge");
    auto r = axiom_suite(S, AxiomInput<SSetModel>{X, fs}, AxiomLevel::full, {500, 2, 6}, 7);
    require_passed(out, r);
    require_all_anchors(out, r);
    for (auto& l : r.laws) {
      out.require(l.samples >= 500, std::string(file) + " " + l.anchor + ": " + std::to_string(l.samples) + " samples");
      fewest = fewest < 0 ? l.samples : std::min(fewest, l.samples);
    }
  }
  if (out.pass)
    out.detail = std::to_string(groupoid_laws) + " groupoid laws exhaustive; sset at least " + std::to_string(fewest) +
                 " samples per law";
  return out;
}

// ---- 6 -------------------------------------------------------------------------------

void require_lift_laws(Outcome& out, const SuiteReport& r) {
  require_passed(out, r);
  for (const char* a : {"lift/upper-triangle", "lift/lower-triangle", "lift/natural-in-l", "lift/natural-in-r"})
    require_cases(out, r, a, 200);
}

Outcome wfs_laws() {
  Outcome out;
  GroupoidModel G;
  auto I = G.base(groupoid_from_json(fixtures::load("two_obj.json")), "I");
  auto X = G.base(groupoid_from_json(fixtures::load("swap_fix.json")), "X");
  auto us = all_functors(G, I, X, "u");
  auto gs = all_functors(G, X, X, "g", 18);
  auto rg = wfs_suite(G, WfsInput<GroupoidModel>{I, us, composable_squares(G, us, gs)}, {}, 1);
  require_lift_laws(out, rg);
  require_exhaustive(out, rg);

  ChainModel<Q> C;
  Rng rng(23);
  auto A = random_complex<Q>(rng, "A", 0, 1, 2);
  auto B = random_complex<Q>(rng, "B", 0, 1, 2);
  std::vector<CMor<Q>> cu, cg;
  for (int i = 0; i < 15; ++i) cu.push_back(random_chain_map(rng, C, A, B, "u" + std::to_string(i)));
  for (int i = 0; i < 7; ++i) cg.push_back(random_chain_map(rng, C, B, B, "g" + std::to_string(i)));
  auto rc = wfs_suite(C, WfsInput<ChainModel<Q>>{A, {cu[0]}, composable_squares(C, cu, cg)}, {}, 2);
  require_lift_laws(out, rc);
  require_exhaustive(out, rc);

  SSetModel S;
  auto H = presentation_from_json(fixtures::load("horn.json"));
  auto T = presentation_from_json(fixtures::load("simplex2.json"));
  auto SX = S.presented(H, "H"), SY = S.presented(T, "S");
  std::vector<SMor> su, sg;
  for (auto& m : all_maps(H, T)) su.push_back(S.presented_map(SX, SY, m, "u" + std::to_string(su.size())));
  for (auto& m : all_maps(T, T)) sg.push_back(S.presented_map(SY, SY, m, "g" + std::to_string(sg.size())));
  auto rs = wfs_suite(S, WfsInput<SSetModel>{SX, {su[0]}, composable_squares(S, su, sg)}, {400, 2, 4}, 3);
  require_lift_laws(out, rs);
  if (out.pass) {
    auto cases = [](const SuiteReport& r) { return std::to_string(find_law(r, "lift/upper-triangle")->cases); };
    out.detail = "lift squares: groupoid " + cases(rg) + ", chain " + cases(rc) + ", sset " + cases(rs);
  }
  return out;
}

// ---- 7 -------------------------------------------------------------------------------

void require_j(Outcome& out, const SuiteReport& r, bool exhaustive) {
  require_passed(out, r);
  require_cases(out, r, "j/computation", 3);
  require_cases(out, r, "strong-j/computation", 2);
  require_cases(out, r, "strong-j/section", 2);
  if (exhaustive)
    for (const char* a : {"j/computation", "strong-j/computation"})
      out.require(find_law(r, a) && find_law(r, a)->exhaustive, r.backend + " " + a + " was sampled");
}

Outcome j_computation() {
  Outcome out;
  GroupoidModel G;
  IdModel<GroupoidModel> IG(G);
  auto I = G.base(groupoid_from_json(fixtures::load("two_obj.json")), "I");
  auto X = G.base(groupoid_from_json(fixtures::load("swap_fix.json")), "X");
  auto us = all_functors(G, I, X, "u");
  for (auto& A : {IG.closed(X), IG.closed(I), IG.path_fibration(us[0]), IG.path_fibration(us[3])})
    require_j(out, id_suite(G, A, {}, 1), true);

  ChainModel<Q> C;
  IdModel<ChainModel<Q>> IC(C);
  Rng rng(4);
  auto A0 = random_complex<Q>(rng, "A", 0, 1, 2), B = random_complex<Q>(rng, "B", 0, 1, 2);
  for (auto& A : {IC.closed(B), IC.path_fibration(random_chain_map(rng, C, A0, B, "u"))})
    require_j(out, id_suite(C, A, {}, 2), true);

  SSetModel S;
  IdModel<SSetModel> IS(S);
  auto H = presentation_from_json(fixtures::load("horn.json"));
  auto T = presentation_from_json(fixtures::load("simplex2.json"));
  auto SX = S.presented(H, "H"), SY = S.presented(T, "S");
  auto maps = all_maps(H, T);
  auto u = S.presented_map(SX, SY, maps.at(4), "u4");
  int sampled = 0;
  for (auto& A : {IS.closed(SX), IS.path_fibration(u)}) {
    auto r = id_suite(S, A, {120, 2, 4}, 3);
    require_j(out, r, false);
    if (auto l = find_law(r, "j/computation")) sampled += l->samples;
  }
  if (out.pass) out.detail = "groupoid and chain exhaustive; sset " + std::to_string(sampled) + " sampled J instances";
  return out;
}

// ---- 8 -------------------------------------------------------------------------------

void require_stability(Outcome& out, const SuiteReport& r) {
  require_passed(out, r);
  for (const char* a : {"stability/iso-inverse", "stability/iso-section", "stability/iso-endpoints",
                        "stability/refl-square", "stability/j-square"})
    require_cases(out, r, a, 100);
}

Outcome stability() {
  Outcome out;
  GroupoidModel G;
  IdModel<GroupoidModel> IG(G);
  auto I = G.base(groupoid_from_json(fixtures::load("two_obj.json")), "I");
  auto X = G.base(groupoid_from_json(fixtures::load("swap_fix.json")), "X");
  std::vector<Situation<GroupoidModel>> gsit;
  for (auto& u : all_functors(G, I, X, "u"))
    for (auto& f : all_functors(G, X, X, "f")) {
      auto A = IG.path_fibration(u);
      if (!G.arrows(IG.subst(A, f).Y.object).empty()) gsit.push_back({A, f});
    }
  auto rg = stability_suite(G, gsit, {}, 4);
  require_stability(out, rg);

  ChainModel<Q> C;
  IdModel<ChainModel<Q>> IC(C);
  Rng rng(8);
  auto B = random_complex<Q>(rng, "B", 0, 1, 2);
  std::vector<Situation<ChainModel<Q>>> csit;
  for (int k = 0; k < 5; ++k) {
    auto A0 = random_complex<Q>(rng, "A" + std::to_string(k), 0, 1, 2);
    auto A = IC.path_fibration(random_chain_map(rng, C, A0, B, "u" + std::to_string(k)));
    for (int i = 0; i < 20; ++i) {
      auto D = random_complex<Q>(rng, "D" + std::to_string(i), 0, 1, 2);
      csit.push_back({A, random_chain_map(rng, C, D, B, "f" + std::to_string(i))});
    }
  }
  auto rc = stability_suite(C, csit, {}, 5);
  require_stability(out, rc);

  SSetModel S;
  IdModel<SSetModel> IS(S);
  auto H = presentation_from_json(fixtures::load("horn.json"));
  auto T = presentation_from_json(fixtures::load("simplex2.json"));
  auto SX = S.presented(H, "H"), SY = S.presented(T, "S");
  std::vector<SMor> su, sg;
  for (auto& m : all_maps(H, T)) su.push_back(S.presented_map(SX, SY, m, "u" + std::to_string(su.size())));
  for (auto& m : all_maps(T, T)) sg.push_back(S.presented_map(SY, SY, m, "g" + std::to_string(sg.size())));
  std::vector<Situation<SSetModel>> ssit;
  for (auto& u : su)
    for (auto& f : sg) ssit.push_back({IS.path_fibration(u), f});
  auto rs = stability_suite(S, ssit, {400, 2, 4}, 6);
  require_stability(out, rs);
  if (out.pass)
    out.detail = "situations: groupoid " + std::to_string(gsit.size()) + ", chain " + std::to_string(csit.size()) +
                 ", sset " + std::to_string(ssit.size());
  return out;
}

// ---- 9 -------------------------------------------------------------------------------

Matrix<Q> identity_block(int n) { return Matrix<Q>::identity(n); }

void put(Matrix<Q>& into, int r0, int c0, const Matrix<Q>& block, int sign = 1) {
  for (int r = 0; r < block.rows(); ++r)
    for (int c = 0; c < block.cols(); ++c) into(r0 + r, c0 + c) = sign > 0 ? block(r, c) : -block(r, c);
}

Outcome chain_formulas() {
  Outcome out;
  ChainModel<Q> C;
  Rng rng(29);
  int degrees = 0;
  for (int trial = 0; out.pass && trial < 30; ++trial) {
    auto A = random_complex<Q>(rng, "A", -1, 2, 3);
    auto MA = C.path_object(A);
    auto MMA = C.path_object(MA);
    auto tau = C.reverse_paths(A), eta_ = C.contract(A);
    for (int n = A->lo - 1; n <= A->hi; ++n) {
      const int an = A->dim(n), an1 = A->dim(n + 1), am = A->dim(n - 1), an2 = A->dim(n + 2);
      const std::string at = "trial " + std::to_string(trial) + " degree " + std::to_string(n);
      out.require(MA->dim(n) == an + an1 + an, "dim (MA)_n at " + at);

      // d(a, f, b) = (da, b - a - df, db)
      Matrix<Q> d(am + A->dim(n) + am, an + an1 + an);
      put(d, 0, 0, A->diff(n));
      put(d, am, 0, identity_block(an), -1);
      put(d, am, an, A->diff(n + 1), -1);
      put(d, am, an + an1, identity_block(an));
      put(d, am + an, an + an1, A->diff(n));
      out.require(MA->diff(n) == d, "differential at " + at);

      // tau(a, f, b) = (b, -f, a)
      Matrix<Q> t(an + an1 + an, an + an1 + an);
      put(t, 0, an + an1, identity_block(an));
      put(t, an, an, identity_block(an1), -1);
      put(t, an + an1, 0, identity_block(an));
      out.require(tau.at(n) == t, "tau at " + at);

      // eta(a, f, b) = ((a, f, b), (f, 0, 0), (b, 0, b)) in MA_n + MA_{n+1} + MA_n
      const int mn = an + an1 + an, mn1 = an1 + an2 + an1;
      Matrix<Q> e(mn + mn1 + mn, mn);
      put(e, 0, 0, identity_block(mn));
      put(e, mn, an, identity_block(an1));
      put(e, mn + mn1, an + an1, identity_block(an));
      put(e, mn + mn1 + an + an1, an + an1, identity_block(an));
      out.require(MMA->dim(n) == mn + mn1 + mn, "dim (MMA)_n at " + at);
      out.require(eta_.at(n) == e, "eta at " + at);
      ++degrees;
    }
    out.require((C.is_chain_map(tau) && C.is_chain_map(eta_)), "tau or eta is not a chain map");
  }
  if (out.pass) out.detail = std::to_string(degrees) + " degrees over 30 random complexes";
  return out;
}

// ---- 10 ------------------------------------------------------------------------------

bool fails_with_witness(const SuiteReport& r) {
  auto j = r.to_json(false);
  for (auto& l : j["laws"])
    if (l["status"] == "fail" && l.contains("witness")) return true;
  return false;
}

Outcome mutation_sensitivity() {
  Outcome out;
  SSetModel S;
  auto X = S.presented(presentation_from_json(fixtures::load("horn.json")), "H");
  auto run = [&](unsigned fault_kind, const std::string& suite) {
    fault::Scoped mutate(fault_kind);
    if (suite == "axioms") return axiom_suite(S, AxiomInput<SSetModel>{X, {}}, AxiomLevel::full, {80, 2, 4}, 9);
    return wfs_suite(S, WfsInput<SSetModel>{X, {}, {}}, {60, 2, 4}, 9);
  };
  struct Case {
    unsigned kind;
    const char* name;
    const char* suite;
  };
  std::string failing;
  for (auto c : {Case{fault::plus_mirror, "plus_mirror", "axioms"}, Case{fault::eta_keep_first, "eta_keep_first", "axioms"},
                 Case{fault::pi_order, "pi_order", "wfs"}}) {
    auto a = run(c.kind, c.suite), b = run(c.kind, c.suite);
    out.require(!a.passed(), std::string(c.name) + ": every law still passes");
    out.require(fails_with_witness(a), std::string(c.name) + ": no serialized witness");
    out.require(a.to_json(false).dump() == b.to_json(false).dump(), std::string(c.name) + ": report not reproducible");
    failing += (failing.empty() ? "" : ", ") + std::string(c.name) + " " + std::to_string(a.failures());
  }
  out.require(run(fault::none, "axioms").passed() && run(fault::none, "wfs").passed(), "unmutated suites fail");
  if (out.pass) out.detail = "failing laws: " + failing;
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_s;  // 0 for none
  };
  const std::vector<Criterion> criteria{
      {"traversal action equals the exhaustive oracle", traversal_oracle, 30},
      {"degeneracy of the five-step vertex traversal", degeneracy_example, 0},
      {"one-dimensional traversal list round-trips", traversal_list_example, 0},
      {"contraction of the five-step vertex path", contraction_example, 0},
      {"axiom suites on all backends", axiom_suites, 120},
      {"factorization, structure and lifting laws", wfs_laws, 0},
      {"J computation rule and strong J", j_computation, 60},
      {"stability of identity types under substitution", stability, 0},
      {"chain path-object formulas as matrix identities", chain_formulas, 0},
      {"mutations are detected with witnesses", mutation_sensitivity, 0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && criteria[i].budget_s > 0 && s > criteria[i].budget_s) {
      out.pass = false;
      out.detail = "over the " + std::to_string(static_cast<int>(criteria[i].budget_s)) + " s budget";
    }
    failed += out.pass ? 0 : 1;
    std::printf("criterion %zu: %s  %s (%s; %.1f s)\n", i + 1, out.pass ? "PASS" : "FAIL", criteria[i].name,
                out.detail.c_str(), s);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
