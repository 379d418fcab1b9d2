#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "fixtures.hpp"
#include "pathobj/laws/id_laws.hpp"
#include "pathobj/model/chain.hpp"
#include "pathobj/model/groupoid.hpp"
#include "pathobj/model/sset.hpp"

using namespace pathobj;
using Q = Rational;

namespace {

void require_pass(const SuiteReport& r) {
  INFO(r.text());
  CHECK(r.passed());
  for (auto& l : r.laws) CHECK(l.samples > 0);
}

const LawRecord& record(const SuiteReport& r, const std::string& anchor) {
  for (auto& l : r.laws)
    if (l.anchor == anchor) return l;
  throw std::runtime_error("no law " + anchor);
}

struct Groupoids {
  GroupoidModel M;
  GObjPtr I = M.base(groupoid_from_json(fixtures::load("two_obj.json")), "I");
  GObjPtr X = M.base(groupoid_from_json(fixtures::load("swap_fix.json")), "X");
};

struct Ssets {
  SSetModel M;
  PresentationPtr H = presentation_from_json(fixtures::load("horn.json"));
  PresentationPtr S = presentation_from_json(fixtures::load("simplex2.json"));
  SObjPtr X = M.presented(H, "H"), Y = M.presented(S, "S");
  std::vector<SMor> into_S() const {
    std::vector<SMor> us;
    for (auto& m : all_maps(H, S)) us.push_back(M.presented_map(X, Y, m, "u" + std::to_string(us.size())));
    return us;
  }
  std::vector<SMor> endo_S() const {
    std::vector<SMor> gs;
    for (auto& m : all_maps(S, S)) gs.push_back(M.presented_map(Y, Y, m, "g" + std::to_string(gs.size())));
    return gs;
  }
};

int base_arrow(const GroupoidModel& M, const GMor& f, int a) { return M.apply(f, GElem::arrow(a)).id; }

}  // namespace

// ---- fiberwise path objects ------------------------------------------------------------

TEST_CASE("over the terminal context the fiberwise path object is the path object") {
  Groupoids g;
  IdModel<GroupoidModel> I(g.M);
  auto fp = I.fiberwise(g.M.terminal_map(g.X));
  std::set<GElem> image;
  for (auto& xi : g.M.arrows(fp.P.object)) image.insert(I.path_of(fp, xi));
  const auto MX = g.M.path_object(g.X);
  const auto& all = g.M.arrows(MX);
  CHECK(image.size() == g.M.arrows(fp.P.object).size());
  CHECK(image == std::set<GElem>(all.begin(), all.end()));

  Ssets s;
  IdModel<SSetModel> J(s.M);
  auto sp = J.fiberwise(s.M.terminal_map(s.X));
  Rng rng(1);
  for (auto& xi : s.M.probes(s.M.path_object(s.X), {100, 2, 5}, rng).elements) {
    CHECK(J.member(sp, xi));
    CHECK(J.path_of(sp, J.embed(sp, xi)) == xi);
  }
}

TEST_CASE("groupoid fiberwise paths are the squares whose sides map to identities") {
  Groupoids g;
  const GroupoidModel& M = g.M;
  IdModel<GroupoidModel> I(M);
  std::vector<GMor> xs = all_functors(M, g.I, g.X, "x");
  for (auto& e : all_functors(M, g.X, g.X, "e")) xs.push_back(e);
  for (auto& e : all_functors(M, g.X, g.I, "p")) xs.push_back(e);
  REQUIRE(xs.size() > 6);
  for (auto& x : xs) {
    const FinGroupoid& A = *x.dom->base;
    const FinGroupoid& B = *x.cod->base;
    // Independently: squares v f = g u in the base whose vertical sides f, g map to identities and
    // whose legs u, v have the same image.
    std::set<GElem> expect;
    const int n = A.arrow_count();
    for (int f = 0; f < n; ++f)
      for (int h = 0; h < n; ++h)
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) {
            if (A.arrow(u).src != A.arrow(f).src || A.arrow(u).tgt != A.arrow(h).src) continue;
            if (A.arrow(v).src != A.arrow(f).tgt || A.arrow(v).tgt != A.arrow(h).tgt) continue;
            if (A.compose(v, f) != A.compose(h, u)) continue;
            const int xf = base_arrow(M, x, f), xh = base_arrow(M, x, h);
            if (B.arrow(xf).src != B.arrow(xf).tgt || xf != B.arrow(xf).src) continue;
            if (B.arrow(xh).src != B.arrow(xh).tgt || xh != B.arrow(xh).src) continue;
            if (base_arrow(M, x, u) != base_arrow(M, x, v)) continue;
            expect.insert(GElem::square(GElem::arrow(f), GElem::arrow(h), GElem::arrow(u), GElem::arrow(v)));
          }
    auto fp = I.fiberwise(x);
    std::set<GElem> got;
    for (auto& xi : M.arrows(fp.P.object)) got.insert(I.path_of(fp, xi));
    INFO(x.label);
    CHECK(got == expect);
    const auto MA = M.path_object(x.dom);
    for (auto& p : M.arrows(MA)) CHECK(I.member(fp, p) == (expect.count(p) == 1));
  }
}

TEST_CASE("constant paths lie in every fiber") {
  Ssets s;
  IdModel<SSetModel> I(s.M);
  auto us = s.into_S();
  auto A = I.path_fibration(us[2]);
  auto fp = I.fiberwise(A.proj);
  Rng rng(4);
  for (auto& e : s.M.probes(A.total, {100, 2, 4}, rng).elements) {
    SElem c = SElem::path(const_path(SSetModel::random_traversal(rng, e.dim(), 3), e));
    CHECK(I.member(fp, c));
  }
}

TEST_CASE("sset identity-type elements are Moore paths and refl is the empty path") {
  Ssets s;
  IdModel<SSetModel> I(s.M);
  auto T = I.id_type(I.closed(s.Y));
  Rng rng(2);
  for (auto& x : s.M.probes(s.Y, {100, 2, 4}, rng).elements) {
    SElem p = I.path_of(T.fp, s.M.apply(T.fp.r, x));
    REQUIRE(p.kind() == SElem::Kind::path);
    CHECK(p.as_path().length() == 0);
    CHECK(p.as_path().source() == x);
  }
  for (auto& xi : s.M.probes(T.fp.P.object, {100, 2, 4}, rng).elements) {
    SElem p = I.path_of(T.fp, xi);
    CHECK(p.kind() == SElem::Kind::path);
    CHECK(p.as_path().valid());
  }
}

// ---- transport and the lifting lemmas -------------------------------------------------------

TEST_CASE("transport along identity paths and of refl") {
  Groupoids g;
  const GroupoidModel& M = g.M;
  IdModel<GroupoidModel> I(M);
  for (auto& u : all_functors(M, g.I, g.X, "u")) {
    auto A = I.path_fibration(u);
    auto fp = I.fiberwise(A.proj);
    auto tr = I.transport(A, fp);
    auto rG = M.refl(A.ctx);
    for (auto& xi : M.arrows(fp.P.object)) {
      GElem c = M.apply(A.proj, M.apply(fp.s, xi));
      CHECK(I.transport_apply(tr, M.apply(rG, c), xi) == xi);
    }
    for (auto& w : M.arrows(tr.Px.object)) {
      GElem psi = M.apply(tr.Px.first, w), y = M.apply(tr.Px.second, w);
      CHECK(I.transport_apply(tr, psi, M.apply(fp.r, y)) == M.apply(fp.r, A.r.op(psi, y)));
    }
  }
}

TEST_CASE("sset transport keeps the shape of the transported path") {
  Ssets s;
  IdModel<SSetModel> I(s.M);
  auto A = I.path_fibration(s.into_S()[5]);
  auto fp = I.fiberwise(A.proj);
  auto tr = I.transport(A, fp);
  auto over = s.M.pullback(s.M.target(A.ctx), s.M.compose(A.proj, fp.s));
  Rng rng(6);
  auto probes = s.M.probes(over.object, {150, 1, 4}, rng).elements;
  REQUIRE(probes.size() > 20);
  for (auto& v : probes) {
    SElem psi = s.M.apply(over.first, v), xi = s.M.apply(over.second, v);
    SElem out = I.transport_apply(tr, psi, xi);
    CHECK(I.path_of(fp, out).as_path().traversal() == I.path_of(fp, xi).as_path().traversal());
  }
}

TEST_CASE("the precartesian lift of an identity path is an identity path") {
  Groupoids g;
  IdModel<GroupoidModel> I(g.M);
  auto A = I.path_fibration(all_functors(g.M, g.I, g.X, "u")[3]);
  auto fp = I.fiberwise(A.proj);
  auto delta = I.precart(A, fp);
  auto rX = g.M.refl(A.total);
  for (auto& e : g.M.arrows(A.total)) CHECK(g.M.apply(delta, g.M.apply(rX, e)) == g.M.apply(fp.r, e));
}

TEST_CASE("the identity-type lift along identity paths is the identity") {
  ChainModel<Q> M;
  Rng rng(12);
  auto B = random_complex<Q>(rng, "B", 0, 1, 2);
  auto A0 = random_complex<Q>(rng, "A", 0, 1, 2);
  IdModel<ChainModel<Q>> I(M);
  auto T = I.id_type(I.path_fibration(random_chain_map(rng, M, A0, B, "u")));
  auto rXX = M.refl(T.XX.object);
  for (auto& c : M.probes(T.fp.P.object, {}, rng).elements)
    CHECK(T.id.r.op(M.apply(rXX, M.apply(T.id.proj, c)), c) == c);
}

TEST_CASE("on a closed groupoid the lift conjugates by the endpoint paths") {
  Groupoids g;
  const GroupoidModel& M = g.M;
  IdModel<GroupoidModel> I(M);
  auto T = I.id_type(I.closed(g.X));
  const FinGroupoid& X = *g.X->base;
  const GObj& XX = *T.XX.object;
  auto src = M.source(T.XX.object), tgt = M.target(T.XX.object);
  int checked = 0;
  for (int chi = 0; chi < X.arrow_count(); ++chi) {
    GElem e = GElem::arrow(chi);
    GElem xi = I.embed(T.fp, GElem::square(e, e, M.dom(*g.X, e), M.cod(*g.X, e)));
    for (int p1 = 0; p1 < X.arrow_count(); ++p1)
      for (int p2 = 0; p2 < X.arrow_count(); ++p2) {
        if (X.arrow(p1).tgt != X.arrow(chi).src || X.arrow(p2).tgt != X.arrow(chi).tgt) continue;
        GElem F = GElem::pair(GElem::arrow(p1), GElem::arrow(p2));
        GElem Phi = GElem::square(F, F, M.dom(XX, F), M.cod(XX, F));
        REQUIRE(M.apply(tgt, Phi) == M.apply(T.id.proj, xi));
        GElem out = T.id.r.op(Phi, xi);
        CHECK(M.apply(T.id.proj, out) == M.apply(src, Phi));
        // Independently: the arrow p2^-1 chi p1 of the base.
        GElem c = GElem::arrow(X.compose(X.inverse(p2), X.compose(chi, p1)));
        CHECK(I.path_of(T.fp, out) == GElem::square(c, c, M.dom(*g.X, c), M.cod(*g.X, c)));
        ++checked;
      }
  }
  CHECK(checked > 0);
}

// ---- substitution and Frobenius ----------------------------------------------------------------

TEST_CASE("substitution along the identity keeps the lifting") {
  Groupoids g;
  const GroupoidModel& M = g.M;
  IdModel<GroupoidModel> I(M);
  Wfs<GroupoidModel> W(M);
  auto A = I.path_fibration(all_functors(M, g.I, g.X, "u")[1]);
  auto S = I.subst(A, M.identity(A.ctx));
  auto sG = M.source(A.ctx);
  auto FY = W.factorize(S.type.proj).P;
  for (auto& v : M.arrows(FY.object)) {
    GElem phi = M.apply(FY.first, v), w = M.apply(FY.second, v);
    GElem out = S.type.r.op(phi, w);
    CHECK(M.apply(S.Y.first, out) == M.apply(sG, phi));
    CHECK(M.apply(S.fplus, out) == A.r.op(phi, M.apply(S.fplus, w)));
  }
  // A[id] and A have the same elements, through f+.
  std::set<GElem> seen;
  for (auto& w : M.arrows(S.Y.object)) seen.insert(M.apply(S.fplus, w));
  CHECK(seen.size() == M.arrows(S.Y.object).size());
  CHECK(seen.size() == M.arrows(A.total).size());
}

TEST_CASE("the substituted lifting is the unique one making f+ a morphism of R-maps") {
  Groupoids g;
  const GroupoidModel& M = g.M;
  IdModel<GroupoidModel> I(M);
  Wfs<GroupoidModel> W(M);
  auto us = all_functors(M, g.I, g.X, "u");
  auto fs = all_functors(M, g.X, g.X, "f");
  int checked = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    auto A = I.path_fibration(us[k]);
    auto S = I.subst(A, fs[k * 5 % fs.size()]);
    auto Mf = M.map_path(S.f);
    auto sD = M.source(S.f.dom);
    auto FY = W.factorize(S.type.proj).P;
    for (auto& v : M.arrows(FY.object)) {
      GElem phi = M.apply(FY.first, v), w = M.apply(FY.second, v);
      GElem want_base = M.apply(sD, phi), want_top = A.r.op(M.apply(Mf, phi), M.apply(S.fplus, w));
      // Independently: search the pullback for the elements over both.
      std::vector<GElem> hits;
      for (auto& y : M.arrows(S.Y.object))
        if (M.apply(S.Y.first, y) == want_base && M.apply(S.fplus, y) == want_top) hits.push_back(y);
      REQUIRE(hits.size() == 1);
      CHECK(S.type.r.op(phi, w) == hits[0]);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("Frobenius along a trivial L-structure is trivial") {
  Groupoids g;
  const GroupoidModel& M = g.M;
  IdModel<GroupoidModel> I(M);
  Wfs<GroupoidModel> W(M);
  auto B = I.path_fibration(all_functors(M, g.I, g.X, "u")[2]);
  auto fr = I.frobenius(B, W.trivial_l(B.ctx));
  auto rB = M.refl(B.total);
  for (auto& w : M.arrows(fr.sub.Y.object)) {
    CHECK(M.apply(fr.l.f, w) == M.apply(fr.sub.Y.second, w));
    CHECK(M.apply(fr.l.k, M.apply(fr.l.f, w)) == w);
  }
  for (auto& b : M.arrows(B.total)) {
    CHECK(M.apply(fr.l.theta.h, b) == M.apply(rB, b));
    CHECK(M.apply(fr.sub.Y.second, M.apply(fr.l.k, b)) == b);
  }
}

// ---- whole suites ------------------------------------------------------------------------------

TEST_CASE("groupoid identity types satisfy every law exhaustively") {
  Groupoids g;
  IdModel<GroupoidModel> I(g.M);
  std::vector<DependentType<GroupoidModel>> types{I.closed(g.X), I.closed(g.I)};
  auto us = all_functors(g.M, g.I, g.X, "u");
  types.push_back(I.path_fibration(us[0]));
  types.push_back(I.path_fibration(us[3]));
  for (auto& A : types) {
    auto r = id_suite(g.M, A, {}, 1);
    require_pass(r);
    for (auto& l : r.laws) CHECK(l.exhaustive);
    CHECK(record(r, "j/computation").cases == 3);
    CHECK(record(r, "strong-j/computation").cases == 2);
  }
}

TEST_CASE("chain identity types satisfy every law as exact identities") {
  ChainModel<Q> M;
  Rng rng(31);
  IdModel<ChainModel<Q>> I(M);
  auto B = random_complex<Q>(rng, "B", 0, 1, 2);
  auto A0 = random_complex<Q>(rng, "A", 0, 1, 2);
  for (auto& A : {I.closed(B), I.path_fibration(random_chain_map(rng, M, A0, B, "u"))}) {
    auto r = id_suite(M, A, {}, 2);
    require_pass(r);
    for (auto& l : r.laws) CHECK(l.exhaustive);
  }
}

TEST_CASE("sset identity types satisfy every law on sampled paths") {
  Ssets s;
  IdModel<SSetModel> I(s.M);
  for (auto& A : {I.closed(s.X), I.path_fibration(s.into_S()[4])}) {
    auto r = id_suite(s.M, A, {120, 2, 4}, 3);
    require_pass(r);
  }
}

TEST_CASE("identity types are stable under substitution in every backend") {
  SECTION("groupoid") {
    Groupoids g;
    IdModel<GroupoidModel> I(g.M);
    std::vector<Situation<GroupoidModel>> sit;
    for (auto& u : all_functors(g.M, g.I, g.X, "u"))
      for (auto& f : all_functors(g.M, g.X, g.X, "f")) {
        auto A = I.path_fibration(u);
        if (!g.M.arrows(I.subst(A, f).Y.object).empty()) sit.push_back({A, f});
      }
    REQUIRE(sit.size() >= 100);
    auto r = stability_suite(g.M, sit, {}, 4);
    require_pass(r);
    CHECK(record(r, "stability/j-square").exhaustive);
    CHECK(record(r, "stability/j-square").cases >= 100);
  }
  SECTION("chain") {
    ChainModel<Q> M;
    Rng rng(8);
    IdModel<ChainModel<Q>> I(M);
    auto B = random_complex<Q>(rng, "B", 0, 1, 2);
    std::vector<Situation<ChainModel<Q>>> sit;
    for (int k = 0; k < 5; ++k) {
      auto A0 = random_complex<Q>(rng, "A" + std::to_string(k), 0, 1, 2);
      auto A = I.path_fibration(random_chain_map(rng, M, A0, B, "u" + std::to_string(k)));
      for (int i = 0; i < 20; ++i) {
        auto D = random_complex<Q>(rng, "D" + std::to_string(i), 0, 1, 2);
        sit.push_back({A, random_chain_map(rng, M, D, B, "f" + std::to_string(i))});
      }
    }
    auto r = stability_suite(M, sit, {}, 5);
    require_pass(r);
    CHECK(record(r, "stability/j-square").cases >= 100);
  }
  SECTION("sset") {
    Ssets s;
    IdModel<SSetModel> I(s.M);
    std::vector<Situation<SSetModel>> sit;
    for (auto& u : s.into_S())
      for (auto& f : s.endo_S()) sit.push_back({I.path_fibration(u), f});
    REQUIRE(sit.size() >= 100);
    auto r = stability_suite(s.M, sit, {400, 2, 4}, 6);
    require_pass(r);
    CHECK(record(r, "stability/j-square").cases >= 100);
  }
}
