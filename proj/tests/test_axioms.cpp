#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "pathobj/fault.hpp"
#include "pathobj/laws/axioms.hpp"
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

bool some_law_fails_with_input(const SuiteReport& r) {
  for (auto& l : r.laws)
    if (!l.passed && l.witness && l.witness->contains("input")) return true;
  return false;
}

}  // namespace

TEST_CASE("groupoid backend satisfies every axiom exhaustively") {
  GroupoidModel M;
  for (const char* file : {"two_obj.json", "swap_fix.json"}) {
    auto X = M.base(groupoid_from_json(fixtures::load(file)), "X");
    auto r = axiom_suite(M, AxiomInput<GroupoidModel>{X, {}}, AxiomLevel::full, {}, 1);
    require_pass(r);
    for (auto& l : r.laws) CHECK(l.exhaustive);
  }
}

TEST_CASE("groupoid naturality along a supplied functor") {
  GroupoidModel M;
  auto X = M.base(groupoid_from_json(fixtures::load("swap_fix.json")), "X");
  auto I = M.base(groupoid_from_json(fixtures::load("two_obj.json")), "I");
  auto f = groupoid_map_from_json(M, I, X,
                                  nlohmann::json::parse(R"({"objects":{"a":"p0","b":"p1"},"arrows":{"i":"g01","j":"g10"}})"),
                                  "f");
  auto g = groupoid_map_from_json(M, I, X,
                                  nlohmann::json::parse(R"({"objects":{"a":"p1","b":"p0"},"arrows":{"i":"g10","j":"g01"}})"),
                                  "g");
  require_pass(axiom_suite(M, AxiomInput<GroupoidModel>{I, {f, g}}, AxiomLevel::full, {}, 2));
}

TEST_CASE("chain backend satisfies every axiom as exact identities") {
  ChainModel<Q> M;
  Rng rng(17);
  for (int trial = 0; trial < 4; ++trial) {
    auto A = random_complex<Q>(rng, "A", 0, 1, 2);
    auto B = random_complex<Q>(rng, "B", 0, 1, 2);
    auto f = random_chain_map(rng, M, A, B, "f");
    auto r = axiom_suite(M, AxiomInput<ChainModel<Q>>{A, {f}}, AxiomLevel::full, {}, 3);
    require_pass(r);
    for (auto& l : r.laws) CHECK(l.exhaustive);
  }
  auto I = complex_from_json<Q>(fixtures::load("chain_interval.json"), "I");
  require_pass(axiom_suite(M, AxiomInput<ChainModel<Q>>{I, {}}, AxiomLevel::full, {}, 4));
}

TEST_CASE("chain backend over a prime field") {
  ChainModel<Fp<5>> M;
  auto I = complex_from_json<Fp<5>>(fixtures::load("chain_interval.json"), "I");
  require_pass(axiom_suite(M, AxiomInput<ChainModel<Fp<5>>>{I, {}}, AxiomLevel::full, {}, 5));
}

TEST_CASE("sset backend satisfies every axiom on sampled simplices") {
  SSetModel M;
  ProbeConfig cfg{500, 2, 6};
  for (const char* file : {"horn.json", "simplex2.json"}) {
    auto X = M.presented(presentation_from_json(fixtures::load(file)), "X");
    auto r = axiom_suite(M, AxiomInput<SSetModel>{X, {}}, AxiomLevel::full, cfg, 7);
    require_pass(r);
    for (auto& l : r.laws) CHECK(l.samples >= 500);
  }
}

TEST_CASE("sset naturality along a presented map") {
  SSetModel M;
  auto H = presentation_from_json(fixtures::load("horn.json"));
  auto S = presentation_from_json(fixtures::load("simplex2.json"));
  auto maps = all_maps(H, S);
  REQUIRE(!maps.empty());
  auto X = M.presented(H, "H"), Y = M.presented(S, "S");
  // Two distinct maps agreeing on the edge f, so that their pullback has nontrivial paths.
  int fgen = H->find("f");
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < maps.size() && picked.size() < 2; ++i) {
    const Cell& c = maps[i].assignment()[fgen];
    if (picked.empty() ? c.deg.is_identity() : c == maps[picked[0]].assignment()[fgen]) picked.push_back(i);
  }
  std::vector<SMor> fs;
  for (auto i : picked) fs.push_back(M.presented_map(X, Y, maps[i], "f" + std::to_string(i)));
  REQUIRE(fs.size() == 2);
  require_pass(axiom_suite(M, AxiomInput<SSetModel>{X, fs}, AxiomLevel::full, {100, 2, 4}, 8));
}

TEST_CASE("weak levels drop exactly the stated laws") {
  GroupoidModel M;
  auto X = M.base(groupoid_from_json(fixtures::load("two_obj.json")), "X");
  auto full = axiom_suite(M, AxiomInput<GroupoidModel>{X, {}}, AxiomLevel::full, {}, 1);
  auto p = axiom_suite(M, AxiomInput<GroupoidModel>{X, {}}, AxiomLevel::prime, {}, 1);
  auto pp = axiom_suite(M, AxiomInput<GroupoidModel>{X, {}}, AxiomLevel::double_prime, {}, 1);
  CHECK(full.laws.size() == p.laws.size() + 2);
  CHECK(p.laws.size() == pp.laws.size() + 1);
  auto has = [](const SuiteReport& r, const std::string& anchor) {
    for (auto& l : r.laws)
      if (l.anchor == anchor) return true;
    return false;
  };
  CHECK(has(full, "internal-category/associativity"));
  CHECK_FALSE(has(p, "internal-category/associativity"));
  CHECK_FALSE(has(p, "involution/anti-composition"));
  CHECK(has(p, "internal-category/unit-at-target"));
  CHECK_FALSE(has(pp, "internal-category/unit-at-target"));
  CHECK(has(pp, "internal-category/unit-at-source"));
  CHECK_THROWS_AS(parse_axiom_level("2"), InputError);
}

TEST_CASE("flipping the mirror rule for + segments breaks an sset law") {
  SSetModel M;
  auto X = M.presented(presentation_from_json(fixtures::load("simplex2.json")), "X");
  fault::Scoped mutate(fault::plus_mirror);
  auto r = axiom_suite(M, AxiomInput<SSetModel>{X, {}}, AxiomLevel::full, {200, 2, 4}, 9);
  CHECK_FALSE(r.passed());
  CHECK(some_law_fails_with_input(r));
}

TEST_CASE("keeping the first segment in the contraction breaks an sset axiom") {
  fault::Scoped mutate(fault::eta_keep_first);
  SSetModel S;
  auto X = S.presented(presentation_from_json(fixtures::load("horn.json")), "X");
  auto r = axiom_suite(S, AxiomInput<SSetModel>{X, {}}, AxiomLevel::full, {200, 2, 4}, 10);
  CHECK_FALSE(r.passed());
  CHECK(some_law_fails_with_input(r));
}

TEST_CASE("axiom reports are reproducible under a fixed seed") {
  SSetModel M;
  auto X = M.presented(presentation_from_json(fixtures::load("horn.json")), "X");
  auto a = axiom_suite(M, AxiomInput<SSetModel>{X, {}}, AxiomLevel::full, {50, 2, 4}, 11);
  auto b = axiom_suite(M, AxiomInput<SSetModel>{X, {}}, AxiomLevel::full, {50, 2, 4}, 11);
  CHECK(a.to_json(false).dump() == b.to_json(false).dump());
  fault::Scoped mutate(fault::plus_mirror);
  auto c = axiom_suite(M, AxiomInput<SSetModel>{X, {}}, AxiomLevel::full, {50, 2, 4}, 11);
  auto d = axiom_suite(M, AxiomInput<SSetModel>{X, {}}, AxiomLevel::full, {50, 2, 4}, 11);
  CHECK(c.to_json(false).dump() == d.to_json(false).dump());
}
