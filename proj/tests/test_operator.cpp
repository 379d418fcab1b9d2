#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "pathobj/simplex/operator.hpp"

using namespace pathobj;
using Op = SimplicialOperator;

TEST_CASE("operator construction validates monotonicity and range") {
  CHECK_THROWS_AS(Op(1, {1, 0}), InputError);
  CHECK_THROWS_AS(Op(1, {0, 2}), InputError);
  CHECK_THROWS_AS(Op(1, {}), InputError);
  CHECK_NOTHROW(Op(2, {0, 0, 2}));
}

TEST_CASE("face and degeneracy images") {
  CHECK(Op::face(2, 1).images() == std::vector<int>{0, 2});
  CHECK(Op::degeneracy(1, 0).images() == std::vector<int>{0, 0, 1});
  CHECK(Op::degeneracy(1, 1).images() == std::vector<int>{0, 1, 1});
}

TEST_CASE("compose examples") {
  CHECK(compose(Op::face(2, 1), Op::face(1, 0)) == compose(Op::face(2, 0), Op::face(1, 0)));
  CHECK(compose(Op::degeneracy(0, 0), Op::face(1, 0)) == Op::identity(0));
  const Op a(2, {0, 1, 1, 2});
  CHECK(compose(a, Op::identity(3)) == a);
  CHECK(compose(Op::identity(2), a) == a);
  CHECK_THROWS_AS(compose(Op::face(2, 0), Op::face(2, 0)), InputError);
}

TEST_CASE("composition is associative with identity units") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int r[4];
    for (int& x : r) x = static_cast<int>(rng() % 4);
    auto pick = [&](int m, int n) {
      auto all = all_operators(m, n);
      return all[rng() % all.size()];
    };
    Op g = pick(r[0], r[1]), b = pick(r[1], r[2]), a = pick(r[2], r[3]);
    CHECK(compose(compose(a, b), g) == compose(a, compose(b, g)));
    CHECK(compose(a, Op::identity(r[2])) == a);
  }
}

TEST_CASE("simplicial identities hold exhaustively up to rank 5") {
  for (int n = 1; n <= 5; ++n) {
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        if (n >= 2) CHECK(compose(Op::face(n, j), Op::face(n - 1, i)) == compose(Op::face(n, i), Op::face(n - 1, j - 1)));
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        CHECK(compose(Op::degeneracy(n, j), Op::degeneracy(n + 1, i)) ==
              compose(Op::degeneracy(n, i), Op::degeneracy(n + 1, j + 1)));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i <= n; ++i) {
        Op lhs = compose(Op::degeneracy(n - 1, j), Op::face(n, i));
        if (i < j)
          CHECK(lhs == compose(Op::face(n - 1, i), Op::degeneracy(n - 2, j - 1)));
        else if (i == j || i == j + 1)
          CHECK(lhs == Op::identity(n - 1));
        else
          CHECK(lhs == compose(Op::face(n - 1, i - 1), Op::degeneracy(n - 2, j)));
      }
  }
}

TEST_CASE("ez_factorize examples") {
  auto id = ez_factorize(Op::identity(3));
  CHECK(id.epi == Op::identity(3));
  CHECK(id.mono == Op::identity(3));
  auto s = ez_factorize(Op(1, {0, 0, 1}));
  CHECK(s.epi == Op(1, {0, 0, 1}));
  CHECK(s.mono == Op::identity(1));
  auto f = ez_factorize(Op(2, {0, 0, 2}));
  CHECK(f.epi == Op::degeneracy(1, 0));
  CHECK(f.mono == Op::face(2, 1));
}

TEST_CASE("ez_factorize agrees with exhaustive enumeration up to rank 4") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (auto& a : all_operators(m, n)) {
        auto pairs = oracle::epi_mono_pairs(a);
        REQUIRE(pairs.size() == 1);
        auto em = ez_factorize(a);
        CHECK(em.epi == pairs[0].first);
        CHECK(em.mono == pairs[0].second);
      }
}

TEST_CASE("fiber is the half-open preimage range") {
  Op a(2, {0, 0, 2, 2, 2});
  CHECK(a.fiber(0) == std::pair{0, 2});
  CHECK(a.fiber(1) == std::pair{2, 2});
  CHECK(a.fiber(2) == std::pair{2, 5});
}
