#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qelim/qelim.hpp"

using namespace qelim;
using oracle::L;
using oracle::Q;

TEST_SUITE("decision-tree") {
  TEST_CASE("validate") {
    CHECK_FALSE(validate(L(0), 3, 2).has_value());
    CHECK_FALSE(validate(oracle::full_tree(parity(3)), 3, 2).has_value());

    const auto repeated = validate(Q(1, {L(0), Q(1, {L(0), L(1)})}), 2, 2);
    REQUIRE(repeated.has_value());
    CHECK(repeated->path == "1→1");

    const auto range = validate(Q(2, {L(0), Q(4, {L(0), L(1)})}), 3, 2);
    REQUIRE(range.has_value());
    CHECK(range->path == "2→4");

    const auto arity = validate(Q(1, {L(0)}), 2, 2);
    REQUIRE(arity.has_value());
    CHECK(arity->path == "1");

    CHECK_THROWS_AS(require_valid(Q(1, {L(0), Q(1, {L(0), L(1)})}), 2, 2), ShapeError);
  }

  TEST_CASE("run") {
    const auto any = std::vector<Symbol>{0, 1, 1};
    auto r = run(L(1), any);
    CHECK(r.output == 1);
    CHECK(r.queries.empty());

    r = run(Q(1, {L(0), L(1)}), std::vector<Symbol>{1, 0});
    CHECK(r.output == 1);
    CHECK(r.queries == std::vector<std::size_t>{1});

    r = run(oracle::full_tree(parity(3)), std::vector<Symbol>{1, 1, 0});
    CHECK(r.output == 0);
    CHECK(r.queries == std::vector<std::size_t>{1, 2, 3});

    CHECK_THROWS_AS(run(Q(3, {L(0), L(1)}), std::vector<Symbol>{1, 0}), ShapeError);
    CHECK_THROWS_AS(run(Q(1, {L(0), L(1)}), std::vector<Symbol>{2, 0}), ShapeError);
  }

  TEST_CASE("depth") {
    CHECK(depth(L(4)) == 0);
    CHECK(depth(Q(1, {L(0), L(1)})) == 1);
    CHECK(depth(oracle::full_tree(parity(3))) == 3);
    CHECK(depth(Q(1, {L(0), Q(2, {L(0), L(1)})})) == 2);
  }

  TEST_CASE("distributional_error") {
    const auto u2 = ProductDistribution::uniform(2, 2);
    const auto u3 = ProductDistribution::uniform(3, 2);
    CHECK(distributional_error(oracle::full_tree(parity(3)), parity(3), u3) == Rat(0));
    CHECK(distributional_error(L(0), and_function(2), u2) == Rat(1, 4));
    CHECK(distributional_error(Q(1, {L(0), L(1)}), parity(2), u2) == Rat(1, 2));
    // A label outside the function's output set is always wrong.
    CHECK(distributional_error(L(7), and_function(2), u2) == Rat(1));
    CHECK_THROWS_AS(distributional_error(Q(1, {L(0), Q(1, {L(0), L(1)})}), parity(2), u2),
                    ShapeError);
  }

  TEST_CASE("randomized_error") {
    const auto u2 = ProductDistribution::uniform(2, 2);
    const auto and2 = and_function(2);
    const auto correct = oracle::full_tree(and2);

    CHECK(randomized_error(RandomizedTree({{Rat(1), Q(1, {L(0), L(1)})}}), and2, u2) ==
          distributional_error(Q(1, {L(0), L(1)}), and2, u2));
    CHECK(randomized_error(RandomizedTree({{Rat(1, 2), L(0)}, {Rat(1, 2), L(1)}}), and2, u2) ==
          Rat(1, 2));
    CHECK(randomized_error(RandomizedTree({{Rat(1, 2), correct}, {Rat(1, 2), L(1)}}), and2, u2) ==
          Rat(3, 8));

    CHECK_THROWS_AS(RandomizedTree({}), ShapeError);
    CHECK_THROWS_AS(RandomizedTree({{Rat(1, 2), L(0)}}), DomainError);
    CHECK_THROWS_AS(RandomizedTree({{Rat(0), L(0)}, {Rat(1), L(1)}}), DomainError);
  }

  TEST_CASE("expected_queries") {
    const auto u2 = ProductDistribution::uniform(2, 2);
    CHECK(expected_queries(L(0), u2) == Rat(0));
    CHECK(expected_queries(Q(1, {L(0), L(1)}), u2) == Rat(1));
    CHECK(expected_queries(Q(1, {L(0), Q(2, {L(0), L(1)})}), u2) == Rat(3, 2));
    CHECK(expected_queries(Q(1, {L(0), Q(2, {L(0), L(1)})}), ProductDistribution::bernoulli(2, Rat(1, 4))) ==
          Rat(5, 4));
  }

  TEST_CASE("recursive error equals flat enumeration over all small trees") {
    std::mt19937 rng(21);
    const auto trees = verify::all_trees(3, 2, {0, 1}, 2);
    for (int trial = 0; trial < 4; ++trial) {
      const auto f = oracle::random_function(rng, 3, 2, {0, 1});
      const auto mu = oracle::random_distribution(rng, 3, 2);
      for (const auto& t : trees) {
        const Rat e = distributional_error(t, f, mu);
        CHECK(e == oracle::flat_error(t, f, mu));
        CHECK(e >= Rat(0));
        CHECK(e <= Rat(1));
      }
    }
  }

  TEST_CASE("zero error exactly when the tree computes f") {
    const auto mu = ProductDistribution::bernoulli(3, Rat(1, 3));
    const auto f = majority(3);
    for (const auto& t : verify::all_trees(3, 2, {0, 1}, 3)) {
      bool correct = true;
      for (const auto& x : oracle::all_inputs(3, 2)) correct = correct && run(t, x).output == f.evaluate(x);
      if (correct != distributional_error(t, f, mu).is_zero()) {
        FAIL("zero-error characterization broken");
      }
    }
  }

  TEST_CASE("splitting a mixture component leaves the error unchanged") {
    std::mt19937 rng(4);
    const auto trees = verify::all_trees(2, 2, {0, 1}, 2);
    std::uniform_int_distribution<std::size_t> pick(0, trees.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      const auto f = oracle::random_function(rng, 2, 2, {0, 1});
      const auto mu = oracle::random_distribution(rng, 2, 2);
      const auto& a = trees[pick(rng)];
      const auto& b = trees[pick(rng)];
      const RandomizedTree whole({{Rat(1, 3), a}, {Rat(2, 3), b}});
      const RandomizedTree split({{Rat(1, 6), a}, {Rat(1, 6), a}, {Rat(2, 3), b}});
      CHECK(randomized_error(whole, f, mu) == randomized_error(split, f, mu));
    }
  }

  TEST_CASE("depth bounds every query list") {
    const auto trees = verify::all_trees(3, 2, {0, 1}, 2);
    for (const auto& t : trees) {
      for (const auto& x : oracle::all_inputs(3, 2)) CHECK(run(t, x).queries.size() <= depth(t));
    }
  }
}
