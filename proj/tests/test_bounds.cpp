#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qelim/qelim.hpp"

using namespace qelim;

namespace {

Rat as_rat(std::size_t d) { return Rat(static_cast<std::int64_t>(d)); }

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("theorem1_bound") {
    const auto u2 = ProductDistribution::uniform(2, 2);
    const auto u3 = ProductDistribution::uniform(3, 2);

    auto r = theorem1_bound(and_function(2), u2, Rat(0));
    CHECK(r.plurality_error == Rat(1, 4));
    CHECK(r.inf_max == Rat(1, 4));
    CHECK(r.inf_argmax == 1);
    CHECK(r.bound == Rat(1));
    REQUIRE(r.variance_ratio.has_value());
    CHECK(r.variance_ratio->ratio == Rat(3));
    CHECK(as_rat(distributional_complexity(and_function(2), u2, Rat(0))) >= r.bound);

    r = theorem1_bound(parity(3), u3, Rat(0));
    CHECK(r.bound == Rat(1));
    CHECK(distributional_complexity(parity(3), u3, Rat(0)) == 3);

    CHECK(theorem1_bound(constant(3, 0), u3, Rat(0)).bound == Rat(0));
    CHECK(theorem1_bound(and_function(2), u2, Rat(1, 2)).bound == Rat(0));
    CHECK_THROWS_AS(theorem1_bound(and_function(2), u2, Rat(3, 2)), DomainError);

    const FiniteFunction three(1, 3, {0, 1, 2}, {0, 1, 2});
    CHECK_FALSE(theorem1_bound(three, ProductDistribution::uniform(1, 3), Rat(0)).variance_ratio);
  }

  TEST_CASE("corollary_bound") {
    const auto u4 = ProductDistribution::uniform(4, 2);
    const auto g = tribes(2, 2);
    const auto f = perturb_tribes(g, Rat(1, 4));

    const auto same = corollary_bound(f, f, u4, Rat(1, 10));
    const auto direct = theorem1_bound(f, u4, Rat(1, 10));
    CHECK(same.delta == Rat(0));
    CHECK(same.report.bound == direct.bound);
    CHECK(same.report.epsilon == direct.epsilon);

    const auto c = corollary_bound(f, g, u4, Rat(0));
    CHECK(c.delta == Rat(1, 16));
    CHECK(c.report.epsilon == Rat(1, 16));
    CHECK(c.report.inf_max == Rat(3, 16));
    CHECK(c.report.bound == Rat(2));
    CHECK(as_rat(distributional_complexity(f, u4, Rat(0))) >= c.report.bound);

    CHECK(corollary_bound(f, constant(4, 0), u4, Rat(0)).report.bound == Rat(0));
    CHECK_THROWS_AS(corollary_bound(f, parity(3), u4, Rat(0)), ShapeError);
  }

  TEST_CASE("best_bound") {
    const auto u4 = ProductDistribution::uniform(4, 2);
    const auto f = parity(4);
    const std::vector<FiniteFunction> only{f};
    const auto b = best_bound(f, only, u4, Rat(0));
    CHECK(b.index == 0);
    CHECK(b.result.report.bound == theorem1_bound(f, u4, Rat(0)).bound);

    const std::vector<FiniteFunction> none;
    CHECK_THROWS_AS(best_bound(f, none, u4, Rat(0)), PreconditionError);

    const std::vector<FiniteFunction> with_constant{constant(4, 0), f};
    CHECK(best_bound(f, with_constant, u4, Rat(0)).index == 1);
  }

  TEST_CASE("perturbed tribes(4,2) at n = 8") {
    // Hand derivation, uniform inputs. The 64 perturbed inputs are those with
    // x1 = x2 = 0; tribes is 1 on 37 of them (1 - (3/4)^3 of 64), so
    // delta = 37/256 and Pr[f = 1] = 175/256 - 37/256 = 138/256.
    // f is symmetric in x1, x2 with inf_1 = 1/2 (1/2 * 37/64 + 1/2 * 27/64)
    // = 1/4, and inf_j = 1/2 * 9/64 for j >= 3, so inf_max(f) = 1/4:
    //   bound(f) = (118/256) / (1/4)             = 59/32
    //   bound(g) = (81/256 - 37/256) / (27/256)  = 44/27
    const auto u8 = ProductDistribution::uniform(8, 2);
    const auto g = tribes(4, 2);
    const auto f = perturb_tribes(g, Rat(1, 4));
    CHECK(closeness(f, g, u8) == Rat(37, 256));
    CHECK(max_influence(f, u8).value == Rat(1, 4));
    CHECK(oracle::influence(f, u8, 1) == Rat(1, 4));

    const std::vector<FiniteFunction> candidates{f, g};
    const auto b = best_bound(f, candidates, u8, Rat(0));
    CHECK(corollary_bound(f, f, u8, Rat(0)).report.bound == Rat(59, 32));
    CHECK(corollary_bound(f, g, u8, Rat(0)).report.bound == Rat(44, 27));
    CHECK(b.index == 0);
    CHECK(as_rat(distributional_complexity(f, u8, Rat(0))) >= b.result.report.bound);
  }

  TEST_CASE("bounds never exceed the exact complexity") {
    std::mt19937 rng(41);
    const std::vector<Rat> epsilons{Rat(0), Rat(1, 10), Rat(1, 4), Rat(1, 2)};
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 2 + trial % 3;
      const auto mu = oracle::random_distribution(rng, n, 2);
      const auto f = oracle::random_function(rng, n, 2, {0, 1});
      // g agrees with f except on a few random inputs.
      auto table = f.table();
      std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
      for (int flips = 0; flips < 2; ++flips) table[pick(rng)] ^= 1U;
      const FiniteFunction g(n, 2, {0, 1}, table);

      Rat previous(1000);
      for (const Rat& eps : epsilons) {
        const Rat d = as_rat(distributional_complexity(f, mu, eps));
        const Rat t1 = theorem1_bound(f, mu, eps).bound;
        CHECK(t1 <= d);
        CHECK(t1 <= previous);
        previous = t1;

        const auto c = corollary_bound(f, g, mu, eps);
        CHECK(c.report.bound <= d);
        const Rat shifted = std::min(eps + c.delta, Rat(1));
        CHECK(d >= as_rat(distributional_complexity(g, mu, shifted)));
      }
    }
  }
}
