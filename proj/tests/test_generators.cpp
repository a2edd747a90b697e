#include "doctest.h"
#include "oracles.hpp"
#include "qelim/qelim.hpp"

using namespace qelim;

TEST_SUITE("generators") {
  TEST_CASE("standard functions") {
    CHECK(standard("dictator", 3, 1).evaluate(std::vector<Symbol>{1, 0, 0}) == 1);
    CHECK(standard("majority", 3).evaluate(std::vector<Symbol>{1, 1, 0}) == 1);
    CHECK(standard("parity", 4).evaluate(std::vector<Symbol>{1, 1, 1, 1}) == 0);
    CHECK(standard("or", 3).evaluate(std::vector<Symbol>{0, 0, 0}) == 0);
    CHECK(standard("and", 3).evaluate(std::vector<Symbol>{1, 1, 1}) == 1);
    CHECK_THROWS_AS(standard("xor", 3), DomainError);
    CHECK_THROWS_AS(standard("majority", 4), DomainError);
    CHECK_THROWS_AS(dictator(3, 4), ShapeError);
    CHECK_THROWS_AS(parity(25), CapacityError);
  }

  TEST_CASE("tribes") {
    CHECK(tribes(1, 4) == and_function(4));
    CHECK(tribes(3, 1) == or_function(3));
    const auto d = output_distribution(tribes(2, 2), ProductDistribution::uniform(4, 2));
    CHECK(d.at(0) == Rat(9, 16));
    CHECK(tribes(2, 2).evaluate(std::vector<Symbol>{0, 1, 1, 1}) == 1);
    CHECK(tribes(2, 2).evaluate(std::vector<Symbol>{0, 1, 1, 0}) == 0);
    CHECK_THROWS_AS(tribes(0, 2), DomainError);
  }

  TEST_CASE("tribes influence closed form") {
    CHECK(tribes_influence_closed_form(2, 2) == Rat(3, 16));
    CHECK(tribes_influence_closed_form(1, 1) == Rat(1, 2));
    CHECK(tribes_influence_closed_form(4, 2) == Rat(27, 256));
    for (std::size_t s = 1; s <= 4; ++s) {
      for (std::size_t t = 1; s * t <= 6; ++t) {
        const auto f = tribes(s, t);
        const auto mu = ProductDistribution::uniform(s * t, 2);
        for (std::size_t i = 1; i <= s * t; ++i) {
          CHECK(oracle::influence(f, mu, i) == tribes_influence_closed_form(s, t));
        }
      }
    }
  }

  TEST_CASE("tribes_auto") {
    auto c = tribes_auto(4);
    CHECK(c.s == 2);
    CHECK(c.t == 2);
    CHECK(tribes_one_probability(2, 2) == Rat(7, 16));

    c = tribes_auto(7);
    CHECK(((c.s == 1 && c.t == 7) || (c.s == 7 && c.t == 1)));

    for (std::size_t n = 2; n <= 12; ++n) {
      c = tribes_auto(n);
      CHECK(c.s * c.t == n);
      const auto d = output_distribution(c.f, ProductDistribution::uniform(n, 2));
      CHECK(d.at(1) == tribes_one_probability(c.s, c.t));
    }
    // n = 2: (1,2) gives 1/4 and (2,1) gives 3/4, equally far from 1/2;
    // the larger block width wins.
    CHECK(tribes_auto(2).t == 2);
  }

  TEST_CASE("perturb_tribes") {
    const auto g = tribes(2, 2);
    const auto u4 = ProductDistribution::uniform(4, 2);
    CHECK(perturb_tribes(g, Rat(0)) == g);
    CHECK(perturb_tribes(g, Rat(1)) == dictator(4, 1));

    const auto f = perturb_tribes(g, Rat(1, 4));
    CHECK(closeness(f, g, u4) <= Rat(1, 4));
    CHECK(oracle::influence(f, u4, 1) > oracle::influence(g, u4, 1));
    CHECK_THROWS_AS(perturb_tribes(parity(2), Rat(3, 2)), DomainError);
    CHECK_THROWS_AS(perturb_tribes(FiniteFunction(1, 3, {0, 1}, {0, 1, 1}), Rat(1, 2)), DomainError);
  }

  TEST_CASE("perturbation changes exactly the selected inputs that disagree with x1") {
    for (std::size_t s = 1; s <= 3; ++s) {
      for (std::size_t t = 1; t <= 3; ++t) {
        const auto g = tribes(s, t);
        const std::size_t n = s * t;
        for (std::int64_t num = 0; num <= 8; ++num) {
          const Rat delta(num, 8);
          const auto f = perturb_tribes(g, delta);
          const std::size_t selected = (g.size() * static_cast<std::size_t>(num)) / 8;
          std::size_t changed = 0;
          for (std::size_t index = 0; index < g.size(); ++index) {
            const Label x1 = g.symbol_at(index, 1);
            if (index < selected) {
              CHECK(f.label_at(index) == x1);
              if (g.label_at(index) != x1) ++changed;
            } else {
              CHECK(f.label_at(index) == g.label_at(index));
            }
          }
          const Rat expected(static_cast<std::int64_t>(changed), static_cast<std::int64_t>(g.size()));
          CHECK(closeness(f, g, ProductDistribution::uniform(n, 2)) == expected);
          CHECK(expected <= delta);
        }
      }
    }
  }
}
