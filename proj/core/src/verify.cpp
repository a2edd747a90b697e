#include "qelim/verify.hpp"

#include <functional>
#include <stdexcept>

#include "qelim/analysis.hpp"
#include "qelim/bounds.hpp"
#include "qelim/distribution.hpp"
#include "qelim/elimination.hpp"
#include "qelim/errors.hpp"
#include "qelim/exact_optimal.hpp"
#include "qelim/generators.hpp"

namespace qelim::verify {

std::vector<NamedFunction> grid_functions() {
  std::vector<NamedFunction> out;
  for (std::size_t n = 2; n <= 4; ++n) {
    const std::string suffix = "(" + std::to_string(n) + ")";
    out.push_back({"dictator" + suffix, dictator(n, 1)});
    out.push_back({"and" + suffix, and_function(n)});
    out.push_back({"or" + suffix, or_function(n)});
    out.push_back({"parity" + suffix, parity(n)});
  }
  out.push_back({"majority(3)", majority(3)});
  out.push_back({"tribes(2,2)", tribes(2, 2)});
  out.push_back({"perturbed-tribes(2,2,1/4)", perturb_tribes(tribes(2, 2), Rat(1, 4))});
  return out;
}

std::vector<Rat> grid_biases() { return {Rat(1, 4), Rat(1, 2), Rat(3, 4)}; }

std::vector<Rat> grid_epsilons() { return {Rat(0), Rat(1, 10), Rat(1, 4)}; }

namespace {

void trees_into(std::size_t n, std::size_t k, const std::vector<Label>& labels, std::size_t budget,
                std::vector<bool>& used, std::vector<DecisionTree>& out) {
  for (Label z : labels) out.push_back(DecisionTree::leaf(z));
  if (budget == 0) return;
  for (std::size_t i = 1; i <= n; ++i) {
    if (used[i - 1]) continue;
    used[i - 1] = true;
    std::vector<DecisionTree> subtrees;
    trees_into(n, k, labels, budget - 1, used, subtrees);
    used[i - 1] = false;
    // Cartesian product: one subtree per child slot, odometer order.
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      std::vector<DecisionTree> children;
      children.reserve(k);
      for (std::size_t a = 0; a < k; ++a) children.push_back(subtrees[pick[a]]);
      out.push_back(DecisionTree::query(i, std::move(children)));
      std::size_t a = k;
      while (a > 0 && ++pick[a - 1] == subtrees.size()) pick[--a] = 0;
      if (a == 0) break;
    }
  }
}

std::string describe(const NamedFunction& nf, const Rat& p) {
  return nf.name + " p=" + p.str();
}

SuiteResult per_step_soundness() {
  SuiteResult r{"per-step-soundness", 0, {}};
  const std::vector<Rat> biases{Rat(1, 4), Rat(1, 2)};
  for (std::size_t n = 3; n <= 4; ++n) {
    const std::vector<DecisionTree> trees = all_trees(n, 2, {0, 1}, 2);
    for (const NamedFunction& nf : grid_functions()) {
      if (nf.f.arity() != n) continue;
      for (const Rat& p : biases) {
        const auto mu = ProductDistribution::bernoulli(n, p);
        for (const DecisionTree& t : trees) {
          if (t.is_leaf()) continue;
          ++r.checks;
          try {
            const EliminationStep step = eliminate_step(t, nf.f, mu).second;
            if (step.error_randomized > step.error_before + step.influence_of_coordinate) {
              r.failures.push_back(describe(nf, p) + ": step bound violated");
            }
          } catch (const std::logic_error& e) {
            r.failures.push_back(describe(nf, p) + ": " + e.what());
          }
        }
      }
    }
  }
  return r;
}

SuiteResult chain_endpoint() {
  SuiteResult r{"chain-endpoint", 0, {}};
  const std::vector<DecisionTree> trees = all_trees(3, 2, {0, 1}, 2);
  for (const NamedFunction& nf : grid_functions()) {
    const std::size_t n = nf.f.arity();
    for (const Rat& p : grid_biases()) {
      const auto mu = ProductDistribution::bernoulli(n, p);
      std::vector<DecisionTree> cases{optimal_tree(nf.f, mu, n)};
      if (n == 3) cases.insert(cases.end(), trees.begin(), trees.end());
      for (const DecisionTree& t : cases) {
        ++r.checks;
        const Rat err = distributional_error(t, nf.f, mu);
        const EliminationTranscript tr = full_eliminate(t, nf.f, mu, err);
        const Rat d(static_cast<std::int64_t>(depth(t)));
        const bool ok = tr.steps.size() <= depth(t) && tr.plurality_error <= tr.final_error &&
                        tr.final_error <= tr.initial_error + d * tr.inf_max &&
                        (tr.inf_max.is_zero() || d >= (tr.plurality_error - err) / tr.inf_max);
        if (!ok) r.failures.push_back(describe(nf, p) + ": chain endpoint violated");
      }
    }
  }
  return r;
}

SuiteResult theorem1_grid() {
  SuiteResult r{"theorem1-grid", 0, {}};
  for (const NamedFunction& nf : grid_functions()) {
    for (const Rat& p : grid_biases()) {
      const auto mu = ProductDistribution::bernoulli(nf.f.arity(), p);
      for (const Rat& eps : grid_epsilons()) {
        ++r.checks;
        const std::size_t d = distributional_complexity(nf.f, mu, eps);
        const Rat bound = theorem1_bound(nf.f, mu, eps).bound;
        if (Rat(static_cast<std::int64_t>(d)) < bound) {
          r.failures.push_back(describe(nf, p) + " eps=" + eps.str() + ": D=" + std::to_string(d) +
                               " < bound " + bound.str());
        }
      }
    }
  }
  return r;
}

SuiteResult tribes_influence() {
  SuiteResult r{"tribes-influence", 0, {}};
  for (std::size_t s = 1; s <= 10; ++s) {
    for (std::size_t t = 1; s * t <= 10; ++t) {
      const FiniteFunction f = tribes(s, t);
      const auto mu = ProductDistribution::uniform(s * t, 2);
      const Rat expected = tribes_influence_closed_form(s, t);
      for (std::size_t i = 1; i <= s * t; ++i) {
        ++r.checks;
        const Rat got = influence(f, mu, i);
        if (got != expected) {
          r.failures.push_back("tribes(" + std::to_string(s) + "," + std::to_string(t) + ") inf " +
                               std::to_string(i) + " = " + got.str() + ", closed form " +
                               expected.str());
        }
      }
    }
  }
  return r;
}

SuiteResult xi_identity() {
  SuiteResult r{"xi-identity", 0, {}};
  for (const NamedFunction& nf : grid_functions()) {
    for (const Rat& p : grid_biases()) {
      const auto mu = ProductDistribution::bernoulli(nf.f.arity(), p);
      const auto expected = output_distribution(nf.f, mu);
      for (std::size_t i = 1; i <= nf.f.arity(); ++i) {
        ++r.checks;
        if (resampled_output_distribution(nf.f, mu, i) != expected) {
          r.failures.push_back(describe(nf, p) + " coordinate " + std::to_string(i));
        }
      }
    }
  }
  return r;
}

SuiteResult plurality_optimality() {
  SuiteResult r{"plurality-optimality", 0, {}};
  for (const NamedFunction& nf : grid_functions()) {
    for (const Rat& p : grid_biases()) {
      const auto mu = ProductDistribution::bernoulli(nf.f.arity(), p);
      ++r.checks;
      if (optimal_error(nf.f, mu, 0) != plurality_error(nf.f, mu)) {
        r.failures.push_back(describe(nf, p));
      }
    }
  }
  return r;
}

struct Suite {
  const char* name;
  SuiteResult (*run)();
};

constexpr Suite kSuites[] = {
    {"per-step-soundness", per_step_soundness}, {"chain-endpoint", chain_endpoint},
    {"theorem1-grid", theorem1_grid},           {"tribes-influence", tribes_influence},
    {"xi-identity", xi_identity},               {"plurality-optimality", plurality_optimality},
};

}  // namespace

std::vector<DecisionTree> all_trees(std::size_t n, std::size_t k, const std::vector<Label>& labels,
                                    std::size_t max_depth) {
  std::vector<bool> used(n, false);
  std::vector<DecisionTree> out;
  trees_into(n, k, labels, max_depth, used, out);
  return out;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const Suite& s : kSuites) out.emplace_back(s.name);
  return out;
}

std::vector<SuiteResult> run_suite(std::string_view name) {
  std::vector<SuiteResult> out;
  for (const Suite& s : kSuites) {
    if (name == "all" || name == s.name) out.push_back(s.run());
  }
  if (out.empty()) throw DomainError("unknown verify suite '" + std::string(name) + "'");
  return out;
}

}  // namespace qelim::verify
