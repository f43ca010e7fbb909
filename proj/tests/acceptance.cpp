// Acceptance suite: exact regression on the worked example plus randomized
// sufficiency/necessity property runs. Prints one line per criterion and
// exits with the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "acnet/characterize.hpp"
#include "acnet/numerics.hpp"
#include "acnet/response.hpp"
#include "acnet/rng.hpp"
#include "acnet/synthesize.hpp"

#include "support.hpp"

using namespace acnet;
using namespace acnet::testing;

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::runtime_error(message);
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

// --- criterion 1: worked-example regression ---------------------------------
void worked_example_regression() {
  const ValidationResult validated = validate_response(example_response());
  require(validated.verdict.admissible, "example matrix must be admissible");
  const std::vector<double>& ev = validated.verdict.eigenvalues;
  require(std::abs(ev[0] - 0.0) <= 1e-10, "lambda1 must be 0 within 1e-10");
  require(std::abs(ev[1] - 1.0) <= 1e-10, "lambda2 must be 1 within 1e-10");
  require(std::abs(ev[2] - 9.0) <= 1e-10, "lambda3 must be 9 within 1e-10");

  const SynthesisPlan plan = build_plan(*validated.response);
  require(std::abs(plan.delta - 0.5) <= 1e-15,
          "delta must be 1/2 within 1e-15, got off by " + fmt(std::abs(plan.delta - 0.5)));
  require(std::abs(plan.epsilon - std::sqrt(1.5)) <= 1e-15,
          "epsilon must be sqrt(3/2) within 1e-15, got off by " +
              fmt(std::abs(plan.epsilon - std::sqrt(1.5))));

  const double laplace_diff = max_diff(assemble_laplace(plan), example_laplace());
  require(laplace_diff <= 1e-12,
          "assembled Laplace matrix must match the printed one within 1e-12, got " +
              fmt(laplace_diff));
}

// --- criterion 2: worked-example round trip ---------------------------------
void worked_example_roundtrip() {
  const ResponseMatrix rm = require_admissible(example_response());
  const SynthesisResult synth = synthesize_network(rm);
  const double residual = max_diff(response_matrix(synth.network), rm.matrix());
  require(residual <= 1e-12, "round-trip residual must be <= 1e-12, got " + fmt(residual));
}

// --- criterion 3: randomized sufficiency ------------------------------------
void randomized_sufficiency() {
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t b = 2 + static_cast<std::size_t>(trial % 11);
    const ResponseMatrix rm = random_admissible(b, 5000 + static_cast<std::uint64_t>(trial));
    const SynthesisResult synth = synthesize_network(rm);
    const std::size_t expected_interior = b >= 3 ? b - 2 : 0;
    require(synth.network.interior_count() == expected_interior,
            "trial " + std::to_string(trial) + ": expected " +
                std::to_string(expected_interior) + " interior nodes, got " +
                std::to_string(synth.network.interior_count()));
    for (const Edge& e : synth.network.edges())
      require(e.conductance.real() > 1e-12,
              "trial " + std::to_string(trial) + ": conductance real part too small");
    const double limit = 1e-8 * (1.0 + rm.matrix().max_norm());
    require(synth.residual <= limit, "trial " + std::to_string(trial) + ": residual " +
                                         fmt(synth.residual) + " above " + fmt(limit));
  }
}

// --- criterion 4: randomized necessity --------------------------------------
void randomized_necessity() {
  Rng rng(77001);
  for (int trial = 0; trial < 200; ++trial) {
    const Network net = random_network(rng, 20);
    const ComplexMatrix r = response_matrix(net);
    const ValidationResult result = validate_response(r);
    require(result.verdict.admissible,
            "trial " + std::to_string(trial) + ": response matrix failed a condition");
    for (const Complex& sum : r.row_sums())
      require(std::abs(sum) <= 1e-9, "trial " + std::to_string(trial) + ": row sum " +
                                         fmt(std::abs(sum)) + " above 1e-9");
  }
}

// --- criterion 5: oracle equivalence ----------------------------------------
void oracle_equivalence() {
  Rng rng(77001);  // the necessity-suite networks
  for (int trial = 0; trial < 200; ++trial) {
    const Network net = random_network(rng, 20);
    const double diff = max_diff(response_matrix(net), response_matrix_oracle(net));
    require(diff <= 1e-9, "trial " + std::to_string(trial) + ": routes differ by " + fmt(diff));
  }
}

// --- criterion 6: Schur-complement row-sum lemma ----------------------------
void lemma_property() {
  Rng rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t nb = static_cast<std::size_t>(rng.uniform_int(2, 6));
    const std::size_t ni = static_cast<std::size_t>(rng.uniform_int(1, 6));
    const LemmaBlocks blocks = random_lemma_blocks(rng, nb, ni);

    double clean = 0.0;
    for (const Complex& sum : schur_complement(blocks.a, blocks.b, blocks.c).row_sums())
      clean = std::max(clean, std::abs(sum));
    require(clean <= 1e-9, "trial " + std::to_string(trial) + ": clean row sums " + fmt(clean));

    ComplexMatrix perturbed = blocks.a;
    perturbed(0, 0) += Complex(1e-2, 0.0);
    double dirty = 0.0;
    for (const Complex& sum : schur_complement(perturbed, blocks.b, blocks.c).row_sums())
      dirty = std::max(dirty, std::abs(sum));
    require(dirty >= 1e-3, "trial " + std::to_string(trial) + ": perturbed row sums only " +
                               fmt(dirty));
  }
}

// --- criterion 7: one-interior-node star formula ----------------------------
void star_formula() {
  Rng rng(424242);
  for (const double delta : {1e-3, 1e-1}) {
    for (std::size_t b = 3; b <= 8; ++b) {
      std::vector<double> w(b, 0.0);
      long long total = 0;
      for (std::size_t u = 0; u + 1 < b; ++u) {
        const long long numerator = rng.uniform_int(-4, 4);
        total += numerator;
        w[u] = static_cast<double>(numerator) / 8.0;
      }
      w[b - 1] = static_cast<double>(-total) / 8.0;

      std::vector<Edge> edges;
      for (std::size_t u = 0; u < b; ++u) edges.push_back({u, b, Complex(delta, w[u])});
      const ComplexMatrix r = response_matrix(Network(b, 1, std::move(edges)));

      for (std::size_t u = 0; u < b; ++u)
        for (std::size_t v = 0; v < b; ++v) {
          if (u == v) continue;
          const double expected =
              (w[u] * w[v] - delta * delta) / (delta * static_cast<double>(b));
          require(std::abs(r(u, v).real() - expected) <= 1e-10,
                  "b=" + std::to_string(b) + " delta=" + fmt(delta) + ": entry error " +
                      fmt(std::abs(r(u, v).real() - expected)));
        }
    }
  }
}

// --- criterion 8: b = 50 scale check ----------------------------------------
void scale_check() {
  const ResponseMatrix rm = random_admissible(50, 99);
  const SynthesisResult synth = synthesize_network(rm);
  const double residual = max_diff(response_matrix(synth.network), rm.matrix());
  const double limit = 1e-7 * (1.0 + rm.matrix().max_norm());
  require(residual <= limit, "residual " + fmt(residual) + " above " + fmt(limit));
}

struct Criterion {
  int id;
  std::string label;
  double time_budget_seconds;  // 0 = unconstrained
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked-example regression (eigenvalues, delta, epsilon, Laplace matrix)", 0.1,
       worked_example_regression},
      {2, "worked-example round trip within 1e-12", 0.1, worked_example_roundtrip},
      {3, "200 random admissible matrices synthesize with b-2 interior nodes", 5.0,
       randomized_sufficiency},
      {4, "200 random networks satisfy the admissibility conditions", 5.0, randomized_necessity},
      {5, "Schur and unit-voltage responses agree within 1e-9", 0.0, oracle_equivalence},
      {6, "Schur-complement row sums track the top row sums (lemma)", 0.0, lemma_property},
      {7, "one-interior-node star matches the closed-form real part", 0.0, star_formula},
      {8, "b = 50 synthesis + round trip under 1 s within 1e-7", 1.0, scale_check},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criterion.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && criterion.time_budget_seconds > 0.0 &&
        elapsed >= criterion.time_budget_seconds)
      error = "exceeded time budget of " + fmt(criterion.time_budget_seconds) + " s";

    const bool pass = error.empty();
    failures += pass ? 0 : 1;
    std::printf("[%s] criterion %d: %s (%.3f s)%s%s\n", pass ? "PASS" : "FAIL", criterion.id,
                criterion.label.c_str(), elapsed, pass ? "" : " -- ",
                pass ? "" : error.c_str());
  }
  if (failures == 0)
    std::printf("all %zu criteria passed\n", criteria.size());
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures;
}
