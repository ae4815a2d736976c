#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pacfol/limited.hpp"
#include "pacfol/model.hpp"
#include "pacfol/sat.hpp"

namespace pacfol {

// Exact nonnegative rational, used so estimate/threshold comparisons never
// go through floating point.
struct Rational {
  long long num = 0;
  long long den = 1;

  // decimal string: "1", "0.85", ".5"
  static Rational parse(const std::string& text);
  bool operator==(const Rational&) const = default;
};

struct LearnConfig {
  size_t k = 0;                 // tuple width; must be >= rank of the KB
  std::optional<int> z;         // limited-reasoning level; absent = SAT mode
  size_t tuple_cap = 0;         // max tuples per example, 0 = exhaustive
  bool pad_fresh = true;        // pad short examples with fresh names
  SatConfig sat;
};

struct ExampleTrace {
  bool incremented = false;
  bool resource_error = false;
  std::vector<Name> witness_tuple;  // the first tuple that succeeded
};

struct Estimate {
  long long v = 0;  // hit count
  long long m = 0;  // example count
  std::vector<ExampleTrace> per_example;

  Rational p_hat() const { return {v, m}; }
  double p_hat_double() const { return double(v) / double(m); }
};

// Smallest m with m >= ln(2/delta) / (2 gamma^2). Throws
// std::invalid_argument unless gamma, delta lie in (0,1).
long long sample_size(double gamma, double delta);

// Estimates the degree of validity of kb ⊃ alpha from partial examples.
// Per example: enumerate k-tuples of distinct names observed in the example
// and not occurring in kb or alpha (deterministic lexicographic order,
// fresh-padded when fewer than k are eligible); a tuple succeeds when the
// kb grounded over tuple ∪ names(alpha), conjoined with clauses of ¬alpha
// and restricted under the example, is unsatisfiable. The first success
// increments v. With cfg.z set, the per-tuple check is limited reasoning
// instead: restricted grounding of kb alone must entail alpha restricted,
// at level z. SAT resource exhaustion makes the example non-incrementing
// and is recorded in the trace.
Estimate learn_estimate(std::span<const PartialModel> examples,
                        const ProperPlusKB& kb, const GroundFormula& alpha,
                        const LearnConfig& cfg);

// learn_estimate with cfg.z required
Estimate learn_estimate_limited(std::span<const PartialModel> examples,
                                const ProperPlusKB& kb,
                                const GroundFormula& alpha,
                                const LearnConfig& cfg);

// est.p_hat >= threshold, compared exactly as rationals
bool decide(const Estimate& est, const Rational& threshold);

}  // namespace pacfol
