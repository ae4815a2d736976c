#pragma once

#include <cstdint>
#include <variant>

#include "pacfol/implicit.hpp"
#include "pacfol/model.hpp"

namespace pacfol {

// xoshiro256** seeded through splitmix64. Fixed algorithm so reports are
// bit-reproducible across platforms; decisions never go through
// implementation-defined library distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next();
  double uniform();  // [0,1) with 53 random bits
  bool bernoulli(double p) { return uniform() < p; }
  uint64_t below(uint64_t n);  // unbiased via rejection

  // independent stream for (seed, stream), e.g. per trial
  static Rng derive(uint64_t seed, uint64_t stream);

 private:
  uint64_t s_[4];
};

struct VocabularyEntry {
  std::string pred;
  size_t arity = 0;
};

struct IndependentMode {
  double theta_true = 0.5;  // per-atom probability of truth
};

// With the given probability a sampled world satisfies the planted implicit
// KB (from a fixed satisfying base assignment; atoms the base leaves open
// are filled by fair coin flips); otherwise the violation recipe's
// assignments are forced on top, which must falsify the KB's grounding.
// With per-clause probabilities, each clause gets an independent flag and
// recipe.
struct PlantedMode {
  ProperPlusKB implicit_kb;
  std::vector<double> probs;                      // one, or one per clause
  std::vector<std::map<Atom, bool>> violations;   // matching probs
};

struct WorldDistributionSpec {
  std::vector<VocabularyEntry> vocabulary;
  std::vector<Name> names;
  std::variant<IndependentMode, PlantedMode> mode;
  bool default_value = false;
  uint64_t seed = 0;

  std::vector<Atom> relevant_atoms() const;  // vocabulary x names^arity
};

struct MaskIndependentHide {
  double rho = 0.0;  // per-atom hide probability
};
struct MaskHideNames {
  size_t count = 0;  // random name subset of this size is hidden
};
struct MaskHidePredicates {
  std::vector<std::string> preds;
};

struct MaskSpec {
  std::variant<MaskIndependentHide, MaskHideNames, MaskHidePredicates> kind;
  uint64_t seed = 0;
};

// Validates the spec and precomputes the planted base model (throws
// std::invalid_argument when the planted KB is unsatisfiable over the name
// list or a recipe fails to violate its clause).
class WorldSampler {
 public:
  explicit WorldSampler(WorldDistributionSpec spec);

  WorldModel sample(Rng& rng) const;
  const WorldDistributionSpec& spec() const { return spec_; }

 private:
  WorldDistributionSpec spec_;
  std::vector<Atom> atoms_;
  WorldModel base_;                          // planted satisfying assignment
  std::vector<std::set<GroundClause>> clause_groundings_;  // per planted clause
};

WorldModel sample_world(const WorldDistributionSpec& spec, Rng& rng);

// Always yields a partial model consistent with m.
PartialModel apply_mask(const MaskSpec& spec, const WorldModel& m, Rng& rng);

struct CalibrationReport {
  int trials = 0;
  double gamma = 0;
  double delta = 0;
  long long m = 0;  // examples per trial
  size_t k = 0;
  std::optional<int> z;
  uint64_t seed = 0;
  double p_true = 0;            // Monte-Carlo estimate over 10*m worlds
  double fraction_sound = 0;    // trials with p_hat <= p_true + gamma
  double fraction_complete = 0; // trials with p_hat >= p_true - gamma
  std::vector<double> p_hats;
  double runtime_seconds = 0;

  std::string to_json() const;
  std::string summary() const;
};

// trials independent runs of the estimator on fresh masked examples;
// per-trial RNG streams derive from (seed, trial) so ordering cannot matter.
CalibrationReport run_calibration(const WorldDistributionSpec& world,
                                  const MaskSpec& mask,
                                  const ProperPlusKB& kb,
                                  const GroundFormula& alpha, LearnConfig cfg,
                                  double gamma, double delta, int trials,
                                  uint64_t seed);

// Monte-Carlo frequency of phi over `samples` worlds from the spec.
double empirical_validity(const WorldDistributionSpec& world,
                          const GroundFormula& phi, size_t samples,
                          uint64_t seed);

// kb holds in m when every clause of its grounding over `universe` does.
bool world_satisfies(const ProperPlusKB& kb, const WorldModel& m,
                     const std::set<Name>& universe);

// Monte-Carlo frequency of kb ⊃ alpha, with kb grounded over the spec's
// names plus those of kb and alpha.
double empirical_validity_implication(const WorldDistributionSpec& world,
                                      const ProperPlusKB& kb,
                                      const GroundFormula& alpha,
                                      size_t samples, uint64_t seed);

}  // namespace pacfol
