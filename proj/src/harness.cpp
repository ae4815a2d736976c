#include "pacfol/harness.hpp"

#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "pacfol/print.hpp"

namespace pacfol {

namespace {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(uint64_t seed) {
  uint64_t sm = seed;
  for (auto& s : s_) s = splitmix64(sm);
}

uint64_t Rng::next() {
  const uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return double(next() >> 11) * 0x1.0p-53; }

uint64_t Rng::below(uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

Rng Rng::derive(uint64_t seed, uint64_t stream) {
  uint64_t sm = seed;
  uint64_t a = splitmix64(sm);
  sm = a ^ (stream * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  return Rng(splitmix64(sm));
}

std::vector<Atom> WorldDistributionSpec::relevant_atoms() const {
  std::vector<Atom> out;
  for (const auto& entry : vocabulary) {
    if (entry.arity == 0) {
      out.push_back(Atom{entry.pred, {}});
      continue;
    }
    if (names.empty()) continue;
    std::vector<size_t> idx(entry.arity, 0);
    for (;;) {
      Atom a;
      a.pred = entry.pred;
      for (size_t i : idx) a.args.emplace_back(names[i]);
      out.push_back(std::move(a));
      size_t i = 0;
      while (i < entry.arity && ++idx[i] == names.size()) idx[i++] = 0;
      if (i == entry.arity) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

WorldSampler::WorldSampler(WorldDistributionSpec spec) : spec_(std::move(spec)) {
  atoms_ = spec_.relevant_atoms();
  const PlantedMode* planted = std::get_if<PlantedMode>(&spec_.mode);
  if (!planted) return;

  if (planted->probs.empty())
    throw std::invalid_argument("planted mode: no satisfy probability");
  if (planted->probs.size() != planted->violations.size())
    throw std::invalid_argument(
        "planted mode: probs and violation recipes must pair up");
  if (planted->probs.size() != 1 &&
      planted->probs.size() != planted->implicit_kb.clauses.size())
    throw std::invalid_argument(
        "planted mode: need one probability or one per clause");
  for (double p : planted->probs)
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("planted mode: probability outside [0,1]");

  std::set<Name> name_set(spec_.names.begin(), spec_.names.end());
  auto grounding = gnd_with_names(planted->implicit_kb, name_set);
  SatResult r = satisfiable({grounding});
  if (r.status != SatStatus::Sat)
    throw std::invalid_argument(
        "planted KB is unsatisfiable over the name list");
  base_ = *r.model;
  base_.default_value = spec_.default_value;

  // per-clause groundings, for recipe validation and the scalar case
  for (const auto& clause : planted->implicit_kb.clauses) {
    ProperPlusKB single{{clause}};
    clause_groundings_.push_back(gnd_with_names(single, name_set));
  }

  for (size_t i = 0; i < planted->violations.size(); ++i) {
    WorldModel violated = base_;
    for (const auto& [atom, val] : planted->violations[i])
      violated.assignment[atom] = val;
    bool falsified = false;
    if (planted->probs.size() == 1) {
      // scalar recipe must break the KB somewhere
      for (const auto& g : clause_groundings_)
        for (const auto& c : g)
          if (!evaluate(c, violated)) falsified = true;
    } else {
      for (const auto& c : clause_groundings_[i])
        if (!evaluate(c, violated)) falsified = true;
    }
    if (!falsified)
      throw std::invalid_argument(
          "violation recipe " + std::to_string(i) +
          " does not falsify its clause over the name list");
  }
}

WorldModel WorldSampler::sample(Rng& rng) const {
  WorldModel m;
  m.default_value = spec_.default_value;
  if (const IndependentMode* ind = std::get_if<IndependentMode>(&spec_.mode)) {
    for (const Atom& a : atoms_) m.assignment[a] = rng.bernoulli(ind->theta_true);
    return m;
  }
  const PlantedMode& planted = std::get<PlantedMode>(spec_.mode);
  for (const Atom& a : atoms_) {
    auto it = base_.assignment.find(a);
    m.assignment[a] = it != base_.assignment.end() ? it->second
                                                   : rng.bernoulli(0.5);
  }
  // base atoms outside the vocabulary (names mentioned only in the KB)
  for (const auto& [atom, val] : base_.assignment)
    m.assignment.emplace(atom, val);
  for (size_t i = 0; i < planted.probs.size(); ++i) {
    if (rng.bernoulli(planted.probs[i])) continue;
    for (const auto& [atom, val] : planted.violations[i])
      m.assignment[atom] = val;
  }
  return m;
}

WorldModel sample_world(const WorldDistributionSpec& spec, Rng& rng) {
  return WorldSampler(spec).sample(rng);
}

PartialModel apply_mask(const MaskSpec& spec, const WorldModel& m, Rng& rng) {
  PartialModel n;
  if (const auto* hide = std::get_if<MaskIndependentHide>(&spec.kind)) {
    if (!(hide->rho >= 0.0 && hide->rho <= 1.0))
      throw std::invalid_argument("mask rho outside [0,1]");
    for (const auto& [atom, val] : m.assignment)
      if (!rng.bernoulli(hide->rho)) n.observed[atom] = val;
    return n;
  }
  if (const auto* hide = std::get_if<MaskHideNames>(&spec.kind)) {
    std::set<Name> names;
    for (const auto& [atom, _] : m.assignment) {
      auto sub = names_of(atom);
      names.insert(sub.begin(), sub.end());
    }
    std::vector<Name> pool(names.begin(), names.end());
    // Fisher-Yates prefix selection
    for (size_t i = 0; i + 1 < pool.size(); ++i) {
      size_t j = i + size_t(rng.below(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    std::set<Name> hidden(pool.begin(),
                          pool.begin() +
                              std::min(hide->count, pool.size()));
    for (const auto& [atom, val] : m.assignment) {
      auto sub = names_of(atom);
      bool drop = std::any_of(sub.begin(), sub.end(),
                              [&](const Name& x) { return hidden.count(x); });
      if (!drop) n.observed[atom] = val;
    }
    return n;
  }
  const auto& hide = std::get<MaskHidePredicates>(spec.kind);
  std::set<std::string> preds(hide.preds.begin(), hide.preds.end());
  for (const auto& [atom, val] : m.assignment)
    if (!preds.count(atom.pred)) n.observed[atom] = val;
  return n;
}

bool world_satisfies(const ProperPlusKB& kb, const WorldModel& m,
                     const std::set<Name>& universe) {
  auto grounding = gnd_with_names(kb, universe);
  for (const auto& c : grounding)
    if (!evaluate(c, m)) return false;
  return true;
}

double empirical_validity(const WorldDistributionSpec& world,
                          const GroundFormula& phi, size_t samples,
                          uint64_t seed) {
  WorldSampler sampler(world);
  Rng rng = Rng::derive(seed, 0x76616c6964ULL);
  size_t hits = 0;
  for (size_t i = 0; i < samples; ++i)
    if (evaluate(phi, sampler.sample(rng))) ++hits;
  return double(hits) / double(samples);
}

double empirical_validity_implication(const WorldDistributionSpec& world,
                                      const ProperPlusKB& kb,
                                      const GroundFormula& alpha,
                                      size_t samples, uint64_t seed) {
  WorldSampler sampler(world);
  std::set<Name> universe(world.names.begin(), world.names.end());
  auto extra = names_of(alpha);
  universe.insert(extra.begin(), extra.end());
  auto kb_names = names_of(kb);
  universe.insert(kb_names.begin(), kb_names.end());
  auto grounding = gnd_with_names(kb, universe);

  Rng rng = Rng::derive(seed, 0x70747275ULL);
  size_t hits = 0;
  for (size_t i = 0; i < samples; ++i) {
    WorldModel m = sampler.sample(rng);
    bool kb_holds = true;
    for (const auto& c : grounding)
      if (!evaluate(c, m)) {
        kb_holds = false;
        break;
      }
    if (!kb_holds || evaluate(alpha, m)) ++hits;
  }
  return double(hits) / double(samples);
}

CalibrationReport run_calibration(const WorldDistributionSpec& world,
                                  const MaskSpec& mask,
                                  const ProperPlusKB& kb,
                                  const GroundFormula& alpha, LearnConfig cfg,
                                  double gamma, double delta, int trials,
                                  uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  CalibrationReport rep;
  rep.trials = trials;
  rep.gamma = gamma;
  rep.delta = delta;
  rep.k = cfg.k;
  rep.z = cfg.z;
  rep.seed = seed;
  rep.m = sample_size(gamma, delta);

  WorldSampler sampler(world);
  rep.p_true = empirical_validity_implication(world, kb, alpha,
                                              size_t(10 * rep.m), seed);

  int sound = 0, complete = 0;
  for (int t = 0; t < trials; ++t) {
    Rng world_rng = Rng::derive(seed, uint64_t(2 * t + 1));
    Rng mask_rng = Rng::derive(seed, uint64_t(2 * t + 2));
    std::vector<PartialModel> examples;
    examples.reserve(size_t(rep.m));
    for (long long i = 0; i < rep.m; ++i) {
      WorldModel w = sampler.sample(world_rng);
      examples.push_back(apply_mask(mask, w, mask_rng));
    }
    Estimate est = learn_estimate(examples, kb, alpha, cfg);
    double p_hat = est.p_hat_double();
    rep.p_hats.push_back(p_hat);
    if (p_hat <= rep.p_true + gamma + 1e-12) ++sound;
    if (p_hat >= rep.p_true - gamma - 1e-12) ++complete;
  }
  rep.fraction_sound = double(sound) / double(trials);
  rep.fraction_complete = double(complete) / double(trials);
  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

std::string CalibrationReport::to_json() const {
  nlohmann::json j;
  j["trials"] = trials;
  j["gamma"] = gamma;
  j["delta"] = delta;
  j["m"] = m;
  j["k"] = k;
  if (z)
    j["z"] = *z;
  else
    j["z"] = nullptr;
  j["seed"] = seed;
  j["rng"] = "xoshiro256**";
  j["p_true"] = p_true;
  j["fraction_sound"] = fraction_sound;
  j["fraction_complete"] = fraction_complete;
  j["p_hats"] = p_hats;
  // runtime stays out of the JSON: reports must be byte-identical per seed
  return j.dump(2);
}

std::string CalibrationReport::summary() const {
  std::ostringstream os;
  os << "calibration: trials=" << trials << " m=" << m << " gamma=" << gamma
     << " delta=" << delta << " k=" << k;
  if (z) os << " z=" << *z;
  os << "\n  p_true ~= " << p_true << "\n  fraction_sound = " << fraction_sound
     << "\n  fraction_complete = " << fraction_complete
     << "\n  runtime = " << runtime_seconds << "s";
  return os.str();
}

}  // namespace pacfol
