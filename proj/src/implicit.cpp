#include "pacfol/implicit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace pacfol {

Rational Rational::parse(const std::string& text) {
  size_t dot = text.find('.');
  std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  if (whole.empty() && frac.empty())
    throw std::invalid_argument("not a decimal: '" + text + "'");
  for (char c : whole + frac)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("not a decimal: '" + text + "'");
  Rational r;
  r.num = whole.empty() ? 0 : std::stoll(whole);
  r.den = 1;
  for (char c : frac) {
    r.num = r.num * 10 + (c - '0');
    r.den *= 10;
  }
  return r;
}

long long sample_size(double gamma, double delta) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("gamma must lie in (0,1)");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("delta must lie in (0,1)");
  return static_cast<long long>(
      std::ceil(std::log(2.0 / delta) / (2.0 * gamma * gamma)));
}

namespace {

// distinct k-subsets of pool (sorted), lexicographic, capped; invokes fn
// until it returns true or the enumeration ends
bool for_each_tuple(const std::vector<Name>& pool, size_t k, size_t cap,
                    const std::function<bool(const std::vector<Name>&)>& fn) {
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  size_t emitted = 0;
  for (;;) {
    std::vector<Name> tuple;
    tuple.reserve(k);
    for (size_t i : idx) tuple.push_back(pool[i]);
    if (fn(tuple)) return true;
    if (cap && ++emitted >= cap) return false;
    // next combination
    size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - (k - i) - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Estimate learn_estimate(std::span<const PartialModel> examples,
                        const ProperPlusKB& kb, const GroundFormula& alpha,
                        const LearnConfig& cfg) {
  if (examples.empty())
    throw std::invalid_argument("learn_estimate: no examples");
  if (cfg.k < kb.rank())
    throw std::invalid_argument(
        "learn_estimate: k must be at least the rank of the KB (" +
        std::to_string(kb.rank()) + ")");

  std::set<Name> excluded = names_of(kb);
  std::set<Name> alpha_names = names_of(alpha);
  excluded.insert(alpha_names.begin(), alpha_names.end());

  // precomputed once; restricted per example below
  const std::set<GroundClause> neg_query_clauses =
      cfg.z ? std::set<GroundClause>{}
            : to_clauses(GroundFormula::neg(alpha), cfg.sat);

  Estimate est;
  est.m = static_cast<long long>(examples.size());
  for (const PartialModel& example : examples) {
    ExampleTrace trace;

    std::vector<Name> pool;
    for (const Name& n : names_of(example))
      if (!excluded.count(n)) pool.push_back(n);

    std::vector<std::vector<Name>> padded;  // used when the pool is short
    if (pool.size() < cfg.k) {
      if (cfg.pad_fresh) {
        std::set<Name> avoid = excluded;
        avoid.insert(pool.begin(), pool.end());
        auto fresh = fresh_names(avoid, cfg.k - pool.size());
        std::vector<Name> tuple = pool;
        tuple.insert(tuple.end(), fresh.begin(), fresh.end());
        padded.push_back(std::move(tuple));
      }
    }

    auto check_tuple = [&](const std::vector<Name>& tuple) {
      std::set<Name> c(tuple.begin(), tuple.end());
      c.insert(alpha_names.begin(), alpha_names.end());
      std::set<GroundClause> grounded = gnd_with_names(kb, c);
      try {
        bool hit;
        if (cfg.z) {
          RestrictedClauses rs = restrict_clauses(grounded, example);
          ClauseStore store = ClauseStore::of(std::move(rs.clauses));
          GroundFormula obligation = restrict_formula(alpha, example);
          hit = entails_z_formula(store, obligation, *cfg.z, cfg.sat);
        } else {
          std::set<GroundClause> all = grounded;
          all.insert(neg_query_clauses.begin(), neg_query_clauses.end());
          RestrictedClauses rs = restrict_clauses(all, example);
          hit = rs.falsum ||
                satisfiable({rs.clauses}, cfg.sat).status == SatStatus::Unsat;
        }
        if (hit) {
          trace.incremented = true;
          trace.witness_tuple = tuple;
        }
        return hit;
      } catch (const ResourceLimitError&) {
        trace.resource_error = true;
        return true;  // stop the tuple loop; conservative non-increment
      }
    };

    if (!padded.empty()) {
      check_tuple(padded.front());
    } else if (cfg.k == 0) {
      check_tuple({});
    } else if (pool.size() >= cfg.k) {
      std::sort(pool.begin(), pool.end());
      for_each_tuple(pool, cfg.k, cfg.tuple_cap, check_tuple);
    }
    // short pool without padding: the example cannot increment

    if (trace.incremented) ++est.v;
    est.per_example.push_back(std::move(trace));
  }
  return est;
}

Estimate learn_estimate_limited(std::span<const PartialModel> examples,
                                const ProperPlusKB& kb,
                                const GroundFormula& alpha,
                                const LearnConfig& cfg) {
  if (!cfg.z)
    throw std::invalid_argument("learn_estimate_limited: cfg.z is required");
  return learn_estimate(examples, kb, alpha, cfg);
}

bool decide(const Estimate& est, const Rational& threshold) {
  // v/m >= num/den  <=>  v*den >= num*m
  return est.v * threshold.den >= threshold.num * est.m;
}

}  // namespace pacfol
