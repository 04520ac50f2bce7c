#pragma once

// Piecewise-exponential survival law with conjugate Gamma updates.
//
// A Partition splits [0, inf) into J intervals with constant hazard each;
// the last interval is open and governs tail extrapolation beyond follow-up.
// The likelihood factorizes over intervals into Poisson kernels
// lambda^d * exp(-lambda * E), so a Gamma(shape, rate) prior per interval
// yields a Gamma(shape + d, rate + E) posterior in closed form.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "pie/errors.hpp"
#include "pie/survival_data.hpp"

namespace pie {

// Interior cut points s_1 < ... < s_{J-1}; implicit s_0 = 0, s_J = inf.
// Default construction is the plain exponential (J = 1).
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<double> cuts) : cuts_(std::move(cuts)) {
    double prev = 0.0;
    for (double c : cuts_) {
      if (!std::isfinite(c) || c <= prev) {
        throw ValidationError("BadPartition",
                              "cut points must be positive, finite and "
                              "strictly increasing");
      }
      prev = c;
    }
  }

  const std::vector<double>& cuts() const { return cuts_; }
  std::size_t intervals() const { return cuts_.size() + 1; }

  double lower(std::size_t j) const { return j == 0 ? 0.0 : cuts_[j - 1]; }

  double upper(std::size_t j) const {
    return j == cuts_.size() ? std::numeric_limits<double>::infinity()
                             : cuts_[j];
  }

  // Interval containing t: j with lower(j) <= t < upper(j).
  std::size_t interval_of(double t) const {
    std::size_t j = 0;
    while (j < cuts_.size() && t >= cuts_[j]) ++j;
    return j;
  }

private:
  std::vector<double> cuts_;
};

struct GammaPrior {
  std::vector<double> shape;  // one entry per interval
  std::vector<double> rate;

  static GammaPrior shared(double shape, double rate, std::size_t intervals) {
    if (!(shape > 0.0) || !(rate > 0.0)) {
      throw ValidationError("BadPrior", "Gamma prior needs shape > 0, rate > 0");
    }
    return GammaPrior{std::vector<double>(intervals, shape),
                      std::vector<double>(intervals, rate)};
  }
};

// Sufficient statistics: events d_j and person-months of exposure E_j.
struct IntervalCounts {
  std::vector<long long> events;
  std::vector<double> exposure;
};

inline IntervalCounts interval_counts(const SurvivalDataset& dataset,
                                      const Partition& partition) {
  const std::size_t J = partition.intervals();
  IntervalCounts counts{std::vector<long long>(J, 0),
                        std::vector<double>(J, 0.0)};
  for (const auto& rec : dataset.records) {
    for (std::size_t j = 0; j < J; ++j) {
      const double lo = partition.lower(j);
      if (rec.time <= lo) break;
      counts.exposure[j] += std::min(rec.time, partition.upper(j)) - lo;
    }
    if (rec.event) counts.events[partition.interval_of(rec.time)] += 1;
  }
  return counts;
}

// Fitted model: closed-form Gamma posterior per interval. A pinned fit
// carries fixed hazards instead (plug-in analysis, no parameter
// uncertainty); dic/p_d are filled in by model selection.
struct ModelFit {
  Partition partition;
  GammaPrior prior;
  IntervalCounts counts;
  std::vector<double> post_shape;
  std::vector<double> post_rate;
  double dic = std::numeric_limits<double>::quiet_NaN();
  double p_d = std::numeric_limits<double>::quiet_NaN();
  bool pinned = false;
  std::vector<double> pinned_hazards;

  std::size_t intervals() const { return partition.intervals(); }

  std::vector<double> posterior_mean() const {
    if (pinned) return pinned_hazards;
    std::vector<double> mean(post_shape.size());
    for (std::size_t j = 0; j < mean.size(); ++j) {
      mean[j] = post_shape[j] / post_rate[j];
    }
    return mean;
  }
};

inline ModelFit fit(const SurvivalDataset& dataset, const Partition& partition,
                    const GammaPrior& prior) {
  const std::size_t J = partition.intervals();
  if (prior.shape.size() != J || prior.rate.size() != J) {
    throw ValidationError("BadPrior",
                          "prior must provide one (shape, rate) per interval");
  }
  ModelFit result{partition, prior, interval_counts(dataset, partition), {}, {}};
  result.post_shape.resize(J);
  result.post_rate.resize(J);
  for (std::size_t j = 0; j < J; ++j) {
    result.post_shape[j] =
        prior.shape[j] + static_cast<double>(result.counts.events[j]);
    result.post_rate[j] = prior.rate[j] + result.counts.exposure[j];
  }
  return result;
}

// Plug-in fit with the hazards held fixed; used for oracle checks and
// sensitivity analyses that switch off parameter uncertainty.
inline ModelFit pinned_fit(const Partition& partition,
                           std::vector<double> hazards) {
  if (hazards.size() != partition.intervals()) {
    throw ValidationError("BadPartition",
                          "need one hazard per partition interval");
  }
  for (double h : hazards) {
    if (!std::isfinite(h) || h <= 0.0) {
      throw ValidationError("BadHazard", "pinned hazards must be positive");
    }
  }
  ModelFit result;
  result.partition = partition;
  result.pinned = true;
  result.pinned_hazards = std::move(hazards);
  return result;
}

// Lambda(t) = sum_j lambda_j * |[s_{j-1}, s_j) ∩ [0, t]|.
inline double cumulative_hazard(double t, std::span<const double> hazards,
                                const Partition& partition) {
  double acc = 0.0;
  for (std::size_t j = 0; j < hazards.size(); ++j) {
    const double lo = partition.lower(j);
    if (t <= lo) break;
    acc += hazards[j] * (std::min(t, partition.upper(j)) - lo);
  }
  return acc;
}

inline double survival_at(double t, std::span<const double> hazards,
                          const Partition& partition) {
  return std::exp(-cumulative_hazard(t, hazards, partition));
}

// Inverse of survival_at: the t with S(t) = u, by locating the interval
// where the cumulative hazard crosses -ln(u) and inverting linearly.
inline double quantile(double u, std::span<const double> hazards,
                       const Partition& partition) {
  if (!(u > 0.0)) throw DegenerateU(u);
  if (u >= 1.0) return 0.0;
  const double target = -std::log(u);
  double acc = 0.0;
  const std::size_t J = hazards.size();
  for (std::size_t j = 0; j + 1 < J; ++j) {
    const double segment = hazards[j] * (partition.upper(j) - partition.lower(j));
    if (acc + segment >= target) {
      return partition.lower(j) + (target - acc) / hazards[j];
    }
    acc += segment;
  }
  return partition.lower(J - 1) + (target - acc) / hazards[J - 1];
}

// D(lambda) = -2 sum_j [d_j ln(lambda_j) - lambda_j E_j], the
// piecewise-exponential log-likelihood with its data-only constant at zero.
inline double deviance(std::span<const double> hazards,
                       const IntervalCounts& counts) {
  double loglik = 0.0;
  for (std::size_t j = 0; j < hazards.size(); ++j) {
    if (counts.events[j] > 0) {
      loglik += static_cast<double>(counts.events[j]) * std::log(hazards[j]);
    }
    loglik -= hazards[j] * counts.exposure[j];
  }
  return -2.0 * loglik;
}

}  // namespace pie
