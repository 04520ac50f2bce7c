#pragma once

// Arm-level time-to-event data and the Kaplan-Meier product-limit estimate.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pie/errors.hpp"

namespace pie {

struct SurvivalRecord {
  double time = 0.0;  // months since randomization, > 0
  bool event = false; // true = event observed, false = right-censored
};

// One arm's records, sorted by time ascending with events preceding
// censorings at tied times. Construct through validate_dataset.
struct SurvivalDataset {
  std::string arm_label;
  std::vector<SurvivalRecord> records;

  std::size_t n() const { return records.size(); }

  std::size_t n_events() const {
    std::size_t count = 0;
    for (const auto& r : records) count += r.event ? 1 : 0;
    return count;
  }

  double max_time() const {
    return records.empty() ? 0.0 : records.back().time;
  }

  // Number at risk just before t: records with time >= t.
  std::size_t at_risk(double t) const {
    auto it = std::lower_bound(
        records.begin(), records.end(), t,
        [](const SurvivalRecord& r, double value) { return r.time < value; });
    return static_cast<std::size_t>(records.end() - it);
  }
};

// Checks every record, rejects degenerate datasets, and returns the records
// sorted into canonical order. Indices in errors refer to the raw input
// order, before sorting.
inline SurvivalDataset validate_dataset(std::string arm_label,
                                        std::vector<SurvivalRecord> raw) {
  if (raw.empty()) throw EmptyDataset();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw[i].time) || raw[i].time <= 0.0) {
      throw NonPositiveTime(i);
    }
  }
  if (std::none_of(raw.begin(), raw.end(),
                   [](const SurvivalRecord& r) { return r.event; })) {
    throw NoEvents();
  }
  std::stable_sort(raw.begin(), raw.end(),
                   [](const SurvivalRecord& a, const SurvivalRecord& b) {
                     if (a.time != b.time) return a.time < b.time;
                     return a.event && !b.event;
                   });
  return SurvivalDataset{std::move(arm_label), std::move(raw)};
}

// Product-limit estimate. One point per distinct observed time, preceded by
// the origin (0, 1, n); survival is the value after processing that time and
// n_risk the count just before it.
struct KMCurve {
  struct Point {
    double time;
    double survival;
    std::size_t n_risk;
  };
  std::vector<Point> points;

  // Right-continuous step lookup.
  double survival_at(double t) const {
    auto it = std::upper_bound(
        points.begin(), points.end(), t,
        [](double value, const Point& p) { return value < p.time; });
    return it == points.begin() ? 1.0 : std::prev(it)->survival;
  }
};

inline KMCurve km_estimate(const SurvivalDataset& dataset) {
  KMCurve curve;
  const auto& recs = dataset.records;
  curve.points.push_back({0.0, 1.0, recs.size()});
  double survival = 1.0;
  std::size_t i = 0;
  while (i < recs.size()) {
    const double t = recs[i].time;
    const std::size_t at_risk = recs.size() - i;
    std::size_t deaths = 0;
    while (i < recs.size() && recs[i].time == t) {
      deaths += recs[i].event ? 1 : 0;
      ++i;
    }
    if (deaths > 0) {
      survival *= 1.0 - static_cast<double>(deaths) / static_cast<double>(at_risk);
    }
    curve.points.push_back({t, survival, at_risk});
  }
  return curve;
}

}  // namespace pie
