/*
 * Copyright 2026 The sustainrec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <string>

#include "sustainrec/kernels.hpp"
#include "sustainrec/types.hpp"

namespace sustainrec {

// Mean over users of the mean carbon footprint of their recommended items.
inline MetricReport avg_carbon_footprint(const Dataset& ds) {
  return user_item_average(
      ds, "avgcarfi", [](const ItemRecord& it) { return it.carbon_footprint; },
      "no-carbon-data");
}

// Share of recommended slots holding a green item, among slots with a
// known flag.
inline MetricReport green_item_rate(const Dataset& ds) {
  return slot_rate(
      ds, "girec",
      [](const ItemRecord& it, const UserRecord&) { return it.is_green; },
      "no-green-flags");
}

inline MetricValue energy_per_recommendation(const EnergyLedger& ledger) {
  if (ledger.n_rec == 0) return MetricValue::undefined("n_rec-is-zero");
  return MetricValue::ok(ledger.e_inference_kwh / static_cast<double>(ledger.n_rec));
}

inline MetricValue energy_per_epoch(const EnergyLedger& ledger) {
  if (ledger.n_epoch == 0) return MetricValue::undefined("n_epoch-is-zero");
  return MetricValue::ok(ledger.ec_build_kwh / static_cast<double>(ledger.n_epoch));
}

inline MetricValue energy_per_data_unit(const EnergyLedger& ledger) {
  if (ledger.n_data_processed == 0)
    return MetricValue::undefined("n_data_processed-is-zero");
  return MetricValue::ok(ledger.ec_build_kwh / static_cast<double>(ledger.n_data_processed));
}

// Relative drop in energy consumption against the baseline system.
// Negative when recommendations increased consumption; never clamped.
inline MetricValue energy_savings(const PairedObservation& p) {
  if (p.baseline < 0 || p.treatment < 0) return MetricValue::undefined("range-error");
  if (p.baseline == 0) return MetricValue::undefined("baseline-is-zero");
  return MetricValue::ok((p.baseline - p.treatment) / p.baseline);
}

// Absolute change in item reuse rate.
inline MetricValue reuse_gain(const PairedObservation& p) {
  if (p.baseline < 0 || p.baseline > 1 || p.treatment < 0 || p.treatment > 1)
    return MetricValue::undefined("range-error");
  return MetricValue::ok(p.treatment - p.baseline);
}

namespace detail {

inline MetricReport ledger_report(const Dataset& ds, const std::string& name,
                                  MetricValue (*fn)(const EnergyLedger&)) {
  if (!ds.energy) {
    MetricReport r;
    r.metric_name = name;
    r.undefined_reason = "missing-table";
    return r;
  }
  return MetricReport::from(name, fn(*ds.energy));
}

inline MetricReport paired_report(const Dataset& ds, const std::string& name,
                                  const std::string& kind,
                                  MetricValue (*fn)(const PairedObservation&)) {
  MetricReport r;
  r.metric_name = name;
  if (!ds.has_paired_table) {
    r.undefined_reason = "missing-table";
    return r;
  }
  bool multiple = false;
  const PairedObservation* p = first_paired(ds, kind, &multiple);
  if (!p) {
    r.undefined_reason = "no-paired-observation";
    return r;
  }
  r = MetricReport::from(name, fn(*p));
  if (multiple)
    r.notes.push_back("multiple '" + kind + "' observations; using the first row");
  return r;
}

}  // namespace detail

inline MetricReport energy_per_recommendation_report(const Dataset& ds) {
  return detail::ledger_report(ds, "ecrec", &energy_per_recommendation);
}
inline MetricReport energy_per_epoch_report(const Dataset& ds) {
  return detail::ledger_report(ds, "ectrain", &energy_per_epoch);
}
inline MetricReport energy_per_data_unit_report(const Dataset& ds) {
  return detail::ledger_report(ds, "ecpdat", &energy_per_data_unit);
}
inline MetricReport energy_savings_report(const Dataset& ds) {
  return detail::paired_report(ds, "estrec", "energy", &energy_savings);
}
inline MetricReport reuse_gain_report(const Dataset& ds) {
  return detail::paired_report(ds, "rtr", "reuse_rate", &reuse_gain);
}

}  // namespace sustainrec
