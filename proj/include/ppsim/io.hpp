// Copyright 2026 The ppsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ppsim/entropy.hpp"
#include "ppsim/field.hpp"
#include "ppsim/measure.hpp"

namespace ppsim {

using ordered_json = nlohmann::ordered_json;

/// Canonical text form used for every document this library writes:
/// 2-space indent, keys in insertion order, trailing newline. Identical
/// inputs produce byte-identical output.
std::string canonical_dump(const ordered_json &doc);

// Sequence sets: {"format", "s", "N", "poly", "sequences"} with sequences in
// ascending index order.
ordered_json pps_to_json(const PpsSet &set);
PpsSet pps_from_json(const nlohmann::json &doc);

// Ensembles: kind, the generating set's (s, poly), and per field the
// sequence index plus units as [re0, im0, re1, im1] rows.
ordered_json ensemble_to_json(const FieldEnsemble &ens);
FieldEnsemble ensemble_from_json(const nlohmann::json &doc);

ordered_json correlation_to_json(const FieldEnsemble &ens, const std::vector<double> &angles,
                                 const CorrelationResult &result);

ordered_json mode_state_to_json(const ModeState &state);
ordered_json density_matrix_to_json(const DensityMatrix &rho);

/// Plain-text rendering of a density matrix, readable up to 4 parties.
std::string pretty_print(const DensityMatrix &rho);

/// Fixed sweep schema: header "theta,E_empirical,E_analytic,abs_error",
/// one row per grid point, and a "# max_abs_error = ..." footer.
std::string sweep_to_csv(const std::vector<std::pair<double, double>> &sweep,
                         const std::vector<double> &analytic);

}  // namespace ppsim
