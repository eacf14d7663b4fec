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

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ppsim/field.hpp"

namespace ppsim {

struct CorrelationResult {
    double value = 0.0;
    size_t parties = 0;
    double normalization = 1.0;  // the C in 1/(N C)
    std::optional<std::vector<double>> per_unit;
};

/// Expectation of the off-diagonal projector P(theta) = [[0, e^{i theta}],
/// [e^{-i theta}, 0]] on unit k:  c1 conj(c0) e^{i theta} + c.c.
/// Real by construction; for balanced fields equals cos(theta + gamma_k).
double project_unit(const ClassicalField &f, size_t k, double theta);

/// The correlation normalization: 1/2^{n-1} for mode-exchanged ensembles,
/// 1 for product ensembles (whose per-unit projections carry no 1/2^{n-1}
/// suppression to cancel).
double correlation_normalization(const FieldEnsemble &ens);

/// E(theta_1..theta_n) = (1/(N C)) sum_k prod_i project_unit(f_i, k, theta_i).
/// Always the literal sum over sequence units, never a closed form.
CorrelationResult correlate(const FieldEnsemble &ens, std::span<const double> angles,
                            bool keep_per_unit = false);

/// Two-party correlation over a chosen pair of a GHZ ensemble's fields
/// (C = 1/2), everything else ignored. Throws for non-GHZ ensembles.
CorrelationResult marginal_correlate(const FieldEnsemble &ens, std::pair<size_t, size_t> parties,
                                     double theta_a, double theta_b);

/// |E(a,b) - E(a,b') + E(a',b') + E(a',b)| from four literal correlations.
double chsh(const FieldEnsemble &ens, double theta_a, double theta_a2, double theta_b, double theta_b2);

/// Sweep one party's analyzer angle across a grid, all others fixed.
/// Returns (theta, E) pairs.
std::vector<std::pair<double, double>> correlation_sweep(const FieldEnsemble &ens,
                                                         std::span<const double> fixed_angles,
                                                         size_t varying_party,
                                                         std::span<const double> grid);

/// Reference formulas the literal sums are expected to reproduce:
/// product -> prod cos(theta_i); psi+/- -> +-cos(theta_a + theta_b);
/// phi+/- -> +-cos(theta_a - theta_b); ghz -> cos(sum theta_i).
/// Lives here for reports and tests; correlate() never consults it.
double closed_form_correlation(EnsembleKind kind, std::span<const double> angles);

/// Analyzer angles that drive |chsh| to its 2*sqrt(2) maximum for each Bell
/// variant: (pi/4, -pi/4, 0, pi/2) for psi+-, (pi/4, -pi/4, pi, pi/2) for
/// phi+-.
std::array<double, 4> chsh_max_angles(EnsembleKind variant);

}  // namespace ppsim
