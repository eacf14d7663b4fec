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

#include <complex>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "ppsim/pps.hpp"

namespace ppsim {

/// Amplitudes of the two orthogonal modes |0) and |1) at one sequence unit.
struct FieldUnit {
    std::complex<double> mode0;
    std::complex<double> mode1;
};

/// A classical field carrying a phase-sequence modulation: per sequence unit
/// a complex 2-vector over the modes |0) and |1), unit norm at every unit.
/// Values are immutable by convention; every operation returns new fields.
struct ClassicalField {
    size_t pps_index = 0;
    std::vector<FieldUnit> units;

    size_t size() const { return units.size(); }
};

/// Per-unit phase offset between the |1) and |0) components of a field after
/// mode exchange. Offsets are exact quarter turns, stored as labels 0..3.
struct RelativePhaseSequence {
    std::vector<uint8_t> quarter_turns;

    size_t size() const { return quarter_turns.size(); }
    double phase(size_t k) const { return phase_of(quarter_turns[k]); }

    /// sum_k e^{i gamma_k}. Zero exactly when the underlying label
    /// combination is balanced.
    std::complex<double> balance_sum() const;
};

/// e^{i lambda_k} (alpha |0) + beta |1)) with lambda the indexed sequence's
/// phases. Requires |alpha|^2 + |beta|^2 = 1 within 1e-12.
ClassicalField prepare_field(const PpsSet &pps, size_t index, std::complex<double> alpha,
                             std::complex<double> beta);

/// (1/N) sum_k conj(a0_k) b0_k + conj(a1_k) b1_k.
std::complex<double> field_inner_product(const ClassicalField &a, const ClassicalField &b);

/// Swap the |1) components of two fields (the mode-exchanger action).
/// Involution; touches nothing but the two fields given.
std::pair<ClassicalField, ClassicalField> mode_exchange_pair(const ClassicalField &a,
                                                             const ClassicalField &b);

/// Per-unit swap of |0) and |1) amplitudes.
ClassicalField apply_sigma_x(const ClassicalField &f);

/// Read the relative phase gamma_k = arg(c1_k) - arg(c0_k) off a balanced
/// field, snapped to the nearest quarter turn. Throws when a unit has a
/// vanishing mode amplitude or a phase farther than 1e-9 from the grid,
/// both of which signal a corrupted field rather than roundoff.
RelativePhaseSequence extract_rps(const ClassicalField &f);

enum class EnsembleKind {
    Product,
    BellPsiPlus,
    BellPsiMinus,
    BellPhiPlus,
    BellPhiMinus,
    Ghz,
};

const char *to_string(EnsembleKind kind);
EnsembleKind ensemble_kind_from_string(const std::string &name);
bool is_bell(EnsembleKind kind);

/// n classical fields sharing one sequence set; the simulation of an
/// n-particle state. Fields carry pairwise distinct sequence indices.
struct FieldEnsemble {
    EnsembleKind kind = EnsembleKind::Product;
    std::shared_ptr<const PpsSet> pps;
    std::vector<ClassicalField> fields;

    size_t size() const { return fields.size(); }
    std::vector<size_t> indices() const;
};

/// Two independent balanced-superposition fields, no exchange.
FieldEnsemble make_product(std::shared_ptr<const PpsSet> pps, size_t ia, size_t ib);

/// Bell-state analogues built from a mode-exchanged pair with alpha = beta
/// = 1/sqrt(2):
///   psi+  the exchanged pair
///   psi-  psi+ with an extra pi on field b's |1) component
///   phi+  psi+ with |0) <-> |1) swapped on field b
///   phi-  psi- with |0) <-> |1) swapped on field b
FieldEnsemble make_bell(std::shared_ptr<const PpsSet> pps, size_t ia, size_t ib, EnsembleKind variant);

/// n >= 3 fields with circularly exchanged |1) modes: field i receives the
/// |1) component of field i+1 (cyclically). The relative phase sequences
/// telescope to zero at every unit.
FieldEnsemble make_ghz(std::shared_ptr<const PpsSet> pps, const std::vector<size_t> &indices);

/// The circular |1)-mode exchange on its own, so that composition laws can
/// be tested; make_ghz applies this once to freshly prepared fields.
std::vector<ClassicalField> circular_mode_exchange(const std::vector<ClassicalField> &fields);

/// Deterministic choice of n sequence indices for a GHZ ensemble.
///
/// Scores ascending index tuples by exact integer phase sums, preferring
/// (1) every doubled partial RPS sum balanced, so n-party correlations
///     match cos(theta_1 + ... + theta_n) exactly,
/// (2) every single partial RPS sum balanced, so the assembled mode state
///     has no residual cross terms,
/// (3) every two-party marginal combination balanced.
/// Returns the first tuple satisfying (1) and (2) with the fewest marginal
/// defects within the search bound; when no tuple reaches (1) and (2) the
/// consecutive tuple 1..n is returned, which keeps the correlation sums
/// exact whenever any tuple can. Perfect tuples exist for small n; for
/// larger n some combinations are unavoidable, see the project notes.
std::vector<size_t> choose_ghz_indices(const PpsSet &pps, size_t n, size_t search_cap = 8192);

/// The (bad doubled, bad single, bad marginal) combination counts used by
/// choose_ghz_indices, exposed for reporting.
struct GhzComboScore {
    size_t bad_doubled = 0;
    size_t bad_assembly = 0;
    size_t bad_marginal = 0;

    bool perfect() const { return bad_doubled == 0 && bad_assembly == 0 && bad_marginal == 0; }
    auto operator<=>(const GhzComboScore &) const = default;
};

GhzComboScore score_ghz_indices(const PpsSet &pps, const std::vector<size_t> &indices);

}  // namespace ppsim
