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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ppsim/field.hpp"

namespace ppsim {

/// Keep 2^n amplitude vectors desk scale.
constexpr size_t kDefaultPartyCap = 10;

/// A normalized vector over the n-party mode basis |q_1 ... q_n), q_i in
/// {0,1}. Party 0 is the most significant basis bit.
struct ModeState {
    size_t parties = 0;
    std::vector<std::complex<double>> amplitudes;  // length 2^parties

    size_t dim() const { return amplitudes.size(); }
    double norm() const;
};

/// A subset of party indices and its complement. `mask` has bit
/// (parties - 1 - p) set when party p belongs to subset A, mirroring the
/// basis-bit layout of ModeState.
struct Bipartition {
    size_t parties = 0;
    unsigned mask = 0;

    Bipartition(size_t parties, unsigned mask);
    size_t subset_size() const;
    Bipartition complement() const;
    bool contains(size_t party) const;
    std::string label() const;  // "a|bc" style
};

class DensityMatrix {
  public:
    DensityMatrix(size_t parties, std::vector<std::complex<double>> entries);

    size_t parties() const { return parties_; }
    size_t dim() const { return size_t{1} << parties_; }
    const std::complex<double> &at(size_t r, size_t c) const { return entries_[r * dim() + c]; }
    const std::vector<std::complex<double>> &entries() const { return entries_; }

    std::complex<double> trace() const;
    double hermiticity_defect() const;  // max |rho - rho^dagger|

  private:
    size_t parties_;
    std::vector<std::complex<double>> entries_;  // row-major
};

/// Build the summed mode state
///   sum_k e^{-i lambda^s_k} (psi_1_k (x) ... (x) psi_n_k),
/// lambda^s the per-unit sum of the ensemble's sequence phases, then
/// normalize to unit length. Throws when the sum has vanishing norm or the
/// ensemble exceeds `party_cap`.
ModeState assemble_mode_state(const FieldEnsemble &ens, size_t party_cap = kDefaultPartyCap);

/// rho = |state)(state|.
DensityMatrix density_matrix(const ModeState &state);

/// Reduce onto subsystem A by tracing out the complement. Trace preserved.
DensityMatrix partial_trace(const DensityMatrix &rho, const Bipartition &keep);

/// S = -sum_i p_i log2 p_i over the eigenvalues, 0 log 0 = 0, eigenvalues
/// below 1e-12 treated as exactly zero. Validates Hermiticity, unit trace
/// and positivity first and reports the measured defect on failure.
double von_neumann_entropy(const DensityMatrix &rho);

/// Entanglement entropy for every nontrivial bipartition (one entry per
/// unordered split; the representative contains party 0). Assembles the
/// state once.
std::map<unsigned, double> entanglement_report(const FieldEnsemble &ens,
                                               size_t party_cap = kDefaultPartyCap);

/// |<reference|state>|^2 with both sides normalized; global phase drops out.
double state_fidelity(const ModeState &state, std::span<const std::complex<double>> reference);

}  // namespace ppsim
