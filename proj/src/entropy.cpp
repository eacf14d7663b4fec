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

#include "ppsim/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "ppsim/errors.hpp"
#include "ppsim/linalg.hpp"

namespace ppsim {

namespace {

constexpr double kMatrixTolerance = 1e-12;
constexpr double kEigenvalueFloor = 1e-12;
constexpr double kPsdTolerance = 1e-10;

}  // namespace

double ModeState::norm() const {
    double sum = 0.0;
    for (const auto &z : amplitudes) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

Bipartition::Bipartition(size_t parties, unsigned mask) : parties(parties), mask(mask) {
    if (parties == 0 || parties > 8 * sizeof(unsigned)) {
        throw std::invalid_argument("bipartition party count out of range");
    }
    unsigned full = (parties >= 8 * sizeof(unsigned)) ? ~0u : ((1u << parties) - 1u);
    if (mask == 0 || (mask & ~full) != 0 || mask == full) {
        throw std::invalid_argument("bipartition subset must be nonempty and proper");
    }
}

size_t Bipartition::subset_size() const {
    return static_cast<size_t>(__builtin_popcount(mask));
}

Bipartition Bipartition::complement() const {
    unsigned full = (1u << parties) - 1u;
    return Bipartition(parties, full & ~mask);
}

bool Bipartition::contains(size_t party) const {
    return (mask >> (parties - 1 - party)) & 1u;
}

std::string Bipartition::label() const {
    std::string in, out;
    for (size_t p = 0; p < parties; p++) {
        char name = static_cast<char>('a' + p);
        (contains(p) ? in : out) += name;
    }
    return in + "|" + out;
}

DensityMatrix::DensityMatrix(size_t parties, std::vector<std::complex<double>> entries)
    : parties_(parties), entries_(std::move(entries)) {
    size_t d = dim();
    if (entries_.size() != d * d) {
        throw std::invalid_argument("density matrix storage does not match party count");
    }
}

std::complex<double> DensityMatrix::trace() const {
    std::complex<double> t = 0.0;
    for (size_t r = 0; r < dim(); r++) {
        t += at(r, r);
    }
    return t;
}

double DensityMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (size_t r = 0; r < dim(); r++) {
        for (size_t c = 0; c < dim(); c++) {
            worst = std::max(worst, std::abs(at(r, c) - std::conj(at(c, r))));
        }
    }
    return worst;
}

ModeState assemble_mode_state(const FieldEnsemble &ens, size_t party_cap) {
    size_t n = ens.size();
    if (n == 0) {
        throw std::invalid_argument("cannot assemble an empty ensemble");
    }
    if (n > party_cap) {
        throw std::invalid_argument("ensemble has " + std::to_string(n) + " fields, cap is " +
                                    std::to_string(party_cap));
    }
    size_t len = ens.fields[0].size();
    size_t dim = size_t{1} << n;
    std::vector<std::complex<double>> sum(dim, 0.0);
    std::vector<std::complex<double>> tensor(dim);
    const PpsSet &pps = *ens.pps;
    std::vector<size_t> idx = ens.indices();

    for (size_t k = 0; k < len; k++) {
        // conj of the total carrier phase i^{sum of labels}; exact phasor
        int64_t total_label = 0;
        for (size_t i = 0; i < n; i++) {
            total_label += pps.sequence(idx[i])[k];
        }
        std::complex<double> weight = std::conj(unit_phasor(static_cast<uint8_t>(total_label % 4)));

        // n-fold tensor product of the per-unit 2-vectors, party 0 most significant
        tensor[0] = weight;
        size_t filled = 1;
        for (size_t i = 0; i < n; i++) {
            const FieldUnit &u = ens.fields[i].units[k];
            for (size_t j = filled; j-- > 0;) {
                std::complex<double> base = tensor[j];
                tensor[2 * j] = base * u.mode0;
                tensor[2 * j + 1] = base * u.mode1;
            }
            filled *= 2;
        }
        for (size_t j = 0; j < dim; j++) {
            sum[j] += tensor[j];
        }
    }

    ModeState state;
    state.parties = n;
    state.amplitudes = std::move(sum);
    double norm = state.norm();
    if (norm < 1e-9) {
        throw VerificationError("assembled state has vanishing norm " + std::to_string(norm) +
                                "; ensemble is inconsistent");
    }
    for (auto &z : state.amplitudes) {
        z /= norm;
    }
    return state;
}

DensityMatrix density_matrix(const ModeState &state) {
    size_t d = state.dim();
    std::vector<std::complex<double>> entries(d * d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            entries[r * d + c] = state.amplitudes[r] * std::conj(state.amplitudes[c]);
        }
    }
    return DensityMatrix(state.parties, entries);
}

DensityMatrix partial_trace(const DensityMatrix &rho, const Bipartition &keep) {
    if (keep.parties != rho.parties()) {
        throw std::invalid_argument("bipartition is over " + std::to_string(keep.parties) +
                                    " parties, matrix has " + std::to_string(rho.parties()));
    }
    size_t n = rho.parties();
    size_t na = keep.subset_size();
    size_t nb = n - na;
    size_t da = size_t{1} << na;
    size_t db = size_t{1} << nb;

    // Positions (bit offsets from the most significant side) of A and B bits.
    std::vector<size_t> a_pos, b_pos;
    for (size_t p = 0; p < n; p++) {
        (keep.contains(p) ? a_pos : b_pos).push_back(n - 1 - p);
    }
    auto full_index = [&](size_t a_bits, size_t b_bits) {
        size_t out = 0;
        for (size_t i = 0; i < a_pos.size(); i++) {
            out |= ((a_bits >> (a_pos.size() - 1 - i)) & 1u) << a_pos[i];
        }
        for (size_t i = 0; i < b_pos.size(); i++) {
            out |= ((b_bits >> (b_pos.size() - 1 - i)) & 1u) << b_pos[i];
        }
        return out;
    };

    std::vector<std::complex<double>> reduced(da * da, 0.0);
    for (size_t r = 0; r < da; r++) {
        for (size_t c = 0; c < da; c++) {
            std::complex<double> sum = 0.0;
            for (size_t b = 0; b < db; b++) {
                sum += rho.at(full_index(r, b), full_index(c, b));
            }
            reduced[r * da + c] = sum;
        }
    }
    return DensityMatrix(na, reduced);
}

double von_neumann_entropy(const DensityMatrix &rho) {
    double herm = rho.hermiticity_defect();
    if (herm > kMatrixTolerance) {
        throw VerificationError("density matrix is not Hermitian: max defect " + std::to_string(herm));
    }
    std::complex<double> tr = rho.trace();
    if (std::abs(tr - 1.0) > kMatrixTolerance) {
        throw VerificationError("density matrix trace is " + std::to_string(tr.real()) + " + " +
                                std::to_string(tr.imag()) + "i, expected 1");
    }
    std::vector<double> eigenvalues = hermitian_eigenvalues(rho.entries(), rho.dim());
    if (!eigenvalues.empty() && eigenvalues.front() < -kPsdTolerance) {
        throw VerificationError("density matrix is not positive semidefinite: min eigenvalue " +
                                std::to_string(eigenvalues.front()));
    }
    double entropy = 0.0;
    for (double p : eigenvalues) {
        if (p < kEigenvalueFloor) {
            continue;  // 0 log 0 = 0
        }
        p = std::min(p, 1.0);
        entropy -= p * std::log2(p);
    }
    return entropy;
}

std::map<unsigned, double> entanglement_report(const FieldEnsemble &ens, size_t party_cap) {
    ModeState state = assemble_mode_state(ens, party_cap);
    DensityMatrix rho = density_matrix(state);
    size_t n = state.parties;
    std::map<unsigned, double> out;
    unsigned full = (1u << n) - 1u;
    unsigned party0_bit = 1u << (n - 1);
    for (unsigned mask = 1; mask < full; mask++) {
        if (!(mask & party0_bit)) {
            continue;  // report each unordered split once, A side holds party a
        }
        out[mask] = von_neumann_entropy(partial_trace(rho, Bipartition(n, mask)));
    }
    return out;
}

double state_fidelity(const ModeState &state, std::span<const std::complex<double>> reference) {
    if (reference.size() != state.dim()) {
        throw std::invalid_argument("reference dimension mismatch");
    }
    std::complex<double> overlap = 0.0;
    double ref_norm = 0.0;
    for (size_t j = 0; j < reference.size(); j++) {
        overlap += std::conj(reference[j]) * state.amplitudes[j];
        ref_norm += std::norm(reference[j]);
    }
    double state_norm = state.norm();
    return std::norm(overlap) / (ref_norm * state_norm * state_norm);
}

}  // namespace ppsim
