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

#include "ppsim/pps.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ppsim/errors.hpp"

namespace ppsim {

double phase_of(uint8_t label) {
    if (label > 3) {
        throw std::invalid_argument("quaternary label must be in 0..3, got " + std::to_string(label));
    }
    return static_cast<double>(label) * std::numbers::pi / 2.0;
}

std::complex<double> unit_phasor(uint8_t label) {
    switch (label) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        case 3: return {0.0, -1.0};
        default:
            throw std::invalid_argument("quaternary label must be in 0..3, got " + std::to_string(label));
    }
}

std::array<size_t, 4> QuaternarySequence::label_counts() const {
    std::array<size_t, 4> counts{0, 0, 0, 0};
    for (uint8_t u : units) {
        counts[u]++;
    }
    return counts;
}

bool QuaternarySequence::balanced() const {
    size_t want = units.size() / 4;
    auto counts = label_counts();
    return counts[0] == want && counts[1] == want && counts[2] == want && counts[3] == want;
}

PpsSet PpsSet::build(const PrimitivePoly &poly) {
    std::vector<Gf4> base = lfsr_m_sequence(poly);  // throws if not primitive
    size_t period = base.size();
    size_t n = period + 1;  // N = 4^s

    std::vector<QuaternarySequence> seqs;
    seqs.reserve(n);
    seqs.push_back(QuaternarySequence{std::vector<uint8_t>(n, 0)});
    for (size_t j = 1; j < n; j++) {
        size_t shift = j - 1;
        QuaternarySequence seq;
        seq.units.reserve(n);
        for (size_t k = 0; k < period; k++) {
            seq.units.push_back(base[(k + shift) % period].label());
        }
        seq.units.push_back(0);  // pad at the shared final position
        if (!seq.balanced()) {
            throw VerificationError("sequence " + std::to_string(j) + " is not balanced after padding");
        }
        seqs.push_back(std::move(seq));
    }
    return PpsSet(poly, std::move(seqs));
}

const QuaternarySequence &PpsSet::sequence(size_t index) const {
    if (index >= seqs_.size()) {
        throw std::out_of_range("sequence index " + std::to_string(index) + " out of range, set has " +
                                std::to_string(seqs_.size()));
    }
    return seqs_[index];
}

std::complex<double> PpsSet::orthogonality(size_t a, size_t b) const {
    const QuaternarySequence &sa = sequence(a);
    const QuaternarySequence &sb = sequence(b);
    std::complex<double> sum = 0.0;
    for (size_t k = 0; k < sa.size(); k++) {
        // e^{i(phase_b - phase_a)} = i^{(b - a) mod 4}, taken from the exact table
        uint8_t diff = static_cast<uint8_t>((4 + sb[k] - sa[k]) % 4);
        sum += unit_phasor(diff);
    }
    return sum / static_cast<double>(sa.size());
}

double PpsSet::gram_max_off_diagonal() const {
    double worst = 0.0;
    for (size_t a = 0; a < size(); a++) {
        for (size_t b = a + 1; b < size(); b++) {
            worst = std::max(worst, std::abs(orthogonality(a, b)));
        }
    }
    return worst;
}

std::complex<double> PpsSet::combo_phase_sum(std::span<const size_t> indices,
                                             std::span<const int> coefs) const {
    if (indices.size() != coefs.size()) {
        throw std::invalid_argument("combo_phase_sum needs one coefficient per sequence index");
    }
    for (size_t idx : indices) {
        if (idx >= size()) {
            throw std::out_of_range("sequence index " + std::to_string(idx) + " out of range");
        }
    }
    size_t n = seqs_[0].size();
    // Count exponent residues instead of summing phasors; exact integers.
    std::array<int64_t, 4> counts{0, 0, 0, 0};
    for (size_t k = 0; k < n; k++) {
        int64_t e = 0;
        for (size_t m = 0; m < indices.size(); m++) {
            e += static_cast<int64_t>(coefs[m]) * seqs_[indices[m]][k];
        }
        counts[static_cast<size_t>(((e % 4) + 4) % 4)]++;
    }
    return {static_cast<double>(counts[0] - counts[2]), static_cast<double>(counts[1] - counts[3])};
}

std::vector<size_t> PpsSet::nonorthogonal_partners(size_t a) const {
    std::vector<size_t> out;
    for (size_t b = 0; b < size(); b++) {
        if (b != a && std::abs(orthogonality(a, b)) > 1e-9) {
            out.push_back(b);
        }
    }
    return out;
}

}  // namespace ppsim
