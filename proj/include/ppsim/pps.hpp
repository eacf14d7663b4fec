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

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "ppsim/gf4.hpp"

namespace ppsim {

/// Modulation phase for a quaternary label: 0, pi/2, pi or 3pi/2 radians.
double phase_of(uint8_t label);

/// Exactly representable unit phasor e^{i * phase_of(label)}:
/// (1,0), (0,1), (-1,0), (0,-1). Using these instead of cos/sin keeps the
/// combinatorial layer free of rounding noise.
std::complex<double> unit_phasor(uint8_t label);

/// A length-N sequence of quaternary labels, the integer form of one
/// pseudorandom phase sequence.
struct QuaternarySequence {
    std::vector<uint8_t> units;

    size_t size() const { return units.size(); }
    uint8_t operator[](size_t k) const { return units[k]; }

    std::array<size_t, 4> label_counts() const;

    /// Each of the four labels occurs exactly size()/4 times.
    bool balanced() const;
};

/// The family of N = 4^s pseudorandom phase sequences built from one
/// primitive polynomial of degree s over GF(4):
///
///   sequence 0          all-zero
///   sequence j (j >= 1) the base m-sequence cyclically shifted by j - 1,
///                       with a single 0 label appended at position N - 1
///
/// The appended zero restores exact balance (every label 4^{s-1} times).
/// Sequences are stored as exact integers; phases are materialized only when
/// fields are prepared or measurements taken.
class PpsSet {
  public:
    static PpsSet build(const PrimitivePoly &poly);

    int degree() const { return poly_.degree(); }
    size_t size() const { return seqs_.size(); }  // N
    const PrimitivePoly &polynomial() const { return poly_; }

    const QuaternarySequence &sequence(size_t index) const;

    /// (1/N) sum_k e^{i (phase(seq_b[k]) - phase(seq_a[k]))}.
    /// 1 for a = b. For a != b the value is 0 except for pairs of shifts at
    /// cyclic distance (N-1)/3 or 2(N-1)/3, where it is +-i/2: shifting an
    /// m-sequence by (N-1)/3 multiplies it pointwise by w, and no assignment
    /// of the four labels to the four quarter-turn phasors makes that
    /// pointwise map average to zero. See gram_max_off_diagonal().
    std::complex<double> orthogonality(size_t a, size_t b) const;

    /// max |orthogonality(a, b)| over all a != b. Exactly 0.5 for every
    /// degree, realized on the w-multiplier pairs described above.
    double gram_max_off_diagonal() const;

    /// Exact integer-exponent phase sum over mixed sequences:
    ///   sum_k i^( sum_m coefs[m] * seq_{indices[m]}[k]  mod 4 ).
    /// This is the quantity that decides whether a relative-phase
    /// combination is balanced; it is computed without any floating point
    /// rounding in the exponent.
    std::complex<double> combo_phase_sum(std::span<const size_t> indices,
                                         std::span<const int> coefs) const;

    /// Indices b such that orthogonality(a, b) is nonzero, i.e. the
    /// w-multiplier partners of sequence a. Empty for a = 0.
    std::vector<size_t> nonorthogonal_partners(size_t a) const;

  private:
    PpsSet(PrimitivePoly poly, std::vector<QuaternarySequence> seqs)
        : poly_(std::move(poly)), seqs_(std::move(seqs)) {}

    PrimitivePoly poly_;
    std::vector<QuaternarySequence> seqs_;
};

}  // namespace ppsim
