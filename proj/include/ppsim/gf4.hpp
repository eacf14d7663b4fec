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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppsim {

/// An element of GF(4) in the polynomial basis modulo x^2 + x + 1.
///
/// Integer labels: 0 -> 0, 1 -> 1, 2 -> w, 3 -> w^2 = w + 1, where w is a
/// root of x^2 + x + 1. Addition is characteristic-2 (XOR of labels); the
/// three nonzero elements form a cyclic group of order 3 under multiplication.
class Gf4 {
  public:
    constexpr Gf4() = default;
    constexpr explicit Gf4(uint8_t label) : label_(label) {
        if (label > 3) {
            throw std::invalid_argument("Gf4 label must be in 0..3, got " + std::to_string(label));
        }
    }

    constexpr uint8_t label() const { return label_; }
    constexpr bool is_zero() const { return label_ == 0; }

    friend constexpr Gf4 operator+(Gf4 a, Gf4 b) { return Gf4(static_cast<uint8_t>(a.label_ ^ b.label_)); }

    friend constexpr Gf4 operator*(Gf4 a, Gf4 b) {
        constexpr uint8_t table[4][4] = {
            {0, 0, 0, 0},
            {0, 1, 2, 3},
            {0, 2, 3, 1},
            {0, 3, 1, 2},
        };
        return Gf4(table[a.label_][b.label_]);
    }

    constexpr bool operator==(const Gf4 &) const = default;

  private:
    uint8_t label_ = 0;
};

constexpr Gf4 gf4_add(Gf4 a, Gf4 b) { return a + b; }
constexpr Gf4 gf4_mul(Gf4 a, Gf4 b) { return a * b; }

/// A monic polynomial x^s + c_{s-1} x^{s-1} + ... + c_0 over GF(4),
/// intended to drive a linear feedback shift register.
struct PrimitivePoly {
    std::vector<Gf4> coeffs;  // c_0 .. c_{s-1}

    int degree() const { return static_cast<int>(coeffs.size()); }

    /// "x^2 + x + w" style rendering, for error messages and reports.
    std::string to_string() const;

    static PrimitivePoly from_labels(const std::vector<uint8_t> &labels);

    /// Shipped defaults for degrees 1..5. Each entry is re-verified by
    /// verify_primitive() on every call rather than trusted.
    static PrimitivePoly default_for_degree(int s);
};

/// Number of steps the LFSR driven by `poly` takes to return to the seed
/// state (0, ..., 0, 1). Throws std::invalid_argument when c_0 = 0, since
/// the state map is not invertible and the period is undefined.
uint64_t lfsr_state_period(const PrimitivePoly &poly);

/// True iff the LFSR cycles through all 4^s - 1 nonzero states, i.e. the
/// polynomial is primitive. Exhaustive cycle detection, no factor tables.
bool verify_primitive(const PrimitivePoly &poly);

/// One full period (length 4^s - 1) of the recurrence
///   a_k = sum_{j=1..s} c_{s-j} * a_{k-j}
/// seeded with (0, ..., 0, 1). The first s outputs reproduce the seed in
/// order. Throws VerificationError naming the measured period when `poly`
/// is not primitive.
std::vector<Gf4> lfsr_m_sequence(const PrimitivePoly &poly);

}  // namespace ppsim
