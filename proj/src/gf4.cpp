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

#include "ppsim/gf4.hpp"

#include <sstream>

#include "ppsim/errors.hpp"

namespace ppsim {

namespace {

const char *label_name(uint8_t label) {
    switch (label) {
        case 0: return "0";
        case 1: return "1";
        case 2: return "w";
        default: return "w^2";
    }
}

uint64_t period_bound(int s) {
    uint64_t n = 1;
    for (int i = 0; i < s; i++) {
        n *= 4;
    }
    return n;  // 4^s; the state cycle can be at most 4^s - 1 long
}

}  // namespace

std::string PrimitivePoly::to_string() const {
    std::ostringstream out;
    out << "x";
    if (degree() > 1) {
        out << "^" << degree();
    }
    for (int p = degree() - 1; p >= 0; p--) {
        Gf4 c = coeffs[static_cast<size_t>(p)];
        if (c.is_zero()) {
            continue;
        }
        out << " + ";
        bool unit_coeff = c.label() == 1;
        if (!unit_coeff) {
            out << label_name(c.label());
        }
        if (p > 0) {
            if (!unit_coeff) {
                out << "*";
            }
            out << "x";
            if (p > 1) {
                out << "^" << p;
            }
        } else if (unit_coeff) {
            out << "1";
        }
    }
    return out.str();
}

PrimitivePoly PrimitivePoly::from_labels(const std::vector<uint8_t> &labels) {
    if (labels.empty()) {
        throw std::invalid_argument("polynomial needs degree >= 1");
    }
    PrimitivePoly poly;
    poly.coeffs.reserve(labels.size());
    for (uint8_t l : labels) {
        poly.coeffs.push_back(Gf4(l));
    }
    return poly;
}

PrimitivePoly PrimitivePoly::default_for_degree(int s) {
    // c_0 .. c_{s-1}; each row is the lexicographically first primitive
    // polynomial of its degree under the label order 0 < 1 < w < w^2.
    static const std::vector<std::vector<uint8_t>> table = {
        {2},              // x + w
        {2, 1},           // x^2 + x + w
        {2, 1, 1},        // x^3 + x^2 + x + w
        {2, 0, 1, 1},     // x^4 + x^3 + x^2 + w
        {2, 0, 0, 0, 1},  // x^5 + x^4 + w
    };
    if (s < 1 || s > static_cast<int>(table.size())) {
        throw std::invalid_argument("no default polynomial for degree " + std::to_string(s) +
                                    " (supported: 1.." + std::to_string(table.size()) + ")");
    }
    PrimitivePoly poly = from_labels(table[static_cast<size_t>(s - 1)]);
    if (!verify_primitive(poly)) {
        throw VerificationError("shipped polynomial " + poly.to_string() + " failed the primitivity check");
    }
    return poly;
}

uint64_t lfsr_state_period(const PrimitivePoly &poly) {
    int s = poly.degree();
    if (s < 1) {
        throw std::invalid_argument("polynomial needs degree >= 1");
    }
    if (poly.coeffs[0].is_zero()) {
        throw std::invalid_argument("constant term of " + poly.to_string() +
                                    " is zero; LFSR period undefined");
    }
    // State holds (a_{k-s}, ..., a_{k-1}); seed is (0, ..., 0, 1).
    std::vector<Gf4> seed(static_cast<size_t>(s));
    seed[static_cast<size_t>(s - 1)] = Gf4(1);
    std::vector<Gf4> state = seed;
    uint64_t limit = period_bound(s);
    for (uint64_t step = 1; step <= limit; step++) {
        Gf4 next;
        for (int j = 1; j <= s; j++) {
            next = next + poly.coeffs[static_cast<size_t>(s - j)] * state[static_cast<size_t>(s - j)];
        }
        state.erase(state.begin());
        state.push_back(next);
        if (state == seed) {
            return step;
        }
    }
    throw VerificationError("LFSR for " + poly.to_string() + " never returned to its seed state");
}

bool verify_primitive(const PrimitivePoly &poly) {
    return lfsr_state_period(poly) == period_bound(poly.degree()) - 1;
}

std::vector<Gf4> lfsr_m_sequence(const PrimitivePoly &poly) {
    uint64_t want = period_bound(poly.degree()) - 1;
    uint64_t got = lfsr_state_period(poly);
    if (got != want) {
        throw VerificationError("polynomial " + poly.to_string() + " is not primitive: measured period " +
                                std::to_string(got) + " != " + std::to_string(want));
    }
    int s = poly.degree();
    std::vector<Gf4> seq(static_cast<size_t>(s));
    seq[static_cast<size_t>(s - 1)] = Gf4(1);
    seq.reserve(want);
    while (seq.size() < want) {
        Gf4 next;
        for (int j = 1; j <= s; j++) {
            next = next + poly.coeffs[static_cast<size_t>(s - j)] * seq[seq.size() - static_cast<size_t>(j)];
        }
        seq.push_back(next);
    }
    return seq;
}

}  // namespace ppsim
