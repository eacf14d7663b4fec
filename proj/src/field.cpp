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

#include "ppsim/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "ppsim/errors.hpp"

namespace ppsim {

namespace {

constexpr double kNormTolerance = 1e-12;
constexpr double kPhaseSnapTolerance = 1e-9;

void require_same_length(const ClassicalField &a, const ClassicalField &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("field length mismatch: " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
    }
}

void require_distinct(const std::vector<size_t> &indices) {
    std::set<size_t> seen(indices.begin(), indices.end());
    if (seen.size() != indices.size()) {
        throw std::invalid_argument("sequence indices must be pairwise distinct");
    }
}

}  // namespace

std::complex<double> RelativePhaseSequence::balance_sum() const {
    std::complex<double> sum = 0.0;
    for (uint8_t q : quarter_turns) {
        sum += unit_phasor(q);
    }
    return sum;
}

ClassicalField prepare_field(const PpsSet &pps, size_t index, std::complex<double> alpha,
                             std::complex<double> beta) {
    double norm = std::norm(alpha) + std::norm(beta);
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw std::invalid_argument("superposition coefficients must satisfy |alpha|^2 + |beta|^2 = 1, got " +
                                    std::to_string(norm));
    }
    const QuaternarySequence &seq = pps.sequence(index);
    ClassicalField f;
    f.pps_index = index;
    f.units.reserve(seq.size());
    for (size_t k = 0; k < seq.size(); k++) {
        std::complex<double> carrier = unit_phasor(seq[k]);
        f.units.push_back({alpha * carrier, beta * carrier});
    }
    return f;
}

std::complex<double> field_inner_product(const ClassicalField &a, const ClassicalField &b) {
    require_same_length(a, b);
    std::complex<double> sum = 0.0;
    for (size_t k = 0; k < a.size(); k++) {
        sum += std::conj(a.units[k].mode0) * b.units[k].mode0 +
               std::conj(a.units[k].mode1) * b.units[k].mode1;
    }
    return sum / static_cast<double>(a.size());
}

std::pair<ClassicalField, ClassicalField> mode_exchange_pair(const ClassicalField &a,
                                                             const ClassicalField &b) {
    require_same_length(a, b);
    if (a.pps_index == b.pps_index) {
        throw std::invalid_argument("mode exchange needs fields with distinct sequence indices");
    }
    ClassicalField a2 = a;
    ClassicalField b2 = b;
    for (size_t k = 0; k < a.size(); k++) {
        std::swap(a2.units[k].mode1, b2.units[k].mode1);
    }
    return {std::move(a2), std::move(b2)};
}

ClassicalField apply_sigma_x(const ClassicalField &f) {
    ClassicalField out = f;
    for (FieldUnit &u : out.units) {
        std::swap(u.mode0, u.mode1);
    }
    return out;
}

RelativePhaseSequence extract_rps(const ClassicalField &f) {
    RelativePhaseSequence rps;
    rps.quarter_turns.reserve(f.size());
    for (size_t k = 0; k < f.size(); k++) {
        const FieldUnit &u = f.units[k];
        if (std::abs(u.mode0) < kNormTolerance || std::abs(u.mode1) < kNormTolerance) {
            throw VerificationError("relative phase undefined at unit " + std::to_string(k) +
                                    ": a mode amplitude vanishes");
        }
        double gamma = std::arg(u.mode1) - std::arg(u.mode0);
        double turns = gamma / (std::numbers::pi / 2.0);
        double snapped = std::round(turns);
        if (std::abs(turns - snapped) * (std::numbers::pi / 2.0) > kPhaseSnapTolerance) {
            throw VerificationError("relative phase at unit " + std::to_string(k) + " is " +
                                    std::to_string(gamma) + " rad, not within 1e-9 of a quarter turn");
        }
        int label = static_cast<int>(snapped) % 4;
        if (label < 0) {
            label += 4;
        }
        rps.quarter_turns.push_back(static_cast<uint8_t>(label));
    }
    return rps;
}

const char *to_string(EnsembleKind kind) {
    switch (kind) {
        case EnsembleKind::Product: return "product";
        case EnsembleKind::BellPsiPlus: return "psi+";
        case EnsembleKind::BellPsiMinus: return "psi-";
        case EnsembleKind::BellPhiPlus: return "phi+";
        case EnsembleKind::BellPhiMinus: return "phi-";
        case EnsembleKind::Ghz: return "ghz";
    }
    return "?";
}

EnsembleKind ensemble_kind_from_string(const std::string &name) {
    if (name == "product") return EnsembleKind::Product;
    if (name == "psi+") return EnsembleKind::BellPsiPlus;
    if (name == "psi-") return EnsembleKind::BellPsiMinus;
    if (name == "phi+") return EnsembleKind::BellPhiPlus;
    if (name == "phi-") return EnsembleKind::BellPhiMinus;
    if (name == "ghz") return EnsembleKind::Ghz;
    throw std::invalid_argument("unknown ensemble kind '" + name + "'");
}

bool is_bell(EnsembleKind kind) {
    return kind == EnsembleKind::BellPsiPlus || kind == EnsembleKind::BellPsiMinus ||
           kind == EnsembleKind::BellPhiPlus || kind == EnsembleKind::BellPhiMinus;
}

std::vector<size_t> FieldEnsemble::indices() const {
    std::vector<size_t> out;
    out.reserve(fields.size());
    for (const ClassicalField &f : fields) {
        out.push_back(f.pps_index);
    }
    return out;
}

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

FieldEnsemble prepared_pair(std::shared_ptr<const PpsSet> pps, size_t ia, size_t ib, EnsembleKind kind) {
    if (!pps) {
        throw std::invalid_argument("ensemble needs a sequence set");
    }
    if (ia == ib) {
        throw std::invalid_argument("ensemble indices must be distinct");
    }
    FieldEnsemble ens;
    ens.kind = kind;
    ens.pps = pps;
    ens.fields.push_back(prepare_field(*pps, ia, kInvSqrt2, kInvSqrt2));
    ens.fields.push_back(prepare_field(*pps, ib, kInvSqrt2, kInvSqrt2));
    return ens;
}

}  // namespace

FieldEnsemble make_product(std::shared_ptr<const PpsSet> pps, size_t ia, size_t ib) {
    return prepared_pair(std::move(pps), ia, ib, EnsembleKind::Product);
}

FieldEnsemble make_bell(std::shared_ptr<const PpsSet> pps, size_t ia, size_t ib, EnsembleKind variant) {
    if (!is_bell(variant)) {
        throw std::invalid_argument(std::string("not a Bell variant: ") + to_string(variant));
    }
    FieldEnsemble ens = prepared_pair(std::move(pps), ia, ib, variant);
    auto [fa, fb] = mode_exchange_pair(ens.fields[0], ens.fields[1]);
    if (variant == EnsembleKind::BellPsiMinus || variant == EnsembleKind::BellPhiMinus) {
        for (FieldUnit &u : fb.units) {
            u.mode1 *= -1.0;  // extra pi on field b's |1)
        }
    }
    if (variant == EnsembleKind::BellPhiPlus || variant == EnsembleKind::BellPhiMinus) {
        fb = apply_sigma_x(fb);
    }
    ens.fields[0] = std::move(fa);
    ens.fields[1] = std::move(fb);
    return ens;
}

std::vector<ClassicalField> circular_mode_exchange(const std::vector<ClassicalField> &fields) {
    size_t n = fields.size();
    if (n < 2) {
        throw std::invalid_argument("circular exchange needs at least two fields");
    }
    size_t len = fields[0].size();
    for (const ClassicalField &f : fields) {
        if (f.size() != len) {
            throw std::invalid_argument("field length mismatch in circular exchange");
        }
    }
    std::vector<ClassicalField> out = fields;
    for (size_t i = 0; i < n; i++) {
        const ClassicalField &donor = fields[(i + 1) % n];
        for (size_t k = 0; k < len; k++) {
            out[i].units[k].mode1 = donor.units[k].mode1;
        }
    }
    return out;
}

FieldEnsemble make_ghz(std::shared_ptr<const PpsSet> pps, const std::vector<size_t> &indices) {
    if (!pps) {
        throw std::invalid_argument("ensemble needs a sequence set");
    }
    if (indices.size() < 3) {
        throw std::invalid_argument("GHZ ensemble needs at least 3 fields");
    }
    if (indices.size() > pps->size()) {
        throw std::invalid_argument("not enough sequences: requested " + std::to_string(indices.size()) +
                                    " fields from a set of " + std::to_string(pps->size()));
    }
    require_distinct(indices);
    std::vector<ClassicalField> prepared;
    prepared.reserve(indices.size());
    for (size_t idx : indices) {
        prepared.push_back(prepare_field(*pps, idx, kInvSqrt2, kInvSqrt2));
    }
    FieldEnsemble ens;
    ens.kind = EnsembleKind::Ghz;
    ens.pps = std::move(pps);
    ens.fields = circular_mode_exchange(prepared);
    return ens;
}

namespace {

// Coefficient vectors, over the cycle positions, of the label combinations
// whose phase sums must vanish for the listed exactness properties.
std::vector<std::vector<int>> partial_sum_combos(size_t n, int scale) {
    std::vector<std::vector<int>> out;
    for (size_t mask = 1; mask + 1 < (size_t{1} << n); mask++) {
        std::vector<int> c(n, 0);
        for (size_t m = 0; m < n; m++) {
            if ((mask >> m) & 1) {
                c[(m + 1) % n] += scale;
                c[m] -= scale;
            }
        }
        bool trivial = true;
        for (int x : c) {
            if (((x % 4) + 4) % 4 != 0) {
                trivial = false;
                break;
            }
        }
        if (!trivial) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<std::vector<int>> marginal_combos(size_t n) {
    std::vector<std::vector<int>> out;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            for (int sgn : {+1, -1}) {
                std::vector<int> c(n, 0);
                c[(i + 1) % n] += 1;
                c[i] -= 1;
                c[(j + 1) % n] += sgn;
                c[j] -= sgn;
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

size_t count_bad(const PpsSet &pps, const std::vector<size_t> &indices,
                 const std::vector<std::vector<int>> &combos) {
    size_t bad = 0;
    for (const auto &c : combos) {
        if (std::abs(pps.combo_phase_sum(indices, c)) > 1e-9) {
            bad++;
        }
    }
    return bad;
}

bool all_balanced(const PpsSet &pps, const std::vector<size_t> &indices,
                  const std::vector<std::vector<int>> &combos) {
    for (const auto &c : combos) {
        if (std::abs(pps.combo_phase_sum(indices, c)) > 1e-9) {
            return false;
        }
    }
    return true;
}

}  // namespace

GhzComboScore score_ghz_indices(const PpsSet &pps, const std::vector<size_t> &indices) {
    size_t n = indices.size();
    GhzComboScore score;
    score.bad_doubled = count_bad(pps, indices, partial_sum_combos(n, 2));
    score.bad_assembly = count_bad(pps, indices, partial_sum_combos(n, 1));
    score.bad_marginal = count_bad(pps, indices, marginal_combos(n));
    return score;
}

std::vector<size_t> choose_ghz_indices(const PpsSet &pps, size_t n, size_t search_cap) {
    if (n < 3 || n > pps.size()) {
        throw std::invalid_argument("GHZ size must be in 3.." + std::to_string(pps.size()));
    }
    auto doubled = partial_sum_combos(n, 2);
    auto assembly = partial_sum_combos(n, 1);
    auto marginal = marginal_combos(n);

    std::vector<size_t> consecutive(n);
    for (size_t i = 0; i < n; i++) {
        consecutive[i] = i + 1;
    }

    size_t count = pps.size();
    auto next_combination = [&](std::vector<size_t> &t) {
        size_t i = n;
        while (i-- > 0) {
            if (t[i] < count - (n - i)) {
                t[i]++;
                for (size_t j = i + 1; j < n; j++) {
                    t[j] = t[j - 1] + 1;
                }
                return true;
            }
        }
        return false;
    };

    // Scan ascending tuples in lexicographic order. Tuples whose doubled or
    // single partial sums are unbalanced are discarded at the first bad
    // combination, which keeps the scan cheap; among the survivors (exact
    // correlations and exact assembly) pick the one with the fewest
    // unbalanced marginal combinations.
    constexpr size_t kMaxSurvivors = 128;
    std::vector<size_t> tuple(n);
    for (size_t i = 0; i < n; i++) {
        tuple[i] = i;
    }
    std::vector<size_t> best;
    size_t best_marginals = marginal.size() + 1;
    size_t survivors = 0;
    for (size_t visited = 0; visited < search_cap; visited++) {
        if (all_balanced(pps, tuple, doubled) && all_balanced(pps, tuple, assembly)) {
            size_t bad = count_bad(pps, tuple, marginal);
            if (bad < best_marginals) {
                best_marginals = bad;
                best = tuple;
                if (bad == 0) {
                    return best;
                }
            }
            if (++survivors >= kMaxSurvivors) {
                break;
            }
        }
        if (!next_combination(tuple)) {
            break;
        }
    }
    // No tuple with exact assembly in reach: fall back to consecutive
    // indices, which keep the correlation sums exact for every case where
    // that is possible at all.
    return best.empty() ? consecutive : best;
}

}  // namespace ppsim
