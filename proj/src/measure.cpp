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

#include "ppsim/measure.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ppsim {

double project_unit(const ClassicalField &f, size_t k, double theta) {
    if (k >= f.size()) {
        throw std::out_of_range("unit index " + std::to_string(k) + " out of range, field has " +
                                std::to_string(f.size()));
    }
    const FieldUnit &u = f.units[k];
    std::complex<double> phase(std::cos(theta), std::sin(theta));
    std::complex<double> v = u.mode1 * std::conj(u.mode0) * phase +
                             u.mode0 * std::conj(u.mode1) * std::conj(phase);
    return v.real();
}

double correlation_normalization(const FieldEnsemble &ens) {
    if (ens.kind == EnsembleKind::Product) {
        return 1.0;
    }
    return std::ldexp(1.0, -static_cast<int>(ens.size() - 1));  // 1/2^{n-1}
}

CorrelationResult correlate(const FieldEnsemble &ens, std::span<const double> angles, bool keep_per_unit) {
    size_t n = ens.size();
    if (n == 0) {
        throw std::invalid_argument("cannot correlate an empty ensemble");
    }
    if (angles.size() != n) {
        throw std::invalid_argument("need one analyzer angle per field: " + std::to_string(n) +
                                    " fields, " + std::to_string(angles.size()) + " angles");
    }
    size_t len = ens.fields[0].size();
    CorrelationResult result;
    result.parties = n;
    result.normalization = correlation_normalization(ens);
    if (keep_per_unit) {
        result.per_unit.emplace();
        result.per_unit->reserve(len);
    }
    double total = 0.0;
    for (size_t k = 0; k < len; k++) {
        double prod = 1.0;
        for (size_t i = 0; i < n; i++) {
            prod *= project_unit(ens.fields[i], k, angles[i]);
        }
        total += prod;
        if (keep_per_unit) {
            result.per_unit->push_back(prod);
        }
    }
    result.value = total / (static_cast<double>(len) * result.normalization);
    return result;
}

CorrelationResult marginal_correlate(const FieldEnsemble &ens, std::pair<size_t, size_t> parties,
                                     double theta_a, double theta_b) {
    if (ens.kind != EnsembleKind::Ghz) {
        throw std::invalid_argument("marginal correlation is defined for GHZ ensembles, got " +
                                    std::string(to_string(ens.kind)));
    }
    auto [pa, pb] = parties;
    if (pa == pb || pa >= ens.size() || pb >= ens.size()) {
        throw std::invalid_argument("marginal needs two distinct party indices below " +
                                    std::to_string(ens.size()));
    }
    size_t len = ens.fields[0].size();
    double total = 0.0;
    for (size_t k = 0; k < len; k++) {
        total += project_unit(ens.fields[pa], k, theta_a) * project_unit(ens.fields[pb], k, theta_b);
    }
    CorrelationResult result;
    result.parties = 2;
    result.normalization = 0.5;
    result.value = total / (static_cast<double>(len) * result.normalization);
    return result;
}

double chsh(const FieldEnsemble &ens, double theta_a, double theta_a2, double theta_b, double theta_b2) {
    if (ens.size() != 2) {
        throw std::invalid_argument("CHSH needs a two-party ensemble");
    }
    auto e = [&](double x, double y) {
        double angles[2] = {x, y};
        return correlate(ens, angles).value;
    };
    return std::abs(e(theta_a, theta_b) - e(theta_a, theta_b2) + e(theta_a2, theta_b2) + e(theta_a2, theta_b));
}

std::vector<std::pair<double, double>> correlation_sweep(const FieldEnsemble &ens,
                                                         std::span<const double> fixed_angles,
                                                         size_t varying_party,
                                                         std::span<const double> grid) {
    if (varying_party >= ens.size()) {
        throw std::invalid_argument("varying party " + std::to_string(varying_party) +
                                    " out of range for " + std::to_string(ens.size()) + " fields");
    }
    if (fixed_angles.size() != ens.size()) {
        throw std::invalid_argument("need one base angle per field");
    }
    if (grid.empty()) {
        throw std::invalid_argument("sweep grid must be non-empty");
    }
    std::vector<double> angles(fixed_angles.begin(), fixed_angles.end());
    std::vector<std::pair<double, double>> out;
    out.reserve(grid.size());
    for (double theta : grid) {
        angles[varying_party] = theta;
        out.emplace_back(theta, correlate(ens, angles).value);
    }
    return out;
}

double closed_form_correlation(EnsembleKind kind, std::span<const double> angles) {
    double sum = 0.0;
    for (double a : angles) {
        sum += a;
    }
    switch (kind) {
        case EnsembleKind::Product: {
            double prod = 1.0;
            for (double a : angles) {
                prod *= std::cos(a);
            }
            return prod;
        }
        case EnsembleKind::BellPsiPlus:
            return std::cos(angles[0] + angles[1]);
        case EnsembleKind::BellPsiMinus:
            return -std::cos(angles[0] + angles[1]);
        case EnsembleKind::BellPhiPlus:
            return std::cos(angles[0] - angles[1]);
        case EnsembleKind::BellPhiMinus:
            return -std::cos(angles[0] - angles[1]);
        case EnsembleKind::Ghz:
            return std::cos(sum);
    }
    throw std::invalid_argument("unknown ensemble kind");
}

std::array<double, 4> chsh_max_angles(EnsembleKind variant) {
    constexpr double pi = std::numbers::pi;
    switch (variant) {
        case EnsembleKind::BellPsiPlus:
        case EnsembleKind::BellPsiMinus:
            return {pi / 4, -pi / 4, 0.0, pi / 2};
        case EnsembleKind::BellPhiPlus:
        case EnsembleKind::BellPhiMinus:
            return {pi / 4, -pi / 4, pi, pi / 2};
        default:
            throw std::invalid_argument(std::string("no CHSH angle set for ") + to_string(variant));
    }
}

}  // namespace ppsim
