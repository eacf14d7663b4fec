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

#include "ppsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ppsim {

namespace {

double off_diagonal_norm(const std::vector<std::complex<double>> &a, size_t dim) {
    double sum = 0.0;
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            if (r != c) {
                sum += std::norm(a[r * dim + c]);
            }
        }
    }
    return std::sqrt(sum);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> a, size_t dim) {
    if (a.size() != dim * dim) {
        throw std::invalid_argument("matrix storage does not match dimension");
    }
    if (dim == 0) {
        return {};
    }
    if (dim == 1) {
        return {a[0].real()};
    }

    double scale = 0.0;
    for (const auto &z : a) {
        scale = std::max(scale, std::abs(z));
    }
    if (scale == 0.0) {
        return std::vector<double>(dim, 0.0);
    }
    const double tol = 1e-15 * scale * static_cast<double>(dim);
    const int max_sweeps = 60;

    for (int sweep = 0; sweep < max_sweeps; sweep++) {
        if (off_diagonal_norm(a, dim) <= tol) {
            break;
        }
        for (size_t p = 0; p < dim; p++) {
            for (size_t q = p + 1; q < dim; q++) {
                std::complex<double> apq = a[p * dim + q];
                double mag = std::abs(apq);
                if (mag <= tol / static_cast<double>(dim)) {
                    continue;
                }
                // Unitary 2x2 rotation diagonalizing [[app, apq], [apq*, aqq]].
                double app = a[p * dim + p].real();
                double aqq = a[q * dim + q].real();
                std::complex<double> phase = apq / mag;
                double tau = (aqq - app) / (2.0 * mag);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                // Columns: col_p' = c col_p - s phase* col_q ; col_q' = s phase col_p + c col_q
                for (size_t r = 0; r < dim; r++) {
                    std::complex<double> arp = a[r * dim + p];
                    std::complex<double> arq = a[r * dim + q];
                    a[r * dim + p] = c * arp - s * std::conj(phase) * arq;
                    a[r * dim + q] = s * phase * arp + c * arq;
                }
                for (size_t col = 0; col < dim; col++) {
                    std::complex<double> apc = a[p * dim + col];
                    std::complex<double> aqc = a[q * dim + col];
                    a[p * dim + col] = c * apc - s * phase * aqc;
                    a[q * dim + col] = s * std::conj(phase) * apc + c * aqc;
                }
                a[p * dim + q] = 0.0;
                a[q * dim + p] = 0.0;
            }
        }
    }

    std::vector<double> eigenvalues(dim);
    for (size_t r = 0; r < dim; r++) {
        eigenvalues[r] = a[r * dim + r].real();
    }
    std::sort(eigenvalues.begin(), eigenvalues.end());
    return eigenvalues;
}

}  // namespace ppsim
