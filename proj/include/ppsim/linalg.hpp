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
#include <vector>

namespace ppsim {

/// Eigenvalues of a Hermitian matrix (row-major, dim x dim), ascending.
/// Cyclic Jacobi with complex rotations; plenty accurate for the dense
/// matrices this project produces (dim <= 1024).
std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> matrix, size_t dim);

}  // namespace ppsim
