// Copyright 2026 The qiit authors
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
#include <random>

#include "qiit/network.hpp"
#include "qiit/operators.hpp"

namespace qiit {

/// Gaussian-unitary-ensemble Hermitian matrix. Off-diagonal entries are
/// complex Gaussians of total variance `variance` (real and imaginary parts
/// each carry half); diagonal entries are real with the same variance.
/// Deterministic in the seed.
ComplexMatrix sample_gue(Eigen::Index dim, std::uint64_t seed, double variance = 1.0);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the R
/// diagonal phases folded back in.
ComplexMatrix sample_haar_unitary(Eigen::Index dim, std::uint64_t seed);

/// Normalized random ket with i.i.d. complex Gaussian amplitudes.
Eigen::VectorXcd random_ket(Eigen::Index dim, std::mt19937_64& rng);

/// Product state of independent random pure site states.
StateSpec random_product_state(int n_sites, int local_dim, std::uint64_t seed);

}  // namespace qiit
