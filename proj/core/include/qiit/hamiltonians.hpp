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
#include <vector>

#include "qiit/operators.hpp"

namespace qiit {

/// Pauli matrix sigma_a with the index convention 0 = identity, 1 = x,
/// 2 = y, 3 = z.
const ComplexMatrix& pauli(int a);

/// Embed a single-site operator at `site` in an n-site qudit register.
ComplexMatrix embed_single_site(const ComplexMatrix& op, int site, int n_sites, int local_dim);

/// sum_i (x_i x_{i+1} + y_i y_{i+1}) on a ring of n qubits.
ComplexMatrix xx_ring(int n_sites);
/// sum_{i<j} (x_i x_j + y_i y_j), fully connected.
ComplexMatrix xx_full(int n_sites);
/// Ring Heisenberg coupling: xx + yy + zz on nearest neighbours.
ComplexMatrix xxx_ring(int n_sites);
ComplexMatrix xxx_full(int n_sites);

/// The n-fold tensor power of sigma_z. Squares to the identity.
ComplexMatrix z_global(int n_sites);

/// Two-qudit swap |a,b> -> |b,a>.
ComplexMatrix swap_gate(int local_dim);

/// Controlled-NOT with the first site as control.
ComplexMatrix cnot_gate();

/// Permutation unitary moving the content of site i to site sigma[i].
ComplexMatrix permutation_unitary(const std::vector<int>& sigma, int local_dim);

/// Tensor product of per-site unitaries (site 0 first).
ComplexMatrix local_product(const std::vector<ComplexMatrix>& site_unitaries);

/// Diagonal unitary with random product-basis phases, deterministic in the
/// seed.
ComplexMatrix diagonal_phase_unitary(int n_sites, int local_dim, std::uint64_t seed);

/// Spectral norm (largest absolute eigenvalue) of a Hermitian matrix.
double spectral_norm(const ComplexMatrix& h);

}  // namespace qiit
