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

#include "qiit/hamiltonians.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qiit {

const ComplexMatrix& pauli(int a) {
  static const std::array<ComplexMatrix, 4> mats = [] {
    std::array<ComplexMatrix, 4> m;
    for (auto& x : m) x = ComplexMatrix::Zero(2, 2);
    m[0] << 1, 0, 0, 1;
    m[1] << 0, 1, 1, 0;
    m[2] << 0, Complex(0, -1), Complex(0, 1), 0;
    m[3] << 1, 0, 0, -1;
    return m;
  }();
  if (a < 0 || a > 3) throw std::invalid_argument("pauli index out of range");
  return mats[a];
}

ComplexMatrix embed_single_site(const ComplexMatrix& op, int site, int n_sites, int local_dim) {
  SupportedOperator o(SiteSubset::single(site), local_dim, op);
  const SiteSubset rest = SiteSubset::full(n_sites).minus(SiteSubset::single(site));
  if (rest.empty()) return o.matrix();
  return kron(o, SupportedOperator::identity(rest, local_dim)).matrix();
}

namespace {

ComplexMatrix two_site_pauli(int a, int i, int j, int n) {
  SupportedOperator op = kron(SupportedOperator(SiteSubset::single(i), 2, pauli(a)),
                              SupportedOperator(SiteSubset::single(j), 2, pauli(a)));
  const SiteSubset rest = SiteSubset::full(n).minus(op.support());
  if (!rest.empty()) op = kron(op, SupportedOperator::identity(rest, 2));
  return op.matrix();
}

ComplexMatrix coupling_sum(int n, const std::vector<std::pair<int, int>>& bonds,
                           bool with_zz) {
  const Eigen::Index dim = dim_pow(2, n);
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (const auto& [i, j] : bonds) {
    h += two_site_pauli(1, i, j, n);
    h += two_site_pauli(2, i, j, n);
    if (with_zz) h += two_site_pauli(3, i, j, n);
  }
  return h;
}

std::vector<std::pair<int, int>> ring_bonds(int n) {
  std::vector<std::pair<int, int>> bonds;
  for (int i = 0; i < n; ++i) bonds.emplace_back(i, (i + 1) % n);
  return bonds;
}

std::vector<std::pair<int, int>> full_bonds(int n) {
  std::vector<std::pair<int, int>> bonds;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) bonds.emplace_back(i, j);
  return bonds;
}

}  // namespace

ComplexMatrix xx_ring(int n) { return coupling_sum(n, ring_bonds(n), false); }
ComplexMatrix xx_full(int n) { return coupling_sum(n, full_bonds(n), false); }
ComplexMatrix xxx_ring(int n) { return coupling_sum(n, ring_bonds(n), true); }
ComplexMatrix xxx_full(int n) { return coupling_sum(n, full_bonds(n), true); }

ComplexMatrix z_global(int n) {
  ComplexMatrix z = pauli(3);
  for (int i = 1; i < n; ++i) {
    ComplexMatrix next(z.rows() * 2, z.cols() * 2);
    next.setZero();
    next.topLeftCorner(z.rows(), z.cols()) = z;
    next.bottomRightCorner(z.rows(), z.cols()) = -z;
    z = std::move(next);
  }
  return z;
}

ComplexMatrix swap_gate(int d) {
  const Eigen::Index dim = static_cast<Eigen::Index>(d) * d;
  ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) s(b * d + a, a * d + b) = 1.0;
  return s;
}

ComplexMatrix cnot_gate() {
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  u(0, 0) = 1;
  u(1, 1) = 1;
  u(2, 3) = 1;
  u(3, 2) = 1;
  return u;
}

ComplexMatrix permutation_unitary(const std::vector<int>& sigma, int d) {
  const int n = static_cast<int>(sigma.size());
  std::vector<int> inverse(n, -1);
  for (int i = 0; i < n; ++i) {
    if (sigma[i] < 0 || sigma[i] >= n || inverse[sigma[i]] != -1)
      throw std::invalid_argument("not a permutation");
    inverse[sigma[i]] = i;
  }
  const Eigen::Index dim = dim_pow(d, n);
  std::vector<Eigen::Index> strides(n);
  Eigen::Index s = 1;
  for (int i = n - 1; i >= 0; --i) {
    strides[i] = s;
    s *= d;
  }
  ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    // Output digit at site j is the input digit of site inverse[j].
    Eigen::Index target = 0;
    for (int j = 0; j < n; ++j) {
      const Eigen::Index digit = (b / strides[inverse[j]]) % d;
      target += digit * strides[j];
    }
    u(target, b) = 1.0;
  }
  return u;
}

ComplexMatrix local_product(const std::vector<ComplexMatrix>& site_unitaries) {
  if (site_unitaries.empty()) throw std::invalid_argument("no site unitaries");
  const int d = static_cast<int>(site_unitaries[0].rows());
  SupportedOperator u(SiteSubset::single(0), d, site_unitaries[0]);
  for (int j = 1; j < static_cast<int>(site_unitaries.size()); ++j)
    u = kron(u, SupportedOperator(SiteSubset::single(j), d, site_unitaries[j]));
  return u.matrix();
}

ComplexMatrix diagonal_phase_unitary(int n, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const Eigen::Index dim = dim_pow(d, n);
  ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) u(i, i) = std::exp(Complex(0.0, angle(rng)));
  return u;
}

double spectral_norm(const ComplexMatrix& h) {
  return hermitian_eigenvalues(h).cwiseAbs().maxCoeff();
}

}  // namespace qiit
