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

#include "qiit/random.hpp"

#include <cmath>

namespace qiit {

ComplexMatrix sample_gue(Eigen::Index dim, std::uint64_t seed, double variance) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double off_sigma = std::sqrt(variance / 2.0);
  const double diag_sigma = std::sqrt(variance);
  ComplexMatrix h(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    h(i, i) = Complex(diag_sigma * gauss(rng), 0.0);
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      const Complex z(off_sigma * gauss(rng), off_sigma * gauss(rng));
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  return h;
}

ComplexMatrix sample_haar_unitary(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix z(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so the distribution is exactly Haar.
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    q.col(j) *= rjj / std::abs(rjj);
  }
  return q;
}

Eigen::VectorXcd random_ket(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd k(dim);
  for (Eigen::Index i = 0; i < dim; ++i) k(i) = Complex(gauss(rng), gauss(rng));
  k.normalize();
  return k;
}

StateSpec random_product_state(int n_sites, int local_dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Eigen::VectorXcd> kets;
  kets.reserve(n_sites);
  for (int j = 0; j < n_sites; ++j) kets.push_back(random_ket(local_dim, rng));
  return StateSpec::product_kets_spec(std::move(kets));
}

}  // namespace qiit
