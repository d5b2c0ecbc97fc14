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

#include <complex>

#include <Eigen/Dense>

#include "qiit/site_subset.hpp"
#include "qiit/tolerances.hpp"

namespace qiit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// d^k for small non-negative k.
inline Eigen::Index dim_pow(int local_dim, int n_sites) {
  Eigen::Index d = 1;
  for (int i = 0; i < n_sites; ++i) d *= local_dim;
  return d;
}

/// A dense operator together with the ordered set of sites it acts on.
/// Supports are kept ascending; the lowest site is the most significant
/// tensor factor of the matrix index.
class SupportedOperator {
 public:
  SupportedOperator(SiteSubset support, int local_dim, ComplexMatrix matrix);

  /// Operator on no sites: a 1x1 matrix holding a plain number.
  static SupportedOperator scalar(Complex value, int local_dim);
  static SupportedOperator identity(SiteSubset support, int local_dim);
  /// 1 / d^{|support|} on `support`; the scalar 1 when the support is empty.
  static SupportedOperator maximally_mixed(SiteSubset support, int local_dim);

  const SiteSubset& support() const { return support_; }
  int local_dim() const { return local_dim_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  ComplexMatrix& matrix() { return matrix_; }

  Complex trace() const { return matrix_.trace(); }
  bool is_hermitian(double tolerance = tol::hermitian) const;

 private:
  SiteSubset support_;
  int local_dim_;
  ComplexMatrix matrix_;
};

/// Tensor product with site-sorted output. The supports must be disjoint;
/// when the sites interleave the entries are permuted so that the combined
/// support is ascending.
SupportedOperator kron(const SupportedOperator& a, const SupportedOperator& b);

/// Trace out every site not in `keep`. Preserves the trace; `keep` must be a
/// subset of the support. keep == support is the identity, keep == {} yields
/// the scalar trace.
SupportedOperator partial_trace(const SupportedOperator& x, SiteSubset keep);

/// Sum of absolute eigenvalues of a Hermitian operator.
double trace_norm(const SupportedOperator& h);

/// (1/2) || rho - sigma ||_1 for Hermitian operators on the same support.
double trace_distance(const SupportedOperator& rho, const SupportedOperator& sigma);

/// Tr(rho^2) of a Hermitian operator.
double purity(const SupportedOperator& rho);

/// exp(i * angle * h) of a Hermitian matrix, via eigendecomposition.
ComplexMatrix herm_expm(const ComplexMatrix& h, double angle);
SupportedOperator herm_expm(const SupportedOperator& h, double angle);

/// Real eigenvalues of a Hermitian operator, ascending.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& h);

/// Throws unless rho is Hermitian, PSD within the eigenvalue floor, and has
/// unit trace.
void validate_density_operator(const SupportedOperator& rho);

}  // namespace qiit
