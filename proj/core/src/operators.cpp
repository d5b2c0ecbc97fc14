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

#include "qiit/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qiit {

namespace {

// For every index over `universe`, the packed index formed by the digits at
// the positions of `part`. The lowest site is the most significant digit.
std::vector<Eigen::Index> gather_map(SiteSubset universe, SiteSubset part, int d) {
  const auto u_sites = universe.sites();
  const int k = static_cast<int>(u_sites.size());
  const Eigen::Index dim = dim_pow(d, k);
  std::vector<Eigen::Index> strides(k);
  Eigen::Index s = 1;
  for (int i = k - 1; i >= 0; --i) {
    strides[i] = s;
    s *= d;
  }
  std::vector<Eigen::Index> map(dim, 0);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    Eigen::Index packed = 0;
    for (int i = 0; i < k; ++i) {
      if (!part.contains(u_sites[i])) continue;
      packed = packed * d + (idx / strides[i]) % d;
    }
    map[idx] = packed;
  }
  return map;
}

// Offsets into a full index contributed by the digits of `part` alone,
// indexed by the packed `part` index.
std::vector<Eigen::Index> scatter_offsets(SiteSubset universe, SiteSubset part, int d) {
  const auto u_sites = universe.sites();
  const int k = static_cast<int>(u_sites.size());
  std::vector<Eigen::Index> strides(k);
  Eigen::Index s = 1;
  for (int i = k - 1; i >= 0; --i) {
    strides[i] = s;
    s *= d;
  }
  std::vector<Eigen::Index> part_strides;
  for (int i = 0; i < k; ++i) {
    if (part.contains(u_sites[i])) part_strides.push_back(strides[i]);
  }
  const int kp = static_cast<int>(part_strides.size());
  const Eigen::Index dim = dim_pow(d, kp);
  std::vector<Eigen::Index> offs(dim, 0);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    Eigen::Index rest = idx;
    Eigen::Index off = 0;
    for (int i = kp - 1; i >= 0; --i) {
      off += (rest % d) * part_strides[i];
      rest /= d;
    }
    offs[idx] = off;
  }
  return offs;
}

double max_abs_anti_hermitian(const ComplexMatrix& m) {
  return 0.5 * (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

SupportedOperator::SupportedOperator(SiteSubset support, int local_dim, ComplexMatrix matrix)
    : support_(support), local_dim_(local_dim), matrix_(std::move(matrix)) {
  if (local_dim_ < 2 && !support.empty())
    throw std::invalid_argument("SupportedOperator: local dimension must be >= 2");
  const Eigen::Index expected = dim_pow(local_dim_, support_.count());
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() != expected)
    throw std::invalid_argument("SupportedOperator: matrix dimension inconsistent with support");
}

SupportedOperator SupportedOperator::scalar(Complex value, int local_dim) {
  ComplexMatrix m(1, 1);
  m(0, 0) = value;
  return SupportedOperator(SiteSubset(), local_dim, std::move(m));
}

SupportedOperator SupportedOperator::identity(SiteSubset support, int local_dim) {
  const Eigen::Index dim = dim_pow(local_dim, support.count());
  return SupportedOperator(support, local_dim, ComplexMatrix::Identity(dim, dim));
}

SupportedOperator SupportedOperator::maximally_mixed(SiteSubset support, int local_dim) {
  const Eigen::Index dim = dim_pow(local_dim, support.count());
  return SupportedOperator(
      support, local_dim,
      ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

bool SupportedOperator::is_hermitian(double tolerance) const {
  return max_abs_anti_hermitian(matrix_) <= tolerance;
}

SupportedOperator kron(const SupportedOperator& a, const SupportedOperator& b) {
  if (a.local_dim() != b.local_dim())
    throw std::invalid_argument("kron: local dimension mismatch");
  if (a.support().intersects(b.support()))
    throw std::invalid_argument("kron: support collision");

  const SiteSubset joint = a.support() | b.support();
  const int d = a.local_dim();
  const Eigen::Index dim = dim_pow(d, joint.count());

  const auto map_a = gather_map(joint, a.support(), d);
  const auto map_b = gather_map(joint, b.support(), d);

  ComplexMatrix out(dim, dim);
  const auto& ma = a.matrix();
  const auto& mb = b.matrix();
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c)
      out(r, c) = ma(map_a[r], map_a[c]) * mb(map_b[r], map_b[c]);
  return SupportedOperator(joint, d, std::move(out));
}

SupportedOperator partial_trace(const SupportedOperator& x, SiteSubset keep) {
  if (!keep.is_subset_of(x.support()))
    throw std::invalid_argument("partial_trace: keep is not a subset of the support");

  const SiteSubset traced = x.support().minus(keep);
  if (traced.empty()) return x;

  const int d = x.local_dim();
  const auto offs_keep = scatter_offsets(x.support(), keep, d);
  const auto offs_traced = scatter_offsets(x.support(), traced, d);
  const Eigen::Index dk = static_cast<Eigen::Index>(offs_keep.size());

  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  const auto& m = x.matrix();
  for (Eigen::Index r = 0; r < dk; ++r)
    for (Eigen::Index c = 0; c < dk; ++c) {
      Complex acc = 0;
      for (Eigen::Index t : offs_traced) acc += m(offs_keep[r] + t, offs_keep[c] + t);
      out(r, c) = acc;
    }
  return SupportedOperator(keep, d, std::move(out));
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& h) {
  if (h.rows() == 1) return Eigen::VectorXd::Constant(1, h(0, 0).real());
  if (h.rows() == 2) {
    // Closed form keeps the hot pairing loop off the iterative solver.
    const double a = h(0, 0).real();
    const double c = h(1, 1).real();
    const double m = 0.5 * (a + c);
    const double r = std::hypot(0.5 * (a - c), std::abs(h(0, 1)));
    Eigen::VectorXd ev(2);
    ev << m - r, m + r;
    return ev;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double trace_norm(const SupportedOperator& h) {
  if (!h.is_hermitian())
    throw std::invalid_argument("trace_norm: operator is not Hermitian");
  return hermitian_eigenvalues(h.matrix()).cwiseAbs().sum();
}

double trace_distance(const SupportedOperator& rho, const SupportedOperator& sigma) {
  if (rho.support() != sigma.support() || rho.local_dim() != sigma.local_dim())
    throw std::invalid_argument("trace_distance: support mismatch");
  if (!rho.is_hermitian() || !sigma.is_hermitian())
    throw std::invalid_argument("trace_distance: operands must be Hermitian");
  return 0.5 * hermitian_eigenvalues(rho.matrix() - sigma.matrix()).cwiseAbs().sum();
}

double purity(const SupportedOperator& rho) {
  if (!rho.is_hermitian())
    throw std::invalid_argument("purity: operator is not Hermitian");
  // Tr(rho^2) equals the squared Frobenius norm for Hermitian rho.
  return rho.matrix().squaredNorm();
}

ComplexMatrix herm_expm(const ComplexMatrix& h, double angle) {
  if (max_abs_anti_hermitian(h) > tol::hermitian)
    throw std::invalid_argument("herm_expm: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  Eigen::VectorXcd phases(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    phases(i) = std::exp(Complex(0.0, angle * ev(i)));
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

SupportedOperator herm_expm(const SupportedOperator& h, double angle) {
  return SupportedOperator(h.support(), h.local_dim(), herm_expm(h.matrix(), angle));
}

void validate_density_operator(const SupportedOperator& rho) {
  if (!rho.is_hermitian())
    throw std::invalid_argument("density operator is not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > tol::density_trace)
    throw std::invalid_argument("density operator trace differs from 1");
  const Eigen::VectorXd ev = hermitian_eigenvalues(rho.matrix());
  if (ev.minCoeff() < tol::density_psd_floor)
    throw std::invalid_argument("density operator has a negative eigenvalue");
}

}  // namespace qiit
