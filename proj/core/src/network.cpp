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

#include "qiit/network.hpp"

#include <cmath>
#include <stdexcept>

namespace qiit {

StateSpec StateSpec::product_kets_spec(std::vector<Eigen::VectorXcd> kets) {
  StateSpec s;
  s.kind = Kind::product_kets;
  s.kets = std::move(kets);
  return s;
}

StateSpec StateSpec::product_bloch_spec(std::vector<Eigen::Vector3d> bloch) {
  StateSpec s;
  s.kind = Kind::product_bloch;
  s.bloch = std::move(bloch);
  return s;
}

StateSpec StateSpec::explicit_spec(ComplexMatrix density) {
  StateSpec s;
  s.kind = Kind::explicit_density;
  s.density = std::move(density);
  return s;
}

Eigen::MatrixXd Network::ring_distances(int n_sites) {
  Eigen::MatrixXd d(n_sites, n_sites);
  for (int i = 0; i < n_sites; ++i)
    for (int j = 0; j < n_sites; ++j) {
      const int k = std::abs(i - j);
      d(i, j) = std::min(k, n_sites - k);
    }
  return d;
}

void Network::validate() const {
  if (n_sites < 1) throw std::invalid_argument("network needs at least one site");
  if (local_dim < 2) throw std::invalid_argument("local dimension must be >= 2");
  if (distances) {
    if (distances->rows() != n_sites || distances->cols() != n_sites)
      throw std::invalid_argument("distance table shape mismatch");
    if (!distances->isApprox(distances->transpose(), 1e-12))
      throw std::invalid_argument("distance table must be symmetric");
    if (distances->diagonal().cwiseAbs().maxCoeff() > 1e-12)
      throw std::invalid_argument("distance table must vanish on the diagonal");
  }
  switch (initial_state.kind) {
    case StateSpec::Kind::product_kets: {
      if (static_cast<int>(initial_state.kets.size()) != n_sites)
        throw std::invalid_argument("need one ket per site");
      for (const auto& k : initial_state.kets) {
        if (k.size() != local_dim) throw std::invalid_argument("ket dimension mismatch");
        if (std::abs(k.norm() - 1.0) > tol::ket_norm)
          throw std::invalid_argument("site ket is not normalized");
      }
      break;
    }
    case StateSpec::Kind::product_bloch: {
      if (local_dim != 2) throw std::invalid_argument("Bloch vectors describe qubits only");
      if (static_cast<int>(initial_state.bloch.size()) != n_sites)
        throw std::invalid_argument("need one Bloch vector per site");
      for (const auto& b : initial_state.bloch)
        if (std::abs(b.norm() - 1.0) > tol::ket_norm)
          throw std::invalid_argument("Bloch vector is not unit length");
      break;
    }
    case StateSpec::Kind::explicit_density: {
      const Eigen::Index dim = dim_pow(local_dim, n_sites);
      if (initial_state.density.rows() != dim || initial_state.density.cols() != dim)
        throw std::invalid_argument("explicit density matrix dimension mismatch");
      validate_density_operator(
          SupportedOperator(SiteSubset::full(n_sites), local_dim, initial_state.density));
      break;
    }
  }
}

SupportedOperator build_state(const Network& net) {
  net.validate();
  const SiteSubset all = SiteSubset::full(net.n_sites);
  switch (net.initial_state.kind) {
    case StateSpec::Kind::product_kets: {
      SupportedOperator rho = SupportedOperator::scalar(1.0, net.local_dim);
      for (int j = 0; j < net.n_sites; ++j) {
        const auto& k = net.initial_state.kets[j];
        ComplexMatrix proj = k * k.adjoint();
        rho = kron(rho, SupportedOperator(SiteSubset::single(j), net.local_dim, std::move(proj)));
      }
      return rho;
    }
    case StateSpec::Kind::product_bloch: {
      SupportedOperator rho = SupportedOperator::scalar(1.0, 2);
      for (int j = 0; j < net.n_sites; ++j) {
        const auto& b = net.initial_state.bloch[j];
        ComplexMatrix m(2, 2);
        m(0, 0) = 0.5 * (1.0 + b.z());
        m(1, 1) = 0.5 * (1.0 - b.z());
        m(0, 1) = 0.5 * Complex(b.x(), -b.y());
        m(1, 0) = 0.5 * Complex(b.x(), b.y());
        rho = kron(rho, SupportedOperator(SiteSubset::single(j), 2, std::move(m)));
      }
      return rho;
    }
    case StateSpec::Kind::explicit_density:
      return SupportedOperator(all, net.local_dim, net.initial_state.density);
  }
  throw std::logic_error("unreachable");
}

Eigen::Vector3d bloch_vector(const Eigen::VectorXcd& ket) {
  if (ket.size() != 2) throw std::invalid_argument("bloch_vector: qubit ket expected");
  const Complex a = ket(0), b = ket(1);
  Eigen::Vector3d v;
  v.x() = 2.0 * (std::conj(a) * b).real();
  v.y() = 2.0 * (std::conj(a) * b).imag();
  v.z() = std::norm(a) - std::norm(b);
  return v;
}

SupportedOperator noising(const SupportedOperator& rho, SiteSubset omega) {
  if (!omega.is_subset_of(rho.support()))
    throw std::invalid_argument("noising: sites outside the support");
  if (omega.empty()) return rho;
  const SiteSubset rest = rho.support().minus(omega);
  return kron(partial_trace(rho, rest),
              SupportedOperator::maximally_mixed(omega, rho.local_dim()));
}

double subset_distance(SiteSubset m, SiteSubset p, const Network& net) {
  if (!net.distances) throw std::invalid_argument("subset_distance: network has no geometry");
  if (m.empty() || p.empty())
    throw std::invalid_argument("subset_distance: empty subset");
  double best = std::numeric_limits<double>::infinity();
  for (int x : m.sites())
    for (int y : p.sites()) best = std::min(best, (*net.distances)(x, y));
  return best;
}

Bipartition Bipartition::canonical(SiteSubset block, SiteSubset universe) {
  if (!block.is_subset_of(universe))
    throw std::invalid_argument("bipartition block outside the universe");
  SiteSubset other = block.complement_in(universe);
  if (block.empty() || other.empty())
    throw std::invalid_argument("bipartition blocks must be non-empty");
  if (!block.contains(universe.lowest())) std::swap(block, other);
  return Bipartition{block, other};
}

std::vector<SiteSubset> enumerate_subsets(SiteSubset sites) {
  const std::uint32_t n = 1u << sites.count();
  std::vector<SiteSubset> out;
  out.reserve(n);
  for (std::uint32_t r = 0; r < n; ++r) out.push_back(SiteSubset::from_rank(r, sites));
  return out;
}

std::vector<Bipartition> enumerate_bipartitions(SiteSubset sites) {
  const int n = sites.count();
  std::vector<Bipartition> out;
  if (n < 2) return out;
  const SiteSubset anchor = SiteSubset::single(sites.lowest());
  const SiteSubset rest = sites.minus(anchor);
  const std::uint32_t limit = 1u << rest.count();
  out.reserve(limit - 1);
  // The block containing the lowest site ranges over proper subsets.
  for (std::uint32_t r = 0; r + 1 < limit; ++r) {
    const SiteSubset part1 = anchor | SiteSubset::from_rank(r, rest);
    out.push_back(Bipartition{part1, part1.complement_in(sites)});
  }
  return out;
}

std::vector<Pairing> enumerate_pairings(SiteSubset p, SiteSubset m) {
  std::vector<Pairing> out;
  for_each_pairing(p, m, [&](const Pairing& pr) { out.push_back(pr); });
  return out;
}

}  // namespace qiit
