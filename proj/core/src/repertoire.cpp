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

#include "qiit/repertoire.hpp"

#include <cmath>
#include <stdexcept>

#include "qiit/hamiltonians.hpp"

namespace qiit {

SupportedOperator repertoire(const Channel& ch, const SupportedOperator& psi, Direction dir,
                             SiteSubset purview, SiteSubset mechanism) {
  const SiteSubset sites = ch.sites();
  if (psi.support() != sites)
    throw std::invalid_argument("repertoire: state not on the channel's sites");
  if (!purview.is_subset_of(sites) || !mechanism.is_subset_of(sites))
    throw std::invalid_argument("repertoire: purview or mechanism outside the network");

  if (purview.empty()) return SupportedOperator::scalar(1.0, ch.local_dim());
  if (mechanism.empty()) {
    // Unconditioned case: unitality makes the image exactly maximally mixed.
    return SupportedOperator::maximally_mixed(purview, ch.local_dim());
  }

  const SupportedOperator noised = noising(psi, mechanism.complement_in(sites));
  const SupportedOperator evolved = ch.apply_direction(noised, dir);
  return partial_trace(evolved, purview);
}

double cause_effect_info(const Channel& ch, const SupportedOperator& psi, Direction dir,
                         SiteSubset purview, SiteSubset mechanism) {
  const SupportedOperator rep = repertoire(ch, psi, dir, purview, mechanism);
  return trace_distance(rep,
                        SupportedOperator::maximally_mixed(purview, ch.local_dim()));
}

double average_xi(const Channel& ch, const SupportedOperator& psi, Direction dir) {
  const auto subsets = enumerate_subsets(ch.sites());
  double sum = 0.0;
  for (const SiteSubset& p : subsets) {
    if (p.empty()) continue;
    for (const SiteSubset& m : subsets) {
      if (m.empty()) continue;
      sum += cause_effect_info(ch, psi, dir, p, m);
    }
  }
  const double pairs = std::pow(2.0, 2.0 * ch.sites().count());
  return sum / pairs;
}

RepertoireTable::RepertoireTable(Channel ch, SupportedOperator psi)
    : channel_(std::move(ch)), psi_(std::move(psi)) {
  if (psi_.support() != channel_.sites())
    throw std::invalid_argument("repertoire table: state not on the channel's sites");
  const std::size_t n_subsets = std::size_t{1} << channel_.sites().count();
  cache_.resize(2 * n_subsets * n_subsets);
}

std::size_t RepertoireTable::index(Direction dir, SiteSubset p, SiteSubset m) const {
  const SiteSubset sites = channel_.sites();
  const std::size_t n_subsets = std::size_t{1} << sites.count();
  const std::size_t di = dir == Direction::effect ? 0 : 1;
  return (di * n_subsets + p.rank_in(sites)) * n_subsets + m.rank_in(sites);
}

const SupportedOperator& RepertoireTable::get(Direction dir, SiteSubset p, SiteSubset m) const {
  auto& slot = cache_[index(dir, p, m)];
  if (!slot) slot = repertoire(channel_, psi_, dir, p, m);
  return *slot;
}

void RepertoireTable::materialize() {
  const auto subsets = enumerate_subsets(channel_.sites());
  for (Direction dir : {Direction::effect, Direction::cause})
    for (const SiteSubset& p : subsets)
      for (const SiteSubset& m : subsets) get(dir, p, m);
}

CorrelatorTable correlator_table(const Channel& ch, Direction dir, SiteSubset purview,
                                 SiteSubset mechanism) {
  if (ch.local_dim() != 2) throw std::invalid_argument("correlator table: qubits only");
  const int n = ch.sites().count();
  const auto p_sites = purview.sites();
  const auto m_sites = mechanism.sites();
  const Eigen::Index rows = dim_pow(4, static_cast<int>(p_sites.size()));
  const Eigen::Index cols = dim_pow(4, static_cast<int>(m_sites.size()));
  const double norm = 1.0 / static_cast<double>(dim_pow(2, n));

  // Little-endian: the lowest site carries the least significant base-4
  // digit of the string index.
  auto pauli_string = [&](const std::vector<int>& where, Eigen::Index code) {
    const Eigen::Index dim = dim_pow(2, n);
    ComplexMatrix full = ComplexMatrix::Identity(dim, dim);
    for (std::size_t i = 0; i < where.size(); ++i) {
      const int a = static_cast<int>(code % 4);
      code /= 4;
      if (a != 0) full = embed_single_site(pauli(a), where[i], n, 2) * full;
    }
    return SupportedOperator(ch.sites(), 2, std::move(full));
  };

  std::vector<SupportedOperator> probes;
  probes.reserve(rows);
  for (Eigen::Index alpha = 0; alpha < rows; ++alpha)
    probes.push_back(pauli_string(p_sites, alpha));

  CorrelatorTable table{dir, purview, mechanism, Eigen::MatrixXd(rows, cols)};
  for (Eigen::Index beta = 0; beta < cols; ++beta) {
    const SupportedOperator evolved = ch.apply_direction(pauli_string(m_sites, beta), dir);
    for (Eigen::Index alpha = 0; alpha < rows; ++alpha) {
      const Complex tr = (probes[alpha].matrix() * evolved.matrix()).trace();
      table.g(alpha, beta) = norm * tr.real();
    }
  }
  return table;
}

double purity_via_correlators(const CorrelatorTable& table,
                              const std::vector<Eigen::Vector3d>& mechanism_bloch) {
  const auto m_sites = table.mechanism.sites();
  if (mechanism_bloch.size() != m_sites.size())
    throw std::invalid_argument("purity_via_correlators: one Bloch vector per mechanism site");
  const Eigen::Index cols = table.g.cols();
  Eigen::VectorXd lambda(cols);
  for (Eigen::Index beta = 0; beta < cols; ++beta) {
    double prod = 1.0;
    Eigen::Index code = beta;
    for (std::size_t i = 0; i < m_sites.size(); ++i) {
      const int a = static_cast<int>(code % 4);
      code /= 4;
      if (a != 0) prod *= mechanism_bloch[i](a - 1);
    }
    lambda(beta) = prod;
  }
  const Eigen::VectorXd image = table.g * lambda;
  return image.squaredNorm() / static_cast<double>(dim_pow(2, table.purview.count()));
}

double haar_average_purity(int n_sites, int d, int purview_size, int mechanism_size) {
  if (purview_size < 0 || purview_size > n_sites || mechanism_size < 0 ||
      mechanism_size > n_sites)
    throw std::invalid_argument("haar_average_purity: sizes out of range");
  const double dn = std::pow(double(d), n_sites);
  const double dm = std::pow(double(d), mechanism_size);
  const double dp = std::pow(double(d), purview_size);
  const double dpc = std::pow(double(d), n_sites - purview_size);
  double sum = 0.0;
  for (double alpha : {1.0, -1.0})
    sum += (dn + alpha * dm) / (dn + alpha) * (1.0 / dp + alpha / dpc);
  return 0.5 * sum;
}

std::vector<LrScanPoint> lr_decay_scan(const Channel& ch, const SupportedOperator& psi,
                                       const Network& net, Direction dir,
                                       SiteSubset mechanism) {
  if (!net.distances) throw std::invalid_argument("lr_decay_scan: network has no geometry");
  if (mechanism.empty()) throw std::invalid_argument("lr_decay_scan: empty mechanism");
  std::vector<LrScanPoint> out;
  for (int site = 0; site < net.n_sites; ++site) {
    const SiteSubset p = SiteSubset::single(site);
    const double dist = subset_distance(mechanism, p, net);
    out.push_back({site, dist, cause_effect_info(ch, psi, dir, p, mechanism)});
  }
  return out;
}

}  // namespace qiit
