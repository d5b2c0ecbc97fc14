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

#include <optional>
#include <vector>

#include "qiit/operators.hpp"
#include "qiit/site_subset.hpp"

namespace qiit {

/// How the initial network state is described.
struct StateSpec {
  enum class Kind { product_kets, product_bloch, explicit_density };

  Kind kind = Kind::product_kets;
  std::vector<Eigen::VectorXcd> kets;   // one normalized ket per site
  std::vector<Eigen::Vector3d> bloch;   // unit Bloch vector per site (qubits)
  ComplexMatrix density;                // full network density matrix

  static StateSpec product_kets_spec(std::vector<Eigen::VectorXcd> kets);
  static StateSpec product_bloch_spec(std::vector<Eigen::Vector3d> bloch);
  static StateSpec explicit_spec(ComplexMatrix density);

  bool is_product() const { return kind != Kind::explicit_density; }
};

struct Network {
  int n_sites = 0;
  int local_dim = 2;
  StateSpec initial_state;
  // Pairwise graph-hop distances, when the network has a geometry.
  std::optional<Eigen::MatrixXd> distances;

  static Eigen::MatrixXd ring_distances(int n_sites);

  void validate() const;
};

/// Density operator on the full site set from the network's state spec.
SupportedOperator build_state(const Network& net);

/// Single-site Bloch vector of a qubit ket.
Eigen::Vector3d bloch_vector(const Eigen::VectorXcd& ket);

/// Replace the state on `omega` by the maximally mixed one, leaving the
/// complement's reduced state intact. Idempotent and unital.
SupportedOperator noising(const SupportedOperator& rho, SiteSubset omega);

/// min over x in m, y in p of the pairwise distance. Requires geometry.
double subset_distance(SiteSubset m, SiteSubset p, const Network& net);

/// An unordered two-block split of a site set. Canonical form: part1
/// contains the lowest site, so each split appears exactly once.
struct Bipartition {
  SiteSubset part1;
  SiteSubset part2;

  static Bipartition canonical(SiteSubset block, SiteSubset universe);
  SiteSubset universe() const { return part1 | part2; }
  std::string to_string() const { return part1.to_string() + "|" + part2.to_string(); }
};

/// All submasks of `sites`, ascending by mask (the empty set first).
std::vector<SiteSubset> enumerate_subsets(SiteSubset sites);

/// The 2^{n-1}-1 canonical bipartitions of `sites` (n = |sites| >= 2),
/// deterministic order.
std::vector<Bipartition> enumerate_bipartitions(SiteSubset sites);

/// A simultaneous split of a purview and a mechanism into two pairs
/// (p1, m1), (p2, m2). The trivial split {(0,0), (P, M)} is excluded.
struct Pairing {
  SiteSubset p1, m1;
  SiteSubset p2, m2;
};

/// Visit all 2^{|P|+|M|-1} - 1 non-trivial pairings exactly once. The first
/// pair is anchored: it holds the lowest site of P in its purview part (or,
/// when P is empty, the lowest site of M in its mechanism part).
template <typename F>
void for_each_pairing(SiteSubset p, SiteSubset m, F&& visit) {
  const bool anchor_in_p = !p.empty();
  const SiteSubset universe = anchor_in_p ? p : m;
  if (universe.empty()) return;
  const SiteSubset anchor = SiteSubset::single(universe.lowest());
  const SiteSubset p_free = p.minus(anchor_in_p ? anchor : SiteSubset());
  const SiteSubset m_free = m.minus(anchor_in_p ? SiteSubset() : anchor);

  const std::uint32_t np = 1u << p_free.count();
  const std::uint32_t nm = 1u << m_free.count();
  for (std::uint32_t rp = 0; rp < np; ++rp) {
    SiteSubset p1 = SiteSubset::from_rank(rp, p_free);
    if (anchor_in_p) p1 = p1 | anchor;
    for (std::uint32_t rm = 0; rm < nm; ++rm) {
      SiteSubset m1 = SiteSubset::from_rank(rm, m_free);
      if (!anchor_in_p) m1 = m1 | anchor;
      if (p1 == p && m1 == m) continue;  // trivial
      visit(Pairing{p1, m1, p.minus(p1), m.minus(m1)});
    }
  }
}

std::vector<Pairing> enumerate_pairings(SiteSubset p, SiteSubset m);

}  // namespace qiit
