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

#include <memory>
#include <optional>
#include <vector>

#include "qiit/channel.hpp"
#include "qiit/network.hpp"

namespace qiit {

struct Repertoire {
  Direction direction;
  SiteSubset purview;
  SiteSubset mechanism;
  SupportedOperator state;
};

/// The state the mechanism imposes on the purview: noise the mechanism's
/// complement, evolve forward (effect) or by the dual (cause), trace down to
/// the purview. An empty mechanism yields the maximally mixed reference
/// exactly; an empty purview yields the scalar 1.
SupportedOperator repertoire(const Channel& ch, const SupportedOperator& psi, Direction dir,
                             SiteSubset purview, SiteSubset mechanism);

/// Trace distance between the conditioned repertoire and the maximally
/// mixed (unconditioned) one.
double cause_effect_info(const Channel& ch, const SupportedOperator& psi, Direction dir,
                         SiteSubset purview, SiteSubset mechanism);

/// Uniform average of the cause/effect information over all 2^{2n}
/// purview/mechanism pairs (empty sets contribute zero).
double average_xi(const Channel& ch, const SupportedOperator& psi,
                  Direction dir = Direction::effect);

/// Read-mostly access to repertoires of one (channel, state) pair.
class RepertoireSource {
 public:
  virtual ~RepertoireSource() = default;
  virtual const SupportedOperator& get(Direction dir, SiteSubset purview,
                                       SiteSubset mechanism) const = 0;
  virtual SiteSubset sites() const = 0;
  virtual int local_dim() const = 0;
};

/// Memoized table of every repertoire of a (channel, state) pair.
class RepertoireTable final : public RepertoireSource {
 public:
  RepertoireTable(Channel ch, SupportedOperator psi);

  const SupportedOperator& get(Direction dir, SiteSubset purview,
                               SiteSubset mechanism) const override;
  SiteSubset sites() const override { return channel_.sites(); }
  int local_dim() const override { return channel_.local_dim(); }

  /// Compute every entry now; afterwards get() is read-only and the table
  /// can be shared across threads.
  void materialize();

  const Channel& channel() const { return channel_; }
  const SupportedOperator& state() const { return psi_; }

 private:
  Channel channel_;
  SupportedOperator psi_;
  mutable std::vector<std::optional<SupportedOperator>> cache_;

  std::size_t index(Direction dir, SiteSubset p, SiteSubset m) const;
};

/// Infinite-temperature spin correlators of the dynamics between Pauli
/// strings on the mechanism and on the purview. Qubits only. String indices
/// are base-4, little-endian over ascending sites, 0 = identity.
struct CorrelatorTable {
  Direction direction;
  SiteSubset purview;
  SiteSubset mechanism;
  Eigen::MatrixXd g;  // 4^{|P|} rows, 4^{|M|} cols
};

CorrelatorTable correlator_table(const Channel& ch, Direction dir, SiteSubset purview,
                                 SiteSubset mechanism);

/// Repertoire purity from the correlator table and the Bloch vectors of the
/// mechanism sites (ascending site order), for product-pure qubit states.
double purity_via_correlators(const CorrelatorTable& table,
                              const std::vector<Eigen::Vector3d>& mechanism_bloch);

/// Closed-form average repertoire purity over Haar-random unitaries, for
/// pure factorized states. Direction independent.
double haar_average_purity(int n_sites, int local_dim, int purview_size, int mechanism_size);

/// One row of a locality scan: a single-site purview, its graph distance
/// from the mechanism, and the cause/effect information there.
struct LrScanPoint {
  int site;
  double distance;
  double xi;
};

/// xi over all single-site purviews of a fixed mechanism, tagged by graph
/// distance. Requires the network to carry a geometry. Asserts nothing; the
/// decay expectations live with the experiments.
std::vector<LrScanPoint> lr_decay_scan(const Channel& ch, const SupportedOperator& psi,
                                       const Network& net, Direction dir, SiteSubset mechanism);

}  // namespace qiit
