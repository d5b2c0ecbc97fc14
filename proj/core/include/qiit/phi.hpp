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

#include <functional>

#include "qiit/concepts.hpp"

namespace qiit {

/// A closed system to analyse: a site set, its state, and its dynamics.
/// Subnetworks keep the original site labels.
struct System {
  SiteSubset sites;
  int local_dim = 2;
  SupportedOperator state;
  Channel channel;
};

System subnetwork(const System& sys, SiteSubset omega);

struct PartitionDistance {
  Bipartition partition;
  double distance = 0.0;
};

struct PhiResult {
  double phi = 0.0;           // minimum distance, clamped to 0 at phi_epsilon
  double min_distance = 0.0;  // raw minimum
  Bipartition mip;
  std::vector<PartitionDistance> per_partition;
  ConceptualStructure cs_full;
  double elapsed_seconds = 0.0;
  // Largest lemma-vs-brute structure distance seen; negative when the
  // cross-check was not requested.
  double cross_check_max_deviation = -1.0;
};

struct PhiOptions {
  int max_block_size = 0;  // restrict to cuts whose smaller block has <= k sites; 0 = all
  int workers = 1;
  bool cross_check = false;
};

/// Global integrated information: the minimum conceptual-structure distance
/// between the intact dynamics and its partition-factorized versions, over
/// all canonical bipartitions. Ties resolve to the smallest block, then the
/// smallest mask. Throws for networks of fewer than two sites.
PhiResult compute_phi(const System& sys, const PhiOptions& opts = {});

/// Minimization restricted to cuts whose smaller block has at most k sites.
/// Decreasing k can only increase the value.
PhiResult phi_k(const System& sys, int k, const PhiOptions& opts = {});

bool straddles(SiteSubset s, const Bipartition& cut);

/// Number of subsets intersecting both blocks: 2^n - 2^{n1} - 2^{n2} + 1.
std::size_t boundary_size(const Bipartition& cut);

struct PhiBounds {
  double upper = 0.0;  // total phi of the intact structure
  double lower = 0.0;  // half the phi of concepts whose mechanism straddles the MIP
};

/// Bound pair for a computed result. Throws logic_error if the sandwich
/// lower <= phi <= upper fails beyond phi_epsilon.
PhiBounds phi_bounds(const ConceptualStructure& cs, const PhiResult& result);

struct SubnetworkPhi {
  SiteSubset omega;
  double phi = 0.0;
  bool is_complex = false;
};

/// Phi of every reduced subnetwork with at least two sites. A subnetwork is
/// marked a complex when its phi is at least that of every evaluated
/// subnetwork overlapping it.
std::vector<SubnetworkPhi> find_complexes(const System& sys, const PhiOptions& opts = {});

/// Deterministic grid + trisection search for the time maximizing phi(t).
double argmax_phi_time(const std::function<double(double)>& phi_of_time, double t_lo,
                       double t_hi, int grid_points = 64, int refine_rounds = 3);

enum class TimePrescription { fixed_time, constant_action, argmax_time };

struct ScalingPoint {
  int n_sites = 0;
  double time = 0.0;
  double phi = 0.0;
};

struct ScalingFit {
  std::vector<ScalingPoint> points;    // the points actually fitted
  std::vector<int> excluded_sizes;     // sizes dropped because phi was zero
  bool vs_log_size = false;            // abscissa: n (false) or log2 n (true)
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

/// Least-squares fit of log2(phi) against the network size (or its log).
/// Zero-phi points are excluded and reported; fewer than three usable
/// points is an error.
ScalingFit fit_scaling(const std::vector<ScalingPoint>& points, bool vs_log_size);

}  // namespace qiit
