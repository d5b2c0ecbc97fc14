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

#include "qiit/phi.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <future>
#include <stdexcept>

namespace qiit {

System subnetwork(const System& sys, SiteSubset omega) {
  if (!omega.is_subset_of(sys.sites) || omega.empty())
    throw std::invalid_argument("subnetwork: sites outside the system");
  return System{omega, sys.local_dim, partial_trace(sys.state, omega),
                reduced_channel(sys.channel, omega)};
}

bool straddles(SiteSubset s, const Bipartition& cut) {
  return s.intersects(cut.part1) && s.intersects(cut.part2);
}

std::size_t boundary_size(const Bipartition& cut) {
  const int n = cut.universe().count();
  return (std::size_t{1} << n) - (std::size_t{1} << cut.part1.count()) -
         (std::size_t{1} << cut.part2.count()) + 1;
}

PhiResult compute_phi(const System& sys, const PhiOptions& opts) {
  if (sys.sites.count() < 2)
    throw std::invalid_argument("phi undefined: no bipartitions of a single site");

  const auto t0 = std::chrono::steady_clock::now();
  CsComputation comp = build_cs_computation(sys.channel, sys.state);

  std::vector<Bipartition> cuts;
  for (const Bipartition& cut : enumerate_bipartitions(sys.sites)) {
    const int small = std::min(cut.part1.count(), cut.part2.count());
    if (opts.max_block_size > 0 && small > opts.max_block_size) continue;
    cuts.push_back(cut);
  }
  if (cuts.empty()) throw std::invalid_argument("phi: no admissible bipartitions");

  std::vector<double> distances(cuts.size());
  std::vector<double> deviations(cuts.size(), -1.0);
  auto evaluate = [&](std::size_t i) {
    const ConceptualStructure cs_cut = partitioned_cs_via_lemma(comp, cuts[i]);
    distances[i] = cs_distance(comp.cs, cs_cut);
    if (opts.cross_check) {
      const ConceptualStructure cs_ref = partitioned_cs_brute(sys.channel, sys.state, cuts[i]);
      deviations[i] = cs_distance(cs_cut, cs_ref);
    }
  };
  const int workers = std::max(1, opts.workers);
  if (workers == 1 || cuts.size() < 2) {
    for (std::size_t i = 0; i < cuts.size(); ++i) evaluate(i);
  } else {
    // Fixed slot per partition keeps the reduction independent of scheduling.
    std::vector<std::future<void>> jobs;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i = next.fetch_add(1); i < cuts.size(); i = next.fetch_add(1))
          evaluate(i);
      }));
    for (auto& j : jobs) j.get();
  }

  PhiResult result;
  result.cs_full = std::move(comp.cs);
  result.per_partition.reserve(cuts.size());
  double min_distance = distances[0];
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    result.per_partition.push_back({cuts[i], distances[i]});
    if (opts.cross_check)
      result.cross_check_max_deviation =
          std::max(result.cross_check_max_deviation, deviations[i]);
    min_distance = std::min(min_distance, distances[i]);
  }
  // Among near-minimal cuts, report the one with the smaller block, then
  // the smaller mask.
  std::size_t best = cuts.size();
  const auto key = [](const Bipartition& c) {
    return std::pair<int, std::uint32_t>{std::min(c.part1.count(), c.part2.count()),
                                         c.part1.bits()};
  };
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (distances[i] > min_distance + tol::phi_epsilon) continue;
    if (best == cuts.size() || key(cuts[i]) < key(cuts[best])) best = i;
  }
  result.min_distance = min_distance;
  result.mip = cuts[best];
  result.phi = result.min_distance <= tol::phi_epsilon ? 0.0 : result.min_distance;
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

PhiResult phi_k(const System& sys, int k, const PhiOptions& opts) {
  if (k < 1 || k > sys.sites.count()) throw std::invalid_argument("phi_k: k out of range");
  PhiOptions o = opts;
  o.max_block_size = k;
  return compute_phi(sys, o);
}

PhiBounds phi_bounds(const ConceptualStructure& cs, const PhiResult& result) {
  PhiBounds bounds;
  bounds.upper = cs.total_phi();
  for (const auto& [mask, concept_entry] : cs.concepts)
    if (straddles(concept_entry.mechanism, result.mip)) bounds.lower += 0.5 * concept_entry.phi;
  if (bounds.lower > result.min_distance + tol::phi_epsilon ||
      result.min_distance > bounds.upper + tol::phi_epsilon)
    throw std::logic_error("phi bound sandwich violated");
  return bounds;
}

std::vector<SubnetworkPhi> find_complexes(const System& sys, const PhiOptions& opts) {
  std::vector<SubnetworkPhi> out;
  for (const SiteSubset& omega : enumerate_subsets(sys.sites)) {
    if (omega.count() < 2) continue;
    const System sub = omega == sys.sites ? sys : subnetwork(sys, omega);
    out.push_back({omega, compute_phi(sub, opts).phi, false});
  }
  for (auto& candidate : out) {
    candidate.is_complex = true;
    for (const auto& other : out) {
      if (!other.omega.intersects(candidate.omega)) continue;
      if (other.phi > candidate.phi + tol::phi_epsilon) {
        candidate.is_complex = false;
        break;
      }
    }
  }
  return out;
}

double argmax_phi_time(const std::function<double(double)>& phi_of_time, double t_lo,
                       double t_hi, int grid_points, int refine_rounds) {
  if (grid_points < 3) throw std::invalid_argument("argmax_phi_time: grid too small");
  double best_t = t_lo;
  double best_v = -1.0;
  std::vector<double> ts(grid_points);
  for (int i = 0; i < grid_points; ++i)
    ts[i] = t_lo + (t_hi - t_lo) * i / (grid_points - 1);
  int best_i = 0;
  for (int i = 0; i < grid_points; ++i) {
    const double v = phi_of_time(ts[i]);
    if (v > best_v) {
      best_v = v;
      best_t = ts[i];
      best_i = i;
    }
  }
  double lo = ts[std::max(0, best_i - 1)];
  double hi = ts[std::min(grid_points - 1, best_i + 1)];
  for (int round = 0; round < refine_rounds; ++round) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = lo + 2.0 * (hi - lo) / 3.0;
    const double v1 = phi_of_time(m1);
    const double v2 = phi_of_time(m2);
    if (v1 > best_v) {
      best_v = v1;
      best_t = m1;
    }
    if (v2 > best_v) {
      best_v = v2;
      best_t = m2;
    }
    if (v1 >= v2)
      hi = m2;
    else
      lo = m1;
  }
  return best_t;
}

ScalingFit fit_scaling(const std::vector<ScalingPoint>& points, bool vs_log_size) {
  ScalingFit fit;
  fit.vs_log_size = vs_log_size;
  for (const auto& p : points) {
    if (p.phi <= 0.0) {
      fit.excluded_sizes.push_back(p.n_sites);
      continue;
    }
    fit.points.push_back(p);
  }
  if (fit.points.size() < 3)
    throw std::invalid_argument("fit requires >= 3 sizes with non-zero phi");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(fit.points.size());
  auto abscissa = [&](const ScalingPoint& p) {
    return vs_log_size ? std::log2(double(p.n_sites)) : double(p.n_sites);
  };
  for (const auto& p : fit.points) {
    const double x = abscissa(p);
    const double y = std::log2(p.phi);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  for (const auto& p : fit.points) {
    const double r = std::abs(std::log2(p.phi) - (fit.slope * abscissa(p) + fit.intercept));
    fit.max_residual = std::max(fit.max_residual, r);
  }
  return fit;
}

}  // namespace qiit
