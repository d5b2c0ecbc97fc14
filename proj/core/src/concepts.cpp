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

#include "qiit/concepts.hpp"

#include <limits>
#include <stdexcept>

namespace qiit {

MechanismPhi phi_over_pairings(const RepertoireSource& source, Direction dir,
                               SiteSubset purview, SiteSubset mechanism) {
  if (purview.empty() || mechanism.empty())
    throw std::invalid_argument("phi: purview and mechanism must be non-empty");

  const SupportedOperator& joint = source.get(dir, purview, mechanism);
  MechanismPhi result{dir, purview, mechanism, std::numeric_limits<double>::infinity(), {}};
  for_each_pairing(purview, mechanism, [&](const Pairing& pr) {
    const SupportedOperator product =
        kron(source.get(dir, pr.p1, pr.m1), source.get(dir, pr.p2, pr.m2));
    const double dist = trace_distance(joint, product);
    if (dist < result.value) {
      result.value = dist;
      result.minimizer = pr;
    }
  });
  return result;
}

MechanismPhi phi_mechanism(const Channel& ch, const SupportedOperator& psi, Direction dir,
                           SiteSubset purview, SiteSubset mechanism) {
  RepertoireTable table(ch, psi);
  return phi_over_pairings(table, dir, purview, mechanism);
}

namespace {

// Deterministic argmax: best value first, then smallest purview, then
// smallest mask among candidates within phi_epsilon of the maximum.
CorePurview select_core(const std::vector<std::pair<SiteSubset, double>>& candidates) {
  double best = 0.0;
  for (const auto& [p, v] : candidates) best = std::max(best, v);
  const SiteSubset* pick = nullptr;
  for (const auto& [p, v] : candidates) {
    if (v < best - tol::phi_epsilon) continue;
    if (!pick || p.count() < pick->count() ||
        (p.count() == pick->count() && p.bits() < pick->bits()))
      pick = &p;
  }
  return CorePurview{pick ? *pick : SiteSubset(), best};
}

}  // namespace

CorePurview core_purview_in(const RepertoireSource& source, Direction dir, SiteSubset mechanism,
                            SiteSubset domain) {
  if (mechanism.empty()) throw std::invalid_argument("core_purview: empty mechanism");
  std::vector<std::pair<SiteSubset, double>> candidates;
  for (const SiteSubset& p : enumerate_subsets(domain)) {
    if (p.empty()) continue;
    candidates.emplace_back(p, phi_over_pairings(source, dir, p, mechanism).value);
  }
  return select_core(candidates);
}

CorePurview core_purview(const Channel& ch, const SupportedOperator& psi, Direction dir,
                         SiteSubset mechanism) {
  RepertoireTable table(ch, psi);
  return core_purview_in(table, dir, mechanism, ch.sites());
}

double ConceptualStructure::total_phi() const {
  double sum = 0.0;
  for (const auto& [mask, c] : concepts) sum += c.phi;
  return sum;
}

PhiTable::PhiTable(SiteSubset sites) : sites_(sites) {
  const std::size_t n_subsets = std::size_t{1} << sites.count();
  values_.assign(2 * n_subsets * n_subsets, 0.0);
}

double PhiTable::at(Direction dir, SiteSubset p, SiteSubset m) const {
  const std::size_t n_subsets = std::size_t{1} << sites_.count();
  const std::size_t di = dir == Direction::effect ? 0 : 1;
  return values_[(di * n_subsets + p.rank_in(sites_)) * n_subsets + m.rank_in(sites_)];
}

double& PhiTable::at(Direction dir, SiteSubset p, SiteSubset m) {
  const std::size_t n_subsets = std::size_t{1} << sites_.count();
  const std::size_t di = dir == Direction::effect ? 0 : 1;
  return values_[(di * n_subsets + p.rank_in(sites_)) * n_subsets + m.rank_in(sites_)];
}

namespace {

// Assemble the concept for one mechanism from per-direction core data.
void append_concept(ConceptualStructure& cs, const RepertoireSource& source,
                    SiteSubset mechanism, const CorePurview& effect_core,
                    const CorePurview& cause_core) {
  const double phi = std::min(effect_core.phi, cause_core.phi);
  if (phi <= tol::phi_epsilon) return;
  Concept c{
      mechanism,
      DirectionalCore{effect_core.purview, effect_core.phi,
                      source.get(Direction::effect, effect_core.purview, mechanism)},
      DirectionalCore{cause_core.purview, cause_core.phi,
                      source.get(Direction::cause, cause_core.purview, mechanism)},
      phi};
  cs.concepts.emplace(mechanism.bits(), std::move(c));
}

}  // namespace

CsComputation build_cs_computation(const Channel& ch, const SupportedOperator& psi) {
  auto table = std::make_shared<RepertoireTable>(ch, psi);
  table->materialize();
  const SiteSubset sites = ch.sites();
  PhiTable phi_table(sites);

  ConceptualStructure cs{sites, ch.local_dim(), ch.descriptor(), {}};
  const auto subsets = enumerate_subsets(sites);
  for (const SiteSubset& m : subsets) {
    if (m.empty()) continue;
    CorePurview cores[2];
    for (Direction dir : {Direction::effect, Direction::cause}) {
      std::vector<std::pair<SiteSubset, double>> candidates;
      for (const SiteSubset& p : subsets) {
        if (p.empty()) continue;
        const double value = phi_over_pairings(*table, dir, p, m).value;
        phi_table.at(dir, p, m) = value;
        candidates.emplace_back(p, value);
      }
      cores[dir == Direction::effect ? 0 : 1] = select_core(candidates);
    }
    append_concept(cs, *table, m, cores[0], cores[1]);
  }
  return CsComputation{std::move(table), std::move(phi_table), std::move(cs)};
}

ConceptualStructure conceptual_structure(const Channel& ch, const SupportedOperator& psi) {
  return build_cs_computation(ch, psi).cs;
}

SupportedOperator lemma_repertoire(const RepertoireSource& source, const Bipartition& cut,
                                   Direction dir, SiteSubset purview, SiteSubset mechanism) {
  return kron(source.get(dir, purview & cut.part1, mechanism & cut.part1),
              source.get(dir, purview & cut.part2, mechanism & cut.part2));
}

ConceptualStructure partitioned_cs_via_lemma(const CsComputation& comp, const Bipartition& cut) {
  const SiteSubset sites = comp.cs.sites;
  if (cut.universe() != sites)
    throw std::invalid_argument("partitioned structure: cut does not cover the network");

  ConceptualStructure cs{sites, comp.cs.local_dim,
                         comp.cs.provenance + " cut " + cut.to_string(), {}};
  for (const SiteSubset& m : enumerate_subsets(sites)) {
    if (m.empty()) continue;
    // A straddling mechanism has zero phi on every purview.
    if (m.intersects(cut.part1) && m.intersects(cut.part2)) continue;
    const SiteSubset side = m.is_subset_of(cut.part1) ? cut.part1 : cut.part2;
    CorePurview cores[2];
    for (Direction dir : {Direction::effect, Direction::cause}) {
      // Purviews off-side or straddling carry zero phi; on-side purviews
      // keep their intact value.
      std::vector<std::pair<SiteSubset, double>> candidates;
      for (const SiteSubset& p : enumerate_subsets(side)) {
        if (p.empty()) continue;
        candidates.emplace_back(p, comp.phi_table.at(dir, p, m));
      }
      cores[dir == Direction::effect ? 0 : 1] = select_core(candidates);
    }
    append_concept(cs, *comp.table, m, cores[0], cores[1]);
  }
  return cs;
}

ConceptualStructure partitioned_cs_brute(const Channel& ch, const SupportedOperator& psi,
                                         const Bipartition& cut) {
  return conceptual_structure(partitioned_channel(ch, cut), psi);
}

double cs_distance(const ConceptualStructure& a, const ConceptualStructure& b) {
  if (a.sites != b.sites || a.local_dim != b.local_dim)
    throw std::invalid_argument("cs_distance: structures live on different networks");

  double total = 0.0;
  auto it_a = a.concepts.begin();
  auto it_b = b.concepts.begin();
  auto block = [&](const Concept* ca, const Concept* cb) {
    for (Direction dir : {Direction::effect, Direction::cause}) {
      const DirectionalCore* da = ca ? &ca->core(dir) : nullptr;
      const DirectionalCore* db = cb ? &cb->core(dir) : nullptr;
      SiteSubset joint;
      if (da) joint = joint | da->purview;
      if (db) joint = joint | db->purview;
      // Identity factors outside the joint support cancel in the norm.
      auto lift = [&](const DirectionalCore& c, double weight) {
        SupportedOperator op = c.state;
        const SiteSubset pad = joint.minus(c.purview);
        if (!pad.empty())
          op = kron(op, SupportedOperator::maximally_mixed(pad, a.local_dim));
        op.matrix() *= weight;
        return op;
      };
      SupportedOperator diff = da ? lift(*da, ca->phi)
                                  : SupportedOperator(joint, a.local_dim,
                                                      ComplexMatrix::Zero(
                                                          dim_pow(a.local_dim, joint.count()),
                                                          dim_pow(a.local_dim, joint.count())));
      if (db) diff.matrix() -= lift(*db, cb->phi).matrix();
      total += trace_norm(diff);
    }
  };
  while (it_a != a.concepts.end() || it_b != b.concepts.end()) {
    if (it_b == b.concepts.end() || (it_a != a.concepts.end() && it_a->first < it_b->first)) {
      block(&it_a->second, nullptr);
      ++it_a;
    } else if (it_a == a.concepts.end() || it_b->first < it_a->first) {
      block(nullptr, &it_b->second);
      ++it_b;
    } else {
      block(&it_a->second, &it_b->second);
      ++it_a;
      ++it_b;
    }
  }
  return 0.25 * total;
}

}  // namespace qiit
