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

#include <map>
#include <memory>
#include <string>

#include "qiit/repertoire.hpp"
#include "qiit/tolerances.hpp"

namespace qiit {

struct MechanismPhi {
  Direction direction;
  SiteSubset purview;
  SiteSubset mechanism;
  double value = 0.0;
  Pairing minimizer;
};

/// Integrated information of a mechanism over a purview: the minimum, over
/// all non-trivial simultaneous splits of both, of the trace distance
/// between the joint repertoire and the tensor product of the part
/// repertoires. Purview and mechanism must be non-empty.
MechanismPhi phi_over_pairings(const RepertoireSource& source, Direction dir,
                               SiteSubset purview, SiteSubset mechanism);

/// Convenience form computing repertoires on the fly.
MechanismPhi phi_mechanism(const Channel& ch, const SupportedOperator& psi, Direction dir,
                           SiteSubset purview, SiteSubset mechanism);

struct CorePurview {
  SiteSubset purview;
  double phi = 0.0;
};

/// argmax over non-empty purviews within `domain` of phi(P|M). Ties within
/// phi_epsilon resolve to the smallest purview, then the smallest mask.
CorePurview core_purview_in(const RepertoireSource& source, Direction dir, SiteSubset mechanism,
                            SiteSubset domain);

CorePurview core_purview(const Channel& ch, const SupportedOperator& psi, Direction dir,
                         SiteSubset mechanism);

/// One direction of a concept: the winning purview, its phi, and the
/// repertoire state on that purview. The global repertoire is this state
/// padded with the normalized identity on the purview's complement.
struct DirectionalCore {
  SiteSubset purview;
  double phi = 0.0;
  SupportedOperator state;
};

struct Concept {
  SiteSubset mechanism;
  DirectionalCore effect;
  DirectionalCore cause;
  double phi = 0.0;  // min of the two directional maxima

  const DirectionalCore& core(Direction dir) const {
    return dir == Direction::effect ? effect : cause;
  }
};

/// All concepts of one (channel, state) pair, keyed by mechanism mask. Only
/// mechanisms with phi above phi_epsilon appear.
struct ConceptualStructure {
  SiteSubset sites;
  int local_dim = 2;
  std::string provenance;
  std::map<std::uint32_t, Concept> concepts;

  double total_phi() const;  // the trace of the structure operator
};

/// Dense table of phi(P|M) for every direction and every non-empty purview
/// and mechanism, filled during the full structure build and reused by the
/// partitioned builds.
class PhiTable {
 public:
  explicit PhiTable(SiteSubset sites);
  double at(Direction dir, SiteSubset p, SiteSubset m) const;
  double& at(Direction dir, SiteSubset p, SiteSubset m);

 private:
  SiteSubset sites_;
  std::vector<double> values_;
};

/// Everything the partition search needs from one full-structure build:
/// the memoized repertoires, the phi table, and the structure itself.
struct CsComputation {
  std::shared_ptr<RepertoireTable> table;
  PhiTable phi_table;
  ConceptualStructure cs;
};

CsComputation build_cs_computation(const Channel& ch, const SupportedOperator& psi);

ConceptualStructure conceptual_structure(const Channel& ch, const SupportedOperator& psi);

/// Repertoire of the partition-factorized dynamics, assembled from the
/// intact table: the product of the two restrictions across the cut.
SupportedOperator lemma_repertoire(const RepertoireSource& source, const Bipartition& cut,
                                   Direction dir, SiteSubset purview, SiteSubset mechanism);

/// Conceptual structure of the partition-factorized dynamics, built from
/// the intact computation. Repertoires factor across the cut, so a purview
/// or mechanism straddling the cut carries exactly zero phi, blocks on one
/// side keep their intact phi, and opposite-side blocks carry none; the
/// core search therefore reduces to per-side lookups in the phi table.
ConceptualStructure partitioned_cs_via_lemma(const CsComputation& comp, const Bipartition& cut);

/// Reference path: materialize the partitioned channel and redo the whole
/// extraction from scratch.
ConceptualStructure partitioned_cs_brute(const Channel& ch, const SupportedOperator& psi,
                                         const Bipartition& cut);

/// (1/4) sum over mechanisms and directions of || phi_1 rho_1 - phi_2 rho_2 ||_1,
/// with global repertoires compared on the union of the two core purviews
/// (identity padding outside the union cancels in the trace norm). A
/// mechanism absent from one side contributes phi/4 per direction.
double cs_distance(const ConceptualStructure& a, const ConceptualStructure& b);

}  // namespace qiit
