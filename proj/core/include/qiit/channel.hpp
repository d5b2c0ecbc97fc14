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
#include <memory>
#include <string>

#include "qiit/network.hpp"
#include "qiit/operators.hpp"

namespace qiit {

/// Which way a mechanism constrains its purview: forward in time (effect)
/// or backward (cause, via the Hilbert-Schmidt dual of the dynamics).
enum class Direction { effect, cause };

inline const char* to_string(Direction d) { return d == Direction::effect ? "e" : "c"; }

/// A unital trace-preserving CP map on the operators of a fixed site set,
/// bundled with its Hilbert-Schmidt dual. Immutable value type; applying a
/// channel is pure.
class Channel {
 public:
  SupportedOperator apply(const SupportedOperator& x) const { return eval(x, dualed_); }
  SupportedOperator apply_dual(const SupportedOperator& x) const { return eval(x, !dualed_); }
  SupportedOperator apply_direction(const SupportedOperator& x, Direction dir) const {
    return dir == Direction::effect ? apply(x) : apply_dual(x);
  }

  /// Same map with forward and dual evaluators exchanged.
  Channel dual() const;

  SiteSubset sites() const;
  int local_dim() const;
  std::string descriptor() const;

  /// Conjugation X -> U X U^dag. Throws if `u` is not unitary.
  static Channel unitary(const ComplexMatrix& u, SiteSubset sites, int local_dim,
                         std::string descriptor);
  static Channel identity(SiteSubset sites, int local_dim);

  /// Build from raw evaluators; `eval(x, dual)` must be linear in x for
  /// both values of `dual` and the two evaluators must be HS-adjoint.
  static Channel from_evaluators(
      SiteSubset sites, int local_dim, std::string descriptor,
      std::function<SupportedOperator(const SupportedOperator&, bool)> eval);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  bool dualed_ = false;

  SupportedOperator eval(const SupportedOperator& x, bool dual) const;
};

/// X -> Tr_{rest} ch(X ox 1/d^{|rest|}), a unital channel on the subnetwork
/// `omega`. Generally not unitary even when `ch` is. Its dual is the
/// reduction of the dual.
Channel reduced_channel(const Channel& ch, SiteSubset omega);

/// The tensor product of the two reduced channels across a bipartition,
/// acting on the full site set.
Channel partitioned_channel(const Channel& ch, const Bipartition& cut);

/// Apply a channel that lives on a subset of x's support, acting as the
/// identity elsewhere. Linear in x; x need not be Hermitian.
SupportedOperator apply_on_subsystem(const Channel& sub, const SupportedOperator& x, bool dual);

}  // namespace qiit
