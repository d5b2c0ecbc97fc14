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

#include "qiit/channel.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace qiit {

struct Channel::Impl {
  SiteSubset sites;
  int local_dim = 2;
  std::string descriptor;
  std::function<SupportedOperator(const SupportedOperator&, bool)> eval;
};

SupportedOperator Channel::eval(const SupportedOperator& x, bool dual) const {
  if (x.support() != impl_->sites || x.local_dim() != impl_->local_dim)
    throw std::invalid_argument("channel applied to an operator on the wrong sites");
  return impl_->eval(x, dual);
}

Channel Channel::dual() const {
  Channel c = *this;
  c.dualed_ = !dualed_;
  return c;
}

SiteSubset Channel::sites() const { return impl_->sites; }
int Channel::local_dim() const { return impl_->local_dim; }

std::string Channel::descriptor() const {
  return dualed_ ? "dual(" + impl_->descriptor + ")" : impl_->descriptor;
}

Channel Channel::from_evaluators(
    SiteSubset sites, int local_dim, std::string descriptor,
    std::function<SupportedOperator(const SupportedOperator&, bool)> eval) {
  Channel c;
  auto impl = std::make_shared<Impl>();
  impl->sites = sites;
  impl->local_dim = local_dim;
  impl->descriptor = std::move(descriptor);
  impl->eval = std::move(eval);
  c.impl_ = std::move(impl);
  return c;
}

Channel Channel::unitary(const ComplexMatrix& u, SiteSubset sites, int local_dim,
                         std::string descriptor) {
  const Eigen::Index dim = dim_pow(local_dim, sites.count());
  if (u.rows() != dim || u.cols() != dim)
    throw std::invalid_argument("unitary dimension inconsistent with the site set");
  const double dev = (u * u.adjoint() - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (dev > tol::unitary) throw std::invalid_argument("matrix is not unitary");
  ComplexMatrix mat = u;
  return from_evaluators(
      sites, local_dim, std::move(descriptor),
      [mat, sites, local_dim](const SupportedOperator& x, bool dual) {
        ComplexMatrix out = dual ? ComplexMatrix(mat.adjoint() * x.matrix() * mat)
                                 : ComplexMatrix(mat * x.matrix() * mat.adjoint());
        return SupportedOperator(sites, local_dim, std::move(out));
      });
}

Channel Channel::identity(SiteSubset sites, int local_dim) {
  return from_evaluators(sites, local_dim, "identity",
                         [](const SupportedOperator& x, bool) { return x; });
}

Channel reduced_channel(const Channel& ch, SiteSubset omega) {
  if (omega.empty()) throw std::invalid_argument("reduced_channel: empty subnetwork");
  if (!omega.is_subset_of(ch.sites()))
    throw std::invalid_argument("reduced_channel: sites outside the channel");
  if (omega == ch.sites()) return ch;
  const SiteSubset rest = ch.sites().minus(omega);
  const int d = ch.local_dim();
  Channel parent = ch;
  return Channel::from_evaluators(
      omega, d, "reduced(" + ch.descriptor() + ", " + omega.to_string() + ")",
      [parent, omega, rest, d](const SupportedOperator& x, bool dual) {
        const SupportedOperator embedded =
            kron(x, SupportedOperator::maximally_mixed(rest, d));
        const SupportedOperator y = dual ? parent.apply_dual(embedded) : parent.apply(embedded);
        return partial_trace(y, omega);
      });
}

Channel partitioned_channel(const Channel& ch, const Bipartition& cut) {
  if (cut.universe() != ch.sites())
    throw std::invalid_argument("partitioned_channel: bipartition does not cover the channel");
  Channel c1 = reduced_channel(ch, cut.part1);
  Channel c2 = reduced_channel(ch, cut.part2);
  return Channel::from_evaluators(
      ch.sites(), ch.local_dim(),
      "partitioned(" + ch.descriptor() + ", " + cut.to_string() + ")",
      [c1, c2](const SupportedOperator& x, bool dual) {
        return apply_on_subsystem(c2, apply_on_subsystem(c1, x, dual), dual);
      });
}

namespace {

// Offsets contributed to a full index by the digits of `part`, indexed by
// the packed part index (lowest site = most significant digit).
std::vector<Eigen::Index> part_offsets(SiteSubset universe, SiteSubset part, int d) {
  const auto u_sites = universe.sites();
  const int k = static_cast<int>(u_sites.size());
  std::vector<Eigen::Index> strides(k);
  Eigen::Index s = 1;
  for (int i = k - 1; i >= 0; --i) {
    strides[i] = s;
    s *= d;
  }
  std::vector<Eigen::Index> part_strides;
  for (int i = 0; i < k; ++i)
    if (part.contains(u_sites[i])) part_strides.push_back(strides[i]);
  const Eigen::Index dim = dim_pow(d, static_cast<int>(part_strides.size()));
  std::vector<Eigen::Index> offs(dim, 0);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    Eigen::Index rest = idx, off = 0;
    for (int i = static_cast<int>(part_strides.size()) - 1; i >= 0; --i) {
      off += (rest % d) * part_strides[i];
      rest /= d;
    }
    offs[idx] = off;
  }
  return offs;
}

}  // namespace

SupportedOperator apply_on_subsystem(const Channel& sub, const SupportedOperator& x, bool dual) {
  if (!sub.sites().is_subset_of(x.support()))
    throw std::invalid_argument("apply_on_subsystem: channel sites outside the operator");
  if (sub.sites() == x.support()) return dual ? sub.apply_dual(x) : sub.apply(x);

  const int d = x.local_dim();
  const SiteSubset rest = x.support().minus(sub.sites());
  const auto offs_sub = part_offsets(x.support(), sub.sites(), d);
  const auto offs_rest = part_offsets(x.support(), rest, d);
  const Eigen::Index ds = static_cast<Eigen::Index>(offs_sub.size());

  ComplexMatrix out(x.dim(), x.dim());
  ComplexMatrix slice(ds, ds);
  for (Eigen::Index t = 0; t < static_cast<Eigen::Index>(offs_rest.size()); ++t)
    for (Eigen::Index u = 0; u < static_cast<Eigen::Index>(offs_rest.size()); ++u) {
      for (Eigen::Index a = 0; a < ds; ++a)
        for (Eigen::Index b = 0; b < ds; ++b)
          slice(a, b) = x.matrix()(offs_sub[a] + offs_rest[t], offs_sub[b] + offs_rest[u]);
      SupportedOperator op(sub.sites(), d, slice);
      const SupportedOperator mapped = dual ? sub.apply_dual(op) : sub.apply(op);
      for (Eigen::Index a = 0; a < ds; ++a)
        for (Eigen::Index b = 0; b < ds; ++b)
          out(offs_sub[a] + offs_rest[t], offs_sub[b] + offs_rest[u]) = mapped.matrix()(a, b);
    }
  return SupportedOperator(x.support(), d, std::move(out));
}

}  // namespace qiit
