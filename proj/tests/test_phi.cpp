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

#include <doctest.h>

#include <cmath>

#include "qiit/hamiltonians.hpp"
#include "qiit/phi.hpp"
#include "qiit/random.hpp"

using namespace qiit;

namespace {

System product_system(int n, const Eigen::VectorXcd& ket, Channel ch) {
  Network net;
  net.n_sites = n;
  net.local_dim = static_cast<int>(ket.size());
  net.initial_state = StateSpec::product_kets_spec(std::vector<Eigen::VectorXcd>(n, ket));
  return System{SiteSubset::full(n), net.local_dim, build_state(net), std::move(ch)};
}

Eigen::VectorXcd ket_zero() {
  Eigen::VectorXcd k(2);
  k << 1, 0;
  return k;
}

Eigen::VectorXcd ket_plus() {
  Eigen::VectorXcd k(2);
  k << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return k;
}

System swap_system() {
  return product_system(2, ket_zero(),
                        Channel::unitary(swap_gate(2), SiteSubset::full(2), 2, "swap"));
}

System random_gue_system(int n, std::uint64_t seed, double t = 0.7) {
  Network net;
  net.n_sites = n;
  net.local_dim = 2;
  net.initial_state = random_product_state(n, 2, seed);
  const SiteSubset all = SiteSubset::full(n);
  return System{all, 2, build_state(net),
                Channel::unitary(herm_expm(sample_gue(dim_pow(2, n), seed + 101), t), all, 2,
                                 "gue-evolved")};
}

}  // namespace

TEST_SUITE("phi") {

TEST_CASE("the swap integrates to one half across its only cut") {
  const PhiResult r = compute_phi(swap_system());
  CHECK(r.phi == doctest::Approx(0.5));
  CHECK(r.per_partition.size() == 1);
  CHECK(r.mip.part1 == SiteSubset::single(0));
  CHECK(r.elapsed_seconds < 1.0);
}

TEST_CASE("identity dynamics on a product state is dis-integrated") {
  const System sys = product_system(3, ket_plus(), Channel::identity(SiteSubset::full(3), 2));
  CHECK(compute_phi(sys).phi == 0.0);
}

TEST_CASE("single-site networks have no bipartitions") {
  const System sys = product_system(1, ket_zero(), Channel::identity(SiteSubset::full(1), 2));
  CHECK_THROWS_AS(compute_phi(sys), std::invalid_argument);
}

TEST_CASE("a maximally entangled state raises integration under identity dynamics") {
  ComplexMatrix bell = ComplexMatrix::Zero(4, 4);
  for (int a : {0, 3})
    for (int b : {0, 3}) bell(a, b) = 0.5;
  const SiteSubset all = SiteSubset::full(2);
  const System sys{all, 2, SupportedOperator(all, 2, bell), Channel::identity(all, 2)};
  const PhiResult r = compute_phi(sys);
  // The factorized cut destroys the one global concept entirely, so the
  // distance equals half its total weight. The brute-force partitioned
  // channel is the identity again and sees no change; the factorized
  // repertoire route is what the partition search uses.
  REQUIRE(r.cs_full.concepts.size() == 1);
  CHECK(r.cs_full.total_phi() == doctest::Approx(0.75));
  CHECK(r.phi == doctest::Approx(0.375));
  const CsComputation comp = build_cs_computation(sys.channel, sys.state);
  const auto cut = Bipartition::canonical(SiteSubset::single(0), all);
  CHECK(partitioned_cs_via_lemma(comp, cut).concepts.empty());
  const auto brute = partitioned_cs_brute(sys.channel, sys.state, cut);
  CHECK(cs_distance(r.cs_full, brute) == doctest::Approx(0.0));
}

TEST_CASE("disjoint transpositions are dis-integrated, a single cycle is not") {
  const SiteSubset all = SiteSubset::full(4);
  const System two_pairs = product_system(
      4, ket_zero(),
      Channel::unitary(permutation_unitary({1, 0, 3, 2}, 2), all, 2, "two 2-cycles"));
  CHECK(compute_phi(two_pairs).phi == 0.0);

  const System cycle = product_system(
      4, ket_zero(), Channel::unitary(permutation_unitary({1, 2, 3, 0}, 2), all, 2, "4-cycle"));
  const PhiResult r = compute_phi(cycle);
  CHECK(r.phi == doctest::Approx(0.75));
  CHECK(r.cs_full.concepts.size() == 4);
  for (const auto& [mask, c] : r.cs_full.concepts) CHECK(c.phi == doctest::Approx(0.5));

  CHECK(compute_phi(swap_system()).phi == doctest::Approx(0.5));
}

TEST_CASE("restricting the cut size can only raise the minimum") {
  const System sys = random_gue_system(4, 42);
  const PhiResult full = compute_phi(sys);
  double previous = -1.0;
  for (int k = sys.sites.count() / 2; k >= 1; --k) {
    const PhiResult restricted = phi_k(sys, k);
    CHECK(restricted.phi >= full.phi - 1e-12);
    if (previous >= 0.0) CHECK(restricted.phi >= previous - 1e-12);
    previous = restricted.phi;
  }
  // Exhausting the canonical cuts reproduces the unrestricted search.
  CHECK(phi_k(sys, sys.sites.count() / 2).phi == doctest::Approx(full.phi));
  CHECK(phi_k(swap_system(), 1).phi == doctest::Approx(0.5));
}

TEST_CASE("bound sandwich holds and is tight for the swap") {
  const PhiResult r = compute_phi(swap_system());
  const PhiBounds b = phi_bounds(r.cs_full, r);
  CHECK(b.upper == doctest::Approx(1.0));
  CHECK(b.lower <= r.phi + 1e-12);
  CHECK(r.phi <= b.upper + 1e-12);
}

TEST_CASE("bound sandwich holds on random instances") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const System sys = random_gue_system(3, 2024 + seed);
    const PhiResult r = compute_phi(sys);
    CHECK_NOTHROW(phi_bounds(r.cs_full, r));
  }
}

TEST_CASE("a single cycle meets the boundary-concept count") {
  const SiteSubset all = SiteSubset::full(4);
  const System cycle = product_system(
      4, ket_zero(), Channel::unitary(permutation_unitary({1, 2, 3, 0}, 2), all, 2, "4-cycle"));
  const PhiResult r = compute_phi(cycle);
  // Three of the four single-site concepts lose a core across the reported
  // cut; the minimum equals 3/2 times the per-site weight.
  CHECK(r.phi == doctest::Approx(1.5 * 0.5));
}

TEST_CASE("boundary size formula is a counting identity") {
  for (int n : {3, 4, 5, 6})
    for (const Bipartition& cut : enumerate_bipartitions(SiteSubset::full(n))) {
      std::size_t count = 0;
      for (const SiteSubset& s : enumerate_subsets(SiteSubset::full(n)))
        if (straddles(s, cut)) ++count;
      CHECK(count == boundary_size(cut));
    }
}

TEST_CASE("global-phase dynamics obeys its boundary lower bound") {
  for (const double t : {0.3, M_PI_4, 1.2}) {
    const System sys = product_system(
        3, ket_plus(),
        Channel::unitary(herm_expm(z_global(3), t), SiteSubset::full(3), 2, "z"));
    const PhiResult r = compute_phi(sys);
    const PhiBounds b = phi_bounds(r.cs_full, r);
    CHECK(r.phi >= b.lower - 1e-12);
    if (std::abs(t - M_PI_4) < 1e-9) {
      // At the midpoint every straddling mechanism carries at least 1/2.
      double phi0 = 1.0;
      for (const auto& [mask, c] : r.cs_full.concepts)
        if (straddles(c.mechanism, r.mip)) phi0 = std::min(phi0, c.phi);
      CHECK(phi0 >= 0.5 - 1e-9);
      CHECK(b.lower >= 0.5 * static_cast<double>(boundary_size(r.mip)) * phi0 - 1e-9);
    }
  }
}

TEST_CASE("two disjoint transposition pairs are each a complex") {
  const SiteSubset all = SiteSubset::full(4);
  const System sys = product_system(
      4, ket_zero(),
      Channel::unitary(permutation_unitary({1, 0, 3, 2}, 2), all, 2, "two 2-cycles"));
  const auto list = find_complexes(sys);
  bool pair01 = false, pair23 = false;
  for (const auto& item : list) {
    if (item.omega == SiteSubset::of({0, 1})) {
      pair01 = item.is_complex;
      CHECK(item.phi == doctest::Approx(0.5));
    }
    if (item.omega == SiteSubset::of({2, 3})) {
      pair23 = item.is_complex;
      CHECK(item.phi == doctest::Approx(0.5));
    }
    if (item.omega == all) CHECK(item.phi == 0.0);
  }
  CHECK(pair01);
  CHECK(pair23);
}

TEST_CASE("a fully factorized identity network has no integrated subnetwork") {
  const System sys = product_system(3, ket_plus(), Channel::identity(SiteSubset::full(3), 2));
  for (const auto& item : find_complexes(sys)) CHECK(item.phi == 0.0);
}

TEST_CASE("a three-site cycle is its own unique complex") {
  const SiteSubset all = SiteSubset::full(3);
  const System sys = product_system(
      3, ket_zero(), Channel::unitary(permutation_unitary({1, 2, 0}, 2), all, 2, "3-cycle"));
  const auto list = find_complexes(sys);
  for (const auto& item : list) {
    if (item.omega == all) {
      CHECK(item.phi == doctest::Approx(0.75));
      CHECK(item.is_complex);
    } else {
      // Dangling two-site windows of a cycle carry nothing: each site's
      // cause or effect leaves the window.
      CHECK(item.phi == 0.0);
      CHECK(!item.is_complex);
    }
  }
}

TEST_CASE("time reversal leaves the minimum unchanged") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const System sys = random_gue_system(3, 3100 + seed);
    const System rev{sys.sites, sys.local_dim, sys.state, sys.channel.dual()};
    CHECK(compute_phi(rev).phi == doctest::Approx(compute_phi(sys).phi).epsilon(1e-10));
  }
}

TEST_CASE("simultaneous local rotation of dynamics and state is a symmetry") {
  const System sys = random_gue_system(3, 3200);
  std::vector<ComplexMatrix> locals;
  for (int j = 0; j < 3; ++j) locals.push_back(sample_haar_unitary(2, 3300 + j));
  const ComplexMatrix v = local_product(locals);
  // Recover the plain unitary by probing the channel with basis matrices is
  // unnecessary here; rebuild from the same seed instead.
  const ComplexMatrix u = herm_expm(sample_gue(8, 3200 + 101), 0.7);
  const System rotated{
      sys.sites, 2,
      SupportedOperator(sys.sites, 2, ComplexMatrix(v * sys.state.matrix() * v.adjoint())),
      Channel::unitary(ComplexMatrix(v * u * v.adjoint()), sys.sites, 2, "vuv")};
  CHECK(compute_phi(rotated).phi == doctest::Approx(compute_phi(sys).phi).epsilon(1e-10));
}

TEST_CASE("diagonal dynamics on a basis state is dis-integrated") {
  Network net;
  net.n_sites = 3;
  net.local_dim = 2;
  Eigen::VectorXcd k0 = ket_zero(), k1(2);
  k1 << 0, 1;
  net.initial_state = StateSpec::product_kets_spec({k0, k1, k1});
  const SiteSubset all = SiteSubset::full(3);
  const System sys{all, 2, build_state(net),
                   Channel::unitary(diagonal_phase_unitary(3, 2, 99), all, 2, "diagonal")};
  CHECK(compute_phi(sys).phi == 0.0);
}

TEST_CASE("global-phase model vanishes at both ends of the sweep") {
  for (const double t : {0.0, M_PI_2}) {
    const System sys = product_system(
        3, ket_plus(),
        Channel::unitary(herm_expm(z_global(3), t), SiteSubset::full(3), 2, "z"));
    CHECK(compute_phi(sys).phi == 0.0);
  }
}

TEST_CASE("cross-checked search agrees with brute force on product states") {
  PhiOptions opts;
  opts.cross_check = true;
  const System sys = random_gue_system(3, 3400);
  const PhiResult r = compute_phi(sys, opts);
  CHECK(r.cross_check_max_deviation >= 0.0);
  CHECK(r.cross_check_max_deviation < 1e-9);
}

TEST_CASE("worker count does not change the result") {
  const System sys = random_gue_system(4, 3500);
  PhiOptions serial;
  PhiOptions parallel;
  parallel.workers = 3;
  const PhiResult a = compute_phi(sys, serial);
  const PhiResult b = compute_phi(sys, parallel);
  CHECK(a.phi == b.phi);
  CHECK(a.mip.part1 == b.mip.part1);
  for (std::size_t i = 0; i < a.per_partition.size(); ++i)
    CHECK(a.per_partition[i].distance == b.per_partition[i].distance);
}

TEST_CASE("argmax time search is deterministic and finds the plateau") {
  const auto phi_of_t = [](double t) {
    const System sys = product_system(
        2, ket_zero(),
        Channel::unitary(herm_expm(swap_gate(2), t), SiteSubset::full(2), 2, "ps"));
    return compute_phi(sys).phi;
  };
  const double t1 = argmax_phi_time(phi_of_t, 0.0, M_PI_2);
  const double t2 = argmax_phi_time(phi_of_t, 0.0, M_PI_2);
  CHECK(t1 == t2);
  CHECK(phi_of_t(t1) >= phi_of_t(0.5));
  CHECK(phi_of_t(t1) >= phi_of_t(1.3));
}

TEST_CASE("scaling fit recovers an exact line and reports exclusions") {
  std::vector<ScalingPoint> pts;
  for (int n : {3, 4, 5}) pts.push_back({n, 0.0, std::pow(2.0, 1.25 * n - 2.0)});
  const ScalingFit fit = fit_scaling(pts, false);
  CHECK(fit.slope == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(-2.0).epsilon(1e-10));
  CHECK(fit.max_residual < 1e-10);

  CHECK_THROWS_WITH_AS(fit_scaling({{3, 0, 1.0}, {4, 0, 2.0}}, false),
                       "fit requires >= 3 sizes with non-zero phi", std::invalid_argument);

  std::vector<ScalingPoint> with_zero = pts;
  with_zero.push_back({6, 0.0, 0.0});
  const ScalingFit fit2 = fit_scaling(with_zero, false);
  CHECK(fit2.excluded_sizes == std::vector<int>{6});
  CHECK(fit2.points.size() == 3);
}

TEST_CASE("subnetwork construction reduces state and dynamics together") {
  const System sys = random_gue_system(3, 3600);
  const System sub = subnetwork(sys, SiteSubset::of({0, 2}));
  CHECK(sub.sites == SiteSubset::of({0, 2}));
  CHECK(sub.state.support() == SiteSubset::of({0, 2}));
  const auto mm = SupportedOperator::maximally_mixed(sub.sites, 2);
  CHECK((sub.channel.apply(mm).matrix() - mm.matrix()).cwiseAbs().maxCoeff() < 1e-10);
}

}  // TEST_SUITE
