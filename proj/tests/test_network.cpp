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

#include <set>

#include "qiit/network.hpp"
#include "qiit/random.hpp"

using namespace qiit;

namespace {

Network plus_network(int n) {
  Network net;
  net.n_sites = n;
  net.local_dim = 2;
  Eigen::VectorXcd plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  net.initial_state = StateSpec::product_kets_spec(std::vector<Eigen::VectorXcd>(n, plus));
  return net;
}

}  // namespace

TEST_SUITE("network") {

TEST_CASE("product of plus states is rank one with unit trace") {
  const auto rho = build_state(plus_network(3));
  CHECK(rho.support() == SiteSubset::full(3));
  CHECK(std::abs(rho.trace() - Complex(1, 0)) < 1e-12);
  const auto ev = hermitian_eigenvalues(rho.matrix());
  CHECK(ev.maxCoeff() == doctest::Approx(1.0));
  CHECK(std::abs(ev.sum() - 1.0) < 1e-12);
}

TEST_CASE("explicit maximally entangled state reduces to maximal mixing") {
  Network net;
  net.n_sites = 2;
  ComplexMatrix bell = ComplexMatrix::Zero(4, 4);
  for (int a : {0, 3})
    for (int b : {0, 3}) bell(a, b) = 0.5;
  net.initial_state = StateSpec::explicit_spec(bell);
  const auto rho = build_state(net);
  const auto ev = hermitian_eigenvalues(rho.matrix());
  CHECK(ev.maxCoeff() == doctest::Approx(1.0));
  for (int site : {0, 1}) {
    const auto reduced = partial_trace(rho, SiteSubset::single(site));
    CHECK((reduced.matrix() - ComplexMatrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("single site basis state") {
  Network net;
  net.n_sites = 1;
  Eigen::VectorXcd k0(2);
  k0 << 1, 0;
  net.initial_state = StateSpec::product_kets_spec({k0});
  const auto rho = build_state(net);
  CHECK(std::abs(rho.matrix()(0, 0) - Complex(1, 0)) < 1e-15);
}

TEST_CASE("bloch spec matches the ket it came from") {
  std::mt19937_64 rng(4);
  const Eigen::VectorXcd ket = random_ket(2, rng);
  Network by_ket;
  by_ket.n_sites = 1;
  by_ket.initial_state = StateSpec::product_kets_spec({ket});
  Network by_bloch;
  by_bloch.n_sites = 1;
  by_bloch.initial_state = StateSpec::product_bloch_spec({bloch_vector(ket)});
  CHECK((build_state(by_ket).matrix() - build_state(by_bloch).matrix()).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("state validation rejects unnormalized kets and non-states") {
  Network net;
  net.n_sites = 1;
  Eigen::VectorXcd bad(2);
  bad << 1.0, 1.0;
  net.initial_state = StateSpec::product_kets_spec({bad});
  CHECK_THROWS_AS(build_state(net), std::invalid_argument);

  Network net2;
  net2.n_sites = 1;
  ComplexMatrix m(2, 2);
  m << 1.5, 0, 0, -0.5;
  net2.initial_state = StateSpec::explicit_spec(m);
  CHECK_THROWS_AS(build_state(net2), std::invalid_argument);
}

TEST_CASE("noising leaves the untouched block and is idempotent") {
  const auto rho = build_state(plus_network(2));
  CHECK((noising(rho, SiteSubset()).matrix() - rho.matrix()).cwiseAbs().maxCoeff() == 0.0);

  const auto all_noised = noising(rho, SiteSubset::full(2));
  CHECK((all_noised.matrix() - ComplexMatrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() <
        1e-12);

  const auto once = noising(rho, SiteSubset::single(1));
  const auto twice = noising(once, SiteSubset::single(1));
  CHECK((once.matrix() - twice.matrix()).cwiseAbs().maxCoeff() < 1e-14);

  // Noised product keeps the first factor.
  const auto factor = partial_trace(once, SiteSubset::single(0));
  const auto original = partial_trace(rho, SiteSubset::single(0));
  CHECK((factor.matrix() - original.matrix()).cwiseAbs().maxCoeff() < 1e-13);

  const auto mm = SupportedOperator::maximally_mixed(SiteSubset::full(2), 2);
  CHECK((noising(mm, SiteSubset::single(0)).matrix() - mm.matrix()).cwiseAbs().maxCoeff() <
        1e-14);
}

TEST_CASE("subset distance on a ring") {
  Network net = plus_network(6);
  net.distances = Network::ring_distances(6);
  net.validate();
  CHECK(subset_distance(SiteSubset::single(0), SiteSubset::single(0), net) == 0.0);
  CHECK(subset_distance(SiteSubset::single(0), SiteSubset::single(3), net) == 3.0);
  CHECK(subset_distance(SiteSubset::of({0, 1}), SiteSubset::single(2), net) == 1.0);
}

TEST_CASE("subset distance without geometry is an error") {
  const Network net = plus_network(3);
  CHECK_THROWS_AS(subset_distance(SiteSubset::single(0), SiteSubset::single(1), net),
                  std::invalid_argument);
}

TEST_CASE("bipartition counts and invariants") {
  CHECK(enumerate_bipartitions(SiteSubset::full(2)).size() == 1);
  CHECK(enumerate_bipartitions(SiteSubset::full(4)).size() == 7);
  CHECK(enumerate_bipartitions(SiteSubset::full(1)).empty());

  std::set<std::uint32_t> seen;
  for (const auto& cut : enumerate_bipartitions(SiteSubset::full(5))) {
    CHECK((cut.part1 | cut.part2) == SiteSubset::full(5));
    CHECK(!(cut.part1 & cut.part2).bits());
    CHECK(!cut.part1.empty());
    CHECK(!cut.part2.empty());
    CHECK(cut.part1.contains(0));
    // Each unordered split appears exactly once.
    CHECK(seen.insert(cut.part1.bits()).second);
  }
  CHECK(seen.size() == 15);
}

TEST_CASE("bipartitions of a non-contiguous subnetwork") {
  const SiteSubset omega = SiteSubset::of({1, 3, 4});
  const auto cuts = enumerate_bipartitions(omega);
  CHECK(cuts.size() == 3);
  for (const auto& cut : cuts) {
    CHECK((cut.part1 | cut.part2) == omega);
    CHECK(cut.part1.contains(1));
  }
}

TEST_CASE("pairing counts match 2^(p+m-1)-1") {
  for (int p_size = 0; p_size <= 3; ++p_size)
    for (int m_size = 0; m_size <= 3; ++m_size) {
      if (p_size + m_size == 0 || p_size + m_size > 6) continue;
      const SiteSubset p = SiteSubset::full(p_size);
      const SiteSubset m = SiteSubset(((1u << m_size) - 1) << p_size);
      const auto pairings = enumerate_pairings(p, m);
      const std::size_t expected = (std::size_t{1} << (p_size + m_size - 1)) - 1;
      CHECK(pairings.size() == expected);
      std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
      for (const auto& pr : pairings) {
        CHECK((pr.p1 | pr.p2) == p);
        CHECK(!(pr.p1 & pr.p2).bits());
        CHECK((pr.m1 | pr.m2) == m);
        CHECK(!(pr.m1 & pr.m2).bits());
        CHECK(!(pr.p1 == p && pr.m1 == m));
        CHECK(!(pr.p1.empty() && pr.m1.empty()));
        // Unordered: both orders of a pairing map to one canonical key.
        const std::pair<std::uint32_t, std::uint32_t> first{pr.p1.bits(), pr.m1.bits()};
        const std::pair<std::uint32_t, std::uint32_t> second{pr.p2.bits(), pr.m2.bits()};
        const auto lo = std::min(first, second);
        const auto hi = std::max(first, second);
        CHECK(seen.insert({lo.first << 16 | lo.second, hi.first << 16 | hi.second}).second);
      }
    }
}

TEST_CASE("single-site purview and mechanism admit only the cross pairing") {
  const auto pairings = enumerate_pairings(SiteSubset::single(0), SiteSubset::single(1));
  REQUIRE(pairings.size() == 1);
  CHECK(pairings[0].p1 == SiteSubset::single(0));
  CHECK(pairings[0].m1.empty());
  CHECK(pairings[0].p2.empty());
  CHECK(pairings[0].m2 == SiteSubset::single(1));
}

TEST_CASE("subsets enumeration is complete and ascending") {
  const auto subsets = enumerate_subsets(SiteSubset::of({0, 2}));
  REQUIRE(subsets.size() == 4);
  CHECK(subsets[0].empty());
  CHECK(subsets[3] == SiteSubset::of({0, 2}));
}

}  // TEST_SUITE
