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

#include <random>

#include "qiit/channel.hpp"
#include "qiit/hamiltonians.hpp"
#include "qiit/random.hpp"

using namespace qiit;

namespace {

Complex hs_inner(const SupportedOperator& a, const SupportedOperator& b) {
  return (a.matrix().adjoint() * b.matrix()).trace();
}

SupportedOperator random_op(SiteSubset support, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const Eigen::Index dim = dim_pow(d, support.count());
  ComplexMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  return SupportedOperator(support, d, std::move(m));
}

SupportedOperator random_density(SiteSubset support, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Eigen::Index dim = dim_pow(d, support.count());
  const Eigen::VectorXcd k1 = random_ket(dim, rng);
  const Eigen::VectorXcd k2 = random_ket(dim, rng);
  ComplexMatrix rho = 0.6 * (k1 * k1.adjoint()) + 0.4 * (k2 * k2.adjoint());
  return SupportedOperator(support, d, std::move(rho));
}

void check_unital_and_trace_preserving(const Channel& ch, std::uint64_t seed) {
  const auto mm = SupportedOperator::maximally_mixed(ch.sites(), ch.local_dim());
  CHECK((ch.apply(mm).matrix() - mm.matrix()).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((ch.apply_dual(mm).matrix() - mm.matrix()).cwiseAbs().maxCoeff() < 1e-10);
  const auto rho = random_density(ch.sites(), ch.local_dim(), seed);
  CHECK(std::abs(ch.apply(rho).trace() - rho.trace()) < 1e-12);
  CHECK(std::abs(ch.apply_dual(rho).trace() - rho.trace()) < 1e-12);
}

void check_duality(const Channel& ch, std::uint64_t seed, int pairs = 20) {
  for (int k = 0; k < pairs; ++k) {
    const auto x = random_op(ch.sites(), ch.local_dim(), seed + 2 * k);
    const auto y = random_op(ch.sites(), ch.local_dim(), seed + 2 * k + 1);
    const Complex lhs = hs_inner(x, ch.apply(y));
    const Complex rhs = hs_inner(ch.apply_dual(x), y);
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

}  // namespace

TEST_SUITE("channel") {

TEST_CASE("identity channel returns its input") {
  const Channel id = Channel::identity(SiteSubset::full(2), 2);
  const auto x = random_op(SiteSubset::full(2), 2, 1);
  CHECK((id.apply(x).matrix() - x.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("swap exchanges the two factors") {
  const Channel swap = Channel::unitary(swap_gate(2), SiteSubset::full(2), 2, "swap");
  std::mt19937_64 rng(5);
  const Eigen::VectorXcd a = random_ket(2, rng);
  const Eigen::VectorXcd b = random_ket(2, rng);
  const auto pa = SupportedOperator(SiteSubset::single(0), 2, ComplexMatrix(a * a.adjoint()));
  const auto pb = SupportedOperator(SiteSubset::single(1), 2, ComplexMatrix(b * b.adjoint()));
  const auto swapped = swap.apply(kron(pa, pb));
  const auto pa1 = SupportedOperator(SiteSubset::single(1), 2, ComplexMatrix(a * a.adjoint()));
  const auto pb0 = SupportedOperator(SiteSubset::single(0), 2, ComplexMatrix(b * b.adjoint()));
  CHECK((swapped.matrix() - kron(pb0, pa1).matrix()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("quarter-period exponential of the swap acts as the swap") {
  // The global phase cancels in conjugation.
  const Channel expm_ch =
      Channel::unitary(herm_expm(swap_gate(2), M_PI_2), SiteSubset::full(2), 2, "expm");
  const Channel swap = Channel::unitary(swap_gate(2), SiteSubset::full(2), 2, "swap");
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto x = random_op(SiteSubset::full(2), 2, 40 + seed);
    CHECK((expm_ch.apply(x).matrix() - swap.apply(x).matrix()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("non-unitary matrices are rejected") {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  m(0, 0) = 2.0;
  CHECK_THROWS_AS(Channel::unitary(m, SiteSubset::full(2), 2, "bad"), std::invalid_argument);
}

TEST_CASE("dual of a time evolution runs backwards") {
  const ComplexMatrix h = sample_gue(4, 9);
  const Channel forward =
      Channel::unitary(herm_expm(h, -0.8), SiteSubset::full(2), 2, "e^{-itH}");
  const Channel backward =
      Channel::unitary(herm_expm(h, 0.8), SiteSubset::full(2), 2, "e^{+itH}");
  const auto x = random_op(SiteSubset::full(2), 2, 10);
  CHECK((forward.apply_dual(x).matrix() - backward.apply(x).matrix()).cwiseAbs().maxCoeff() <
        1e-12);
  // dual of dual is the original evaluator
  CHECK((forward.dual().dual().apply(x).matrix() - forward.apply(x).matrix())
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("the swap is self-dual") {
  const Channel swap = Channel::unitary(swap_gate(2), SiteSubset::full(2), 2, "swap");
  const auto x = random_op(SiteSubset::full(2), 2, 12);
  CHECK((swap.apply(x).matrix() - swap.apply_dual(x).matrix()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("duality identity holds for unitary, reduced, and partitioned channels") {
  const ComplexMatrix u = sample_haar_unitary(8, 21);
  const Channel ch = Channel::unitary(u, SiteSubset::full(3), 2, "haar");
  check_duality(ch, 1000);
  const Channel red = reduced_channel(ch, SiteSubset::of({0, 2}));
  check_duality(red, 2000);
  const Channel part =
      partitioned_channel(ch, Bipartition::canonical(SiteSubset::single(1), SiteSubset::full(3)));
  check_duality(part, 3000);
}

TEST_CASE("unitality and trace preservation hold for constructed channels") {
  const Channel ch =
      Channel::unitary(sample_haar_unitary(8, 31), SiteSubset::full(3), 2, "haar");
  check_unital_and_trace_preserving(ch, 50);
  check_unital_and_trace_preserving(reduced_channel(ch, SiteSubset::of({1, 2})), 51);
  check_unital_and_trace_preserving(
      partitioned_channel(ch,
                          Bipartition::canonical(SiteSubset::single(0), SiteSubset::full(3))),
      52);
}

TEST_CASE("reduced identity is the identity on the subnetwork") {
  const Channel id = Channel::identity(SiteSubset::full(3), 2);
  const Channel red = reduced_channel(id, SiteSubset::of({0, 2}));
  const auto x = random_op(SiteSubset::of({0, 2}), 2, 61);
  CHECK((red.apply(x).matrix() - x.matrix()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("reduced swap fully depolarizes a single site") {
  const Channel swap = Channel::unitary(swap_gate(2), SiteSubset::full(2), 2, "swap");
  const Channel red = reduced_channel(swap, SiteSubset::single(0));
  const auto psi = random_density(SiteSubset::single(0), 2, 62);
  CHECK((red.apply(psi).matrix() - ComplexMatrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("reducing a factorized unitary keeps the local factor") {
  const ComplexMatrix u0 = sample_haar_unitary(2, 70);
  const ComplexMatrix u1 = sample_haar_unitary(2, 71);
  const Channel prod =
      Channel::unitary(local_product({u0, u1}), SiteSubset::full(2), 2, "u0xu1");
  const Channel red = reduced_channel(prod, SiteSubset::single(0));
  const auto x = random_op(SiteSubset::single(0), 2, 72);
  const ComplexMatrix expected = u0 * x.matrix() * u0.adjoint();
  CHECK((red.apply(x).matrix() - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("empty subnetwork is rejected") {
  const Channel id = Channel::identity(SiteSubset::full(2), 2);
  CHECK_THROWS_AS(reduced_channel(id, SiteSubset()), std::invalid_argument);
}

TEST_CASE("partitioning a factorized channel changes nothing") {
  const ComplexMatrix u0 = sample_haar_unitary(2, 80);
  const ComplexMatrix u1 = sample_haar_unitary(2, 81);
  const Channel prod =
      Channel::unitary(local_product({u0, u1}), SiteSubset::full(2), 2, "u0xu1");
  const Bipartition cut = Bipartition::canonical(SiteSubset::single(0), SiteSubset::full(2));
  const Channel part = partitioned_channel(prod, cut);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto x = random_op(SiteSubset::full(2), 2, 90 + seed);
    CHECK((part.apply(x).matrix() - prod.apply(x).matrix()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("partitioned swap fully depolarizes product inputs") {
  const Channel swap = Channel::unitary(swap_gate(2), SiteSubset::full(2), 2, "swap");
  const Bipartition cut = Bipartition::canonical(SiteSubset::single(0), SiteSubset::full(2));
  const Channel part = partitioned_channel(swap, cut);
  const auto rho = kron(random_density(SiteSubset::single(0), 2, 95),
                        random_density(SiteSubset::single(1), 2, 96));
  CHECK((part.apply(rho).matrix() - ComplexMatrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("partitioned identity is the identity") {
  const Channel id = Channel::identity(SiteSubset::full(3), 2);
  const Bipartition cut = Bipartition::canonical(SiteSubset::of({0, 1}), SiteSubset::full(3));
  const Channel part = partitioned_channel(id, cut);
  const auto x = random_op(SiteSubset::full(3), 2, 97);
  CHECK((part.apply(x).matrix() - x.matrix()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("permutation channels compose like their permutations") {
  const std::vector<int> s1{1, 2, 0};
  const std::vector<int> s2{2, 0, 1};
  // Content flows i -> s2[s1[i]] when s1 acts first.
  std::vector<int> s21(3);
  for (int i = 0; i < 3; ++i) s21[i] = s2[s1[i]];
  const SiteSubset all = SiteSubset::full(3);
  const Channel c1 = Channel::unitary(permutation_unitary(s1, 2), all, 2, "s1");
  const Channel c2 = Channel::unitary(permutation_unitary(s2, 2), all, 2, "s2");
  const Channel c21 = Channel::unitary(permutation_unitary(s21, 2), all, 2, "s21");
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto x = random_op(all, 2, 110 + seed);
    CHECK((c2.apply(c1.apply(x)).matrix() - c21.apply(x).matrix()).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("global phase flip squares to the identity") {
  for (int n : {2, 3, 4}) {
    const ComplexMatrix z = z_global(n);
    CHECK((z * z - ComplexMatrix::Identity(z.rows(), z.cols())).cwiseAbs().maxCoeff() == 0.0);
    const auto ev = hermitian_eigenvalues(z);
    CHECK(ev.minCoeff() == doctest::Approx(-1.0));
    CHECK(ev.maxCoeff() == doctest::Approx(1.0));
  }
}

TEST_CASE("ensemble sampling is deterministic in the seed") {
  CHECK((sample_gue(8, 123) - sample_gue(8, 123)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((sample_haar_unitary(8, 123) - sample_haar_unitary(8, 123)).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK((sample_gue(8, 123) - sample_gue(8, 124)).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("gue diagonal mean vanishes within sampling error") {
  double sum = 0.0;
  const int samples = 1000;
  const int dim = 4;
  for (int s = 0; s < samples; ++s) sum += sample_gue(dim, 9000 + s).trace().real() / dim;
  // Variance of the mean of n_s * dim diagonal entries of unit variance.
  const double sigma = 1.0 / std::sqrt(double(samples) * dim);
  CHECK(std::abs(sum / samples) < 4.0 * sigma);
}

TEST_CASE("haar samples are unitary") {
  const ComplexMatrix u = sample_haar_unitary(16, 77);
  CHECK((u * u.adjoint() - ComplexMatrix::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(u.col(0).norm() == doctest::Approx(1.0));
}

TEST_CASE("permutation flow convention sends content of i to sigma(i)") {
  // sigma = (0 1 2): content of site 0 should land on site 1.
  const std::vector<int> sigma{1, 2, 0};
  const Channel ch = Channel::unitary(permutation_unitary(sigma, 2), SiteSubset::full(3), 2, "c");
  Eigen::VectorXcd one(2);
  one << 0, 1;
  Eigen::VectorXcd zero(2);
  zero << 1, 0;
  auto site_op = [&](int site, const Eigen::VectorXcd& k) {
    return SupportedOperator(SiteSubset::single(site), 2, ComplexMatrix(k * k.adjoint()));
  };
  const auto in = kron(kron(site_op(0, one), site_op(1, zero)), site_op(2, zero));
  const auto out = ch.apply(in);
  const auto at1 = partial_trace(out, SiteSubset::single(1));
  CHECK(at1.matrix()(1, 1).real() == doctest::Approx(1.0));
}

}  // TEST_SUITE
