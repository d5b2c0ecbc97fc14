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

#include <benchmark/benchmark.h>

#include "qiit/operators.hpp"
#include "qiit/random.hpp"
#include "qiit/repertoire.hpp"

namespace {

using namespace qiit;

void BM_Kron(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SiteSubset odd = SiteSubset(0x55555555u & ((1u << n) - 1));
  const SiteSubset even = odd.complement_in(SiteSubset::full(n));
  const SupportedOperator a(odd, 2, sample_gue(dim_pow(2, odd.count()), 1));
  const SupportedOperator b(even, 2, sample_gue(dim_pow(2, even.count()), 2));
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_Kron)->Arg(4)->Arg(6)->Arg(8);

void BM_PartialTrace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SupportedOperator x(SiteSubset::full(n), 2, sample_gue(dim_pow(2, n), 3));
  const SiteSubset keep(0x55555555u & ((1u << n) - 1));
  for (auto _ : state) benchmark::DoNotOptimize(partial_trace(x, keep));
}
BENCHMARK(BM_PartialTrace)->Arg(4)->Arg(6)->Arg(8);

void BM_TraceDistance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(5);
  const Eigen::Index dim = dim_pow(2, n);
  const Eigen::VectorXcd k1 = random_ket(dim, rng), k2 = random_ket(dim, rng);
  const SupportedOperator rho(SiteSubset::full(n), 2, ComplexMatrix(k1 * k1.adjoint()));
  const SupportedOperator sigma(SiteSubset::full(n), 2, ComplexMatrix(k2 * k2.adjoint()));
  for (auto _ : state) benchmark::DoNotOptimize(trace_distance(rho, sigma));
}
BENCHMARK(BM_TraceDistance)->Arg(2)->Arg(4)->Arg(5);

void BM_RepertoireTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SiteSubset all = SiteSubset::full(n);
  Network net;
  net.n_sites = n;
  net.local_dim = 2;
  net.initial_state = random_product_state(n, 2, 7);
  const SupportedOperator psi = build_state(net);
  const Channel ch =
      Channel::unitary(sample_haar_unitary(dim_pow(2, n), 8), all, 2, "haar");
  for (auto _ : state) {
    RepertoireTable table(ch, psi);
    table.materialize();
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_RepertoireTable)->Arg(3)->Arg(4)->Arg(5);

}  // namespace
