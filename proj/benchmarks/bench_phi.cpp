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

#include "qiit/hamiltonians.hpp"
#include "qiit/phi.hpp"
#include "qiit/random.hpp"

namespace {

using namespace qiit;

System gue_system(int n) {
  const SiteSubset all = SiteSubset::full(n);
  Network net;
  net.n_sites = n;
  net.local_dim = 2;
  net.initial_state = random_product_state(n, 2, 11);
  return System{all, 2, build_state(net),
                Channel::unitary(herm_expm(sample_gue(dim_pow(2, n), 12), 0.7), all, 2, "gue")};
}

void BM_ConceptualStructure(benchmark::State& state) {
  const System sys = gue_system(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(build_cs_computation(sys.channel, sys.state));
}
BENCHMARK(BM_ConceptualStructure)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Phi(benchmark::State& state) {
  const System sys = gue_system(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_phi(sys));
}
BENCHMARK(BM_Phi)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_PhiCrossChecked(benchmark::State& state) {
  const System sys = gue_system(3);
  PhiOptions opts;
  opts.cross_check = true;
  for (auto _ : state) benchmark::DoNotOptimize(compute_phi(sys, opts));
}
BENCHMARK(BM_PhiCrossChecked)->Unit(benchmark::kMillisecond);

}  // namespace
