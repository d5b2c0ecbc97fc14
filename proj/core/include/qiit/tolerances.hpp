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

namespace qiit::tol {

// Max-abs of the anti-Hermitian part accepted before an operator is
// rejected as non-Hermitian.
inline constexpr double hermitian = 1e-9;

// Max-abs of U U^dag - 1 accepted for unitaries.
inline constexpr double unitary = 1e-10;

// Integrated-information values at or below this threshold are treated as
// exactly zero (concept dropped, network declared dis-integrated).
inline constexpr double phi_epsilon = 1e-9;

// State validation.
inline constexpr double ket_norm = 1e-12;
inline constexpr double density_trace = 1e-10;
inline constexpr double density_psd_floor = -1e-10;

// Channel contract checks.
inline constexpr double channel_trace = 1e-12;
inline constexpr double channel_unital = 1e-10;

}  // namespace qiit::tol
