// Copyright 2026 The anymask Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anymask/anyons.hpp"
#include "anymask/latin.hpp"
#include "anymask/qstate.hpp"

namespace anymask {

inline constexpr double kDefaultTolerance = 1e-12;

/// Tripartite Latin-square encoder over a model's sector alphabet:
///   |j>  ->  (1/sqrt d) sum_k |A[j][k], B[j][k], C[j][k]>
/// Construction throws if the triple fails validate_triple or its order does
/// not match the alphabet size.
class MaskingScheme {
public:
    MaskingScheme(AnyonModel model, SchemeTriple triple);

    const AnyonModel& model() const { return model_; }
    const SchemeTriple& triple() const { return triple_; }
    std::size_t order() const { return triple_.order(); }
    std::span<const Sector> alphabet() const { return model_.alphabet(); }

    StateVector encode_basis(std::size_t row) const;
    /// Requires sum |coeffs|^2 = 1 within the default tolerance.
    StateVector encode(std::span<const Amplitude> coeffs) const;

    /// Same scheme with the roles of B and C swapped.
    MaskingScheme with_bc_swapped() const;

private:
    AnyonModel model_;
    SchemeTriple triple_;
};

/// Abelian model with the fixed d = 4 triple.
MaskingScheme abelian_d4_scheme();
/// Ising-type model with constant-row A and forward/backward cyclic B, C.
MaskingScheme ising_cyclic_scheme(int chern = 1);
MaskingScheme default_scheme(const AnyonModel& model);

struct MaskingReport {
    std::array<DensityMatrix, 3> marginals;
    /// hs_distance(marginal, I/d) per party.
    std::array<double, 3> deviations{};
    /// Informational only: hs_distance of each two-party marginal (BC, AC, AB)
    /// to I/d^2. Not part of the verdict.
    std::array<double, 3> pair_deviations{};
    double tol = kDefaultTolerance;
    std::optional<std::uint64_t> seed;
    bool passed = false;

    double max_deviation() const;
};

MaskingReport verify_masking(const StateVector& state, std::span<const Sector> alphabet,
                             double tol = kDefaultTolerance);

/// One-line structured record: party deviations, verdict and seed.
std::string to_record(const MaskingReport& report);

/// d independent standard complex Gaussians, normalized. Deterministic in seed.
std::vector<Amplitude> random_unit_coeffs(std::size_t d, std::uint64_t seed);

/// Independent per-trial seed derived from a campaign seed.
std::uint64_t trial_seed(std::uint64_t campaign_seed, std::uint64_t trial);

struct BipartiteProbe {
    std::string name;
    std::vector<Amplitude> coeffs;
};

struct BipartiteControlReport {
    std::vector<BipartiteProbe> probes;
    double max_distance = 0.0;
    std::size_t probe_i = 0, probe_j = 0;
    std::size_t party = 0;
};

/// Two-register analog |j> -> (1/sqrt d) sum_k |B[j][k], C[j][k]> applied to
/// the fixed probe set (the d basis inputs plus uniform superpositions with
/// phases 1 and i^j). Reports the largest single-party marginal distance
/// between any two probes.
BipartiteControlReport bipartite_control(const MaskingScheme& scheme);
BipartiteControlReport bipartite_control(const AnyonModel& model);

/// The two-register image of `coeffs` under the bipartite analog.
StateVector bipartite_encode(const MaskingScheme& scheme, std::span<const Amplitude> coeffs);

}  // namespace anymask
