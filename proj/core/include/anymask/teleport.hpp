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
#include <span>
#include <string>
#include <vector>

#include "anymask/qstate.hpp"

namespace anymask::teleport {

/// Registers: 0 = Alice's input, 1 = Alice's channel half, 2 = Bob.
/// All registers use the Ising alphabet {vac, eps, sigma}.
std::span<const Sector> alphabet();

/// omega = e^{2 pi i / 3} raised to `power`.
Amplitude omega(int power);

/// (|vac vac> + |eps eps> + |sigma sigma>) / sqrt3 on two registers.
StateVector build_channel();

/// alpha|vac> + beta|eps> + gamma|sigma> on one register. Requires unit norm.
StateVector input_state(std::span<const Amplitude> coeffs);

/// input (x) channel. Requires three unit-norm coefficients.
StateVector build_joint(std::span<const Amplitude> coeffs);

/// Channel branch r of the joint state is mapped to the r-th rows of the
/// forward and backward cyclic squares: |x, r, r> -> |x, F[r][0], B[r][0]>,
/// so registers 1 and 2 over the three branches follow the orthogonal pair.
/// Throws unless registers 1 and 2 carry equal labels on every term.
StateVector permutation_encode(const StateVector& joint);

/// Register shuffle that carries the encoded state into the measurement
/// frame  (1/sqrt3) sum_{x,z} c_z |x, x+z, z>  (indices mod 3):
/// undo the channel rotation on register 1, swap registers 0 and 2, then add
/// registers 0 and 2 into register 1. Basis permutation, hence unitary.
StateVector align_for_measurement(const StateVector& encoded);

/// The unnormalized nine-term vector |chi_i> on registers 0,1 (i in 1..3):
/// amplitude omega^{(i-1)(y-x)} on |x y>. Norm 3.
StateVector chi(int outcome);

struct MeasurementOutcome {
    double probability = 0.0;
    /// Bob's normalized conditional state (one register).
    StateVector bob;
};

/// Aligns the encoded state and projects registers 0,1 onto |chi_i>/3.
MeasurementOutcome alice_measure(const StateVector& encoded, int outcome);

/// diag(1, omega^{i-1}, omega^{2(i-1)}) on Bob's register.
StateVector correct(const StateVector& bob, int outcome);

struct OutcomeRecord {
    int outcome = 0;
    double probability = 0.0;
    StateVector bob;
    std::string correction;
    StateVector corrected;
    double fidelity = 0.0;
};

struct TeleportRun {
    std::array<Amplitude, 3> input{};
    StateVector joint;
    StateVector encoded;
    /// hs_distance of Bob's marginal of the encoded state to I/3.
    double bob_marginal_deviation = 0.0;
    std::array<OutcomeRecord, 3> outcomes;
    double probability_sum = 0.0;

    bool passed(double tol = 1e-12) const;
};

TeleportRun run_teleport(std::span<const Amplitude> coeffs);

std::string to_record(const TeleportRun& run);

}  // namespace anymask::teleport
