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

#include "anymask/teleport.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "anymask/latin.hpp"

namespace anymask::teleport {

namespace {

constexpr std::array<Sector, 3> kAlphabet{Sector::vac, Sector::eps, Sector::sigma};

std::size_t idx(Sector s) {
    for (std::size_t i = 0; i < kAlphabet.size(); ++i)
        if (kAlphabet[i] == s) return i;
    throw std::invalid_argument("teleport: sector " + std::string(to_string(s)) +
                                " is not in the Ising alphabet");
}

Sector sector(std::size_t i) { return kAlphabet[i % 3]; }

void require_unit(std::span<const Amplitude> coeffs) {
    if (coeffs.size() != 3) {
        throw std::invalid_argument("teleport: expected 3 coefficients, got " +
                                    std::to_string(coeffs.size()));
    }
    double n2 = 0.0;
    for (auto c : coeffs) n2 += std::norm(c);
    if (std::abs(n2 - 1.0) > 1e-12) throw std::invalid_argument("teleport: input is not unit norm");
}

void require_outcome(int outcome) {
    if (outcome < 1 || outcome > 3) {
        throw std::out_of_range("teleport: outcome must be 1, 2 or 3, got " + std::to_string(outcome));
    }
}

const Square& forward() {
    static const Square s = cyclic_square(3, CycleDirection::forward);
    return s;
}
const Square& backward() {
    static const Square s = cyclic_square(3, CycleDirection::backward);
    return s;
}

}  // namespace

std::span<const Sector> alphabet() { return kAlphabet; }

Amplitude omega(int power) {
    const int p = ((power % 3) + 3) % 3;
    if (p == 0) return {1.0, 0.0};
    const double angle = 2.0 * std::numbers::pi * p / 3.0;
    return {std::cos(angle), std::sin(angle)};
}

StateVector build_channel() {
    const double amp = 1.0 / std::sqrt(3.0);
    StateVector out(2);
    for (Sector s : kAlphabet) out.add(BasisKet{s, s}, amp);
    return out;
}

StateVector input_state(std::span<const Amplitude> coeffs) {
    require_unit(coeffs);
    StateVector out(1);
    for (std::size_t i = 0; i < 3; ++i) out.add(BasisKet{kAlphabet[i]}, coeffs[i]);
    return out;
}

StateVector build_joint(std::span<const Amplitude> coeffs) {
    return tensor(input_state(coeffs), build_channel());
}

StateVector permutation_encode(const StateVector& joint) {
    if (joint.register_count() != 3) {
        throw std::invalid_argument("permutation_encode: expected 3 registers");
    }
    StateVector out(3);
    for (const auto& [ket, amp] : joint.terms()) {
        if (ket[1] != ket[2]) {
            throw std::invalid_argument("permutation_encode: term " + to_string(ket) +
                                        " is not a channel branch");
        }
        const std::size_t r = idx(ket[1]);
        BasisKet mapped = ket;
        mapped.registers[1] = sector(forward().at(r, 0));
        mapped.registers[2] = sector(backward().at(r, 0));
        out.add(mapped, amp);
    }
    return out;
}

StateVector align_for_measurement(const StateVector& encoded) {
    if (encoded.register_count() != 3) {
        throw std::invalid_argument("align_for_measurement: expected 3 registers");
    }
    StateVector out(3);
    for (const auto& [ket, amp] : encoded.terms()) {
        const std::size_t x = idx(ket[0]);
        const std::size_t r = idx(ket[2]);  // backward first column is the identity
        const std::size_t unrotated = (idx(ket[1]) + 3 - forward().at(r, 0)) % 3;
        BasisKet mapped = ket;
        mapped.registers[0] = sector(r);
        mapped.registers[1] = sector(unrotated + r + x);
        mapped.registers[2] = sector(x);
        out.add(mapped, amp);
    }
    return out;
}

StateVector chi(int outcome) {
    require_outcome(outcome);
    StateVector out(2);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) {
            const int diff = static_cast<int>(y) - static_cast<int>(x);
            out.add(BasisKet{sector(x), sector(y)}, omega((outcome - 1) * diff));
        }
    return out;
}

MeasurementOutcome alice_measure(const StateVector& encoded, int outcome) {
    require_outcome(outcome);
    const StateVector aligned = align_for_measurement(encoded);
    const StateVector projector = scale(chi(outcome), 1.0 / 3.0);

    StateVector bob(1);
    for (const auto& [ket, amp] : aligned.terms()) {
        const Amplitude overlap =
            std::conj(projector.amplitude(BasisKet{ket[0], ket[1]}));
        if (overlap == Amplitude{}) continue;
        bob.add(BasisKet{ket[2]}, overlap * amp);
    }
    MeasurementOutcome result;
    const double n = norm(bob);
    result.probability = n * n;
    result.bob = n > 0.0 ? scale(bob, 1.0 / n) : bob;
    return result;
}

StateVector correct(const StateVector& bob, int outcome) {
    require_outcome(outcome);
    if (bob.register_count() != 1) throw std::invalid_argument("correct: expected one register");
    StateVector out(1);
    for (const auto& [ket, amp] : bob.terms()) {
        const int z = static_cast<int>(idx(ket[0]));
        out.add(ket, amp * omega((outcome - 1) * z));
    }
    return out;
}

bool TeleportRun::passed(double tol) const {
    if (std::abs(probability_sum - 1.0) > tol || bob_marginal_deviation > tol) return false;
    for (const auto& o : outcomes) {
        if (std::abs(o.probability - 1.0 / 3.0) > tol) return false;
        if (std::abs(o.fidelity - 1.0) > tol) return false;
    }
    return true;
}

TeleportRun run_teleport(std::span<const Amplitude> coeffs) {
    require_unit(coeffs);
    TeleportRun run;
    std::copy(coeffs.begin(), coeffs.end(), run.input.begin());
    run.joint = build_joint(coeffs);
    run.encoded = permutation_encode(run.joint);

    const std::size_t keep[] = {2};
    run.bob_marginal_deviation =
        hs_distance(partial_trace(run.encoded, keep, kAlphabet),
                    DensityMatrix::maximally_mixed(kAlphabet));

    const StateVector target = input_state(coeffs);
    static const char* const kCorrections[] = {"diag(1,1,1)", "diag(1,w,w^2)", "diag(1,w^2,w)"};
    for (int i = 1; i <= 3; ++i) {
        auto& rec = run.outcomes[i - 1];
        auto measured = alice_measure(run.encoded, i);
        rec.outcome = i;
        rec.probability = measured.probability;
        rec.bob = std::move(measured.bob);
        rec.correction = kCorrections[i - 1];
        rec.corrected = correct(rec.bob, i);
        rec.fidelity = std::norm(inner(target, rec.corrected));
        run.probability_sum += rec.probability;
    }
    return run;
}

std::string to_record(const TeleportRun& run) {
    std::ostringstream os;
    os.precision(17);
    os << "{\"input\":[";
    for (std::size_t i = 0; i < 3; ++i) {
        if (i) os << ',';
        os << "[" << run.input[i].real() << ',' << run.input[i].imag() << ']';
    }
    os << "],\"bob_marginal_deviation\":" << run.bob_marginal_deviation << ",\"outcomes\":[";
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& o = run.outcomes[i];
        if (i) os << ',';
        os << "{\"outcome\":" << o.outcome << ",\"probability\":" << o.probability
           << ",\"correction\":\"" << o.correction << "\",\"fidelity\":" << o.fidelity << '}';
    }
    os << "],\"probability_sum\":" << run.probability_sum
       << ",\"verdict\":\"" << (run.passed() ? "pass" : "fail") << "\"}";
    return os.str();
}

}  // namespace anymask::teleport
