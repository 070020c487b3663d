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

#include "anymask/masker.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace anymask {

MaskingScheme::MaskingScheme(AnyonModel model, SchemeTriple triple)
    : model_(std::move(model)), triple_(std::move(triple)) {
    if (triple_.order() != model_.dim()) {
        throw std::invalid_argument("MaskingScheme: triple order " + std::to_string(triple_.order()) +
                                    " does not match the " + model_.name() + " alphabet size " +
                                    std::to_string(model_.dim()));
    }
    auto report = validate_triple(triple_);
    if (!report.passed()) {
        throw std::invalid_argument("MaskingScheme: invalid triple (" +
                                    report.violations.front().check + ": " +
                                    report.violations.front().detail + ")");
    }
}

StateVector MaskingScheme::encode_basis(std::size_t row) const {
    const std::size_t d = order();
    if (row >= d) {
        throw std::out_of_range("encode_basis: row " + std::to_string(row) + " out of range");
    }
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    const auto& alpha = model_.alphabet();
    StateVector out(3);
    for (std::size_t k = 0; k < d; ++k) {
        out.add(BasisKet{alpha[triple_.a.at(row, k)], alpha[triple_.b.at(row, k)],
                         alpha[triple_.c.at(row, k)]},
                amp);
    }
    return out;
}

StateVector MaskingScheme::encode(std::span<const Amplitude> coeffs) const {
    if (coeffs.size() != order()) {
        throw std::invalid_argument("encode: expected " + std::to_string(order()) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
    }
    double n2 = 0.0;
    for (auto c : coeffs) n2 += std::norm(c);
    if (std::abs(n2 - 1.0) > kDefaultTolerance) {
        throw std::invalid_argument("encode: coefficients are not unit norm");
    }
    StateVector out(3);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == Amplitude{}) continue;
        out += scale(encode_basis(j), coeffs[j]);
    }
    return out;
}

MaskingScheme MaskingScheme::with_bc_swapped() const {
    return MaskingScheme(model_, SchemeTriple{triple_.a, triple_.c, triple_.b});
}

MaskingScheme abelian_d4_scheme() {
    return MaskingScheme(AnyonModel::abelian(), fixed_triple_d4());
}

MaskingScheme ising_cyclic_scheme(int chern) {
    return MaskingScheme(AnyonModel::ising(chern), cyclic_triple(3));
}

MaskingScheme default_scheme(const AnyonModel& model) {
    if (model.kind() == ModelKind::abelian_c0) return MaskingScheme(model, fixed_triple_d4());
    return MaskingScheme(model, cyclic_triple(model.dim()));
}

// ---------------------------------------------------------------------------
// Verification

double MaskingReport::max_deviation() const {
    return *std::max_element(deviations.begin(), deviations.end());
}

namespace {

DensityMatrix maximally_mixed_pair(std::span<const Sector> alphabet) {
    std::vector<BasisKet> basis;
    for (Sector a : alphabet)
        for (Sector b : alphabet) basis.push_back(BasisKet{a, b});
    const std::size_t n = basis.size();
    std::vector<Amplitude> entries(n * n);
    for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = 1.0 / static_cast<double>(n);
    return DensityMatrix(std::move(basis), std::move(entries));
}

}  // namespace

MaskingReport verify_masking(const StateVector& state, std::span<const Sector> alphabet,
                             double tol) {
    if (state.register_count() != 3) {
        throw std::invalid_argument("verify_masking: expected 3 registers, got " +
                                    std::to_string(state.register_count()));
    }
    MaskingReport report;
    report.tol = tol;
    const auto target = DensityMatrix::maximally_mixed(alphabet);
    for (std::size_t party = 0; party < 3; ++party) {
        const std::size_t keep[] = {party};
        report.marginals[party] = partial_trace(state, keep, alphabet);
        report.deviations[party] = hs_distance(report.marginals[party], target);
    }
    const auto pair_target = maximally_mixed_pair(alphabet);
    for (std::size_t traced = 0; traced < 3; ++traced) {
        std::vector<std::size_t> keep;
        for (std::size_t r = 0; r < 3; ++r)
            if (r != traced) keep.push_back(r);
        report.pair_deviations[traced] = hs_distance(partial_trace(state, keep, alphabet), pair_target);
    }
    report.passed = report.max_deviation() <= tol;
    return report;
}

std::string to_record(const MaskingReport& report) {
    std::ostringstream os;
    os.precision(17);
    os << "{\"parties\":[";
    for (std::size_t p = 0; p < 3; ++p) {
        if (p) os << ',';
        os << "{\"party\":" << p << ",\"deviation\":" << report.deviations[p] << '}';
    }
    os << "],\"tol\":" << report.tol << ",\"verdict\":\"" << (report.passed ? "pass" : "fail") << '"';
    os << ",\"seed\":";
    if (report.seed) os << *report.seed;
    else os << "null";
    os << '}';
    return os.str();
}

std::uint64_t trial_seed(std::uint64_t campaign_seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(campaign_seed),
                      static_cast<std::uint32_t>(campaign_seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::vector<Amplitude> random_unit_coeffs(std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Amplitude> coeffs(d);
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (auto& c : coeffs) {
            double re = gauss(rng);
            double im = gauss(rng);
            c = {re, im};
            n2 += std::norm(c);
        }
    } while (n2 == 0.0);
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& c : coeffs) c *= inv;
    return coeffs;
}

// ---------------------------------------------------------------------------
// Bipartite negative control

StateVector bipartite_encode(const MaskingScheme& scheme, std::span<const Amplitude> coeffs) {
    const std::size_t d = scheme.order();
    if (coeffs.size() != d) throw std::invalid_argument("bipartite_encode: wrong coefficient count");
    const auto& t = scheme.triple();
    const auto alpha = scheme.alphabet();
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    StateVector out(2);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
            out.add(BasisKet{alpha[t.b.at(j, k)], alpha[t.c.at(j, k)]}, coeffs[j] * amp);
    return out;
}

BipartiteControlReport bipartite_control(const MaskingScheme& scheme) {
    const std::size_t d = scheme.order();
    BipartiteControlReport report;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Amplitude> c(d);
        c[j] = 1.0;
        report.probes.push_back({"basis-" + std::to_string(j), std::move(c)});
    }
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<Amplitude> flat(d, amp), phased(d);
    for (std::size_t j = 0; j < d; ++j) phased[j] = amp * std::pow(Amplitude(0.0, 1.0), static_cast<int>(j));
    report.probes.push_back({"uniform", std::move(flat)});
    report.probes.push_back({"uniform-i", std::move(phased)});

    const auto alpha = scheme.alphabet();
    std::vector<std::array<DensityMatrix, 2>> marginals;
    for (const auto& probe : report.probes) {
        auto state = bipartite_encode(scheme, probe.coeffs);
        const std::size_t keep0[] = {0}, keep1[] = {1};
        marginals.push_back({partial_trace(state, keep0, alpha), partial_trace(state, keep1, alpha)});
    }
    for (std::size_t i = 0; i < marginals.size(); ++i)
        for (std::size_t j = i + 1; j < marginals.size(); ++j)
            for (std::size_t p = 0; p < 2; ++p) {
                double dist = hs_distance(marginals[i][p], marginals[j][p]);
                if (dist > report.max_distance) {
                    report.max_distance = dist;
                    report.probe_i = i;
                    report.probe_j = j;
                    report.party = p;
                }
            }
    return report;
}

BipartiteControlReport bipartite_control(const AnyonModel& model) {
    return bipartite_control(default_scheme(model));
}

}  // namespace anymask
