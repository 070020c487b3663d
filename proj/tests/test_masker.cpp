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

#include <gtest/gtest.h>

#include <cmath>

#include "anymask/masker.hpp"
#include "oracle.hpp"

using namespace anymask;
using S = Sector;
using oracle::cd;
using oracle::Grid;

namespace {

const std::vector<Sector> kAbelian{S::vac, S::e, S::m, S::eps};
const std::vector<Sector> kIsing{S::vac, S::eps, S::sigma};

// The d = 4 triple written out by hand over {vac, e, m, eps} = {0, 1, 2, 3}.
const Grid kA4 = oracle::constant_rows(4);
const Grid kB4{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
const Grid kC4{{0, 1, 2, 3}, {3, 2, 1, 0}, {1, 0, 3, 2}, {2, 3, 0, 1}};
// The order-3 pair over {vac, eps, sigma} = {0, 1, 2}.
const Grid kA3 = oracle::constant_rows(3);
const Grid kB3{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
const Grid kC3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

double max_marginal_deviation(const oracle::Dense& s) {
    double worst = 0.0;
    for (std::size_t p = 0; p < 3; ++p)
        worst = std::max(worst, oracle::hs(oracle::marginal(s, p), oracle::mixed(s.d)));
    return worst;
}

}  // namespace

TEST(EncodeBasis, AbelianRowZero) {
    const auto s = abelian_d4_scheme().encode_basis(0);
    EXPECT_EQ(s.size(), 4u);
    for (auto x : kAbelian) EXPECT_NEAR(std::abs(s.amplitude({x, x, x}) - cd(0.5)), 0.0, 1e-15);
}

TEST(EncodeBasis, IsingRowZero) {
    const auto s = ising_cyclic_scheme(1).encode_basis(0);
    EXPECT_EQ(s.size(), 3u);
    for (auto x : kIsing) EXPECT_NEAR(std::abs(s.amplitude({x, x, x}) - cd(1.0 / std::sqrt(3.0))), 0.0, 1e-15);
    EXPECT_THROW(ising_cyclic_scheme(1).encode_basis(3), std::out_of_range);
}

TEST(Encode, AbelianEncodedState) {
    const cd al{0.1, 0.2}, be{-0.3, 0.4}, ga{0.5, -0.1}, de{0.2, 0.0};
    const double n = std::sqrt(std::norm(al) + std::norm(be) + std::norm(ga) + std::norm(de));
    const cd c[] = {al / n, be / n, ga / n, de / n};
    const auto s = abelian_d4_scheme().encode(c);

    // Sixteen terms listed row by row.
    const std::vector<std::pair<std::vector<Sector>, int>> expected{
        {{S::vac, S::vac, S::vac}, 0}, {{S::e, S::e, S::e}, 0},       {{S::m, S::m, S::m}, 0},
        {{S::eps, S::eps, S::eps}, 0}, {{S::vac, S::e, S::eps}, 1},   {{S::e, S::vac, S::m}, 1},
        {{S::m, S::eps, S::e}, 1},     {{S::eps, S::m, S::vac}, 1},   {{S::vac, S::m, S::e}, 2},
        {{S::e, S::eps, S::vac}, 2},   {{S::m, S::vac, S::eps}, 2},   {{S::eps, S::e, S::m}, 2},
        {{S::vac, S::eps, S::m}, 3},   {{S::e, S::m, S::eps}, 3},     {{S::m, S::e, S::vac}, 3},
        {{S::eps, S::vac, S::e}, 3}};
    EXPECT_EQ(s.size(), 16u);
    for (const auto& [labels, row] : expected)
        EXPECT_NEAR(std::abs(s.amplitude(BasisKet(labels)) - 0.5 * c[row]), 0.0, 1e-15);
}

TEST(Encode, IsingEncodedState) {
    const cd c[] = {{0.6, 0.0}, {0.0, 0.48}, {0.64, 0.0}};
    const auto s = ising_cyclic_scheme(1).encode(c);
    const double r = 1.0 / std::sqrt(3.0);
    const std::vector<std::pair<std::vector<Sector>, int>> expected{
        {{S::vac, S::vac, S::vac}, 0},   {{S::eps, S::eps, S::eps}, 0}, {{S::sigma, S::sigma, S::sigma}, 0},
        {{S::vac, S::sigma, S::eps}, 1}, {{S::eps, S::vac, S::sigma}, 1}, {{S::sigma, S::eps, S::vac}, 1},
        {{S::vac, S::eps, S::sigma}, 2}, {{S::eps, S::sigma, S::vac}, 2}, {{S::sigma, S::vac, S::eps}, 2}};
    EXPECT_EQ(s.size(), 9u);
    for (const auto& [labels, row] : expected)
        EXPECT_NEAR(std::abs(s.amplitude(BasisKet(labels)) - r * c[row]), 0.0, 1e-15);
}

TEST(Encode, BasisInputIsRow) {
    const auto scheme = abelian_d4_scheme();
    const cd c[] = {1.0, 0.0, 0.0, 0.0};
    EXPECT_NEAR(std::abs(inner(scheme.encode(c), scheme.encode_basis(0)) - 1.0), 0.0, 1e-15);
}

TEST(Encode, RejectsBadInput) {
    const auto scheme = ising_cyclic_scheme(1);
    const cd short_c[] = {1.0, 0.0};
    const cd long_c[] = {1.0, 1.0, 0.0};
    EXPECT_THROW(scheme.encode(short_c), std::invalid_argument);
    EXPECT_THROW(scheme.encode(long_c), std::invalid_argument);
}

TEST(Scheme, ConstructionChecks) {
    EXPECT_THROW(MaskingScheme(AnyonModel::abelian(), cyclic_triple(3)), std::invalid_argument);
    EXPECT_THROW(MaskingScheme(AnyonModel::ising(1), fixed_triple_d4()), std::invalid_argument);
    const auto f = cyclic_square(3, CycleDirection::forward);
    EXPECT_THROW(MaskingScheme(AnyonModel::ising(1), SchemeTriple{constant_row_square(3), f, f}),
                 std::invalid_argument);
}

TEST(VerifyMasking, UnencodedProductFails) {
    for (const auto& alpha : {kAbelian, kIsing}) {
        const auto r = verify_masking(StateVector::basis({S::vac, S::vac, S::vac}), alpha);
        const double d = static_cast<double>(alpha.size());
        EXPECT_FALSE(r.passed);
        for (double dev : r.deviations) {
            EXPECT_NEAR(dev, std::sqrt(1.0 - 1.0 / d), 1e-15);
            EXPECT_GT(dev, 0.5);
        }
    }
}

TEST(VerifyMasking, EncodedBasisStatesPass) {
    const cd c4[] = {0.5, {0.0, 0.5}, -0.5, {0.0, -0.5}};
    EXPECT_TRUE(verify_masking(abelian_d4_scheme().encode(c4), kAbelian).passed);
    const cd c3[] = {{0.6, 0.0}, {0.0, 0.48}, {0.64, 0.0}};
    const auto r = verify_masking(ising_cyclic_scheme(1).encode(c3), kIsing);
    EXPECT_TRUE(r.passed);
    EXPECT_LE(r.max_deviation(), 1e-12);
    EXPECT_THROW(verify_masking(StateVector::basis({S::vac, S::vac}), kIsing), std::invalid_argument);
}

TEST(VerifyMasking, RecordCarriesVerdictAndSeed) {
    auto r = verify_masking(ising_cyclic_scheme(1).encode_basis(2), kIsing);
    r.seed = 42;
    const auto rec = to_record(r);
    EXPECT_NE(rec.find("\"verdict\":\"pass\""), std::string::npos);
    EXPECT_NE(rec.find("\"seed\":42"), std::string::npos);
}

TEST(ConstantColumnA, ValidButDoesNotMask) {
    // A with constant columns passes triple validation, yet party A then holds
    // diag(|c_j|^2), which depends on the input.
    const auto f = cyclic_square(3, CycleDirection::forward);
    const auto b = cyclic_square(3, CycleDirection::backward);
    const MaskingScheme scheme(AnyonModel::ising(1), {constant_column_square(3), f, b});
    const cd c[] = {1.0, 0.0, 0.0};
    const auto r = verify_masking(scheme.encode(c), kIsing);
    EXPECT_FALSE(r.passed);
    EXPECT_GT(r.deviations[0], 0.5);
    EXPECT_LE(r.deviations[1], 1e-12);
    EXPECT_LE(r.deviations[2], 1e-12);
}

TEST(Bipartite, ControlFindsLeak) {
    for (const auto& model : {AnyonModel::abelian(), AnyonModel::ising(1)}) {
        const auto report = bipartite_control(model);
        EXPECT_GT(report.max_distance, 0.1) << model.name();
        EXPECT_EQ(report.probes.size(), model.dim() + 2);
    }
}

TEST(Bipartite, OracleAgreesOnBasisVersusUniform) {
    // Brute force: basis input |0> vs uniform superposition on the B register.
    const auto scheme = abelian_d4_scheme();
    const std::size_t d = 4;
    auto marg = [&](std::span<const cd> c) {
        std::vector<cd> rho(d * d, 0.0);
        // Amplitude of |b, c> is sum_j c_j/sqrt d over cells with (B, C) = (b, c).
        std::vector<cd> psi(d * d, 0.0);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) psi[kB4[j][k] * d + kC4[j][k]] += c[j] / 2.0;
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y)
                for (std::size_t z = 0; z < d; ++z) rho[x * d + y] += psi[x * d + z] * std::conj(psi[y * d + z]);
        return rho;
    };
    const cd basis[] = {1.0, 0.0, 0.0, 0.0};
    const cd uniform[] = {0.5, 0.5, 0.5, 0.5};
    const double ref = oracle::hs(marg(basis), marg(uniform));
    EXPECT_GT(ref, 0.1);

    const std::size_t keep[] = {0};
    const auto lib = hs_distance(partial_trace(bipartite_encode(scheme, basis), keep, kAbelian),
                                 partial_trace(bipartite_encode(scheme, uniform), keep, kAbelian));
    EXPECT_NEAR(lib, ref, 1e-14);
    EXPECT_LE(bipartite_control(scheme).max_distance + 1e-15, 1.0 * std::sqrt(2.0));
    EXPECT_GE(bipartite_control(scheme).max_distance, ref - 1e-15);
}

TEST(Bipartite, IdenticalInputsHaveZeroDistance) {
    const auto scheme = ising_cyclic_scheme(1);
    const cd c[] = {0.6, {0.0, 0.8}, 0.0};
    const std::size_t keep[] = {1};
    const auto a = partial_trace(bipartite_encode(scheme, c), keep, kIsing);
    EXPECT_EQ(hs_distance(a, a), 0.0);
}

TEST(Seeds, TrialSeedsAreDeterministicAndDistinct) {
    EXPECT_EQ(trial_seed(7, 3), trial_seed(7, 3));
    EXPECT_NE(trial_seed(7, 3), trial_seed(7, 4));
    EXPECT_NE(trial_seed(7, 3), trial_seed(8, 3));
    EXPECT_EQ(random_unit_coeffs(4, 11), random_unit_coeffs(4, 11));
    double n2 = 0.0;
    for (auto c : random_unit_coeffs(5, 12)) n2 += std::norm(c);
    EXPECT_NEAR(n2, 1.0, 1e-15);
}

// ---------------------------------------------------------------------------
// Properties

TEST(MaskerProperty, EncoderMatchesDenseOracle) {
    oracle::Gen gen(5150);
    for (int t = 0; t < 200; ++t) {
        const auto c4 = gen.unit_vector(4);
        const auto lib4 = oracle::to_dense(abelian_d4_scheme().encode(c4), kAbelian);
        const auto ref4 = oracle::encode(kA4, kB4, kC4, c4);
        EXPECT_LE(oracle::hs(lib4.v, ref4.v), 1e-15);

        const auto c3 = gen.unit_vector(3);
        const auto lib3 = oracle::to_dense(ising_cyclic_scheme(1).encode(c3), kIsing);
        const auto ref3 = oracle::encode(kA3, kB3, kC3, c3);
        EXPECT_LE(oracle::hs(lib3.v, ref3.v), 1e-15);
    }
}

TEST(MaskerProperty, Isometry) {
    oracle::Gen gen(31337);
    for (const auto& scheme : {abelian_d4_scheme(), ising_cyclic_scheme(1)}) {
        const std::size_t d = scheme.order();
        for (int t = 0; t < 100; ++t) {
            const auto x = gen.unit_vector(d), y = gen.unit_vector(d);
            cd xy = 0.0;
            for (std::size_t j = 0; j < d; ++j) xy += std::conj(x[j]) * y[j];
            EXPECT_NEAR(std::abs(inner(scheme.encode(x), scheme.encode(y)) - xy), 0.0, 1e-12);
        }
    }
}

TEST(MaskerProperty, RandomInputsMask) {
    for (const auto& scheme : {abelian_d4_scheme(), ising_cyclic_scheme(1), ising_cyclic_scheme(3)}) {
        for (std::uint64_t t = 0; t < 1000; ++t) {
            const auto s = trial_seed(2024, t);
            const auto c = random_unit_coeffs(scheme.order(), s);
            const auto state = scheme.encode(c);
            const auto r = verify_masking(state, scheme.alphabet());
            ASSERT_TRUE(r.passed) << scheme.model().name() << " trial " << t;
            if (t % 50 == 0) {
                EXPECT_LE(max_marginal_deviation(oracle::to_dense(state, scheme.alphabet())), 1e-12);
            }
        }
    }
}

TEST(MaskerProperty, MarginalsAreInputIndependent) {
    oracle::Gen gen(99);
    for (const auto& scheme : {abelian_d4_scheme(), ising_cyclic_scheme(1)}) {
        for (int t = 0; t < 100; ++t) {
            const auto r1 = verify_masking(scheme.encode(gen.unit_vector(scheme.order())), scheme.alphabet());
            const auto r2 = verify_masking(scheme.encode(gen.unit_vector(scheme.order())), scheme.alphabet());
            for (std::size_t p = 0; p < 3; ++p) EXPECT_LE(hs_distance(r1.marginals[p], r2.marginals[p]), 2e-12);
        }
    }
}

TEST(MaskerProperty, SwappingBAndCStillMasks) {
    for (const auto& scheme : {abelian_d4_scheme(), ising_cyclic_scheme(1)}) {
        const auto swapped = scheme.with_bc_swapped();
        EXPECT_TRUE(validate_triple(swapped.triple()).passed());
        for (std::uint64_t t = 0; t < 200; ++t) {
            const auto c = random_unit_coeffs(scheme.order(), trial_seed(5, t));
            EXPECT_TRUE(verify_masking(swapped.encode(c), swapped.alphabet()).passed);
        }
    }
}

TEST(MaskerProperty, ThreeMolsSchemeMasks) {
    const auto t = fixed_triple_d4();
    const auto a = Square::from_rows({{0, 1, 2, 3}, {2, 3, 0, 1}, {3, 2, 1, 0}, {1, 0, 3, 2}});
    const MaskingScheme scheme(AnyonModel::abelian(), {a, t.b, t.c});
    for (std::uint64_t k = 0; k < 200; ++k) {
        const auto c = random_unit_coeffs(4, trial_seed(6, k));
        EXPECT_TRUE(verify_masking(scheme.encode(c), kAbelian).passed);
    }
}
