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

// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "anymask/braid.hpp"
#include "anymask/latin.hpp"
#include "anymask/masker.hpp"
#include "anymask/teleport.hpp"
#include "anymask_cli/campaign.hpp"

using namespace anymask;
using S = Sector;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 20240607;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

std::string sci(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

Outcome model_data() {
    Outcome out;
    const auto ab = AnyonModel::abelian();
    struct Entry {
        Sector a, b, c;
        int k;
    };
    const Entry abelian[] = {{S::e, S::e, S::vac, 0},   {S::m, S::m, S::vac, 0},   {S::eps, S::eps, S::vac, 8},
                             {S::e, S::m, S::eps, 0},   {S::m, S::e, S::eps, 8},   {S::eps, S::m, S::e, 0},
                             {S::m, S::eps, S::e, 8},   {S::e, S::eps, S::m, 0},   {S::eps, S::e, S::m, 8}};
    for (const auto& [a, b, c, k] : abelian)
        out.require(ab.r_phase(a, b, c).eighths() == k,
                    "abelian R^{" + std::string(to_string(a)) + std::string(to_string(b)) + "}_" + std::string(to_string(c)));
    out.require(ab.monodromy(S::e, S::m, S::eps) == Phase::minus_one(), "monodromy(e,m,eps)");

    const auto is = AnyonModel::ising(1);
    const Entry ising[] = {{S::sigma, S::sigma, S::vac, 15}, {S::sigma, S::sigma, S::eps, 3},
                           {S::sigma, S::eps, S::sigma, 12}, {S::eps, S::sigma, S::sigma, 12},
                           {S::eps, S::eps, S::vac, 8}};
    for (const auto& [a, b, c, k] : ising)
        out.require(is.r_phase(a, b, c).eighths() == k,
                    "ising R^{" + std::string(to_string(a)) + std::string(to_string(b)) + "}_" + std::string(to_string(c)));
    out.require(is.theta(S::sigma).eighths() == 1, "theta_sigma");
    out.require(is.kappa(S::sigma) == 1, "kappa_sigma");
    out.require(is.monodromy(S::sigma, S::sigma, S::vac).eighths() == 14, "monodromy(sigma,sigma,vac)");
    out.require(validate_model(ab).passed() && validate_model(is).passed(), "validate_model on shipped models");
    if (out.ok) out.detail = "all entries exact";
    return out;
}

Outcome masking_campaign(const MaskingScheme& scheme) {
    Outcome out;
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 1000; ++t) {
        const auto c = random_unit_coeffs(scheme.order(), trial_seed(kSeed, t));
        const auto r = verify_masking(scheme.encode(c), scheme.alphabet(), 1e-12);
        worst = std::max(worst, r.max_deviation());
        out.require(r.passed, "trial " + std::to_string(t));
    }
    out.detail = (out.ok ? "" : out.detail + "; ") + "max deviation " + sci(worst) + " over 1000 trials";
    return out;
}

void sequences(const std::vector<BraidOp>& ops, std::size_t max_len, std::vector<BraidOp>& prefix,
               const std::function<void(const std::vector<BraidOp>&)>& visit) {
    visit(prefix);
    if (prefix.size() == max_len) return;
    for (const auto& op : ops) {
        prefix.push_back(op);
        sequences(ops, max_len, prefix, visit);
        prefix.pop_back();
    }
}

Outcome braid_invariance() {
    Outcome out;
    std::size_t count = 0;
    double worst = 0.0;
    for (const auto& scheme : {abelian_d4_scheme(), ising_cyclic_scheme(1)}) {
        std::vector<BraidOp> prefix;
        sequences(elementary_ops(scheme.model()), 3, prefix, [&](const std::vector<BraidOp>& seq) {
            const auto r = verify_invariance(scheme, seq, 100, 2e-12, kSeed);
            worst = std::max(worst, r.post_worst.max_deviation());
            out.require(r.passed, scheme.model().name() + " [" + format_ops(seq) + "]");
            ++count;
        });
    }

    // Circle(B around A) on the encoded Ising state, against its closed form.
    const auto c = random_unit_coeffs(3, kSeed);
    const auto state = circle(AnyonModel::ising(1), ising_cyclic_scheme(1).encode(c), Party::B, Party::A);
    const cd w = std::polar(1.0, -kPi / 4.0);
    const std::vector<std::pair<std::vector<Sector>, cd>> expected{
        {{S::vac, S::vac, S::vac}, c[0]},        {{S::eps, S::eps, S::eps}, -c[0]},
        {{S::sigma, S::sigma, S::sigma}, w * c[0]}, {{S::vac, S::sigma, S::eps}, c[1]},
        {{S::eps, S::vac, S::sigma}, c[1]},      {{S::sigma, S::eps, S::vac}, -c[1]},
        {{S::vac, S::eps, S::sigma}, c[2]},      {{S::eps, S::sigma, S::vac}, -c[2]},
        {{S::sigma, S::vac, S::eps}, c[2]}};
    double termwise = 0.0;
    for (const auto& [labels, coeff] : expected)
        termwise = std::max(termwise, std::abs(state.amplitude(BasisKet(labels)) - coeff / std::sqrt(3.0)));
    out.require(state.size() == expected.size(), "circle(B,A) has extra terms");
    out.require(termwise <= 1e-12, "circle(B,A) termwise error " + sci(termwise));

    const std::string summary = std::to_string(count) + " sequences, max deviation " + sci(worst) +
                                "; circle(B,A) termwise error " + sci(termwise);
    out.detail = out.ok ? summary : out.detail + "; " + summary;
    return out;
}

Outcome orthogonality() {
    Outcome out;
    double worst = 0.0;
    for (const auto& scheme : {abelian_d4_scheme(), ising_cyclic_scheme(1)})
        for (std::size_t i = 0; i < scheme.order(); ++i)
            for (std::size_t j = 0; j < scheme.order(); ++j) {
                const double want = i == j ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(inner(scheme.encode_basis(i), scheme.encode_basis(j)) - want));
            }
    for (int i = 1; i <= 3; ++i) {
        worst = std::max(worst, std::abs(norm(teleport::chi(i)) - 3.0));
        for (int j = i + 1; j <= 3; ++j) worst = std::max(worst, std::abs(inner(teleport::chi(i), teleport::chi(j))));
    }
    out.require(worst <= 1e-12, "error " + sci(worst));
    if (out.ok) out.detail = "max error " + sci(worst);
    return out;
}

Outcome teleportation() {
    Outcome out;
    double p_err = 0.0, f_err = 0.0, bob = 0.0;
    for (std::uint64_t t = 0; t < 100; ++t) {
        const auto c = random_unit_coeffs(3, trial_seed(kSeed + 1, t));
        const auto run = teleport::run_teleport(c);
        bob = std::max(bob, run.bob_marginal_deviation);
        for (const auto& o : run.outcomes) {
            p_err = std::max(p_err, std::abs(o.probability - 1.0 / 3.0));
            f_err = std::max(f_err, std::abs(o.fidelity - 1.0));
        }
    }
    out.require(p_err <= 1e-12, "probability error " + sci(p_err));
    out.require(f_err <= 1e-12, "fidelity error " + sci(f_err));
    out.require(bob <= 1e-12, "register-3 marginal deviation " + sci(bob));
    if (out.ok)
        out.detail = "100 inputs; probability error " + sci(p_err) + ", fidelity error " + sci(f_err) +
                     ", register-3 deviation " + sci(bob);
    return out;
}

Outcome negative_controls() {
    Outcome out;
    const double ab = bipartite_control(AnyonModel::abelian()).max_distance;
    const double is = bipartite_control(AnyonModel::ising(1)).max_distance;
    out.require(ab > 0.1, "abelian bipartite control " + sci(ab));
    out.require(is > 0.1, "ising bipartite control " + sci(is));
    out.require(!find_mols_pair(2).has_value(), "find_mols_pair(2) found a pair");

    const auto bad_ab = AnyonModel::abelian().with_r_phase(S::e, S::m, S::eps, Phase::minus_one());
    const auto bad_is = AnyonModel::ising(1).with_r_phase(S::sigma, S::sigma, S::vac, Phase::one());
    const auto r_ab = validate_model(bad_ab);
    const auto r_is = validate_model(bad_is);
    out.require(!r_ab.passed() && !r_ab.violations.front().check.empty(), "corrupted abelian table accepted");
    out.require(!r_is.passed() && !r_is.violations.front().check.empty(), "corrupted ising table accepted");
    if (out.ok)
        out.detail = "bipartite " + sci(ab) + " / " + sci(is) + "; no order-2 pair; corrupted tables flagged " +
                     r_ab.violations.front().check + ", " + r_is.violations.front().check;
    return out;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Outcome determinism(const char* cli) {
    Outcome out;
    cli::CampaignConfig config;
    config.model = "ising";
    config.trials = 1000;
    config.seed = 7;
    config.format = cli::Format::structured;
    const auto a = cli::run_verify(config).structured;
    const auto b = cli::run_verify(config).structured;
    out.require(!a.empty() && a == b, "in-process reports differ");

    if (cli != nullptr) {
        const auto dir = std::filesystem::temp_directory_path();
        const auto f1 = dir / "anymask_acceptance_1.json";
        const auto f2 = dir / "anymask_acceptance_2.json";
        for (const auto& f : {f1, f2}) {
            const std::string cmd = std::string("\"") + cli + "\" verify --model ising --trials 1000 --seed 7 --out \"" +
                                    f.string() + "\" > /dev/null";
            out.require(std::system(cmd.c_str()) == 0, "cli run failed");
        }
        const auto r1 = slurp(f1), r2 = slurp(f2);
        out.require(!r1.empty() && r1 == r2, "cli reports differ");
        out.require(r1 == a, "cli report differs from in-process report");
        std::filesystem::remove(f1);
        std::filesystem::remove(f2);
    }
    if (out.ok) out.detail = std::string("byte-identical (") + std::to_string(a.size()) + " bytes" + (cli ? ", cli and library)" : ")");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const char* cli = argc > 1 ? argv[1] : nullptr;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"model data", model_data},
        {"masking abelian", [] { return masking_campaign(abelian_d4_scheme()); }},
        {"masking ising", [] { return masking_campaign(ising_cyclic_scheme(1)); }},
        {"braid invariance", braid_invariance},
        {"orthogonality", orthogonality},
        {"teleportation", teleportation},
        {"negative controls", negative_controls},
        {"determinism", [cli] { return determinism(cli); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << ": " << o.detail << '\n';
        failed += o.ok ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
