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

#include "anymask/anyons.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace anymask {

std::complex<double> Phase::value() const {
    switch (k_) {
        case 0: return {1.0, 0.0};
        case 4: return {0.0, 1.0};
        case 8: return {-1.0, 0.0};
        case 12: return {0.0, -1.0};
        default: break;
    }
    const double angle = std::numbers::pi * k_ / 8.0;
    return {std::cos(angle), std::sin(angle)};
}

std::string to_string(Phase p) {
    switch (p.eighths()) {
        case 0: return "1";
        case 4: return "i";
        case 8: return "-1";
        case 12: return "-i";
        default: return "exp(i*pi*" + std::to_string(p.eighths()) + "/8)";
    }
}

bool FusionOutcome::contains(Sector s) const {
    return std::find(channels.begin(), channels.end(), s) != channels.end();
}

namespace {

int normalize_chern(int c) { return ((c % 16) + 16) % 16; }

FusionOutcome outcome(std::initializer_list<Sector> s) { return FusionOutcome{std::vector<Sector>(s)}; }

}  // namespace

int ising_kappa(int chern) {
    const int c = normalize_chern(chern);
    return ((c * c - 1) / 8) % 2 == 0 ? 1 : -1;
}

AnyonModel AnyonModel::abelian() {
    using S = Sector;
    AnyonModel m;
    m.kind_ = ModelKind::abelian_c0;
    m.chern_ = 0;
    m.alphabet_ = {S::vac, S::e, S::m, S::eps};

    // Z2 x Z2 group law: e = (1,0), m = (0,1), eps = (1,1).
    auto bits = [](S s) -> int {
        switch (s) {
            case S::e: return 1;
            case S::m: return 2;
            case S::eps: return 3;
            default: return 0;
        }
    };
    const S from_bits[] = {S::vac, S::e, S::m, S::eps};
    for (S a : m.alphabet_)
        for (S b : m.alphabet_) m.fusion_[{a, b}] = outcome({from_bits[bits(a) ^ bits(b)]});

    for (S x : m.alphabet_) {
        m.r_[{S::vac, x, x}] = Phase::one();
        m.r_[{x, S::vac, x}] = Phase::one();
    }
    m.r_[{S::e, S::e, S::vac}] = Phase::one();
    m.r_[{S::m, S::m, S::vac}] = Phase::one();
    m.r_[{S::eps, S::eps, S::vac}] = Phase::minus_one();
    m.r_[{S::e, S::m, S::eps}] = Phase::one();
    m.r_[{S::m, S::e, S::eps}] = Phase::minus_one();
    m.r_[{S::e, S::eps, S::m}] = Phase::one();
    m.r_[{S::eps, S::e, S::m}] = Phase::minus_one();
    m.r_[{S::eps, S::m, S::e}] = Phase::one();
    m.r_[{S::m, S::eps, S::e}] = Phase::minus_one();

    for (S x : m.alphabet_) {
        m.theta_[x] = Phase::one();
        m.kappa_[x] = 1;
    }
    return m;
}

AnyonModel AnyonModel::ising(int chern) {
    using S = Sector;
    const int c = normalize_chern(chern);
    if (c % 2 == 0) {
        throw std::invalid_argument("Ising-type model requires an odd Chern number, got " +
                                    std::to_string(chern));
    }
    AnyonModel m;
    m.kind_ = ModelKind::ising_like;
    m.chern_ = c;
    m.alphabet_ = {S::vac, S::eps, S::sigma};

    for (S x : m.alphabet_) {
        m.fusion_[{S::vac, x}] = outcome({x});
        m.fusion_[{x, S::vac}] = outcome({x});
    }
    m.fusion_[{S::eps, S::eps}] = outcome({S::vac});
    m.fusion_[{S::eps, S::sigma}] = outcome({S::sigma});
    m.fusion_[{S::sigma, S::eps}] = outcome({S::sigma});
    m.fusion_[{S::sigma, S::sigma}] = outcome({S::vac, S::eps});

    const int kappa = ising_kappa(c);
    const int kappa_shift = kappa == 1 ? 0 : 8;
    for (S x : m.alphabet_) {
        m.r_[{S::vac, x, x}] = Phase::one();
        m.r_[{x, S::vac, x}] = Phase::one();
    }
    m.r_[{S::eps, S::eps, S::vac}] = Phase::minus_one();
    m.r_[{S::sigma, S::sigma, S::vac}] = Phase::from_eighths(kappa_shift - c);
    m.r_[{S::sigma, S::sigma, S::eps}] = Phase::from_eighths(kappa_shift + 3 * c);
    m.r_[{S::eps, S::sigma, S::sigma}] = Phase::from_eighths(8 + 4 * c);
    m.r_[{S::sigma, S::eps, S::sigma}] = Phase::from_eighths(8 + 4 * c);

    m.theta_[S::vac] = Phase::one();
    m.theta_[S::eps] = Phase::minus_one();
    m.theta_[S::sigma] = Phase::from_eighths(c);
    m.kappa_[S::vac] = 1;
    m.kappa_[S::eps] = 1;
    m.kappa_[S::sigma] = kappa;
    return m;
}

std::string AnyonModel::name() const {
    return kind_ == ModelKind::abelian_c0 ? std::string("abelian") : "ising:" + std::to_string(chern_);
}

bool AnyonModel::contains(Sector s) const {
    return std::find(alphabet_.begin(), alphabet_.end(), s) != alphabet_.end();
}

std::size_t AnyonModel::index_of(Sector s) const {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), s);
    if (it == alphabet_.end()) {
        throw std::invalid_argument(std::string("sector ") + std::string(to_string(s)) +
                                    " is not in the " + name() + " alphabet");
    }
    return static_cast<std::size_t>(it - alphabet_.begin());
}

void AnyonModel::require(Sector s, const char* what) const {
    if (!contains(s)) {
        throw std::invalid_argument(std::string(what) + ": sector " + std::string(to_string(s)) +
                                    " is not in the " + name() + " alphabet");
    }
}

FusionOutcome AnyonModel::fuse(Sector a, Sector b) const {
    require(a, "fuse");
    require(b, "fuse");
    auto it = fusion_.find({a, b});
    if (it == fusion_.end()) throw std::logic_error("fuse: missing fusion table entry");
    return it->second;
}

Phase AnyonModel::r_phase(Sector a, Sector b, Sector c) const {
    require(c, "r_phase");
    if (!fuse(a, b).contains(c)) {
        throw std::invalid_argument("r_phase: " + std::string(to_string(c)) +
                                    " is not a fusion channel of " + std::string(to_string(a)) +
                                    " x " + std::string(to_string(b)));
    }
    auto it = r_.find({a, b, c});
    if (it == r_.end()) throw std::logic_error("r_phase: missing R table entry");
    return it->second;
}

Phase AnyonModel::monodromy(Sector a, Sector b, Sector c) const {
    return r_phase(b, a, c) * r_phase(a, b, c);
}

Phase AnyonModel::theta(Sector a) const {
    require(a, "theta");
    return theta_.at(a);
}

int AnyonModel::kappa(Sector a) const {
    require(a, "kappa");
    return kappa_.at(a);
}

AnyonModel AnyonModel::with_r_phase(Sector a, Sector b, Sector c, Phase value) const {
    AnyonModel copy = *this;
    copy.r_[{a, b, c}] = value;
    return copy;
}

AnyonModel AnyonModel::with_fusion(Sector a, Sector b, FusionOutcome value) const {
    AnyonModel copy = *this;
    std::sort(value.channels.begin(), value.channels.end());
    copy.fusion_[{a, b}] = std::move(value);
    return copy;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

std::string label(Sector s) { return std::string(to_string(s)); }

std::string triple(Sector a, Sector b, Sector c) {
    return "R^{" + label(a) + "," + label(b) + "}_" + label(c);
}

void expect_phase(ValidationReport& report, const AnyonModel& m, const char* check, Sector a,
                  Sector b, Sector c, Phase want) {
    auto it = m.r_table().find({a, b, c});
    if (it == m.r_table().end()) return;  // reported by r-defined
    if (!(it->second == want)) {
        report.fail(check, triple(a, b, c) + " = " + to_string(it->second) + ", expected " +
                               to_string(want));
    }
}

std::vector<Sector> fuse_flat(const AnyonModel& m, const std::vector<Sector>& lhs, Sector rhs,
                              bool rhs_first) {
    std::vector<Sector> out;
    for (Sector x : lhs) {
        auto it = m.fusion_table().find(rhs_first ? std::pair{rhs, x} : std::pair{x, rhs});
        if (it == m.fusion_table().end()) continue;
        out.insert(out.end(), it->second.channels.begin(), it->second.channels.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ValidationReport validate_model(const AnyonModel& m) {
    ValidationReport report;
    const auto& alpha = m.alphabet();

    if (alpha.empty() || alpha.front() != Sector::vac) {
        report.fail("alphabet-order", "alphabet must start with the vacuum");
    }
    if (!std::is_sorted(alpha.begin(), alpha.end()) ||
        std::adjacent_find(alpha.begin(), alpha.end()) != alpha.end()) {
        report.fail("alphabet-order", "alphabet is not strictly increasing");
    }

    bool fusion_complete = true;
    for (Sector a : alpha) {
        for (Sector b : alpha) {
            auto it = m.fusion_table().find({a, b});
            if (it == m.fusion_table().end() || it->second.channels.empty()) {
                report.fail("fusion-defined", label(a) + " x " + label(b) + " has no channels");
                fusion_complete = false;
                continue;
            }
            for (Sector c : it->second.channels) {
                if (!m.contains(c)) {
                    report.fail("fusion-defined", label(a) + " x " + label(b) +
                                                      " yields foreign sector " + label(c));
                    fusion_complete = false;
                }
            }
        }
    }
    if (!fusion_complete) return report;

    for (Sector a : alpha) {
        for (Sector b : alpha) {
            const auto& ab = m.fusion_table().at({a, b});
            if (!(ab == m.fusion_table().at({b, a}))) {
                report.fail("fusion-commutative", label(a) + " x " + label(b));
            }
            const bool sigma_pair = a == Sector::sigma && b == Sector::sigma;
            if (ab.size() > 2 || (ab.size() == 2 && !sigma_pair)) {
                report.fail("fusion-multiplicity", label(a) + " x " + label(b) + " has " +
                                                       std::to_string(ab.size()) + " channels");
            }
            for (Sector c : ab.channels) {
                auto it = m.r_table().find({a, b, c});
                if (it == m.r_table().end()) {
                    report.fail("r-defined", triple(a, b, c) + " missing");
                } else if (std::abs(std::abs(it->second.value()) - 1.0) > 1e-15) {
                    report.fail("r-unit-modulus", triple(a, b, c));
                }
            }
        }
        if (!(m.fusion_table().at({Sector::vac, a}) == FusionOutcome{{a}})) {
            report.fail("vacuum-unit", "vac x " + label(a) + " != " + label(a));
        }
        if (!m.fusion_table().at({a, a}).contains(Sector::vac)) {
            report.fail("self-inverse", "vac not in " + label(a) + " x " + label(a));
        }
    }
    for (const auto& [key, phase] : m.r_table()) {
        auto [a, b, c] = key;
        if (!m.contains(a) || !m.contains(b) || !m.fusion_table().at({a, b}).contains(c)) {
            report.fail("r-defined", triple(a, b, c) + " is not an allowed fusion channel");
        }
    }
    for (Sector a : alpha)
        for (Sector b : alpha)
            for (Sector c : alpha) {
                auto lhs = fuse_flat(m, m.fusion_table().at({a, b}).channels, c, false);
                auto rhs = fuse_flat(m, m.fusion_table().at({b, c}).channels, a, true);
                if (lhs != rhs) {
                    report.fail("fusion-associative",
                                "(" + label(a) + " x " + label(b) + ") x " + label(c));
                }
            }
    for (Sector x : alpha) {
        expect_phase(report, m, "r-vacuum", Sector::vac, x, x, Phase::one());
        expect_phase(report, m, "r-vacuum", x, Sector::vac, x, Phase::one());
        if (!m.theta_table().contains(x)) report.fail("spin-defined", "theta " + label(x) + " missing");
        if (!m.kappa_table().contains(x)) report.fail("spin-defined", "kappa " + label(x) + " missing");
    }
    if (!report.passed()) return report;

    auto monodromy = [&](Sector a, Sector b, Sector c) { return m.monodromy(a, b, c); };

    if (m.kind() == ModelKind::abelian_c0) {
        for (Sector x : alpha) {
            if (!(m.theta_table().at(x) == Phase::one())) report.fail("abelian-theta", label(x));
            if (m.kappa_table().at(x) != 1) report.fail("abelian-kappa", label(x));
        }
        for (Sector a : alpha) {
            for (Sector b : alpha) {
                if (a == Sector::vac || b == Sector::vac) continue;
                Sector c = m.fusion_table().at({a, b}).channels.front();
                Phase want = a == b ? Phase::one() : Phase::minus_one();
                Phase got = monodromy(a, b, c);
                if (!(got == want)) {
                    report.fail(a == b ? "abelian-self-monodromy" : "abelian-half-monodromy",
                                "monodromy(" + label(a) + "," + label(b) + ") = " + to_string(got));
                }
            }
        }
        using S = Sector;
        const struct {
            S a, b, c;
            Phase want;
        } table[] = {
            {S::e, S::e, S::vac, Phase::one()},       {S::m, S::m, S::vac, Phase::one()},
            {S::eps, S::eps, S::vac, Phase::minus_one()}, {S::e, S::m, S::eps, Phase::one()},
            {S::m, S::e, S::eps, Phase::minus_one()},   {S::eps, S::m, S::e, Phase::one()},
            {S::m, S::eps, S::e, Phase::minus_one()},   {S::e, S::eps, S::m, Phase::one()},
            {S::eps, S::e, S::m, Phase::minus_one()},
        };
        for (const auto& t : table) expect_phase(report, m, "abelian-r-table", t.a, t.b, t.c, t.want);
    } else {
        const int c = m.chern();
        const int kappa = ising_kappa(c);
        const int shift = kappa == 1 ? 0 : 8;
        if (!(m.theta_table().at(Sector::vac) == Phase::one()) ||
            !(m.theta_table().at(Sector::eps) == Phase::minus_one()) ||
            !(m.theta_table().at(Sector::sigma) == Phase::from_eighths(c))) {
            report.fail("ising-theta", "theta table differs from (1, -1, exp(i*pi*c/8))");
        }
        if (m.kappa_table().at(Sector::vac) != 1 || m.kappa_table().at(Sector::eps) != 1 ||
            m.kappa_table().at(Sector::sigma) != kappa) {
            report.fail("ising-kappa", "kappa table differs from (1, 1, (-1)^((c^2-1)/8))");
        }
        expect_phase(report, m, "ising-r-eps-eps", Sector::eps, Sector::eps, Sector::vac,
                     Phase::minus_one());
        expect_phase(report, m, "ising-r-sigma-sigma-vac", Sector::sigma, Sector::sigma,
                     Sector::vac, Phase::from_eighths(shift - c));
        expect_phase(report, m, "ising-r-sigma-sigma-eps", Sector::sigma, Sector::sigma,
                     Sector::eps, Phase::from_eighths(shift + 3 * c));
        expect_phase(report, m, "ising-r-eps-sigma", Sector::eps, Sector::sigma, Sector::sigma,
                     Phase::from_eighths(8 + 4 * c));
        expect_phase(report, m, "ising-r-eps-sigma", Sector::sigma, Sector::eps, Sector::sigma,
                     Phase::from_eighths(8 + 4 * c));
        if (!(monodromy(Sector::eps, Sector::sigma, Sector::sigma) == Phase::minus_one())) {
            report.fail("ising-eps-sigma-monodromy",
                        "monodromy(eps,sigma) = " +
                            to_string(monodromy(Sector::eps, Sector::sigma, Sector::sigma)));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Text form

std::string serialize_model(const AnyonModel& m) {
    std::ostringstream os;
    os << "model " << m.name() << '\n';
    for (const auto& [key, out] : m.fusion_table()) {
        os << "fuse " << to_string(key.first) << ' ' << to_string(key.second) << " ->";
        for (Sector c : out.channels) os << ' ' << to_string(c);
        os << '\n';
    }
    for (const auto& [key, phase] : m.r_table()) {
        auto [a, b, c] = key;
        os << "R " << to_string(a) << ' ' << to_string(b) << ' ' << to_string(c) << ' '
           << phase.eighths() << '\n';
    }
    for (const auto& [s, phase] : m.theta_table())
        os << "theta " << to_string(s) << ' ' << phase.eighths() << '\n';
    for (const auto& [s, k] : m.kappa_table())
        os << "kappa " << to_string(s) << ' ' << (k > 0 ? "+1" : "-1") << '\n';
    return os.str();
}

namespace {

Sector expect_sector(std::istringstream& in, std::size_t line_no) {
    std::string word;
    if (!(in >> word)) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": missing sector");
    }
    auto s = parse_sector(word);
    if (!s) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown sector '" +
                                    word + "'");
    }
    return *s;
}

}  // namespace

AnyonModel parse_model(std::string_view text) {
    std::istringstream all{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<AnyonModel> model;
    while (std::getline(all, line)) {
        ++line_no;
        std::istringstream in(line);
        std::string tag;
        if (!(in >> tag) || tag.starts_with('#')) continue;
        if (tag == "model") {
            std::string name;
            in >> name;
            model = model_from_name(name);
            model->fusion_.clear();
            model->r_.clear();
            model->theta_.clear();
            model->kappa_.clear();
            continue;
        }
        if (!model) throw std::invalid_argument("model table must start with a 'model' line");
        if (tag == "fuse") {
            Sector a = expect_sector(in, line_no);
            Sector b = expect_sector(in, line_no);
            std::string arrow;
            in >> arrow;
            if (arrow != "->") {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": expected '->'");
            }
            FusionOutcome out;
            std::string word;
            while (in >> word) {
                auto s = parse_sector(word);
                if (!s) throw std::invalid_argument("line " + std::to_string(line_no) + ": bad sector");
                out.channels.push_back(*s);
            }
            std::sort(out.channels.begin(), out.channels.end());
            model->fusion_[{a, b}] = out;
        } else if (tag == "R") {
            Sector a = expect_sector(in, line_no);
            Sector b = expect_sector(in, line_no);
            Sector c = expect_sector(in, line_no);
            int k = 0;
            if (!(in >> k)) throw std::invalid_argument("line " + std::to_string(line_no) + ": bad phase");
            model->r_[{a, b, c}] = Phase::from_eighths(k);
        } else if (tag == "theta") {
            Sector a = expect_sector(in, line_no);
            int k = 0;
            if (!(in >> k)) throw std::invalid_argument("line " + std::to_string(line_no) + ": bad phase");
            model->theta_[a] = Phase::from_eighths(k);
        } else if (tag == "kappa") {
            Sector a = expect_sector(in, line_no);
            int k = 0;
            if (!(in >> k) || (k != 1 && k != -1)) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": kappa must be +1 or -1");
            }
            model->kappa_[a] = k;
        } else {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown entry '" + tag + "'");
        }
    }
    if (!model) throw std::invalid_argument("empty model table");
    return *model;
}

AnyonModel model_from_name(std::string_view name) {
    if (name == "abelian") return AnyonModel::abelian();
    if (name == "ising") return AnyonModel::ising(1);
    if (name.starts_with("ising:")) {
        auto rest = std::string(name.substr(6));
        std::size_t used = 0;
        int c = 0;
        try {
            c = std::stoi(rest, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != rest.size()) {
            throw std::invalid_argument("bad Chern number in model name '" + std::string(name) + "'");
        }
        return AnyonModel::ising(c);
    }
    throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

}  // namespace anymask
