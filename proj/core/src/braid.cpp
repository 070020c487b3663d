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

#include "anymask/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anymask {

char to_char(Party p) { return static_cast<char>('A' + static_cast<int>(p)); }

ChannelMode ChannelMode::resolved(Channel tag) {
    if (tag == Channel::untagged) throw std::invalid_argument("resolved channel mode needs a tag");
    return {Kind::resolved, tag};
}

BraidOp BraidOp::exchange(Party x, Party y, ChannelMode mode) {
    return {Kind::exchange, x, y, mode};
}
BraidOp BraidOp::circle(Party x, Party y) { return {Kind::circle, x, y, {}}; }
BraidOp BraidOp::tripartite() { return {Kind::tripartite, Party::A, Party::C, {}}; }

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

Sector channel_sector(Channel c) { return c == Channel::eps ? Sector::eps : Sector::vac; }

struct Branch {
    Channel tag;
    double weight;
};

// Fusion channels a sigma-sigma pair on a term with tag `current` may take.
std::vector<Branch> sigma_pair_branches(Channel current, ChannelMode mode) {
    if (current != Channel::untagged) {
        if (mode.kind == ChannelMode::Kind::resolved && mode.tag != current) {
            throw std::invalid_argument("tag conflict: term is tagged " +
                                        std::string(to_string(current)) + ", op requests " +
                                        std::string(to_string(mode.tag)));
        }
        return {{current, 1.0}};
    }
    if (mode.kind == ChannelMode::Kind::resolved) return {{mode.tag, 1.0}};
    return {{Channel::vac, kInvSqrt2}, {Channel::eps, kInvSqrt2}};
}

void require_registers(const StateVector& state, const char* what) {
    if (state.register_count() != 3) {
        throw std::invalid_argument(std::string(what) + ": expected 3 registers, got " +
                                    std::to_string(state.register_count()));
    }
}

bool is_sigma_pair(Sector a, Sector b) { return a == Sector::sigma && b == Sector::sigma; }

Phase circling_phase(const AnyonModel& model, Sector a, Sector b, Sector c) {
    if (model.kind() == ModelKind::ising_like && a == Sector::eps && b == Sector::eps) {
        return model.r_phase(a, b, c);
    }
    return model.monodromy(a, b, c);
}

}  // namespace

void check_op(const AnyonModel& model, const BraidOp& op) {
    switch (op.kind) {
        case BraidOp::Kind::exchange: {
            int gap = static_cast<int>(op.x) - static_cast<int>(op.y);
            if (gap != 1 && gap != -1) {
                throw std::invalid_argument(std::string("non-adjacent exchange ") + to_char(op.x) +
                                            to_char(op.y) +
                                            "; A-C exchange is the composite t3;xBC");
            }
            break;
        }
        case BraidOp::Kind::circle:
            if (op.x == op.y) throw std::invalid_argument("circle needs two distinct parties");
            break;
        case BraidOp::Kind::tripartite:
            if (model.kind() != ModelKind::ising_like) {
                throw std::invalid_argument("tripartite braid is defined only for Ising-type models");
            }
            break;
    }
}

StateVector exchange(const AnyonModel& model, const StateVector& state, Party x, Party y,
                     ChannelMode mode) {
    require_registers(state, "exchange");
    check_op(model, BraidOp::exchange(x, y, mode));
    const std::size_t lo = std::min(index(x), index(y));
    const std::size_t hi = std::max(index(x), index(y));

    StateVector out(3);
    for (const auto& [ket, amp] : state.terms()) {
        const Sector a = ket[lo], b = ket[hi];
        BasisKet swapped = ket;
        swapped.registers[lo] = b;
        swapped.registers[hi] = a;
        if (is_sigma_pair(a, b)) {
            for (auto [tag, weight] : sigma_pair_branches(ket.channel, mode)) {
                swapped.channel = tag;
                out.add(swapped, amp * weight * model.r_phase(a, b, channel_sector(tag)).value());
            }
        } else {
            const Sector c = model.fuse(a, b).channels.front();
            out.add(swapped, amp * model.r_phase(a, b, c).value());
        }
    }
    return out;
}

StateVector circle(const AnyonModel& model, const StateVector& state, Party x, Party y) {
    require_registers(state, "circle");
    check_op(model, BraidOp::circle(x, y));
    StateVector out(3);
    for (const auto& [ket, amp] : state.terms()) {
        const Sector a = ket[index(x)], b = ket[index(y)];
        Phase phase;
        if (is_sigma_pair(a, b)) {
            phase = model.monodromy(a, b, channel_sector(ket.channel));
        } else {
            phase = circling_phase(model, a, b, model.fuse(a, b).channels.front());
        }
        out.add(ket, amp * phase.value());
    }
    return out;
}

StateVector tripartite_braid(const AnyonModel& model, const StateVector& state) {
    check_op(model, BraidOp::tripartite());
    require_registers(state, "tripartite_braid");
    const double kappa = model.kappa(Sector::sigma);
    const Phase r1 = model.r_phase(Sector::sigma, Sector::sigma, Sector::vac);

    constexpr std::pair<std::size_t, std::size_t> pairs[] = {{0, 1}, {1, 2}, {0, 2}};
    StateVector out(3);
    for (const auto& [ket, amp] : state.terms()) {
        const bool all_sigma =
            ket[0] == Sector::sigma && ket[1] == Sector::sigma && ket[2] == Sector::sigma;
        if (all_sigma) {
            for (auto [tag, weight] : sigma_pair_branches(ket.channel, ChannelMode::split())) {
                const Phase rt = model.r_phase(Sector::sigma, Sector::sigma, channel_sector(tag));
                BasisKet branch = ket;
                branch.channel = tag;
                out.add(branch, amp * weight * kappa * (r1 * rt).value());
            }
            continue;
        }
        // At most one sigma-sigma pair remains; it fixes the branch structure.
        std::vector<Branch> branches{{ket.channel, 1.0}};
        Phase fixed = Phase::one();
        bool has_sigma_pair = false;
        for (auto [i, j] : pairs) {
            if (is_sigma_pair(ket[i], ket[j])) {
                has_sigma_pair = true;
                branches = sigma_pair_branches(ket.channel, ChannelMode::split());
            } else {
                fixed = fixed * model.r_phase(ket[i], ket[j], model.fuse(ket[i], ket[j]).channels.front());
            }
        }
        for (auto [tag, weight] : branches) {
            Phase phase = fixed;
            if (has_sigma_pair) phase = phase * model.r_phase(Sector::sigma, Sector::sigma, channel_sector(tag));
            BasisKet branch = ket;
            branch.channel = tag;
            out.add(branch, amp * weight * phase.value());
        }
    }
    return out;
}

StateVector apply(const AnyonModel& model, const StateVector& state, const BraidOp& op) {
    switch (op.kind) {
        case BraidOp::Kind::exchange: return exchange(model, state, op.x, op.y, op.mode);
        case BraidOp::Kind::circle: return circle(model, state, op.x, op.y);
        case BraidOp::Kind::tripartite: return tripartite_braid(model, state);
    }
    throw std::logic_error("apply: unknown op kind");
}

StateVector apply(const AnyonModel& model, const StateVector& state, std::span<const BraidOp> ops) {
    StateVector current = state;
    for (const auto& op : ops) current = apply(model, current, op);
    return current;
}

// ---------------------------------------------------------------------------
// Op strings

namespace {

Party parse_party(char c, std::string_view token) {
    if (c >= 'A' && c <= 'C') return static_cast<Party>(c - 'A');
    throw std::invalid_argument("unknown party '" + std::string(1, c) + "' in op '" +
                                std::string(token) + "'");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

BraidOp parse_token(std::string_view token) {
    if (token == "t3") return BraidOp::tripartite();
    std::string_view body = token;
    std::string_view suffix;
    if (auto at = token.find('@'); at != std::string_view::npos) {
        body = token.substr(0, at);
        suffix = token.substr(at + 1);
    }
    if (body.size() != 3 || (body[0] != 'x' && body[0] != 'c')) {
        throw std::invalid_argument("unknown op token '" + std::string(token) + "'");
    }
    const Party x = parse_party(body[1], token);
    const Party y = parse_party(body[2], token);
    if (body[0] == 'c') {
        if (!suffix.empty()) {
            throw std::invalid_argument("circle op '" + std::string(token) + "' takes no channel");
        }
        BraidOp op = BraidOp::circle(x, y);
        if (x == y) throw std::invalid_argument("circle needs two distinct parties: '" + std::string(token) + "'");
        return op;
    }
    ChannelMode mode = ChannelMode::split();
    if (suffix == "vac") mode = ChannelMode::resolved(Channel::vac);
    else if (suffix == "eps") mode = ChannelMode::resolved(Channel::eps);
    else if (!suffix.empty()) {
        throw std::invalid_argument("unknown channel '" + std::string(suffix) + "' in op '" +
                                    std::string(token) + "'");
    }
    int gap = static_cast<int>(x) - static_cast<int>(y);
    if (gap != 1 && gap != -1) {
        throw std::invalid_argument("non-adjacent exchange '" + std::string(token) +
                                    "'; A-C exchange is the composite t3;xBC");
    }
    return BraidOp::exchange(x, y, mode);
}

}  // namespace

std::vector<BraidOp> parse_ops(std::string_view text) {
    std::vector<BraidOp> ops;
    while (true) {
        auto semi = text.find(';');
        auto token = trim(text.substr(0, semi));
        if (token.empty()) throw std::invalid_argument("empty op token");
        ops.push_back(parse_token(token));
        if (semi == std::string_view::npos) break;
        text.remove_prefix(semi + 1);
    }
    return ops;
}

std::string format_op(const BraidOp& op) {
    switch (op.kind) {
        case BraidOp::Kind::tripartite: return "t3";
        case BraidOp::Kind::circle: return std::string{'c', to_char(op.x), to_char(op.y)};
        case BraidOp::Kind::exchange: {
            std::string s{'x', to_char(op.x), to_char(op.y)};
            if (op.mode.kind == ChannelMode::Kind::resolved) {
                s += '@';
                s += to_string(op.mode.tag);
            }
            return s;
        }
    }
    return "?";
}

std::string format_ops(std::span<const BraidOp> ops) {
    std::string s;
    for (const auto& op : ops) {
        if (!s.empty()) s += ';';
        s += format_op(op);
    }
    return s;
}

std::vector<BraidOp> elementary_ops(const AnyonModel& model) {
    std::vector<BraidOp> ops{BraidOp::exchange(Party::A, Party::B),
                             BraidOp::exchange(Party::B, Party::C)};
    for (Party x : {Party::A, Party::B, Party::C})
        for (Party y : {Party::A, Party::B, Party::C})
            if (x != y) ops.push_back(BraidOp::circle(x, y));
    if (model.kind() == ModelKind::ising_like) ops.push_back(BraidOp::tripartite());
    return ops;
}

// ---------------------------------------------------------------------------
// Invariance campaign

BraidReport verify_invariance(const MaskingScheme& scheme, std::span<const BraidOp> ops,
                              std::size_t trials, double tol, std::uint64_t seed) {
    for (const auto& op : ops) check_op(scheme.model(), op);
    BraidReport report;
    report.ops.assign(ops.begin(), ops.end());
    report.trials = trials;
    report.seed = seed;
    report.tol = tol;
    report.passed = true;

    double worst_pre = -1.0, worst_post = -1.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t s = trial_seed(seed, t);
        const auto coeffs = random_unit_coeffs(scheme.order(), s);
        const StateVector input = scheme.encode(coeffs);
        const StateVector output = apply(scheme.model(), input, ops);

        auto pre = verify_masking(input, scheme.alphabet(), tol);
        auto post = verify_masking(output, scheme.alphabet(), tol);
        pre.seed = s;
        post.seed = s;
        const double defect = std::abs(norm(output) - norm(input));
        report.unitarity_defect = std::max(report.unitarity_defect, defect);
        report.passed = report.passed && post.passed && defect <= kDefaultTolerance;
        if (pre.max_deviation() > worst_pre) {
            worst_pre = pre.max_deviation();
            report.pre_worst = std::move(pre);
        }
        if (post.max_deviation() > worst_post) {
            worst_post = post.max_deviation();
            report.post_worst = std::move(post);
        }
    }
    return report;
}

}  // namespace anymask
