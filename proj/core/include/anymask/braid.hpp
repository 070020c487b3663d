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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anymask/anyons.hpp"
#include "anymask/masker.hpp"
#include "anymask/qstate.hpp"

namespace anymask {

enum class Party : std::uint8_t { A = 0, B = 1, C = 2 };

inline std::size_t index(Party p) { return static_cast<std::size_t>(p); }
char to_char(Party p);

/// How an untagged sigma-sigma pair picks its fusion channel when braided.
struct ChannelMode {
    enum class Kind : std::uint8_t { equal_split, resolved };
    Kind kind = Kind::equal_split;
    Channel tag = Channel::untagged;

    static ChannelMode split() { return {}; }
    static ChannelMode resolved(Channel tag);
    bool operator==(const ChannelMode&) const = default;
};

struct BraidOp {
    enum class Kind : std::uint8_t { exchange, circle, tripartite };
    Kind kind = Kind::exchange;
    Party x = Party::A;
    Party y = Party::B;
    ChannelMode mode;

    static BraidOp exchange(Party x, Party y, ChannelMode mode = ChannelMode::split());
    /// x travels once around y.
    static BraidOp circle(Party x, Party y);
    static BraidOp tripartite();

    bool operator==(const BraidOp&) const = default;
};

/// Counterclockwise exchange of two adjacent positions. Per term the labels at
/// the two positions swap and the amplitude picks up R^{ab}_c, where a is the
/// label at the lower position. Argument order is irrelevant.
///
/// A sigma-sigma pair on an untagged term is split into vac/eps tagged
/// branches of weight 1/sqrt2 each (equal_split) or tagged with the given
/// channel (resolved). Tagged terms always reuse their own channel; a resolved
/// mode that disagrees with an existing tag throws.
StateVector exchange(const AnyonModel& model, const StateVector& state, Party x, Party y,
                     ChannelMode mode = ChannelMode::split());

/// x circles once around y. Labels are unchanged; each term picks up the
/// monodromy of its (x, y) labels. An untagged sigma-sigma pair takes the vac
/// channel value e^{-i pi c/4}. In the Ising-type model two fermions pick up
/// R_1^{eps eps} = -1 rather than its square.
StateVector circle(const AnyonModel& model, const StateVector& state, Party x, Party y);

/// The three-body Ising braid used in the A-C exchange. All-sigma terms split
/// into vac/eps branches with amplitudes kappa (R_1)^2 / sqrt2 and
/// kappa R_1 R_eps / sqrt2 (a tagged all-sigma term gets kappa R_1 R_t); every
/// other term gets the product of R phases over the pairs AB, BC and AC.
/// Throws for non-Ising models.
StateVector tripartite_braid(const AnyonModel& model, const StateVector& state);

StateVector apply(const AnyonModel& model, const StateVector& state, const BraidOp& op);
StateVector apply(const AnyonModel& model, const StateVector& state, std::span<const BraidOp> ops);

/// Throws if `op` is not allowed for `model` (adjacency, distinct parties,
/// tripartite only for Ising-type models).
void check_op(const AnyonModel& model, const BraidOp& op);

/// Compact op string: tokens separated by ';'.
///   xXY[@vac|@eps]  exchange adjacent parties X, Y (split unless a channel is given)
///   cXY             circle X around Y
///   t3              tripartite braid
std::vector<BraidOp> parse_ops(std::string_view text);
std::string format_op(const BraidOp& op);
std::string format_ops(std::span<const BraidOp> ops);

/// Exchange(A,B), Exchange(B,C), Circle over all ordered pairs, plus the
/// tripartite braid for Ising-type models.
std::vector<BraidOp> elementary_ops(const AnyonModel& model);

struct BraidReport {
    std::vector<BraidOp> ops;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double tol = kDefaultTolerance;
    MaskingReport pre_worst;
    MaskingReport post_worst;
    double unitarity_defect = 0.0;
    bool passed = false;
};

/// Seeded campaign: encode -> apply ops -> verify_masking on every trial.
BraidReport verify_invariance(const MaskingScheme& scheme, std::span<const BraidOp> ops,
                              std::size_t trials, double tol, std::uint64_t seed);

}  // namespace anymask
