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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anymask/qstate.hpp"
#include "anymask/validation.hpp"

namespace anymask {

enum class SquareClass { latin, constant_row, constant_column, other };

std::string_view to_string(SquareClass c);

/// d x d array of alphabet indices. Binding to sector labels happens only at
/// the encoder; the combinatorics here is model independent.
class Square {
public:
    Square() = default;
    Square(std::size_t order, std::vector<std::uint8_t> cells);
    static Square from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t order() const { return order_; }
    std::uint8_t at(std::size_t row, std::size_t col) const { return cells_[row * order_ + col]; }
    std::span<const std::uint8_t> row(std::size_t r) const {
        return {cells_.data() + r * order_, order_};
    }
    const std::vector<std::uint8_t>& cells() const { return cells_; }
    SquareClass classify() const;

    bool operator==(const Square&) const = default;

private:
    std::size_t order_ = 0;
    std::vector<std::uint8_t> cells_;
};

bool is_latin(const Square& s);
/// All d^2 ordered cell pairs distinct. Throws on order mismatch.
bool are_orthogonal(const Square& lhs, const Square& rhs);

enum class CycleDirection { forward, backward };

/// Row r is the identity row acted on by the r-th power of the cyclic
/// permutation: forward rotates right (|1,2,..,d> -> |d,1,..,d-1>), backward
/// rotates left.
Square cyclic_square(std::size_t order, CycleDirection direction);
/// Every row is the identity ordering 0..d-1.
Square constant_row_square(std::size_t order);
/// Row j is constant j.
Square constant_column_square(std::size_t order);

struct SchemeTriple {
    Square a, b, c;
    std::size_t order() const { return a.order(); }
};

/// The d = 4 Abelian triple over {vac, e, m, eps}.
SchemeTriple fixed_triple_d4();
/// Constant-row A with forward/backward cyclic B and C (odd d).
SchemeTriple cyclic_triple(std::size_t order);

/// B and C Latin and mutually orthogonal; A constant-row, constant-column, or
/// Latin and orthogonal to both.
ValidationReport validate_triple(const SchemeTriple& triple);

/// Exhaustive lexicographic search over reduced first squares with a mate
/// normalized to the identity first row. Throws for d == 0 or d > 5.
std::optional<std::pair<Square, Square>> find_mols_pair(std::size_t order);

/// Text grid: one row per line, sector names separated by spaces.
std::string format_grid(const Square& s, std::span<const Sector> alphabet);
Square parse_grid(std::string_view text, std::span<const Sector> alphabet);

/// Three grids (A, B, C) separated by blank lines; '#' starts a comment line.
std::string format_scheme(const SchemeTriple& t, std::span<const Sector> alphabet);
SchemeTriple parse_scheme(std::string_view text, std::span<const Sector> alphabet);

}  // namespace anymask
