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

#include "anymask/latin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace anymask {

std::string_view to_string(SquareClass c) {
    switch (c) {
        case SquareClass::latin: return "latin";
        case SquareClass::constant_row: return "constant-row";
        case SquareClass::constant_column: return "constant-column";
        case SquareClass::other: return "other";
    }
    return "?";
}

Square::Square(std::size_t order, std::vector<std::uint8_t> cells)
    : order_(order), cells_(std::move(cells)) {
    if (cells_.size() != order_ * order_) {
        throw std::invalid_argument("Square: expected " + std::to_string(order_ * order_) +
                                    " cells, got " + std::to_string(cells_.size()));
    }
    for (auto v : cells_) {
        if (v >= order_) throw std::invalid_argument("Square: cell value out of range");
    }
}

Square Square::from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t d = rows.size();
    std::vector<std::uint8_t> cells;
    cells.reserve(d * d);
    for (const auto& r : rows) {
        if (r.size() != d) throw std::invalid_argument("Square::from_rows: grid is not square");
        for (int v : r) {
            if (v < 0) throw std::invalid_argument("Square::from_rows: negative cell");
            cells.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return Square(d, std::move(cells));
}

SquareClass Square::classify() const {
    if (is_latin(*this)) return SquareClass::latin;
    bool rows = true, cols = true;
    for (std::size_t j = 0; j < order_; ++j)
        for (std::size_t k = 0; k < order_; ++k) {
            rows = rows && at(j, k) == k;
            cols = cols && at(j, k) == j;
        }
    if (rows) return SquareClass::constant_row;
    if (cols) return SquareClass::constant_column;
    return SquareClass::other;
}

bool is_latin(const Square& s) {
    const std::size_t d = s.order();
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<bool> in_row(d, false), in_col(d, false);
        for (std::size_t k = 0; k < d; ++k) {
            if (in_row[s.at(i, k)] || in_col[s.at(k, i)]) return false;
            in_row[s.at(i, k)] = true;
            in_col[s.at(k, i)] = true;
        }
    }
    return true;
}

bool are_orthogonal(const Square& lhs, const Square& rhs) {
    if (lhs.order() != rhs.order()) {
        throw std::invalid_argument("are_orthogonal: orders differ (" + std::to_string(lhs.order()) +
                                    " vs " + std::to_string(rhs.order()) + ")");
    }
    const std::size_t d = lhs.order();
    std::vector<bool> seen(d * d, false);
    for (std::size_t i = 0; i < d * d; ++i) {
        std::size_t pair = lhs.cells()[i] * d + rhs.cells()[i];
        if (seen[pair]) return false;
        seen[pair] = true;
    }
    return true;
}

Square cyclic_square(std::size_t order, CycleDirection direction) {
    if (order == 0) throw std::invalid_argument("cyclic_square: order must be >= 1");
    std::vector<std::uint8_t> cells(order * order);
    for (std::size_t r = 0; r < order; ++r)
        for (std::size_t k = 0; k < order; ++k) {
            std::size_t v = direction == CycleDirection::forward ? (k + order - r) % order
                                                                 : (k + r) % order;
            cells[r * order + k] = static_cast<std::uint8_t>(v);
        }
    return Square(order, std::move(cells));
}

Square constant_row_square(std::size_t order) {
    std::vector<std::uint8_t> cells(order * order);
    for (std::size_t r = 0; r < order; ++r)
        for (std::size_t k = 0; k < order; ++k) cells[r * order + k] = static_cast<std::uint8_t>(k);
    return Square(order, std::move(cells));
}

Square constant_column_square(std::size_t order) {
    std::vector<std::uint8_t> cells(order * order);
    for (std::size_t r = 0; r < order; ++r)
        for (std::size_t k = 0; k < order; ++k) cells[r * order + k] = static_cast<std::uint8_t>(r);
    return Square(order, std::move(cells));
}

SchemeTriple fixed_triple_d4() {
    // Indices into {vac, e, m, eps}.
    return SchemeTriple{
        constant_row_square(4),
        Square::from_rows({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}),
        Square::from_rows({{0, 1, 2, 3}, {3, 2, 1, 0}, {1, 0, 3, 2}, {2, 3, 0, 1}}),
    };
}

SchemeTriple cyclic_triple(std::size_t order) {
    return SchemeTriple{constant_row_square(order), cyclic_square(order, CycleDirection::forward),
                        cyclic_square(order, CycleDirection::backward)};
}

ValidationReport validate_triple(const SchemeTriple& t) {
    ValidationReport report;
    const std::size_t d = t.a.order();
    if (d == 0 || t.b.order() != d || t.c.order() != d) {
        report.fail("order", "A, B and C must share a nonzero order");
        return report;
    }
    const bool b_latin = is_latin(t.b);
    const bool c_latin = is_latin(t.c);
    if (!b_latin) report.fail("B-latin", "B repeats a symbol in some row or column");
    if (!c_latin) report.fail("C-latin", "C repeats a symbol in some row or column");
    if (!are_orthogonal(t.b, t.c)) report.fail("BC-orthogonal", "B and C are not orthogonal");

    switch (t.a.classify()) {
        case SquareClass::constant_row:
        case SquareClass::constant_column:
            break;
        case SquareClass::latin:
            if (!are_orthogonal(t.a, t.b) || !are_orthogonal(t.a, t.c)) {
                report.fail("A-orthogonal", "Latin A must be orthogonal to both B and C");
            }
            break;
        case SquareClass::other:
            report.fail("A-form", "A is neither constant-row, constant-column nor Latin");
            break;
    }
    return report;
}

// ---------------------------------------------------------------------------
// MOLS search

namespace {

class LatinSearch {
public:
    explicit LatinSearch(std::size_t d) : d_(d), cells_(d * d, kEmpty) {}

    // Fills empty cells row-major, trying values in increasing order; `mate`
    // (if any) must stay orthogonal to the partial square.
    template <typename Visit>
    bool search(const Square* mate, Visit&& visit) {
        mate_ = mate;
        used_pairs_.assign(d_ * d_, false);
        if (mate_) {
            for (std::size_t i = 0; i < d_ * d_; ++i)
                if (cells_[i] != kEmpty) {
                    std::size_t p = mate_->cells()[i] * d_ + cells_[i];
                    if (used_pairs_[p]) return false;
                    used_pairs_[p] = true;
                }
        }
        return fill(0, visit);
    }

    void preset(std::size_t row, std::size_t col, std::uint8_t v) { cells_[row * d_ + col] = v; }

private:
    static constexpr std::uint8_t kEmpty = 0xff;

    bool allowed(std::size_t pos, std::uint8_t v) const {
        const std::size_t r = pos / d_, c = pos % d_;
        for (std::size_t k = 0; k < d_; ++k) {
            if (k != c && cells_[r * d_ + k] == v) return false;
            if (k != r && cells_[k * d_ + c] == v) return false;
        }
        if (mate_ && used_pairs_[mate_->cells()[pos] * d_ + v]) return false;
        return true;
    }

    template <typename Visit>
    bool fill(std::size_t pos, Visit& visit) {
        while (pos < d_ * d_ && cells_[pos] != kEmpty) ++pos;
        if (pos == d_ * d_) return visit(Square(d_, cells_));
        for (std::uint8_t v = 0; v < d_; ++v) {
            if (!allowed(pos, v)) continue;
            cells_[pos] = v;
            if (mate_) used_pairs_[mate_->cells()[pos] * d_ + v] = true;
            if (fill(pos + 1, visit)) return true;
            if (mate_) used_pairs_[mate_->cells()[pos] * d_ + v] = false;
            cells_[pos] = kEmpty;
        }
        return false;
    }

    std::size_t d_;
    std::vector<std::uint8_t> cells_;
    std::vector<bool> used_pairs_;
    const Square* mate_ = nullptr;
};

}  // namespace

std::optional<std::pair<Square, Square>> find_mols_pair(std::size_t order) {
    if (order == 0 || order > 5) {
        throw std::invalid_argument("find_mols_pair: order must be in [1, 5], got " +
                                    std::to_string(order));
    }
    std::optional<std::pair<Square, Square>> found;

    // First square: reduced (first row and column are the identity).
    LatinSearch first(order);
    for (std::size_t k = 0; k < order; ++k) {
        first.preset(0, k, static_cast<std::uint8_t>(k));
        first.preset(k, 0, static_cast<std::uint8_t>(k));
    }
    first.search(nullptr, [&](const Square& l1) {
        // Relabeling symbols preserves orthogonality, so the mate's first row
        // can be fixed to the identity.
        LatinSearch second(order);
        for (std::size_t k = 0; k < order; ++k) second.preset(0, k, static_cast<std::uint8_t>(k));
        return second.search(&l1, [&](const Square& l2) {
            found.emplace(l1, l2);
            return true;
        });
    });
    return found;
}

// ---------------------------------------------------------------------------
// Text grids

std::string format_grid(const Square& s, std::span<const Sector> alphabet) {
    if (alphabet.size() != s.order()) {
        throw std::invalid_argument("format_grid: alphabet size does not match square order");
    }
    std::string out;
    for (std::size_t j = 0; j < s.order(); ++j) {
        for (std::size_t k = 0; k < s.order(); ++k) {
            if (k) out += ' ';
            out += to_string(alphabet[s.at(j, k)]);
        }
        out += '\n';
    }
    return out;
}

namespace {

using Block = std::vector<std::vector<std::string>>;

std::vector<Block> split_blocks(std::string_view text) {
    std::vector<Block> blocks;
    std::istringstream in{std::string(text)};
    std::string line;
    Block current;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] == '#') continue;
        std::istringstream words(line);
        std::vector<std::string> row;
        for (std::string w; words >> w;) row.push_back(w);
        if (row.empty()) {
            if (!current.empty()) blocks.push_back(std::move(current));
            current.clear();
            continue;
        }
        current.push_back(std::move(row));
    }
    if (!current.empty()) blocks.push_back(std::move(current));
    return blocks;
}

Square block_to_square(const Block& rows,
                       std::span<const Sector> alphabet) {
    const std::size_t d = rows.size();
    if (d != alphabet.size()) {
        throw std::invalid_argument("grid has " + std::to_string(d) + " rows, alphabet has " +
                                    std::to_string(alphabet.size()) + " sectors");
    }
    std::vector<std::uint8_t> cells;
    for (const auto& row : rows) {
        if (row.size() != d) {
            throw std::invalid_argument("grid row has " + std::to_string(row.size()) +
                                        " entries, expected " + std::to_string(d));
        }
        for (const auto& word : row) {
            auto s = parse_sector(word);
            auto it = s ? std::find(alphabet.begin(), alphabet.end(), *s) : alphabet.end();
            if (it == alphabet.end()) {
                throw std::invalid_argument("grid label '" + word + "' is not in the alphabet");
            }
            cells.push_back(static_cast<std::uint8_t>(it - alphabet.begin()));
        }
    }
    return Square(d, std::move(cells));
}

}  // namespace

Square parse_grid(std::string_view text, std::span<const Sector> alphabet) {
    auto blocks = split_blocks(text);
    if (blocks.size() != 1) {
        throw std::invalid_argument("parse_grid: expected exactly one grid, found " +
                                    std::to_string(blocks.size()));
    }
    return block_to_square(blocks.front(), alphabet);
}

std::string format_scheme(const SchemeTriple& t, std::span<const Sector> alphabet) {
    return "# A\n" + format_grid(t.a, alphabet) + "\n# B\n" + format_grid(t.b, alphabet) +
           "\n# C\n" + format_grid(t.c, alphabet);
}

SchemeTriple parse_scheme(std::string_view text, std::span<const Sector> alphabet) {
    auto blocks = split_blocks(text);
    if (blocks.size() != 3) {
        throw std::invalid_argument("scheme file must hold three grids (A, B, C), found " +
                                    std::to_string(blocks.size()));
    }
    return SchemeTriple{block_to_square(blocks[0], alphabet), block_to_square(blocks[1], alphabet),
                        block_to_square(blocks[2], alphabet)};
}

}  // namespace anymask
