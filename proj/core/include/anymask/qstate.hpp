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

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace anymask {

using Amplitude = std::complex<double>;

/// Superselection sector label. The enumerator order is the alphabet order used
/// for matrix indexing (vac < e < m < eps < sigma), which agrees with both the
/// Abelian alphabet {vac, e, m, eps} and the Ising alphabet {vac, eps, sigma}.
enum class Sector : std::uint8_t { vac, e, m, eps, sigma };

std::string_view to_string(Sector s);

/// Accepts the canonical names plus "1" for the vacuum.
std::optional<Sector> parse_sector(std::string_view text);

/// Fusion-channel tag carried by a whole basis ket. Kets that differ only in
/// their tag are orthogonal; partial traces always sum over the tag.
enum class Channel : std::uint8_t { untagged, vac, eps };

std::string_view to_string(Channel c);

struct BasisKet {
    std::vector<Sector> registers;
    Channel channel = Channel::untagged;

    BasisKet() = default;
    BasisKet(std::vector<Sector> regs, Channel tag = Channel::untagged)
        : registers(std::move(regs)), channel(tag) {}
    BasisKet(std::initializer_list<Sector> regs, Channel tag = Channel::untagged)
        : registers(regs), channel(tag) {}

    std::size_t size() const { return registers.size(); }
    Sector operator[](std::size_t i) const { return registers[i]; }

    auto operator<=>(const BasisKet&) const = default;
    bool operator==(const BasisKet&) const = default;
};

std::string to_string(const BasisKet& ket);

/// Amplitudes below this magnitude are dropped from a StateVector.
inline constexpr double kPruneThreshold = 1e-15;

/// Finite superposition of labeled basis kets with a fixed register count.
class StateVector {
public:
    using Terms = std::map<BasisKet, Amplitude>;

    StateVector() = default;
    explicit StateVector(std::size_t register_count) : registers_(register_count) {}

    static StateVector basis(BasisKet ket, Amplitude amplitude = 1.0);

    std::size_t register_count() const { return registers_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Accumulates `amplitude` onto `ket`; throws if the register count differs.
    void add(const BasisKet& ket, Amplitude amplitude);

    Amplitude amplitude(const BasisKet& ket) const;
    const Terms& terms() const { return terms_; }
    bool any_tagged() const;

    StateVector& operator+=(const StateVector& other);
    friend StateVector operator+(StateVector lhs, const StateVector& rhs) {
        lhs += rhs;
        return lhs;
    }

private:
    std::size_t registers_ = 0;
    Terms terms_;
};

std::string to_string(const StateVector& state);

StateVector tensor(const StateVector& lhs, const StateVector& rhs);
StateVector scale(const StateVector& state, Amplitude factor);
/// Conjugate-linear in `lhs`.
Amplitude inner(const StateVector& lhs, const StateVector& rhs);
double norm(const StateVector& state);

class DensityMatrix {
public:
    DensityMatrix() = default;
    DensityMatrix(std::vector<BasisKet> basis, std::vector<Amplitude> entries);

    /// I/d over the given single-register alphabet.
    static DensityMatrix maximally_mixed(std::span<const Sector> alphabet);
    static DensityMatrix projector(const StateVector& state, std::span<const BasisKet> basis);

    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisKet>& basis() const { return basis_; }
    const std::vector<Amplitude>& entries() const { return entries_; }

    Amplitude operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim() + col];
    }

    Amplitude trace() const;
    bool is_hermitian(double tol = 1e-12) const;
    /// Every principal minor is >= -tol (dim <= 10).
    bool is_positive_semidefinite(double tol = 1e-10) const;

private:
    std::vector<BasisKet> basis_;
    std::vector<Amplitude> entries_;
};

std::string to_string(const DensityMatrix& rho);

/// Reduced density matrix on `keep` with the basis drawn from the labels that
/// actually occur in the kept registers (sorted in alphabet order).
DensityMatrix partial_trace(const StateVector& state, std::span<const std::size_t> keep);

/// Reduced density matrix on `keep` over the full product basis alphabet^|keep|.
DensityMatrix partial_trace(const StateVector& state, std::span<const std::size_t> keep,
                            std::span<const Sector> alphabet);

/// Hilbert-Schmidt distance sqrt(sum |r1_ij - r2_ij|^2); the bases must match.
double hs_distance(const DensityMatrix& lhs, const DensityMatrix& rhs);

}  // namespace anymask
