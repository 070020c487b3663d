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
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "anymask/qstate.hpp"
#include "anymask/validation.hpp"

namespace anymask {

/// Unit complex number e^{i pi k / 8}, stored as k mod 16 so that products and
/// comparisons are exact.
class Phase {
public:
    constexpr Phase() = default;
    static constexpr Phase from_eighths(int k) { return Phase(k); }
    static constexpr Phase one() { return Phase(0); }
    static constexpr Phase minus_one() { return Phase(8); }

    constexpr int eighths() const { return k_; }
    std::complex<double> value() const;

    constexpr Phase operator*(Phase o) const { return Phase(k_ + o.k_); }
    constexpr Phase conj() const { return Phase(-k_); }
    constexpr Phase pow(int n) const { return Phase(k_ * n); }
    constexpr bool operator==(const Phase&) const = default;

private:
    constexpr explicit Phase(int k) : k_(((k % 16) + 16) % 16) {}
    int k_ = 0;
};

std::string to_string(Phase p);

/// Channel multiset of a fusion a x b, sorted in alphabet order.
struct FusionOutcome {
    std::vector<Sector> channels;

    bool contains(Sector s) const;
    std::size_t size() const { return channels.size(); }
    bool operator==(const FusionOutcome&) const = default;
};

enum class ModelKind { abelian_c0, ising_like };

/// Sector algebra of one Kitaev excitation model: fusion table, exchange
/// phases R^{ab}_c, topological spins and Frobenius-Schur indicators.
///
/// Two instances exist: the c = 0 Abelian model {vac, e, m, eps} and the
/// Ising-type model {vac, eps, sigma} for odd Chern number c (mod 16). Tables
/// are plain data so that tests can build deliberately corrupted copies.
class AnyonModel {
public:
    static AnyonModel abelian();
    /// Throws std::invalid_argument for even c.
    static AnyonModel ising(int chern = 1);

    ModelKind kind() const { return kind_; }
    int chern() const { return chern_; }
    std::string name() const;
    const std::vector<Sector>& alphabet() const { return alphabet_; }
    std::size_t dim() const { return alphabet_.size(); }
    bool contains(Sector s) const;
    std::size_t index_of(Sector s) const;

    FusionOutcome fuse(Sector a, Sector b) const;
    /// Counterclockwise exchange of a over b in channel c.
    Phase r_phase(Sector a, Sector b, Sector c) const;
    /// Full circle of a around b in channel c: R^{ba}_c R^{ab}_c.
    Phase monodromy(Sector a, Sector b, Sector c) const;
    Phase theta(Sector a) const;
    int kappa(Sector a) const;

    /// Copy with a single R entry overwritten.
    AnyonModel with_r_phase(Sector a, Sector b, Sector c, Phase value) const;
    AnyonModel with_fusion(Sector a, Sector b, FusionOutcome value) const;

    using RKey = std::tuple<Sector, Sector, Sector>;
    const std::map<std::pair<Sector, Sector>, FusionOutcome>& fusion_table() const { return fusion_; }
    const std::map<RKey, Phase>& r_table() const { return r_; }
    const std::map<Sector, Phase>& theta_table() const { return theta_; }
    const std::map<Sector, int>& kappa_table() const { return kappa_; }

private:
    AnyonModel() = default;
    void require(Sector s, const char* what) const;

    ModelKind kind_ = ModelKind::abelian_c0;
    int chern_ = 0;
    std::vector<Sector> alphabet_;
    std::map<std::pair<Sector, Sector>, FusionOutcome> fusion_;
    std::map<RKey, Phase> r_;
    std::map<Sector, Phase> theta_;
    std::map<Sector, int> kappa_;

    friend AnyonModel parse_model(std::string_view text);
};

/// Frobenius-Schur indicator of sigma in the Ising-type model: (-1)^{(c^2-1)/8}.
int ising_kappa(int chern);

/// Checks every structural invariant of the model and, for the two known
/// kinds, the closed-form values of the tables. Each failure names the check.
ValidationReport validate_model(const AnyonModel& model);

/// Flat text form, one line per entry:
///   model <name>
///   fuse <a> <b> -> <c...>
///   R <a> <b> <c> <k>        (phase e^{i pi k/8})
///   theta <a> <k>
///   kappa <a> <+1|-1>
std::string serialize_model(const AnyonModel& model);
AnyonModel parse_model(std::string_view text);

/// Parses "abelian", "ising" or "ising:<c>".
AnyonModel model_from_name(std::string_view name);

}  // namespace anymask
