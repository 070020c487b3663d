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

#include "anymask/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace anymask {

std::string_view to_string(Sector s) {
    switch (s) {
        case Sector::vac: return "vac";
        case Sector::e: return "e";
        case Sector::m: return "m";
        case Sector::eps: return "eps";
        case Sector::sigma: return "sigma";
    }
    return "?";
}

std::optional<Sector> parse_sector(std::string_view text) {
    if (text == "vac" || text == "1") return Sector::vac;
    if (text == "e") return Sector::e;
    if (text == "m") return Sector::m;
    if (text == "eps") return Sector::eps;
    if (text == "sigma") return Sector::sigma;
    return std::nullopt;
}

std::string_view to_string(Channel c) {
    switch (c) {
        case Channel::untagged: return "untagged";
        case Channel::vac: return "vac";
        case Channel::eps: return "eps";
    }
    return "?";
}

std::string to_string(const BasisKet& ket) {
    std::string out = "|";
    for (std::size_t i = 0; i < ket.size(); ++i) {
        if (i) out += ' ';
        out += to_string(ket[i]);
    }
    out += '>';
    if (ket.channel != Channel::untagged) {
        out += '_';
        out += to_string(ket.channel);
    }
    return out;
}

StateVector StateVector::basis(BasisKet ket, Amplitude amplitude) {
    StateVector s(ket.size());
    s.add(ket, amplitude);
    return s;
}

void StateVector::add(const BasisKet& ket, Amplitude amplitude) {
    if (ket.size() != registers_) {
        throw std::invalid_argument("StateVector::add: ket has " + std::to_string(ket.size()) +
                                    " registers, state has " + std::to_string(registers_));
    }
    auto [it, inserted] = terms_.try_emplace(ket, amplitude);
    if (!inserted) it->second += amplitude;
    if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
}

Amplitude StateVector::amplitude(const BasisKet& ket) const {
    auto it = terms_.find(ket);
    return it == terms_.end() ? Amplitude{} : it->second;
}

bool StateVector::any_tagged() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.channel != Channel::untagged; });
}

StateVector& StateVector::operator+=(const StateVector& other) {
    if (empty() && registers_ == 0) registers_ = other.registers_;
    for (const auto& [ket, amp] : other.terms_) add(ket, amp);
    return *this;
}

std::string to_string(const StateVector& state) {
    std::ostringstream os;
    os.precision(6);
    bool first = true;
    for (const auto& [ket, amp] : state.terms()) {
        if (!first) os << " + ";
        first = false;
        os << '(' << amp.real() << (amp.imag() < 0 ? "-" : "+") << std::abs(amp.imag()) << "i)"
           << to_string(ket);
    }
    if (first) os << "0";
    return os.str();
}

StateVector tensor(const StateVector& lhs, const StateVector& rhs) {
    if (lhs.any_tagged() && rhs.any_tagged()) {
        throw std::invalid_argument("tensor: both factors carry fusion-channel tags");
    }
    StateVector out(lhs.register_count() + rhs.register_count());
    for (const auto& [k1, a1] : lhs.terms()) {
        for (const auto& [k2, a2] : rhs.terms()) {
            BasisKet ket;
            ket.registers = k1.registers;
            ket.registers.insert(ket.registers.end(), k2.registers.begin(), k2.registers.end());
            ket.channel = k1.channel != Channel::untagged ? k1.channel : k2.channel;
            out.add(ket, a1 * a2);
        }
    }
    return out;
}

StateVector scale(const StateVector& state, Amplitude factor) {
    StateVector out(state.register_count());
    for (const auto& [ket, amp] : state.terms()) out.add(ket, amp * factor);
    return out;
}

Amplitude inner(const StateVector& lhs, const StateVector& rhs) {
    Amplitude acc{};
    const auto& small = lhs.size() <= rhs.size() ? lhs : rhs;
    const auto& large = lhs.size() <= rhs.size() ? rhs : lhs;
    for (const auto& [ket, amp] : small.terms()) {
        Amplitude other = large.amplitude(ket);
        if (other == Amplitude{}) continue;
        acc += (&small == &lhs) ? std::conj(amp) * other : std::conj(other) * amp;
    }
    return acc;
}

double norm(const StateVector& state) {
    double acc = 0.0;
    for (const auto& [ket, amp] : state.terms()) acc += std::norm(amp);
    return std::sqrt(acc);
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(std::vector<BasisKet> basis, std::vector<Amplitude> entries)
    : basis_(std::move(basis)), entries_(std::move(entries)) {
    if (entries_.size() != basis_.size() * basis_.size()) {
        throw std::invalid_argument("DensityMatrix: entry count does not match basis size");
    }
    for (const auto& k : basis_) {
        if (k.channel != Channel::untagged) {
            throw std::invalid_argument("DensityMatrix: basis kets never carry channel tags");
        }
    }
}

DensityMatrix DensityMatrix::maximally_mixed(std::span<const Sector> alphabet) {
    const std::size_t d = alphabet.size();
    std::vector<BasisKet> basis;
    for (Sector s : alphabet) basis.push_back(BasisKet{s});
    std::vector<Amplitude> entries(d * d);
    for (std::size_t i = 0; i < d; ++i) entries[i * d + i] = 1.0 / static_cast<double>(d);
    return DensityMatrix(std::move(basis), std::move(entries));
}

DensityMatrix DensityMatrix::projector(const StateVector& state, std::span<const BasisKet> basis) {
    const std::size_t d = basis.size();
    std::vector<Amplitude> amps(d);
    for (std::size_t i = 0; i < d; ++i) amps[i] = state.amplitude(basis[i]);
    std::vector<Amplitude> entries(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) entries[i * d + j] = amps[i] * std::conj(amps[j]);
    return DensityMatrix({basis.begin(), basis.end()}, std::move(entries));
}

Amplitude DensityMatrix::trace() const {
    Amplitude t{};
    for (std::size_t i = 0; i < dim(); ++i) t += (*this)(i, i);
    return t;
}

bool DensityMatrix::is_hermitian(double tol) const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i; j < dim(); ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

namespace {

// Determinant by Gaussian elimination with partial pivoting.
Amplitude determinant(std::vector<Amplitude> a, std::size_t n) {
    Amplitude det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
        if (std::abs(a[pivot * n + col]) == 0.0) return 0.0;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
            det = -det;
        }
        det *= a[col * n + col];
        for (std::size_t r = col + 1; r < n; ++r) {
            Amplitude f = a[r * n + col] / a[col * n + col];
            for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
        }
    }
    return det;
}

}  // namespace

bool DensityMatrix::is_positive_semidefinite(double tol) const {
    const std::size_t d = dim();
    if (d > 10) throw std::invalid_argument("is_positive_semidefinite: dim > 10");
    for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < d; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        const std::size_t n = idx.size();
        std::vector<Amplitude> sub(n * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) sub[r * n + c] = (*this)(idx[r], idx[c]);
        if (determinant(std::move(sub), n).real() < -tol) return false;
    }
    return true;
}

std::string to_string(const DensityMatrix& rho) {
    std::ostringstream os;
    os.precision(6);
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        os << to_string(rho.basis()[i]) << " [";
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            Amplitude v = rho(i, j);
            os << ' ' << v.real();
            if (std::abs(v.imag()) > 0) os << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << 'i';
        }
        os << " ]\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Partial trace

namespace {

std::vector<std::size_t> checked_keep(const StateVector& state, std::span<const std::size_t> keep) {
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
    std::vector<std::size_t> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("partial_trace: duplicate register in keep set");
    }
    if (sorted.back() >= state.register_count()) {
        throw std::out_of_range("partial_trace: register " + std::to_string(sorted.back()) +
                                " out of range");
    }
    return sorted;
}

DensityMatrix reduce(const StateVector& state, const std::vector<std::size_t>& keep,
                     std::vector<BasisKet> basis) {
    std::map<BasisKet, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

    std::vector<bool> kept(state.register_count(), false);
    for (auto k : keep) kept[k] = true;

    // Group by the traced-out labels plus the channel tag; only terms that agree
    // on both contribute cross terms.
    std::map<BasisKet, std::vector<std::pair<std::size_t, Amplitude>>> groups;
    for (const auto& [ket, amp] : state.terms()) {
        BasisKet env, sys;
        env.channel = ket.channel;
        for (std::size_t r = 0; r < ket.size(); ++r) {
            (kept[r] ? sys.registers : env.registers).push_back(ket[r]);
        }
        auto it = index.find(sys);
        if (it == index.end()) {
            throw std::invalid_argument("partial_trace: label " + to_string(sys) +
                                        " is outside the requested alphabet");
        }
        groups[env].emplace_back(it->second, amp);
    }

    const std::size_t d = basis.size();
    std::vector<Amplitude> entries(d * d);
    for (const auto& [env, members] : groups) {
        for (const auto& [i, ai] : members)
            for (const auto& [j, aj] : members) entries[i * d + j] += ai * std::conj(aj);
    }
    return DensityMatrix(std::move(basis), std::move(entries));
}

}  // namespace

DensityMatrix partial_trace(const StateVector& state, std::span<const std::size_t> keep) {
    auto sorted = checked_keep(state, keep);
    std::vector<BasisKet> basis;
    for (const auto& [ket, amp] : state.terms()) {
        BasisKet sys;
        for (auto r : sorted) sys.registers.push_back(ket[r]);
        basis.push_back(std::move(sys));
    }
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    return reduce(state, sorted, std::move(basis));
}

DensityMatrix partial_trace(const StateVector& state, std::span<const std::size_t> keep,
                            std::span<const Sector> alphabet) {
    auto sorted = checked_keep(state, keep);
    if (alphabet.empty()) throw std::invalid_argument("partial_trace: empty alphabet");
    std::vector<BasisKet> basis;
    std::vector<std::size_t> digits(sorted.size(), 0);
    while (true) {
        BasisKet sys;
        for (auto dgt : digits) sys.registers.push_back(alphabet[dgt]);
        basis.push_back(std::move(sys));
        std::size_t pos = digits.size();
        while (pos > 0 && ++digits[pos - 1] == alphabet.size()) digits[--pos] = 0;
        if (pos == 0) break;
    }
    return reduce(state, sorted, std::move(basis));
}

double hs_distance(const DensityMatrix& lhs, const DensityMatrix& rhs) {
    if (lhs.basis() != rhs.basis()) {
        throw std::invalid_argument("hs_distance: density matrices are on different bases");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < lhs.entries().size(); ++i)
        acc += std::norm(lhs.entries()[i] - rhs.entries()[i]);
    return std::sqrt(acc);
}

}  // namespace anymask
