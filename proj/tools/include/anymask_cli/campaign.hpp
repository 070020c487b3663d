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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "anymask/anyons.hpp"
#include "anymask/masker.hpp"
#include "anymask/qstate.hpp"

namespace anymask::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Bad flags, unparsable literals, unreadable or invalid input files.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { text, structured };

struct CampaignConfig {
    /// "abelian", "ising" or "ising:<c>".
    std::string model = "abelian";
    /// "paper-d4", "cyclic-d3", a scheme file path, or empty for the model default.
    std::string scheme;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    double tol = kDefaultTolerance;
    std::string out;
    Format format = Format::text;
    /// Worker threads for trial fan-out. Not echoed in reports.
    unsigned threads = 1;
};

/// Throws UsageError unless trials >= 1, tol > 0, threads >= 1 and the model
/// selector names a valid model (odd c for Ising).
void validate(const CampaignConfig& config);

AnyonModel resolve_model(std::string_view selector);
MaskingScheme resolve_scheme(const AnyonModel& model, std::string_view selector);

/// Reads an unsigned 64-bit seed from the environment variable, if set.
std::optional<std::uint64_t> seed_from_env(const char* name = "ANYMASK_SEED");

/// `a`, `bi` or `a+bi` / `a-bi` with decimal reals; a bare `i` means 1i.
Amplitude parse_complex(std::string_view text);
/// Comma-separated complex literals.
std::vector<Amplitude> parse_complex_list(std::string_view text);

struct CommandResult {
    int exit_code = kExitPass;
    std::string text;
    /// JSON document, newline terminated.
    std::string structured;
    std::vector<std::string> warnings;

    const std::string& render(Format f) const { return f == Format::text ? text : structured; }
};

/// Encode + verify over `trials` seeded inputs, or over `input` alone.
CommandResult run_verify(const CampaignConfig& config,
                         const std::optional<std::vector<Amplitude>>& input = std::nullopt);
CommandResult run_braid(const CampaignConfig& config, std::string_view ops);
CommandResult run_mols(std::size_t order);
/// Normalizes a non-unit input and records a warning.
CommandResult run_teleport(const CampaignConfig& config, std::string_view input);
/// Serialized tables plus validate_model; `file` replaces the named model.
CommandResult run_model(const CampaignConfig& config, const std::string& file = {});

std::string_view version();

}  // namespace anymask::cli
