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

#include <string>
#include <vector>

namespace anymask {

struct Violation {
    std::string check;
    std::string detail;
};

/// Outcome of a structural check; failures are collected, never thrown.
struct ValidationReport {
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
    bool has(const std::string& check) const {
        for (const auto& v : violations)
            if (v.check == check) return true;
        return false;
    }
    void fail(std::string check, std::string detail) {
        violations.push_back({std::move(check), std::move(detail)});
    }
};

}  // namespace anymask
