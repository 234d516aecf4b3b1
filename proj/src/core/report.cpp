/* Copyright 2026 The qstuffle Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "qstuffle/report.hpp"

#include <algorithm>

namespace qstuffle {

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

std::string Report::to_text() const {
    std::string out;
    for (const auto& c : checks) {
        if (c.passed) {
            out += "PASS " + c.name + " (checked " + std::to_string(c.checked) + ")";
        } else {
            out += "FAIL " + c.name + " (" + std::to_string(c.failed) + " of " + std::to_string(c.checked) +
                   " failed)";
        }
        if (!c.detail.empty()) out += ": " + c.detail;
        out += '\n';
    }
    return out;
}

}  // namespace qstuffle
