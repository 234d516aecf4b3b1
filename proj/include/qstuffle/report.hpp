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
// Pass/fail records for verification runs.

#ifndef QSTUFFLE_REPORT_HPP
#define QSTUFFLE_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace qstuffle {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;  // identities evaluated
    std::size_t failed = 0;
    std::string detail;       // first failure, or a summary
};

struct Report {
    std::vector<CheckResult> checks;

    bool passed() const;
    void append(const Report& other);
    // One line per check: "PASS name (checked N)" / "FAIL name (F of N failed): detail".
    std::string to_text() const;
};

}  // namespace qstuffle

#endif  // QSTUFFLE_REPORT_HPP
