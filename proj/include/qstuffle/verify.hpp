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

#ifndef QSTUFFLE_VERIFY_HPP
#define QSTUFFLE_VERIFY_HPP

#include <string>

#include "qstuffle/bases.hpp"

namespace qstuffle {

enum class Suite { duality, primitivity, factorization, axioms, all };
const char* to_string(Suite suite);
Suite parse_suite(const std::string& text);

/* Pi_l for Lyndon l and pi_1(w) for every word, weight <= max_weight, checked against both primitivity criteria. */
Report verify_primitivity(const Bases& bases, unsigned max_weight);

/* Commutativity and associativity of the product, agreement with the shuffle at q = 0, coassociativity and
 * counit of Delta, and deconcatenation as a product morphism; all word tuples of total weight <= max_weight.
 */
Report verify_axioms(const Algebra& algebra, unsigned max_weight);

Report run_suite(const Bases& bases, Suite suite, unsigned max_weight);

}  // namespace qstuffle

#endif  // QSTUFFLE_VERIFY_HPP
