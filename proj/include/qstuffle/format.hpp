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

#ifndef QSTUFFLE_FORMAT_HPP
#define QSTUFFLE_FORMAT_HPP

#include <string>

#include "json.hpp"
#include "qstuffle/bases.hpp"
#include "qstuffle/lyndon.hpp"
#include "qstuffle/report.hpp"

namespace qstuffle {

using Json = nlohmann::ordered_json;

inline constexpr const char* kGeneratorVersion = "qstuffle 1.0.0";

/* Text form. Polynomial terms run from longer to shorter words, ties in ascending word order; a term is
 * "c·[i,j,...]" with c = 1 omitted and the empty word shown as its bare coefficient. Zero prints as "0".
 */
std::string to_text(const Rational& r);
std::string to_text(const QCoefficient& c);
std::string to_text(const NCPolynomial& p);
std::string to_text(const Tensor2Polynomial& t);
std::string to_text(const GradedBasis& b);

enum class TermOrder { ascending, descending };

std::string to_latex(const Word& w);
std::string to_latex(const QCoefficient& c);
std::string to_latex(const NCPolynomial& p, TermOrder order = TermOrder::descending);
/* eqnarray body, one line per entry; pi/xi list terms in ascending word order, sigma/chi in descending. */
std::string to_latex(const GradedBasis& b);

/* [{"qpow": n, "coeff": "num/den"}, ...] by ascending qpow. */
Json to_json(const QCoefficient& c);
/* [{"word": [...], "coeff": ...}, ...] by ascending word. */
Json to_json(const NCPolynomial& p);
/* [{"left": [...], "right": [...], "coeff": ...}, ...] by ascending (left, right). */
Json to_json(const Tensor2Polynomial& t);
/* {"kind", "N", "generator-version", "entries": {word string: polynomial}} */
Json to_json(const GradedBasis& b);
Json to_json(const DerivationTree& t);
Json to_json(const ConverseTree& t);
Json to_json(const Report& r);

/* Inverse of to_json; throw std::invalid_argument on malformed input. */
QCoefficient qcoefficient_from_json(const Json& j);
NCPolynomial polynomial_from_json(const Json& j);
Tensor2Polynomial tensor_from_json(const Json& j);
GradedBasis basis_from_json(const Json& j);

GradedBasis eval_q(const GradedBasis& b, const Rational& q0);

}  // namespace qstuffle

#endif  // QSTUFFLE_FORMAT_HPP
