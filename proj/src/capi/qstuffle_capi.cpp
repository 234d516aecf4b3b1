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

#include "qstuffle/qstuffle.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "qstuffle/format.hpp"
#include "qstuffle/verify.hpp"

struct qs_poly {
    qstuffle::NCPolynomial value;
};

struct qs_basis {
    qstuffle::GradedBasis value;
};

struct qs_report {
    qstuffle::Report value;
};

namespace {

using namespace qstuffle;

thread_local std::string last_error;

// Parse failures inside a call are reported as QS_ERR_PARSE rather than QS_ERR_INVALID_ARGUMENT.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

qs_status fail(qs_status status, const std::string& message) {
    last_error = message;
    return status;
}

template <class F>
qs_status guarded(F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        return fail(QS_ERR_PARSE, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(QS_ERR_PARSE, e.what());
    } catch (const MismatchError& e) {
        return fail(QS_ERR_MISMATCH, e.what());
    } catch (const std::domain_error& e) {
        return fail(QS_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(QS_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(QS_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(QS_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QS_ERR_INTERNAL, "unknown error");
    }
}

template <class T>
T parsed(T (*parse)(std::string_view), const char* text) {
    try {
        return parse(text);
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

void require(const void* p, const char* what) {
    if (p == nullptr) throw std::invalid_argument(std::string(what) + " is null");
}

char* copy_out(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::optional<Rational> q_value_of(const char* text) {
    if (text == nullptr) return std::nullopt;
    return parsed(&Rational::parse, text);
}

const Bases& shared_bases() {
    static const Bases bases(Algebra::q_stuffle());
    return bases;
}

}  // namespace

extern "C" {

const char* qs_version(void) { return kGeneratorVersion; }

const char* qs_last_error(void) { return last_error.c_str(); }

void qs_string_free(char* s) { std::free(s); }

qs_status qs_poly_from_word(const char* word, qs_poly** out) {
    return guarded([&] {
        require(word, "word");
        require(out, "out");
        *out = new qs_poly{NCPolynomial(parsed(&Word::parse, word))};
        return QS_OK;
    });
}

qs_status qs_poly_from_json(const char* json, qs_poly** out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        NCPolynomial p;
        try {
            p = polynomial_from_json(Json::parse(json));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        *out = new qs_poly{std::move(p)};
        return QS_OK;
    });
}

void qs_poly_free(qs_poly* p) { delete p; }

qs_status qs_poly_equal(const qs_poly* a, const qs_poly* b, int* out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = a->value == b->value ? 1 : 0;
        return QS_OK;
    });
}

qs_status qs_product(qs_product_kind kind, const qs_poly* a, const qs_poly* b, qs_poly** out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        NCPolynomial result;
        switch (kind) {
            case QS_PRODUCT_CONC: result = a->value * b->value; break;
            case QS_PRODUCT_STUFFLE: result = Algebra::q_stuffle().product(a->value, b->value); break;
            case QS_PRODUCT_SHUFFLE: result = shuffle_poly(a->value, b->value); break;
            default: throw std::invalid_argument("unknown product kind");
        }
        *out = new qs_poly{std::move(result)};
        return QS_OK;
    });
}

qs_status qs_coproduct_json(const qs_poly* p, char** out) {
    return guarded([&] {
        require(p, "p");
        require(out, "out");
        *out = copy_out(to_json(Algebra::q_stuffle().coproduct(p->value)).dump());
        return QS_OK;
    });
}

qs_status qs_pi1(const qs_poly* p, qs_poly** out) {
    return guarded([&] {
        require(p, "p");
        require(out, "out");
        *out = new qs_poly{shared_bases().eulerian().pi1(p->value)};
        return QS_OK;
    });
}

qs_status qs_poly_render(const qs_poly* p, qs_format format, const char* q_value, char** out) {
    return guarded([&] {
        require(p, "p");
        require(out, "out");
        const auto q0 = q_value_of(q_value);
        const NCPolynomial value = q0 ? p->value.eval_q(*q0) : p->value;
        switch (format) {
            case QS_FORMAT_TEXT: *out = copy_out(to_text(value)); break;
            case QS_FORMAT_LATEX: *out = copy_out(to_latex(value)); break;
            case QS_FORMAT_JSON: *out = copy_out(to_json(value).dump()); break;
            default: throw std::invalid_argument("unknown format");
        }
        return QS_OK;
    });
}

qs_status qs_lyndon_words(unsigned weight, char** out) {
    return guarded([&] {
        require(out, "out");
        std::string text;
        for (const auto& l : lyndon_of_weight(weight)) text += l.to_string() + "\n";
        *out = copy_out(text);
        return QS_OK;
    });
}

qs_status qs_derivation_tree_json(const char* sequence, int largest_rise, char** out) {
    return guarded([&] {
        require(sequence, "sequence");
        require(out, "out");
        const StandardSequence s = [&] {
            try {
                return StandardSequence::parse(sequence);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        }();
        const auto tree = derivation_tree(s, largest_rise ? RisePolicy::largest : RisePolicy::smallest);
        *out = copy_out(to_json(tree).dump());
        return QS_OK;
    });
}

qs_status qs_basis_build(qs_basis_kind kind, unsigned max_weight, qs_sigma_method method, qs_basis** out) {
    return guarded([&] {
        require(out, "out");
        if (max_weight == 0) throw std::invalid_argument("max weight must be at least 1");
        static constexpr BasisKind kinds[] = {BasisKind::pi, BasisKind::sigma, BasisKind::chi, BasisKind::xi};
        static constexpr SigmaMethod methods[] = {SigmaMethod::oracle, SigmaMethod::recursive, SigmaMethod::both};
        if (kind < QS_BASIS_PI || kind > QS_BASIS_XI) throw std::invalid_argument("unknown basis kind");
        if (method < QS_SIGMA_ORACLE || method > QS_SIGMA_BOTH) throw std::invalid_argument("unknown sigma method");
        *out = new qs_basis{shared_bases().basis(kinds[kind], max_weight, methods[method])};
        return QS_OK;
    });
}

void qs_basis_free(qs_basis* b) { delete b; }

qs_status qs_basis_get(const qs_basis* b, const char* word, qs_poly** out) {
    return guarded([&] {
        require(b, "b");
        require(word, "word");
        require(out, "out");
        *out = new qs_poly{b->value.at(parsed(&Word::parse, word))};
        return QS_OK;
    });
}

qs_status qs_basis_render(const qs_basis* b, qs_format format, const char* q_value, char** out) {
    return guarded([&] {
        require(b, "b");
        require(out, "out");
        const auto q0 = q_value_of(q_value);
        const GradedBasis value = q0 ? eval_q(b->value, *q0) : b->value;
        switch (format) {
            case QS_FORMAT_TEXT: *out = copy_out(to_text(value)); break;
            case QS_FORMAT_LATEX: *out = copy_out(to_latex(value)); break;
            case QS_FORMAT_JSON: *out = copy_out(to_json(value).dump(2) + "\n"); break;
            default: throw std::invalid_argument("unknown format");
        }
        return QS_OK;
    });
}

qs_status qs_verify(qs_suite suite, unsigned max_weight, qs_report** out) {
    return guarded([&] {
        require(out, "out");
        static constexpr Suite suites[] = {Suite::duality, Suite::primitivity, Suite::factorization, Suite::axioms,
                                           Suite::all};
        if (suite < QS_SUITE_DUALITY || suite > QS_SUITE_ALL) throw std::invalid_argument("unknown suite");
        *out = new qs_report{run_suite(shared_bases(), suites[suite], max_weight)};
        return QS_OK;
    });
}

void qs_report_free(qs_report* r) { delete r; }

int qs_report_passed(const qs_report* r) { return r != nullptr && r->value.passed() ? 1 : 0; }

qs_status qs_report_render(const qs_report* r, qs_format format, char** out) {
    return guarded([&] {
        require(r, "r");
        require(out, "out");
        switch (format) {
            case QS_FORMAT_TEXT:
            case QS_FORMAT_LATEX: *out = copy_out(r->value.to_text()); break;
            case QS_FORMAT_JSON: *out = copy_out(to_json(r->value).dump(2) + "\n"); break;
            default: throw std::invalid_argument("unknown format");
        }
        return QS_OK;
    });
}

}  // extern "C"
