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

// qstuffle command-line frontend. Talks to the library only through the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qstuffle/qstuffle.h"

namespace {

constexpr int kExitFailure = 1;  // verification failure or method mismatch
constexpr int kExitInput = 2;    // malformed input

struct Config {
    unsigned max_weight = 6;
    std::optional<std::string> q_value;
    std::string format = "text";
    std::string sigma_method = "both";
    std::string out_file;
};

class CliError : public std::runtime_error {
public:
    CliError(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

void check(qs_status status) {
    if (status == QS_OK) return;
    const int code = status == QS_ERR_MISMATCH ? kExitFailure : status == QS_ERR_INTERNAL ? kExitFailure : kExitInput;
    throw CliError(code, qs_last_error());
}

struct PolyDeleter {
    void operator()(qs_poly* p) const { qs_poly_free(p); }
};
struct BasisDeleter {
    void operator()(qs_basis* b) const { qs_basis_free(b); }
};
struct ReportDeleter {
    void operator()(qs_report* r) const { qs_report_free(r); }
};
using Poly = std::unique_ptr<qs_poly, PolyDeleter>;

std::string take(char* s) {
    std::string out(s);
    qs_string_free(s);
    return out;
}

qs_format format_of(const Config& c) {
    if (c.format == "latex") return QS_FORMAT_LATEX;
    if (c.format == "json") return QS_FORMAT_JSON;
    return QS_FORMAT_TEXT;
}

const char* q_of(const Config& c) { return c.q_value ? c.q_value->c_str() : nullptr; }

Poly word_poly(const std::string& word) {
    qs_poly* p = nullptr;
    check(qs_poly_from_word(word.c_str(), &p));
    return Poly(p);
}

std::string render(const qs_poly* p, const Config& c) {
    char* s = nullptr;
    check(qs_poly_render(p, format_of(c), q_of(c), &s));
    return take(s);
}

void emit(const Config& c, const std::string& text) {
    std::string body = text;
    if (body.empty() || body.back() != '\n') body += '\n';
    if (c.out_file.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream file(c.out_file, std::ios::binary);
    if (!file) throw CliError(kExitInput, "cannot open '" + c.out_file + "' for writing");
    file << body;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) lines.push_back(line);
    return lines;
}

int cmd_lyndon(const Config& c) {
    std::ostringstream out;
    if (c.format == "json") out << "[";
    for (unsigned n = 1; n <= c.max_weight; ++n) {
        char* s = nullptr;
        check(qs_lyndon_words(n, &s));
        const auto words = split_lines(take(s));
        if (c.format == "json") {
            out << (n > 1 ? ",\n " : "") << "{\"weight\": " << n << ", \"words\": [";
            for (std::size_t i = 0; i < words.size(); ++i) out << (i ? ", " : "") << "[" << words[i] << "]";
            out << "]}";
        } else if (c.format == "latex") {
            out << n << " & ";
            for (std::size_t i = 0; i < words.size(); ++i) {
                Config latex = c;
                latex.q_value.reset();
                out << (i ? ",\\ " : "") << "$" << render(word_poly(words[i]).get(), latex) << "$";
            }
            out << " \\\\\n";
        } else {
            out << "weight " << n << ":";
            for (const auto& w : words) out << ' ' << w;
            out << '\n';
        }
    }
    if (c.format == "json") out << "]\n";
    emit(c, out.str());
    return 0;
}

int cmd_product(const Config& c, const std::string& kind, const std::string& u, const std::string& v) {
    qs_product_kind k = QS_PRODUCT_STUFFLE;
    if (kind == "conc") k = QS_PRODUCT_CONC;
    else if (kind == "shuffle") k = QS_PRODUCT_SHUFFLE;
    const Poly a = word_poly(u);
    const Poly b = word_poly(v);
    qs_poly* p = nullptr;
    check(qs_product(k, a.get(), b.get(), &p));
    const Poly result(p);
    emit(c, render(result.get(), c));
    return 0;
}

int cmd_basis(const Config& c, const std::string& kind) {
    const qs_basis_kind k = kind == "pi"    ? QS_BASIS_PI
                            : kind == "sigma" ? QS_BASIS_SIGMA
                            : kind == "chi"   ? QS_BASIS_CHI
                                              : QS_BASIS_XI;
    const qs_sigma_method m = c.sigma_method == "oracle"      ? QS_SIGMA_ORACLE
                              : c.sigma_method == "recursive" ? QS_SIGMA_RECURSIVE
                                                              : QS_SIGMA_BOTH;
    qs_basis* b = nullptr;
    check(qs_basis_build(k, c.max_weight, m, &b));
    const std::unique_ptr<qs_basis, BasisDeleter> basis(b);
    char* s = nullptr;
    check(qs_basis_render(basis.get(), format_of(c), q_of(c), &s));
    emit(c, take(s));
    return 0;
}

int cmd_verify(const Config& c, const std::string& suite) {
    const qs_suite s = suite == "duality"         ? QS_SUITE_DUALITY
                       : suite == "primitivity"   ? QS_SUITE_PRIMITIVITY
                       : suite == "factorization" ? QS_SUITE_FACTORIZATION
                       : suite == "axioms"        ? QS_SUITE_AXIOMS
                                                  : QS_SUITE_ALL;
    qs_report* r = nullptr;
    check(qs_verify(s, c.max_weight, &r));
    const std::unique_ptr<qs_report, ReportDeleter> report(r);
    char* text = nullptr;
    check(qs_report_render(report.get(), c.format == "json" ? QS_FORMAT_JSON : QS_FORMAT_TEXT, &text));
    emit(c, take(text));
    return qs_report_passed(report.get()) ? 0 : kExitFailure;
}

int cmd_tree(const Config& c, const std::string& sequence, bool largest) {
    char* s = nullptr;
    check(qs_derivation_tree_json(sequence.c_str(), largest ? 1 : 0, &s));
    emit(c, take(s));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-stuffle Hopf algebra: products, Eulerian projectors, dual bases, verification"};
    app.set_version_flag("--version", std::string(qs_version()));
    app.require_subcommand(1);
    app.fallthrough();

    Config config;
    app.add_option("--max-weight", config.max_weight, "largest weight computed")
        ->check(CLI::Range(1u, 64u))
        ->capture_default_str();
    app.add_option("--q", config.q_value, "substitute q = p/q in the output");
    app.add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"text", "latex", "json"}))
        ->capture_default_str();
    app.add_option("--sigma-method", config.sigma_method, "how Sigma is computed; both cross-checks")
        ->check(CLI::IsMember({"oracle", "recursive", "both"}))
        ->capture_default_str();
    app.add_option("--out", config.out_file, "write output to FILE instead of stdout");

    auto* lyndon = app.add_subcommand("lyndon", "list Lyndon words by weight");

    std::string product_kind, u, v;
    auto* product = app.add_subcommand("product", "product of two words");
    product->add_option("kind", product_kind, "stuffle | shuffle | conc")
        ->required()
        ->check(CLI::IsMember({"stuffle", "shuffle", "conc"}));
    product->add_option("u", u, "word such as 3,1,2 (e = empty word)")->required();
    product->add_option("v", v, "word")->required();

    std::string basis_kind;
    auto* basis = app.add_subcommand("basis", "graded basis up to --max-weight");
    basis->add_option("kind", basis_kind, "pi | sigma | chi | xi")
        ->required()
        ->check(CLI::IsMember({"pi", "sigma", "chi", "xi"}));

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run an invariant suite; exit 1 on any failure");
    verify->add_option("suite", suite, "duality | primitivity | factorization | axioms | all")
        ->required()
        ->check(CLI::IsMember({"duality", "primitivity", "factorization", "axioms", "all"}));

    std::string sequence;
    bool largest = false;
    auto* tree = app.add_subcommand("tree", "derivation tree of a standard sequence (JSON)");
    tree->add_option("sequence", sequence, "Lyndon words separated by ';', e.g. 4;2;1")->required();
    tree->add_flag("--largest-rise", largest, "split at the largest legal rise");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (lyndon->parsed()) return cmd_lyndon(config);
        if (product->parsed()) return cmd_product(config, product_kind, u, v);
        if (basis->parsed()) return cmd_basis(config, basis_kind);
        if (verify->parsed()) return cmd_verify(config, suite);
        if (tree->parsed()) return cmd_tree(config, sequence, largest);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code();
    }
    return kExitInput;
}
