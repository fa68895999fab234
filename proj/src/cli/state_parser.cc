// Copyright 2026 The cvtele Authors
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

#include "cvtele/cli/state_parser.hpp"

#include <charconv>
#include <cmath>

#include <fmt/format.h>

namespace cvtele::cli {
namespace {

constexpr double kNormWarning = 1e-6;

class Cursor {
   public:
    explicit Cursor(std::string_view text) : text_(text) {}

    size_t pos() const { return pos_; }
    bool done() const { return pos_ >= text_.size(); }
    std::string_view text() const { return text_; }

    bool consume(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    bool consume(char c) {
        if (!done() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() const { return done() ? '\0' : text_[pos_]; }

    // Signed decimal with optional exponent. from_chars rejects a leading '+'.
    double number(const char* what) {
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin) {
            throw SyntaxError(text_, pos_, what);
        }
        if (!std::isfinite(value)) {
            throw SyntaxError(text_, pos_, "a finite number");
        }
        pos_ += static_cast<size_t>(ptr - begin);
        return value;
    }

    unsigned long integer(const char* what) {
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        unsigned long value = 0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin) {
            throw SyntaxError(text_, pos_, what);
        }
        pos_ += static_cast<size_t>(ptr - begin);
        return value;
    }

    void expect_end() {
        if (!done()) {
            throw SyntaxError(text_, pos_, "end of input");
        }
    }

   private:
    std::string_view text_;
    size_t pos_ = 0;
};

Complex parse_element(Cursor& cur) {
    double re = cur.number("a real number");
    char op = cur.peek();
    if (op != '+' && op != '-') {
        return {re, 0.0};
    }
    cur.consume(op);
    if (cur.peek() == '+' || cur.peek() == '-') {
        throw SyntaxError(cur.text(), cur.pos(), "an unsigned imaginary magnitude");
    }
    double im = cur.number("an imaginary magnitude");
    if (!cur.consume('i')) {
        throw SyntaxError(cur.text(), cur.pos(), "'i'");
    }
    return {re, op == '-' ? -im : im};
}

}  // namespace

SyntaxError::SyntaxError(std::string_view text, size_t position, const std::string& expected)
    : UsageError(fmt::format("state syntax error at position {} in \"{}\": expected {}", position,
                             text, expected)),
      position_(position) {}

StateExpr parse_state(std::string_view text) {
    Cursor cur(text);
    std::vector<std::string> warnings;
    auto finish = [&](StateSpec s) {
        cur.expect_end();
        return StateExpr{std::string(text), std::move(s), std::move(warnings)};
    };

    if (cur.consume("coh:")) {
        double re = cur.number("a real number");
        double im = 0.0;
        if (cur.consume(',')) {
            im = cur.number("a real number");
        }
        return finish(StateSpec::coherent({re, im}));
    }
    if (cur.consume("fock:")) {
        size_t at = cur.pos();
        unsigned long n = cur.integer("a photon number");
        if (n > static_cast<unsigned long>(kMaxFockIndex)) {
            throw SyntaxError(text, at, fmt::format("a photon number <= {}", kMaxFockIndex));
        }
        return finish(StateSpec::fock(static_cast<int>(n)));
    }
    if (cur.consume("superpos01")) {
        return finish(StateSpec::superposition01());
    }
    if (cur.consume("vec:")) {
        if (cur.done()) {
            throw SyntaxError(text, cur.pos(), "at least one coefficient");
        }
        std::vector<Complex> coeffs;
        do {
            coeffs.push_back(parse_element(cur));
        } while (cur.consume(';'));
        cur.expect_end();
        if (coeffs.size() > static_cast<size_t>(kMaxFockIndex) + 1) {
            throw SyntaxError(text, 4, fmt::format("at most {} coefficients", kMaxFockIndex + 1));
        }
        double norm = 0.0;
        StateSpec s = [&] {
            try {
                return StateSpec::normalized(coeffs, &norm);
            } catch (const DomainError&) {
                throw SyntaxError(text, 4, "a nonzero coefficient vector");
            }
        }();
        if (std::abs(norm - 1.0) > kNormWarning) {
            warnings.push_back(fmt::format("vec: input norm {:.6g} rescaled to 1", norm));
        }
        return finish(std::move(s));
    }
    throw SyntaxError(text, 0, "one of 'coh:', 'fock:', 'superpos01', 'vec:'");
}

}  // namespace cvtele::cli
