// Copyright 2026 The dbreg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dbreg/expression.hpp"

#include <cctype>

#include "dbreg/errors.hpp"

namespace dbreg {

namespace {

class Parser {
public:
    Parser(const std::string& text, const ParameterMap& params, const std::string& var)
        : s_(text), params_(params), var_(var) {}

    RationalFunction parse() {
        RationalFunction r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("expression \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_primary() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '.' || c == '_';
    }

    RationalFunction expr() {
        RationalFunction r = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                r += term();
            } else if (peek('-')) {
                ++pos_;
                r -= term();
            } else {
                return r;
            }
        }
    }

    RationalFunction term() {
        RationalFunction r = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                r *= unary();
            } else if (peek('/')) {
                ++pos_;
                RationalFunction d = unary();
                if (d.is_zero()) fail("division by zero");
                r /= d;
            } else if (starts_primary()) {
                r *= power();
            } else {
                return r;
            }
        }
    }

    RationalFunction unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    RationalFunction power() {
        RationalFunction base = primary();
        if (!peek('^')) return base;
        ++pos_;
        bool neg = false;
        if (peek('-')) {
            neg = true;
            ++pos_;
        }
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("integer exponent expected");
        if (pos_ - start > 3) fail("exponent too large");
        int e = std::stoi(s_.substr(start, pos_ - start));
        if (neg && base.is_zero()) fail("division by zero");
        return base.pow(neg ? -e : e);
    }

    RationalFunction primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction r = expr();
            if (!peek(')')) fail("')' expected");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
                std::size_t save = pos_++;
                if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
                if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                } else {
                    pos_ = save;
                }
            }
            try {
                return RationalFunction(Polynomial(GaussianRational(parse_rational(s_.substr(start, pos_ - start)))));
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            if (id == var_) return RationalFunction(Polynomial::t());
            if (auto it = params_.find(id); it != params_.end()) return RationalFunction(Polynomial(it->second));
            if (id == "i") return RationalFunction(Polynomial(GaussianRational::i()));
            pos_ = start;
            fail("unknown identifier '" + id + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string s_;
    const ParameterMap& params_;
    std::string var_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(const std::string& text, const ParameterMap& params, const std::string& var) {
    try {
        return Parser(text, params, var).parse();
    } catch (const std::domain_error& e) {
        throw ParseError("expression \"" + text + "\": " + e.what());
    }
}

GaussianRational parse_constant(const std::string& text, const ParameterMap& params) {
    RationalFunction r = parse_expression(text, params, "\x01");
    if (!r.is_constant()) throw ParseError("expression \"" + text + "\" is not constant");
    return r.constant_value();
}

}  // namespace dbreg
