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

#include "dbreg/simplex_forms.hpp"

#include <cstdio>
#include <sstream>

namespace dbreg {

namespace {

std::string scalar_text(const TauScalar& c) {
    if (c.terms().size() != 1) return "(" + c.to_string() + ")";
    const auto& [k, q] = *c.terms().begin();
    std::string tau = k == 0 ? "" : k == 1 ? "2πi" : "(2πi)^" + std::to_string(k);
    if (tau.empty()) return q.get_str();
    if (q == 1) return tau;
    if (q == -1) return "-" + tau;
    return q.get_str() + "*" + tau;
}

std::string power_text(const char* base, int e) {
    if (e == 0) return "";
    if (e == 1) return base;
    return std::string(base) + "^" + std::to_string(e);
}

// Writes p = c x^a (1-x)^b when possible.
bool factor_beta(std::vector<TauScalar> p, TauScalar& c, int& a, int& b) {
    a = 0;
    while (!p.empty() && p.front().is_zero()) {
        p.erase(p.begin());
        ++a;
    }
    if (p.empty()) return false;
    b = 0;
    while (p.size() > 1) {
        TauScalar at1;
        for (const auto& v : p) at1 += v;
        if (!at1.is_zero()) return false;
        // synthetic division by (x - 1), then negate to divide by (1 - x)
        std::vector<TauScalar> r(p.size() - 1);
        TauScalar carry;
        for (std::size_t i = p.size() - 1; i >= 1; --i) {
            carry += p[i];
            r[i - 1] = -carry;
        }
        p = std::move(r);
        ++b;
    }
    c = p[0];
    return true;
}

std::string part_text(const std::vector<TauScalar>& p) {
    TauScalar c;
    int a = 0, b = 0;
    if (factor_beta(p, c, a, b)) {
        std::string xs = power_text("x", a);
        std::string ys = b == 0 ? "" : b == 1 ? "(1-x)" : "(1-x)^" + std::to_string(b);
        std::string body = xs;
        if (!ys.empty()) body += (body.empty() ? "" : "*") + ys;
        std::string cs = scalar_text(c);
        if (body.empty()) return cs;
        if (cs == "1") return body;
        if (cs == "-1") return "-" + body;
        return cs + "*" + body;
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << scalar_text(p[k]);
        if (k > 0) os << "*" << power_text("x", static_cast<int>(k));
    }
    return "(" + os.str() + ")";
}

}  // namespace

std::string to_string(const PolyForm<TauScalar>& u) {
    if (u.is_zero()) return "0";
    std::string out;
    if (u.has_zero_form()) out = part_text(u.f);
    if (u.has_one_form()) {
        std::string g = part_text(u.g);
        std::string term = g == "1" ? "dx" : g == "-1" ? "-dx" : g + " dx";
        out = out.empty() ? term : out + " + " + term;
    }
    return out;
}

std::string to_string(const PolyForm<Complex>& u) {
    if (u.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::vector<Complex>& p, bool dx) {
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k] == Complex(0, 0)) continue;
            if (!first) os << " + ";
            first = false;
            char buf[96];
            std::snprintf(buf, sizeof buf, "(%.15g%+.15gi)", p[k].real(), p[k].imag());
            os << buf;
            if (k > 0) os << "*" << power_text("x", static_cast<int>(k));
            if (dx) os << " dx";
        }
    };
    emit(u.f, false);
    emit(u.g, true);
    return os.str();
}

}  // namespace dbreg
