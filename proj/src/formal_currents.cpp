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

#include "dbreg/formal_currents.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dbreg {

int letter_degree(Letter l) {
    switch (l) {
        case Letter::RNEG:
        case Letter::DLOG: return 1;
        case Letter::LOG: return 0;
        case Letter::PT0:
        case Letter::PTINF: return 2;
    }
    return 0;
}

std::string letter_name(Letter l) {
    switch (l) {
        case Letter::RNEG: return "RNEG";
        case Letter::DLOG: return "DLOG";
        case Letter::LOG: return "LOG";
        case Letter::PT0: return "PT0";
        case Letter::PTINF: return "PTINF";
    }
    return "?";
}

Letter parse_letter(const std::string& name) {
    for (Letter l : {Letter::RNEG, Letter::DLOG, Letter::LOG, Letter::PT0, Letter::PTINF})
        if (letter_name(l) == name) return l;
    throw std::invalid_argument("unknown letter: " + name);
}

int word_degree(const Word& w) {
    int d = 0;
    for (Letter l : w) d += letter_degree(l);
    return d;
}

int rneg_count(const Word& w) { return static_cast<int>(std::count(w.begin(), w.end(), Letter::RNEG)); }

std::string word_name(const Word& w) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + letter_name(w[i]);
    return out + "]";
}

namespace {

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

ScalarSum letter_differential(Letter l) {
    const TauScalar tau = TauScalar::tau();
    ScalarSum out(1);
    switch (l) {
        case Letter::LOG:
            out.add({Letter::DLOG}, TauScalar(1));
            out.add({Letter::RNEG}, -tau);
            break;
        case Letter::RNEG:
            out.add({Letter::PT0}, TauScalar(1));
            out.add({Letter::PTINF}, TauScalar(-1));
            break;
        case Letter::DLOG:
            out.add({Letter::PT0}, tau);
            out.add({Letter::PTINF}, -tau);
            break;
        default: break;
    }
    return out;
}

template <class C>
WordSum<C> permute_generic(const Permutation& g, const WordSum<C>& A) {
    const int n = A.n();
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("permutation size mismatch");
    WordSum<C> out(n);
    for (const auto& [w, c] : A.terms()) {
        Word v(static_cast<std::size_t>(n));
        int crossings = 0;
        for (int i = 0; i < n; ++i) {
            v[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])] = w[static_cast<std::size_t>(i)];
            if (letter_degree(w[static_cast<std::size_t>(i)]) % 2 == 0) continue;
            for (int j = i + 1; j < n; ++j)
                if (letter_degree(w[static_cast<std::size_t>(j)]) % 2 == 1 &&
                    g[static_cast<std::size_t>(i)] > g[static_cast<std::size_t>(j)])
                    ++crossings;
        }
        out.add(std::move(v), crossings % 2 ? -c : c);
    }
    return out;
}

template <class C>
WordSum<C> alt_generic(const WordSum<C>& A) {
    const int n = A.n();
    WordSum<C> out(n);
    for (const auto& g : all_permutations(n)) {
        WordSum<C> pg = permute_generic(g, A);
        if (permutation_sign(g) < 0)
            out -= pg;
        else
            out += pg;
    }
    return out * TauScalar(Rational(1) / factorial(n));
}

template <class C>
WordSum<C> insert_generic(const WordSum<C>& A, int i, const ScalarSum& letter_sum) {
    if (letter_sum.n() != 1) throw std::invalid_argument("insert_slot expects a one-slot sum");
    if (i < 0 || i > A.n()) throw std::invalid_argument("insert_slot: slot out of range");
    WordSum<C> out(A.n() + 1);
    for (const auto& [w, c] : A.terms())
        for (const auto& [l, s] : letter_sum.terms()) {
            Word v = w;
            v.insert(v.begin() + i, l[0]);
            out.add(std::move(v), c * s);
        }
    return out;
}

std::string tau_text(const TauScalar& c, bool& negative) {
    negative = false;
    if (c.terms().size() != 1) return "(" + c.to_string() + ")";
    auto [k, q] = *c.terms().begin();
    if (q < 0) {
        negative = true;
        q = -q;
    }
    std::string tau = k == 0 ? "" : k == 1 ? "2πi" : "(2πi)^" + std::to_string(k);
    if (tau.empty()) return q.get_str();
    if (q == 1) return tau;
    return q.get_str() + "*" + tau;
}

std::string letter_text(Letter l, int slot, int n) {
    std::string z = n == 1 ? "z" : "z" + std::to_string(slot + 1);
    switch (l) {
        case Letter::RNEG: return "ℝ⁻";
        case Letter::DLOG: return "dlog " + z;
        case Letter::LOG: return "log " + z;
        case Letter::PT0: return "[0]";
        case Letter::PTINF: return "[∞]";
    }
    return "?";
}

std::string word_text(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i)
        out += (i ? " ⊠ " : "") + letter_text(w[i], static_cast<int>(i), static_cast<int>(w.size()));
    return out.empty() ? "1" : out;
}

}  // namespace

PathSum boxtimes(const PathSum& A, const PathSum& B) {
    PathSum out(A.n() + B.n());
    for (const auto& [t1, w1] : A.terms())
        for (const auto& [t2, w2] : B.terms()) {
            const PolyForm<TauScalar>& twisted = word_degree(t1) % 2 ? w2.parity_twist() : w2;
            out.add(concat(t1, t2), wedge(w1, twisted));
        }
    return out;
}

ScalarSum boxtimes(const ScalarSum& A, const ScalarSum& B) {
    ScalarSum out(A.n() + B.n());
    for (const auto& [t1, c1] : A.terms())
        for (const auto& [t2, c2] : B.terms()) out.add(concat(t1, t2), c1 * c2);
    return out;
}

ScalarSum word_differential(const Word& w) {
    ScalarSum out(static_cast<int>(w.size()));
    int before = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const TauScalar sign(before % 2 ? -1 : 1);
        const ScalarSum dl = letter_differential(w[i]);
        for (const auto& [l, c] : dl.terms()) {
            Word v = w;
            v[i] = l[0];
            out.add(std::move(v), c * sign);
        }
        before += letter_degree(w[i]);
    }
    return out;
}

PathSum differential(const PathSum& A) {
    PathSum out(A.n());
    for (const auto& [w, c] : A.terms()) {
        out.add(w, differential(c));
        const PolyForm<TauScalar> twisted = c.parity_twist();
        const ScalarSum dw = word_differential(w);
        for (const auto& [v, s] : dw.terms()) out.add(v, twisted * s);
    }
    return out;
}

ScalarSum differential(const ScalarSum& A) {
    ScalarSum out(A.n());
    for (const auto& [w, c] : A.terms()) {
        const ScalarSum dw = word_differential(w);
        for (const auto& [v, s] : dw.terms()) out.add(v, c * s);
    }
    return out;
}

int permutation_sign(const Permutation& g) {
    int inv = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g[i] > g[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

Permutation compose(const Permutation& g, const Permutation& h) {
    Permutation out(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) out[i] = g[static_cast<std::size_t>(h[i])];
    return out;
}

Permutation inverse(const Permutation& g) {
    Permutation out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[static_cast<std::size_t>(g[i])] = static_cast<int>(i);
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    Permutation g(static_cast<std::size_t>(n));
    std::iota(g.begin(), g.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(g);
    } while (std::next_permutation(g.begin(), g.end()));
    return out;
}

PathSum permute_push(const Permutation& g, const PathSum& A) { return permute_generic(g, A); }
ScalarSum permute_push(const Permutation& g, const ScalarSum& A) { return permute_generic(g, A); }

ScalarSum alt_push(const ScalarSum& A) { return alt_generic(A); }
PathSum alt_push(const PathSum& A) { return alt_generic(A); }

FormalTriple alt_push(const FormalTriple& t) {
    return {alt_push(t.a), alt_push(t.b), alt_push(t.c), t.degree};
}

FormalTriple ev_words(const PathSum& A) {
    FormalTriple out{ScalarSum(A.n()), ScalarSum(A.n()), ScalarSum(A.n()), 0};
    bool first = true;
    for (const auto& [w, c] : A.terms()) {
        out.a.add(w, evaluate_at(c, 0));
        out.b.add(w, evaluate_at(c, 1));
        out.c.add(w, integrate_full(c));
        if (first) out.degree = c.has_zero_form() ? word_degree(w) : word_degree(w) + 1;
        first = false;
    }
    return out;
}

PathSum insert_slot(const PathSum& A, int i, const ScalarSum& letter_sum) {
    return insert_generic(A, i, letter_sum);
}

ScalarSum insert_slot(const ScalarSum& A, int i, const ScalarSum& letter_sum) {
    return insert_generic(A, i, letter_sum);
}

PathSum build_RP(int n) {
    if (n < 1) throw std::invalid_argument("build_RP: n must be positive");
    using PF = PolyForm<TauScalar>;
    PathSum r1(1);
    r1.add({Letter::RNEG}, PF::one_minus_x() * TauScalar::tau());
    r1.add({Letter::DLOG}, PF::x());
    r1.add({Letter::LOG}, PF::dx());
    PathSum out = r1;
    for (int k = 1; k < n; ++k) out = boxtimes(out, r1);
    return out;
}

FormalTriple R1_C() {
    return {ScalarSum({Letter::RNEG}, TauScalar::tau()), ScalarSum({Letter::DLOG}, TauScalar(1)),
            ScalarSum({Letter::LOG}, TauScalar(1)), 1};
}

FormalTriple boxtimes_alpha(const Rational& alpha, const FormalTriple& t, const FormalTriple& u) {
    auto mul = [](const ScalarSum& x, const ScalarSum& y) { return boxtimes(x, y); };
    FormalTriple out = product_alpha(alpha, t, u, mul);
    // keep slot counts meaningful even when a component vanishes
    const int n = t.a.n() + u.a.n();
    if (out.a.is_zero()) out.a = ScalarSum(n);
    if (out.b.is_zero()) out.b = ScalarSum(n);
    if (out.c.is_zero()) out.c = ScalarSum(n);
    return out;
}

FormalTriple build_RC(int n) {
    if (n < 1) throw std::invalid_argument("build_RC: n must be positive");
    FormalTriple out = R1_C();
    for (int k = 1; k < n; ++k) out = boxtimes_alpha(0, out, R1_C());
    return out;
}

FormalTriple closed_form_RC(int n) {
    if (n < 1) throw std::invalid_argument("closed_form_RC: n must be positive");
    FormalTriple out{ScalarSum(n), ScalarSum(n), ScalarSum(n), n};
    out.a.add(Word(static_cast<std::size_t>(n), Letter::RNEG), TauScalar::tau(n));
    out.b.add(Word(static_cast<std::size_t>(n), Letter::DLOG), TauScalar(1));
    for (int k = 0; k < n; ++k) {
        Word w(static_cast<std::size_t>(k), Letter::RNEG);
        w.push_back(Letter::LOG);
        w.resize(static_cast<std::size_t>(n), Letter::DLOG);
        out.c.add(std::move(w), TauScalar(k % 2 ? -1 : 1, k));
    }
    return out;
}

PathSum dx_part(const PathSum& A, int dx_degree) {
    PathSum out(A.n());
    for (const auto& [w, c] : A.terms()) out.add(w, dx_degree == 0 ? c.zero_form_part() : c.one_form_part());
    return out;
}

std::string to_string(const PathSum& A) {
    if (A.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : A.terms()) {
        std::string coeff = to_string(c);
        bool neg = !coeff.empty() && coeff[0] == '-' && coeff.find(" + ") == std::string::npos;
        if (neg) coeff = coeff.substr(1);
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        if (coeff == "1")
            os << word_text(w);
        else if (coeff == "dx")
            os << "dx " << word_text(w);
        else
            os << coeff << " " << word_text(w);
    }
    return os.str();
}

std::string to_string(const ScalarSum& A) {
    if (A.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : A.terms()) {
        bool neg = false;
        std::string coeff = tau_text(c, neg);
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        if (coeff != "1") os << coeff << " ";
        os << word_text(w);
    }
    return os.str();
}

std::string to_string(const FormalTriple& t) {
    return "(" + to_string(t.a) + ", " + to_string(t.b) + ", " + to_string(t.c) + ")";
}

}  // namespace dbreg
