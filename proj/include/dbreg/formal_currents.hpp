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

// Currents on the compactified cube as tensor words over a five-letter
// alphabet, with polynomial-form or tau-scalar coefficients.

#ifndef DBREG_FORMAL_CURRENTS_HPP
#define DBREG_FORMAL_CURRENTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dbreg/coefficients.hpp"
#include "dbreg/simplex_forms.hpp"
#include "dbreg/three_term.hpp"

namespace dbreg {

enum class Letter : std::uint8_t { RNEG, DLOG, LOG, PT0, PTINF };

int letter_degree(Letter l);
std::string letter_name(Letter l);
Letter parse_letter(const std::string& name);

using Word = std::vector<Letter>;

int word_degree(const Word& w);
/// Number of RNEG letters.
int rneg_count(const Word& w);
std::string word_name(const Word& w);

/// Sparse linear combination of length-n words. Zero coefficients are never stored.
template <class C>
class WordSum {
public:
    WordSum() = default;
    explicit WordSum(int n) : n_(n) {}
    WordSum(Word w, C c) : n_(static_cast<int>(w.size())) { add(std::move(w), std::move(c)); }

    int n() const { return n_; }
    const std::map<Word, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    C coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? C{} : it->second;
    }

    void add(Word w, C c);

    WordSum& operator+=(const WordSum& o) {
        if (is_zero() && n_ == 0) n_ = o.n_;
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    WordSum& operator-=(const WordSum& o) {
        if (is_zero() && n_ == 0) n_ = o.n_;
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    WordSum operator-() const {
        WordSum out(n_);
        for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
        return out;
    }
    template <class S>
    WordSum& operator*=(const S& s) {
        WordSum out(n_);
        for (const auto& [w, c] : terms_) out.add(w, c * s);
        return *this = std::move(out);
    }
    friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
    friend WordSum operator-(WordSum a, const WordSum& b) { return a -= b; }
    template <class S>
    friend WordSum operator*(WordSum a, const S& s) {
        return a *= s;
    }
    /// Equality of the represented element; the slot count of a zero sum is ignored.
    friend bool operator==(const WordSum& a, const WordSum& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const WordSum& a, const WordSum& b) { return !(a == b); }

private:
    int n_ = 0;
    std::map<Word, C> terms_;
};

template <class C>
void WordSum<C>::add(Word w, C c) {
    if (static_cast<int>(w.size()) != n_) {
        if (terms_.empty() && n_ == 0)
            n_ = static_cast<int>(w.size());
        else
            throw std::invalid_argument("word length does not match slot count");
    }
    if (scalar_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(std::move(w), c);
    if (!inserted) {
        it->second = it->second + c;
        if (scalar_is_zero(it->second)) terms_.erase(it);
    }
}

inline bool scalar_is_zero(const PolyForm<TauScalar>& c) { return c.is_zero(); }
inline bool scalar_is_zero(const PolyForm<Complex>& c) { return c.is_zero(); }

/// Path-model elements: words with polynomial-form coefficients.
using PathSum = WordSum<PolyForm<TauScalar>>;
/// Triple-model slot values: words with tau-scalar coefficients.
using ScalarSum = WordSum<TauScalar>;
using FormalTriple = Triple<ScalarSum>;

/// Slot concatenation with the Koszul sign (-1)^{|T1| |w2|}.
PathSum boxtimes(const PathSum& A, const PathSum& B);
ScalarSum boxtimes(const ScalarSum& A, const ScalarSum& B);

/// Current differential of a single word (graded Leibniz across slots).
ScalarSum word_differential(const Word& w);
/// Total differential: d_x on the coefficient plus the current differential.
PathSum differential(const PathSum& A);
ScalarSum differential(const ScalarSum& A);

/// Permutations act on slots: g[i] is the destination slot of slot i (0-based).
using Permutation = std::vector<int>;

int permutation_sign(const Permutation& g);
Permutation compose(const Permutation& g, const Permutation& h);  // g after h
Permutation inverse(const Permutation& g);
std::vector<Permutation> all_permutations(int n);

/// Reorders letters by g with the Koszul sign of the odd letters it crosses.
PathSum permute_push(const Permutation& g, const PathSum& A);
ScalarSum permute_push(const Permutation& g, const ScalarSum& A);

/// (1/n!) sum over g of sgn(g) permute_push(g, A).
ScalarSum alt_push(const ScalarSum& A);
PathSum alt_push(const PathSum& A);
FormalTriple alt_push(const FormalTriple& t);

/// Slotwise (w(0) T, w(1) T, int w T).
FormalTriple ev_words(const PathSum& A);

/// Inserts the single-slot sum `letter_sum` at slot i (0-based) of every word of A.
PathSum insert_slot(const PathSum& A, int i, const ScalarSum& letter_sum);
ScalarSum insert_slot(const ScalarSum& A, int i, const ScalarSum& letter_sum);

PathSum build_RP(int n);
FormalTriple R1_C();
/// Iterated alpha = 0 exterior product of R1_C.
FormalTriple build_RC(int n);
FormalTriple boxtimes_alpha(const Rational& alpha, const FormalTriple& t, const FormalTriple& u);

/// The closed forms tau^n R..R, D..D and sum_k (-tau)^k R^k L D^{n-k-1}.
FormalTriple closed_form_RC(int n);

/// Splits a path sum by dx-degree.
PathSum dx_part(const PathSum& A, int dx_degree);

/// Human-readable renderings.
std::string to_string(const PathSum& A);
std::string to_string(const ScalarSum& A);
std::string to_string(const FormalTriple& t);

}  // namespace dbreg

#endif  // DBREG_FORMAL_CURRENTS_HPP
