/*
   Copyright 2026 The betabranch authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// 0-1 digit words (finite words are 0^inf-padded, so every word carries an
// explicit primitive period), the value map into Q(q), greedy/lazy digit
// generation, and the Thue-Morse sequence.

#ifndef BETABRANCH_WORDS_HPP
#define BETABRANCH_WORDS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "betabranch/field.hpp"

namespace betabranch {

using Digits = std::vector<std::uint8_t>;

inline Digits digits_from(const std::string& s) {
    Digits d;
    d.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw ParseError(std::string("invalid digit '") + c + "'", 0);
        d.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return d;
}

inline std::string digits_str(const Digits& d) {
    std::string s;
    s.reserve(d.size());
    for (auto x : d) s += static_cast<char>('0' + x);
    return s;
}

class DigitWord {
   public:
    DigitWord() : per_{0} {}  // the zero word (0)*
    DigitWord(Digits preperiod, Digits period) : pre_(std::move(preperiod)), per_(std::move(period)) {
        if (per_.empty()) per_ = {0};  // finite word: pad with 0^inf
        canonicalize();
    }

    // grammar: digits | digits "(" digits ")*" | "(" digits ")*"
    static DigitWord parse(const std::string& text) {
        std::size_t open = text.find('(');
        if (open == std::string::npos) {
            if (text.empty()) throw ParseError("empty word", 0);
            return DigitWord(digits_from(text), {});
        }
        if (text.size() < open + 3 || text.back() != '*' || text[text.size() - 2] != ')')
            throw ParseError("expected '(digits)*'", open);
        std::string per = text.substr(open + 1, text.size() - open - 3);
        if (per.empty()) throw ParseError("empty period group", open + 1);
        if (per.find('(') != std::string::npos || per.find(')') != std::string::npos)
            throw ParseError("nested group", open + 1);
        return DigitWord(digits_from(text.substr(0, open)), digits_from(per));
    }

    const Digits& preperiod() const noexcept { return pre_; }
    const Digits& period() const noexcept { return per_; }
    bool is_zero_tail() const noexcept { return per_.size() == 1 && per_[0] == 0; }

    std::string str() const {
        std::string s = digits_str(pre_);
        s += "(";
        s += digits_str(per_);
        s += ")*";
        return s;
    }

    std::uint8_t digit(std::size_t i) const {  // 0-based unrolled access
        if (i < pre_.size()) return pre_[i];
        return per_[(i - pre_.size()) % per_.size()];
    }
    Digits prefix(std::size_t n) const {
        Digits d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = digit(i);
        return d;
    }

    bool operator==(const DigitWord& o) const noexcept { return pre_ == o.pre_ && per_ == o.per_; }
    bool operator!=(const DigitWord& o) const noexcept { return !(*this == o); }

    // lexicographic order of the unrolled infinite sequences
    int lex_compare(const DigitWord& o) const {
        if (*this == o) return 0;
        std::size_t bound = std::max(pre_.size(), o.pre_.size()) +
                            std::lcm(per_.size(), o.per_.size()) + std::max(per_.size(), o.per_.size());
        for (std::size_t i = 0; i < bound; ++i) {
            if (digit(i) != o.digit(i)) return digit(i) < o.digit(i) ? -1 : +1;
        }
        return 0;  // unreachable for canonical distinct words
    }

    DigitWord complement() const {
        Digits p = pre_, q = per_;
        for (auto& d : p) d ^= 1;
        for (auto& d : q) d ^= 1;
        return DigitWord(std::move(p), std::move(q));
    }

    DigitWord shift() const {
        if (!pre_.empty()) return DigitWord(Digits(pre_.begin() + 1, pre_.end()), per_);
        Digits rot(per_.begin() + 1, per_.end());
        rot.push_back(per_.front());
        return DigitWord({}, std::move(rot));
    }

   private:
    void canonicalize() {
        // primitive period
        for (std::size_t d = 1; d < per_.size(); ++d) {
            if (per_.size() % d) continue;
            bool rep = true;
            for (std::size_t i = d; i < per_.size() && rep; ++i) rep = per_[i] == per_[i % d];
            if (rep) {
                per_.resize(d);
                break;
            }
        }
        // minimal preperiod: roll the boundary left while the digits agree
        while (!pre_.empty() && pre_.back() == per_.back()) {
            std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
            pre_.pop_back();
        }
    }

    Digits pre_, per_;
};

// exact value sum_{n>=1} a_n q^{-n} in Q(q)
inline FieldElement value_of(const DigitWord& w, const BasePtr& b) {
    FieldElement lam = FieldElement::generator(b).inverse();
    FieldElement acc = FieldElement::zero(b);
    FieldElement p = FieldElement::one(b);
    for (auto d : w.preperiod()) {
        p = p * lam;
        if (d) acc = acc + p;
    }
    FieldElement perv = FieldElement::zero(b);
    FieldElement pp = FieldElement::one(b);
    for (auto d : w.period()) {
        pp = pp * lam;
        if (d) perv = perv + pp;
    }
    if (!perv.rep_is_zero()) {
        FieldElement denom = FieldElement::one(b) - lam.pow(static_cast<unsigned>(w.period().size()));
        acc = acc + p * perv / denom;
    }
    return acc;
}

// I_q = [0, 1/(q-1)]
inline FieldElement interval_sup(const BasePtr& b) {
    return (FieldElement::generator(b) - Rat(1)).inverse();
}
inline bool in_interval(const FieldElement& x) {
    return x.sign() >= 0 && (interval_sup(x.base()) - x).sign() >= 0;
}

// greedy: digit 1 whenever q s - 1 >= 0 (ties take 1)
inline std::string greedy(const FieldElement& x, std::size_t n) {
    if (!in_interval(x)) throw std::domain_error("greedy: value outside [0, 1/(q-1)]");
    FieldElement q = FieldElement::generator(x.base());
    FieldElement s = x;
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
        FieldElement t = q * s - Rat(1);
        if (t.sign() >= 0) {
            out += '1';
            s = std::move(t);
        } else {
            out += '0';
            s = q * s;
        }
    }
    return out;
}

// lazy: digit 0 whenever q s <= 1/(q-1) (ties take 0)
inline std::string lazy(const FieldElement& x, std::size_t n) {
    if (!in_interval(x)) throw std::domain_error("lazy: value outside [0, 1/(q-1)]");
    FieldElement q = FieldElement::generator(x.base());
    FieldElement sup = interval_sup(x.base());
    FieldElement s = x;
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
        FieldElement t = q * s;
        if ((sup - t).sign() >= 0) {
            out += '0';
            s = std::move(t);
        } else {
            out += '1';
            s = t - Rat(1);
        }
    }
    return out;
}

// first n bits of the fixed point of 0 -> 01, 1 -> 10
inline Digits thue_morse(std::size_t n) {
    Digits bits(n);
    for (std::size_t i = 0; i < n; ++i) {
        bits[i] = static_cast<std::uint8_t>(__builtin_popcountll(static_cast<unsigned long long>(i)) & 1);
    }
    return bits;
}

}  // namespace betabranch

#endif
