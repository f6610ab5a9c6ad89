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

// Named constants and parametric base families: the golden ratio G, q_omega,
// q2, qf, the tribonacci base T, the multinacci family T_k, the Thue-Morse
// truncation family qf_n with its z_n witnesses, the countable-branching
// family q_n, and the series-defined Komornik-Loreti constant (a bracketing
// interval, not an algebraic base).

#ifndef BETABRANCH_CATALOG_HPP
#define BETABRANCH_CATALOG_HPP

#include <memory>
#include <string>
#include <vector>

#include "betabranch/enumerator.hpp"
#include "betabranch/words.hpp"

namespace betabranch::catalog {

struct ConstantEntry {
    std::string name;
    std::string equation;   // defining equation, "x^2=x+1" style, or the series form
    BasePtr base;           // null for the series-defined qKL
    RatInterval bracket;    // qKL only
    std::string table_value;  // 5-decimal reference
};

inline BasePtr make_base(const std::string& minpoly_rhs_free, const std::string& label) {
    return std::make_shared<const AlgebraicNumber>(IntPoly::parse(minpoly_rhs_free), Rat(1), Rat(2), label);
}

inline const BasePtr& golden() {
    static const BasePtr b = make_base("x^2-x-1", "G");
    return b;
}
inline const BasePtr& q_omega() {
    static const BasePtr b = make_base("x^5-x^4-x^3-x+1", "q_omega");
    return b;
}
inline const BasePtr& q2() {
    static const BasePtr b = make_base("x^4-2*x^2-x-1", "q2");
    return b;
}
inline const BasePtr& qf() {
    static const BasePtr b = make_base("x^3-2*x^2+x-1", "qf");
    return b;
}
inline const BasePtr& tribonacci() {
    static const BasePtr b = make_base("x^3-x^2-x-1", "T");
    return b;
}

// bracketing interval of width <= eps for the root of sum m_n x^(-n) = 1,
// with the Thue-Morse sequence indexed from 0 (coefficients 1101 0011 ...)
inline RatInterval komornik_loreti(const Rat& eps) {
    if (sign_of(eps) <= 0) throw std::invalid_argument("komornik_loreti: eps > 0");
    std::size_t terms = 96;
    Digits bits = thue_morse(terms + 1);
    auto partial = [&](const Rat& x) -> Rat {  // sum_{n=1..terms} m_n x^-n, exact
        Rat inv = Rat(1) / x, acc(0), p(1);
        for (std::size_t n = 1; n <= terms; ++n) {
            p *= inv;
            if (bits[n]) acc += p;
        }
        return acc;
    };
    auto tail_bound = [&](const Rat& x) -> Rat {
        return Rat(rat_pow(Rat(1) / x, static_cast<unsigned long>(terms)) / (x - 1));
    };

    Rat lo(3, 2), hi(2);
    // lo certifies: truncated series >= 1  =>  full series > 1  =>  lo below the root
    // hi certifies: truncated series + tail <= 1  =>  hi above the root
    while (hi - lo > eps) {
        Rat mid = (lo + hi) / 2;
        Rat s = partial(mid);
        if (s >= 1) {
            lo = mid;
        } else if (s + tail_bound(mid) <= 1) {
            hi = mid;
        } else {
            terms *= 2;
            bits = thue_morse(terms + 1);
        }
    }
    return {lo, hi};
}

inline std::string equation_of(const std::string& name) {
    if (name == "G") return "x^2=x+1";
    if (name == "q_omega") return "x^5=x^4+x^3+x-1";
    if (name == "q2") return "x^4=2x^2+x+1";
    if (name == "qf") return "x^3=2x^2-x+1";
    if (name == "qKL") return "sum m_n x^-n = 1 (Thue-Morse m)";
    if (name == "T") return "x^3=x^2+x+1";
    throw std::invalid_argument("unknown constant '" + name + "'");
}

inline const std::vector<std::string>& constant_names() {
    static const std::vector<std::string> names{"G", "q_omega", "q2", "qf", "qKL", "T"};
    return names;
}

inline ConstantEntry constant(const std::string& name) {
    ConstantEntry e;
    e.name = name;
    e.equation = equation_of(name);
    if (name == "G") {
        e.base = golden();
        e.table_value = "1.61803";
    } else if (name == "q_omega") {
        e.base = q_omega();
        e.table_value = "1.68042";
    } else if (name == "q2") {
        e.base = q2();
        e.table_value = "1.71064";
    } else if (name == "qf") {
        e.base = qf();
        e.table_value = "1.75488";
    } else if (name == "qKL") {
        e.bracket = komornik_loreti(Rat(1, 10000000));
        e.table_value = "1.78723";
    } else if (name == "T") {
        e.base = tribonacci();
        e.table_value = "1.83929";
    }
    return e;
}

// T_k: the root of x^k = x^(k-1) + ... + x + 1 in (1, 2); T_2 = G, T_3 = T
inline BasePtr multinacci(unsigned k) {
    if (k < 2) throw std::invalid_argument("multinacci: k >= 2");
    std::vector<Int> c(k + 1, Int(-1));
    c[k] = 1;
    return std::make_shared<const AlgebraicNumber>(IntPoly(std::move(c)), Rat(1), Rat(2),
                                                   "T" + std::to_string(k));
}

// qf_n: 1 ~ (m_1 ... m_{2^n} 0*) with Thue-Morse digits; qf_1 = G, qf_2 = qf
inline BasePtr qf_family(unsigned n) {
    if (n < 1 || n > 16) throw std::invalid_argument("qf_family: 1 <= n <= 16");
    const std::size_t len = 1ull << n;
    Digits bits = thue_morse(len + 1);
    std::vector<Int> c(len + 1, Int(0));
    c[len] = 1;
    for (std::size_t i = 1; i <= len; ++i)
        if (bits[i]) c[len - i] = -1;
    return std::make_shared<const AlgebraicNumber>(IntPoly(std::move(c)), Rat(1), Rat(2),
                                                   "qf_" + std::to_string(n));
}

// z_n ~ 0^(2^n) (m_{2^(n-1)+1} ... m_{2^n})*, the witness pair at qf_n
inline DigitWord z_word(unsigned n) {
    if (n < 1) throw std::invalid_argument("z_word: n >= 1");
    const std::size_t len = 1ull << n;
    Digits bits = thue_morse(len + 1);
    Digits pre(len, 0);
    Digits per(bits.begin() + static_cast<long>(len / 2) + 1, bits.begin() + static_cast<long>(len) + 1);
    return DigitWord(std::move(pre), std::move(per));
}
inline DigitWord z_plus_one_word(unsigned n) {
    if (n < 1) throw std::invalid_argument("z_plus_one_word: n >= 1");
    const std::size_t len = 1ull << n;
    Digits bits = thue_morse(len + 1);
    Digits pre(bits.begin() + 1, bits.begin() + static_cast<long>(len / 2) + 1);
    Digits per(bits.begin() + static_cast<long>(len / 2) + 1, bits.begin() + static_cast<long>(len) + 1);
    return DigitWord(std::move(pre), std::move(per));
}

// cleared numerator of value(a) - value(b) as a polynomial in lambda = 1/q
inline IntPoly word_equation_poly(const DigitWord& a, const DigitWord& b) {
    auto pre_poly = [](const DigitWord& w) {
        std::vector<Int> c(w.preperiod().size() + 1, Int(0));
        for (std::size_t i = 0; i < w.preperiod().size(); ++i) c[i + 1] = w.preperiod()[i];
        return IntPoly(std::move(c));
    };
    auto per_poly = [](const DigitWord& w) {
        std::vector<Int> c(w.period().size() + 1, Int(0));
        for (std::size_t i = 0; i < w.period().size(); ++i) c[i + 1] = w.period()[i];
        return IntPoly(std::move(c));
    };
    const unsigned pa = static_cast<unsigned>(a.preperiod().size());
    const unsigned pb = static_cast<unsigned>(b.preperiod().size());
    const unsigned ra = static_cast<unsigned>(a.period().size());
    const unsigned rb = static_cast<unsigned>(b.period().size());
    const unsigned l = static_cast<unsigned>(std::lcm(ra, rb));
    IntPoly one = IntPoly::constant(Int(1));
    IntPoly dl = one - IntPoly::monomial(l);
    // value(w) = Pre(lam) + lam^p Per(lam) / (1 - lam^r); cleared by 1 - lam^lcm
    IntPoly lhs = pre_poly(a) * dl + per_poly(a).shifted(pa) * dl.exact_div(one - IntPoly::monomial(ra));
    IntPoly rhs = pre_poly(b) * dl + per_poly(b).shifted(pb) * dl.exact_div(one - IntPoly::monomial(rb));
    IntPoly diff = lhs - rhs;
    if (diff.is_zero()) return diff;
    // strip lam^j: zero is never the base reciprocal
    std::size_t j = 0;
    while (diff.coeff(j) == 0) ++j;
    std::vector<Int> c(diff.coeffs().begin() + static_cast<long>(j), diff.coeffs().end());
    return IntPoly(std::move(c)).primitive();
}

// Shrink the defining polynomial of `b` to a factor certified by the exact
// word-value identity value(wa) = value(wb); errors out if the values differ.
inline BasePtr certify_word_equality(BasePtr b, const DigitWord& wa, const DigitWord& wb) {
    FieldElement diff = value_of(wa, b) - value_of(wb, b);
    if (diff.sign() != 0)
        throw std::logic_error("certify_word_equality: words disagree at base " + b->label());
    if (diff.rep_is_zero()) return b;
    // nonzero representative of a zero value: the defining polynomial is
    // reducible; keep only the factor that vanishes at the base
    RatPoly rep(std::vector<Rat>(diff.rep().begin(), diff.rep().end()));
    IntPoly g = IntPoly::gcd(rep.to_int_primitive(), b->poly());
    BasePtr shrunk = std::make_shared<const AlgebraicNumber>(b->with_defining_factor(g));
    FieldElement again = value_of(wa, shrunk) - value_of(wb, shrunk);
    if (!again.rep_is_zero())
        throw std::logic_error("certify_word_equality: identity fails after factor refinement");
    return shrunk;
}

inline DigitWord counterex_x_word() { return DigitWord::parse("10000(10)*"); }
inline DigitWord counterex_y_word(unsigned n) {
    std::string s = "011";
    for (unsigned i = 1; i < n; ++i) s += "01";
    s += "10000";
    return DigitWord::parse(s + "(10)*");
}

// q_n: the base where 10000(10)* and 0 11 (01)^(n-1) 1 0000(10)* denote the
// same point. Defined through the cleared word equation and validated by the
// exact identity; q_n decreases to q2.
inline BasePtr counterex_family(unsigned n) {
    if (n < 1) throw std::invalid_argument("counterex_family: n >= 1");
    DigitWord wx = counterex_x_word(), wy = counterex_y_word(n);
    IntPoly p = word_equation_poly(wx, wy);
    std::vector<AlgebraicNumber> roots = AlgebraicNumber::isolate_roots(p, Rat(1, 2), Rat(67, 100));
    // keep the roots below 1/q2 (the family limit); exactly one survives
    AlgebraicNumber one_over_q2 = q2()->reciprocal("1/q2");
    std::vector<AlgebraicNumber> inside;
    for (const auto& r : roots)
        if (r.compare(one_over_q2) < 0) inside.push_back(r);
    if (inside.size() != 1)
        throw std::logic_error("counterex_family: expected one root below 1/q2, found " +
                               std::to_string(inside.size()));
    BasePtr q = std::make_shared<const AlgebraicNumber>(inside.front().reciprocal("q_" + std::to_string(n)));
    return certify_word_equality(q, wx, wy);
}

// catalog names plus family syntax: "T5", "qf3", "qn2"
inline BasePtr base_by_name(const std::string& name) {
    if (name == "G") return golden();
    if (name == "q_omega") return q_omega();
    if (name == "q2") return q2();
    if (name == "qf") return qf();
    if (name == "T") return tribonacci();
    auto family = [&](const std::string& prefix) -> long {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return -1;
        try {
            return std::stol(name.substr(prefix.size()));
        } catch (const std::exception&) {
            return -1;
        }
    };
    if (long k = family("T"); k >= 2) return multinacci(static_cast<unsigned>(k));
    if (long n = family("qf"); n >= 1) return qf_family(static_cast<unsigned>(n));
    if (long n = family("qn"); n >= 1) return counterex_family(static_cast<unsigned>(n));
    throw std::invalid_argument("unknown base '" + name + "'");
}

}  // namespace betabranch::catalog

#endif
