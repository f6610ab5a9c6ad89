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

// Univariate polynomials with exact integer / rational coefficients,
// stored constant term first and kept free of trailing zeros.

#ifndef BETABRANCH_POLYNOMIAL_HPP
#define BETABRANCH_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betabranch/rational.hpp"

namespace betabranch {

class RatPoly;

class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(Int v) { return IntPoly(std::vector<Int>{std::move(v)}); }
    static IntPoly monomial(unsigned deg, Int coeff = Int(1)) {
        std::vector<Int> c(deg + 1, Int(0));
        c[deg] = std::move(coeff);
        return IntPoly(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const noexcept { return c_; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const Int& lc() const { return c_.back(); }

    bool operator==(const IntPoly& o) const noexcept { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const noexcept { return c_ != o.c_; }

    IntPoly operator-() const {
        std::vector<Int> r(c_);
        for (auto& x : r) x = -x;
        return IntPoly(std::move(r));
    }
    IntPoly operator+(const IntPoly& o) const {
        std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return IntPoly(std::move(r));
    }
    IntPoly operator-(const IntPoly& o) const { return *this + (-o); }
    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return IntPoly();
        std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return IntPoly(std::move(r));
    }
    IntPoly operator*(const Int& k) const {
        std::vector<Int> r(c_);
        for (auto& x : r) x *= k;
        return IntPoly(std::move(r));
    }
    IntPoly shifted(unsigned k) const {  // multiply by x^k
        if (is_zero()) return IntPoly();
        std::vector<Int> r(c_.size() + k, Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return IntPoly(std::move(r));
    }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rat(*it);
        return r;
    }
    int sign_at(const Rat& x) const { return sign_of(eval(x)); }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly();
        std::vector<Int> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
        return IntPoly(std::move(r));
    }

    Int content() const {
        Int g(0);
        for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        return g;
    }
    // positive leading coefficient, content 1
    IntPoly primitive() const {
        if (is_zero()) return IntPoly();
        Int g = content();
        if (sign_of(lc()) < 0) g = -g;
        std::vector<Int> r(c_);
        for (auto& x : r) x /= g;
        return IntPoly(std::move(r));
    }
    // divide by the (positive) content only; the sign structure is preserved
    IntPoly content_stripped() const {
        if (is_zero()) return IntPoly();
        Int g = content();
        std::vector<Int> r(c_);
        for (auto& x : r) x /= g;
        return IntPoly(std::move(r));
    }

    // x^deg * p(1/x): exact minimal polynomial transform for reciprocal roots
    IntPoly reciprocal() const {
        std::vector<Int> r(c_.rbegin(), c_.rend());
        return IntPoly(std::move(r)).primitive();
    }

    IntPoly pow(unsigned e) const {
        IntPoly r = IntPoly::constant(Int(1));
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    // remainder of M*this modulo o for some positive integer M: each step
    // scales by |lc(o)|, so signs at every point match the true remainder
    IntPoly positive_pseudo_rem(const IntPoly& o) const {
        IntPoly r = *this;
        const int dg = o.degree();
        const Int mag = o.lc() < 0 ? Int(-o.lc()) : o.lc();
        const int lsign = sign_of(o.lc());
        while (!r.is_zero() && r.degree() >= dg) {
            IntPoly sub = (o * Int(r.lc() * lsign)).shifted(static_cast<unsigned>(r.degree() - dg));
            r = r * mag - sub;
        }
        return r;
    }

    static IntPoly gcd(IntPoly a, IntPoly b) {
        a = a.primitive();
        b = b.primitive();
        while (!b.is_zero()) {
            IntPoly r = a.positive_pseudo_rem(b).primitive();
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    IntPoly exact_div(const IntPoly& d) const;  // requires divisibility over Q
    IntPoly squarefree_part() const {
        if (degree() <= 1) return primitive();
        IntPoly g = gcd(*this, derivative());
        if (g.degree() == 0) return primitive();
        return exact_div(g).primitive();
    }

    // Sturm chain; members scaled by positive constants only
    std::vector<IntPoly> sturm_chain() const {
        std::vector<IntPoly> s;
        s.push_back(content_stripped());
        IntPoly d = derivative().content_stripped();
        if (d.is_zero()) return s;
        s.push_back(d);
        while (true) {
            IntPoly r = (-(s[s.size() - 2].positive_pseudo_rem(s.back()))).content_stripped();
            if (r.is_zero()) break;
            s.push_back(std::move(r));
        }
        return s;
    }
    static int sign_variations(const std::vector<IntPoly>& chain, const Rat& x) {
        int v = 0, prev = 0;
        for (const auto& p : chain) {
            int s = p.sign_at(x);
            if (s != 0) {
                if (prev != 0 && s != prev) ++v;
                prev = s;
            }
        }
        return v;
    }
    // number of distinct real roots in (a, b]; requires p(a) != 0
    static int count_roots(const std::vector<IntPoly>& chain, const Rat& a, const Rat& b) {
        return sign_variations(chain, a) - sign_variations(chain, b);
    }

    std::string str() const;
    static IntPoly parse(const std::string& text);

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

class RatPoly {
   public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        for (auto& c : c_) c.canonicalize();  // guard against mpq_class(p, q) literals
        trim();
    }
    explicit RatPoly(const IntPoly& p) {
        c_.reserve(p.coeffs().size());
        for (const auto& x : p.coeffs()) c_.emplace_back(x);
    }
    static RatPoly constant(Rat v) { return RatPoly(std::vector<Rat>{std::move(v)}); }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const noexcept { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& lc() const { return c_.back(); }

    bool operator==(const RatPoly& o) const noexcept { return c_ == o.c_; }

    RatPoly operator-() const {
        std::vector<Rat> r(c_);
        for (auto& x : r) x = -x;
        return RatPoly(std::move(r));
    }
    RatPoly operator+(const RatPoly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return RatPoly(std::move(r));
    }
    RatPoly operator-(const RatPoly& o) const { return *this + (-o); }
    RatPoly operator*(const RatPoly& o) const {
        if (is_zero() || o.is_zero()) return RatPoly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return RatPoly(std::move(r));
    }
    RatPoly operator*(const Rat& k) const {
        std::vector<Rat> r(c_);
        for (auto& x : r) x *= k;
        return RatPoly(std::move(r));
    }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    // interval Horner over [lo, hi]
    RatInterval eval_interval(const RatInterval& x) const {
        Rat lo(0), hi(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            Rat a = lo * x.lo, b = lo * x.hi, c = hi * x.lo, d = hi * x.hi;
            Rat nlo = std::min(std::min(a, b), std::min(c, d));
            Rat nhi = std::max(std::max(a, b), std::max(c, d));
            lo = nlo + *it;
            hi = nhi + *it;
        }
        return {lo, hi};
    }

    std::pair<RatPoly, RatPoly> divrem(const RatPoly& d) const {
        RatPoly r = *this, q;
        std::vector<Rat> qc(degree() >= d.degree() && degree() >= 0 ? degree() - d.degree() + 1 : 0, Rat(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rat f = r.lc() / d.lc();
            unsigned sh = static_cast<unsigned>(r.degree() - d.degree());
            qc[sh] = f;
            RatPoly sub = d * f;
            std::vector<Rat> shifted(sub.c_.size() + sh, Rat(0));
            for (std::size_t i = 0; i < sub.c_.size(); ++i) shifted[i + sh] = sub.c_[i];
            r = r - RatPoly(std::move(shifted));
        }
        return {RatPoly(std::move(qc)), r};
    }

    RatPoly monic() const {
        if (is_zero()) return RatPoly();
        return *this * Rat(1 / lc());
    }

    static RatPoly gcd(RatPoly a, RatPoly b) {
        while (!b.is_zero()) {
            RatPoly r = a.divrem(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    // g = gcd(a, b) monic together with s: s*a = g (mod b)
    static std::pair<RatPoly, RatPoly> half_ext_gcd(const RatPoly& a, const RatPoly& b) {
        RatPoly r0 = a, r1 = b;
        RatPoly s0 = RatPoly::constant(Rat(1)), s1;
        while (!r1.is_zero()) {
            auto [q, r2] = r0.divrem(r1);
            RatPoly s2 = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        Rat inv = 1 / r0.lc();
        return {r0 * inv, s0 * inv};
    }

    // content-cleared integer image
    IntPoly to_int_primitive() const {
        if (is_zero()) return IntPoly();
        Int den(1);
        for (const auto& x : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
        std::vector<Int> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(Int(x.get_num() * (den / x.get_den())));
        return IntPoly(std::move(r)).primitive();
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline IntPoly IntPoly::exact_div(const IntPoly& d) const {
    auto [q, r] = RatPoly(*this).divrem(RatPoly(d));
    if (!r.is_zero()) throw std::logic_error("exact_div: not divisible");
    IntPoly qi = q.to_int_primitive();  // lc forced positive
    if (sign_of(lc()) * sign_of(d.lc()) < 0) qi = -qi;
    return qi;
}

// ---- text form: "x^4-2*x^2-x-1" ----

inline std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Int& a = c_[static_cast<std::size_t>(d)];
        if (a == 0) continue;
        Int mag = a < 0 ? Int(-a) : a;
        if (out.empty()) {
            if (a < 0) out += "-";
        } else {
            out += (a < 0) ? "-" : "+";
        }
        if (d == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += "x";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

inline IntPoly IntPoly::parse(const std::string& text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    std::vector<Int> coeffs;
    auto add = [&](unsigned deg, const Int& v) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, Int(0));
        coeffs[deg] += v;
    };
    skip_ws();
    if (i == n) throw ParseError("empty polynomial", i);
    bool first = true;
    while (true) {
        skip_ws();
        if (i == n) break;
        int sgn = 1;
        if (text[i] == '+' || text[i] == '-') {
            sgn = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-'", i);
        }
        skip_ws();
        Int coeff(1);
        bool saw_num = false, saw_x = false;
        if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            coeff = Int(text.substr(i, j - i));
            i = j;
            saw_num = true;
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        unsigned deg = 0;
        if (i < n && (text[i] == 'x' || text[i] == 'X')) {
            saw_x = true;
            ++i;
            skip_ws();
            deg = 1;
            if (i < n && text[i] == '^') {
                ++i;
                skip_ws();
                if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError("expected exponent", i);
                std::size_t j = i;
                while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                deg = static_cast<unsigned>(std::stoul(text.substr(i, j - i)));
                i = j;
            }
        }
        if (!saw_num && !saw_x) throw ParseError("expected term", i);
        add(deg, Int(sgn) * coeff);
        first = false;
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace betabranch

#endif
