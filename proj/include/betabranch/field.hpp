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

// Elements of Q(q) for an isolated algebraic q, represented by rational
// polynomials reduced modulo the defining polynomial. Sign and order are
// exact: interval evaluation first, gcd with the defining polynomial as the
// symbolic fallback when refinement cannot separate a value from zero.

#ifndef BETABRANCH_FIELD_HPP
#define BETABRANCH_FIELD_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "betabranch/algebraic.hpp"
#include "betabranch/polynomial.hpp"
#include "betabranch/rational.hpp"

namespace betabranch {

class DivisionByZero : public std::domain_error {
   public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

// Divisor is nonzero at q yet has no inverse modulo the defining polynomial:
// the gcd names a proper factor of a reducible defining polynomial.
class NonInvertibleDivisor : public std::domain_error {
   public:
    explicit NonInvertibleDivisor(IntPoly factor)
        : std::domain_error("divisor not invertible: defining polynomial has factor " + factor.str()),
          factor_(std::move(factor)) {}
    const IntPoly& factor() const noexcept { return factor_; }

   private:
    IntPoly factor_;
};

inline constexpr int kSignRefineBound = 256;  // bisections before the symbolic zero test

class FieldElement {
   public:
    FieldElement() = default;
    FieldElement(BasePtr base, RatPoly rep) : base_(std::move(base)) { set_rep(std::move(rep)); }

    static FieldElement constant(BasePtr base, Rat v) { return FieldElement(std::move(base), RatPoly::constant(std::move(v))); }
    static FieldElement zero(BasePtr base) { return constant(std::move(base), Rat(0)); }
    static FieldElement one(BasePtr base) { return constant(std::move(base), Rat(1)); }
    static FieldElement generator(BasePtr base) {
        return FieldElement(std::move(base), RatPoly(std::vector<Rat>{Rat(0), Rat(1)}));
    }

    const BasePtr& base() const noexcept { return base_; }
    const std::vector<Rat>& rep() const noexcept { return rep_; }
    bool rep_is_zero() const noexcept {
        for (const auto& c : rep_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational_rep() const noexcept {
        for (std::size_t i = 1; i < rep_.size(); ++i)
            if (rep_[i] != 0) return false;
        return true;
    }
    const Rat& rational_rep() const { return rep_[0]; }

    FieldElement operator-() const {
        FieldElement r = *this;
        for (auto& c : r.rep_) c = -c;
        return r;
    }
    FieldElement operator+(const FieldElement& o) const {
        check_same_base(o);
        FieldElement r = *this;
        for (std::size_t i = 0; i < rep_.size(); ++i) r.rep_[i] += o.rep_[i];
        return r;
    }
    FieldElement operator-(const FieldElement& o) const { return *this + (-o); }
    FieldElement operator*(const FieldElement& o) const {
        check_same_base(o);
        return FieldElement(base_, RatPoly(rep_vec()) * RatPoly(o.rep_vec()));
    }
    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

    FieldElement operator+(const Rat& r) const { return *this + constant(base_, r); }
    FieldElement operator-(const Rat& r) const { return *this + constant(base_, -r); }
    FieldElement operator*(const Rat& k) const {
        FieldElement r = *this;
        for (auto& c : r.rep_) c *= k;
        return r;
    }
    FieldElement operator/(const Rat& k) const {
        if (k == 0) throw DivisionByZero();
        return *this * Rat(1 / k);
    }

    FieldElement pow(unsigned e) const {
        FieldElement r = one(base_);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    FieldElement inverse() const {
        RatPoly rep(rep_vec());
        if (rep.is_zero()) throw DivisionByZero();
        auto [g, s] = RatPoly::half_ext_gcd(rep, RatPoly(base_->poly()));
        if (g.degree() == 0) return FieldElement(base_, s);
        IntPoly factor = g.to_int_primitive();
        // a nonconstant common factor with a root at q means the value is zero
        RatInterval iv = base_->interval();
        if (factor.sign_at(iv.lo) * factor.sign_at(iv.hi) < 0 ||
            IntPoly::count_roots(factor.sturm_chain(), iv.lo, iv.hi) >= 1)
            throw DivisionByZero();
        throw NonInvertibleDivisor(std::move(factor));
    }

    // exact sign of the real value at q
    int sign() const {
        if (rep_is_zero()) return 0;
        if (is_rational_rep()) return sign_of(rep_[0]);
        RatPoly rep(rep_vec());
        for (int round = 0; round < kSignRefineBound; ++round) {
            RatInterval e = rep.eval_interval(base_->interval());
            if (sign_of(e.lo) > 0) return +1;
            if (sign_of(e.hi) < 0) return -1;
            base_->refine_step();
        }
        if (symbolically_zero(rep)) return 0;
        while (true) {
            RatInterval e = rep.eval_interval(base_->interval());
            if (sign_of(e.lo) > 0) return +1;
            if (sign_of(e.hi) < 0) return -1;
            base_->refine_step();
        }
    }
    bool is_zero() const { return sign() == 0; }

    int compare(const FieldElement& o) const { return (*this - o).sign(); }
    int compare(const Rat& r) const { return (*this - r).sign(); }
    bool operator==(const FieldElement& o) const { return compare(o) == 0; }
    bool operator!=(const FieldElement& o) const { return compare(o) != 0; }
    bool operator<(const FieldElement& o) const { return compare(o) < 0; }
    bool operator<=(const FieldElement& o) const { return compare(o) <= 0; }

    // rational enclosure of the value, width at most `width`
    RatInterval enclosure(const Rat& width) const {
        RatPoly rep(rep_vec());
        while (true) {
            RatInterval e = rep.eval_interval(base_->interval());
            if (e.hi - e.lo <= width) return e;
            base_->refine_step();
        }
    }

    std::string decimal(int places) const {
        if (is_rational_rep()) return decimal_string(rep_[0], places);
        Int scale = int_pow(Int(10), static_cast<unsigned long>(places));
        RatPoly rep(rep_vec());
        while (true) {
            RatInterval e = rep.eval_interval(base_->interval());
            Rat a = e.lo * scale + Rat(1, 2), b = e.hi * scale + Rat(1, 2);
            Int fa, fb;
            mpz_fdiv_q(fa.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
            mpz_fdiv_q(fb.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
            if (fa == fb) return decimal_string(e.mid(), places);
            Rat boundary(Int(fa * 2 + 1), Int(2) * scale);
            boundary.canonicalize();
            if (compare(boundary) == 0) return decimal_string(boundary, places);
            base_->refine_step();
        }
    }

    // "[a0, a1, ...]" with exact rationals, length = deg(defining poly)
    std::string vec_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < rep_.size(); ++i) {
            if (i) out += ", ";
            out += rat_string(rep_[i]);
        }
        return out + "]";
    }

    std::size_t hash() const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (const auto& c : rep_) h ^= hash_rat(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
    bool same_rep(const FieldElement& o) const noexcept { return rep_ == o.rep_; }

   private:
    void check_same_base(const FieldElement& o) const {
        if (base_.get() != o.base_.get()) throw std::invalid_argument("field elements from different bases");
    }
    std::vector<Rat> rep_vec() const { return rep_; }
    void set_rep(RatPoly rep) {
        const RatPoly mod(base_->poly());
        if (rep.degree() >= mod.degree()) rep = rep.divrem(mod).second;
        rep_.assign(static_cast<std::size_t>(mod.degree()), Rat(0));
        for (std::size_t i = 0; i < rep.coeffs().size(); ++i) rep_[i] = rep.coeffs()[i];
    }
    bool symbolically_zero(const RatPoly& rep) const {
        IntPoly g = IntPoly::gcd(rep.to_int_primitive(), base_->poly());
        if (g.degree() < 1) return false;
        RatInterval iv = base_->interval();
        return IntPoly::count_roots(g.sturm_chain(), iv.lo, iv.hi) >= 1;
    }

    BasePtr base_;
    std::vector<Rat> rep_;
};

struct FieldElementHash {
    std::size_t operator()(const FieldElement& e) const noexcept { return e.hash(); }
};
struct FieldElementRepEq {
    bool operator()(const FieldElement& a, const FieldElement& b) const noexcept { return a.same_rep(b); }
};

// Order of values living in different fields; decided by interval separation.
// Throws if the values cannot be separated within `max_rounds` bisections
// (exact equality across bases is compared at the AlgebraicNumber level).
inline int compare_across_bases(const FieldElement& a, const FieldElement& b, int max_rounds = 4000) {
    if (a.base().get() == b.base().get()) return a.compare(b);
    RatPoly ra(std::vector<Rat>(a.rep().begin(), a.rep().end()));
    RatPoly rb(std::vector<Rat>(b.rep().begin(), b.rep().end()));
    for (int i = 0; i < max_rounds; ++i) {
        RatInterval ea = ra.eval_interval(a.base()->interval());
        RatInterval eb = rb.eval_interval(b.base()->interval());
        if (ea.hi < eb.lo) return -1;
        if (eb.hi < ea.lo) return +1;
        a.base()->refine_step();
        b.base()->refine_step();
    }
    throw std::runtime_error("compare_across_bases: values indistinguishable after refinement");
}

}  // namespace betabranch

#endif
