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

// A real algebraic number: a squarefree integer polynomial plus a rational
// isolating interval with non-root endpoints and a sign change across it.
// The defining polynomial need not be irreducible; callers that require a
// smaller defining factor shrink it through with_defining_factor().

#ifndef BETABRANCH_ALGEBRAIC_HPP
#define BETABRANCH_ALGEBRAIC_HPP

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "betabranch/polynomial.hpp"
#include "betabranch/rational.hpp"

namespace betabranch {

class AlgebraicNumber {
   public:
    // Normalizes the polynomial (squarefree part, positive lc, spurious
    // x^r = 1 and x = 0 factors peeled) and verifies the interval isolates
    // exactly one root with non-root endpoints.
    AlgebraicNumber(IntPoly poly, Rat lo, Rat hi, std::string label = "")
        : label_(std::move(label)) {
        if (poly.is_zero()) throw std::invalid_argument("zero polynomial cannot define an algebraic number");
        if (!(lo < hi)) throw std::invalid_argument("empty isolating interval");
        poly_ = normalize(poly.squarefree_part(), lo, hi);
        // an endpoint that is itself a root is a different root of the same
        // polynomial: deflate it so the interval keeps non-root endpoints
        for (const Rat* e : {&lo, &hi}) {
            while (poly_.degree() >= 1 && poly_.sign_at(*e) == 0)
                poly_ = poly_.exact_div(IntPoly(std::vector<Int>{Int(-e->get_num()), Int(e->get_den())})).primitive();
        }
        if (poly_.degree() < 1)
            throw std::invalid_argument("no root of " + poly.str() + " remains inside (" + rat_string(lo) + ", " +
                                        rat_string(hi) + ")");
        sturm_ = poly_.sturm_chain();
        if (IntPoly::count_roots(sturm_, lo, hi) != 1)
            throw std::invalid_argument("interval (" + rat_string(lo) + ", " + rat_string(hi) +
                                        ") does not isolate exactly one root of " + poly_.str());
        lo_ = std::move(lo);
        hi_ = std::move(hi);
    }

    AlgebraicNumber(const AlgebraicNumber& o) : poly_(o.poly_), sturm_(o.sturm_), label_(o.label_) {
        RatInterval iv = o.interval();
        lo_ = std::move(iv.lo);
        hi_ = std::move(iv.hi);
    }
    AlgebraicNumber& operator=(const AlgebraicNumber& o) {
        if (this != &o) {
            RatInterval iv = o.interval();
            std::lock_guard<std::mutex> g(mu_);
            poly_ = o.poly_;
            sturm_ = o.sturm_;
            label_ = o.label_;
            lo_ = std::move(iv.lo);
            hi_ = std::move(iv.hi);
        }
        return *this;
    }

    const IntPoly& poly() const noexcept { return poly_; }
    const std::string& label() const noexcept { return label_; }
    int degree() const noexcept { return poly_.degree(); }

    RatInterval interval() const {
        std::lock_guard<std::mutex> g(mu_);
        return {lo_, hi_};
    }

    // Shrink the cached interval to at most `width`; returns the new interval.
    RatInterval refine(const Rat& width) const {
        if (sign_of(width) <= 0) throw std::invalid_argument("refine: width must be positive");
        std::lock_guard<std::mutex> g(mu_);
        refine_locked(width);
        return {lo_, hi_};
    }

    // One bisection step (used by sign determination loops).
    RatInterval refine_step() const {
        std::lock_guard<std::mutex> g(mu_);
        bisect_locked();
        return {lo_, hi_};
    }

    // exact comparison against a rational
    int compare(const Rat& r) const {
        {
            std::lock_guard<std::mutex> g(mu_);
            if (r <= lo_) return +1;
            if (r >= hi_) return -1;
        }
        if (poly_.sign_at(r) == 0) return 0;  // r inside the interval and a root: it is the root
        while (true) {
            std::lock_guard<std::mutex> g(mu_);
            if (r <= lo_) return +1;
            if (r >= hi_) return -1;
            bisect_locked();
        }
    }

    // exact total order between algebraic numbers (possibly different polynomials)
    int compare(const AlgebraicNumber& o) const {
        if (this == &o) return 0;
        IntPoly g = IntPoly::gcd(poly_, o.poly_);
        std::vector<IntPoly> gchain = g.degree() >= 1 ? g.sturm_chain() : std::vector<IntPoly>{};
        while (true) {
            RatInterval a = interval(), b = o.interval();
            // endpoints are never roots, so touching intervals already separate the values
            if (a.hi <= b.lo) return -1;
            if (b.hi <= a.lo) return +1;
            // overlapping: a shared root of gcd inside the overlap means equality
            if (g.degree() >= 1) {
                Rat lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
                if (g.sign_at(lo) != 0 && g.sign_at(hi) != 0 && IntPoly::count_roots(gchain, lo, hi) >= 1) return 0;
            }
            refine_step();
            o.refine_step();
        }
    }
    bool equals(const AlgebraicNumber& o) const { return compare(o) == 0; }

    // 1/alpha (alpha != 0)
    AlgebraicNumber reciprocal(std::string label = "") const {
        RatInterval iv = interval();
        if (compare(Rat(0)) == 0) throw std::domain_error("reciprocal of zero");
        while (true) {
            iv = interval();
            if (sign_of(iv.lo) > 0 || sign_of(iv.hi) < 0) break;
            refine_step();
        }
        return AlgebraicNumber(poly_.reciprocal(), 1 / iv.hi, 1 / iv.lo, std::move(label));
    }

    // Replace the defining polynomial by a divisor known to vanish at this
    // number (a factor discovered by a gcd computation).
    AlgebraicNumber with_defining_factor(const IntPoly& factor) const {
        RatInterval iv = interval();
        return AlgebraicNumber(factor, iv.lo, iv.hi, label_);
    }

    // decimal rendering with `places` digits, unambiguous under refinement
    std::string decimal(int places) const {
        Int scale = int_pow(Int(10), static_cast<unsigned long>(places));
        for (int rounds = 0; rounds < 20000; ++rounds) {
            RatInterval iv = interval();
            Rat a = (iv.lo * scale * 2 + 1) / 2, b = (iv.hi * scale * 2 + 1) / 2;
            Int fa, fb;
            mpz_fdiv_q(fa.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
            mpz_fdiv_q(fb.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
            if (fa == fb) break;
            // value may sit exactly on a rounding boundary: k+1/2 over scale
            Rat boundary((fa + 1) * 2 - 1, 2 * scale);
            boundary.canonicalize();
            if (compare(boundary) == 0) break;
            refine_step();
        }
        RatInterval iv = interval();
        return decimal_string(iv.mid(), places);
    }

    static std::vector<AlgebraicNumber> isolate_roots(const IntPoly& p, const Rat& lo, const Rat& hi,
                                                      const std::string& label_prefix = "");

   private:
    static IntPoly normalize(IntPoly p, const Rat& lo, const Rat& hi) {
        // strip x^r factors unless 0 lies inside the target window
        if (p.coeff(0) == 0 && !(lo < 0 && 0 < hi)) {
            std::vector<Int> c = p.coeffs();
            std::size_t k = 0;
            while (k < c.size() && c[k] == 0) ++k;
            p = IntPoly(std::vector<Int>(c.begin() + static_cast<long>(k), c.end()));
        }
        // peel factors of x^r - 1 that do not meet the window
        for (unsigned r = 1; r <= 16 && p.degree() > 1; ++r) {
            IntPoly cyc = IntPoly::monomial(r) - IntPoly::constant(Int(1));
            IntPoly g = IntPoly::gcd(p, cyc);
            if (g.degree() < 1) continue;
            Rat glo = lo, ghi = hi;
            while (g.sign_at(glo) == 0) glo -= Rat(1, 1024);
            while (g.sign_at(ghi) == 0) ghi += Rat(1, 1024);
            if (IntPoly::count_roots(g.sturm_chain(), glo, ghi) == 0) p = p.exact_div(g).primitive();
        }
        return p.primitive();
    }

    void bisect_locked() const {
        Rat mid = (lo_ + hi_) / 2;
        int sm = poly_.sign_at(mid);
        if (sm == 0) {
            // the root is exactly mid (rational); pick a sub-interval with non-root ends
            Rat w = (hi_ - lo_) / 8;
            while (poly_.sign_at(mid - w) == 0 || poly_.sign_at(mid + w) == 0) w /= 2;
            lo_ = mid - w;
            hi_ = mid + w;
            return;
        }
        if (sm == poly_.sign_at(lo_))
            lo_ = std::move(mid);
        else
            hi_ = std::move(mid);
    }

    void refine_locked(const Rat& width) const {
        while (hi_ - lo_ > width) bisect_locked();
    }

    IntPoly poly_;
    std::vector<IntPoly> sturm_;
    mutable Rat lo_, hi_;   // shrink-only cache
    mutable std::mutex mu_;
    std::string label_;
};

using BasePtr = std::shared_ptr<const AlgebraicNumber>;

inline std::vector<AlgebraicNumber> AlgebraicNumber::isolate_roots(const IntPoly& p, const Rat& lo, const Rat& hi,
                                                                   const std::string& label_prefix) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    if (!(lo < hi)) return {};
    IntPoly sf = p.squarefree_part();
    if (sf.degree() < 1) return {};
    // roots exactly at the (open) range endpoints are deflated away
    Rat a = lo, b = hi;
    while (sf.sign_at(a) == 0) sf = sf.exact_div(IntPoly(std::vector<Int>{Int(-a.get_num()), Int(a.get_den())}));
    while (sf.degree() >= 1 && sf.sign_at(b) == 0)
        sf = sf.exact_div(IntPoly(std::vector<Int>{Int(-b.get_num()), Int(b.get_den())}));
    if (sf.degree() < 1) return {};
    auto chain = sf.sturm_chain();
    std::vector<AlgebraicNumber> out;
    std::vector<std::pair<Rat, Rat>> stack{{a, b}};
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        int count = IntPoly::count_roots(chain, x, y);
        if (count == 0) continue;
        if (count == 1) {
            out.emplace_back(sf, x, y, label_prefix);
            continue;
        }
        Rat mid = (x + y) / 2;
        while (sf.sign_at(mid) == 0) mid = (x + mid) / 2;  // keep split points off roots
        stack.push_back({mid, y});
        stack.push_back({x, mid});
    }
    std::sort(out.begin(), out.end(),
              [](const AlgebraicNumber& u, const AlgebraicNumber& v) { return u.compare(v) < 0; });
    // bisection splits share endpoints; shrink until the intervals are disjoint
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
        while (out[i].interval().hi >= out[i + 1].interval().lo) {
            out[i].refine_step();
            out[i + 1].refine_step();
        }
    }
    return out;
}

}  // namespace betabranch

#endif
