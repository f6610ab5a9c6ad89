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

#ifndef BETABRANCH_RATIONAL_HPP
#define BETABRANCH_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace betabranch {

using Int = mpz_class;
using Rat = mpq_class;

class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

inline int sign_of(const Int& z) noexcept { return mpz_sgn(z.get_mpz_t()); }
inline int sign_of(const Rat& r) noexcept { return mpq_sgn(r.get_mpq_t()); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// "p" or "p/q"
inline std::string rat_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) throw ParseError("invalid rational '" + s + "'", 0);
    r.canonicalize();
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 0);
    return r;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline std::size_t hash_int(const Int& z) noexcept {
    // limb mix; sign folded in
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) + 0x9e3779b97f4a7c15ULL;
    const std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
        h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

inline std::size_t hash_rat(const Rat& r) noexcept {
    std::size_t h = hash_int(r.get_num());
    h ^= hash_int(r.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

struct RatInterval {
    Rat lo, hi;
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

// Fixed-point rendering of an exact rational, rounding half away from zero.
inline std::string decimal_string(const Rat& v, int places) {
    Int scale = int_pow(Int(10), static_cast<unsigned long>(places));
    Rat scaled = v * Rat(scale);
    // round half up (towards +inf for ties); exact rational arithmetic
    Int n;
    Rat twice = scaled * 2 + 1;
    mpz_fdiv_q(n.get_mpz_t(), twice.get_num().get_mpz_t(), Int(twice.get_den() * 2).get_mpz_t());
    bool neg = n < 0;
    Int a = neg ? Int(-n) : n;
    Int ip = a / scale, fp = a % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), static_cast<std::size_t>(places) - frac.size(), '0');
    return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

}  // namespace betabranch

#endif
