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

#include <catch2/catch_amalgamated.hpp>

#include "betabranch/catalog.hpp"
#include "betabranch/enumerator.hpp"

using namespace betabranch;
namespace cat = betabranch::catalog;

TEST_CASE("table of constants") {
    const std::vector<std::pair<std::string, std::string>> expected{
        {"G", "1.61803"}, {"q_omega", "1.68042"}, {"q2", "1.71064"},
        {"qf", "1.75488"}, {"qKL", "1.78723"},    {"T", "1.83929"}};
    for (const auto& [name, value] : expected) {
        cat::ConstantEntry e = cat::constant(name);
        if (e.base) {
            REQUIRE(e.base->decimal(5) == value);
        } else {
            Rat lo = parse_rat(value.substr(0, 1) + value.substr(2)) / 100000 - Rat(1, 100000);
            Rat hi = lo + Rat(2, 100000);
            REQUIRE(e.bracket.lo > lo);
            REQUIRE(e.bracket.hi < hi);
        }
    }
    REQUIRE_THROWS_AS(cat::constant("nope"), std::invalid_argument);
}

TEST_CASE("komornik-loreti bracketing") {
    RatInterval iv = cat::komornik_loreti(Rat(1, 100000));
    REQUIRE(iv.width() <= Rat(1, 100000));
    REQUIRE(iv.lo > parse_rat("178722/100000"));
    REQUIRE(iv.hi < parse_rat("178724/100000"));

    RatInterval coarse = cat::komornik_loreti(Rat(1, 100));
    REQUIRE(coarse.contains(iv.lo));

    // bracket validity is part of the construction: endpoints certify by
    // truncated sums, re-checked here for the coarse interval
    Digits bits = thue_morse(200);
    auto partial = [&](const Rat& x) {
        Rat inv = 1 / x, acc(0), p(1);
        for (std::size_t n = 1; n < 200; ++n) {
            p *= inv;
            if (bits[n]) acc += p;
        }
        return acc;
    };
    REQUIRE(partial(coarse.lo) >= 1);
    REQUIRE(partial(coarse.hi) + rat_pow(1 / coarse.hi, 199) / (coarse.hi - 1) <= 1);
}

TEST_CASE("multinacci family") {
    REQUIRE(cat::multinacci(2)->equals(*cat::golden()));
    REQUIRE(cat::multinacci(3)->equals(*cat::tribonacci()));
    REQUIRE(cat::multinacci(3)->decimal(5) == "1.83929");
    // increases towards 2
    for (unsigned k = 3; k <= 7; ++k) REQUIRE(cat::multinacci(k)->compare(*cat::multinacci(k + 1)) < 0);
    REQUIRE(cat::multinacci(8)->compare(Rat(2)) < 0);
    REQUIRE_THROWS_AS(cat::multinacci(1), std::invalid_argument);
}

TEST_CASE("thue-morse truncation family") {
    REQUIRE(cat::qf_family(1)->equals(*cat::golden()));
    REQUIRE(cat::qf_family(2)->equals(*cat::qf()));
    // strictly increasing towards the Komornik-Loreti constant
    for (unsigned n = 1; n <= 5; ++n) REQUIRE(cat::qf_family(n)->compare(*cat::qf_family(n + 1)) < 0);
    RatInterval kl = cat::komornik_loreti(Rat(1, 1000000));
    for (unsigned n = 1; n <= 6; ++n) {
        BasePtr b = cat::qf_family(n);
        while (b->interval().hi >= kl.hi) b->refine_step();
        REQUIRE(b->interval().hi < kl.hi);
    }
}

TEST_CASE("z witnesses") {
    REQUIRE(cat::z_word(2) == DigitWord::parse("0000(01)*"));
    REQUIRE(cat::z_plus_one_word(2) == DigitWord::parse("11(01)*"));
    REQUIRE(cat::z_word(3) == DigitWord::parse("00000000(0011)*"));
    REQUIRE(cat::z_plus_one_word(3) == DigitWord::parse("1101(0011)*"));
    // z + 1 really is z shifted by one unit
    for (unsigned n : {2u, 3u}) {
        BasePtr b = cat::qf_family(n);
        REQUIRE(value_of(cat::z_word(n), b) + Rat(1) == value_of(cat::z_plus_one_word(n), b));
    }
}

TEST_CASE("word equation polynomial matches direct elimination") {
    // equating 10000(10)* with 0111 0000(10)* eliminates to degree 8, carrying
    // one spurious lam = 1 root on top of the degree-7 essential factor
    IntPoly p = cat::word_equation_poly(cat::counterex_x_word(), cat::counterex_y_word(1));
    REQUIRE(p.degree() == 8);
    REQUIRE(p.sign_at(Rat(1)) == 0);
    // identical words eliminate to zero
    REQUIRE(cat::word_equation_poly(cat::counterex_x_word(), cat::counterex_x_word()).is_zero());
    // lambda = 1/q_1 is a root; the reversed polynomial vanishes at q_1
    BasePtr q1 = cat::counterex_family(1);
    FieldElement lam = FieldElement::generator(q1).inverse();
    FieldElement acc = FieldElement::zero(q1);
    for (int d = p.degree(); d >= 0; --d) acc = acc * lam + Rat(p.coeff(static_cast<std::size_t>(d)));
    REQUIRE(acc.is_zero());
}

TEST_CASE("countable-branching family") {
    BasePtr prev;
    for (unsigned n = 1; n <= 5; ++n) {
        BasePtr qn = cat::counterex_family(n);
        // the defining word identity holds exactly (validated at construction, re-checked here)
        REQUIRE(value_of(cat::counterex_x_word(), qn) == value_of(cat::counterex_y_word(n), qn));
        // strictly decreasing towards q2, always above it
        REQUIRE(qn->compare(*cat::q2()) > 0);
        if (prev) REQUIRE(prev->compare(*qn) > 0);
        prev = qn;
    }
    // n >= 2 lands inside (q2, qf); n = 1 sits above qf
    REQUIRE(cat::counterex_family(2)->compare(*cat::qf()) < 0);
    REQUIRE(cat::counterex_family(1)->compare(*cat::qf()) > 0);
}

TEST_CASE("base lookup by name") {
    REQUIRE(cat::base_by_name("q2")->equals(*cat::q2()));
    REQUIRE(cat::base_by_name("T4")->equals(*cat::multinacci(4)));
    REQUIRE(cat::base_by_name("qf3")->equals(*cat::qf_family(3)));
    REQUIRE_THROWS_AS(cat::base_by_name("zzz"), std::invalid_argument);
}
