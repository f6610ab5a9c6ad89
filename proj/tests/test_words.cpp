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
#include <random>

#include "betabranch/catalog.hpp"
#include "betabranch/words.hpp"

using namespace betabranch;
using catalog::golden;
using catalog::q2;
using catalog::qf;
using catalog::tribonacci;

TEST_CASE("word parsing and canonical forms") {
    DigitWord w = DigitWord::parse("10000(10)*");
    REQUIRE(w.preperiod() == Digits{1, 0, 0, 0});
    REQUIRE(w.period() == Digits{0, 1});
    REQUIRE(w.str() == "1000(01)*");

    REQUIRE(DigitWord::parse("0000(01)*") == DigitWord::parse("00000(10)*"));
    REQUIRE(DigitWord::parse("011(01)*").str() == "01(10)*");
    REQUIRE(DigitWord::parse("0000(01)*").str() == "0000(01)*");
    REQUIRE(DigitWord::parse("1") == DigitWord::parse("10000"));
    REQUIRE(DigitWord::parse("0").str() == "(0)*");
    REQUIRE(DigitWord::parse("11(0101)*") == DigitWord::parse("11(01)*"));
    REQUIRE(DigitWord::parse("11(0101)*").period().size() == 2);

    REQUIRE_THROWS_AS(DigitWord::parse("1("), ParseError);
    REQUIRE_THROWS_AS(DigitWord::parse("1()*"), ParseError);
    REQUIRE_THROWS_AS(DigitWord::parse("12(01)*"), ParseError);
    REQUIRE_THROWS_AS(DigitWord::parse(""), ParseError);
}

TEST_CASE("canonicalization is value-preserving on random words") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> bit(0, 1), plen(0, 6), rlen(1, 4);
    for (int t = 0; t < 60; ++t) {
        Digits pre, per;
        int p = plen(rng), r = rlen(rng);
        for (int i = 0; i < p; ++i) pre.push_back(static_cast<std::uint8_t>(bit(rng)));
        for (int i = 0; i < r; ++i) per.push_back(static_cast<std::uint8_t>(bit(rng)));
        DigitWord w(pre, per);
        // the canonical form unrolls to the raw digits
        for (std::size_t i = 0; i < 24; ++i) {
            std::uint8_t raw = i < pre.size() ? pre[i] : per[(i - pre.size()) % per.size()];
            REQUIRE(raw == w.digit(i));
        }
        REQUIRE(value_of(w, q2()) == value_of(DigitWord::parse(w.str()), q2()));
    }
}

TEST_CASE("value_of closed forms") {
    // all ones: 1/(q-1)
    REQUIRE(value_of(DigitWord::parse("(1)*"), golden()) == interval_sup(golden()));
    // the two-expansion point at q2 has the documented decimal
    FieldElement x = value_of(DigitWord::parse("011(01)*"), q2());
    REQUIRE(x.decimal(5) == "0.64520");
    REQUIRE(x == value_of(DigitWord::parse("10000(10)*"), q2()));
    // y + 1 = value("11(01)*") at qf for y = value("0000(01)*")
    FieldElement y = value_of(DigitWord::parse("0000(01)*"), qf());
    REQUIRE(y + Rat(1) == value_of(DigitWord::parse("11(01)*"), qf()));
}

TEST_CASE("greedy and lazy digit streams") {
    FieldElement zero = FieldElement::zero(q2());
    REQUIRE(greedy(zero, 5) == "00000");
    REQUIRE(lazy(zero, 5) == "00000");
    FieldElement sup = interval_sup(q2());
    REQUIRE(greedy(sup, 4) == "1111");
    REQUIRE(lazy(sup, 4) == "1111");

    FieldElement x = value_of(DigitWord::parse("011(01)*"), q2());
    REQUIRE(greedy(x, 5) == "10000");
    REQUIRE(lazy(x, 5) == "01101");

    REQUIRE_THROWS_AS(greedy(sup + Rat(1, 100), 3), std::domain_error);
    REQUIRE_THROWS_AS(greedy(zero - Rat(1, 100), 3), std::domain_error);
}

TEST_CASE("greedy prefix dominates every expansion of the same value") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> bit(0, 1), plen(0, 5), rlen(1, 4);
    for (int t = 0; t < 40; ++t) {
        Digits pre, per;
        int p = plen(rng), r = rlen(rng);
        for (int i = 0; i < p; ++i) pre.push_back(static_cast<std::uint8_t>(bit(rng)));
        for (int i = 0; i < r; ++i) per.push_back(static_cast<std::uint8_t>(bit(rng)));
        DigitWord w(pre, per);
        FieldElement x = value_of(w, tribonacci());
        std::string g = greedy(x, 12);
        REQUIRE(g >= digits_str(w.prefix(12)));
    }
}

TEST_CASE("complement and shift identities") {
    REQUIRE(DigitWord::parse("0(10)*").complement() == DigitWord::parse("1(01)*"));
    REQUIRE(DigitWord::parse("10000(10)*").shift() == DigitWord::parse("0000(10)*"));
    REQUIRE(DigitWord::parse("(01)*").shift() == DigitWord::parse("(10)*"));

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> bit(0, 1), plen(0, 5), rlen(1, 4);
    for (int t = 0; t < 40; ++t) {
        Digits pre, per;
        int p = plen(rng), r = rlen(rng);
        for (int i = 0; i < p; ++i) pre.push_back(static_cast<std::uint8_t>(bit(rng)));
        for (int i = 0; i < r; ++i) per.push_back(static_cast<std::uint8_t>(bit(rng)));
        DigitWord w(pre, per);
        for (const BasePtr& b : {golden(), q2(), tribonacci()}) {
            FieldElement x = value_of(w, b);
            REQUIRE(value_of(w.complement(), b) + x == interval_sup(b));
            FieldElement shifted = FieldElement::generator(b) * x - Rat(int(w.digit(0)));
            REQUIRE(value_of(w.shift(), b) == shifted);
        }
    }
}

TEST_CASE("thue_morse prefix and recurrences") {
    REQUIRE(digits_str(thue_morse(8)) == "01101001");
    REQUIRE(digits_str(thue_morse(16)) == "0110100110010110");
    REQUIRE(digits_str(thue_morse(1)) == "0");
    Digits bits = thue_morse(256);
    for (std::size_t n = 0; n < 128; ++n) {
        REQUIRE(bits[2 * n] == bits[n]);
        REQUIRE(bits[2 * n + 1] == (1 ^ bits[n]));
    }
}

TEST_CASE("lexicographic order of unrolled words") {
    REQUIRE(DigitWord::parse("10000(10)*").lex_compare(DigitWord::parse("011(01)*")) > 0);
    REQUIRE(DigitWord::parse("011(01)*").lex_compare(DigitWord::parse("10000(10)*")) < 0);
    REQUIRE(DigitWord::parse("0000(01)*").lex_compare(DigitWord::parse("00000(10)*")) == 0);
    REQUIRE(DigitWord::parse("(01)*").lex_compare(DigitWord::parse("(0)*")) > 0);
}
