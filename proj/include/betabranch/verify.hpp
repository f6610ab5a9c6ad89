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

// The verify-paper suite: twelve reproducibility checks over the catalog,
// each with its tolerance pinned in code. Every check is a pure function;
// they run on a fixed schedule and print one line each.

#ifndef BETABRANCH_VERIFY_HPP
#define BETABRANCH_VERIFY_HPP

#include <cstdlib>
#include <functional>
#include <future>
#include <thread>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "betabranch/cantor.hpp"
#include "betabranch/catalog.hpp"
#include "betabranch/enumerator.hpp"

namespace betabranch::verify {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline bool within(const BasePtr& b, const std::string& decimal5, const Rat& tol) {
    Rat target = parse_rat(decimal5.substr(0, 1) + decimal5.substr(2)) / 100000;
    RatInterval iv = b->refine(tol / 10);
    return target - tol < iv.lo && iv.hi < target + tol;
}

inline bool value_within(const FieldElement& x, const Rat& target, const Rat& tol) {
    RatInterval iv = x.enclosure(tol / 10);
    return target - tol < iv.lo && iv.hi < target + tol;
}

inline DigitWord random_word(std::mt19937& rng, int pmax, int rmax) {
    std::uniform_int_distribution<int> bit(0, 1), plen(0, pmax), rlen(1, rmax);
    Digits pre, per;
    int p = plen(rng), r = rlen(rng);
    for (int i = 0; i < p; ++i) pre.push_back(static_cast<std::uint8_t>(bit(rng)));
    for (int i = 0; i < r; ++i) per.push_back(static_cast<std::uint8_t>(bit(rng)));
    return DigitWord(pre, per);
}

}  // namespace detail

// 1. the six table constants reproduce to 1e-5
inline CheckResult check_constants() {
    CheckResult r{1, "constants reproduce the reference table to 1e-5", true, ""};
    std::ostringstream detail;
    for (const auto& name : catalog::constant_names()) {
        catalog::ConstantEntry e = catalog::constant(name);
        bool ok;
        if (e.base) {
            ok = detail::within(e.base, e.table_value, Rat(1, 100000));
        } else {
            Rat target = parse_rat("178723") / 100000;
            ok = target - Rat(1, 100000) < e.bracket.lo && e.bracket.hi < target + Rat(1, 100000);
        }
        detail << name << "=" << (e.base ? e.base->decimal(5) : decimal_string(e.bracket.mid(), 5)) << " ";
        r.pass = r.pass && ok;
    }
    r.detail = detail.str();
    return r;
}

// 2. the two-expansion witness at q2
inline CheckResult check_b2_point_at_q2() {
    CheckResult r{2, "q2 witness: Finite(2), both expansions, decimal 0.64520", false, ""};
    BasePtr b = catalog::q2();
    FieldElement x = value_of(DigitWord::parse("011(01)*"), b);
    ExpansionCount c = classify(x);
    auto words = list_expansions(x);
    bool set_ok = words.size() == 2 && words[0] == DigitWord::parse("10000(10)*") &&
                  words[1] == DigitWord::parse("011(01)*");
    bool dec_ok = detail::value_within(x, parse_rat("64520") / 100000, Rat(1, 100000));
    r.pass = (c == ExpansionCount::finite(2)) && set_ok && dec_ok;
    r.detail = "classify=finite(" + std::to_string(c.m) + ") x=" + x.decimal(5);
    return r;
}

// 3. the lower-order scan leaves exactly q2
inline CheckResult check_lower_order_scan() {
    CheckResult r{3, "scan over l<=4, k<=6 with exact cutoffs leaves {q2}", false, ""};
    ScanResult scan = lower_order_scan(4, 6);
    bool survivors_ok = scan.survivors.size() == 1 && scan.survivors[0].ell == 3 &&
                        scan.survivors[0].k == 5 && scan.survivors[0].q->equals(*catalog::q2());
    bool g_hit = false, qf_hit = false;
    for (const ScanHit& hit : scan.boundary_hits) {
        g_hit = g_hit || (hit.ell == 3 && hit.k == 4 && hit.boundary == "1/G");
        qf_hit = qf_hit || (hit.ell == 3 && hit.k == 6 && hit.boundary == "1/qf");
    }
    r.pass = survivors_ok && g_hit && qf_hit && scan.cutoffs_verified;
    r.detail = "survivors=" + std::to_string(scan.survivors.size()) +
               " boundary_hits=" + std::to_string(scan.boundary_hits.size()) +
               (scan.cutoffs_verified ? " cutoffs=ok" : " cutoffs=FAIL");
    return r;
}

// 4. qf carries a two-expansion witness through the unique pair
inline CheckResult check_qf_witness() {
    CheckResult r{4, "qf: y and y+1 unique, witness classifies Finite(2)", false, ""};
    BasePtr b = catalog::qf();
    FieldElement y = value_of(DigitWord::parse("0000(01)*"), b);
    bool y_ok = classify(y) == ExpansionCount::finite(1);
    bool y1_ok = classify(y + Rat(1)) == ExpansionCount::finite(1);
    auto x = b2_witness(y);
    bool x_ok = x.has_value() && classify(*x) == ExpansionCount::finite(2);
    r.pass = y_ok && y1_ok && x_ok;
    r.detail = std::string("y unique=") + (y_ok ? "yes" : "no") + " y+1 unique=" + (y1_ok ? "yes" : "no") +
               " witness=" + (x_ok ? x->decimal(5) : "none");
    return r;
}

// 5. tribonacci witnesses for m = 1..8 and the countable limit point
inline CheckResult check_tribonacci() {
    CheckResult r{5, "tribonacci: x_m has m+1 expansions for m=1..8; x_inf is countable", false, ""};
    BasePtr T = catalog::tribonacci();
    bool all = true;
    for (unsigned m = 1; m <= 8; ++m) {
        TribWitness w = trib_witness(m);
        FieldElement x = value_of(w.x_word, T);
        all = all && classify(x) == ExpansionCount::finite(m + 1) && list_expansions(x) == w.expected;
    }
    FieldElement xinf = value_of(DigitWord::parse("1"), T);
    ExpansionCount cinf = classify(xinf);
    auto ladder = certify_ladder(xinf);
    bool inf_ok = cinf.kind == ExpansionCount::Kind::CountablyInfinite && ladder.has_value();
    r.pass = all && inf_ok;
    r.detail = std::string("m=1..8 ") + (all ? "ok" : "FAIL") + "; x_inf " +
               (inf_ok ? "aleph0 with ladder " + ladder->looped_word.str() : "FAIL");
    return r;
}

// 6. countably infinite families: q_omega and the q_n family
inline CheckResult check_aleph0_families() {
    CheckResult r{6, "aleph0 families: q_omega and q_n certificates", false, ""};
    ExpansionCount cw = classify(value_of(DigitWord::parse("100(10)*"), catalog::q_omega()));
    bool omega_ok = cw.kind == ExpansionCount::Kind::CountablyInfinite &&
                    certify_ladder(value_of(DigitWord::parse("100(10)*"), catalog::q_omega())).has_value();
    bool family_ok = true;
    std::vector<BasePtr> qs;
    for (unsigned n = 1; n <= 5; ++n) {
        BasePtr qn = catalog::counterex_family(n);
        qs.push_back(qn);
        DigitWord wx = catalog::counterex_x_word(), wy = catalog::counterex_y_word(n);
        FieldElement x = value_of(wx, qn);
        family_ok = family_ok && x == value_of(wy, qn);  // exact two-word equality
        // interior digits of the re-inserting prefix are forced
        DigitWord probe = wy;
        for (unsigned i = 1; i <= 2 * n && family_ok; ++i) {
            probe = probe.shift();
            family_ok = family_ok && is_forced(probe, qn);
        }
        for (unsigned m = 1; m < n && family_ok; ++m) family_ok = family_ok && forced_family_two(qn, m);
        family_ok = family_ok && classify(x).kind == ExpansionCount::Kind::CountablyInfinite;
        family_ok = family_ok && certify_ladder(x).has_value();
    }
    bool decreasing = true;
    for (std::size_t i = 0; i + 1 < qs.size(); ++i)
        decreasing = decreasing && qs[i]->compare(*qs[i + 1]) > 0;
    for (const BasePtr& qn : qs) decreasing = decreasing && qn->compare(*catalog::q2()) > 0;
    r.pass = omega_ok && family_ok && decreasing;
    r.detail = std::string("q_omega=") + (omega_ok ? "ok" : "FAIL") + " q_n identities=" +
               (family_ok ? "ok" : "FAIL") + " q_1>...>q_5>q2=" + (decreasing ? "ok" : "FAIL");
    return r;
}

// 7. the continuum point at G and unbounded growth at x = 1
inline CheckResult check_continuum_at_G() {
    CheckResult r{7, "G: value((100)*) = G/2 has a continuum; counts at x=1 keep growing", false, ""};
    BasePtr G = catalog::golden();
    FieldElement x = value_of(DigitWord::parse("(100)*"), G);
    bool half = x == FieldElement::generator(G) / Rat(2);
    ExpansionCount c = classify(x);
    int strict = 0;
    Int prev(0);
    for (unsigned d = 1; d <= 40; ++d) {
        Int cur = viable_prefix_count(FieldElement::one(G), d);
        if (cur > prev) ++strict;
        prev = cur;
    }
    r.pass = half && c.kind == ExpansionCount::Kind::Continuum && strict >= 5;
    r.detail = "G/2 check=" + std::string(half ? "ok" : "FAIL") +
               " classify=" + (c.kind == ExpansionCount::Kind::Continuum ? "continuum" : "other") +
               " strict increases=" + std::to_string(strict);
    return r;
}

// 8. classification vs the brute-force oracle on randomized words
inline CheckResult check_oracle_agreement() {
    CheckResult r{8, "oracle agreement on 100 random eventually periodic words", false, ""};
    std::mt19937 rng(412031);
    const std::vector<BasePtr> bases{catalog::golden(), catalog::q_omega(), catalog::q2(),
                                     catalog::qf(), catalog::tribonacci()};
    int finite_cases = 0, contradictions = 0;
    for (int t = 0; t < 100; ++t) {
        DigitWord w = detail::random_word(rng, 6, 4);
        const BasePtr& b = bases[static_cast<std::size_t>(t) % bases.size()];
        FieldElement x = value_of(w, b);
        StateGraph g = explore(x);  // default budgets
        ExpansionCount c = classify_graph(g);
        if (!g.closed || c.kind != ExpansionCount::Kind::Finite) continue;
        ++finite_cases;
        if (viable_prefix_count(x, 40) != static_cast<long>(c.m)) ++contradictions;
    }
    r.pass = contradictions == 0 && finite_cases >= 20;
    r.detail = "finite cases=" + std::to_string(finite_cases) +
               " contradictions=" + std::to_string(contradictions);
    return r;
}

// 9. closed-form uniqueness against the orbit test
inline CheckResult check_uniqueness_closed_form() {
    CheckResult r{9, "uq word form == orbit uniqueness, preperiod<=8 period<=6, 3 bases", false, ""};
    std::vector<BasePtr> bases{catalog::q_omega(), catalog::q2(),
                               std::make_shared<const AlgebraicNumber>(IntPoly::parse("x^5-x^4-x^3-1"),
                                                                       Rat(17, 10), Rat(171, 100), "s3")};
    // canonical dedup of all candidate words
    std::set<std::string> seen;
    std::vector<DigitWord> words;
    for (unsigned p = 0; p <= 8; ++p) {
        for (unsigned long pm = 0; pm < (1ull << p); ++pm) {
            for (unsigned rr = 1; rr <= 6; ++rr) {
                for (unsigned long rm = 0; rm < (1ull << rr); ++rm) {
                    Digits pre(p), per(rr);
                    for (unsigned i = 0; i < p; ++i) pre[i] = (pm >> i) & 1;
                    for (unsigned i = 0; i < rr; ++i) per[i] = (rm >> i) & 1;
                    DigitWord w(pre, per);
                    if (seen.insert(w.str()).second) words.push_back(std::move(w));
                }
            }
        }
    }
    unsigned long long mismatches = 0, uniques = 0;
    for (const BasePtr& b : bases) {
        for (const DigitWord& w : words) {
            bool closed_form = uq_word_form(w, b);
            bool orbit = is_unique(value_of(w, b));
            if (closed_form != orbit) ++mismatches;
            if (orbit) ++uniques;
        }
    }
    r.pass = mismatches == 0;
    r.detail = std::to_string(words.size()) + " words x 3 bases, uniques=" + std::to_string(uniques) +
               " mismatches=" + std::to_string(mismatches);
    return r;
}

// 10. thickness ledger and the sumset certificate at T
inline CheckResult check_thickness_and_sumset(unsigned level_cap = 12) {
    CheckResult r{10, "T, k=3: level minima > 1, ineq6 > 0, sumset certificate granted", false, ""};
    BasePtr T = catalog::tribonacci();
    ThicknessReport rep = thickness_report(T, 3, level_cap);
    bool minima_ok = true;
    FieldElement one = FieldElement::one(T);
    for (const LevelLedger& led : rep.per_level) {
        if (led.level < 4) continue;
        minima_ok = minima_ok && led.min_ratio.has_value() && (*led.min_ratio - one).sign() > 0;
    }
    bool ineq_ok = rep.ineq6_value.sign() > 0;
    SumsetCertificate cert = newhouse_sumset_cert(T, 3, 10);
    r.pass = minima_ok && ineq_ok && cert.granted && cert.target_covered;
    r.detail = "levels 4.." + std::to_string(level_cap) + " minima>1=" + (minima_ok ? "ok" : "FAIL") +
               " ineq6=" + rep.ineq6_value.decimal(5) + " cert=" + (cert.granted ? "granted" : "refused") +
               " cover=" + (cert.target_covered ? "yes" : "no");
    return r;
}

// 11. dimension bound trend along the multinacci diagonal
inline CheckResult check_dimension_trend() {
    CheckResult r{11, "dim bound non-decreasing for k=3..8, > 0.9 at k=8; log G/log T", false, ""};
    std::vector<DecimalInterval> dims;
    std::vector<FieldElement> taus;
    bool increasing = true;
    for (unsigned k = 3; k <= 8; ++k) {
        BasePtr Tk = catalog::multinacci(k);
        FieldElement tau = tauinf_ratio(Tk, k);
        if (!taus.empty()) increasing = increasing && compare_across_bases(taus.back(), tau) < 0;
        taus.push_back(tau);
        dims.push_back(dim_lower_bound(tau));
    }
    bool monotone = increasing;  // dim bound is monotone in tau
    for (std::size_t i = 0; i + 1 < dims.size(); ++i) monotone = monotone && dims[i].lo <= dims[i + 1].hi;
    bool final_ok = dims.back().lo > Rat(9, 10);
    DecimalInterval ref = log_ratio_enclosure(*catalog::golden(), *catalog::tribonacci());
    bool ref_ok = ref.lo > parse_rat("78967/100000") && ref.hi < parse_rat("78969/100000");
    r.pass = monotone && final_ok && ref_ok;
    std::ostringstream d;
    d << "dims=";
    for (const auto& di : dims) d << decimal_string(di.lo, 4) << " ";
    d << "logG/logT=" << decimal_string(ref.lo, 5);
    r.detail = d.str();
    return r;
}

// 12. the Thue-Morse truncation family and its uniqueness witnesses
inline CheckResult check_thue_morse_family() {
    CheckResult r{12, "qf_n: exact identities at n=1,2; below the KL bracket; z_n unique", false, ""};
    bool id_ok = catalog::qf_family(1)->equals(*catalog::golden()) &&
                 catalog::qf_family(2)->equals(*catalog::qf());
    RatInterval kl = catalog::komornik_loreti(Rat(1, 1000000));
    bool below = true;
    for (unsigned n = 1; n <= 6; ++n) {
        BasePtr b = catalog::qf_family(n);
        for (int i = 0; i < 4000 && b->interval().hi >= kl.hi; ++i) b->refine_step();
        below = below && b->interval().hi < kl.hi;
    }
    bool z_ok = true;
    for (unsigned n = 2; n <= 3; ++n) {
        BasePtr b = catalog::qf_family(n);
        z_ok = z_ok && classify(value_of(catalog::z_word(n), b)) == ExpansionCount::finite(1);
        z_ok = z_ok && classify(value_of(catalog::z_plus_one_word(n), b)) == ExpansionCount::finite(1);
    }
    r.pass = id_ok && below && z_ok;
    r.detail = std::string("qf_1=G,qf_2=qf: ") + (id_ok ? "ok" : "FAIL") + "; below KL bracket: " +
               (below ? "ok" : "FAIL") + "; z_2,z_3 unique with shifts: " + (z_ok ? "ok" : "FAIL");
    return r;
}

// Checks are pure and bases only ever shrink their cached intervals, so the
// checks may run concurrently; results are collected on the fixed schedule.
inline std::vector<CheckResult> run_all(unsigned thickness_level_cap = 12, bool parallel = true) {
    std::vector<std::function<CheckResult()>> checks{
        [] { return check_constants(); },
        [] { return check_b2_point_at_q2(); },
        [] { return check_lower_order_scan(); },
        [] { return check_qf_witness(); },
        [] { return check_tribonacci(); },
        [] { return check_aleph0_families(); },
        [] { return check_continuum_at_G(); },
        [] { return check_oracle_agreement(); },
        [] { return check_uniqueness_closed_form(); },
        [thickness_level_cap] { return check_thickness_and_sumset(thickness_level_cap); },
        [] { return check_dimension_trend(); },
        [] { return check_thue_morse_family(); }};
    std::vector<CheckResult> out;
    if (!parallel || std::thread::hardware_concurrency() <= 1) {
        for (const auto& c : checks) out.push_back(c());
        return out;
    }
    std::vector<std::future<CheckResult>> futures;
    futures.reserve(checks.size());
    for (const auto& c : checks) futures.push_back(std::async(std::launch::async, c));
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

}  // namespace betabranch::verify

#endif
