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

// Level sets of the subshift forbidding 0 1^k and 1 0^k projected into I_q,
// exact gap/bridge thickness ledgers, Newhouse sumset certificates, and the
// Hausdorff dimension lower bound log 2 / log(2 + 1/tau). The logarithms in
// the dimension bound are the only inexact computation and carry outward
// rounding.

#ifndef BETABRANCH_CANTOR_HPP
#define BETABRANCH_CANTOR_HPP

#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "betabranch/enumerator.hpp"
#include "betabranch/words.hpp"

namespace betabranch {

struct IntervalSet {
    BasePtr base;
    unsigned k = 0;
    unsigned level = 0;
    std::vector<std::pair<FieldElement, FieldElement>> intervals;  // sorted, disjoint, positive gaps

    std::pair<FieldElement, FieldElement> hull() const {
        if (intervals.empty()) throw std::logic_error("empty interval set");
        return {intervals.front().first, intervals.back().second};
    }

    // every component of `finer` inside some component of *this
    bool contains(const IntervalSet& finer) const {
        std::size_t i = 0;
        for (const auto& [lo, hi] : finer.intervals) {
            while (i < intervals.size() && (intervals[i].second - lo).sign() < 0) ++i;
            if (i == intervals.size()) return false;
            if ((lo - intervals[i].first).sign() < 0 || (intervals[i].second - hi).sign() < 0) return false;
        }
        return true;
    }
};

// union of the cylinders of all length-n words avoiding 0 1^k and 1 0^k
inline IntervalSet build_level(const BasePtr& b, unsigned k, unsigned n) {
    if (k < 3) throw std::invalid_argument("build_level: k >= 3");
    require_base_in_unit_range(b);
    IntervalSet out;
    out.base = b;
    out.k = k;
    out.level = n;

    FieldElement lam = FieldElement::generator(b).inverse();
    std::vector<FieldElement> pw(n + 1, FieldElement::one(b));
    for (unsigned i = 1; i <= n; ++i) pw[i] = pw[i - 1] * lam;
    FieldElement width = pw[n] * interval_sup(b);

    std::vector<std::pair<FieldElement, FieldElement>> raw;
    struct Frame {
        FieldElement value;
        unsigned len;
        int last;       // trailing digit, -1 for the empty word
        unsigned run;   // trailing run length
        bool preceded;  // an opposite digit occurs before the trailing run
    };
    std::vector<Frame> stack{{FieldElement::zero(b), 0, -1, 0, false}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.len == n) {
            raw.emplace_back(f.value, f.value + width);
            continue;
        }
        for (int d = 0; d < 2; ++d) {
            unsigned run = (d == f.last) ? f.run + 1 : 1;
            bool preceded = (f.last == -1) ? false : (d == f.last ? f.preceded : true);
            if (preceded && run >= k) continue;  // a forbidden factor (1-d) d^k would complete
            FieldElement v = d ? f.value + pw[f.len + 1] : f.value;
            stack.push_back({std::move(v), f.len + 1, d, run, preceded});
        }
    }

    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b2) { return a.first.compare(b2.first) < 0; });
    for (auto& iv : raw) {
        if (!out.intervals.empty() && (iv.first - out.intervals.back().second).sign() <= 0) {
            if ((iv.second - out.intervals.back().second).sign() > 0) out.intervals.back().second = std::move(iv.second);
        } else {
            out.intervals.push_back(std::move(iv));
        }
    }
    return out;
}

struct GapEntry {
    FieldElement lo, hi;  // the open gap
    FieldElement gap_len, bridge_left, bridge_right;
    FieldElement min_ratio;  // min(bridge_left, bridge_right) / gap_len
};

inline std::vector<GapEntry> gap_entries(const IntervalSet& s) {
    std::vector<GapEntry> out;
    for (std::size_t i = 0; i + 1 < s.intervals.size(); ++i) {
        GapEntry e{s.intervals[i].second,
                   s.intervals[i + 1].first,
                   s.intervals[i + 1].first - s.intervals[i].second,
                   s.intervals[i].second - s.intervals[i].first,
                   s.intervals[i + 1].second - s.intervals[i + 1].first,
                   FieldElement()};
        const FieldElement& shorter =
            (e.bridge_left - e.bridge_right).sign() <= 0 ? e.bridge_left : e.bridge_right;
        e.min_ratio = shorter / e.gap_len;
        out.push_back(std::move(e));
    }
    return out;
}

struct LevelLedger {
    unsigned level = 0;
    std::vector<GapEntry> new_gaps;  // gaps disjoint from every earlier gap, with bridges at this level
    std::optional<FieldElement> min_ratio;
};

struct ThicknessReport {
    BasePtr base;
    unsigned k = 0, levels = 0;
    std::vector<LevelLedger> per_level;
    std::optional<FieldElement> global_min_ratio;  // over new gaps at levels <= n
    std::optional<FieldElement> max_gap;           // widest gap present at level n
    std::pair<FieldElement, FieldElement> hull;
    // analytic forms at l = 1/q (level independent):
    FieldElement gap_over_bridge;    // (1 - 2l + 2l^k - 2l^(k+1)) / (l^2 - l^k + l^(k+1))
    FieldElement gap_numerator;      // 1 - 2l + 2l^k - 2l^(k+1); positive iff the generic gap opens
    FieldElement ineq6_value;        // 3l^4 - 3l^3 + l^2 + 2l - 1
    FieldElement printed_tau_bound;  // (l^2 + l^k - l^(k+1)) / (2l^k - l^(k+1) + 1 - 2l)
    IntervalSet final_level;
};

inline FieldElement tauinf_ratio(const BasePtr& b, unsigned k) {
    require_base_in_unit_range(b);
    if (k < 3) throw std::invalid_argument("tauinf_ratio: k >= 3");
    FieldElement lam = FieldElement::generator(b).inverse();
    FieldElement num = lam * lam + lam.pow(k) - lam.pow(k + 1);
    FieldElement den = lam.pow(k) * Rat(2) - lam.pow(k + 1) + Rat(1) - lam * Rat(2);
    if (den.sign() == 0) throw std::domain_error("tauinf_ratio: denominator vanishes");
    return num / den;
}

inline ThicknessReport thickness_report(const BasePtr& b, unsigned k, unsigned n) {
    ThicknessReport rep;
    rep.base = b;
    rep.k = k;
    rep.levels = n;

    FieldElement lam = FieldElement::generator(b).inverse();
    rep.gap_numerator = FieldElement::one(b) - lam * Rat(2) + lam.pow(k) * Rat(2) - lam.pow(k + 1) * Rat(2);
    FieldElement bridge_poly = lam * lam - lam.pow(k) + lam.pow(k + 1);
    rep.gap_over_bridge = rep.gap_numerator / bridge_poly;
    rep.ineq6_value = lam.pow(4) * Rat(3) - lam.pow(3) * Rat(3) + lam * lam + lam * Rat(2) - Rat(1);
    rep.printed_tau_bound = tauinf_ratio(b, k);

    std::vector<std::pair<FieldElement, FieldElement>> prev_gaps;
    for (unsigned lvl = 1; lvl <= n; ++lvl) {
        IntervalSet s = build_level(b, k, lvl);
        std::vector<GapEntry> gaps = gap_entries(s);
        LevelLedger ledger;
        ledger.level = lvl;
        for (const auto& g : gaps) {
            bool is_new = true;
            for (const auto& [plo, phi] : prev_gaps) {
                // old gaps only widen; a new gap lies strictly inside an old bridge
                if (!((g.hi - plo).sign() <= 0 || (g.lo - phi).sign() >= 0)) {
                    is_new = false;
                    break;
                }
            }
            if (!is_new) continue;
            if (!ledger.min_ratio || (g.min_ratio - *ledger.min_ratio).sign() < 0) ledger.min_ratio = g.min_ratio;
            ledger.new_gaps.push_back(g);
        }
        if (ledger.min_ratio &&
            (!rep.global_min_ratio || (*ledger.min_ratio - *rep.global_min_ratio).sign() < 0))
            rep.global_min_ratio = ledger.min_ratio;
        rep.per_level.push_back(std::move(ledger));
        prev_gaps.clear();
        for (const auto& g : gaps) prev_gaps.emplace_back(g.lo, g.hi);
        if (lvl == n) {
            for (const auto& g : gaps)
                if (!rep.max_gap || (g.gap_len - *rep.max_gap).sign() > 0) rep.max_gap = g.gap_len;
            rep.hull = s.hull();
            rep.final_level = std::move(s);
        }
    }
    return rep;
}

struct SumsetCertificate {
    bool granted = false;
    std::string reason;
    std::optional<GapEntry> offending;
    FieldElement target;                               // q/(q-1)
    bool target_covered = false;
    std::pair<FieldElement, FieldElement> conclusion;  // [0, 2/(q-1)]
    ThicknessReport evidence;
};

// Grants C + C = [0, 2/(q-1)] for the level-n approximation evidence:
// analytic gap/bridge < 1, observed per-level minima > 1, full hull, and an
// independent finite check that q/(q-1) is covered by the pairwise sum.
inline SumsetCertificate newhouse_sumset_cert(const BasePtr& b, unsigned k, unsigned n) {
    SumsetCertificate cert;
    cert.evidence = thickness_report(b, k, n);
    FieldElement q = FieldElement::generator(b);
    FieldElement sup = interval_sup(b);
    cert.target = q * sup;  // q/(q-1)
    cert.conclusion = {FieldElement::zero(b), sup * Rat(2)};

    const ThicknessReport& ev = cert.evidence;
    if (ev.gap_numerator.sign() <= 0) {
        cert.reason = "analytic gap length is not positive (gap polynomial evaluates to " +
                      ev.gap_numerator.decimal(5) + "): the generic adjacent cylinders overlap at this base";
        return cert;
    }
    FieldElement one_minus = FieldElement::one(b) - ev.gap_over_bridge;
    if (one_minus.sign() <= 0) {
        cert.reason = "analytic gap/bridge ratio " + ev.gap_over_bridge.decimal(5) + " is not below 1";
        return cert;
    }
    if (!ev.global_min_ratio) {
        cert.reason = "no gap observed through level " + std::to_string(n);
        return cert;
    }
    for (const auto& ledger : ev.per_level) {
        for (const auto& g : ledger.new_gaps) {
            if ((g.min_ratio - FieldElement::one(b)).sign() <= 0) {
                cert.reason = "level " + std::to_string(ledger.level) + " gap [" + g.lo.decimal(6) + ", " +
                              g.hi.decimal(6) + "] has bridge/gap ratio " + g.min_ratio.decimal(5) + " <= 1";
                cert.offending = g;
                return cert;
            }
        }
    }
    auto [hlo, hhi] = ev.hull;
    if (hlo.sign() != 0 || (hhi - sup).sign() != 0) {
        cert.reason = "hull is not the full interval [0, 1/(q-1)]";
        return cert;
    }
    if (!ev.max_gap || (*ev.max_gap - (hhi - hlo)).sign() >= 0) {
        cert.reason = "maximal gap is not smaller than the hull";
        return cert;
    }
    // independent finite check: the target lies in the pairwise interval sum
    for (const auto& [alo, ahi] : ev.final_level.intervals) {
        if (cert.target_covered) break;
        for (const auto& [blo, bhi] : ev.final_level.intervals) {
            if ((cert.target - (alo + blo)).sign() >= 0 && ((ahi + bhi) - cert.target).sign() >= 0) {
                cert.target_covered = true;
                break;
            }
        }
    }
    if (!cert.target_covered) {
        cert.reason = "q/(q-1) not covered by the level-" + std::to_string(n) + " pairwise sums";
        return cert;
    }
    cert.granted = true;
    cert.reason = "thickness evidence and pairwise-sum cover agree";
    return cert;
}

// ---- dimension bound: the only inexact corner, outward rounded ----

struct DecimalInterval {
    Rat lo, hi;
    std::string str(int places = 6) const {
        return decimal_string(lo, places) + " .. " + decimal_string(hi, places);
    }
};

namespace detail {
inline Rat mpfr_to_rat(mpfr_t v) {
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, v);
    Rat r(q);
    mpq_clear(q);
    return r;
}
}  // namespace detail

// log 2 / log(2 + 1/tau) enclosed with directed rounding; width <= 1e-6
inline DecimalInterval dim_lower_bound(const Rat& tau_lo, const Rat& tau_hi) {
    if (sign_of(tau_lo) <= 0 || tau_hi < tau_lo) throw std::domain_error("dim_lower_bound: tau must be positive");
    Rat arg_hi = Rat(2) + 1 / tau_lo;  // dim is increasing in tau
    Rat arg_lo = Rat(2) + 1 / tau_hi;
    mpfr_t num, den, res;
    mpfr_inits2(192, num, den, res, static_cast<mpfr_ptr>(nullptr));
    DecimalInterval out;
    // lower bound: log2 down / log(arg_hi) up
    mpfr_const_log2(num, MPFR_RNDD);
    mpfr_set_q(den, arg_hi.get_mpq_t(), MPFR_RNDU);
    mpfr_log(den, den, MPFR_RNDU);
    mpfr_div(res, num, den, MPFR_RNDD);
    out.lo = detail::mpfr_to_rat(res);
    // upper bound: log2 up / log(arg_lo) down
    mpfr_const_log2(num, MPFR_RNDU);
    mpfr_set_q(den, arg_lo.get_mpq_t(), MPFR_RNDD);
    mpfr_log(den, den, MPFR_RNDD);
    mpfr_div(res, num, den, MPFR_RNDU);
    out.hi = detail::mpfr_to_rat(res);
    mpfr_clears(num, den, res, static_cast<mpfr_ptr>(nullptr));
    return out;
}

inline DecimalInterval dim_lower_bound(const Rat& tau) { return dim_lower_bound(tau, tau); }

inline DecimalInterval dim_lower_bound(const FieldElement& tau) {
    RatInterval e = tau.enclosure(Rat(1, 1000000000000L));
    if (sign_of(e.lo) <= 0) throw std::domain_error("dim_lower_bound: tau must be positive");
    return dim_lower_bound(e.lo, e.hi);
}

// enclosure of log(a)/log(b) for algebraic a, b > 1
inline DecimalInterval log_ratio_enclosure(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    RatInterval ia = a.refine(Rat(1, 1000000000000L));
    RatInterval ib = b.refine(Rat(1, 1000000000000L));
    if (ia.lo <= 1 || ib.lo <= 1) throw std::domain_error("log_ratio_enclosure: arguments must exceed 1");
    mpfr_t num, den, res;
    mpfr_inits2(192, num, den, res, static_cast<mpfr_ptr>(nullptr));
    DecimalInterval out;
    mpfr_set_q(num, ia.lo.get_mpq_t(), MPFR_RNDD);
    mpfr_log(num, num, MPFR_RNDD);
    mpfr_set_q(den, ib.hi.get_mpq_t(), MPFR_RNDU);
    mpfr_log(den, den, MPFR_RNDU);
    mpfr_div(res, num, den, MPFR_RNDD);
    out.lo = detail::mpfr_to_rat(res);
    mpfr_set_q(num, ia.hi.get_mpq_t(), MPFR_RNDU);
    mpfr_log(num, num, MPFR_RNDU);
    mpfr_set_q(den, ib.lo.get_mpq_t(), MPFR_RNDD);
    mpfr_log(den, den, MPFR_RNDD);
    mpfr_div(res, num, den, MPFR_RNDU);
    out.hi = detail::mpfr_to_rat(res);
    mpfr_clears(num, den, res, static_cast<mpfr_ptr>(nullptr));
    return out;
}

}  // namespace betabranch

#endif
