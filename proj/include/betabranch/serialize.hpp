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

// JSON forms of bases, classifications, graphs, scans, thickness reports and
// sumset certificates. Exact quantities are serialized as strings (rationals
// or rational coefficient vectors), decimals carry five places by default.

#ifndef BETABRANCH_SERIALIZE_HPP
#define BETABRANCH_SERIALIZE_HPP

#include <json.hpp>
#include <string>

#include "betabranch/cantor.hpp"
#include "betabranch/catalog.hpp"
#include "betabranch/enumerator.hpp"

namespace betabranch {

using Json = nlohmann::ordered_json;

inline Json base_json(const BasePtr& b) {
    RatInterval iv = b->interval();
    return Json{{"minpoly", b->poly().str()},
                {"lo", rat_string(iv.lo)},
                {"hi", rat_string(iv.hi)},
                {"label", b->label()}};
}

inline BasePtr base_from_json(const Json& j) {
    return std::make_shared<const AlgebraicNumber>(IntPoly::parse(j.at("minpoly").get<std::string>()),
                                                   parse_rat(j.at("lo").get<std::string>()),
                                                   parse_rat(j.at("hi").get<std::string>()),
                                                   j.value("label", std::string{}));
}

inline Json classification_json(const ExpansionCount& c) {
    switch (c.kind) {
        case ExpansionCount::Kind::Finite:
            return Json{{"kind", "finite"}, {"m", c.m}};
        case ExpansionCount::Kind::CountablyInfinite:
            return Json{{"kind", "aleph0"}};
        case ExpansionCount::Kind::Continuum:
            return Json{{"kind", "continuum"}};
        case ExpansionCount::Kind::Unresolved:
        default:
            return Json{{"kind", "unresolved"}, {"lower_bound", c.lower_bound}, {"reason", c.reason}};
    }
}

inline Json graph_json(const StateGraph& g) {
    Json nodes = Json::array(), edges = Json::array();
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        nodes.push_back(Json{{"id", v}, {"rep", g.nodes[v].vec_string()}, {"depth", g.depth[v]}});
        for (int digit = 0; digit < 2; ++digit) {
            int u = g.succ[v][digit];
            if (u >= 0) edges.push_back(Json{{"from", v}, {"digit", digit}, {"to", u}});
        }
    }
    return Json{{"base", base_json(g.base)}, {"closed", g.closed}, {"root", g.root},
                {"states", g.nodes.size()}, {"nodes", nodes},    {"edges", edges}};
}

// matches a scan survivor against the named catalog constants
inline std::string catalog_name_of(const AlgebraicNumber& q) {
    for (const char* name : {"G", "q_omega", "q2", "qf", "T"}) {
        if (q.equals(*catalog::base_by_name(name))) return name;
    }
    return "";
}

inline Json scan_json(const ScanResult& scan) {
    Json solutions = Json::array(), boundary = Json::array();
    for (const ScanHit& hit : scan.survivors) {
        std::string name = catalog_name_of(*hit.q);
        Json q = name.empty() ? Json{{"minpoly", hit.q->poly().str()}, {"decimal", hit.q->decimal(5)}}
                              : Json(name);
        solutions.push_back(Json{{"l", hit.ell}, {"k", hit.k}, {"q", q}});
    }
    for (const ScanHit& hit : scan.boundary_hits)
        boundary.push_back(Json{{"l", hit.ell}, {"k", hit.k}, {"lambda", hit.boundary}, {"excluded", true}});
    return Json{{"solutions", solutions},
                {"boundary", boundary},
                {"cutoffs_verified", scan.cutoffs_verified},
                {"cutoffs", scan.cutoff_notes}};
}

inline Json gap_json(const GapEntry& g) {
    return Json{{"lo", g.lo.vec_string()},
                {"hi", g.hi.vec_string()},
                {"gap", g.gap_len.vec_string()},
                {"gap_decimal", g.gap_len.decimal(6)},
                {"bridge_left", g.bridge_left.vec_string()},
                {"bridge_right", g.bridge_right.vec_string()},
                {"ratio", g.min_ratio.vec_string()},
                {"ratio_decimal", g.min_ratio.decimal(6)}};
}

inline Json thickness_json(const ThicknessReport& rep) {
    Json levels = Json::array();
    for (const LevelLedger& led : rep.per_level) {
        Json gaps = Json::array();
        for (const GapEntry& g : led.new_gaps) gaps.push_back(gap_json(g));
        Json entry{{"level", led.level}, {"new_gaps", gaps}};
        entry["min_ratio"] = led.min_ratio ? Json(led.min_ratio->decimal(6)) : Json(nullptr);
        levels.push_back(std::move(entry));
    }
    Json out{{"base", base_json(rep.base)}, {"k", rep.k}, {"levels", rep.levels}, {"per_level", levels}};
    out["global_min_ratio"] = rep.global_min_ratio ? Json(rep.global_min_ratio->decimal(6)) : Json(nullptr);
    out["max_gap"] = rep.max_gap ? Json(rep.max_gap->decimal(6)) : Json(nullptr);
    out["hull"] = Json{{"lo", rep.hull.first.vec_string()}, {"hi", rep.hull.second.vec_string()}};
    out["gap_over_bridge"] = rep.gap_over_bridge.decimal(6);
    out["ineq6"] = rep.ineq6_value.decimal(6);
    out["tau_bound"] = rep.printed_tau_bound.decimal(6);
    return out;
}

inline Json cert_json(const SumsetCertificate& cert) {
    Json out{{"granted", cert.granted}, {"reason", cert.reason}};
    out["conclusion"] = Json{{"lo", "0"}, {"hi", cert.conclusion.second.vec_string()},
                             {"hi_decimal", cert.conclusion.second.decimal(6)}};
    out["target"] = cert.target.decimal(6);
    out["target_covered"] = cert.target_covered;
    if (cert.offending) out["offending"] = gap_json(*cert.offending);
    out["global_min_ratio"] =
        cert.evidence.global_min_ratio ? Json(cert.evidence.global_min_ratio->decimal(6)) : Json(nullptr);
    return out;
}

}  // namespace betabranch

#endif
