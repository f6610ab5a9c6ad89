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

// Command line front end: classify points, list expansions, scan for
// two-expansion bases, build thickness ledgers and sumset certificates, and
// run the verify-paper suite.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "betabranch/serialize.hpp"
#include "betabranch/verify.hpp"

namespace bb = betabranch;
namespace cat = betabranch::catalog;

namespace {

// --base accepts a catalog name (G, q_omega, q2, qf, T, T<k>, qf<n>, qn<n>)
// or an inline JSON object {"minpoly": "...", "lo": "p/q", "hi": "p/q"}
bb::BasePtr resolve_base(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') return bb::base_from_json(bb::Json::parse(spec));
    return cat::base_by_name(spec);
}

bb::FieldElement resolve_point(const bb::BasePtr& base, const std::string& word, const std::string& x) {
    if (!word.empty() && !x.empty()) throw CLI::ValidationError("--word and --x are mutually exclusive");
    if (!word.empty()) return bb::value_of(bb::DigitWord::parse(word), base);
    if (!x.empty()) return bb::FieldElement::constant(base, bb::parse_rat(x));
    throw CLI::ValidationError("one of --word or --x is required");
}

void emit(const bb::Json& j, bool json_mode, const std::string& text) {
    if (json_mode)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified expansion counting in algebraic bases q in (1,2)"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine readable output");

    std::string base_spec, word_spec, x_spec;
    unsigned depth = 16, level = 10, kparam = 3, lmax = 4, kmax = 6;
    std::size_t budget_states = 0;
    bool emit_graph = false;

    auto add_base = [&](CLI::App* cmd) { cmd->add_option("--base", base_spec, "catalog name or base JSON")->required(); };
    auto add_point = [&](CLI::App* cmd) {
        cmd->add_option("--word", word_spec, "digit word, e.g. 011(01)*");
        cmd->add_option("--x", x_spec, "exact rational point, e.g. 1 or 7/9");
    };

    CLI::App* constants = app.add_subcommand("constants", "print the catalog constants");

    CLI::App* expand = app.add_subcommand("expand", "exact value, greedy and lazy digits of a point");
    add_base(expand);
    add_point(expand);
    expand->add_option("--depth", depth, "digits to emit (default 16)");

    CLI::App* classify_cmd = app.add_subcommand("classify", "count the expansions of a point");
    add_base(classify_cmd);
    add_point(classify_cmd);
    classify_cmd->add_option("--budget-states", budget_states, "state budget override");
    classify_cmd->add_flag("--graph", emit_graph, "also export the state graph");

    CLI::App* unique = app.add_subcommand("unique", "test whether a point has a unique expansion");
    add_base(unique);
    add_point(unique);

    CLI::App* b2scan = app.add_subcommand("b2-scan", "scan the lower-order two-expansion bases");
    b2scan->add_option("--lmax", lmax, "largest first exponent (default 4)");
    b2scan->add_option("--kmax", kmax, "largest second exponent (default 6)");

    CLI::App* thickness = app.add_subcommand("thickness", "exact gap/bridge ledger of the level sets");
    add_base(thickness);
    thickness->add_option("--k", kparam, "forbidden factor length parameter (default 3)");
    thickness->add_option("--level", level, "deepest level (default 10)");

    CLI::App* sumset = app.add_subcommand("sumset-cert", "sumset certificate C+C = [0, 2/(q-1)]");
    add_base(sumset);
    sumset->add_option("--k", kparam, "forbidden factor length parameter (default 3)");
    sumset->add_option("--level", level, "evidence level (default 10)");

    CLI::App* verify = app.add_subcommand("verify-paper", "run the full reproduction suite");
    unsigned level_cap = 12;
    verify->add_option("--thickness-levels", level_cap, "level cap for the thickness criterion (default 12)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*constants) {
            bb::Json rows = bb::Json::array();
            std::string text;
            for (const auto& name : cat::constant_names()) {
                cat::ConstantEntry e = cat::constant(name);
                std::string dec = e.base ? e.base->decimal(5) : bb::decimal_string(e.bracket.mid(), 5);
                bb::Json row{{"name", e.name}, {"equation", e.equation}, {"decimal", dec}};
                if (e.base)
                    row["base"] = bb::base_json(e.base);
                else
                    row["bracket"] =
                        bb::Json{{"lo", bb::rat_string(e.bracket.lo)}, {"hi", bb::rat_string(e.bracket.hi)}};
                rows.push_back(std::move(row));
                text += e.name + "\t" + dec + "\t" + e.equation + "\n";
            }
            emit(rows, json_mode, text);
            return 0;
        }

        if (*expand) {
            bb::BasePtr base = resolve_base(base_spec);
            bb::FieldElement x = resolve_point(base, word_spec, x_spec);
            std::string g = bb::greedy(x, depth), l = bb::lazy(x, depth);
            bb::Json j{{"base", base->label().empty() ? base->poly().str() : base->label()},
                       {"rep", x.vec_string()},
                       {"decimal", x.decimal(5)},
                       {"greedy", g},
                       {"lazy", l}};
            emit(j, json_mode,
                 "value " + x.decimal(5) + "  rep " + x.vec_string() + "\ngreedy " + g + "\nlazy   " + l + "\n");
            return 0;
        }

        if (*classify_cmd) {
            bb::BasePtr base = resolve_base(base_spec);
            bb::FieldElement x = resolve_point(base, word_spec, x_spec);
            bb::Budget budget = bb::Budget::from_env();
            if (budget_states) budget.max_states = budget_states;
            bb::StateGraph g = bb::explore(x, budget);
            bb::ExpansionCount c = bb::classify_graph(g);
            bb::Json j = bb::classification_json(c);
            if (c.kind == bb::ExpansionCount::Kind::Finite) {
                bb::Json words = bb::Json::array();
                for (const auto& w : bb::list_expansions(x, budget)) words.push_back(w.str());
                j["expansions"] = words;
            }
            if (emit_graph) j["graph"] = bb::graph_json(g);
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*unique) {
            bb::BasePtr base = resolve_base(base_spec);
            bb::FieldElement x = resolve_point(base, word_spec, x_spec);
            bool u = bb::is_unique(x);
            bb::Json j{{"unique", u}};
            if (!word_spec.empty()) {
                try {
                    j["word_form"] = bb::uq_word_form(bb::DigitWord::parse(word_spec), base);
                } catch (const std::domain_error&) {
                    j["word_form"] = nullptr;  // base outside (G, qf]
                }
            }
            emit(j, json_mode, std::string(u ? "unique" : "not unique") + "\n");
            return 0;
        }

        if (*b2scan) {
            bb::ScanResult scan = bb::lower_order_scan(lmax, kmax);
            bb::Json j = bb::scan_json(scan);
            std::string text;
            for (const auto& s : j["solutions"]) text += "solution: " + s.dump() + "\n";
            for (const auto& s : j["boundary"]) text += "boundary: " + s.dump() + "\n";
            text += scan.cutoffs_verified ? "cutoffs verified\n" : "CUTOFFS FAILED\n";
            emit(j, json_mode, text);
            return scan.cutoffs_verified ? 0 : 1;
        }

        if (*thickness) {
            bb::BasePtr base = resolve_base(base_spec);
            bb::ThicknessReport rep = bb::thickness_report(base, kparam, level);
            bb::Json j = bb::thickness_json(rep);
            std::string text = "per-level new-gap minima (bridge/gap):\n";
            for (const auto& led : rep.per_level) {
                text += "  level " + std::to_string(led.level) + ": " +
                        (led.min_ratio ? led.min_ratio->decimal(6) : std::string("-")) + "\n";
            }
            if (rep.global_min_ratio) text += "global min " + rep.global_min_ratio->decimal(6) + "\n";
            text += "closed-form gap/bridge " + rep.gap_over_bridge.decimal(6) + "\n";
            emit(j, json_mode, text);
            return 0;
        }

        if (*sumset) {
            bb::BasePtr base = resolve_base(base_spec);
            bb::SumsetCertificate cert = bb::newhouse_sumset_cert(base, kparam, level);
            emit(bb::cert_json(cert), json_mode,
                 (cert.granted ? "certificate granted: C+C = [0, " + cert.conclusion.second.decimal(5) + "]"
                               : "refused: " + cert.reason) +
                     "\n");
            return cert.granted ? 0 : 1;
        }

        if (*verify) {
            bool all = true;
            bb::Json rows = bb::Json::array();
            for (const auto& r : bb::verify::run_all(level_cap)) {
                all = all && r.pass;
                if (json_mode) {
                    rows.push_back(bb::Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                } else {
                    std::printf("%s  %2d  %s  [%s]\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                                r.detail.c_str());
                    std::fflush(stdout);
                }
            }
            if (json_mode) std::cout << rows.dump(2) << "\n";
            return all ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const bb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
