/* Copyright 2026 The bicrystal Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Command-line front end. Exit codes: 0 ok, 1 invalid input (or a failed
// verify suite), 2 an operator returned null, 3 internal invariant failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bicrystal/graph.hpp"
#include "bicrystal/io.hpp"
#include "bicrystal/pbw.hpp"
#include "bicrystal/verify.hpp"

using namespace bicrystal;

namespace {

struct null_result : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string cartan;
    std::string tuple;
    std::string element;
    std::string op;
    std::string suite;
    std::string at;
    std::string from = "polyhedral";
    std::string to = "pbw";
    std::string format = "dot";
    int depth = 3;
    int node = 0;
    std::uint64_t seed = 0;
    bool json_out = false;
    bool star = false;
    bool both = false;
    bool render = false;
};

std::string slurp(const std::string& arg) {
    // inline JSON, or a path to a file holding it
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return arg;
    std::ifstream in(arg);
    if (!in) throw invalid_input("cannot read '" + arg + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

CartanType need_cartan(const Options& o) {
    if (o.cartan.empty()) throw invalid_input("--cartan is required");
    return CartanType::parse(o.cartan);
}

Element load_element(const Options& o) {
    if (!o.element.empty()) {
        Element b = element_from_json(parse_json_text(slurp(o.element)));
        if (!o.cartan.empty() && !(CartanType::parse(o.cartan) == b.cartan())) {
            throw invalid_input("--cartan disagrees with the element's type");
        }
        return b;
    }
    if (o.tuple.empty()) throw invalid_input("give --tuple or --element");
    return parse_tuple(need_cartan(o), o.tuple);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int parse_int(const std::string& s, const char* what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw invalid_input(std::string("bad ") + what + " '" + s + "'");
    }
    if (used != s.size()) throw invalid_input(std::string("bad ") + what + " '" + s + "'");
    return v;
}

int run_check(const Options& o) {
    const Element b = load_element(o);
    const bool chains = is_member_chains(b);
    const bool boxed = is_member_boxed(b);
    if (chains != boxed) throw invariant_error("membership descriptions disagree on " + b.to_string());
    if (o.json_out) {
        std::cout << json{{"element", to_json(b)}, {"member", chains}}.dump() << '\n';
    } else {
        std::cout << (chains ? "member" : "not a member") << '\n';
    }
    return 0;
}

int run_apply(const Options& o) {
    Element b = load_element(o);
    require_member(b);
    if (o.op.empty()) throw invalid_input("--op is required, e.g. f1,e2*,f3");
    json steps = json::array();
    for (const std::string& word : split(o.op, ',')) {
        if (word.size() < 2 || (word[0] != 'e' && word[0] != 'f')) throw invalid_input("bad operator '" + word + "'");
        const bool star = word.back() == '*';
        const int i = parse_int(word.substr(1, word.size() - 1 - (star ? 1 : 0)), "node");
        b.cartan().check_node(i);
        if (word[0] == 'f') {
            b = f(b, i, star);
        } else {
            auto r = e(b, i, star);
            if (!r) {
                if (o.json_out) std::cout << json{{"steps", steps}, {"null_at", word}}.dump() << '\n';
                throw null_result(word + " returned null");
            }
            b = *r;
        }
        if (o.json_out) steps.push_back({{"op", word}, {"element", to_json(b)}});
        else std::cout << word << ' ' << vertex_id(b) << '\n';
    }
    if (o.json_out) std::cout << json{{"steps", steps}}.dump() << '\n';
    return 0;
}

int run_tableau(const Options& o) {
    const CartanType c = need_cartan(o);
    c.check_node(o.node);
    const Tableau& T = tableau(c, o.node, o.star);
    const PartitionFamily& fam = partition_family(c, o.node, o.star);
    if (o.json_out) {
        json rows = json::array();
        for (const auto& r : T.rows) {
            json row = json::array();
            for (const auto& cell : r) row.push_back({{"index", {cell.index.s, cell.index.t}}, {"coeff", cell.coeff}});
            rows.push_back(row);
        }
        json family = json::array();
        for (std::size_t k = 0; k < fam.members.size(); ++k) {
            family.push_back({{"partition", fam.members[k].parts()}, {"form", format_form(c, fam.forms[k])}});
        }
        std::cout << json{{"cartan", c.name()}, {"node", o.node}, {"star", o.star}, {"rows", rows}, {"family", family}}
                         .dump()
                  << '\n';
        return 0;
    }
    std::cout << T.render();
    if (o.render) {
        for (std::size_t k = 0; k < fam.members.size(); ++k) {
            std::cout << fam.members[k].to_string() << ": " << format_form(c, fam.forms[k]) << '\n';
        }
    }
    return 0;
}

int run_diamond(const Options& o) {
    const Element b = load_element(o);
    const auto parts = split(o.at, ',');
    if (parts.size() != 2) throw invalid_input("--at expects s,t");
    const int s = parse_int(parts[0], "row"), t = parse_int(parts[1], "column");
    const int sum = diamond_sum(b, s, t, o.star);
    const int form = o.star ? partial_star(b, s, t) : partial(b, s, t);
    if (sum != form) throw invariant_error("diamond sum disagrees with the linear form");
    if (o.json_out) {
        json members = json::array();
        for (const auto& [u, coeff] : diamond(b.cartan(), s, t, o.star).members) members.push_back({u.s, u.t, coeff});
        std::cout << json{{"at", {s, t}}, {"star", o.star}, {"value", sum}, {"members", members}}.dump() << '\n';
        return 0;
    }
    if (o.render) std::cout << render_diamond(b, s, t, o.star);
    std::cout << (o.star ? "d*[" : "d[") << s << ',' << t << "] = " << sum << '\n';
    return 0;
}

int run_convert(const Options& o) {
    const CartanType c = need_cartan(o);
    if (o.tuple.empty()) throw invalid_input("--tuple is required");
    if (o.from == "pbw" && o.to == "polyhedral") {
        std::vector<int> values;
        for (const auto& tok : split(o.tuple, ',')) {
            std::string t = tok;
            std::erase(t, '(');
            std::erase(t, ')');
            values.push_back(parse_int(t, "exponent"));
        }
        const Element b = pbw_to_polyhedral(PbwDatum::from_tuple(c, values));
        if (o.json_out) std::cout << to_json(b).dump() << '\n';
        else std::cout << vertex_id(b) << '\n';
    } else if (o.from == "polyhedral" && o.to == "pbw") {
        const PbwDatum d = polyhedral_to_pbw(parse_tuple(c, o.tuple));
        if (o.json_out) std::cout << json{{"cartan", c.name()}, {"pbw", d.tuple()}}.dump() << '\n';
        else {
            const std::string s = d.to_string();
            std::cout << s.substr(1, s.size() - 2) << '\n';
        }
    } else {
        throw invalid_input("--from/--to must be pbw/polyhedral or polyhedral/pbw");
    }
    return 0;
}

std::pair<int, int> parse_pair(const std::string& word) {
    // "F(1,0)" -> (1, 0)
    const auto open = word.find('('), close = word.rfind(')');
    if (open != 1 || close != word.size() - 1) throw invalid_input("bad extended operator '" + word + "'");
    const auto parts = split(word.substr(open + 1, close - open - 1), ',');
    if (parts.size() != 2) throw invalid_input("bad extended operator '" + word + "'");
    return {parse_int(parts[0], "node"), parse_int(parts[1], "slot")};
}

int run_extended(const Options& o) {
    if (o.element.empty()) throw invalid_input("--element with \"slots\" is required");
    ExtendedElement bb = extended_from_json(parse_json_text(slurp(o.element)));
    for (const auto& [k, b] : bb.slots()) require_member(b);
    if (o.op.empty()) {
        // describe the selector at (node, at)
        bb.cartan().check_node(o.node);
        const int k = o.at.empty() ? 0 : parse_int(o.at, "slot");
        const ExtendedSelector sel = select_hat(bb, o.node, k);
        json values = json::array();
        for (const auto& g : extended_family(bb.cartan(), o.node)) {
            values.push_back({{"label", g.to_string()}, {"value", sigma_hat(bb, o.node, k, g)}});
        }
        const json out{{"eps_hat", eps_hat(bb, o.node, k)}, {"sigma_hat", values},
                       {"least", sel.least.to_string()},   {"greatest", sel.greatest.to_string()}};
        if (o.json_out) std::cout << out.dump() << '\n';
        else {
            for (const auto& v : values) std::cout << v["label"].get<std::string>() << " " << v["value"] << '\n';
            std::cout << "m-hat " << sel.least.to_string() << "  M-hat " << sel.greatest.to_string() << "  eps-hat "
                      << eps_hat(bb, o.node, k) << '\n';
        }
        return 0;
    }
    json steps = json::array();
    for (const std::string& word : split(o.op, ',')) {
        if (word.empty() || (word[0] != 'F' && word[0] != 'E')) throw invalid_input("bad extended operator '" + word + "'");
        const auto [i, k] = parse_pair(word);
        bb.cartan().check_node(i);
        bb = word[0] == 'F' ? F_hat(bb, i, k) : E_hat(bb, i, k);
        if (o.json_out) steps.push_back({{"op", word}, {"element", to_json(bb)}});
        else std::cout << word << ' ' << bb.to_string() << '\n';
    }
    if (o.json_out) std::cout << json{{"steps", steps}}.dump() << '\n';
    return 0;
}

int run_verify(const Options& o) {
    const CartanType c = need_cartan(o);
    std::vector<std::string> names;
    if (o.suite == "all") names = suite_names();
    else names.push_back(o.suite);
    bool ok = true;
    json reports = json::array();
    for (const auto& name : names) {
        const SuiteReport r = run_suite(name, c, o.depth, o.seed);
        ok = ok && r.passed();
        reports.push_back(to_json(r));
    }
    std::cout << (reports.size() == 1 ? reports[0] : reports).dump(2) << '\n';
    return ok ? 0 : 1;
}

int run_graph(const Options& o) {
    const CartanType c = need_cartan(o);
    if (o.depth < 0) throw invalid_input("depth must be nonnegative");
    const EdgeSet which = o.both ? EdgeSet::both : o.star ? EdgeSet::star : EdgeSet::usual;
    const GraphSlice g = build_graph(c, o.depth, which);
    if (o.format == "json" || o.json_out) std::cout << to_json(g).dump(2) << '\n';
    else if (o.format == "dot") std::cout << to_dot(g);
    else throw invalid_input("--format must be dot or json");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polyhedral realization of B(infinity): bicrystal operators, diamonds, extended crystal"};
    app.require_subcommand(1);
    Options o;

    auto cartan = [&](CLI::App* s) { s->add_option("--cartan", o.cartan, "Cartan type, e.g. A3, B2, D4"); };
    auto element = [&](CLI::App* s) {
        s->add_option("--tuple", o.tuple, "coordinates in canonical order, e.g. 2,4,0,5,1,3");
        s->add_option("--element", o.element, "element JSON (inline or a file path)");
    };
    auto json_flag = [&](CLI::App* s) { s->add_flag("--json", o.json_out, "machine-readable output"); };

    auto* check = app.add_subcommand("check", "membership test");
    cartan(check), element(check), json_flag(check);

    auto* apply = app.add_subcommand("apply", "apply an operator word left to right");
    cartan(apply), element(apply), json_flag(apply);
    apply->add_option("--op", o.op, "e.g. f1,e2*,f3");

    auto* tab = app.add_subcommand("tableau", "print T_i or T_i*");
    cartan(tab), json_flag(tab);
    tab->add_option("-i,--node", o.node, "node i")->required();
    tab->add_flag("--star", o.star, "star tableau");
    tab->add_flag("--render", o.render, "also list the family with its Sigma forms");

    auto* dia = app.add_subcommand("diamond", "diamond sum at (s,t)");
    cartan(dia), element(dia), json_flag(dia);
    dia->add_option("--at", o.at, "s,t")->required();
    dia->add_flag("--star", o.star, "star diamond");
    dia->add_flag("--render", o.render, "draw the configuration");

    auto* conv = app.add_subcommand("convert", "type A PBW data <-> polyhedral coordinates");
    cartan(conv), json_flag(conv);
    conv->add_option("--tuple", o.tuple, "input tuple");
    conv->add_option("--from", o.from, "pbw or polyhedral");
    conv->add_option("--to", o.to, "polyhedral or pbw");

    auto* ext = app.add_subcommand("extended", "extended crystal operators");
    json_flag(ext);
    ext->add_option("--element", o.element, "extended element JSON with \"slots\"");
    ext->add_option("--op", o.op, "e.g. F(1,0),E(2,-1)");
    ext->add_option("-i,--node", o.node, "node for the selector report");
    ext->add_option("--at", o.at, "slot k for the selector report");

    auto* ver = app.add_subcommand("verify", "run a property suite");
    cartan(ver);
    ver->add_option("--suite", o.suite, "suite name or all")->required();
    ver->add_option("--depth", o.depth, "maximum height");
    ver->add_option("--seed", o.seed, "seed for sampled checks");

    auto* graph = app.add_subcommand("graph", "truncated crystal graph");
    cartan(graph), json_flag(graph);
    graph->add_option("--depth", o.depth, "maximum height");
    graph->add_flag("--star", o.star, "star edges only");
    graph->add_flag("--both", o.both, "usual and star edges");
    graph->add_option("--format", o.format, "dot or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*check) return run_check(o);
        if (*apply) return run_apply(o);
        if (*tab) return run_tableau(o);
        if (*dia) return run_diamond(o);
        if (*conv) return run_convert(o);
        if (*ext) return run_extended(o);
        if (*ver) return run_verify(o);
        if (*graph) return run_graph(o);
    } catch (const null_result& e) {
        std::cerr << "null: " << e.what() << '\n';
        return 2;
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const invariant_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
