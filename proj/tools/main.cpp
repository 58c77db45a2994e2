// bnconcur: command-line front end for the library. Subcommands map onto
// the library operation families; stdout is deterministic for a given
// invocation, timing goes to stderr.

#include <algorithm>
#include <bit>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bnconcur/bn.hpp"
#include "bnconcur/encodings.hpp"
#include "bnconcur/errors.hpp"
#include "bnconcur/influence.hpp"
#include "bnconcur/mp.hpp"
#include "bnconcur/mv.hpp"
#include "bnconcur/report.hpp"
#include "bnconcur/rpn.hpp"
#include "bnconcur/rpn_io.hpp"
#include "bnconcur/sensitivity.hpp"

using namespace bnconcur;
using nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string model;
    std::string mode = "async";
    std::string from;
    std::string to;
    std::string format = "dot";
    std::string output;
    std::size_t max_states = std::size_t(1) << 20;
    int max_step = 16;
    int workers = 1;
    bool project = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const CommonOpts& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw InputError("cannot write '" + o.output + "'");
    out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

ExploreBudget budget_of(const CommonOpts& o) {
    return ExploreBudget{o.max_states, o.workers};
}

Config parse_config_n(const std::string& s, int n) {
    Config c = parse_config(s);
    if (c.n != n)
        throw InputError("configuration \"" + s + "\" has length " +
                         std::to_string(c.n) + ", expected " + std::to_string(n));
    return c;
}

std::vector<std::string> split_ids(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

/// Goal patterns: '0'/'1' ('*' too in 3-valued positions) match exactly,
/// '*' in --to acts as a wildcard.
bool matches_pattern(const Config& x, const std::string& pat) {
    if (static_cast<int>(pat.size()) != x.n)
        throw InputError("pattern '" + pat + "' does not match dimension " +
                         std::to_string(x.n));
    for (int i = 0; i < x.n; ++i) {
        if (pat[i] == '*') continue;
        if (pat[i] != '0' && pat[i] != '1')
            throw InputError("bad character in pattern '" + pat + "'");
        if (x.get(i) != (pat[i] == '1')) return false;
    }
    return true;
}

bool matches_pattern(const Config3& x, const std::string& pat) {
    if (static_cast<int>(pat.size()) != x.n)
        throw InputError("pattern '" + pat + "' does not match dimension " +
                         std::to_string(x.n));
    for (int i = 0; i < x.n; ++i) {
        if (pat[i] == '*') continue;
        if (pat[i] != '0' && pat[i] != '1')
            throw InputError("bad character in pattern '" + pat + "'");
        if (x.get(i) != (pat[i] == '1' ? Tri::One : Tri::Zero)) return false;
    }
    return true;
}

std::string delta_label(std::uint32_t mask) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (!((mask >> i) & 1u)) continue;
        if (!first) out += ", ";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

std::string join_args(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i) out += " ";
        out += argv[i];
    }
    return out;
}

std::string g_command;

// ---- stg ----

std::string bn_graph_dot(const BnGraph& g) {
    std::string out = "digraph stg {\n";
    for (const Config& x : g.states) out += "  \"" + x.str() + "\";\n";
    for (const auto& e : g.edges)
        out += "  \"" + e.src.str() + "\" -> \"" + e.dst.str() +
               "\" [label=\"" + delta_label(e.label) + "\"];\n";
    out += "}\n";
    return out;
}

ordered_json bn_graph_json(const BnGraph& g, const std::string& mode) {
    ordered_json j;
    j["mode"] = mode;
    j["states"] = ordered_json::array();
    for (const Config& x : g.states) j["states"].push_back(x.str());
    j["edges"] = ordered_json::array();
    for (const auto& e : g.edges) {
        ordered_json je;
        je["src"] = e.src.str();
        je["label"] = delta_label(e.label);
        je["dst"] = e.dst.str();
        j["edges"].push_back(std::move(je));
    }
    return j;
}

void emit_graph(const CommonOpts& o, const std::string& dot,
                const ordered_json& payload, const std::string& digest) {
    if (o.format == "dot") {
        write_output(o, dot);
    } else if (o.format == "json") {
        write_output(o, report_json(g_command, digest, payload.dump()));
    } else {
        throw InputError("unknown format '" + o.format + "'");
    }
}

/// Projection of the doubled network's graph through the observation map:
/// nodes collapse to their read halves, write-flip self-loops vanish.
std::pair<std::string, ordered_json> project_interval_graph(
    const IntervalBn& e, const BnGraph& g) {
    std::vector<Config> states;
    for (const Config& z : g.states) states.push_back(e.gamma(z));
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    struct PEdge {
        Config src, dst;
        int comp;
        bool operator<(const PEdge& o) const {
            if (src != o.src) return src < o.src;
            if (comp != o.comp) return comp < o.comp;
            return dst < o.dst;
        }
        bool operator==(const PEdge& o) const {
            return src == o.src && dst == o.dst && comp == o.comp;
        }
    };
    std::vector<PEdge> edges;
    for (const auto& edge : g.edges) {
        Config a = e.gamma(edge.src);
        Config b = e.gamma(edge.dst);
        if (a == b) continue;
        edges.push_back(PEdge{a, b, std::countr_zero(a.bits ^ b.bits) + 1});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::string dot = "digraph stg {\n";
    for (const Config& x : states) dot += "  \"" + x.str() + "\";\n";
    for (const auto& pe : edges)
        dot += "  \"" + pe.src.str() + "\" -> \"" + pe.dst.str() +
               "\" [label=\"{" + std::to_string(pe.comp) + "}\"];\n";
    dot += "}\n";

    ordered_json j;
    j["mode"] = "interval";
    j["projected"] = true;
    j["states"] = ordered_json::array();
    for (const Config& x : states) j["states"].push_back(x.str());
    j["edges"] = ordered_json::array();
    for (const auto& pe : edges) {
        ordered_json je;
        je["src"] = pe.src.str();
        je["label"] = "{" + std::to_string(pe.comp) + "}";
        je["dst"] = pe.dst.str();
        j["edges"].push_back(std::move(je));
    }
    return {dot, j};
}

int run_stg_bn(const CommonOpts& o, const std::string& text,
               const std::string& digest) {
    BooleanNetwork f = parse_bn(text);
    UpdateMode mode = parse_mode(o.mode);
    if (o.project && mode != UpdateMode::Interval)
        throw InputError("--project applies to interval mode only");
    if (mode == UpdateMode::Async || mode == UpdateMode::Sync ||
        mode == UpdateMode::General) {
        std::vector<Config> sources;
        if (o.from.empty())
            sources = all_configs(f.dim());
        else
            sources = {parse_config_n(o.from, f.dim())};
        BnGraph g = reachable(f, mode, sources, budget_of(o));
        emit_graph(o, bn_graph_dot(g), bn_graph_json(g, o.mode), digest);
        return 0;
    }
    if (mode == UpdateMode::Interval) {
        IntervalBn e = interval_encode(f);
        std::vector<Config> sources;
        if (o.from.empty()) {
            for (const Config& x : all_configs(f.dim()))
                sources.push_back(e.alpha(x));
        } else if (static_cast<int>(o.from.size()) == f.dim()) {
            sources = {e.alpha(parse_config_n(o.from, f.dim()))};
        } else {
            sources = {parse_config_n(o.from, 2 * f.dim())};
        }
        BnGraph g = reachable(e.bn, UpdateMode::Async, sources, budget_of(o));
        if (o.project) {
            auto [dot, payload] = project_interval_graph(e, g);
            emit_graph(o, dot, payload, digest);
        } else {
            emit_graph(o, bn_graph_dot(g), bn_graph_json(g, "interval"), digest);
        }
        return 0;
    }
    // most permissive, native 3-valued relation
    std::vector<Config3> sources;
    if (o.from.empty()) {
        for (const Config& x : all_configs(f.dim()))
            sources.push_back(Config3::of_config(x));
    } else {
        sources = {parse_config3(o.from)};
    }
    MpGraph g = explore<Config3, int, Config3Hash>(
        sources,
        [&](const Config3& x) {
            std::vector<std::pair<int, Config3>> out;
            for (const Config3& y : mp_successors(f, x)) {
                for (int i = 0; i < x.n; ++i)
                    if (y.get(i) != x.get(i)) {
                        out.emplace_back(i, y);
                        break;
                    }
            }
            return out;
        },
        budget_of(o));
    std::string dot = "digraph stg {\n";
    for (const Config3& x : g.states) dot += "  \"" + x.str() + "\";\n";
    for (const auto& e : g.edges)
        dot += "  \"" + e.src.str() + "\" -> \"" + e.dst.str() +
               "\" [label=\"{" + std::to_string(e.label + 1) + "}\"];\n";
    dot += "}\n";
    ordered_json j;
    j["mode"] = "mp";
    j["states"] = ordered_json::array();
    for (const Config3& x : g.states) j["states"].push_back(x.str());
    j["edges"] = ordered_json::array();
    for (const auto& e : g.edges) {
        ordered_json je;
        je["src"] = e.src.str();
        je["label"] = "{" + std::to_string(e.label + 1) + "}";
        je["dst"] = e.dst.str();
        j["edges"].push_back(std::move(je));
    }
    emit_graph(o, dot, j, digest);
    return 0;
}

int run_stg_rpn(const CommonOpts& o, const std::string& text,
                const std::string& digest) {
    ReadPetriNet net = load_rpn_json(text);
    if (o.project) throw InputError("--project applies to interval mode only");
    NetSemantics sem = parse_net_semantics(o.mode == "async" ? "atomic" : o.mode);
    Marking from =
        o.from.empty() ? net.initial : net.marking_from_ids(split_ids(o.from));
    StepLimits limits{o.max_step};
    if (sem == NetSemantics::Interval) {
        SplitNet s = split(net);
        MarkingGraph g = interval_marking_graph(s, s.embed(from), budget_of(o));
        ordered_json payload;
        payload["mode"] = "interval";
        payload["graph"] = ordered_json::parse(marking_graph_json(s.net, g));
        emit_graph(o, marking_graph_dot(s.net, g), payload, digest);
        return 0;
    }
    MarkingGraph g = marking_graph(net, from, sem, budget_of(o), limits);
    ordered_json payload;
    payload["mode"] = o.mode;
    payload["graph"] = ordered_json::parse(marking_graph_json(net, g));
    emit_graph(o, marking_graph_dot(net, g), payload, digest);
    return 0;
}

// ---- reach ----

int emit_reach(const CommonOpts& o, const std::string& digest, bool reachable,
               const std::vector<std::string>& witness) {
    ordered_json payload;
    payload["mode"] = o.mode;
    payload["from"] = o.from;
    payload["to"] = o.to;
    payload["reachable"] = reachable;
    payload["witness"] = witness;
    write_output(o, report_json(g_command, digest, payload.dump()));
    return reachable ? 0 : 1;
}

int run_reach_bn(const CommonOpts& o, const std::string& text,
                 const std::string& digest) {
    BooleanNetwork f = parse_bn(text);
    UpdateMode mode = parse_mode(o.mode);
    if (o.from.empty() || o.to.empty())
        throw InputError("reach needs --from and --to");
    std::vector<std::string> witness;
    bool found = false;
    if (mode == UpdateMode::Async || mode == UpdateMode::Sync ||
        mode == UpdateMode::General) {
        Config from = parse_config_n(o.from, f.dim());
        auto path = shortest_path<Config, ConfigHash>(
            {from},
            [&](const Config& x) {
                std::vector<std::pair<int, Config>> out;
                for (const Config& y : successors(f, x, mode))
                    out.emplace_back(0, y);
                return out;
            },
            [&](const Config& x) { return matches_pattern(x, o.to); },
            budget_of(o));
        found = !path.empty();
        for (const Config& x : path) witness.push_back(x.str());
    } else if (mode == UpdateMode::Interval) {
        IntervalBn e = interval_encode(f);
        Config from = e.alpha(parse_config_n(o.from, f.dim()));
        auto path = shortest_path<Config, ConfigHash>(
            {from},
            [&](const Config& z) {
                std::vector<std::pair<int, Config>> out;
                for (const Config& y : async_successors(e.bn, z))
                    out.emplace_back(0, y);
                return out;
            },
            [&](const Config& z) {
                return e.consistent(z) && matches_pattern(e.gamma(z), o.to);
            },
            budget_of(o));
        found = !path.empty();
        for (const Config& z : path) witness.push_back(z.str());
    } else {
        Config3 from = parse_config3(o.from);
        if (from.n != f.dim())
            throw InputError("--from dimension mismatch");
        auto path = shortest_path<Config3, Config3Hash>(
            {from},
            [&](const Config3& x) {
                std::vector<std::pair<int, Config3>> out;
                for (const Config3& y : mp_successors(f, x))
                    out.emplace_back(0, y);
                return out;
            },
            [&](const Config3& x) { return matches_pattern(x, o.to); },
            budget_of(o));
        found = !path.empty();
        for (const Config3& x : path) witness.push_back(x.str());
    }
    return emit_reach(o, digest, found, witness);
}

int run_reach_rpn(const CommonOpts& o, const std::string& text,
                  const std::string& digest) {
    ReadPetriNet net = load_rpn_json(text);
    NetSemantics sem = parse_net_semantics(o.mode == "async" ? "atomic" : o.mode);
    Marking from =
        o.from.empty() ? net.initial : net.marking_from_ids(split_ids(o.from));
    if (o.to.empty()) throw InputError("reach needs --to");
    Marking to = net.marking_from_ids(split_ids(o.to));
    StepLimits limits{o.max_step};
    std::vector<std::string> witness;
    bool found = false;
    if (sem == NetSemantics::Interval) {
        SplitNet s = split(net);
        Marking target = s.embed(to);
        auto path = shortest_path<Marking, MarkingHash>(
            {s.embed(from)},
            [&](const Marking& m) { return i_run_successors(s, m); },
            [&](const Marking& m) { return m == target; }, budget_of(o));
        found = !path.empty();
        for (const Marking& m : path) witness.push_back(s.net.marking_str(m));
    } else {
        auto succ = [&](const Marking& m) {
            if (sem == NetSemantics::Atomic) {
                std::vector<std::pair<int, Marking>> out;
                for (int t : atomic_enabled(net, m))
                    out.emplace_back(t, atomic_fire(net, m, t));
                return out;
            }
            std::vector<std::pair<int, Marking>> out;
            for (auto& [S, next] :
                 step_successors(net, m, sem == NetSemantics::MaxStep, limits))
                out.emplace_back(0, next);
            return out;
        };
        auto path = shortest_path<Marking, MarkingHash>(
            {from}, succ, [&](const Marking& m) { return m == to; },
            budget_of(o));
        found = !path.empty();
        for (const Marking& m : path) witness.push_back(net.marking_str(m));
    }
    return emit_reach(o, digest, found, witness);
}

// ---- translate ----

struct TranslateOpts {
    bool bn_to_rpn_flag = false;
    bool rpn_to_bn_flag = false;
    bool split_flag = false;
    bool interval_flag = false;
    bool mp_flag = false;
    bool eliminate_flag = false;
};

void write_sidecar(const CommonOpts& o, const ordered_json& prov) {
    if (o.output.empty()) return;
    std::ofstream out(o.output + ".prov.json", std::ios::binary);
    if (!out) throw InputError("cannot write '" + o.output + ".prov.json'");
    out << prov.dump(2) << "\n";
}

int run_translate(const CommonOpts& o, const TranslateOpts& t,
                  const std::string& text, const std::string& digest) {
    int chosen = t.bn_to_rpn_flag + t.rpn_to_bn_flag + t.split_flag +
                 t.interval_flag + t.mp_flag + t.eliminate_flag;
    if (chosen != 1)
        throw InputError("translate needs exactly one of --bn-to-rpn, "
                         "--rpn-to-bn, --split, --interval-encode, "
                         "--mp-encode, --eliminate-loops");
    ordered_json prov;
    prov["command"] = g_command;
    prov["input_digest"] = digest;
    if (t.bn_to_rpn_flag) {
        BooleanNetwork f = parse_bn(text);
        std::optional<Config> init;
        if (!o.from.empty()) init = parse_config_n(o.from, f.dim());
        BnRpnImage img = bn_to_rpn(f, init);
        prov["kind"] = "bn-to-rpn";
        prov["places"] = ordered_json::object();
        for (int i = 0; i < img.n; ++i) {
            prov["places"][img.net.places[img.place0(i)].id] = {
                {"component", img.names[i]}, {"value", 0}};
            prov["places"][img.net.places[img.place1(i)].id] = {
                {"component", img.names[i]}, {"value", 1}};
        }
        prov["transitions"] = ordered_json::object();
        for (std::size_t k = 0; k < img.tags.size(); ++k) {
            const GammaTag& tag = img.tags[k];
            prov["transitions"][img.net.transitions[k].id] = {
                {"component", img.names[tag.var]},
                {"direction", tag.up ? "up" : "down"},
                {"clause", tag.clause}};
        }
        write_output(o, save_rpn_json(img.net));
        write_sidecar(o, prov);
        return 0;
    }
    if (t.rpn_to_bn_flag) {
        ReadPetriNet net = load_rpn_json(text);
        RpnBnImage img = rpn_to_bn(net, ExploreBudget{o.max_states, o.workers});
        prov["kind"] = "rpn-to-bn";
        prov["components"] = ordered_json::object();
        for (int p = 0; p < img.num_places; ++p)
            prov["components"][img.bn.names[img.place_comp(p)]] = {
                {"kind", "place"}, {"id", net.places[p].id}};
        for (int tr = 0; tr < img.num_transitions; ++tr)
            prov["components"][img.bn.names[img.trans_comp(tr)]] = {
                {"kind", "transition"}, {"id", net.transitions[tr].id}};
        write_output(o, print_bn(img.bn));
        write_sidecar(o, prov);
        return 0;
    }
    if (t.split_flag) {
        ReadPetriNet net = load_rpn_json(text);
        SplitNet s = split(net);
        prov["kind"] = "split";
        prov["orig_places"] = s.orig_places;
        prov["orig_transitions"] = s.orig_transitions;
        write_output(o, save_rpn_json(s.net));
        write_sidecar(o, prov);
        return 0;
    }
    if (t.eliminate_flag) {
        ReadPetriNet net = load_rpn_json(text);
        write_output(o, save_rpn_json(eliminate_loops(net)));
        prov["kind"] = "eliminate-loops";
        write_sidecar(o, prov);
        return 0;
    }
    BooleanNetwork f = parse_bn(text);
    if (t.interval_flag) {
        IntervalBn e = interval_encode(f);
        prov["kind"] = "interval-encode";
        prov["roles"] = ordered_json::object();
        for (int i = 0; i < e.n; ++i) {
            prov["roles"][e.bn.names[e.write_index(i)]] = {
                {"component", f.names[i]}, {"role", "write"}};
            prov["roles"][e.bn.names[e.read_index(i)]] = {
                {"component", f.names[i]}, {"role", "read"}};
        }
        write_output(o, print_bn(e.bn));
        write_sidecar(o, prov);
        return 0;
    }
    MpBn e = mp_encode(f);
    prov["kind"] = "mp-encode";
    prov["roles"] = ordered_json::object();
    for (int i = 0; i < e.n; ++i) {
        prov["roles"][e.bn.names[e.write_index(i)]] = {
            {"component", f.names[i]}, {"role", "write"}};
        prov["roles"][e.bn.names[e.read_index(i)]] = {
            {"component", f.names[i]}, {"role", "read"}};
        prov["roles"][e.bn.names[e.coin_index(i)]] = {
            {"component", f.names[i]}, {"role", "coin"}};
    }
    write_output(o, print_bn(e.bn));
    write_sidecar(o, prov);
    return 0;
}

// ---- sensitivity ----

bool looks_like_config(const std::string& s, int n) {
    if (static_cast<int>(s.size()) != n) return false;
    for (char c : s)
        if (c != '0' && c != '1') return false;
    return true;
}

int run_sensitivity(const CommonOpts& o, const std::string& text,
                    const std::string& digest) {
    BnRpnImage img;
    bool have_tags = true;
    if (ends_with(o.model, ".bn")) {
        BooleanNetwork f = parse_bn(text);
        std::optional<Config> init;
        if (!o.from.empty()) init = parse_config_n(o.from, f.dim());
        img = bn_to_rpn(f, init);
    } else {
        ReadPetriNet net = load_rpn_json(text);
        auto s = recognize_boolean_structure(net);
        if (s) {
            img = image_with_structure(net, *s);
            if (!o.from.empty() && looks_like_config(o.from, s->n))
                img.net.initial = config_to_marking(parse_config_n(o.from, s->n));
            else if (!o.from.empty())
                img.net.initial = img.net.marking_from_ids(split_ids(o.from));
        } else {
            img.net = net;
            have_tags = false;
            if (!o.from.empty())
                img.net.initial = img.net.marking_from_ids(split_ids(o.from));
        }
    }
    SensitivityLimits limits;
    limits.max_step = o.max_step;
    NormalScan scan =
        find_normal_pairs(img.net, img.net.initial, budget_of(o), limits);

    ordered_json payload;
    payload["complete"] = scan.complete;
    payload["witnesses"] = ordered_json::array();
    for (const NormalPair& pair : scan.pairs) {
        ordered_json w;
        w["marking"] = img.net.marking_str(pair.marking);
        w["step"] = ordered_json::array();
        for (int t : pair.step) w["step"].push_back(img.net.transitions[t].id);
        PreemptionGraph pg = preemption_graph(img.net, pair.step);
        w["preemption_edges"] = ordered_json::array();
        for (const auto& e : pg.edges)
            w["preemption_edges"].push_back(
                {img.net.transitions[e.from].id, img.net.transitions[e.to].id});
        std::vector<int> cycle = find_preemption_cycle(pg);
        w["cycle"] = ordered_json::array();
        for (int t : cycle) w["cycle"].push_back(img.net.transitions[t].id);
        if (have_tags && !cycle.empty()) {
            ArcClass arcs = classify_arcs(img, cycle);
            w["arc_types"] = arcs.types;
            w["sign"] = arcs.positive ? "positive" : "negative";
        } else {
            w["arc_types"] = ordered_json::array();
            w["sign"] = nullptr;
        }
        w["sequentialization_trace"] = ordered_json::array();
        for (const auto& entry : pair.trace) {
            ordered_json te;
            te["prefix"] = ordered_json::array();
            for (int t : entry.prefix)
                te["prefix"].push_back(img.net.transitions[t].id);
            te["outcome"] = entry.wrong_final ? "wrong-final" : "blocked";
            w["sequentialization_trace"].push_back(std::move(te));
        }
        payload["witnesses"].push_back(std::move(w));
    }
    write_output(o, report_json(g_command, digest, payload.dump()));
    if (!scan.pairs.empty()) return 0;
    return scan.complete ? 1 : 3;
}

// ---- influence / fixpoints / mv-check ----

int run_influence(const CommonOpts& o, const std::string& text,
                  const std::string& digest) {
    BooleanNetwork f = parse_bn(text);
    InfluenceGraph g = influence_graph(f);
    if (o.format == "dot") {
        write_output(o, influence_dot(g, f.names));
        return 0;
    }
    if (o.format != "json") throw InputError("unknown format '" + o.format + "'");
    ordered_json payload;
    payload["locally_monotonic"] = g.locally_monotonic();
    payload["edges"] = ordered_json::array();
    for (const SignedEdge& e : g.edges()) {
        ordered_json je;
        je["from"] = f.names[e.from];
        je["to"] = f.names[e.to];
        je["sign"] = e.positive ? "+" : "-";
        payload["edges"].push_back(std::move(je));
    }
    write_output(o, report_json(g_command, digest, payload.dump()));
    return 0;
}

int run_fixpoints(const CommonOpts& o, const std::string& text,
                  const std::string& digest) {
    BooleanNetwork f = parse_bn(text);
    ordered_json payload;
    payload["fixpoints"] = ordered_json::array();
    for (const Config& x : fixpoints(f)) payload["fixpoints"].push_back(x.str());
    write_output(o, report_json(g_command, digest, payload.dump()));
    return 0;
}

int run_mv_check(const CommonOpts& o, const std::string& mv_path,
                 const std::string& bn_path, bool refine, bool simulate) {
    if (refine == simulate)
        throw InputError("mv-check needs exactly one of --refine, --simulate");
    std::string mv_text = read_file(mv_path);
    std::string bn_text = read_file(bn_path);
    std::string digest = fnv1a_hex(mv_text + "\n" + bn_text);
    MultivaluedNetwork F = load_mv_json(mv_text);
    BooleanNetwork f = parse_bn(bn_text);

    ordered_json payload;
    bool verdict;
    RefinementReport ref = check_refinement(F, f);
    payload["refines"] = ref.ok;
    if (refine) {
        verdict = ref.ok;
        payload["violations"] = ordered_json::array();
        for (const auto& v : ref.violations) {
            ordered_json jv;
            jv["x"] = v.x.str();
            jv["component"] = F.names[v.i];
            payload["violations"].push_back(std::move(jv));
        }
    } else if (!ref.ok) {
        verdict = false;
        payload["simulates"] = nullptr;
        payload["violations"] = ordered_json::array();
    } else {
        SimulationReport sim = check_simulation(F, f, budget_of(o));
        verdict = sim.ok;
        payload["simulates"] = sim.ok;
        payload["violations"] = ordered_json::array();
        for (const auto& v : sim.violations) {
            ordered_json jv;
            jv["from"] = v.from.str();
            jv["to"] = v.to.str();
            jv["component"] = F.names[v.i];
            payload["violations"].push_back(std::move(jv));
        }
    }
    write_output(o, report_json(g_command, digest, payload.dump()));
    return verdict ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    g_command = join_args(argc, argv);
    CLI::App app{"Boolean networks and safe read Petri nets under "
                 "asynchronous, synchronous, step, interval and most "
                 "permissive semantics"};
    app.require_subcommand(1);

    CommonOpts o;
    TranslateOpts t;
    std::string mv_path, bn_path;
    bool refine = false, simulate = false;

    auto add_common = [&](CLI::App* cmd, bool with_model = true) {
        if (with_model)
            cmd->add_option("model", o.model, "input file (.bn or .rpn.json)")
                ->required();
        cmd->add_option("--max-states", o.max_states,
                        "state budget for explorations")
            ->envname("BNCONCUR_BUDGET");
        cmd->add_option("--max-step", o.max_step, "step size cap");
        cmd->add_option("--workers", o.workers, "worker threads");
        cmd->add_option("-o,--output", o.output, "write output here");
    };

    CLI::App* stg = app.add_subcommand("stg", "explore a transition graph");
    add_common(stg);
    stg->add_option("--mode", o.mode,
                    "async|sync|general|interval|mp (nets: atomic|step|"
                    "maxstep|interval)");
    stg->add_option("--from", o.from, "source configuration or marking");
    stg->add_option("--format", o.format, "dot|json");
    stg->add_flag("--project", o.project, "collapse interval states to reads");

    CLI::App* reach = app.add_subcommand("reach", "decide reachability");
    add_common(reach);
    reach->add_option("--mode", o.mode, "update mode or net semantics");
    reach->add_option("--from", o.from, "source");
    reach->add_option("--to", o.to, "target ('*' wildcards allowed)");
    reach->add_option("--format", o.format, "json");

    CLI::App* translate = app.add_subcommand("translate", "convert between formats");
    add_common(translate);
    translate->add_flag("--bn-to-rpn", t.bn_to_rpn_flag, "network to net");
    translate->add_flag("--rpn-to-bn", t.rpn_to_bn_flag, "net to network");
    translate->add_flag("--split", t.split_flag, "two-phase split of a net");
    translate->add_flag("--interval-encode", t.interval_flag, "doubled network");
    translate->add_flag("--mp-encode", t.mp_flag, "tripled network");
    translate->add_flag("--eliminate-loops", t.eliminate_flag,
                        "loops into read arcs");
    translate->add_option("--from", o.from,
                          "initial configuration for --bn-to-rpn");

    CLI::App* sens = app.add_subcommand(
        "sensitivity", "find steps that cannot be sequentialized");
    add_common(sens);
    sens->add_option("--from", o.from, "configuration or marking to scan from");

    CLI::App* infl = app.add_subcommand("influence", "signed influence graph");
    add_common(infl);
    infl->add_option("--format", o.format, "dot|json");

    CLI::App* fix = app.add_subcommand("fixpoints", "list fixpoints");
    add_common(fix);
    fix->add_option("--format", o.format, "json");

    CLI::App* mv = app.add_subcommand("mv-check",
                                      "refinement and simulation checks");
    mv->add_option("mv", mv_path, "multivalued network (.mv.json)")->required();
    mv->add_option("model", bn_path, "Boolean network (.bn)")->required();
    mv->add_flag("--refine", refine, "check the refinement conditions");
    mv->add_flag("--simulate", simulate, "check 3-valued simulation of moves");
    mv->add_option("--max-states", o.max_states)->envname("BNCONCUR_BUDGET");
    mv->add_option("-o,--output", o.output, "write output here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto started = std::chrono::steady_clock::now();
    int code = 2;
    try {
        if (mv->parsed()) {
            code = run_mv_check(o, mv_path, bn_path, refine, simulate);
        } else {
            std::string text = read_file(o.model);
            std::string digest = fnv1a_hex(text);
            // the permutation-search cap wants a tighter default
            if (sens->parsed() && sens->get_option("--max-step")->count() == 0)
                o.max_step = 6;
            if (stg->parsed())
                code = ends_with(o.model, ".bn") ? run_stg_bn(o, text, digest)
                                                 : run_stg_rpn(o, text, digest);
            else if (reach->parsed())
                code = ends_with(o.model, ".bn")
                           ? run_reach_bn(o, text, digest)
                           : run_reach_rpn(o, text, digest);
            else if (translate->parsed())
                code = run_translate(o, t, text, digest);
            else if (sens->parsed())
                code = run_sensitivity(o, text, digest);
            else if (infl->parsed())
                code = run_influence(o, text, digest);
            else if (fix->parsed())
                code = run_fixpoints(o, text, digest);
        }
    } catch (const BudgetError& e) {
        std::cerr << "bnconcur: " << e.what() << "\n";
        code = 3;
    } catch (const InputError& e) {
        std::cerr << "bnconcur: " << e.what() << "\n";
        code = 2;
    } catch (const SafetyError& e) {
        std::cerr << "bnconcur: " << e.what() << "\n";
        code = 2;
    } catch (const std::exception& e) {
        std::cerr << "bnconcur: " << e.what() << "\n";
        code = 2;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cerr << "bnconcur: finished in " << elapsed << " ms\n";
    return code;
}
