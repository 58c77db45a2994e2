#include "bnconcur/rpn_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "bnconcur/errors.hpp"

namespace bnconcur {

using nlohmann::ordered_json;

namespace {

std::string step_label(const ReadPetriNet& n, const std::vector<int>& step) {
    if (step.size() == 1) return n.transitions[step[0]].name;
    std::vector<std::string> names;
    for (int t : step) names.push_back(n.transitions[t].name);
    std::sort(names.begin(), names.end());
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    return out + "}";
}

} // namespace

ReadPetriNet load_rpn_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("places") || !j.contains("transitions"))
        throw InputError("net JSON must be an object with 'places' and 'transitions'");

    ReadPetriNet n;
    std::unordered_map<std::string, int> index;
    try {
        for (const auto& jp : j.at("places")) {
            RpnPlace p;
            p.id = jp.at("id").get<std::string>();
            p.name = jp.value("name", p.id);
            int idx = n.num_places();
            if (!index.emplace(p.id, idx).second)
                throw InputError("duplicate place id '" + p.id + "'");
            if (idx >= kMaxPlaces)
                throw InputError("too many places");
            if (jp.value("marked", false)) n.initial.set(idx);
            n.places.push_back(std::move(p));
        }
        auto resolve = [&](const nlohmann::json& arr, const std::string& tid) {
            Marking m;
            for (const auto& jid : arr) {
                std::string id = jid.get<std::string>();
                auto it = index.find(id);
                if (it == index.end())
                    throw InputError("transition '" + tid +
                                     "' references unknown place '" + id + "'");
                m.set(it->second);
            }
            return m;
        };
        for (const auto& jt : j.at("transitions")) {
            RpnTransition t;
            t.id = jt.at("id").get<std::string>();
            t.name = jt.value("name", t.id);
            t.pre = resolve(jt.at("pre"), t.id);
            if (jt.contains("cont")) t.cont = resolve(jt.at("cont"), t.id);
            if (jt.contains("post")) t.post = resolve(jt.at("post"), t.id);
            n.transitions.push_back(std::move(t));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed net JSON: ") + e.what());
    }
    n.validate();
    return n;
}

ReadPetriNet load_rpn_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_rpn_json(buf.str());
}

std::string save_rpn_json(const ReadPetriNet& n) {
    std::vector<int> porder(n.num_places());
    for (int i = 0; i < n.num_places(); ++i) porder[i] = i;
    std::sort(porder.begin(), porder.end(), [&](int a, int b) {
        return n.places[a].id < n.places[b].id;
    });
    std::vector<int> torder(n.num_transitions());
    for (int i = 0; i < n.num_transitions(); ++i) torder[i] = i;
    std::sort(torder.begin(), torder.end(), [&](int a, int b) {
        return n.transitions[a].id < n.transitions[b].id;
    });

    auto ids = [&](const Marking& m) {
        std::vector<std::string> out;
        for (int p : m.bits()) out.push_back(n.places[p].id);
        std::sort(out.begin(), out.end());
        return out;
    };

    ordered_json j;
    j["places"] = ordered_json::array();
    for (int p : porder) {
        ordered_json jp;
        jp["id"] = n.places[p].id;
        jp["name"] = n.places[p].name;
        jp["marked"] = n.initial.test(p);
        j["places"].push_back(std::move(jp));
    }
    j["transitions"] = ordered_json::array();
    for (int t : torder) {
        const RpnTransition& tr = n.transitions[t];
        ordered_json jt;
        jt["id"] = tr.id;
        jt["name"] = tr.name;
        jt["pre"] = ids(tr.pre);
        jt["cont"] = ids(tr.cont);
        jt["post"] = ids(tr.post);
        j["transitions"].push_back(std::move(jt));
    }
    return j.dump(2) + "\n";
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string marking_graph_dot(const ReadPetriNet& n, const MarkingGraph& g) {
    std::string out = "digraph stg {\n";
    for (const Marking& m : g.states)
        out += "  \"" + dot_escape(n.marking_str(m)) + "\";\n";
    for (const auto& e : g.edges) {
        out += "  \"" + dot_escape(n.marking_str(e.src)) + "\" -> \"" +
               dot_escape(n.marking_str(e.dst)) + "\" [label=\"" +
               dot_escape(step_label(n, e.label)) + "\"];\n";
    }
    out += "}\n";
    return out;
}

std::string marking_graph_json(const ReadPetriNet& n, const MarkingGraph& g) {
    ordered_json j;
    j["states"] = ordered_json::array();
    for (const Marking& m : g.states) j["states"].push_back(n.marking_str(m));
    j["edges"] = ordered_json::array();
    for (const auto& e : g.edges) {
        ordered_json je;
        je["src"] = n.marking_str(e.src);
        je["label"] = step_label(n, e.label);
        je["dst"] = n.marking_str(e.dst);
        j["edges"].push_back(std::move(je));
    }
    return j.dump(2) + "\n";
}

} // namespace bnconcur
