#include "bnconcur/mv.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "bnconcur/errors.hpp"

namespace bnconcur {

using nlohmann::ordered_json;

std::string ConfigM::str() const {
    std::string out;
    for (int i = 0; i < n(); ++i) {
        if (i) out += ",";
        if (k[i] == 0) out += "0";
        else if (k[i] == m) out += "1";
        else out += std::to_string(k[i]) + "/" + std::to_string(m);
    }
    return out;
}

bool ConfigM::operator<(const ConfigM& o) const {
    if (m != o.m) return m < o.m;
    return k < o.k;
}

std::size_t ConfigMHash::operator()(const ConfigM& x) const {
    std::size_t h = static_cast<std::size_t>(x.m);
    for (int v : x.k) h = h * 131 + static_cast<std::size_t>(v + 1);
    return h;
}

std::size_t MultivaluedNetwork::table_size() const {
    std::size_t s = 1;
    for (int i = 0; i < n; ++i) s *= static_cast<std::size_t>(radix());
    return s;
}

void MultivaluedNetwork::validate() const {
    if (n < 1 || n > kMaxDim)
        throw InputError("dimension " + std::to_string(n) + " out of range");
    if (m < 1) throw InputError("granularity m must be at least 1");
    if (static_cast<int>(names.size()) != n)
        throw InputError("need one name per component");
    if (static_cast<int>(tables.size()) != n)
        throw InputError("need one table per component");
    std::size_t want = table_size();
    if (want > std::size_t(1) << 20)
        throw InputError("table size exceeds the cap");
    for (int i = 0; i < n; ++i)
        if (tables[i].size() != want)
            throw InputError("table for component '" + names[i] + "' has " +
                             std::to_string(tables[i].size()) + " entries, expected " +
                             std::to_string(want));
}

std::size_t mv_index(const ConfigM& x) {
    std::size_t idx = 0;
    std::size_t base = 1;
    for (int i = 0; i < x.n(); ++i) {
        idx += static_cast<std::size_t>(x.k[i]) * base;
        base *= static_cast<std::size_t>(x.m + 1);
    }
    return idx;
}

ConfigM mv_config(std::size_t index, int n, int m) {
    ConfigM x;
    x.m = m;
    x.k.resize(n);
    for (int i = 0; i < n; ++i) {
        x.k[i] = static_cast<int>(index % static_cast<std::size_t>(m + 1));
        index /= static_cast<std::size_t>(m + 1);
    }
    return x;
}

Config3 abstr(const ConfigM& x) {
    Config3 out(0, x.n());
    for (int i = 0; i < x.n(); ++i) {
        if (x.k[i] == 0) out.set(i, Tri::Zero);
        else if (x.k[i] == x.m) out.set(i, Tri::One);
        else out.set(i, Tri::Half);
    }
    return out;
}

std::vector<ConfigM> mv_async_successors(const MultivaluedNetwork& F,
                                         const ConfigM& x) {
    if (x.n() != F.n || x.m != F.m)
        throw InputError("configuration does not match the network");
    std::size_t idx = mv_index(x);
    std::vector<ConfigM> out;
    for (int i = 0; i < F.n; ++i) {
        Dir d = F.tables[i][idx];
        if (d == Dir::Stay) continue;
        int next = x.k[i] + (d == Dir::Up ? 1 : -1);
        next = std::clamp(next, 0, F.m);
        if (next == x.k[i]) continue; // saturated move, dropped
        ConfigM y = x;
        y.k[i] = next;
        out.push_back(std::move(y));
    }
    return out;
}

MvGraph mv_graph(const MultivaluedNetwork& F, const ConfigM& from,
                 const ExploreBudget& budget) {
    auto succ = [&](const ConfigM& x) {
        std::vector<std::pair<int, ConfigM>> out;
        for (ConfigM& y : mv_async_successors(F, x)) {
            int moved = 0;
            for (int i = 0; i < F.n; ++i)
                if (y.k[i] != x.k[i]) {
                    moved = i;
                    break;
                }
            out.emplace_back(moved, std::move(y));
        }
        return out;
    };
    return explore<ConfigM, int, ConfigMHash>({from}, succ, budget);
}

RefinementReport check_refinement(const MultivaluedNetwork& F,
                                  const BooleanNetwork& f) {
    F.validate();
    f.validate();
    if (F.n != f.dim())
        throw InputError("network dimensions disagree");
    RefinementReport report;
    std::size_t total = F.table_size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        ConfigM x = mv_config(idx, F.n, F.m);
        std::vector<Config> comps = approx(abstr(x));
        for (int i = 0; i < F.n; ++i) {
            Dir d = F.tables[i][idx];
            if (d == Dir::Stay) continue;
            bool want = d == Dir::Up;
            bool justified = false;
            for (const Config& c : comps)
                if (eval(f.functions[i], c) == want) {
                    justified = true;
                    break;
                }
            if (!justified) {
                report.ok = false;
                report.violations.push_back({x, i});
            }
        }
    }
    return report;
}

SimulationReport check_simulation(const MultivaluedNetwork& F,
                                  const BooleanNetwork& f,
                                  const ExploreBudget& budget) {
    RefinementReport ref = check_refinement(F, f);
    if (!ref.ok)
        throw InputError("the multivalued network does not refine the Boolean one");
    SimulationReport report;
    std::size_t total = F.table_size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        ConfigM x = mv_config(idx, F.n, F.m);
        for (const ConfigM& y : mv_async_successors(F, x)) {
            int i = 0;
            while (y.k[i] == x.k[i]) ++i;
            bool simulated;
            if (F.m == 1) {
                // Two explicit 3-valued moves: open the update on i, then
                // resolve it to the new value.
                Config3 a = abstr(x);
                Config3 b = abstr(y);
                Config3 mid = a;
                mid.set(i, Tri::Half);
                auto first = mp_successors(f, a);
                auto second = mp_successors(f, mid);
                simulated =
                    std::find(first.begin(), first.end(), mid) != first.end() &&
                    std::find(second.begin(), second.end(), b) != second.end();
            } else {
                simulated = mp_reachable(f, abstr(x), abstr(y), budget);
            }
            if (!simulated) {
                report.ok = false;
                report.violations.push_back({x, y, i});
            }
        }
    }
    return report;
}

MultivaluedNetwork load_mv_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    MultivaluedNetwork F;
    try {
        F.n = j.at("n").get<int>();
        F.m = j.at("m").get<int>();
        F.names = j.at("names").get<std::vector<std::string>>();
        for (const auto& jt : j.at("tables")) {
            std::vector<Dir> table;
            for (const auto& tok : jt) {
                std::string s = tok.get<std::string>();
                if (s == "u") table.push_back(Dir::Up);
                else if (s == "s") table.push_back(Dir::Stay);
                else if (s == "d") table.push_back(Dir::Down);
                else
                    throw InputError("bad table token '" + s +
                                     "' (expected u, s or d)");
            }
            F.tables.push_back(std::move(table));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed multivalued network: ") + e.what());
    }
    F.validate();
    return F;
}

MultivaluedNetwork load_mv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_mv_json(buf.str());
}

std::string save_mv_json(const MultivaluedNetwork& F) {
    F.validate();
    ordered_json j;
    j["n"] = F.n;
    j["m"] = F.m;
    j["names"] = F.names;
    j["tables"] = ordered_json::array();
    for (const auto& table : F.tables) {
        ordered_json jt = ordered_json::array();
        for (Dir d : table)
            jt.push_back(d == Dir::Up ? "u" : d == Dir::Down ? "d" : "s");
        j["tables"].push_back(std::move(jt));
    }
    return j.dump(2) + "\n";
}

} // namespace bnconcur
