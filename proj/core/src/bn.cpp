#include "bnconcur/bn.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace bnconcur {

UpdateMode parse_mode(const std::string& s) {
    if (s == "async") return UpdateMode::Async;
    if (s == "sync") return UpdateMode::Sync;
    if (s == "general") return UpdateMode::General;
    if (s == "interval") return UpdateMode::Interval;
    if (s == "mp") return UpdateMode::MostPermissive;
    throw InputError("unknown update mode \"" + s + "\"");
}

std::string mode_name(UpdateMode m) {
    switch (m) {
    case UpdateMode::Async: return "async";
    case UpdateMode::Sync: return "sync";
    case UpdateMode::General: return "general";
    case UpdateMode::Interval: return "interval";
    case UpdateMode::MostPermissive: return "mp";
    }
    return "?";
}

int BooleanNetwork::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

void BooleanNetwork::validate() const {
    if (dim() == 0) throw InputError("network has no components");
    if (dim() > kMaxDim)
        throw InputError("dimension cap exceeded: n=" + std::to_string(dim()));
    if (names.size() != functions.size())
        throw InputError("name/function count mismatch");
    std::unordered_set<std::string> seen;
    for (const auto& nm : names)
        if (!seen.insert(nm).second)
            throw InputError("duplicate component name \"" + nm + "\"");
    for (int i = 0; i < dim(); ++i) {
        std::uint32_t sup = support(*functions[i]);
        if (dim() < 32 && (sup >> dim()) != 0)
            throw InputError("component " + names[i] +
                             " references a variable outside the network");
    }
}

BooleanNetwork parse_bn(const std::string& text) {
    // First pass collects component names so right-hand sides may refer to
    // components declared later.
    struct Line {
        std::string rhs;
        int lineno;
    };
    std::vector<Line> rhss;
    BooleanNetwork f;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line.substr(0, line.find('#'));
        bool blank = body.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) continue;
        auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected `name = expr`", lineno, 1);
        std::string name = body.substr(0, eq);
        auto b = name.find_first_not_of(" \t");
        auto e = name.find_last_not_of(" \t\r");
        if (b == std::string::npos)
            throw ParseError("missing component name", lineno, 1);
        name = name.substr(b, e - b + 1);
        bool ok = isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_';
        for (char c : name)
            ok = ok && (isalnum(static_cast<unsigned char>(c)) || c == '_');
        if (!ok)
            throw ParseError("invalid component name \"" + name + "\"", lineno, 1);
        f.names.push_back(name);
        rhss.push_back({body.substr(eq + 1), lineno});
    }
    for (std::size_t i = 0; i < rhss.size(); ++i) {
        try {
            f.functions.push_back(parse_expr(rhss[i].rhs, f.names));
        } catch (const ParseError& pe) {
            throw ParseError(std::string(pe.what()) + " (component " + f.names[i] +
                                 ", line " + std::to_string(rhss[i].lineno) + ")",
                             pe.line, pe.col);
        }
    }
    f.validate();
    return f;
}

std::string print_bn(const BooleanNetwork& f) {
    std::string out;
    for (int i = 0; i < f.dim(); ++i)
        out += f.names[i] + " = " + to_string(*f.functions[i], f.names) + "\n";
    return out;
}

namespace {

std::uint32_t unstable_mask(const BooleanNetwork& f, const Config& x) {
    std::uint32_t m = 0;
    for (int i = 0; i < f.dim(); ++i)
        if (eval(f.functions[i], x) != x.get(i)) m |= 1u << i;
    return m;
}

} // namespace

std::vector<Config> async_successors(const BooleanNetwork& f, const Config& x) {
    std::vector<Config> out;
    std::uint32_t u = unstable_mask(f, x);
    for (int i = 0; i < f.dim(); ++i)
        if ((u >> i) & 1u) out.push_back(x.with(i, !x.get(i)));
    return out;
}

std::vector<Config> sync_successors(const BooleanNetwork& f, const Config& x) {
    Config y = f.apply(x);
    if (y == x) return {};
    return {y};
}

std::vector<Config> general_successors(const BooleanNetwork& f, const Config& x) {
    std::uint32_t u = unstable_mask(f, x);
    std::vector<Config> out;
    // Every nonempty submask of the unstable set.
    for (std::uint32_t flip = u; flip != 0; flip = (flip - 1) & u)
        out.push_back(Config(x.bits ^ flip, x.n));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Config> successors(const BooleanNetwork& f, const Config& x,
                               UpdateMode mode) {
    switch (mode) {
    case UpdateMode::Async: return async_successors(f, x);
    case UpdateMode::Sync: return sync_successors(f, x);
    case UpdateMode::General: return general_successors(f, x);
    default:
        throw InputError("mode " + mode_name(mode) +
                         " is not a native B^n update mode");
    }
}

std::vector<Config> fixpoints(const BooleanNetwork& f) {
    std::vector<Config> out;
    for (const Config& x : all_configs(f.dim()))
        if (f.apply(x) == x) out.push_back(x);
    return out;
}

BnGraph reachable(const BooleanNetwork& f, UpdateMode mode,
                  const std::vector<Config>& from, const ExploreBudget& budget) {
    for (const Config& x : from)
        if (x.n != f.dim()) throw InputError("configuration dimension mismatch");
    auto succ = [&](const Config& x) {
        std::vector<std::pair<std::uint32_t, Config>> out;
        for (const Config& y : successors(f, x, mode))
            out.emplace_back(x.bits ^ y.bits, y);
        return out;
    };
    return explore<Config, std::uint32_t, ConfigHash>(from, succ, budget);
}

BnGraph reachable(const BooleanNetwork& f, UpdateMode mode, const Config& from,
                  const ExploreBudget& budget) {
    return reachable(f, mode, std::vector<Config>{from}, budget);
}

} // namespace bnconcur
