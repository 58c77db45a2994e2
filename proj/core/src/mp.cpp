#include "bnconcur/mp.hpp"

#include <algorithm>

#include "bnconcur/errors.hpp"

namespace bnconcur {

namespace {

int rank(Tri v) {
    switch (v) {
        case Tri::Half: return 0; // '*' sorts below '0' and '1'
        case Tri::Zero: return 1;
        default: return 2;
    }
}

char render(Tri v) {
    switch (v) {
        case Tri::Half: return '*';
        case Tri::Zero: return '0';
        default: return '1';
    }
}

/// Which values f_i takes over the Boolean completions of x, enumerating
/// only the in-between coordinates f_i actually reads.
std::pair<bool, bool> value_range(const BooleanNetwork& f, const Config3& x,
                                  int i) {
    std::uint32_t sup = support(*f.functions[i]);
    std::vector<int> free;
    Config base(0, x.n);
    for (int j = 0; j < x.n; ++j) {
        Tri v = x.get(j);
        if (v == Tri::One) base.set(j, true);
        else if (v == Tri::Half && ((sup >> j) & 1u)) free.push_back(j);
    }
    bool can0 = false, can1 = false;
    for (std::uint32_t a = 0; a < (std::uint32_t(1) << free.size()); ++a) {
        Config y = base;
        for (std::size_t k = 0; k < free.size(); ++k)
            y.set(free[k], (a >> k) & 1u);
        (eval(f.functions[i], y) ? can1 : can0) = true;
        if (can0 && can1) break;
    }
    return {can0, can1};
}

} // namespace

Config3 Config3::of_config(const Config& x) {
    Config3 out(0, x.n);
    for (int i = 0; i < x.n; ++i)
        out.set(i, x.get(i) ? Tri::One : Tri::Zero);
    return out;
}

bool Config3::boolean() const {
    for (int i = 0; i < n; ++i)
        if (get(i) == Tri::Half) return false;
    return true;
}

Config Config3::to_config() const {
    Config x(0, n);
    for (int i = 0; i < n; ++i) {
        Tri v = get(i);
        if (v == Tri::Half)
            throw InputError("configuration " + str() + " is not Boolean");
        x.set(i, v == Tri::One);
    }
    return x;
}

std::string Config3::str() const {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i) s[i] = render(get(i));
    return s;
}

bool Config3::operator<(const Config3& o) const {
    if (n != o.n) return n < o.n;
    for (int i = 0; i < n; ++i) {
        int a = rank(get(i));
        int b = rank(o.get(i));
        if (a != b) return a < b;
    }
    return false;
}

Config3 parse_config3(const std::string& s) {
    if (s.empty() || s.size() > 32)
        throw InputError("bad 3-valued configuration '" + s + "'");
    Config3 x(0, static_cast<int>(s.size()));
    for (int i = 0; i < x.n; ++i) {
        switch (s[i]) {
            case '0': x.set(i, Tri::Zero); break;
            case '1': x.set(i, Tri::One); break;
            case '*': x.set(i, Tri::Half); break;
            default:
                throw InputError("bad character '" + std::string(1, s[i]) +
                                 "' in 3-valued configuration '" + s + "'");
        }
    }
    return x;
}

std::vector<Config> approx(const Config3& x) {
    std::vector<int> free;
    Config base(0, x.n);
    for (int i = 0; i < x.n; ++i) {
        Tri v = x.get(i);
        if (v == Tri::One) base.set(i, true);
        else if (v == Tri::Half) free.push_back(i);
    }
    std::vector<Config> out;
    for (std::uint32_t a = 0; a < (std::uint32_t(1) << free.size()); ++a) {
        Config y = base;
        for (std::size_t k = 0; k < free.size(); ++k)
            y.set(free[k], (a >> k) & 1u);
        out.push_back(y);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Config3> mp_successors(const BooleanNetwork& f, const Config3& x) {
    if (x.n != f.dim()) throw InputError("configuration dimension mismatch");
    std::vector<Config3> out;
    for (int i = 0; i < x.n; ++i) {
        auto [can0, can1] = value_range(f, x, i);
        Tri v = x.get(i);
        if (v == Tri::Half) {
            if (can0) {
                Config3 y = x;
                y.set(i, Tri::Zero);
                out.push_back(y);
            }
            if (can1) {
                Config3 y = x;
                y.set(i, Tri::One);
                out.push_back(y);
            }
        } else if (v == Tri::Zero ? can1 : can0) {
            Config3 y = x;
            y.set(i, Tri::Half);
            out.push_back(y);
        }
    }
    return out;
}

bool mp_reachable(const BooleanNetwork& f, const Config3& from,
                  const Config3& to, const ExploreBudget& budget) {
    if (from.n != f.dim() || to.n != f.dim())
        throw InputError("configuration dimension mismatch");
    auto succ = [&](const Config3& x) {
        std::vector<std::pair<int, Config3>> out;
        for (const Config3& y : mp_successors(f, x)) out.emplace_back(0, y);
        return out;
    };
    auto goal = [&](const Config3& x) { return x == to; };
    return !shortest_path<Config3, Config3Hash>({from}, succ, goal, budget).empty();
}

MpGraph mp_graph(const BooleanNetwork& f, const Config3& from,
                 const ExploreBudget& budget) {
    if (from.n != f.dim()) throw InputError("configuration dimension mismatch");
    auto succ = [&](const Config3& x) {
        std::vector<std::pair<int, Config3>> out;
        for (const Config3& y : mp_successors(f, x)) {
            for (int i = 0; i < x.n; ++i)
                if (y.get(i) != x.get(i)) {
                    out.emplace_back(i, y);
                    break;
                }
        }
        return out;
    };
    return explore<Config3, int, Config3Hash>({from}, succ, budget);
}

} // namespace bnconcur
