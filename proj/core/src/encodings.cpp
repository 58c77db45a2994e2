#include "bnconcur/encodings.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "bnconcur/errors.hpp"

namespace bnconcur {

namespace {

/// Context places for a clause: value-0 place for each negative literal,
/// value-1 place for each positive one, skipping the guard literal on the
/// moving component itself.
Marking clause_context(const Clause& c, int i, int n, bool up) {
    std::uint32_t pos = c.pos;
    std::uint32_t neg = c.neg;
    if (up)
        neg &= ~(std::uint32_t(1) << i);
    else
        pos &= ~(std::uint32_t(1) << i);
    Marking m;
    for (std::uint32_t v = neg; v; v &= v - 1) m.set(std::countr_zero(v));
    for (std::uint32_t v = pos; v; v &= v - 1) m.set(n + std::countr_zero(v));
    return m;
}

BnRpnImage build_image(const BooleanNetwork& f, const std::vector<Dnf>& up,
                       const std::vector<Dnf>& down,
                       const std::optional<Config>& initial) {
    int n = f.dim();
    BnRpnImage img;
    img.n = n;
    img.names = f.names;
    img.net.places.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        img.net.places[i] = RpnPlace{std::to_string(i + 1), f.names[i] + "_0"};
        img.net.places[n + i] =
            RpnPlace{std::to_string(n + i + 1), f.names[i] + "_1"};
    }
    for (int i = 0; i < n; ++i) {
        auto add = [&](const Dnf& d, bool is_up) {
            int count = static_cast<int>(d.clauses.size());
            for (int k = 0; k < count; ++k) {
                const Clause& c = d.clauses[k];
                std::uint32_t guard = is_up ? c.neg : c.pos;
                if (!(guard & (std::uint32_t(1) << i)))
                    throw InputError("clause " + std::to_string(k + 1) +
                                     " for component '" + f.names[i] +
                                     "' lacks its guard literal");
                RpnTransition t;
                std::string base = f.names[i] + (is_up ? "+" : "-");
                if (count > 1) base += std::to_string(k + 1);
                t.id = base;
                t.name = base;
                t.pre.set(is_up ? i : n + i);
                t.post.set(is_up ? n + i : i);
                t.cont = clause_context(c, i, n, is_up);
                img.net.transitions.push_back(std::move(t));
                img.tags.push_back(GammaTag{i, is_up, k});
            }
        };
        add(up[i], true);
        add(down[i], false);
    }
    Config x0 = initial ? *initial : Config(0, n);
    if (x0.n != n) throw InputError("initial configuration dimension mismatch");
    img.net.initial = config_to_marking(x0);
    img.net.validate();
    return img;
}

} // namespace

BnRpnImage bn_to_rpn(const BooleanNetwork& f,
                     const std::optional<Config>& initial) {
    f.validate();
    int n = f.dim();
    std::vector<Dnf> up(n), down(n);
    for (int i = 0; i < n; ++i) {
        ExprPtr xi = make_var(i);
        up[i] = to_min_dnf(make_and({make_not(xi), f.functions[i]}), n);
        down[i] = to_min_dnf(make_and({xi, make_not(f.functions[i])}), n);
    }
    return build_image(f, up, down, initial);
}

BnRpnImage bn_to_rpn(const BooleanNetwork& f, const std::vector<Dnf>& up,
                     const std::vector<Dnf>& down,
                     const std::optional<Config>& initial) {
    f.validate();
    int n = f.dim();
    if (static_cast<int>(up.size()) != n || static_cast<int>(down.size()) != n)
        throw InputError("need one up and one down DNF per component");
    for (int i = 0; i < n; ++i) {
        for (const Config& x : all_configs(n)) {
            bool fx = eval(f.functions[i], x);
            if (up[i].eval(x) != (!x.get(i) && fx))
                throw InputError("up DNF for component '" + f.names[i] +
                                 "' disagrees with !" + f.names[i] + " & f at " +
                                 x.str());
            if (down[i].eval(x) != (x.get(i) && !fx))
                throw InputError("down DNF for component '" + f.names[i] +
                                 "' disagrees with " + f.names[i] + " & !f at " +
                                 x.str());
        }
    }
    return build_image(f, up, down, initial);
}

Marking config_to_marking(const Config& x) {
    Marking m;
    for (int i = 0; i < x.n; ++i) m.set(x.get(i) ? x.n + i : i);
    return m;
}

Config marking_to_config(const Marking& m, int n) {
    for (int b : m.bits())
        if (b >= 2 * n)
            throw InputError("marking uses place index " + std::to_string(b) +
                             " outside the image layout");
    Config x(0, n);
    for (int i = 0; i < n; ++i) {
        bool b0 = m.test(i);
        bool b1 = m.test(n + i);
        if (b0 == b1)
            throw InputError(std::string(b0 ? "both values" : "no value") +
                             " of component " + std::to_string(i + 1) +
                             " marked");
        x.set(i, b1);
    }
    return x;
}

namespace {

bool pair_by_numeric_ids(const ReadPetriNet& net, int n, std::vector<int>& var,
                         std::vector<int>& val) {
    int P = 2 * n;
    std::vector<int> by_num(P, -1);
    for (int p = 0; p < P; ++p) {
        const std::string& id = net.places[p].id;
        if (id.empty() || id.size() > 6) return false;
        int v = 0;
        for (char c : id) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
            v = v * 10 + (c - '0');
        }
        if (v < 1 || v > P || by_num[v - 1] != -1) return false;
        by_num[v - 1] = p;
    }
    for (int k = 0; k < P; ++k) {
        var[by_num[k]] = k % n;
        val[by_num[k]] = k / n;
    }
    return true;
}

bool pair_by_name_suffix(const ReadPetriNet& net, int n, std::vector<int>& var,
                         std::vector<int>& val) {
    std::map<std::string, std::array<int, 2>> pairs;
    std::vector<std::string> order;
    for (int p = 0; p < 2 * n; ++p) {
        const std::string& name = net.places[p].name;
        if (name.size() < 2) return false;
        char last = name.back();
        if ((last != '0' && last != '1') || name[name.size() - 2] != '_')
            return false;
        std::string base = name.substr(0, name.size() - 2);
        auto it = pairs.find(base);
        if (it == pairs.end()) {
            pairs[base] = {-1, -1};
            order.push_back(base);
        }
        int& slot = pairs[base][last - '0'];
        if (slot != -1) return false;
        slot = p;
    }
    if (static_cast<int>(order.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
        auto [p0, p1] = pairs[order[i]];
        if (p0 < 0 || p1 < 0) return false;
        var[p0] = i;
        val[p0] = 0;
        var[p1] = i;
        val[p1] = 1;
    }
    return true;
}

bool pair_by_transitions(const ReadPetriNet& net, int n, std::vector<int>& var,
                         std::vector<int>& val) {
    std::vector<int> partner(2 * n, -1);
    for (const auto& t : net.transitions) {
        auto pre = t.pre.bits();
        auto post = t.post.bits();
        if (pre.size() != 1 || post.size() != 1 || pre[0] == post[0])
            return false;
        int a = pre[0], b = post[0];
        if (partner[a] != -1 && partner[a] != b) return false;
        if (partner[b] != -1 && partner[b] != a) return false;
        partner[a] = b;
        partner[b] = a;
    }
    int comp = 0;
    for (int p = 0; p < 2 * n; ++p) {
        if (var[p] != -1) continue;
        if (partner[p] == -1) return false; // isolated place: no pairing evidence
        int q = partner[p];
        if (var[q] != -1) return false;
        // Lower index is taken as the value-0 place.
        var[p] = comp;
        val[p] = 0;
        var[q] = comp;
        val[q] = 1;
        ++comp;
    }
    return comp == n;
}

} // namespace

std::optional<BooleanStructure> recognize_boolean_structure(const ReadPetriNet& net) {
    int P = net.num_places();
    if (P == 0 || P % 2 != 0) return std::nullopt;
    int n = P / 2;
    BooleanStructure s;
    s.n = n;
    s.var_of_place.assign(P, -1);
    s.val_of_place.assign(P, -1);
    if (!pair_by_numeric_ids(net, n, s.var_of_place, s.val_of_place) &&
        !pair_by_name_suffix(net, n, s.var_of_place, s.val_of_place) &&
        !pair_by_transitions(net, n, s.var_of_place, s.val_of_place))
        return std::nullopt;

    s.names.assign(n, "");
    for (int p = 0; p < P; ++p) {
        const std::string& name = net.places[p].name;
        if (name.size() >= 2 && name[name.size() - 2] == '_' &&
            (name.back() == '0' || name.back() == '1')) {
            std::string base = name.substr(0, name.size() - 2);
            std::string& slot = s.names[s.var_of_place[p]];
            if (slot.empty()) slot = base;
            else if (slot != base) slot = "";
        }
    }
    for (int i = 0; i < n; ++i)
        if (s.names[i].empty()) s.names[i] = "x" + std::to_string(i + 1);

    for (const auto& t : net.transitions) {
        auto pre = t.pre.bits();
        auto post = t.post.bits();
        if (pre.size() != 1 || post.size() != 1) return std::nullopt;
        int a = pre[0], b = post[0];
        if (s.var_of_place[a] != s.var_of_place[b] ||
            s.val_of_place[a] == s.val_of_place[b])
            return std::nullopt;
        s.tags.push_back(GammaTag{s.var_of_place[a], s.val_of_place[b] == 1, 0});
    }
    return s;
}

BnRpnImage image_with_structure(const ReadPetriNet& net,
                                const BooleanStructure& s) {
    // Remap places into the canonical layout (component i at i and n+i)
    // so the marking/configuration maps apply unchanged.
    int n = s.n;
    std::vector<int> new_index(2 * n, -1);
    for (int p = 0; p < 2 * n; ++p)
        new_index[p] = s.val_of_place[p] == 0 ? s.var_of_place[p]
                                              : n + s.var_of_place[p];
    BnRpnImage img;
    img.n = n;
    img.names = s.names;
    img.tags = s.tags;
    img.net.places.resize(2 * n);
    for (int p = 0; p < 2 * n; ++p) img.net.places[new_index[p]] = net.places[p];
    auto remap = [&](const Marking& m) {
        Marking out;
        for (int b : m.bits()) out.set(new_index[b]);
        return out;
    };
    for (const auto& t : net.transitions) {
        RpnTransition nt = t;
        nt.pre = remap(t.pre);
        nt.cont = remap(t.cont);
        nt.post = remap(t.post);
        img.net.transitions.push_back(std::move(nt));
    }
    img.net.initial = remap(net.initial);
    img.net.validate();
    return img;
}

namespace {

std::string sanitize_identifier(const std::string& s) {
    std::string out;
    for (char c : s) {
        bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        out += ok ? c : '_';
    }
    if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0])))
        out = "p" + out;
    return out;
}

std::vector<std::string> unique_names(const ReadPetriNet& net) {
    std::vector<std::string> names;
    std::unordered_set<std::string> used;
    auto push = [&](const std::string& raw) {
        std::string base = sanitize_identifier(raw);
        std::string name = base;
        for (int k = 2; !used.insert(name).second; ++k)
            name = base + "_" + std::to_string(k);
        names.push_back(name);
    };
    for (const auto& p : net.places) push(p.name);
    for (const auto& t : net.transitions) push(t.name);
    return names;
}

} // namespace

Config RpnBnImage::config_of_marking(const Marking& m) const {
    Config x(0, num_places + num_transitions);
    for (int p = 0; p < num_places; ++p)
        if (m.test(p)) x.set(p, true);
    return x;
}

bool RpnBnImage::is_marking_config(const Config& x) const {
    for (int t = 0; t < num_transitions; ++t)
        if (x.get(trans_comp(t))) return false;
    return true;
}

Marking RpnBnImage::marking_of_config(const Config& x) const {
    if (!is_marking_config(x))
        throw InputError("configuration has a transition component set");
    Marking m;
    for (int p = 0; p < num_places; ++p)
        if (x.get(p)) m.set(p);
    return m;
}

RpnBnImage rpn_to_bn(const ReadPetriNet& net, const ExploreBudget& budget) {
    net.validate();
    if (!net.loop_free())
        throw InputError("net has place loops; apply eliminate_loops first");
    // Exhausting the atomic graph certifies safety: every firing checks
    // that no marked place is re-marked.
    marking_graph(net, net.initial, NetSemantics::Atomic, budget);

    int P = net.num_places();
    int T = net.num_transitions();
    if (P + T > kMaxDim)
        throw InputError("image network dimension " + std::to_string(P + T) +
                         " exceeds the cap (" + std::to_string(kMaxDim) + ")");
    RpnBnImage img;
    img.num_places = P;
    img.num_transitions = T;
    img.bn.names = unique_names(net);
    img.bn.functions.resize(P + T);

    for (int p = 0; p < P; ++p) {
        std::vector<ExprPtr> producers;
        std::vector<ExprPtr> keep{make_var(p)};
        for (int t = 0; t < T; ++t) {
            if (net.transitions[t].post.test(p))
                producers.push_back(make_var(img.trans_comp(t)));
            if (net.transitions[t].pre.test(p))
                keep.push_back(make_not(make_var(img.trans_comp(t))));
        }
        producers.push_back(make_and(std::move(keep)));
        img.bn.functions[p] = make_or(std::move(producers));
    }
    for (int t = 0; t < T; ++t) {
        const RpnTransition& tr = net.transitions[t];
        std::vector<ExprPtr> start;
        for (int p : (tr.pre | tr.cont).bits()) start.push_back(make_var(p));
        for (int u = 0; u < T; ++u)
            start.push_back(make_not(make_var(img.trans_comp(u))));
        std::vector<ExprPtr> reset;
        for (int p : tr.post.bits()) reset.push_back(make_not(make_var(p)));
        for (int p : tr.pre.bits()) reset.push_back(make_var(p));
        ExprPtr busy = make_and(
            {make_var(img.trans_comp(t)), make_or(std::move(reset))});
        img.bn.functions[img.trans_comp(t)] =
            make_or({make_and(std::move(start)), std::move(busy)});
    }
    img.bn.validate();
    return img;
}

IntervalBn interval_encode(const BooleanNetwork& f) {
    f.validate();
    int n = f.dim();
    if (2 * n > kMaxDim)
        throw InputError("doubled dimension " + std::to_string(2 * n) +
                         " exceeds the cap (" + std::to_string(kMaxDim) + ")");
    IntervalBn e;
    e.n = n;
    e.bn.names.resize(2 * n);
    e.bn.functions.resize(2 * n);
    std::vector<ExprPtr> reads(n);
    for (int j = 0; j < n; ++j) reads[j] = make_var(2 * j + 1);
    for (int i = 0; i < n; ++i) {
        e.bn.names[2 * i] = f.names[i] + "_w";
        e.bn.names[2 * i + 1] = f.names[i] + "_r";
        ExprPtr w = make_var(2 * i);
        ExprPtr r = make_var(2 * i + 1);
        ExprPtr fg = substitute(f.functions[i], reads);
        // Next write value: the function over the observed configuration,
        // latched while an update is in flight (write != read).
        e.bn.functions[2 * i] =
            make_or({make_and({fg, make_or({make_not(r), w})}),
                     make_and({make_not(r), w})});
        e.bn.functions[2 * i + 1] = w;
    }
    e.bn.validate();
    return e;
}

Config IntervalBn::gamma(const Config& z) const {
    if (z.n != 2 * n) throw InputError("configuration dimension mismatch");
    Config x(0, n);
    for (int i = 0; i < n; ++i) x.set(i, z.get(read_index(i)));
    return x;
}

Config IntervalBn::alpha(const Config& x) const {
    if (x.n != n) throw InputError("configuration dimension mismatch");
    Config z(0, 2 * n);
    for (int i = 0; i < n; ++i) {
        z.set(write_index(i), x.get(i));
        z.set(read_index(i), x.get(i));
    }
    return z;
}

bool IntervalBn::consistent(const Config& z) const {
    return alpha(gamma(z)) == z;
}

MpBn mp_encode(const BooleanNetwork& f) {
    f.validate();
    int n = f.dim();
    if (3 * n > kMaxDim)
        throw InputError("tripled dimension " + std::to_string(3 * n) +
                         " exceeds the cap (" + std::to_string(kMaxDim) + ")");
    MpBn e;
    e.n = n;
    e.bn.names.resize(3 * n);
    e.bn.functions.resize(3 * n);
    std::vector<ExprPtr> tilde(n);
    for (int j = 0; j < n; ++j) {
        ExprPtr w = make_var(2 * j);
        ExprPtr r = make_var(2 * j + 1);
        ExprPtr c = make_var(2 * n + j);
        // Reading component j during its update: the coin decides whether
        // the old (read) or new (write) value is seen.
        tilde[j] = make_and({make_or({c, r}), make_or({make_not(c), w})});
    }
    for (int i = 0; i < n; ++i) {
        e.bn.names[2 * i] = f.names[i] + "_w";
        e.bn.names[2 * i + 1] = f.names[i] + "_r";
        e.bn.names[2 * n + i] = "coin_" + f.names[i];
        e.bn.functions[2 * i] = substitute(f.functions[i], tilde);
        e.bn.functions[2 * i + 1] = make_var(2 * i);
        e.bn.functions[2 * n + i] = make_not(make_var(2 * n + i));
    }
    e.bn.validate();
    return e;
}

bool mp_encode_reachable(const MpBn& e, const Config& x, const Config& y,
                         const ExploreBudget& budget) {
    if (x.n != e.n || y.n != e.n)
        throw InputError("configuration dimension mismatch");
    Config z0(0, 3 * e.n);
    for (int i = 0; i < e.n; ++i) {
        z0.set(e.write_index(i), x.get(i));
        z0.set(e.read_index(i), x.get(i));
    }
    auto succ = [&](const Config& z) {
        std::vector<std::pair<int, Config>> out;
        for (const Config& s : async_successors(e.bn, z)) out.emplace_back(0, s);
        return out;
    };
    auto goal = [&](const Config& z) {
        for (int i = 0; i < e.n; ++i)
            if (z.get(e.write_index(i)) != y.get(i) ||
                z.get(e.read_index(i)) != y.get(i))
                return false;
        return true;
    };
    return !shortest_path<Config, ConfigHash>({z0}, succ, goal, budget).empty();
}

} // namespace bnconcur
