#include "bnconcur/influence.hpp"

#include <algorithm>
#include <set>

namespace bnconcur {

std::vector<SignedEdge> InfluenceGraph::edges() const {
    std::vector<SignedEdge> out;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if ((minus[j] >> i) & 1u) out.push_back({j, i, false});
            if ((plus[j] >> i) & 1u) out.push_back({j, i, true});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

InfluenceGraph influence_graph(const BooleanNetwork& f) {
    f.validate();
    int n = f.dim();
    InfluenceGraph g;
    g.n = n;
    g.plus.assign(n, 0);
    g.minus.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        std::uint32_t sup = support(*f.functions[i]);
        std::vector<int> vars;
        for (int j = 0; j < n; ++j)
            if ((sup >> j) & 1u) vars.push_back(j);
        for (int j : vars) {
            // Enumerate assignments of the remaining support; coordinates
            // outside the support cannot change f_i.
            std::vector<int> rest;
            for (int v : vars)
                if (v != j) rest.push_back(v);
            for (std::uint32_t a = 0; a < (1u << rest.size()); ++a) {
                Config x(0, n);
                for (std::size_t k = 0; k < rest.size(); ++k)
                    if ((a >> k) & 1u) x.set(rest[k], true);
                Config y = x.with(j, true);
                bool lo = eval(f.functions[i], x), hi = eval(f.functions[i], y);
                if (lo < hi) g.plus[j] |= 1u << i;
                if (lo > hi) g.minus[j] |= 1u << i;
            }
        }
    }
    return g;
}

namespace {

// Johnson's elementary-circuit enumeration adapted to a signed multigraph:
// parallel edges of opposite sign yield distinct circuits. Circuits are
// rooted at their smallest vertex, so each comes out exactly once.
class CircuitFinder {
  public:
    CircuitFinder(const InfluenceGraph& g, std::size_t max_cycles)
        : g_(g), max_(max_cycles) {}

    std::vector<Cycle> run() {
        for (root_ = 0; root_ < g_.n; ++root_) {
            blocked_.assign(g_.n, false);
            blist_.assign(g_.n, {});
            circuit(root_);
        }
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

  private:
    bool circuit(int v) {
        bool found = false;
        blocked_[v] = true;
        for (int w = root_; w < g_.n; ++w) {
            for (int sign = 0; sign < 2; ++sign) {
                if (!g_.has(v, w, sign == 1)) continue;
                if (w == root_) {
                    Cycle c;
                    c.edges = stack_;
                    c.edges.push_back({v, w, sign == 1});
                    out_.push_back(std::move(c));
                    if (out_.size() > max_)
                        throw BudgetError("cycle budget exceeded (" +
                                          std::to_string(max_) + " cycles)");
                    found = true;
                } else if (!blocked_[w]) {
                    stack_.push_back({v, w, sign == 1});
                    if (circuit(w)) found = true;
                    stack_.pop_back();
                }
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (int w = root_; w < g_.n; ++w)
                if ((g_.has(v, w, true) || g_.has(v, w, false)) && w != root_)
                    blist_[w].insert(v);
        }
        return found;
    }

    void unblock(int v) {
        blocked_[v] = false;
        auto deps = blist_[v];
        blist_[v].clear();
        for (int u : deps)
            if (blocked_[u]) unblock(u);
    }

    const InfluenceGraph& g_;
    std::size_t max_;
    int root_ = 0;
    std::vector<bool> blocked_;
    std::vector<std::set<int>> blist_;
    std::vector<SignedEdge> stack_;
    std::vector<Cycle> out_;
};

} // namespace

std::vector<Cycle> enumerate_cycles(const InfluenceGraph& g, std::size_t max_cycles) {
    return CircuitFinder(g, max_cycles).run();
}

std::vector<Cycle> nope_cycles(const InfluenceGraph& g, std::size_t max_cycles) {
    std::vector<Cycle> out;
    for (Cycle& c : enumerate_cycles(g, max_cycles)) {
        bool even = c.length() % 2 == 0;
        if (c.positive() == even) out.push_back(std::move(c));
    }
    return out;
}

std::vector<Cycle> critical_cycles(const BooleanNetwork& f, const Config& x,
                                   std::size_t max_cycles) {
    if (x.n != f.dim()) throw InputError("configuration dimension mismatch");
    InfluenceGraph g = influence_graph(f);
    if (!g.locally_monotonic())
        throw InputError("critical cycles require a locally monotonic network "
                         "(some influence is both positive and negative)");
    // Keep only edges frustrated in x, then every cycle of the remaining
    // graph is critical.
    InfluenceGraph fr;
    fr.n = g.n;
    fr.plus.assign(g.n, 0);
    fr.minus.assign(g.n, 0);
    for (int j = 0; j < g.n; ++j) {
        for (int i = 0; i < g.n; ++i) {
            if (g.has(j, i, true) && x.get(i) != x.get(j)) fr.plus[j] |= 1u << i;
            if (g.has(j, i, false) && x.get(i) == x.get(j)) fr.minus[j] |= 1u << i;
        }
    }
    return enumerate_cycles(fr, max_cycles);
}

std::string influence_dot(const InfluenceGraph& g,
                          const std::vector<std::string>& names) {
    std::string out = "digraph influence {\n";
    for (int i = 0; i < g.n; ++i)
        out += "  \"" + names[i] + "\";\n";
    for (const SignedEdge& e : g.edges()) {
        out += "  \"" + names[e.from] + "\" -> \"" + names[e.to] + "\"";
        out += e.positive ? ";\n" : " [style=dashed, label=\"-\"];\n";
    }
    out += "}\n";
    return out;
}

} // namespace bnconcur
