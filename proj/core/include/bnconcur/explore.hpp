#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <unordered_map>
#include <vector>

#include "bnconcur/errors.hpp"

namespace bnconcur {

/// Limits for explicit-state exploration. max_states counts distinct
/// states admitted to the visited set; exceeding it aborts the search.
struct ExploreBudget {
    std::size_t max_states = 1u << 20;
    int workers = 1;
};

template <class S, class L>
struct StateGraph {
    struct Edge {
        S src;
        L label;
        S dst;
        bool operator<(const Edge& o) const {
            if (src != o.src) return src < o.src;
            if (label != o.label) return label < o.label;
            return dst < o.dst;
        }
        bool operator==(const Edge& o) const {
            return src == o.src && label == o.label && dst == o.dst;
        }
    };
    std::vector<S> states;    // sorted, the forward-closed explored set
    std::vector<Edge> edges;  // sorted; every src lies in states

    bool has_state(const S& s) const {
        return std::binary_search(states.begin(), states.end(), s);
    }
};

/// Breadth-first closure from the sources. succ(state) returns the labeled
/// successor list; every state gets expanded exactly once, so the edge set
/// covers every transition whose source is reachable. With workers > 1 the
/// frontier is expanded in parallel; results are merged in frontier order,
/// keeping the outcome identical to the serial run.
template <class S, class L, class H, class Succ>
StateGraph<S, L> explore(const std::vector<S>& sources, Succ succ,
                         const ExploreBudget& budget = {}) {
    using Edge = typename StateGraph<S, L>::Edge;
    std::unordered_map<S, bool, H> seen;
    std::vector<S> frontier;
    std::vector<Edge> edges;
    std::vector<S> states;

    auto admit = [&](const S& s) {
        auto [it, fresh] = seen.emplace(s, true);
        if (fresh) {
            if (seen.size() > budget.max_states)
                throw BudgetError("state budget exceeded (" +
                                  std::to_string(budget.max_states) + " states)");
            states.push_back(s);
            frontier.push_back(s);
        }
    };
    for (const S& s : sources) admit(s);

    int workers = std::max(1, budget.workers);
    while (!frontier.empty()) {
        std::vector<S> layer;
        layer.swap(frontier);
        std::vector<std::vector<std::pair<L, S>>> out(layer.size());
        if (workers <= 1 || layer.size() < 2) {
            for (std::size_t i = 0; i < layer.size(); ++i) out[i] = succ(layer[i]);
        } else {
            std::size_t nt = std::min<std::size_t>(workers, layer.size());
            std::vector<std::thread> pool;
            std::exception_ptr err;
            for (std::size_t w = 0; w < nt; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (std::size_t i = w; i < layer.size(); i += nt)
                            out[i] = succ(layer[i]);
                    } catch (...) {
                        err = std::current_exception();
                    }
                });
            }
            for (auto& t : pool) t.join();
            if (err) std::rethrow_exception(err);
        }
        for (std::size_t i = 0; i < layer.size(); ++i) {
            for (auto& [label, dst] : out[i]) {
                edges.push_back(Edge{layer[i], label, dst});
                admit(dst);
            }
        }
    }

    std::sort(states.begin(), states.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return StateGraph<S, L>{std::move(states), std::move(edges)};
}

/// Shortest path from any source to the first state satisfying goal.
/// Returns the state sequence (empty when unreachable); a source that is
/// itself a goal yields a single-element path.
template <class S, class H, class Succ, class Goal>
std::vector<S> shortest_path(const std::vector<S>& sources, Succ succ, Goal goal,
                             const ExploreBudget& budget = {}) {
    std::unordered_map<S, S, H> parent;
    std::vector<S> frontier;
    auto finish = [&](S s) {
        std::vector<S> path{s};
        while (true) {
            auto it = parent.find(path.back());
            if (it == parent.end() || it->second == path.back()) break;
            path.push_back(it->second);
        }
        std::reverse(path.begin(), path.end());
        return path;
    };
    for (const S& s : sources) {
        if (parent.emplace(s, s).second) {
            if (goal(s)) return finish(s);
            frontier.push_back(s);
        }
    }
    while (!frontier.empty()) {
        std::vector<S> layer;
        layer.swap(frontier);
        for (const S& src : layer) {
            for (auto& [label, dst] : succ(src)) {
                (void)label;
                if (parent.emplace(dst, src).second) {
                    if (parent.size() > budget.max_states)
                        throw BudgetError("state budget exceeded (" +
                                          std::to_string(budget.max_states) +
                                          " states)");
                    if (goal(dst)) return finish(dst);
                    frontier.push_back(dst);
                }
            }
        }
    }
    return {};
}

} // namespace bnconcur
