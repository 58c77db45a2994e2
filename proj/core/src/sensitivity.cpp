#include "bnconcur/sensitivity.hpp"

#include <algorithm>
#include <unordered_set>

#include "bnconcur/errors.hpp"

namespace bnconcur {

bool PreemptionGraph::has(int from, int to) const {
    return std::binary_search(edges.begin(), edges.end(),
                              PreemptionEdge{from, to});
}

PreemptionGraph preemption_graph(const ReadPetriNet& n,
                                 const std::vector<int>& step) {
    PreemptionGraph g;
    g.step = step;
    std::sort(g.step.begin(), g.step.end());
    g.step.erase(std::unique(g.step.begin(), g.step.end()), g.step.end());
    for (int t1 : g.step) {
        for (int t2 : g.step) {
            if (t1 == t2) continue;
            if (n.transitions.at(t1).pre.intersects(n.transitions.at(t2).cont))
                g.edges.push_back(PreemptionEdge{t1, t2});
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

namespace {

/// Lexicographically first cycle of exactly the given size, rotated to
/// start at its smallest member; empty when none exists.
std::vector<int> cycle_of_size(const PreemptionGraph& g, int size) {
    int k = static_cast<int>(g.step.size());
    if (size < 2 || size > k) return {};
    std::vector<int> pick(size);
    // Enumerate combinations in lexicographic order.
    auto rec = [&](auto&& self, int pos, int next) -> std::vector<int> {
        if (pos == size) {
            std::vector<int> rest(pick.begin() + 1, pick.end());
            do {
                bool ok = g.has(pick[0], rest[0]);
                for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i)
                    ok = g.has(rest[i], rest[i + 1]);
                if (ok && g.has(rest.back(), pick[0])) {
                    std::vector<int> cycle{pick[0]};
                    cycle.insert(cycle.end(), rest.begin(), rest.end());
                    return cycle;
                }
            } while (std::next_permutation(rest.begin(), rest.end()));
            return {};
        }
        for (int i = next; i <= k - (size - pos); ++i) {
            pick[pos] = g.step[i];
            auto found = self(self, pos + 1, i + 1);
            if (!found.empty()) return found;
        }
        return {};
    };
    return rec(rec, 0, 0);
}

} // namespace

std::vector<int> find_preemption_cycle(const PreemptionGraph& g) {
    for (int size = 2; size <= static_cast<int>(g.step.size()); ++size) {
        auto c = cycle_of_size(g, size);
        if (!c.empty()) return c;
    }
    return {};
}

std::vector<int> find_full_preemption_cycle(const PreemptionGraph& g) {
    return cycle_of_size(g, static_cast<int>(g.step.size()));
}

bool is_normal(const ReadPetriNet& n, const std::vector<int>& S,
               const Marking& M, NormalPair* out,
               const SensitivityLimits& limits) {
    if (static_cast<int>(S.size()) > limits.max_step)
        throw BudgetError("step of size " + std::to_string(S.size()) +
                          " exceeds the permutation-search cap (" +
                          std::to_string(limits.max_step) + ")");
    Marking result = step_fire(n, M, S); // rejects steps that are not s-enabled

    NormalPair ev;
    ev.step = S;
    std::sort(ev.step.begin(), ev.step.end());
    ev.marking = M;
    constexpr std::size_t kTraceCap = 128;

    bool sequentialized = false;
    std::vector<int> prefix;
    auto rec = [&](auto&& self, const Marking& cur,
                   const std::vector<int>& remaining) -> void {
        if (remaining.empty()) {
            if (limits.reading == SeqReading::AnyFiring || cur == result)
                sequentialized = true;
            else if (ev.trace.size() < kTraceCap)
                ev.trace.push_back({prefix, true});
            return;
        }
        bool any = false;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            int t = remaining[i];
            if (!atomic_enabled(n, cur, t)) continue;
            Marking next;
            try {
                next = atomic_fire(n, cur, t);
            } catch (const SafetyError&) {
                continue; // such a firing is not legal in a safe net
            }
            any = true;
            std::vector<int> rest = remaining;
            rest.erase(rest.begin() + i);
            prefix.push_back(t);
            self(self, next, rest);
            prefix.pop_back();
            if (sequentialized) return;
        }
        if (!any && ev.trace.size() < kTraceCap)
            ev.trace.push_back({prefix, false});
    };
    rec(rec, M, ev.step);
    if (out) *out = std::move(ev);
    return !sequentialized;
}

NormalScan find_normal_pairs(const ReadPetriNet& n, const Marking& from,
                             const ExploreBudget& budget,
                             const SensitivityLimits& limits,
                             NetSemantics scan_semantics) {
    if (scan_semantics == NetSemantics::Interval)
        throw InputError("scanning under interval semantics is not supported");
    NormalScan out;
    StepLimits enum_limits; // enumeration bound, wider than the search cap
    std::unordered_set<Marking, MarkingHash> seen{from};
    std::vector<Marking> frontier{from};
    bool stop = false;

    while (!frontier.empty() && !stop) {
        std::vector<Marking> layer;
        layer.swap(frontier);
        for (const Marking& m : layer) {
            if (stop) break;
            std::vector<std::pair<std::vector<int>, Marking>> steps;
            try {
                steps = step_successors(n, m, false, enum_limits);
            } catch (const BudgetError&) {
                out.complete = false;
                continue;
            }
            for (const auto& [S, next] : steps) {
                if (S.size() < 2) continue;
                NormalPair ev;
                try {
                    if (is_normal(n, S, m, &ev, limits))
                        out.pairs.push_back(std::move(ev));
                } catch (const BudgetError&) {
                    out.complete = false;
                }
            }
            for (const auto& [S, next] : steps) {
                if (scan_semantics == NetSemantics::Atomic && S.size() != 1)
                    continue;
                if (scan_semantics == NetSemantics::MaxStep) break;
                if (seen.insert(next).second) {
                    if (seen.size() > budget.max_states) {
                        out.complete = false;
                        stop = true;
                        break;
                    }
                    frontier.push_back(next);
                }
            }
            if (scan_semantics == NetSemantics::MaxStep && !stop) {
                for (const auto& [S, next] :
                     step_successors(n, m, true, enum_limits)) {
                    if (seen.insert(next).second) {
                        if (seen.size() > budget.max_states) {
                            out.complete = false;
                            stop = true;
                            break;
                        }
                        frontier.push_back(next);
                    }
                }
            }
        }
    }
    return out;
}

ArcClass classify_arcs(const BnRpnImage& image, const std::vector<int>& cycle) {
    if (cycle.size() < 2)
        throw InputError("a preemption cycle needs at least two transitions");
    int nt = image.net.num_transitions();
    for (int t : cycle)
        if (t < 0 || t >= nt)
            throw InputError("transition index " + std::to_string(t) +
                             " out of range");
    ArcClass out;
    int negatives = 0;
    for (std::size_t a = 0; a < cycle.size(); ++a) {
        int t = cycle[a];
        int u = cycle[(a + 1) % cycle.size()];
        const RpnTransition& tt = image.net.transitions[t];
        const RpnTransition& tu = image.net.transitions[u];
        if (!tt.pre.intersects(tu.cont))
            throw InputError("no preemption edge from '" + tt.id + "' to '" +
                             tu.id + "'");
        // An up transition consumes the value-0 place, a down transition
        // the value-1 place; the arc type pairs those digits.
        char dt = image.tags[t].up ? '0' : '1';
        char du = image.tags[u].up ? '0' : '1';
        std::string type{dt, du};
        if (type == "01") ++out.count01;
        else if (type == "10") ++out.count10;
        else ++negatives;
        out.types.push_back(std::move(type));
    }
    out.positive = negatives % 2 == 0;
    return out;
}

} // namespace bnconcur
