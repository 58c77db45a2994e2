#include "bnconcur/rpn.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_set>

#include "bnconcur/errors.hpp"

namespace bnconcur {

int Marking::count() const {
    return std::popcount(w[0]) + std::popcount(w[1]);
}

std::vector<int> Marking::bits() const {
    std::vector<int> out;
    for (int half = 0; half < 2; ++half) {
        std::uint64_t v = w[half];
        while (v) {
            out.push_back(64 * half + std::countr_zero(v));
            v &= v - 1;
        }
    }
    return out;
}

int ReadPetriNet::place_index(const std::string& id) const {
    for (int i = 0; i < num_places(); ++i)
        if (places[i].id == id) return i;
    return -1;
}

int ReadPetriNet::transition_index(const std::string& id) const {
    for (int i = 0; i < num_transitions(); ++i)
        if (transitions[i].id == id) return i;
    return -1;
}

namespace {

Marking valid_mask(int np) {
    Marking m;
    for (int i = 0; i < np; ++i) m.set(i);
    return m;
}

void check_index(const ReadPetriNet& n, int t) {
    if (t < 0 || t >= n.num_transitions())
        throw InputError("transition index " + std::to_string(t) + " out of range");
}

} // namespace

void ReadPetriNet::validate() const {
    if (num_places() > kMaxPlaces)
        throw InputError("net has " + std::to_string(num_places()) +
                         " places; at most " + std::to_string(kMaxPlaces) +
                         " are supported");
    std::unordered_set<std::string> seen;
    for (const auto& p : places) {
        if (p.id.empty()) throw InputError("empty place id");
        if (!seen.insert(p.id).second)
            throw InputError("duplicate place id '" + p.id + "'");
    }
    seen.clear();
    Marking ok = valid_mask(num_places());
    if (!(initial - ok).empty())
        throw InputError("initial marking uses undefined places");
    for (const auto& t : transitions) {
        if (t.id.empty()) throw InputError("empty transition id");
        if (!seen.insert(t.id).second)
            throw InputError("duplicate transition id '" + t.id + "'");
        if (t.pre.empty())
            throw InputError("transition '" + t.id + "' has an empty preset");
        if (!(t.pre - ok).empty() || !(t.cont - ok).empty() || !(t.post - ok).empty())
            throw InputError("transition '" + t.id + "' uses undefined places");
        if (t.cont.intersects(t.pre) || t.cont.intersects(t.post))
            throw InputError("transition '" + t.id +
                             "' reads a place it also consumes or produces");
    }
}

bool ReadPetriNet::loop_free() const {
    for (const auto& t : transitions)
        if (t.pre.intersects(t.post)) return false;
    return true;
}

std::string ReadPetriNet::marking_str(const Marking& m) const {
    std::vector<std::string> names;
    for (int p : m.bits())
        names.push_back(p < num_places() ? places[p].name
                                         : "?" + std::to_string(p));
    std::sort(names.begin(), names.end());
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    return out + "}";
}

Marking ReadPetriNet::marking_from_ids(const std::vector<std::string>& ids) const {
    Marking m;
    for (const auto& id : ids) {
        int p = place_index(id);
        if (p < 0) throw InputError("unknown place id '" + id + "'");
        m.set(p);
    }
    return m;
}

bool atomic_enabled(const ReadPetriNet& n, const Marking& m, int t) {
    check_index(n, t);
    const RpnTransition& tr = n.transitions[t];
    return m.contains(tr.pre) && m.contains(tr.cont);
}

std::vector<int> atomic_enabled(const ReadPetriNet& n, const Marking& m) {
    std::vector<int> out;
    for (int t = 0; t < n.num_transitions(); ++t)
        if (atomic_enabled(n, m, t)) out.push_back(t);
    return out;
}

Marking atomic_fire(const ReadPetriNet& n, const Marking& m, int t) {
    check_index(n, t);
    const RpnTransition& tr = n.transitions[t];
    if (!atomic_enabled(n, m, t))
        throw InputError("transition '" + tr.id + "' is not enabled at " +
                         n.marking_str(m));
    Marking base = m - tr.pre;
    if (base.intersects(tr.post))
        throw SafetyError("firing '" + tr.id + "' double-marks " +
                          n.marking_str(base & tr.post));
    return base | tr.post;
}

Marking step_fire(const ReadPetriNet& n, const Marking& m,
                  const std::vector<int>& step) {
    if (step.empty()) throw InputError("empty step");
    Marking pre, post;
    for (int t : step) {
        check_index(n, t);
        const RpnTransition& tr = n.transitions[t];
        if (!atomic_enabled(n, m, t))
            throw InputError("transition '" + tr.id + "' is not enabled at " +
                             n.marking_str(m));
        if (pre.intersects(tr.pre))
            throw InputError("step presets overlap at " +
                             n.marking_str(pre & tr.pre));
        if (post.intersects(tr.post))
            throw SafetyError("step double-marks " + n.marking_str(post & tr.post));
        pre = pre | tr.pre;
        post = post | tr.post;
    }
    Marking base = m - pre;
    if (base.intersects(post))
        throw SafetyError("step double-marks " + n.marking_str(base & post));
    return base | post;
}

std::vector<std::pair<std::vector<int>, Marking>>
step_successors(const ReadPetriNet& n, const Marking& m, bool maximal_only,
                const StepLimits& limits) {
    std::vector<int> en = atomic_enabled(n, m);
    std::vector<std::pair<std::vector<int>, Marking>> out;
    std::vector<int> chosen;
    // DFS over enabled transitions in index order; preset-overlap pruning
    // keeps the recursion inside valid steps only.
    auto rec = [&](auto&& self, std::size_t i, Marking used) -> void {
        if (!chosen.empty()) {
            if (static_cast<int>(chosen.size()) > limits.max_step)
                throw BudgetError("a step of size " +
                                  std::to_string(chosen.size()) +
                                  " exceeds the step cap (" +
                                  std::to_string(limits.max_step) + ")");
            bool emit = true;
            if (maximal_only) {
                for (int t : en) {
                    if (std::find(chosen.begin(), chosen.end(), t) != chosen.end())
                        continue;
                    if (!n.transitions[t].pre.intersects(used)) {
                        emit = false;
                        break;
                    }
                }
            }
            if (emit) out.emplace_back(chosen, step_fire(n, m, chosen));
        }
        for (std::size_t k = i; k < en.size(); ++k) {
            int t = en[k];
            if (n.transitions[t].pre.intersects(used)) continue;
            chosen.push_back(t);
            self(self, k + 1, used | n.transitions[t].pre);
            chosen.pop_back();
        }
    };
    rec(rec, 0, Marking{});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

NetSemantics parse_net_semantics(const std::string& s) {
    if (s == "atomic") return NetSemantics::Atomic;
    if (s == "step") return NetSemantics::Step;
    if (s == "maxstep") return NetSemantics::MaxStep;
    if (s == "interval") return NetSemantics::Interval;
    throw InputError("unknown net semantics '" + s +
                     "' (expected atomic, step, maxstep or interval)");
}

MarkingGraph marking_graph(const ReadPetriNet& n, const Marking& from,
                           NetSemantics sem, const ExploreBudget& budget,
                           const StepLimits& limits) {
    if (sem == NetSemantics::Interval)
        throw InputError("interval semantics runs on the split net; "
                         "use interval_marking_graph");
    auto succ = [&](const Marking& m) {
        if (sem == NetSemantics::Atomic) {
            std::vector<std::pair<std::vector<int>, Marking>> out;
            for (int t : atomic_enabled(n, m))
                out.emplace_back(std::vector<int>{t}, atomic_fire(n, m, t));
            return out;
        }
        return step_successors(n, m, sem == NetSemantics::MaxStep, limits);
    };
    return explore<Marking, std::vector<int>, MarkingHash>({from}, succ, budget);
}

Marking SplitNet::embed(const Marking& m) const {
    Marking out;
    for (int p : m.bits()) {
        out.set(pc(p));
        out.set(pr(p));
    }
    return out;
}

bool SplitNet::is_complete(const Marking& m) const {
    for (int t = 0; t < orig_transitions; ++t)
        if (m.test(lock(t))) return false;
    return true;
}

Marking SplitNet::project(const Marking& m) const {
    if (!is_complete(m))
        throw InputError("marking is not complete: " + net.marking_str(m));
    Marking out;
    for (int p = 0; p < orig_places; ++p) {
        bool c = m.test(pc(p));
        if (c != m.test(pr(p)))
            throw InputError("copy and read places disagree at '" +
                             net.places[pc(p)].name + "'");
        if (c) out.set(p);
    }
    return out;
}

SplitNet split(const ReadPetriNet& n) {
    n.validate();
    int np = n.num_places();
    int nt = n.num_transitions();
    if (2 * np + nt > kMaxPlaces)
        throw InputError("split net would need " + std::to_string(2 * np + nt) +
                         " places; at most " + std::to_string(kMaxPlaces) +
                         " are supported");
    SplitNet s;
    s.orig_places = np;
    s.orig_transitions = nt;
    s.net.places.resize(2 * np + nt);
    for (int p = 0; p < np; ++p) {
        s.net.places[s.pc(p)] = RpnPlace{n.places[p].id + ".c", n.places[p].name + ".c"};
        s.net.places[s.pr(p)] = RpnPlace{n.places[p].id + ".r", n.places[p].name + ".r"};
    }
    for (int t = 0; t < nt; ++t)
        s.net.places[s.lock(t)] = RpnPlace{"lock." + n.transitions[t].id,
                                           "lock." + n.transitions[t].name};
    s.net.transitions.resize(2 * nt);
    for (int t = 0; t < nt; ++t) {
        const RpnTransition& tr = n.transitions[t];
        RpnTransition minus, plus;
        minus.id = tr.id + ".minus";
        minus.name = tr.name + ".minus";
        plus.id = tr.id + ".plus";
        plus.name = tr.name + ".plus";
        for (int p : tr.pre.bits()) {
            minus.pre.set(s.pc(p));
            plus.pre.set(s.pr(p));
        }
        for (int p : tr.cont.bits()) minus.cont.set(s.pr(p));
        minus.post.set(s.lock(t));
        plus.pre.set(s.lock(t));
        for (int p : tr.post.bits()) {
            plus.post.set(s.pc(p));
            plus.post.set(s.pr(p));
        }
        s.net.transitions[s.tminus(t)] = std::move(minus);
        s.net.transitions[s.tplus(t)] = std::move(plus);
    }
    s.net.initial = s.embed(n.initial);
    s.net.validate();
    return s;
}

std::vector<std::pair<int, Marking>> i_run_successors(const SplitNet& s,
                                                      const Marking& m) {
    // While a transition is pending its read copies must stay marked;
    // a violation means the net was not safe to begin with.
    for (int t = 0; t < s.orig_transitions; ++t) {
        if (!m.test(s.lock(t))) continue;
        Marking need = s.net.transitions[s.tplus(t)].pre;
        need.reset(s.lock(t));
        if (!m.contains(need))
            throw SafetyError("lock invariant violated while '" +
                              s.net.transitions[s.tminus(t)].id +
                              "' is pending at " + s.net.marking_str(m));
    }
    std::vector<std::pair<int, Marking>> out;
    for (int t : atomic_enabled(s.net, m))
        out.emplace_back(t, atomic_fire(s.net, m, t));
    return out;
}

MarkingGraph interval_marking_graph(const SplitNet& s, const Marking& from,
                                    const ExploreBudget& budget) {
    auto succ = [&](const Marking& m) {
        std::vector<std::pair<std::vector<int>, Marking>> out;
        for (auto& [t, next] : i_run_successors(s, m))
            out.emplace_back(std::vector<int>{t}, next);
        return out;
    };
    return explore<Marking, std::vector<int>, MarkingHash>({from}, succ, budget);
}

bool interval_reachable(const ReadPetriNet& n, const Marking& m1,
                        const Marking& m2, const ExploreBudget& budget) {
    SplitNet s = split(n);
    Marking target = s.embed(m2);
    auto succ = [&](const Marking& m) { return i_run_successors(s, m); };
    auto path = shortest_path<Marking, MarkingHash>(
        {s.embed(m1)}, succ, [&](const Marking& m) { return m == target; },
        budget);
    return !path.empty();
}

Run replay_atomic(const ReadPetriNet& n, const Marking& from,
                  const std::vector<int>& seq) {
    Run r;
    r.kind = Run::Kind::Atomic;
    r.markings.push_back(from);
    for (int t : seq) {
        r.markings.push_back(atomic_fire(n, r.markings.back(), t));
        r.steps.push_back({t});
    }
    return r;
}

Run replay_steps(const ReadPetriNet& n, const Marking& from,
                 const std::vector<std::vector<int>>& steps) {
    Run r;
    r.kind = Run::Kind::Step;
    r.markings.push_back(from);
    for (const auto& step : steps) {
        r.markings.push_back(step_fire(n, r.markings.back(), step));
        r.steps.push_back(step);
    }
    return r;
}

bool spm_runs_check(const ReadPetriNet& n, const std::vector<int>& seq) {
    SplitNet s = split(n);
    Marking sm = s.net.initial;
    Marking orig = n.initial;
    std::set<int> pending; // original indices whose plus is still owed
    std::vector<int> block;
    bool in_plus = false;
    try {
        for (int st : seq) {
            if (st < 0 || st >= s.net.num_transitions()) return false;
            int t = st / 2;
            if (st % 2 == 0) { // minus
                if (in_plus) return false;
                if (!pending.insert(t).second) return false;
                block.push_back(t);
            } else { // plus
                if (!pending.count(t)) return false;
                if (!in_plus) {
                    // The minus phase just closed; it must name a step of n.
                    std::sort(block.begin(), block.end());
                    orig = step_fire(n, orig, block);
                    in_plus = true;
                }
                pending.erase(t);
                if (pending.empty()) {
                    in_plus = false;
                    block.clear();
                }
            }
            sm = atomic_fire(s.net, sm, st);
        }
    } catch (const InputError&) {
        return false;
    }
    return pending.empty() && block.empty();
}

Run complete_run(const SplitNet& s, const Run& irun) {
    Run r = irun;
    r.kind = Run::Kind::Interval;
    if (r.markings.empty()) throw InputError("run has no markings");
    Marking m = r.markings.back();
    // Close pending transitions in the order they became pending, i.e. by
    // the position of each marked lock's last minus firing.
    std::map<int, int> last_minus; // original index -> position in run
    int pos = 0;
    for (const auto& st : r.steps) {
        for (int x : st)
            if (x % 2 == 0) last_minus[x / 2] = pos;
        ++pos;
    }
    std::vector<std::pair<int, int>> order; // (position, original index)
    for (int t = 0; t < s.orig_transitions; ++t) {
        if (!m.test(s.lock(t))) continue;
        auto it = last_minus.find(t);
        order.emplace_back(it == last_minus.end() ? -1 : it->second, t);
    }
    std::sort(order.begin(), order.end());
    for (auto& [p, t] : order) {
        (void)p;
        int plus = s.tplus(t);
        m = atomic_fire(s.net, m, plus);
        r.steps.push_back({plus});
        r.markings.push_back(m);
    }
    return r;
}

ReadPetriNet eliminate_loops(const ReadPetriNet& n) {
    n.validate();
    ReadPetriNet out = n;
    for (auto& t : out.transitions) {
        Marking looped = t.pre & t.post;
        if (looped.empty()) continue;
        Marking new_pre = t.pre - looped;
        if (new_pre.empty())
            throw InputError("loop elimination would empty the preset of '" +
                             t.id + "'");
        if (t.cont.intersects(looped))
            throw InputError("looped place of '" + t.id +
                             "' already appears in its context");
        t.pre = new_pre;
        t.post = t.post - looped;
        t.cont = t.cont | looped;
    }
    out.validate();
    return out;
}

} // namespace bnconcur
