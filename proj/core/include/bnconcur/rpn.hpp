#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "bnconcur/explore.hpp"

namespace bnconcur {

/// Widest supported place set; split() doubles place counts, so nets are
/// capped at kMaxPlaces places.
constexpr int kMaxPlaces = 128;

/// A marking (or any place set) as a 128-bit mask over place indices.
struct Marking {
    std::array<std::uint64_t, 2> w{0, 0};

    static Marking of(std::initializer_list<int> places) {
        Marking m;
        for (int p : places) m.set(p);
        return m;
    }

    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool empty() const { return !(w[0] | w[1]); }
    int count() const;
    std::vector<int> bits() const;

    bool contains(const Marking& sub) const {
        return (sub.w[0] & ~w[0]) == 0 && (sub.w[1] & ~w[1]) == 0;
    }
    bool intersects(const Marking& o) const {
        return (w[0] & o.w[0]) | (w[1] & o.w[1]);
    }
    Marking operator|(const Marking& o) const {
        return Marking{{w[0] | o.w[0], w[1] | o.w[1]}};
    }
    Marking operator&(const Marking& o) const {
        return Marking{{w[0] & o.w[0], w[1] & o.w[1]}};
    }
    /// Set difference.
    Marking operator-(const Marking& o) const {
        return Marking{{w[0] & ~o.w[0], w[1] & ~o.w[1]}};
    }
    bool operator==(const Marking& o) const { return w == o.w; }
    bool operator!=(const Marking& o) const { return w != o.w; }
    bool operator<(const Marking& o) const {
        // Lowest place index most significant, so order follows the
        // sorted-place-set rendering.
        if (w[0] != o.w[0]) {
            std::uint64_t d = w[0] ^ o.w[0];
            std::uint64_t low = d & ~(d - 1);
            return (o.w[0] & low) != 0;
        }
        std::uint64_t d = w[1] ^ o.w[1];
        if (!d) return false;
        std::uint64_t low = d & ~(d - 1);
        return (o.w[1] & low) != 0;
    }
};

struct MarkingHash {
    std::size_t operator()(const Marking& m) const {
        return std::hash<std::uint64_t>()(m.w[0] * 0x9e3779b97f4a7c15ull ^ m.w[1]);
    }
};

struct RpnPlace {
    std::string id;
    std::string name;
};

struct RpnTransition {
    std::string id;
    std::string name;
    Marking pre, cont, post;
};

/// A safe Read Petri net. Structure is validated at construction time;
/// safety is a dynamic property asserted by every firing.
struct ReadPetriNet {
    std::vector<RpnPlace> places;
    std::vector<RpnTransition> transitions;
    Marking initial;

    int num_places() const { return static_cast<int>(places.size()); }
    int num_transitions() const { return static_cast<int>(transitions.size()); }
    int place_index(const std::string& id) const;      // -1 when absent
    int transition_index(const std::string& id) const; // -1 when absent

    /// Nonempty presets, contexts disjoint from presets and postsets,
    /// distinct ids, place cap.
    void validate() const;
    bool loop_free() const;

    /// "{p, q}" with place names sorted.
    std::string marking_str(const Marking& m) const;
    Marking marking_from_ids(const std::vector<std::string>& ids) const;
};

// ---- atomic semantics ----

bool atomic_enabled(const ReadPetriNet& n, const Marking& m, int t);
std::vector<int> atomic_enabled(const ReadPetriNet& n, const Marking& m);
/// Fires t; throws InputError when not enabled and SafetyError when the
/// firing would double-mark a place.
Marking atomic_fire(const ReadPetriNet& n, const Marking& m, int t);

// ---- step semantics ----

struct StepLimits {
    /// Valid steps larger than this abort with BudgetError rather than
    /// being silently dropped.
    int max_step = 16;
};

/// All nonempty steps fireable from m (every member enabled, presets
/// pairwise disjoint) with their combined-update markings. With
/// maximal_only, only steps no enabled transition can extend.
std::vector<std::pair<std::vector<int>, Marking>>
step_successors(const ReadPetriNet& n, const Marking& m, bool maximal_only,
                const StepLimits& limits = {});

/// Fires a set of transitions as one step, with the same safety assertion
/// as atomic firing applied to the combined update.
Marking step_fire(const ReadPetriNet& n, const Marking& m,
                  const std::vector<int>& step);

// ---- marking graphs ----

enum class NetSemantics { Atomic, Step, MaxStep, Interval };
NetSemantics parse_net_semantics(const std::string& s);

/// Labels are sorted transition-index sets; singletons under atomic.
using MarkingGraph = StateGraph<Marking, std::vector<int>>;

/// Atomic, step or maximal-step graph over n's own markings. Interval
/// semantics lives on the split net; use interval_marking_graph.
MarkingGraph marking_graph(const ReadPetriNet& n, const Marking& from,
                           NetSemantics sem, const ExploreBudget& budget = {},
                           const StepLimits& limits = {});

// ---- split / interval semantics ----

/// split(N): place copies p.c (index 2p) and p.r (2p+1) plus one lock
/// place per transition (2|P|+t); transitions t.minus (2t) and t.plus
/// (2t+1). The initial marking embeds N's.
struct SplitNet {
    ReadPetriNet net;
    int orig_places = 0;
    int orig_transitions = 0;

    int pc(int p) const { return 2 * p; }
    int pr(int p) const { return 2 * p + 1; }
    int lock(int t) const { return 2 * orig_places + t; }
    int tminus(int t) const { return 2 * t; }
    int tplus(int t) const { return 2 * t + 1; }

    /// {p.c, p.r | p in m}, the complete marking embedding m.
    Marking embed(const Marking& m) const;
    /// No lock place marked.
    bool is_complete(const Marking& m) const;
    /// Inverse of embed on complete markings; throws on c/r disagreement.
    Marking project(const Marking& m) const;
};

SplitNet split(const ReadPetriNet& n);

/// Atomic successors within the split net. Asserts the lock invariant on
/// m: every pending transition's read places are still marked.
std::vector<std::pair<int, Marking>> i_run_successors(const SplitNet& s,
                                                      const Marking& m);

/// Marking graph of the split net from an arbitrary split marking, with
/// singleton labels over the split net's transitions.
MarkingGraph interval_marking_graph(const SplitNet& s, const Marking& from,
                                    const ExploreBudget& budget = {});

/// True iff embed(m2) is atomically reachable from embed(m1) in split(n).
bool interval_reachable(const ReadPetriNet& n, const Marking& m1,
                        const Marking& m2, const ExploreBudget& budget = {});

// ---- runs ----

struct Run {
    enum class Kind { Atomic, Step, Interval };
    Kind kind = Kind::Atomic;
    /// Transition indices; singleton groups except for step runs.
    std::vector<std::vector<int>> steps;
    /// One marking per position, markings.front() = start.
    std::vector<Marking> markings;
};

Run replay_atomic(const ReadPetriNet& n, const Marking& from,
                  const std::vector<int>& seq);
Run replay_steps(const ReadPetriNet& n, const Marking& from,
                 const std::vector<std::vector<int>>& steps);

/// True iff seq (over split(n)'s transitions) factors as
/// u1- u1+ ... uk- uk+ where ui-/ui+ permute the minus/plus phases of the
/// steps of some s-run (T1...Tk) of n.
bool spm_runs_check(const ReadPetriNet& n, const std::vector<int>& seq);

/// Appends the plus phase of every unmatched minus, in first-pending
/// order, yielding a complete i-run ending in a complete marking.
Run complete_run(const SplitNet& s, const Run& irun);

/// eliminate_loops: each p in pre(t) & post(t) moves to cont(t). Errors
/// when that would empty a preset or collide with an existing context arc.
ReadPetriNet eliminate_loops(const ReadPetriNet& n);

} // namespace bnconcur
