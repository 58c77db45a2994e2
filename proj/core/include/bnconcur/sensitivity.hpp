#pragma once

#include <string>
#include <vector>

#include "bnconcur/encodings.hpp"
#include "bnconcur/rpn.hpp"

namespace bnconcur {

/// t1 preempts t2 when firing t1 consumes a place t2 needs to read.
struct PreemptionEdge {
    int from = 0;
    int to = 0;
    bool operator==(const PreemptionEdge& o) const {
        return from == o.from && to == o.to;
    }
    bool operator<(const PreemptionEdge& o) const {
        return from != o.from ? from < o.from : to < o.to;
    }
};

struct PreemptionGraph {
    std::vector<int> step;              // node set, sorted
    std::vector<PreemptionEdge> edges;  // sorted
    bool has(int from, int to) const;
};

PreemptionGraph preemption_graph(const ReadPetriNet& n,
                                 const std::vector<int>& step);

/// Shortest preemption cycle within the graph, as the node sequence
/// t1 ... tk with tk preempting t1; empty when the graph is acyclic.
/// Deterministic: smallest length, then lexicographic, rotated to start
/// at the smallest member.
std::vector<int> find_preemption_cycle(const PreemptionGraph& g);

/// A cyclic arrangement of the whole step, when one exists.
std::vector<int> find_full_preemption_cycle(const PreemptionGraph& g);

/// How "not sequentializable" is read: MatchResult requires a permutation
/// of the step to fire atomically and land on the step's result marking;
/// AnyFiring only requires the permutation to fire.
enum class SeqReading { MatchResult, AnyFiring };

struct NormalPair {
    std::vector<int> step;
    Marking marking;
    /// Failed sequentialization attempts: the fired prefix, then either
    /// the index where no member could fire (blocked_after = prefix size)
    /// or a complete firing that missed the step's result.
    struct TraceEntry {
        std::vector<int> prefix;
        bool wrong_final = false;
    };
    std::vector<TraceEntry> trace;
};

struct SensitivityLimits {
    /// Permutation search cap; steps larger than this raise BudgetError.
    int max_step = 6;
    SeqReading reading = SeqReading::MatchResult;
};

/// True iff S fires as a step from M (else InputError) and no permutation
/// of S fires atomically from M under the chosen reading. Fills *out with
/// the witness evidence when given.
bool is_normal(const ReadPetriNet& n, const std::vector<int>& S,
               const Marking& M, NormalPair* out = nullptr,
               const SensitivityLimits& limits = {});

struct NormalScan {
    std::vector<NormalPair> pairs;
    /// False when a budget stopped the scan early; the pairs found so far
    /// are still returned.
    bool complete = true;
};

/// Scans markings reachable from `from` (under step semantics by default,
/// so step-only markings are covered) and tests every fireable step of
/// size >= 2.
NormalScan find_normal_pairs(const ReadPetriNet& n, const Marking& from,
                             const ExploreBudget& budget = {},
                             const SensitivityLimits& limits = {},
                             NetSemantics scan_semantics = NetSemantics::Step);

/// Arc classification around a preemption cycle of a network-image net.
/// Each arc takes the value digits of its endpoints' presets: up->down is
/// "01", down->up "10", up->up "00", down->down "11". The first two mark
/// positive influences, the last two negative ones.
struct ArcClass {
    std::vector<std::string> types;
    int count01 = 0;
    int count10 = 0;
    bool positive = true; // sign product
};

ArcClass classify_arcs(const BnRpnImage& image, const std::vector<int>& cycle);

} // namespace bnconcur
