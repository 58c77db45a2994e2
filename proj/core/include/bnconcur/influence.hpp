#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnconcur/bn.hpp"

namespace bnconcur {

struct SignedEdge {
    int from = 0;
    int to = 0;
    bool positive = true;

    bool operator==(const SignedEdge& o) const {
        return from == o.from && to == o.to && positive == o.positive;
    }
    bool operator<(const SignedEdge& o) const {
        if (from != o.from) return from < o.from;
        if (to != o.to) return to < o.to;
        return positive < o.positive; // negative sorts first
    }
};

/// Signed influence graph: (j,i) in plus iff raising x_j can raise f_i,
/// in minus iff raising x_j can lower f_i. Both can hold at once for
/// non-monotonic functions.
struct InfluenceGraph {
    int n = 0;
    std::vector<std::uint32_t> plus;  // plus[j] bit i <=> (j,i) positive
    std::vector<std::uint32_t> minus;

    bool has(int j, int i, bool positive) const {
        const auto& m = positive ? plus : minus;
        return (m[j] >> i) & 1u;
    }
    bool locally_monotonic() const {
        for (int j = 0; j < n; ++j)
            if (plus[j] & minus[j]) return false;
        return true;
    }
    std::vector<SignedEdge> edges() const;
};

/// Definition-level recomputation: for each target i and each variable j
/// occurring in f_i, toggle x_j across every assignment of the remaining
/// support and compare f_i.
InfluenceGraph influence_graph(const BooleanNetwork& f);

/// An elementary cycle as an ordered signed-edge sequence;
/// edges[k].to == edges[k+1].from and the last edge closes on the first.
struct Cycle {
    std::vector<SignedEdge> edges;

    int length() const { return static_cast<int>(edges.size()); }
    /// Positive iff the number of negative edges is even.
    bool positive() const {
        int neg = 0;
        for (const auto& e : edges) neg += !e.positive;
        return neg % 2 == 0;
    }
    bool operator<(const Cycle& o) const { return edges < o.edges; }
    bool operator==(const Cycle& o) const { return edges == o.edges; }
};

/// All elementary cycles of the signed multigraph (parallel +/- edges
/// enumerated separately), Johnson-style, canonically rooted at each
/// cycle's smallest vertex. Throws BudgetError past max_cycles.
std::vector<Cycle> enumerate_cycles(const InfluenceGraph& g,
                                    std::size_t max_cycles = 100000);

/// Cycles that are negative with odd length or positive with even length.
std::vector<Cycle> nope_cycles(const InfluenceGraph& g,
                               std::size_t max_cycles = 100000);

/// Cycles all of whose edges are frustrated in x: a positive edge (j,i)
/// is frustrated iff x_i != x_j, a negative one iff x_i == x_j.
/// Requires a locally monotonic network.
std::vector<Cycle> critical_cycles(const BooleanNetwork& f, const Config& x,
                                   std::size_t max_cycles = 100000);

/// DOT rendering: positive edges solid, negative dashed with a "-" label.
std::string influence_dot(const InfluenceGraph& g,
                          const std::vector<std::string>& names);

} // namespace bnconcur
