#pragma once

#include <cstdint>
#include <vector>

#include "bnconcur/expr.hpp"

namespace bnconcur {

/// Conjunctive clause as positive/negative literal masks; pos & neg == 0.
/// The clause with no literals is the constant 1.
struct Clause {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;

    bool matches(const Config& x) const {
        return (x.bits & pos) == pos && (x.bits & neg) == 0;
    }
    /// True when this clause's literal set is a subset of o's, i.e. this
    /// clause covers every assignment o covers.
    bool subsumes(const Clause& o) const {
        return (pos & ~o.pos) == 0 && (neg & ~o.neg) == 0;
    }
    bool operator==(const Clause& o) const { return pos == o.pos && neg == o.neg; }
};

/// Order by sorted literal lists: literals keyed (variable, sign) with
/// negative before positive, lists compared lexicographically.
bool clause_less(const Clause& a, const Clause& b);

/// Disjunction of clauses, kept sorted by clause_less.
struct Dnf {
    std::vector<Clause> clauses;

    bool eval(const Config& x) const {
        for (const Clause& c : clauses)
            if (c.matches(x)) return true;
        return false;
    }
};

/// All prime implicants of e (Blake canonical form), computed by iterated
/// consensus over the minterms of e restricted to its syntactic support.
/// The constant 0 yields no clauses; a tautology yields the empty clause.
/// Throws InputError when n exceeds the dimension cap.
Dnf to_min_dnf(const ExprPtr& e, int n);

/// Rebuilds an expression tree (OR of ANDs of literals) from a DNF.
ExprPtr dnf_to_expr(const Dnf& d);

} // namespace bnconcur
