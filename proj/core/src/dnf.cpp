#include "bnconcur/dnf.hpp"

#include <algorithm>
#include <bit>

namespace bnconcur {

bool clause_less(const Clause& a, const Clause& b) {
    std::uint32_t va = a.pos | a.neg, vb = b.pos | b.neg;
    while (va || vb) {
        if (!va) return true;   // a ran out of literals first
        if (!vb) return false;
        int i = std::countr_zero(va), j = std::countr_zero(vb);
        if (i != j) return i < j;
        bool pa = (a.pos >> i) & 1u, pb = (b.pos >> j) & 1u;
        if (pa != pb) return !pa; // negative literal sorts first
        va &= va - 1;
        vb &= vb - 1;
    }
    return false;
}

namespace {

void absorb(std::vector<Clause>& cs) {
    std::vector<Clause> kept;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < cs.size() && !redundant; ++j) {
            if (i == j) continue;
            if (cs[j].subsumes(cs[i]) && !(cs[i] == cs[j] && j > i))
                redundant = true;
        }
        if (!redundant) kept.push_back(cs[i]);
    }
    cs = std::move(kept);
}

} // namespace

Dnf to_min_dnf(const ExprPtr& e, int n) {
    if (n < 0 || n > kMaxDim)
        throw InputError("dimension cap exceeded: n=" + std::to_string(n));
    std::uint32_t sup = support(*e);
    if (n < 32 && (sup >> n) != 0)
        throw InputError("expression mentions a variable outside dimension " +
                         std::to_string(n));

    std::vector<int> vars;
    for (int i = 0; i < n; ++i)
        if ((sup >> i) & 1u) vars.push_back(i);

    // Seed with minterms over the support. Assignments outside the support
    // are irrelevant to e, so prime implicants never mention them.
    std::vector<Clause> cs;
    Config x(0, n);
    for (std::uint32_t m = 0; m < (1u << vars.size()); ++m) {
        Clause c;
        x.bits = 0;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            if ((m >> k) & 1u) {
                c.pos |= 1u << vars[k];
                x.set(vars[k], true);
            } else {
                c.neg |= 1u << vars[k];
            }
        }
        if (eval(*e, x)) cs.push_back(c);
    }

    // Iterated consensus to the Blake canonical form: add every consensus
    // term of a pair clashing in exactly one variable, drop subsumed
    // clauses, repeat until closure.
    bool grew = true;
    while (grew) {
        grew = false;
        absorb(cs);
        std::size_t sz = cs.size();
        for (std::size_t i = 0; i < sz; ++i) {
            for (std::size_t j = i + 1; j < sz; ++j) {
                std::uint32_t clash = (cs[i].pos & cs[j].neg) | (cs[j].pos & cs[i].neg);
                if (std::popcount(clash) != 1) continue;
                Clause r;
                r.pos = (cs[i].pos | cs[j].pos) & ~clash;
                r.neg = (cs[i].neg | cs[j].neg) & ~clash;
                if (r.pos & r.neg) continue; // inconsistent consensus
                bool covered = false;
                for (const Clause& c : cs)
                    if (c.subsumes(r)) { covered = true; break; }
                if (!covered) {
                    cs.push_back(r);
                    grew = true;
                }
            }
        }
    }
    absorb(cs);
    std::sort(cs.begin(), cs.end(), clause_less);
    return Dnf{std::move(cs)};
}

ExprPtr dnf_to_expr(const Dnf& d) {
    std::vector<ExprPtr> terms;
    for (const Clause& c : d.clauses) {
        std::vector<ExprPtr> lits;
        std::uint32_t v = c.pos | c.neg;
        while (v) {
            int i = std::countr_zero(v);
            lits.push_back((c.pos >> i) & 1u ? make_var(i) : make_not(make_var(i)));
            v &= v - 1;
        }
        terms.push_back(make_and(std::move(lits)));
    }
    return make_or(std::move(terms));
}

} // namespace bnconcur
