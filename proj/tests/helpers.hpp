#pragma once

// Shared scaffolding for the test binaries: fixture networks, fixture file
// paths, and deterministic random generators. Everything here is seeded
// explicitly so reruns see the same instances.

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bnconcur/bn.hpp"
#include "bnconcur/rpn.hpp"

namespace testutil {

using namespace bnconcur;

inline std::string data_path(const std::string& name) {
    return std::string(BNCONCUR_TEST_DATA) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing fixture: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline BooleanNetwork ex3() {
    return parse_bn("x1 = !x2\nx2 = !x1\nx3 = !x1 & x2\n");
}

inline BooleanNetwork ex2() {
    return parse_bn("x1 = 1\nx2 = x1\nx3 = x2 & !x1\n");
}

/// Network from explicit truth tables; bit x.bits of tables[i] is f_i(x).
inline ExprPtr expr_from_table(std::uint32_t table, int n) {
    std::vector<ExprPtr> minterms;
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
        if (!((table >> a) & 1u)) continue;
        std::vector<ExprPtr> lits;
        for (int j = 0; j < n; ++j)
            lits.push_back((a >> j) & 1u ? make_var(j) : make_not(make_var(j)));
        minterms.push_back(make_and(std::move(lits)));
    }
    if (minterms.empty()) return make_const(false);
    return make_or(std::move(minterms));
}

inline BooleanNetwork bn_from_tables(const std::vector<std::uint32_t>& tables) {
    BooleanNetwork f;
    int n = static_cast<int>(tables.size());
    for (int i = 0; i < n; ++i) {
        f.names.push_back("x" + std::to_string(i + 1));
        f.functions.push_back(expr_from_table(tables[i], n));
    }
    f.validate();
    return f;
}

inline BooleanNetwork random_bn(std::mt19937& rng, int n) {
    std::vector<std::uint32_t> tables;
    std::uniform_int_distribution<std::uint32_t> word;
    for (int i = 0; i < n; ++i)
        tables.push_back(word(rng) & ((1u << (1 << n)) - 1u));
    return bn_from_tables(tables);
}

/// Random loop-free net over <= max_places/max_transitions, rejection
/// sampled until the atomic marking graph exhausts without a safety fault.
inline ReadPetriNet random_safe_rpn(std::mt19937& rng, int max_places,
                                    int max_transitions) {
    for (;;) {
        ReadPetriNet net;
        std::uniform_int_distribution<int> pcount(2, max_places);
        std::uniform_int_distribution<int> tcount(1, max_transitions);
        int P = pcount(rng), T = tcount(rng);
        for (int p = 0; p < P; ++p) {
            std::string id = "p" + std::to_string(p + 1);
            net.places.push_back({id, id});
        }
        std::uniform_int_distribution<int> coin(0, 3);
        for (int t = 0; t < T; ++t) {
            RpnTransition tr;
            std::string id = "t" + std::to_string(t + 1);
            tr.id = id;
            tr.name = id;
            for (int p = 0; p < P; ++p) {
                int roll = coin(rng);
                if (roll == 0) tr.pre.set(p);
                else if (roll == 1) tr.post.set(p);
                else if (roll == 2 && coin(rng) == 0) tr.cont.set(p);
            }
            if (tr.pre.empty()) {
                int p = static_cast<int>(rng() % P);
                tr.post = tr.post - Marking::of({p});
                tr.pre.set(p);
            }
            tr.cont = tr.cont - tr.pre - tr.post;
            net.transitions.push_back(tr);
        }
        for (int p = 0; p < P; ++p)
            if (rng() % 2) net.initial.set(p);
        net.validate();
        if (!net.loop_free()) continue;
        try {
            marking_graph(net, net.initial, NetSemantics::Atomic,
                          ExploreBudget{4096, 1});
        } catch (const SafetyError&) {
            continue;
        } catch (const BudgetError&) {
            continue;
        }
        return net;
    }
}

} // namespace testutil
