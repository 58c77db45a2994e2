#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "bnconcur/bn.hpp"
#include "bnconcur/dnf.hpp"
#include "bnconcur/encodings.hpp"
#include "bnconcur/mp.hpp"

using namespace bnconcur;

namespace {

// x1 = !xn, x_i = !x_{i-1}: dense dynamics, every state has n candidates.
BooleanNetwork negation_ring(int n) {
    std::string text;
    for (int i = 1; i <= n; ++i) {
        int prev = i == 1 ? n : i - 1;
        text += "x" + std::to_string(i) + " = !x" + std::to_string(prev) + "\n";
    }
    return parse_bn(text);
}

ExprPtr random_expr(std::mt19937& rng, int n, int depth) {
    if (depth == 0 || rng() % 4 == 0) return make_var(int(rng() % n));
    switch (rng() % 3) {
    case 0: return make_not(random_expr(rng, n, depth - 1));
    case 1:
        return make_and({random_expr(rng, n, depth - 1),
                         random_expr(rng, n, depth - 1)});
    default:
        return make_or({random_expr(rng, n, depth - 1),
                        random_expr(rng, n, depth - 1)});
    }
}

BooleanNetwork random_network(std::uint32_t seed, int n) {
    std::mt19937 rng(seed);
    BooleanNetwork f;
    f.names.reserve(n);
    for (int i = 0; i < n; ++i) {
        f.names.push_back("x" + std::to_string(i + 1));
        f.functions.push_back(random_expr(rng, n, 4));
    }
    f.validate();
    return f;
}

void BM_AsyncFullGraph(benchmark::State& state) {
    int n = int(state.range(0));
    BooleanNetwork f = negation_ring(n);
    std::vector<Config> domain = all_configs(n);
    for (auto _ : state) {
        BnGraph g = reachable(f, UpdateMode::Async, domain);
        benchmark::DoNotOptimize(g.edges.size());
    }
}
BENCHMARK(BM_AsyncFullGraph)->Arg(8)->Arg(10)->Arg(12);

// Minterm expansion of a random half-dense truth table: the consensus
// and subsumption passes see ~2^(n-1) input clauses.
ExprPtr random_table_expr(std::mt19937& rng, int n) {
    std::vector<ExprPtr> clauses;
    for (std::uint32_t row = 0; row < (1u << n); ++row) {
        if (rng() % 2) continue;
        std::vector<ExprPtr> lits;
        for (int i = 0; i < n; ++i)
            lits.push_back(row >> i & 1 ? make_var(i)
                                        : make_not(make_var(i)));
        clauses.push_back(make_and(std::move(lits)));
    }
    return clauses.empty() ? make_const(false) : make_or(std::move(clauses));
}

void BM_PrimeImplicants(benchmark::State& state) {
    int n = int(state.range(0));
    std::mt19937 rng(42);
    ExprPtr e = random_table_expr(rng, n);
    for (auto _ : state) {
        Dnf d = to_min_dnf(e, n);
        benchmark::DoNotOptimize(d.clauses.size());
    }
}
BENCHMARK(BM_PrimeImplicants)->Arg(5)->Arg(6)->Arg(7)->Arg(8);

void BM_NetImage(benchmark::State& state) {
    int n = int(state.range(0));
    BooleanNetwork f = random_network(7u, n);
    for (auto _ : state) {
        BnRpnImage img = bn_to_rpn(f);
        benchmark::DoNotOptimize(img.net.transitions.size());
    }
}
BENCHMARK(BM_NetImage)->Arg(6)->Arg(8)->Arg(10);

void BM_StepEnumeration(benchmark::State& state) {
    int n = int(state.range(0));
    BnRpnImage img = bn_to_rpn(negation_ring(n));
    Marking m0 = config_to_marking(Config(0, n));
    StepLimits lim;
    lim.max_step = n;
    for (auto _ : state) {
        auto steps = step_successors(img.net, m0, false, lim);
        benchmark::DoNotOptimize(steps.size());
    }
}
BENCHMARK(BM_StepEnumeration)->Arg(4)->Arg(6)->Arg(8);

void BM_IntervalReach(benchmark::State& state) {
    int n = int(state.range(0));
    BnRpnImage img = bn_to_rpn(negation_ring(n));
    Marking from = config_to_marking(Config(0, n));
    Marking to = config_to_marking(Config((1u << n) - 1, n));
    for (auto _ : state) {
        bool hit = interval_reachable(img.net, from, to);
        benchmark::DoNotOptimize(hit);
    }
}
BENCHMARK(BM_IntervalReach)->Arg(3)->Arg(4)->Arg(5);

void BM_MpReach(benchmark::State& state) {
    int n = int(state.range(0));
    BooleanNetwork f = negation_ring(n);
    Config3 from = Config3::of_config(Config(0, n));
    Config3 to = Config3::of_config(Config((1u << n) - 1, n));
    for (auto _ : state) {
        bool hit = mp_reachable(f, from, to);
        benchmark::DoNotOptimize(hit);
    }
}
BENCHMARK(BM_MpReach)->Arg(4)->Arg(6)->Arg(8);

} // namespace

BENCHMARK_MAIN();
