#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bnconcur/bn.hpp"
#include "bnconcur/mp.hpp"

namespace bnconcur {

enum class Dir : unsigned char { Down, Stay, Up };

/// A configuration over {0, 1/m, ..., 1}, stored as numerators.
struct ConfigM {
    std::vector<int> k;
    int m = 1;

    int n() const { return static_cast<int>(k.size()); }
    /// "0", "1" or "k/m" per component, comma separated.
    std::string str() const;
    bool operator==(const ConfigM& o) const { return m == o.m && k == o.k; }
    bool operator!=(const ConfigM& o) const { return !(*this == o); }
    bool operator<(const ConfigM& o) const;
};

/// A network over M^n given by explicit direction tables.
struct MultivaluedNetwork {
    int n = 0;
    int m = 1;
    std::vector<std::string> names;
    /// tables[i][mv_index(x)] is the move of component i at x.
    std::vector<std::vector<Dir>> tables;

    int radix() const { return m + 1; }
    std::size_t table_size() const;
    void validate() const;
};

/// Mixed-radix key with component 1 least significant.
std::size_t mv_index(const ConfigM& x);
ConfigM mv_config(std::size_t index, int n, int m);

/// 0 stays 0, 1 stays 1, everything strictly between becomes in-between.
Config3 abstr(const ConfigM& x);

/// One component moves by 1/m in its table direction, clamped to [0, 1];
/// moves the clamp turns into no-ops are dropped.
std::vector<ConfigM> mv_async_successors(const MultivaluedNetwork& F,
                                         const ConfigM& x);

using MvGraph = StateGraph<ConfigM, int>;
struct ConfigMHash {
    std::size_t operator()(const ConfigM& x) const;
};
MvGraph mv_graph(const MultivaluedNetwork& F, const ConfigM& from,
                 const ExploreBudget& budget = {});

/// A direction is only allowed when some Boolean completion of the
/// abstracted configuration justifies it: up needs a completion where f_i
/// is 1, down one where it is 0.
struct RefinementReport {
    bool ok = true;
    struct Violation {
        ConfigM x;
        int i;
    };
    std::vector<Violation> violations;
};
RefinementReport check_refinement(const MultivaluedNetwork& F,
                                  const BooleanNetwork& f);

/// Every move of F is matched by 3-valued reachability between the
/// abstracted endpoints. Requires a passing refinement check. The m = 1
/// case is verified through the explicit two-step witness (enter the
/// in-between value, then resolve).
struct SimulationReport {
    bool ok = true;
    struct Violation {
        ConfigM from, to;
        int i;
    };
    std::vector<Violation> violations;
};
SimulationReport check_simulation(const MultivaluedNetwork& F,
                                  const BooleanNetwork& f,
                                  const ExploreBudget& budget = {});

/// {"n", "m", "names", "tables"}: tables hold "u"/"s"/"d" tokens in
/// mixed-radix order, component 1 least significant.
MultivaluedNetwork load_mv_json(const std::string& text);
MultivaluedNetwork load_mv_file(const std::string& path);
std::string save_mv_json(const MultivaluedNetwork& F);

} // namespace bnconcur
