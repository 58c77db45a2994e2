#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnconcur/dnf.hpp"
#include "bnconcur/explore.hpp"
#include "bnconcur/expr.hpp"

namespace bnconcur {

/// Update semantics of a Boolean network. Interval and MostPermissive are
/// realized through the encodings and mp modules; the three native modes
/// update within B^n.
enum class UpdateMode { Async, Sync, General, Interval, MostPermissive };

UpdateMode parse_mode(const std::string& s);
std::string mode_name(UpdateMode m);

/// A Boolean network of dimension n: one update function per component.
struct BooleanNetwork {
    std::vector<std::string> names;
    std::vector<ExprPtr> functions;

    int dim() const { return static_cast<int>(functions.size()); }
    int index_of(const std::string& name) const; // -1 when absent
    /// Checks n <= kMaxDim, distinct names, variable indices within range.
    void validate() const;

    Config apply(const Config& x) const {
        Config y = x;
        for (int i = 0; i < dim(); ++i) y.set(i, eval(functions[i], x));
        return y;
    }
};

/// Parses the .bn format: one `name = expr` line per component in
/// declaration order, '#' comments, blank lines ignored. Right-hand sides
/// may reference components declared on any line.
BooleanNetwork parse_bn(const std::string& text);
std::string print_bn(const BooleanNetwork& f);

/// y with Delta(x,y) = {i} and y_i = f_i(x): flip exactly one unstable
/// coordinate. Never contains x itself.
std::vector<Config> async_successors(const BooleanNetwork& f, const Config& x);

/// f(x) when it differs from x; empty vector at fixpoints.
std::vector<Config> sync_successors(const BooleanNetwork& f, const Config& x);

/// Flip any nonempty subset of unstable coordinates.
std::vector<Config> general_successors(const BooleanNetwork& f, const Config& x);

std::vector<Config> successors(const BooleanNetwork& f, const Config& x,
                               UpdateMode mode);

/// All configurations with f(x) = x, in ascending order. Exhaustive over
/// B^n, so n is capped at kMaxDim.
std::vector<Config> fixpoints(const BooleanNetwork& f);

/// Transition relation over B^n for a native mode. Edge labels are the
/// flipped coordinate sets as bitmasks. Forward-closed from `from`.
using BnGraph = StateGraph<Config, std::uint32_t>;
BnGraph reachable(const BooleanNetwork& f, UpdateMode mode, const Config& from,
                  const ExploreBudget& budget = {});
BnGraph reachable(const BooleanNetwork& f, UpdateMode mode,
                  const std::vector<Config>& from, const ExploreBudget& budget = {});

} // namespace bnconcur
