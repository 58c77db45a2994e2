#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnconcur/bn.hpp"

namespace bnconcur {

enum class Tri : unsigned char { Zero = 0, One = 1, Half = 2 };

/// A 3-valued configuration, two bits per component. Rendered with '*'
/// for the in-between value.
struct Config3 {
    std::uint64_t bits = 0;
    int n = 0;

    Config3() = default;
    Config3(std::uint64_t b, int dim) : bits(b), n(dim) {}
    static Config3 of_config(const Config& x);

    Tri get(int i) const {
        return static_cast<Tri>((bits >> (2 * i)) & 3u);
    }
    void set(int i, Tri v) {
        bits = (bits & ~(std::uint64_t(3) << (2 * i))) |
               (std::uint64_t(static_cast<unsigned>(v)) << (2 * i));
    }
    bool boolean() const;
    /// Requires boolean().
    Config to_config() const;
    std::string str() const;

    bool operator==(const Config3& o) const { return n == o.n && bits == o.bits; }
    bool operator!=(const Config3& o) const { return !(*this == o); }
    /// Lexicographic on the rendered string ('*' < '0' < '1').
    bool operator<(const Config3& o) const;
};

struct Config3Hash {
    std::size_t operator()(const Config3& x) const {
        return std::hash<std::uint64_t>()(x.bits * 0x9e3779b97f4a7c15ull + x.n);
    }
};

/// '0', '1' and '*' per component, leftmost = component 1.
Config3 parse_config3(const std::string& s);

/// All Boolean completions of x: coordinates at 0/1 stay fixed, each
/// in-between coordinate takes both values.
std::vector<Config> approx(const Config3& x);

/// One coordinate moves per transition: an in-between coordinate may
/// resolve to any value f_i takes on some completion, and a Boolean
/// coordinate may start updating (go to the in-between value) when some
/// completion disagrees with it. Never yields x itself.
std::vector<Config3> mp_successors(const BooleanNetwork& f, const Config3& x);

bool mp_reachable(const BooleanNetwork& f, const Config3& from,
                  const Config3& to, const ExploreBudget& budget = {});

/// Edge labels are the moved coordinate indices.
using MpGraph = StateGraph<Config3, int>;
MpGraph mp_graph(const BooleanNetwork& f, const Config3& from,
                 const ExploreBudget& budget = {});

} // namespace bnconcur
