#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bnconcur/errors.hpp"

namespace bnconcur {

/// Hard cap on network dimension for exhaustive operations.
constexpr int kMaxDim = 20;

/// A Boolean configuration of fixed dimension n <= kMaxDim.
/// Component i (0-based) is bit i; rendered left to right starting
/// with component 0, e.g. n=3, bits=0b100 prints "001".
struct Config {
    std::uint32_t bits = 0;
    int n = 0;

    Config() = default;
    Config(std::uint32_t bits_, int n_) : bits(bits_), n(n_) {}

    bool get(int i) const { return (bits >> i) & 1u; }
    void set(int i, bool v) {
        if (v) bits |= (1u << i);
        else bits &= ~(1u << i);
    }
    Config with(int i, bool v) const {
        Config c = *this;
        c.set(i, v);
        return c;
    }

    bool operator==(const Config& o) const { return n == o.n && bits == o.bits; }
    bool operator!=(const Config& o) const { return !(*this == o); }

    /// Componentwise order from component 0; coincides with the order of
    /// the rendered strings.
    bool operator<(const Config& o) const {
        if (n != o.n) return n < o.n;
        for (int i = 0; i < n; ++i) {
            bool a = get(i), b = o.get(i);
            if (a != b) return b;
        }
        return false;
    }

    std::string str() const {
        std::string s(static_cast<std::size_t>(n), '0');
        for (int i = 0; i < n; ++i)
            if (get(i)) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }
};

/// Parses a 0/1 string, leftmost character = component 0.
inline Config parse_config(const std::string& s) {
    if (s.empty() || s.size() > kMaxDim)
        throw InputError("configuration length out of range: \"" + s + "\"");
    Config c(0, static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') c.set(static_cast<int>(i), true);
        else if (s[i] != '0')
            throw InputError("configuration must be over {0,1}: \"" + s + "\"");
    }
    return c;
}

/// Indices where the two configurations differ. Both must share n.
inline std::vector<int> delta(const Config& x, const Config& y) {
    if (x.n != y.n) throw InputError("dimension mismatch in delta");
    std::vector<int> d;
    for (int i = 0; i < x.n; ++i)
        if (x.get(i) != y.get(i)) d.push_back(i);
    return d;
}

/// All 2^n configurations in ascending componentwise order.
inline std::vector<Config> all_configs(int n) {
    if (n < 0 || n > kMaxDim)
        throw InputError("dimension cap exceeded: n=" + std::to_string(n));
    std::vector<Config> out;
    out.reserve(std::size_t(1) << n);
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        // Counter bit j drives component n-1-j so the list comes out in
        // rendered-string order.
        Config c(0, n);
        for (int i = 0; i < n; ++i)
            if ((m >> (n - 1 - i)) & 1u) c.set(i, true);
        out.push_back(c);
    }
    return out;
}

struct ConfigHash {
    std::size_t operator()(const Config& c) const {
        return std::hash<std::uint64_t>()((std::uint64_t(c.n) << 32) | c.bits);
    }
};

} // namespace bnconcur
