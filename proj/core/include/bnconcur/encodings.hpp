#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bnconcur/bn.hpp"
#include "bnconcur/dnf.hpp"
#include "bnconcur/rpn.hpp"

namespace bnconcur {

/// Per-transition tag of a network-image net: which component it moves,
/// in which direction, and which clause of the driving DNF it came from.
struct GammaTag {
    int var = 0;
    bool up = false;
    int clause = 0;
};

/// Image of a network under the net encoding. Place layout: component i
/// owns place i (value 0, id "i+1") and place n+i (value 1, id "n+i+1").
struct BnRpnImage {
    ReadPetriNet net;
    int n = 0;
    std::vector<std::string> names;   // component names
    std::vector<GammaTag> tags;       // parallel to net.transitions

    int place0(int i) const { return i; }
    int place1(int i) const { return n + i; }
};

/// Builds the image net: one up-transition per clause of the minimal DNF
/// of !x_i & f_i (preset {i}, postset {n+i}, context from the other
/// literals) and dually one down-transition per clause of x_i & !f_i.
/// The initial marking is the image of `initial` (all-zero by default).
BnRpnImage bn_to_rpn(const BooleanNetwork& f,
                     const std::optional<Config>& initial = std::nullopt);

/// Same construction from caller-supplied DNFs (per component: up DNF for
/// !x_i & f_i, down DNF for x_i & !f_i). Each DNF is checked to be a
/// correct representation before use.
BnRpnImage bn_to_rpn(const BooleanNetwork& f, const std::vector<Dnf>& up,
                     const std::vector<Dnf>& down,
                     const std::optional<Config>& initial = std::nullopt);

/// x maps to the marking {i + n*x_i | i}.
Marking config_to_marking(const Config& x);
/// Inverse; requires exactly one of {i, n+i} marked per component and no
/// stray places.
Config marking_to_config(const Marking& m, int n);

/// Structure found on a loaded net that looks like a network image:
/// complemented place pairs and one-in/one-out transitions moving between
/// a pair. Needed to interpret markings as configurations.
struct BooleanStructure {
    int n = 0;
    std::vector<std::string> names;    // component names
    std::vector<int> var_of_place;     // component per place
    std::vector<int> val_of_place;     // 0 or 1 per place
    std::vector<GammaTag> tags;        // per transition (clause unset)
};

/// Recognizes the structure above, pairing places by numeric ids 1..2n,
/// by "_0"/"_1" name suffixes, or by the transitions themselves.
std::optional<BooleanStructure> recognize_boolean_structure(const ReadPetriNet& net);

BnRpnImage image_with_structure(const ReadPetriNet& net,
                                const BooleanStructure& s);

/// Image of a safe loop-free net as a network of dimension |P|+|T|:
/// component p holds iff place p is marked, component t pulses while t
/// fires. Component order: places first, then transitions.
struct RpnBnImage {
    BooleanNetwork bn;
    int num_places = 0;
    int num_transitions = 0;

    int place_comp(int p) const { return p; }
    int trans_comp(int t) const { return num_places + t; }
    Config config_of_marking(const Marking& m) const;
    /// Projection onto markings; only valid when every transition
    /// component of x is 0.
    Marking marking_of_config(const Config& x) const;
    bool is_marking_config(const Config& x) const;
};

/// Requires a loop-free net and certifies safety by exhausting the atomic
/// marking graph from the initial marking within the given budget.
RpnBnImage rpn_to_bn(const ReadPetriNet& n, const ExploreBudget& budget = {});

/// Doubled network separating each component into a write node (index 2i,
/// holding the next value while an update is in flight) and a read node
/// (index 2i+1, the value others observe).
struct IntervalBn {
    BooleanNetwork bn;
    int n = 0;

    int write_index(int i) const { return 2 * i; }
    int read_index(int i) const { return 2 * i + 1; }
    /// Observed configuration: the read nodes.
    Config gamma(const Config& z) const;
    /// Embedding with write = read = x_i.
    Config alpha(const Config& x) const;
    bool consistent(const Config& z) const;
};

IntervalBn interval_encode(const BooleanNetwork& f);

/// Tripled network for the 3-valued semantics: write (2i) and read (2i+1)
/// nodes as above plus one free-running coin per component (2n+j) that
/// picks, per evaluation, whether component j is seen as already updated.
struct MpBn {
    BooleanNetwork bn;
    int n = 0;

    int write_index(int i) const { return 2 * i; }
    int read_index(int i) const { return 2 * i + 1; }
    int coin_index(int j) const { return 2 * n + j; }
};

MpBn mp_encode(const BooleanNetwork& f);

/// Asynchronous reachability between Boolean endpoints with the coins
/// projected out: start at write = read = x with all coins 0 (coins are
/// always free to toggle, so the initial coin value is immaterial) and
/// look for any state whose write and read nodes both equal y.
bool mp_encode_reachable(const MpBn& e, const Config& x, const Config& y,
                         const ExploreBudget& budget = {});

} // namespace bnconcur
