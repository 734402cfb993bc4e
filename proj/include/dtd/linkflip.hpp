#pragma once

#include "dtd/pathword.hpp"
#include "dtd/qpoly.hpp"

#include <json.hpp>

#include <vector>

namespace dtd {

struct Arc {
    int i = 0;
    int j = 0;
    bool dashed = false;
    int size() const { return (j - i + 1) / 2; }
    bool contains(const Arc& o) const { return i < o.i && o.j < j; }
    friend bool operator==(const Arc& a, const Arc& b) { return a.i == b.i && a.j == b.j; }
    friend auto operator<=>(const Arc& a, const Arc& b) {
        if (a.i != b.i) return a.i <=> b.i;
        return a.j <=> b.j;
    }
};

struct ArcSet {
    std::vector<Arc> simple;  // U at i, D at j
    std::vector<Arc> dashed;  // U at both ends
    std::vector<int> unpaired_d;
    std::vector<int> unpaired_u;  // at most one
    std::vector<Arc> all() const;
};

// Arc pairing of a word with 1-based indices.
ArcSet pair_arcs(const PathWord& w);

PathWord flip(const PathWord& w, const std::vector<Arc>& s);
PolyQ weight_I(const PathWord& w, const std::vector<Arc>& s);
PolyQ weight_II(const PathWord& w, const std::vector<Arc>& s);

struct FlipImage {
    PathWord lam;
    std::vector<Arc> arcs;
    PolyQ w1;
    PolyQ w2;
};

// Every subset of pair_arcs(mu), flipped. Subsets come in binary-counter order.
std::vector<FlipImage> all_flips(const PathWord& mu);

struct ArrowChain {
    Arc head;                // the dashed arc a0
    std::vector<Arc> chain;  // a1, ..., am, right to left
};

struct LinkPattern {
    PathWord base;
    int prepended = 0;
    std::vector<Step> extended;  // extended[k] is the letter at index k + 1 - prepended
    std::vector<Arc> arcs;       // sorted by left end
    std::vector<Arc> outer;
    std::vector<ArrowChain> arrows;

    int first_index() const { return 1 - prepended; }
    Step letter(int idx) const { return extended.at(static_cast<size_t>(idx - first_index())); }
    const Arc& arc_opening_at(int idx) const;
};

LinkPattern link_pattern(const PathWord& w);

nlohmann::json to_json(const LinkPattern& lp);

}  // namespace dtd
