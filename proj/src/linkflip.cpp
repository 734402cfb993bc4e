#include "dtd/linkflip.hpp"

#include <algorithm>

namespace dtd {

namespace {

// Bracket matching followed by right-to-left pairing of the leftover U's.
// idx[k] is the index assigned to letter k.
ArcSet pair_indexed(const std::vector<Step>& letters, const std::vector<int>& idx) {
    ArcSet r;
    std::vector<int> stack;
    for (size_t k = 0; k < letters.size(); ++k) {
        if (letters[k] == Step::U) {
            stack.push_back(idx[k]);
        } else if (!stack.empty()) {
            r.simple.push_back({stack.back(), idx[k], false});
            stack.pop_back();
        } else {
            r.unpaired_d.push_back(idx[k]);
        }
    }
    while (stack.size() >= 2) {
        int b = stack.back();
        stack.pop_back();
        int a = stack.back();
        stack.pop_back();
        r.dashed.push_back({a, b, true});
    }
    r.unpaired_u = stack;
    std::sort(r.simple.begin(), r.simple.end());
    std::sort(r.dashed.begin(), r.dashed.end());
    return r;
}

bool has_arc(const ArcSet& a, const Arc& x) {
    const auto& v = x.dashed ? a.dashed : a.simple;
    return std::find_if(v.begin(), v.end(), [&](const Arc& y) { return y.i == x.i && y.j == x.j; }) != v.end();
}

void check_subset(const PathWord& w, const std::vector<Arc>& s) {
    auto a = pair_arcs(w);
    for (auto& x : s)
        if (!has_arc(a, x))
            throw DomainError("arc (" + std::to_string(x.i) + "," + std::to_string(x.j) + ") is not an arc of " + w.str());
}

}  // namespace

std::vector<Arc> ArcSet::all() const {
    std::vector<Arc> v = simple;
    v.insert(v.end(), dashed.begin(), dashed.end());
    std::sort(v.begin(), v.end());
    return v;
}

ArcSet pair_arcs(const PathWord& w) {
    std::vector<int> idx(static_cast<size_t>(w.length()));
    for (int i = 0; i < w.length(); ++i) idx[i] = i + 1;
    return pair_indexed(w.steps(), idx);
}

PathWord flip(const PathWord& w, const std::vector<Arc>& s) {
    check_subset(w, s);
    auto st = w.steps();
    for (auto& a : s) {
        if (a.dashed) {
            st[a.i - 1] = Step::D;
            st[a.j - 1] = Step::D;
        } else {
            std::swap(st[a.i - 1], st[a.j - 1]);
        }
    }
    return PathWord(std::move(st));
}

PolyQ weight_I(const PathWord& w, const std::vector<Arc>& s) {
    check_subset(w, s);
    PolyQ r = 1;
    const int L = w.length();
    for (auto& a : s) {
        int e = a.size();
        if (a.dashed) e += (L - a.j + 1) - 1;
        r = r.scale_by_monomial(-1, e);
    }
    return r;
}

PolyQ weight_II(const PathWord& w, const std::vector<Arc>& s) {
    check_subset(w, s);
    PolyQ r = 1;
    for (size_t k = 0; k < s.size(); ++k) r = r.scale_by_monomial(-1, 1);
    return r;
}

std::vector<FlipImage> all_flips(const PathWord& mu) {
    auto arcs = pair_arcs(mu).all();
    const int L = mu.length();
    std::vector<FlipImage> out;
    out.reserve(size_t(1) << arcs.size());
    for (unsigned long mask = 0; mask < (1ul << arcs.size()); ++mask) {
        FlipImage f;
        auto st = mu.steps();
        int e1 = 0;
        for (size_t k = 0; k < arcs.size(); ++k) {
            if (!(mask >> k & 1u)) continue;
            const Arc& a = arcs[k];
            f.arcs.push_back(a);
            if (a.dashed) {
                st[a.i - 1] = st[a.j - 1] = Step::D;
                e1 += a.size() + (L - a.j);
            } else {
                std::swap(st[a.i - 1], st[a.j - 1]);
                e1 += a.size();
            }
        }
        int k = static_cast<int>(f.arcs.size());
        Int sign = (k % 2) ? -1 : 1;
        f.lam = PathWord(std::move(st));
        f.w1 = PolyQ::monomial(sign, e1);
        f.w2 = PolyQ::monomial(sign, k);
        out.push_back(std::move(f));
    }
    return out;
}

const Arc& LinkPattern::arc_opening_at(int idx) const {
    for (auto& a : arcs)
        if (a.i == idx) return a;
    throw DomainError("no arc opens at index " + std::to_string(idx));
}

LinkPattern link_pattern(const PathWord& w) {
    LinkPattern lp;
    lp.base = w;
    auto first = pair_arcs(w);
    lp.prepended = static_cast<int>(first.unpaired_d.size() + first.unpaired_u.size());

    lp.extended.assign(static_cast<size_t>(lp.prepended), Step::U);
    lp.extended.insert(lp.extended.end(), w.steps().begin(), w.steps().end());
    std::vector<int> idx(lp.extended.size());
    for (size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k) + 1 - lp.prepended;

    auto full = pair_indexed(lp.extended, idx);
    if (!full.unpaired_d.empty() || !full.unpaired_u.empty())
        throw std::logic_error("link pattern left a letter unpaired for " + w.str());
    lp.arcs = full.all();
    const int L = w.length();
    if (L > 0 && w.at(L) == Step::D)
        for (auto& a : lp.arcs)
            if (a.j == L) a.dashed = true;

    for (auto& a : lp.arcs) {
        bool nested = std::any_of(lp.arcs.begin(), lp.arcs.end(), [&](const Arc& b) { return b.contains(a); });
        if (!nested) lp.outer.push_back(a);
    }
    for (auto& a0 : lp.outer) {
        if (!a0.dashed) continue;
        int bound = lp.first_index() - 1;
        for (auto& b : lp.outer)
            if (b.dashed && b.j < a0.i) bound = std::max(bound, b.j);
        ArrowChain ch{a0, {}};
        for (auto it = lp.outer.rbegin(); it != lp.outer.rend(); ++it)
            if (!it->dashed && it->j < a0.i && it->i > bound) ch.chain.push_back(*it);
        if (!ch.chain.empty()) lp.arrows.push_back(std::move(ch));
    }
    return lp;
}

nlohmann::json to_json(const LinkPattern& lp) {
    using nlohmann::json;
    json arcs = json::array();
    for (auto& a : lp.arcs) arcs.push_back({{"arc", {a.i, a.j}}, {"dashed", a.dashed}});
    json outer = json::array();
    for (auto& a : lp.outer) outer.push_back({a.i, a.j});
    json arrows = json::array();
    for (auto& ch : lp.arrows) {
        json c = json::array();
        c.push_back({ch.head.i, ch.head.j});
        for (auto& a : ch.chain) c.push_back({a.i, a.j});
        arrows.push_back(c);
    }
    std::string ext;
    for (auto s : lp.extended) ext += static_cast<char>(s);
    return json{{"word", lp.base.str()},
                {"prepended", lp.prepended},
                {"extended", ext},
                {"arcs", arcs},
                {"outer", outer},
                {"arrows", arrows}};
}

}  // namespace dtd
