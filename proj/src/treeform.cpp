#include "dtd/treeform.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace dtd {

namespace {

int count_edges(const TreeNode& n) {
    int c = 0;
    for (auto& e : n.children) c += 1 + count_edges(e.below);
    return c;
}

// Edges of the chain hanging from e (top first), or empty if the subtree branches.
std::vector<const TreeEdge*> chain_of(const TreeEdge& e) {
    std::vector<const TreeEdge*> out{&e};
    const TreeNode* n = &e.below;
    while (!n->children.empty()) {
        if (n->children.size() > 1) return {};
        out.push_back(&n->children[0]);
        n = &n->children[0].below;
    }
    return out;
}

bool all_plain(const std::vector<const TreeEdge*>& c) {
    return std::none_of(c.begin(), c.end(), [](const TreeEdge* e) { return e->dotted; });
}

bool dotted_ends(const std::vector<const TreeEdge*>& c) { return !c.empty() && c.front()->dotted && c.back()->dotted; }

bool touches_arrow(const PlaneTree& t, int id) {
    if (t.arrows.count(id)) return true;
    for (auto& [tail, head] : t.arrows)
        if (head == id) return true;
    return false;
}

TreeNode& node_at(TreeNode& root, const std::vector<int>& path) {
    TreeNode* n = &root;
    for (int k : path) n = &n->children.at(static_cast<size_t>(k)).below;
    return *n;
}

void collect_ids(const TreeEdge& e, std::vector<int>& out) {
    out.push_back(e.id);
    for (auto& c : e.below.children) collect_ids(c, out);
}

}  // namespace

int PlaneTree::edge_count() const { return count_edges(root); }

PlaneTree build_tree(const PathWord& lam) {
    auto lp = link_pattern(lam);
    PlaneTree t;
    const int first = lp.first_index();
    const int n = static_cast<int>(lp.extended.size());
    std::map<std::pair<int, int>, int> id;
    for (size_t k = 0; k < lp.arcs.size(); ++k) id[{lp.arcs[k].i, lp.arcs[k].j}] = static_cast<int>(k);
    t.next_id = static_cast<int>(lp.arcs.size());

    // positions are 0-based offsets into the extended word
    std::function<std::vector<TreeEdge>(int, int)> forest = [&](int from, int to) {
        std::vector<TreeEdge> out;
        int k = from;
        while (k < to) {
            const Arc& a = lp.arc_opening_at(k + first);
            int jpos = a.j - first;
            TreeEdge e;
            e.id = id.at({a.i, a.j});
            e.arc = a;
            if (lp.extended[jpos] == Step::U) {
                // a U...U pair: dotted edge over the inside followed by the rest
                e.dotted = true;
                e.below.children = forest(k + 1, jpos);
                auto rest = forest(jpos + 1, to);
                for (auto& r : rest) e.below.children.push_back(std::move(r));
                out.push_back(std::move(e));
                break;
            }
            e.dotted = a.dashed;
            e.below.children = forest(k + 1, jpos);
            out.push_back(std::move(e));
            k = jpos + 1;
        }
        return out;
    };
    t.root.children = forest(0, n);

    for (auto& ch : lp.arrows) {
        Arc prev = ch.head;
        for (auto& a : ch.chain) {
            t.arrows[id.at({prev.i, prev.j})] = id.at({a.i, a.j});
            prev = a;
        }
    }
    return t;
}

std::vector<TreeMove> eligible_moves(const PlaneTree& t) {
    std::vector<TreeMove> out;
    std::vector<int> path;
    std::function<void(const TreeNode&, const TreeEdge*)> visit = [&](const TreeNode& v, const TreeEdge* parent) {
        if (parent && parent->dotted && v.children.size() == 1) {
            auto c = chain_of(v.children[0]);
            if (!c.empty() && all_plain(c)) out.push_back({TreeMove::close_dotted, path, 0});
        }
        for (size_t k = 0; k + 1 < v.children.size(); ++k) {
            const TreeEdge& l = v.children[k];
            const TreeEdge& r = v.children[k + 1];
            auto cl = chain_of(l), cr = chain_of(r);
            if (cl.empty() || cr.empty() || !all_plain(cl)) continue;
            const int ki = static_cast<int>(k);
            if (all_plain(cr)) {
                if (!touches_arrow(t, l.id) && !touches_arrow(t, r.id)) out.push_back({TreeMove::merge_plain, path, ki});
            } else if (dotted_ends(cr)) {
                auto it = t.arrows.find(r.id);
                if (it != t.arrows.end() && it->second == l.id)
                    out.push_back({TreeMove::merge_arrow, path, ki});
                else if (!touches_arrow(t, l.id) && it == t.arrows.end())
                    out.push_back({TreeMove::merge_dotted, path, ki});
            }
        }
        for (size_t k = 0; k < v.children.size(); ++k) {
            path.push_back(static_cast<int>(k));
            visit(v.children[k].below, &v.children[k]);
            path.pop_back();
        }
    };
    visit(t.root, nullptr);
    return out;
}

PolyQ apply_move(PlaneTree& t, const TreeMove& m) {
    TreeNode& v = node_at(t.root, m.vertex);
    if (m.kind == TreeMove::close_dotted) {
        auto c = chain_of(v.children.at(0));
        const_cast<TreeEdge*>(c.back())->dotted = true;
        return one_plus_q_product(static_cast<int>(c.size()));
    }
    TreeEdge& l = v.children.at(static_cast<size_t>(m.left));
    TreeEdge& r = v.children.at(static_cast<size_t>(m.left) + 1);
    const int n = static_cast<int>(chain_of(l).size());
    const int mm = static_cast<int>(chain_of(r).size());
    PolyQ factor;
    bool dotted = m.kind != TreeMove::merge_plain;
    switch (m.kind) {
        case TreeMove::merge_plain: factor = q_binomial(mm + n, mm); break;
        case TreeMove::merge_dotted: factor = q2_binomial(mm + n, mm) * one_plus_q_product(n); break;
        case TreeMove::merge_arrow:
            factor = exact_div(q2_binomial(mm + n, mm) * one_plus_q_product(n) * q_int(2 * mm + n), q_int(2 * (mm + n)));
            t.arrows.erase(r.id);
            break;
        default: break;
    }
    std::vector<int> gone;
    for (auto& c : l.below.children) collect_ids(c, gone);
    collect_ids(r, gone);

    TreeEdge merged;
    merged.id = l.id;
    merged.arc = l.arc;
    merged.dotted = dotted;
    TreeEdge* cur = &merged;
    for (int k = 1; k < mm + n; ++k) {
        TreeEdge e;
        e.id = t.next_id++;
        e.dotted = dotted && k == mm + n - 1;
        cur->below.children.push_back(std::move(e));
        cur = &cur->below.children.back();
    }
    v.children.erase(v.children.begin() + m.left, v.children.begin() + m.left + 2);
    v.children.insert(v.children.begin() + m.left, std::move(merged));
    for (int id : gone) {
        t.arrows.erase(id);
        for (auto it = t.arrows.begin(); it != t.arrows.end();)
            it = it->second == id ? t.arrows.erase(it) : std::next(it);
    }
    return factor;
}

PolyQ terminal_value(const PlaneTree& t) {
    if (t.root.children.empty()) return 1;
    if (t.root.children.size() == 1) {
        auto c = chain_of(t.root.children[0]);
        if (!c.empty() && all_plain(c)) return one_plus_q_product(static_cast<int>(c.size()));
        if (dotted_ends(c)) return 1;
    }
    throw StuckTree("stuck tree: no rule applies");
}

PolyQ omega(PlaneTree t) {
    PolyQ acc = 1;
    for (;;) {
        auto moves = eligible_moves(t);
        if (moves.empty()) return acc * terminal_value(t);
        // deepest vertex first, rightmost pair at that vertex
        auto best = std::max_element(moves.begin(), moves.end(), [](const TreeMove& a, const TreeMove& b) {
            if (a.vertex.size() != b.vertex.size()) return a.vertex.size() < b.vertex.size();
            if (a.vertex != b.vertex) return a.vertex < b.vertex;
            return a.left < b.left;
        });
        acc *= apply_move(t, *best);
    }
}

std::vector<PolyQ> omega_all_orders(const PlaneTree& t, long max_states) {
    std::vector<PolyQ> values;
    long states = 0;
    std::function<void(const PlaneTree&, const PolyQ&)> rec = [&](const PlaneTree& cur, const PolyQ& acc) {
        if (++states > max_states) throw std::runtime_error("omega_all_orders: state limit exceeded");
        auto moves = eligible_moves(cur);
        if (moves.empty()) {
            PolyQ v = acc * terminal_value(cur);
            if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
            return;
        }
        for (auto& m : moves) {
            PlaneTree next = cur;
            PolyQ f = apply_move(next, m);
            rec(next, acc * f);
        }
    };
    rec(t, PolyQ(1));
    return values;
}

PolyQ kw_type_a(const PathWord& lam) {
    auto cs = chords(lam);
    PolyQ den = 1;
    for (auto& c : cs) den *= q_int(c.length);
    return exact_div(q_factorial(lam.length() / 2), den);
}

std::pair<PolyQ, PolyQ> a_factor(int j, int n) {
    if (j < 1 || n < 0) throw DomainError("a_factor needs j >= 1 and N >= 0");
    if (j % 2) {
        int m = (j + 1) / 2;
        return {q_int(n + 2 * m), q_int(2 * m)};
    }
    int m = j / 2;
    return {q_int(2 * n + 2 * m), q_int(n + 2 * m)};
}

PolyQ q_b(int m, int n) {
    if (m < 0 || n < 0) throw DomainError("q_b needs M, N >= 0");
    PolyQ num = one_plus_q_product(n), den = 1;
    for (int j = 1; j <= m; ++j) {
        auto [a, b] = a_factor(j, n);
        num *= a;
        den *= b;
    }
    return exact_div(num, den);
}

PolyQ p_mn(int m, int n) {
    if (m < 0 || n < 0) throw DomainError("P(M,N) needs M, N >= 0");
    if (m >= 1) return q_b(m - 1, n);
    // D^N alone: its truncation is D^{N-1}
    return n >= 1 ? q_b(0, n - 1) : PolyQ(1);
}

namespace {

// D^N U^M -> (M, N), if the word has that shape
bool split_dn_um(const PathWord& w, int& m, int& n) {
    n = 0;
    while (n < w.length() && w.at(n + 1) == Step::D) ++n;
    for (int i = n + 1; i <= w.length(); ++i)
        if (w.at(i) != Step::U) return false;
    m = w.length() - n;
    return true;
}

bool split_prime(const PathWord& w, PathWord& l1, PathWord& l2) {
    if (!classify(w).is_ballot) return false;
    int k = prime_dyck_prefix(w);
    if (k == 0) return false;
    auto& st = w.steps();
    l1 = PathWord(std::vector<Step>(st.begin(), st.begin() + k));
    l2 = PathWord(std::vector<Step>(st.begin() + k, st.end()));
    return true;
}

}  // namespace

PolyQ factorized_p_d(const PathWord& lam) {
    if (lam.empty()) return 1;
    PathWord l1, l2;
    if (split_prime(lam, l1, l2))
        return kw_type_a(l1) * p_mn(l2.length(), l1.length() / 2) * (l2.empty() ? PolyQ(1) : factorized_p_d(l2));
    int m, n;
    if (split_dn_um(lam, m, n)) return p_mn(m, n);
    return omega(build_tree(lam));
}

PolyQ factorized_p_b(const PathWord& lam) {
    if (lam.empty()) return 1;
    PathWord l1, l2;
    if (split_prime(lam, l1, l2))
        return kw_type_a(l1) * q_b(l2.length(), l1.length() / 2) * (l2.empty() ? PolyQ(1) : factorized_p_b(l2));
    int m, n;
    if (split_dn_um(lam, m, n)) return q_b(m, n);
    return omega(build_tree(lam + PathWord({Step::U})));
}

namespace {

nlohmann::json edge_json(const TreeEdge& e) {
    nlohmann::json ch = nlohmann::json::array();
    for (auto& c : e.below.children) ch.push_back(edge_json(c));
    nlohmann::json j{{"edge", e.id}, {"dotted", e.dotted}, {"children", ch}};
    if (e.arc.i != 0 || e.arc.j != 0) j["arc"] = {e.arc.i, e.arc.j};
    return j;
}

void edge_paths(const TreeNode& n, std::vector<int>& path, std::map<int, std::vector<int>>& out) {
    for (size_t k = 0; k < n.children.size(); ++k) {
        path.push_back(static_cast<int>(k));
        out[n.children[k].id] = path;
        edge_paths(n.children[k].below, path, out);
        path.pop_back();
    }
}

std::string edge_label(const TreeEdge& e) {
    std::string s = "(" + std::to_string(e.arc.i) + "," + std::to_string(e.arc.j) + ")";
    if (e.arc.i == 0 && e.arc.j == 0) s = "e" + std::to_string(e.id);
    return s;
}

}  // namespace

nlohmann::json to_json(const PlaneTree& t) {
    nlohmann::json ch = nlohmann::json::array();
    for (auto& c : t.root.children) ch.push_back(edge_json(c));
    std::map<int, std::vector<int>> paths;
    std::vector<int> p;
    edge_paths(t.root, p, paths);
    nlohmann::json arrows = nlohmann::json::array();
    for (auto& [tail, head] : t.arrows)
        arrows.push_back({{"from", tail}, {"to", head}, {"from_path", paths[tail]}, {"to_path", paths[head]}});
    return {{"children", ch}, {"arrows", arrows}};
}

std::string to_text(const PlaneTree& t) {
    std::map<int, const TreeEdge*> by_id;
    std::ostringstream os;
    os << "o\n";
    std::function<void(const TreeNode&, const std::string&)> rec = [&](const TreeNode& n, const std::string& indent) {
        for (size_t k = 0; k < n.children.size(); ++k) {
            const auto& e = n.children[k];
            by_id[e.id] = &e;
            bool last = k + 1 == n.children.size();
            os << indent << (last ? "`-- " : "|-- ") << edge_label(e) << (e.dotted ? " *" : "") << '\n';
            rec(e.below, indent + (last ? "    " : "|   "));
        }
    };
    rec(t.root, "");
    for (auto& [tail, head] : t.arrows)
        os << "arrow " << edge_label(*by_id.at(tail)) << " -> " << edge_label(*by_id.at(head)) << '\n';
    return os.str();
}

std::string to_dot(const PlaneTree& t) {
    std::ostringstream os;
    os << "digraph tree {\n  node [shape=point];\n  v0;\n";
    int next = 1;
    std::map<int, int> lower;  // edge id -> its lower vertex
    std::function<void(const TreeNode&, int)> rec = [&](const TreeNode& n, int v) {
        for (auto& e : n.children) {
            int w = next++;
            lower[e.id] = w;
            os << "  v" << w << ";\n  v" << v << " -> v" << w << " [arrowhead=none, label=\"" << edge_label(e) << "\""
               << (e.dotted ? ", style=dotted" : "") << "];\n";
            rec(e.below, w);
        }
    };
    rec(t.root, 0);
    for (auto& [tail, head] : t.arrows)
        os << "  v" << lower[tail] << " -> v" << lower[head] << " [style=dashed, color=red, constraint=false];\n";
    os << "}\n";
    return os.str();
}

}  // namespace dtd
