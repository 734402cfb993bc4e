#pragma once

#include "dtd/linkflip.hpp"
#include "dtd/pathword.hpp"
#include "dtd/qpoly.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dtd {

// No rewriting rule applies although the tree is not a single chain.
class StuckTree : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TreeEdge;

struct TreeNode {
    std::vector<TreeEdge> children;
};

struct TreeEdge {
    int id = 0;
    Arc arc;  // the arc the edge came from; rewritten edges keep their top arc only
    bool dotted = false;
    TreeNode below;
};

struct PlaneTree {
    TreeNode root;
    std::map<int, int> arrows;  // tail edge id -> head edge id
    int next_id = 0;

    int edge_count() const;
};

PlaneTree build_tree(const PathWord& lam);

// A single rewriting step.
struct TreeMove {
    enum Kind { merge_plain, merge_dotted, merge_arrow, close_dotted } kind;
    std::vector<int> vertex;  // child indices from the root
    int left = 0;             // for merges: index of the left chain among the vertex's children
};

std::vector<TreeMove> eligible_moves(const PlaneTree& t);
// Applies the move in place and returns its factor.
PolyQ apply_move(PlaneTree& t, const TreeMove& m);
// Value of a tree that is a single chain (or empty); throws StuckTree otherwise.
PolyQ terminal_value(const PlaneTree& t);

PolyQ omega(PlaneTree t);
// Values of omega over every order of eligible moves (exhaustive search).
std::vector<PolyQ> omega_all_orders(const PlaneTree& t, long max_states = 2000000);

PolyQ kw_type_a(const PathWord& lam);
std::pair<PolyQ, PolyQ> a_factor(int j, int n);
PolyQ q_b(int m, int n);
// P(M,N) = P^D of D^N U^M in closed form
PolyQ p_mn(int m, int n);
PolyQ factorized_p_d(const PathWord& lam);
PolyQ factorized_p_b(const PathWord& lam);

nlohmann::json to_json(const PlaneTree& t);
std::string to_text(const PlaneTree& t);
std::string to_dot(const PlaneTree& t);

}  // namespace dtd
