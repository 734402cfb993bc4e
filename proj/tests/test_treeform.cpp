#include "dtd/tiling.hpp"
#include "dtd/treeform.hpp"

#include <doctest.h>

using namespace dtd;

namespace {

PathWord W(const char* s) { return PathWord::parse(s); }
PolyQ P(const char* s) { return PolyQ::parse(s); }

// root -> e0 -> e1 -> ... as one chain
PlaneTree chain(const std::vector<bool>& dotted) {
    PlaneTree t;
    TreeNode* n = &t.root;
    for (bool d : dotted) {
        TreeEdge e;
        e.id = t.next_id++;
        e.dotted = d;
        n->children.push_back(e);
        n = &n->children.back().below;
    }
    return t;
}

}  // namespace

TEST_CASE("tree of DUUDUU") {
    auto t = build_tree(W("DUUDUU"));
    REQUIRE(t.root.children.size() == 1);
    const auto& top = t.root.children[0];
    CHECK(top.dotted);
    const auto& v = top.below.children;
    REQUIRE(v.size() == 3);
    CHECK_FALSE(v[0].dotted);
    CHECK_FALSE(v[1].dotted);
    CHECK(v[2].dotted);
    REQUIRE(t.arrows.size() == 1);
    CHECK(t.arrows.at(v[2].id) == v[1].id);
}

TEST_CASE("omega of DUUDUU is [3][6]") {
    auto w = omega(build_tree(W("DUUDUU")));
    CHECK(w == q_int(3) * q_int(6));
    CHECK(w == P("1 + 2q + 3q^2 + 3q^3 + 3q^4 + 3q^5 + 2q^6 + q^7"));
}

TEST_CASE("small trees") {
    auto e = build_tree(W(""));
    CHECK(e.edge_count() == 0);
    CHECK(omega(e) == PolyQ(1));

    auto ud = build_tree(W("UD"));
    REQUIRE(ud.root.children.size() == 1);
    CHECK(ud.root.children[0].dotted);
    CHECK(ud.root.children[0].below.children.empty());
    CHECK(omega(ud) == PolyQ(1));

    CHECK(omega(build_tree(W("DDDD"))) == (1 + PolyQ::q()) * (1 + pow(PolyQ::q(), 2)) * (1 + pow(PolyQ::q(), 3)));
    CHECK(omega(build_tree(W("UUDD"))) == P("1 + q"));
}

TEST_CASE("terminal values") {
    CHECK(terminal_value(chain({false, false})) == (1 + PolyQ::q()) * (1 + pow(PolyQ::q(), 2)));
    CHECK(terminal_value(chain({true, false, true})) == PolyQ(1));
    CHECK(terminal_value(PlaneTree{}) == PolyQ(1));
    PlaneTree forked;
    forked.root.children.resize(2);
    forked.root.children[1].id = 1;
    forked.next_id = 2;
    CHECK_THROWS_AS(terminal_value(forked), StuckTree);
}

TEST_CASE("Kenyon-Wilson formula") {
    CHECK(kw_type_a(W("UDUD")) == P("1 + q"));
    CHECK(kw_type_a(W("UUDD")) == PolyQ(1));
    CHECK(kw_type_a(W("UUDDUD")) == P("1 + q + q^2"));
    CHECK(kw_type_a(W("")) == PolyQ(1));
    for (int n = 0; n <= 4; ++n)
        for (auto& w : enumerate_dyck(n)) CHECK(kw_type_a(w) == genfun_lower(w, RegionType::A));
}

TEST_CASE("a-factors and Q^B") {
    auto [num, den] = a_factor(1, 2);
    CHECK(num == q_int(4));
    CHECK(den == q_int(2));
    CHECK(exact_div(num, den) == P("1 + q^2"));
    CHECK(q_b(0, 3) == (1 + PolyQ::q()) * (1 + pow(PolyQ::q(), 2)) * (1 + pow(PolyQ::q(), 3)));
    CHECK(q_b(1, 2) == P("1 + q + 2q^2 + 2q^3 + q^4 + q^5"));
    CHECK(q_b(0, 0) == PolyQ(1));
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; m + n <= 5; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(q_b(m, n) == genfun_lower(lambda_mn(m, n), RegionType::B));
        }
}

TEST_CASE("P(M,N) = Q^B(M-1,N)") {
    for (int m = 1; m <= 6; ++m)
        for (int n = 0; m + n <= 6; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(p_mn(m, n) == q_b(m - 1, n));
            CHECK(p_mn(m, n) == genfun_lower(lambda_mn(m, n), RegionType::D));
        }
}

TEST_CASE("factorizations") {
    CHECK(factorized_p_d(W("DDDD")) == P("1 + q + q^2 + 2q^3 + q^4 + q^5 + q^6"));
    CHECK(factorized_p_d(W("UD")) == genfun_lower(W("UD"), RegionType::D));
    CHECK(factorized_p_b(W("DDD")) == q_b(0, 3));
    for (int n = 1; n <= 6; ++n)
        for (auto& w : enumerate_all(n)) {
            CAPTURE(w.str());
            CHECK(factorized_p_d(w) == genfun_lower(w, RegionType::D));
            if (n <= 5) CHECK(factorized_p_b(w) == genfun_lower(w, RegionType::B));
        }
}

TEST_CASE("omega equals the tiling generating function, any merge order") {
    for (int n = 1; n <= 6; ++n)
        for (auto& w : enumerate_all(n)) {
            CAPTURE(w.str());
            auto t = build_tree(w);
            auto v = omega(t);
            CHECK(v == genfun_lower(w, RegionType::D));
            if (n <= 5) {
                auto all = omega_all_orders(t);
                REQUIRE(all.size() == 1);
                CHECK(all[0] == v);
            }
        }
}

TEST_CASE("serializations") {
    auto t = build_tree(W("DUUDUU"));
    auto j = to_json(t);
    CHECK(j["arrows"].size() == 1);
    CHECK(j["children"].size() == 1);
    CHECK(to_text(t).find("arrow") != std::string::npos);
    CHECK(to_dot(t).rfind("digraph", 0) == 0);
}
