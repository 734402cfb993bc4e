#include "dtd/tiling.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace dtd;

namespace {

PathWord W(const char* s) { return PathWord::parse(s); }
PolyQ P(const char* s) { return PolyQ::parse(s); }

std::vector<Cell> sorted(std::vector<Cell> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("region geometry") {
    auto r = build_region(W("DUDU"), W("UUDD"), RegionType::D);
    CHECK(sorted(r->unit_cells()) == std::vector<Cell>{{1, 0}, {2, 1}, {3, 0}});
    CHECK(r->two_by_two_heights().empty());

    auto s = build_region(W("DDUU"), W("UUUU"), RegionType::D);
    CHECK(sorted(s->unit_cells()) == std::vector<Cell>{{1, 0}, {2, -1}, {2, 1}, {3, 0}});
    CHECK(s->two_by_two_heights() == std::vector<int>{2});
    CHECK(s->is_two_by_two(s->find(3, 2)));

    for (auto t : {RegionType::A, RegionType::B, RegionType::D}) CHECK(build_region(W("UDUD"), W("UDUD"), t)->empty());
    CHECK_THROWS_AS(build_region(W("UU"), W("DD"), RegionType::D), DomainError);
    CHECK_THROWS_AS(build_region(W("DDDU"), W("UUUU"), RegionType::D), DomainError);  // signs differ
}

TEST_CASE("type B anchors sit on the terminal column") {
    auto r = build_region(W("DDD"), W("UUU"), RegionType::B);
    int anchors = 0;
    for (int i = 0; i < r->size(); ++i)
        if (r->is_anchor(i)) {
            ++anchors;
            CHECK(r->cell(i).x == 3);
        }
    CHECK(anchors > 0);
}

TEST_CASE("DDUUDD: 36 tilings, six with art 5") {
    int total = 0, art5 = 0;
    for (auto& mu : uppers(W("DDUUDD"), RegionType::D))
        for (auto& t : enumerate_tilings(W("DDUUDD"), mu, RegionType::D, TilingClass::inclusive)) {
            ++total;
            art5 += t.art() == 5;
        }
    CHECK(total == 36);
    CHECK(art5 == 6);
    auto p = genfun_lower(W("DDUUDD"), RegionType::D);
    CHECK(p.eval_at_one() == 36);
    CHECK(p.coefficient(5) == 6);
}

TEST_CASE("the cover-exclusive tiling of DUDU/UUDD") {
    auto ts = enumerate_tilings(W("DUDU"), W("UUDD"), RegionType::D, TilingClass::exclusive);
    REQUIRE(ts.size() == 1);
    REQUIRE(ts[0].tiles.size() == 1);
    CHECK(ts[0].tiles[0].kind == TileKind::dyck);
    CHECK(ts[0].tiles[0].cell_count() == 3);
    CHECK(ts[0].tile_count() == 1);
    CHECK(ts[0].art() == 2);
}

TEST_CASE("empty region has one empty tiling") {
    for (auto cls : {TilingClass::inclusive, TilingClass::exclusive}) {
        auto ts = enumerate_tilings(W("DUUD"), W("DUUD"), RegionType::D, cls);
        REQUIRE(ts.size() == 1);
        CHECK(ts[0].tiles.empty());
        CHECK(ts[0].art() == 0);
        CHECK(ts[0].area() == 0);
        CHECK(ts[0].tile_count() == 0);
    }
}

TEST_CASE("pair generating functions") {
    CHECK(genfun_pair(W("DDUU"), W("UUUU"), RegionType::D, TilingClass::inclusive, Statistic::art) == P("q^3 + q^5"));
    CHECK(genfun_pair(W("DUDU"), W("UUDD"), RegionType::D, TilingClass::inclusive, Statistic::tiles) == P("q + q^3"));
    CHECK(genfun_pair(W("DDUU"), W("UUUU"), RegionType::D, TilingClass::inclusive, Statistic::area) == P("2q^5"));
    CHECK(signed_exclusive_weight(W("DUDU"), W("UUDD"), RegionType::D, Statistic::tiles) == P("-q"));
    CHECK(signed_exclusive_weight(W("DUDU"), W("UUDD"), RegionType::D, Statistic::art) == P("-q^2"));
}

TEST_CASE("lower and upper sums") {
    CHECK(genfun_lower(W("DDDD"), RegionType::D) == P("1 + q + q^2 + 2q^3 + q^4 + q^5 + q^6"));
    CHECK(genfun_lower(W("U"), RegionType::D) == PolyQ(1));
    CHECK(genfun_lower(W("D"), RegionType::D) == PolyQ(1));
    CHECK(genfun_lower(W("DDD"), RegionType::B) == P("1 + q + q^2 + 2q^3 + q^4 + q^5 + q^6"));
    CHECK(genfun_lower(W("UDUD"), RegionType::A) == P("1 + q"));
    // unsigned columns of N: one term per flip set of mu
    CHECK(genfun_upper(W("UUUU"), RegionType::D) == P("1 + 2q + q^2"));
    CHECK(genfun_upper(W("DDDD"), RegionType::D) == PolyQ(1));
    CHECK(genfun_upper(W("UUDD"), RegionType::D) == P("1 + 2q + q^2"));
}

TEST_CASE("workers do not change generating functions") {
    for (auto w : {"DDUUDD", "UDDUDU"}) {
        auto a = genfun_lower(W(w), RegionType::D, Statistic::art, TilingClass::inclusive, 1);
        auto b = genfun_lower(W(w), RegionType::D, Statistic::art, TilingClass::inclusive, 3);
        CHECK(a == b);
    }
}

TEST_CASE("exact cover, exclusive uniqueness, integral art (n <= 5)") {
    for (int n = 1; n <= 5; ++n)
        for (auto& lam : enumerate_all(n))
            for (auto type : {RegionType::D, RegionType::B}) {
                for (auto& mu : uppers(lam, type)) {
                    auto reg = build_region(lam, mu, type);
                    CHECK(enumerate_tilings(reg, TilingClass::exclusive).size() <= 1);
                    for (auto& t : enumerate_tilings(reg, TilingClass::inclusive)) {
                        std::map<Cell, int> mult;
                        for (auto& tile : t.tiles)
                            for (auto& c : tile.cells()) ++mult[c];
                        CHECK(static_cast<int>(mult.size()) == reg->size());
                        for (auto& [c, k] : mult) CHECK(k == 1);
                        CHECK((t.area() + t.tile_count()) % 2 == 0);
                    }
                }
            }
}

TEST_CASE("projection to type B") {
    // a single ballot tile over a length-4 region
    bool seen_ballot = false;
    for (auto& lam : enumerate_type_d(4, 1))
        for (auto& mu : uppers(lam, RegionType::D))
            for (auto& d : enumerate_tilings(lam, mu, RegionType::D, TilingClass::inclusive)) {
                auto b = project_to_type_b(d);
                CHECK(b.region->type() == RegionType::B);
                CHECK(b.region->lower() == truncate_last(lam));
                CHECK(b.art() == d.art());
                CHECK(b.tile_count() == d.tile_count());
                CHECK(lift_to_type_d(b, 1).tiles == d.tiles);
                for (auto& t : d.tiles) seen_ballot = seen_ballot || t.kind == TileKind::ballot_d;
            }
    CHECK(seen_ballot);

    // singleton tiling with a lone two-by-two
    auto ts = enumerate_tilings(W("DDUU"), W("UUUU"), RegionType::D, TilingClass::inclusive);
    auto it = std::find_if(ts.begin(), ts.end(), [](const Tiling& t) {
        return std::all_of(t.tiles.begin(), t.tiles.end(), [](const Tile& x) { return x.cell_count() == 1; });
    });
    REQUIRE(it != ts.end());
    auto b = project_to_type_b(*it);
    CHECK(b.art() == it->art());
    bool anchored = false;
    for (auto& t : b.tiles)
        for (auto& c : t.cells()) anchored = anchored || b.region->is_anchor(b.region->find(c));
    CHECK(anchored);

    auto e = enumerate_tilings(W("DUUD"), W("DUUD"), RegionType::D, TilingClass::inclusive);
    CHECK(project_to_type_b(e[0]).tiles.empty());
}

TEST_CASE("json and svg output") {
    auto ts = enumerate_tilings(W("DDUU"), W("UUUU"), RegionType::D, TilingClass::inclusive);
    REQUIRE(!ts.empty());
    auto j = to_json(ts[0]);
    CHECK(j["lambda"] == "DDUU");
    CHECK(j["mu"] == "UUUU");
    auto svg = to_svg(ts[0]);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(to_svg(ts[0]) == svg);
}

TEST_CASE("names round trip") {
    for (auto t : {RegionType::A, RegionType::B, RegionType::D}) CHECK(parse_region_type(name(t)) == t);
    for (auto c : {TilingClass::inclusive, TilingClass::exclusive}) CHECK(parse_tiling_class(name(c)) == c);
    for (auto s : {Statistic::art, Statistic::tiles, Statistic::area}) CHECK(parse_statistic(name(s)) == s);
    CHECK_THROWS(parse_region_type("C"));
}
