#include "dtd/incidence.hpp"
#include "dtd/linkflip.hpp"
#include "dtd/reference.hpp"

#include <doctest.h>

using namespace dtd;

namespace {

PathWord W(const char* s) { return PathWord::parse(s); }
PolyQ P(const char* s) { return PolyQ::parse(s); }

void check_equal(const IncidenceMatrix& m, const std::vector<std::vector<PolyQ>>& g) {
    REQUIRE(m.size() == static_cast<int>(g.size()));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) {
            CAPTURE(m.basis[i].str());
            CAPTURE(m.basis[j].str());
            CHECK(m.at(i, j) == g[i][j]);
        }
}

}  // namespace

TEST_CASE("reference 8x8 matrices") {
    auto m = build(4, 0, WeightKind::I), n = build(4, 0, WeightKind::II);
    CHECK(m.basis == golden_basis());
    check_equal(m, golden_matrix("M"));
    check_equal(n, golden_matrix("N"));
    check_equal(invert(m), golden_matrix("Minv"));
    check_equal(invert(n), golden_matrix("Ninv"));
}

TEST_CASE("single entries") {
    auto m = build(4, 0, WeightKind::I), n = build(4, 0, WeightKind::II);
    CHECK(m.at(W("UUDD"), W("UUUU")) == P("-q"));
    CHECK(m.at(W("DDUU"), W("UUUU")) == P("-q^3"));
    CHECK(m.at(W("DUDU"), W("UUDD")) == P("-q^2"));
    CHECK(n.at(W("DUDU"), W("UUDD")) == P("-q"));
    CHECK(invert(m).at(W("DDUU"), W("UUUU")) == P("q^3 + q^5"));
    CHECK(invert(n).at(W("DUDU"), W("UUUU")) == P("q^2 + q^4"));
}

TEST_CASE("trivial sizes") {
    auto m = build(1, 0, WeightKind::I);
    REQUIRE(m.size() == 1);
    CHECK(m.basis[0] == W("U"));
    CHECK(m.is_identity());
    CHECK(invert(m).is_identity());
    CHECK(build(1, 1, WeightKind::I).basis[0] == W("D"));
}

TEST_CASE("inverse of the identity") {
    IncidenceMatrix id;
    id.basis = enumerate_type_d(3, 0);
    id.entries.assign(4, std::vector<PolyQ>(4, PolyQ(0)));
    for (int i = 0; i < 4; ++i) id.entries[i][i] = 1;
    CHECK(invert(id).is_identity());
}

TEST_CASE("unitriangular, signed flip weights, positive inverses") {
    for (int n = 1; n <= 7; ++n)
        for (int e : {0, 1}) {
            auto m = build(n, e, WeightKind::I), nn = build(n, e, WeightKind::II);
            for (int i = 0; i < m.size(); ++i) {
                CHECK(m.at(i, i) == PolyQ(1));
                for (int j = i + 1; j < m.size(); ++j) CHECK(m.at(i, j).is_zero());
            }
            // off-diagonal entries are (-1)^k q^a for M and (-q)^k for N, with the same k
            for (int i = 0; i < m.size(); ++i)
                for (int j = 0; j < i; ++j) {
                    const auto &a = m.at(i, j), &b = nn.at(i, j);
                    CHECK(a.is_zero() == b.is_zero());
                    if (b.is_zero()) continue;
                    int k = b.degree();
                    CHECK(b == pow(PolyQ(-1) * PolyQ::q(), static_cast<unsigned>(k)));
                    CHECK(a == PolyQ::monomial(k % 2 ? -1 : 1, a.degree()));
                }
            if (n <= 6) {
                auto mi = invert(m), ni = invert(nn);
                CHECK(multiply(m, mi).is_identity());
                for (int i = 0; i < m.size(); ++i)
                    for (int j = 0; j < m.size(); ++j) {
                        CHECK(mi.at(i, j).nonnegative());
                        CHECK(ni.at(i, j).nonnegative());
                    }
            }
        }
}

TEST_CASE("worker count does not change the result") {
    auto a = build(6, 1, WeightKind::I, 1), b = build(6, 1, WeightKind::I, 4);
    CHECK(to_json(a) == to_json(b));
}

TEST_CASE("serializations") {
    auto m = build(2, 0, WeightKind::I);
    CHECK(m.basis.size() == 2);
    auto j = to_json(m);
    CHECK(j["entries"].size() == 2);
    CHECK(to_latex(m).rfind("\\begin{pmatrix}", 0) == 0);
    CHECK(to_csv(m).find("UU") != std::string::npos);
    CHECK_FALSE(to_text(m).empty());
}
