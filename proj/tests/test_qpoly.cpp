#include "dtd/qpoly.hpp"

#include <doctest.h>

#include <random>

using namespace dtd;

namespace {

PolyQ P(const char* s) { return PolyQ::parse(s); }

Int binom(int n, int m) {
    Int r = 1;
    for (int i = 1; i <= m; ++i) r = r * (n - m + i) / i;
    return r;
}

}  // namespace

TEST_CASE("q-integers") {
    CHECK(q_int(0) == PolyQ(0));
    CHECK(q_int(1) == PolyQ(1));
    CHECK(q_int(4) == P("1 + q + q^2 + q^3"));
}

TEST_CASE("q-factorials") {
    CHECK(q_factorial(0) == PolyQ(1));
    CHECK(q_factorial(3) == P("1 + 2q + 2q^2 + q^3"));
    CHECK(q_double_factorial_even(2) == (1 + PolyQ::q()) * q_int(4));
    CHECK(q_double_factorial_even(0) == PolyQ(1));
}

TEST_CASE("q-binomials") {
    CHECK(q_binomial(4, 2) == P("1 + q + 2q^2 + q^3 + q^4"));
    for (int n = 0; n <= 6; ++n) CHECK(q_binomial(n, 0) == PolyQ(1));
    CHECK(q2_binomial(2, 1) == P("1 + q^2"));
    CHECK_THROWS_AS(q_binomial(2, 3), DomainError);
}

TEST_CASE("q-binomial at q=1 is the binomial coefficient") {
    for (int n = 0; n <= 12; ++n)
        for (int m = 0; m <= n; ++m) {
            auto b = q_binomial(n, m);
            CHECK(b.nonnegative());
            CHECK(b.eval_at_one() == binom(n, m));
        }
}

TEST_CASE("q2-binomial is the q-binomial at q^2") {
    for (int n = 0; n <= 10; ++n)
        for (int m = 0; m <= n; ++m) CHECK(q2_binomial(n, m) == q_binomial(n, m).substitute_power(2));
}

TEST_CASE("exact division") {
    CHECK(exact_div(q_int(6), q_int(2)) == P("1 + q^2 + q^4"));
    auto p = P("3 - q + 7q^5");
    CHECK(exact_div(p, PolyQ(1)) == p);
    auto a = 1 + PolyQ::q();
    CHECK(exact_div(a * a, a) == a);
    CHECK_THROWS_AS(exact_div(q_int(5), q_int(2)), InexactDivision);
    CHECK_THROWS(exact_div(p, PolyQ(0)));
}

TEST_CASE("exact_div inverts multiplication on random polynomials") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> deg(0, 20), coef(-9, 9);
    auto random_poly = [&] {
        std::vector<Int> c(static_cast<size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coef(rng);
        if (c.back() == 0) c.back() = 1;
        return PolyQ(c);
    };
    for (int it = 0; it < 300; ++it) {
        auto a = random_poly(), b = random_poly();
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("text and json round trips") {
    auto p = P("1 + 2q^2 - q^3");
    CHECK(p.str() == "1 + 2q^2 - q^3");
    CHECK(PolyQ::parse(p.latex()) == p);
    CHECK(PolyQ(0).str() == "0");
    CHECK(P("-q").coefficient(1) == -1);
    nlohmann::json j = p;
    CHECK(j.dump() == R"({"coeffs":[1,0,2,-1]})");
    CHECK(j.get<PolyQ>() == p);
    CHECK_THROWS(PolyQ::parse("1 + x"));
}

TEST_CASE("big coefficients survive") {
    auto p = pow(1 + PolyQ::q(), 80);
    CHECK(p.eval_at_one() == pow(Int(2), 80));
    nlohmann::json j = p;
    CHECK(j.get<PolyQ>() == p);
}
