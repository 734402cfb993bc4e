#include "dtd/pathword.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace dtd;

namespace {

PathWord W(const char* s) { return PathWord::parse(s); }

std::vector<std::string> strs(const std::vector<PathWord>& ws) {
    std::vector<std::string> out;
    for (auto& w : ws) out.push_back(w.str());
    return out;
}

}  // namespace

TEST_CASE("parse and heights") {
    auto w = W("DDUUDD");
    CHECK(w.length() == 6);
    CHECK(w.heights() == std::vector<int>{0, -1, -2, -1, 0, -1, -2});
    CHECK(w.endpoint() == -2);
    CHECK(w.at(3) == Step::U);
    CHECK(W("").empty());
    CHECK_THROWS_AS(W("UXD"), DomainError);
}

TEST_CASE("classification") {
    auto c = classify(W("UUDD"));
    CHECK(c.is_dyck);
    CHECK(c.is_ballot);
    CHECK(c.epsilon == 0);
    CHECK(classify(W("UUUU")).epsilon == 0);
    CHECK(classify(W("DDDU")).epsilon == 1);
    CHECK_FALSE(classify(W("DU")).is_ballot);
    CHECK(classify(W("UUD")).is_ballot);
    CHECK_FALSE(classify(W("UUD")).is_dyck);
}

TEST_CASE("is_above") {
    CHECK(is_above(W("UUDD"), W("UDUD")));
    CHECK_FALSE(is_above(W("UDUD"), W("UUDD")));
    CHECK(is_above(W("UUUU"), W("DDUU")));
    CHECK_THROWS_AS(is_above(W("UU"), W("UUU")), DomainError);
}

TEST_CASE("type D bases") {
    CHECK(strs(enumerate_type_d(4, 0)) ==
          std::vector<std::string>{"UUUU", "UUDD", "UDUD", "UDDU", "DUUD", "DUDU", "DDUU", "DDDD"});
    auto odd = enumerate_type_d(4, 1);
    CHECK(odd.size() == 8);
    for (auto& w : odd) CHECK(std::abs(w.endpoint()) == 2);
    CHECK(strs(enumerate_type_d(1, 0)) == std::vector<std::string>{"U"});
}

TEST_CASE("the two sign classes partition all words") {
    for (int n = 1; n <= 10; ++n) {
        auto a = enumerate_type_d(n, 0), b = enumerate_type_d(n, 1);
        std::set<std::string> all;
        for (auto& w : a) all.insert(w.str());
        for (auto& w : b) all.insert(w.str());
        CHECK(a.size() + b.size() == (size_t(1) << n));
        CHECK(all.size() == (size_t(1) << n));
        auto key = [](const PathWord& w) {
            std::string k = w.str();
            std::replace(k.begin(), k.end(), 'U', 'A');
            return k;  // U sorts before D
        };
        CHECK(std::is_sorted(a.begin(), a.end(), [&](auto& x, auto& y) { return key(x) < key(y); }));
    }
}

TEST_CASE("truncation") {
    CHECK(truncate_last(W("DDDD")) == W("DDD"));
    CHECK(truncate_last(W("DUUDUU")) == W("DUUDU"));
    CHECK(truncate_last(W("U")).empty());
}

TEST_CASE("chords") {
    auto c = chords(W("UDUD"));
    REQUIRE(c.size() == 2);
    CHECK(c[0] == Chord{1, 2, 1});
    CHECK(c[1] == Chord{3, 4, 1});
    auto d = chords(W("UUDD"));
    REQUIRE(d.size() == 2);
    CHECK(std::count(d.begin(), d.end(), Chord{2, 3, 1}) == 1);
    CHECK(std::count(d.begin(), d.end(), Chord{1, 4, 2}) == 1);
    CHECK(chords(W("")).empty());
}

TEST_CASE("chord count and mirror invariance") {
    for (int n = 0; n <= 6; ++n)
        for (auto& w : enumerate_dyck(n)) {
            auto c = chords(w);
            CHECK(static_cast<int>(c.size()) == n);
            std::vector<Step> m;
            for (int i = w.length(); i >= 1; --i) m.push_back(w.at(i) == Step::U ? Step::D : Step::U);
            auto cm = chords(PathWord(m));
            std::multiset<int> a, b;
            for (auto& x : c) a.insert(x.length);
            for (auto& x : cm) b.insert(x.length);
            CHECK(a == b);
        }
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_all(5).size() == 32);
    const size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
    for (int n = 0; n <= 6; ++n) CHECK(enumerate_dyck(n).size() == catalan[n]);
    CHECK(lambda_mn(2, 3) == W("DDDUU"));
    CHECK(prime_dyck_prefix(W("UUDDUD")) == 4);
    CHECK(prime_dyck_prefix(W("DU")) == 0);
}
