#include "dtd/verify.hpp"

#include <doctest.h>

using namespace dtd;

TEST_CASE("suite at small lengths") {
    for (int k : {1, 2, 3, 4}) {
        auto res = run_suite(k, 2);
        CHECK(res.size() == 12);
        for (size_t i = 0; i < res.size(); ++i) {
            CAPTURE(k);
            CAPTURE(res[i].name);
            CHECK(res[i].number == static_cast<int>(i) + 1);
            CHECK(res[i].pass);
            CHECK(res[i].failures.empty());
            CHECK(res[i].cases > 0);
        }
    }
}

TEST_CASE("results do not depend on the worker count") {
    auto a = run_suite(4, 1), b = run_suite(4, 3);
    for (size_t i = 0; i < a.size(); ++i) {
        auto ja = a[i].to_json(), jb = b[i].to_json();
        ja.erase("seconds");
        jb.erase("seconds");
        CHECK(ja == jb);
    }
}

TEST_CASE("failures are recorded") {
    CheckResult r;
    for (int i = 0; i < 30; ++i) r.fail("x");
    CHECK_FALSE(r.pass);
    CHECK(r.failures.size() == 10);
    CHECK(r.to_json()["pass"] == false);
}
