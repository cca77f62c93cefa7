#include "doctest.h"

#include "patience/errors.hpp"
#include "patience/verify.hpp"

using namespace patience;

TEST_CASE("suite names") {
    CHECK(suite_names() == std::vector<std::string>{"thm2.2", "cor2.4", "prop3.1", "prop3.2", "cor3.4", "thm3.5",
                                                    "thm3.6", "thm3.7", "thm3.9", "series"});
}

TEST_CASE("passing suites") {
    for (const char* name : {"thm2.2", "cor3.4", "thm3.5", "thm3.7"}) {
        const SuiteReport r = run_suite(name, 7);
        CHECK_MESSAGE(r.passed(), format_report(r));
        CHECK_FALSE(r.properties.empty());
    }
    CHECK(run_suite("thm3.9", 20).passed());
    CHECK(run_suite("series", 10).passed());
}

TEST_CASE("suites with failing literal statements") {
    for (const char* name : {"cor2.4", "prop3.1", "prop3.2", "thm3.6"}) {
        const SuiteReport r = run_suite(name, 7);
        CHECK_FALSE(r.passed());
        bool some_pass = false;
        for (const PropertyResult& p : r.properties) {
            some_pass = some_pass || p.passed;
            if (!p.passed) CHECK_FALSE(p.detail.empty());
        }
        CHECK(some_pass);
    }
    const SuiteReport r = run_suite("thm3.6", 7);
    const std::string text = format_report(r);
    CHECK(text.find("5764132") != std::string::npos);
    CHECK(run_suite("thm3.6", 6).properties.front().passed);
}

TEST_CASE("report layout") {
    const std::string text = format_report(run_suite("thm3.7", 5));
    CHECK(text.rfind("thm3.7: ", 0) == 0);
    CHECK(text.find("(n <= 5)") != std::string::npos);
    CHECK(text.find("\nPASS") != std::string::npos);
    CHECK(text.back() == '\n');
}

TEST_CASE("suite argument errors") {
    CHECK_THROWS_AS(run_suite("thm9.9", 5), ParseError);
    CHECK_THROWS_AS(run_suite("thm3.7", 0), ParseError);
    CHECK_THROWS_AS(run_suite("thm3.7", 11), OracleBoundExceeded);
}
