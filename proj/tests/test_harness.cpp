#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include "elena/verify.hpp"

using namespace elena;

namespace {

std::string report_text(const Report& report) {
    std::ostringstream out;
    report.write(out);
    return out.str();
}

} // namespace

TEST_CASE("record line format") {
    CheckRecord rec;
    rec.claim = "even.roundtrip";
    rec.n = 4;
    rec.expected = "5";
    rec.actual = "4";
    rec.witness = "DDUU";
    rec.pass = false;
    CHECK(rec.line() == "check=even.roundtrip n=4 expected=5 actual=4 witness='DDUU' status=FAIL");
    rec.pass = true;
    rec.actual = "5";
    rec.witness.clear();
    CHECK(rec.line() == "check=even.roundtrip n=4 expected=5 actual=5 witness='' status=pass");
}

TEST_CASE("count verification passes and is deterministic") {
    const Report report = verify_counts(12);
    CHECK(report.all_pass());
    CHECK(report.failure_count() == 0);
    // 8 family checks plus the union identity for each of n = 0..12.
    CHECK(report.records.size() == 13 * 9);
    CHECK(report_text(report) == report_text(verify_counts(12)));

    const bool sorted = std::is_sorted(report.records.begin(), report.records.end(),
                                       [](const CheckRecord& a, const CheckRecord& b) {
                                           return a.claim != b.claim ? a.claim < b.claim
                                                                     : a.n < b.n;
                                       });
    CHECK(sorted);
}

TEST_CASE("count verification carries the agreed numbers") {
    const Report report = verify_counts(4);
    bool found = false;
    for (const CheckRecord& rec : report.records) {
        if (rec.claim == "count.B.0" && rec.n == 4) {
            found = true;
            CHECK(rec.expected == "5");
            CHECK(rec.actual == "5");
            CHECK(rec.pass);
        }
    }
    CHECK(found);
}

TEST_CASE("count verification at the length-0 boundary") {
    const Report report = verify_counts(0);
    CHECK(report.all_pass());
    CHECK(report.records.size() == 9);
}

TEST_CASE("bijection verification passes") {
    const Report report = verify_bijections(12);
    CHECK(report.all_pass());
    // Even lengths contribute ten records each, odd lengths five.
    CHECK(report.records.size() == 7 * 10 + 6 * 5);
    CHECK(report_text(report) == report_text(verify_bijections(12)));

    int even_image = 0, odd_image = 0;
    for (const CheckRecord& rec : report.records) {
        if (rec.claim == "even.image") {
            ++even_image;
            if (rec.n == 12) CHECK(rec.expected == "A0=89,A2=144");
        }
        if (rec.claim == "odd.image") {
            ++odd_image;
            if (rec.n == 11) CHECK(rec.expected == "A1=89,A3=55");
        }
    }
    CHECK(even_image == 7);
    CHECK(odd_image == 6);
}

TEST_CASE("bijection verification at the boundary") {
    const Report report = verify_bijections(0);
    CHECK(report.all_pass());
    CHECK(report.records.size() == 10);
    for (const CheckRecord& rec : report.records) CHECK(rec.n == 0);
}
