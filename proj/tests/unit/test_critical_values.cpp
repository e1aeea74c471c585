#include "bcv/binomial.hpp"
#include "bcv/critical_values.hpp"
#include "bcv/errors.hpp"
#include "bcv/reference_tables.hpp"

#include "../oracles/oracle.hpp"

#include "doctest.h"

#include <algorithm>

using bcv::CutLevel;
using bcv::ExactProbability;

namespace {

const ExactProbability third(1, 3);
const ExactProbability quarter(1, 4);
const CutLevel five = CutLevel::five_percent();
const CutLevel one = CutLevel::one_percent();

int crit(int N, const ExactProbability& p, const CutLevel& l, bcv::CriticalOptions o = {}) {
    const auto cv = bcv::bcv_n_critical(N, p, l, o);
    REQUIRE(cv.attainable);
    return cv.n_critical;
}

} // namespace

TEST_SUITE("critical") {

TEST_CASE("cut level bounds") {
    CHECK_THROWS_AS(CutLevel(ExactProbability(0, 1)), bcv::DomainError);
    CHECK_THROWS_AS(CutLevel(ExactProbability(1, 1)), bcv::DomainError);
    CHECK(CutLevel::parse("0.05") == five);
    CHECK(CutLevel::parse("1/100") == one);
}

TEST_CASE("worked example, N = 20") {
    CHECK(crit(20, third, five) == 11);
    CHECK(crit(20, third, one) == 12);
}

TEST_CASE("published cells") {
    CHECK(crit(100, quarter, one) == 35);
    CHECK(crit(100, third, five) == 39);
    CHECK(crit(20, quarter, five) == 9);
    CHECK(crit(20, quarter, one) == 10);
}

TEST_CASE("small panels follow the stated rule") {
    // pmf(4; 5, 1/3) = 10/243 <= 1/20, so 4 rather than the printed 5.
    CHECK(crit(5, third, five) == 4);
    CHECK(crit(5, quarter, five) == 4);
    CHECK(crit(6, quarter, five) == 4);
    // The optional floor reproduces the printed cells.
    CHECK(crit(5, third, five, {5}) == 5);
    CHECK(crit(6, quarter, five, {5}) == 5);
    CHECK(crit(20, third, five, {5}) == 11);
}

TEST_CASE("search stays above the mean") {
    // pmf(0; 20, 1/3) is tiny but 0 is below the mean.
    CHECK(bcv::pmf(0, bcv::BinomialParams(20, third)).value() < five.lambda().value());
    CHECK(crit(20, third, five) > 0);
    // Every pmf above the mean is <= 1/2 when N = 5, p = 1/2.
    CHECK(crit(5, ExactProbability(1, 2), CutLevel(ExactProbability(1, 2))) == 3);
}

TEST_CASE("unattainable and degenerate inputs") {
    // N = 1: the only count above the mean is 1 with pmf = p > lambda.
    const auto cv = bcv::bcv_n_critical(1, third, five);
    CHECK_FALSE(cv.attainable);
    CHECK_FALSE(bcv::bcv_n_critical(5, third, five, {6}).attainable);
    CHECK_THROWS_AS(bcv::bcv_n_critical(0, third, five), bcv::DomainError);
    CHECK_THROWS_AS(bcv::bcv_n_critical(10, ExactProbability(1, 1), five), bcv::DomainError);
}

TEST_CASE("definition check against brute force, N <= 200") {
    for (const auto& p : {third, quarter, ExactProbability(1, 2)}) {
        for (const auto& l : {five, one}) {
            for (int N = 1; N <= 200; ++N) {
                const auto cv = bcv::bcv_n_critical(N, p, l);
                const auto expected = oracle::n_critical(N, p.value(), l.lambda().value());
                INFO("N=" << N << " p=" << p.str() << " lambda=" << l.str());
                REQUIRE(cv.attainable == expected.has_value());
                if (!cv.attainable) continue;
                REQUIRE(cv.n_critical == *expected);
                const bcv::BinomialParams params(N, p);
                REQUIRE(bcv::pmf(cv.n_critical, params) <= l.lambda());
                if (cmp(mpq_class(cv.n_critical - 1), N * p.value()) > 0) {
                    REQUIRE(bcv::pmf(cv.n_critical - 1, params) > l.lambda());
                }
            }
        }
    }
}

TEST_CASE("monotone in lambda, p and N") {
    const auto t3 = bcv::generate_table({5, 400}, third, {five, one});
    const auto t4 = bcv::generate_table({5, 400}, quarter, {five, one});
    for (std::size_t i = 0; i < t3.rows.size(); ++i) {
        const auto& r3 = t3.rows[i].cells;
        const auto& r4 = t4.rows[i].cells;
        REQUIRE(r3[1].n_critical >= r3[0].n_critical);
        REQUIRE(r4[1].n_critical >= r4[0].n_critical);
        REQUIRE(r3[0].n_critical >= r4[0].n_critical);
        REQUIRE(r3[1].n_critical >= r4[1].n_critical);
        if (i > 0) {
            REQUIRE(r3[0].n_critical >= t3.rows[i - 1].cells[0].n_critical);
            REQUIRE(r4[1].n_critical >= t4.rows[i - 1].cells[1].n_critical);
        }
    }
}

TEST_CASE("table shape and thread independence") {
    const auto single = bcv::generate_table({1, 150}, third, {five, one}, {}, 1);
    const auto many = bcv::generate_table({1, 150}, third, {five, one}, {}, 4);
    REQUIRE(single.rows.size() == 150);
    CHECK(single.rows.front().N == 1);
    CHECK(single.rows.back().N == 150);
    for (std::size_t i = 0; i < single.rows.size(); ++i) CHECK(single.rows[i].cells == many.rows[i].cells);

    CHECK_THROWS_AS(bcv::generate_table({0, 10}, third, {five}), bcv::DomainError);
    CHECK_THROWS_AS(bcv::generate_table({1, 10001}, third, {five}), bcv::DomainError);
    CHECK_THROWS_AS(bcv::generate_table({10, 5}, third, {five}), bcv::DomainError);
}

TEST_CASE("panel range parsing") {
    CHECK(bcv::PanelRange::parse("5:100").first == 5);
    CHECK(bcv::PanelRange::parse("5:100").last == 100);
    CHECK(bcv::PanelRange::parse("20").size() == 1);
    CHECK_THROWS_AS(bcv::PanelRange::parse("a:b"), bcv::DomainError);
    CHECK_THROWS_AS(bcv::PanelRange::parse("5:"), bcv::DomainError);
}

TEST_CASE("discrepancy report") {
    const auto ref3 = bcv::reference::three_option_table();
    const auto ref4 = bcv::reference::four_option_table();
    CHECK(bcv::discrepancy_report(ref3, ref3).empty());

    const auto gen3 = bcv::generate_table({5, 100}, third, {five, one});
    const auto d3 = bcv::discrepancy_report(gen3, ref3);
    CHECK(std::find(d3.begin(), d3.end(), bcv::Discrepancy{5, five, 4, 5}) != d3.end());

    const auto gen4 = bcv::generate_table({5, 100}, quarter, {five, one});
    const auto d4 = bcv::discrepancy_report(gen4, ref4);
    CHECK(std::find(d4.begin(), d4.end(), bcv::Discrepancy{5, five, 4, 5}) != d4.end());
    CHECK(std::find(d4.begin(), d4.end(), bcv::Discrepancy{6, five, 4, 5}) != d4.end());

    CHECK_THROWS_AS(bcv::discrepancy_report(gen3, ref4), bcv::DomainError);
    CHECK_THROWS_AS(bcv::discrepancy_report(bcv::generate_table({5, 99}, third, {five, one}), ref3),
                    bcv::DomainError);
    CHECK_THROWS_AS(bcv::discrepancy_report(bcv::generate_table({5, 100}, third, {one, five}), ref3),
                    bcv::DomainError);
}

} // TEST_SUITE
