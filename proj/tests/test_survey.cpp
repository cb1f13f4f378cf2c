#include <doctest.h>

#include <cmath>
#include <random>

#include "barriers/errors.hpp"
#include "barriers/survey.hpp"
#include "support/fixture_bundle.hpp"
#include "support/oracles.hpp"
#include "support/paper_tables.hpp"
#include "support/random_instances.hpp"

using namespace barriers;
using namespace barriers::survey;

namespace {

ExpertResponse tiny_response(const std::string& id, RelationSymbol s12, double x12,
                             double x21) {
    ExpertResponse r;
    r.expert_id = id;
    r.ssim = SsimMatrix(2, {s12});
    r.scores = InfluenceMatrix(ScoreRole::ExpertResponse, 2, {0.0, x12, x21, 0.0});
    return r;
}

}  // namespace

TEST_CASE("ssim aggregation is the per-cell mode") {
    std::vector<ExpertResponse> single = {tiny_response("e1", RelationSymbol::A, 0, 3)};
    CHECK(aggregate_ssim(single).at(1, 2) == RelationSymbol::A);

    // 5 V, 5 A, 2 X: the declared tie order V > A > X > O picks V.
    std::vector<ExpertResponse> tied;
    for (int k = 0; k < 5; ++k) tied.push_back(tiny_response("v", RelationSymbol::V, 1, 0));
    for (int k = 0; k < 5; ++k) tied.push_back(tiny_response("a", RelationSymbol::A, 0, 1));
    for (int k = 0; k < 2; ++k) tied.push_back(tiny_response("x", RelationSymbol::X, 1, 1));
    CHECK(aggregate_ssim(tied).at(1, 2) == RelationSymbol::V);

    CHECK_THROWS_AS(aggregate_ssim({}), Error);
}

TEST_CASE("ssim aggregation over the synthesized panel reproduces the study matrix") {
    auto responses = fixtures::make_expert_responses();
    REQUIRE(responses.size() == 12);
    SsimMatrix aggregated = aggregate_ssim(responses);
    SsimMatrix expected = fixtures::make_ssim();
    CHECK(aggregated == expected);
    CHECK(aggregated.at(1, 2) == RelationSymbol::V);
    CHECK(aggregated.at(2, 3) == RelationSymbol::A);
    CHECK(aggregated.at(4, 5) == RelationSymbol::X);
    CHECK(aggregated.at(2, 7) == RelationSymbol::O);
}

TEST_CASE("average aggregation") {
    std::vector<ExpertResponse> one = {tiny_response("e1", RelationSymbol::V, 3, 0)};
    InfluenceMatrix avg1 = aggregate_average(one);
    CHECK(avg1.role() == ScoreRole::Average);
    CHECK(avg1.at(1, 2) == 3.0);

    std::vector<ExpertResponse> two = {tiny_response("e1", RelationSymbol::V, 1, 0),
                                       tiny_response("e2", RelationSymbol::V, 4, 0)};
    CHECK(aggregate_average(two).at(1, 2) == doctest::Approx(2.5).epsilon(1e-15));

    CHECK_THROWS_AS(aggregate_average({}), Error);
}

TEST_CASE("average of the synthesized panel lands on the published table") {
    auto responses = fixtures::make_expert_responses();
    InfluenceMatrix average = aggregate_average(responses);
    InfluenceMatrix table = fixtures::make_average();
    CHECK(average.at(1, 2) == doctest::Approx(2.250).epsilon(1e-12));   // (RC, HIC)
    CHECK(average.at(13, 2) == doctest::Approx(3.250).epsilon(1e-12));  // (CCN, HIC)
    for (int i = 1; i <= fixtures::kN; ++i) {
        for (int j = 1; j <= fixtures::kN; ++j) {
            CHECK(std::fabs(average.at(i, j) - table.at(i, j)) <= 0.0005);
        }
    }
}

TEST_CASE("consistency rules, side by side") {
    CHECK(check_consistency(tiny_response("ok", RelationSymbol::V, 3, 0)).clean());

    ConsistencyReport o_breach = check_consistency(tiny_response("o", RelationSymbol::O, 1, 0));
    REQUIRE(o_breach.violations.size() == 1);
    CHECK(o_breach.violations[0].rule == ConsistencyRule::O_RULE);
    CHECK(o_breach.violations[0].detail == "x(1,2) must be 0");

    ConsistencyReport x_breach = check_consistency(tiny_response("x", RelationSymbol::X, 2, 0));
    REQUIRE(x_breach.violations.size() == 1);
    CHECK(x_breach.violations[0].rule == ConsistencyRule::X_RULE);
    CHECK(x_breach.violations[0].detail == "x(2,1) must be >= 1");

    ConsistencyReport a_breach = check_consistency(tiny_response("a", RelationSymbol::A, 0, 0));
    REQUIRE(a_breach.violations.size() == 1);
    CHECK(a_breach.violations[0].rule == ConsistencyRule::A_RULE);

    // V constrains only the forward cell.
    CHECK(check_consistency(tiny_response("v", RelationSymbol::V, 1, 4)).clean());
}

TEST_CASE("responses derived from their own scores never violate") {
    std::mt19937 rng(11);
    for (int round = 0; round < 50; ++round) {
        const int n = 2 + static_cast<int>(rng() % 12);
        auto response = generators::consistent_response(rng, n, "gen");
        CHECK(check_consistency(response).clean());
    }
    for (const auto& response : fixtures::make_expert_responses()) {
        CHECK(check_consistency(response).clean());
    }
}

TEST_CASE("cronbach alpha on the published study components") {
    ReliabilityResult r = alpha_from_components(
        fixtures::kAlphaItems, fixtures::kSumItemVariances, fixtures::kTotalVariance);
    CHECK(r.alpha >= fixtures::kAlphaLow);
    CHECK(r.alpha <= fixtures::kAlphaHigh);
    CHECK(r.acceptable);
}

TEST_CASE("cronbach alpha from a score table") {
    // Two perfectly correlated items of equal variance.
    std::vector<std::vector<double>> perfect = {{0, 0}, {1, 1}, {2, 2}, {4, 4}};
    ReliabilityResult r = cronbach_alpha(perfect);
    CHECK(r.alpha == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.item_count == 2);

    // Totals identical across respondents: degenerate.
    std::vector<std::vector<double>> degenerate = {{0, 4}, {4, 0}};
    CHECK_THROWS_AS(cronbach_alpha(degenerate), Error);
    try {
        cronbach_alpha(degenerate);
    } catch (const Error& e) {
        CHECK(e.category() == ErrorCategory::Numeric);
        CHECK(e.exit_code() == 4);
    }

    CHECK_THROWS_AS(cronbach_alpha({{1, 2}}), Error);
    CHECK_THROWS_AS(cronbach_alpha({{1}, {2}}), Error);
    CHECK_THROWS_AS(alpha_from_components(156, 67.88, 0.0), Error);
}

TEST_CASE("alpha agrees with the naive double-loop within 1e-12") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> score(0, 4);
    for (int round = 0; round < 30; ++round) {
        const std::size_t respondents = 3 + rng() % 8;
        const std::size_t items = 2 + rng() % 15;
        std::vector<std::vector<double>> table(respondents, std::vector<double>(items));
        for (auto& row : table) {
            for (auto& cell : row) cell = score(rng);
        }
        double naive;
        try {
            naive = oracles::naive_alpha(table);
        } catch (...) {
            continue;
        }
        if (!std::isfinite(naive)) continue;
        ReliabilityResult r;
        try {
            r = cronbach_alpha(table);
        } catch (const Error&) {
            continue;  // degenerate draw
        }
        CHECK(std::fabs(r.alpha - naive) < 1e-12);
    }
}

TEST_CASE("aggregate_average is linear across partitions") {
    std::mt19937 rng(31);
    for (int round = 0; round < 20; ++round) {
        const int n = 2 + static_cast<int>(rng() % 8);
        std::vector<ExpertResponse> all;
        const std::size_t count = 2 + rng() % 9;
        for (std::size_t k = 0; k < count; ++k) {
            all.push_back(generators::consistent_response(rng, n, "e" + std::to_string(k)));
        }
        const std::size_t cut = 1 + rng() % (count - 1);
        std::vector<ExpertResponse> left(all.begin(), all.begin() + static_cast<long>(cut));
        std::vector<ExpertResponse> right(all.begin() + static_cast<long>(cut), all.end());

        InfluenceMatrix whole = aggregate_average(all);
        InfluenceMatrix a = aggregate_average(left);
        InfluenceMatrix b = aggregate_average(right);
        const double wa = static_cast<double>(left.size()) / static_cast<double>(count);
        const double wb = static_cast<double>(right.size()) / static_cast<double>(count);
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                CHECK(whole.at(i, j) ==
                      doctest::Approx(wa * a.at(i, j) + wb * b.at(i, j)).epsilon(1e-12));
            }
        }
    }
}
