#include "barriers/survey.hpp"

#include <array>
#include <cmath>
#include <string>

#include "barriers/errors.hpp"

namespace barriers::survey {

namespace {

int common_size(std::span<const ExpertResponse> responses, bool need_ssim, bool need_scores) {
    if (responses.empty()) {
        throw Error(ErrorCategory::Input, "survey", "no responses to aggregate");
    }
    int n = 0;
    for (const ExpertResponse& r : responses) {
        int rn = 0;
        if (need_ssim) {
            if (!r.ssim) {
                throw Error(ErrorCategory::Input, "survey",
                            "response '" + r.expert_id + "' has no SSIM judgments loaded");
            }
            rn = r.ssim->size();
        }
        if (need_scores) {
            if (!r.scores) {
                throw Error(ErrorCategory::Input, "survey",
                            "response '" + r.expert_id + "' has no influence scores loaded");
            }
            rn = r.scores->size();
        }
        if (n == 0) {
            n = rn;
        } else if (rn != n) {
            throw Error(ErrorCategory::Input, "survey",
                        "response '" + r.expert_id + "' has n=" + std::to_string(rn) +
                            ", expected n=" + std::to_string(n));
        }
    }
    return n;
}

}  // namespace

const char* to_string(ConsistencyRule rule) noexcept {
    switch (rule) {
    case ConsistencyRule::V_RULE: return "V_RULE";
    case ConsistencyRule::A_RULE: return "A_RULE";
    case ConsistencyRule::X_RULE: return "X_RULE";
    case ConsistencyRule::O_RULE: return "O_RULE";
    }
    return "?";
}

SsimMatrix aggregate_ssim(std::span<const ExpertResponse> responses) {
    const int n = common_size(responses, /*need_ssim=*/true, /*need_scores=*/false);
    std::vector<RelationSymbol> upper(SsimMatrix::pair_count(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            std::array<int, 4> votes{};
            for (const ExpertResponse& r : responses) {
                ++votes[static_cast<std::size_t>(r.ssim->at(i, j))];
            }
            // Most frequent symbol; enum order V > A > X > O settles ties.
            int best = 0;
            for (int s = 1; s < 4; ++s) {
                if (votes[static_cast<std::size_t>(s)] > votes[static_cast<std::size_t>(best)]) {
                    best = s;
                }
            }
            upper[SsimMatrix::pair_slot(n, i, j)] = static_cast<RelationSymbol>(best);
        }
    }
    return SsimMatrix(n, std::move(upper));
}

InfluenceMatrix aggregate_average(std::span<const ExpertResponse> responses) {
    const int n = common_size(responses, /*need_ssim=*/false, /*need_scores=*/true);
    const double count = static_cast<double>(responses.size());
    std::vector<double> sums(static_cast<std::size_t>(n) * n, 0.0);
    for (const ExpertResponse& r : responses) {
        const std::vector<double>& v = r.scores->values();
        for (std::size_t k = 0; k < sums.size(); ++k) sums[k] += v[k];
    }
    for (double& s : sums) s /= count;
    return InfluenceMatrix(ScoreRole::Average, n, std::move(sums));
}

ConsistencyReport check_consistency(const ExpertResponse& response) {
    if (!response.ssim || !response.scores) {
        throw Error(ErrorCategory::Input, "survey",
                    "consistency check needs both sections of response '" +
                        response.expert_id + "'");
    }
    const int n = response.ssim->size();
    if (response.scores->size() != n) {
        throw Error(ErrorCategory::Input, "survey",
                    "response '" + response.expert_id + "' sections disagree on n");
    }

    ConsistencyReport report;
    report.expert_id = response.expert_id;
    auto cell = [](int i, int j) {
        return "x(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    auto add = [&](int i, int j, ConsistencyRule rule, const std::string& detail) {
        report.violations.push_back({response.expert_id, i, j, rule, detail});
    };

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const double fwd = response.scores->at(i, j);
            const double rev = response.scores->at(j, i);
            switch (response.ssim->at(i, j)) {
            case RelationSymbol::V:
                if (fwd < 1.0) add(i, j, ConsistencyRule::V_RULE, cell(i, j) + " must be >= 1");
                break;
            case RelationSymbol::A:
                if (rev < 1.0) add(i, j, ConsistencyRule::A_RULE, cell(j, i) + " must be >= 1");
                break;
            case RelationSymbol::X:
                if (fwd < 1.0) add(i, j, ConsistencyRule::X_RULE, cell(i, j) + " must be >= 1");
                if (rev < 1.0) add(i, j, ConsistencyRule::X_RULE, cell(j, i) + " must be >= 1");
                break;
            case RelationSymbol::O:
                if (fwd != 0.0) add(i, j, ConsistencyRule::O_RULE, cell(i, j) + " must be 0");
                if (rev != 0.0) add(i, j, ConsistencyRule::O_RULE, cell(j, i) + " must be 0");
                break;
            }
        }
    }
    return report;
}

std::vector<std::vector<double>> score_table(std::span<const ExpertResponse> responses) {
    const int n = common_size(responses, /*need_ssim=*/false, /*need_scores=*/true);
    std::vector<std::vector<double>> table;
    table.reserve(responses.size());
    for (const ExpertResponse& r : responses) {
        std::vector<double> row;
        row.reserve(static_cast<std::size_t>(n) * (n - 1));
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i != j) row.push_back(r.scores->at(i, j));
            }
        }
        table.push_back(std::move(row));
    }
    return table;
}

ReliabilityResult cronbach_alpha(const std::vector<std::vector<double>>& respondent_scores) {
    const std::size_t respondents = respondent_scores.size();
    if (respondents < 2) {
        throw Error(ErrorCategory::Input, "survey",
                    "alpha needs at least 2 respondents, got " + std::to_string(respondents));
    }
    const std::size_t items = respondent_scores.front().size();
    if (items < 2) {
        throw Error(ErrorCategory::Input, "survey",
                    "alpha needs at least 2 items, got " + std::to_string(items));
    }
    for (const auto& row : respondent_scores) {
        if (row.size() != items) {
            throw Error(ErrorCategory::Input, "survey",
                        "every respondent must score every item");
        }
    }

    // Population variances (divide by N).
    auto variance = [&](auto&& value_of) {
        double mean = 0.0;
        for (std::size_t r = 0; r < respondents; ++r) mean += value_of(r);
        mean /= static_cast<double>(respondents);
        double ss = 0.0;
        for (std::size_t r = 0; r < respondents; ++r) {
            const double d = value_of(r) - mean;
            ss += d * d;
        }
        return ss / static_cast<double>(respondents);
    };

    ReliabilityResult result;
    result.item_count = static_cast<int>(items);
    result.item_variances.reserve(items);
    double sum_item_var = 0.0;
    for (std::size_t item = 0; item < items; ++item) {
        const double v = variance([&](std::size_t r) { return respondent_scores[r][item]; });
        result.item_variances.push_back(v);
        sum_item_var += v;
    }
    result.total_variance = variance([&](std::size_t r) {
        double total = 0.0;
        for (double x : respondent_scores[r]) total += x;
        return total;
    });

    if (result.total_variance <= 0.0) {
        throw Error(ErrorCategory::Numeric, "survey",
                    "degenerate survey data: total-score variance is zero, alpha undefined");
    }

    const double k = static_cast<double>(items);
    result.alpha = k / (k - 1.0) * (1.0 - sum_item_var / result.total_variance);
    result.acceptable = result.alpha >= 0.7;
    return result;
}

ReliabilityResult alpha_from_components(int item_count, double sum_item_variances,
                                        double total_variance) {
    if (item_count < 2) {
        throw Error(ErrorCategory::Input, "survey", "alpha needs k >= 2");
    }
    if (total_variance <= 0.0) {
        throw Error(ErrorCategory::Numeric, "survey",
                    "degenerate survey data: total-score variance is zero, alpha undefined");
    }
    ReliabilityResult result;
    result.item_count = item_count;
    result.total_variance = total_variance;
    const double k = static_cast<double>(item_count);
    result.alpha = k / (k - 1.0) * (1.0 - sum_item_variances / total_variance);
    result.acceptable = result.alpha >= 0.7;
    return result;
}

}  // namespace barriers::survey
