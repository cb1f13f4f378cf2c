#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "barriers/influence.hpp"
#include "barriers/relation.hpp"

namespace barriers::survey {

/// One expert's complete answers. Either part may be absent when only one
/// section of the response file was loaded (stage isolation: the ISM path
/// never touches scores, the DEMATEL path never touches judgments).
struct ExpertResponse {
    std::string expert_id;
    std::optional<SsimMatrix> ssim;
    std::optional<InfluenceMatrix> scores;  // role ExpertResponse
};

enum class ConsistencyRule : unsigned char { V_RULE, A_RULE, X_RULE, O_RULE };

const char* to_string(ConsistencyRule rule) noexcept;

struct ConsistencyViolation {
    std::string expert_id;
    int i = 0;  // pair, i < j
    int j = 0;
    ConsistencyRule rule{};
    std::string detail;
};

struct ConsistencyReport {
    std::string expert_id;
    std::vector<ConsistencyViolation> violations;

    bool clean() const noexcept { return violations.empty(); }
};

struct ReliabilityResult {
    int item_count = 0;
    std::vector<double> item_variances;
    double total_variance = 0.0;
    double alpha = 0.0;
    bool acceptable = false;  // alpha >= 0.7
};

/// Modal symbol per pair across experts; ties resolved V > A > X > O.
SsimMatrix aggregate_ssim(std::span<const ExpertResponse> responses);

/// Cell-wise arithmetic mean of the expert score matrices.
InfluenceMatrix aggregate_average(std::span<const ExpertResponse> responses);

/// Cross-checks one expert's judgments against their scores:
///   V => x_ij >= 1,  A => x_ji >= 1,  X => both sides >= 1,
///   O => both sides exactly 0.
/// Never throws; every failed side yields one violation record.
ConsistencyReport check_consistency(const ExpertResponse& response);

/// Flattens each expert's off-diagonal scores into one row per respondent,
/// row-major cell order. These are the questionnaire items for alpha.
std::vector<std::vector<double>> score_table(std::span<const ExpertResponse> responses);

/// Cronbach's alpha over a respondents x items score table, population
/// variances. Throws Error(Numeric) when the total-score variance is zero.
ReliabilityResult cronbach_alpha(const std::vector<std::vector<double>>& respondent_scores);

/// alpha = k/(k-1) * (1 - sum_item_variances / total_variance), for use
/// when the variance components are known directly.
ReliabilityResult alpha_from_components(int item_count, double sum_item_variances,
                                        double total_variance);

}  // namespace barriers::survey
