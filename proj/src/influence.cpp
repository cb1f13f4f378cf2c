#include "barriers/influence.hpp"

#include <cmath>
#include <string>

#include "barriers/errors.hpp"

namespace barriers {

const char* to_string(ScoreRole role) noexcept {
    switch (role) {
    case ScoreRole::ExpertResponse: return "expert_response";
    case ScoreRole::Average: return "average";
    case ScoreRole::Normalized: return "normalized";
    case ScoreRole::TotalRelation: return "total_relation";
    }
    return "?";
}

InfluenceMatrix::InfluenceMatrix(ScoreRole role, int n, std::vector<double> values,
                                 std::vector<Decimal> source)
    : role_(role), n_(n), values_(std::move(values)), source_(std::move(source)) {
    const std::size_t cells = static_cast<std::size_t>(n_) * n_;
    if (n_ < 1 || values_.size() != cells) {
        throw Error(ErrorCategory::Input, "model",
                    std::string("score matrix size mismatch for role ") + to_string(role_));
    }
    if (!source_.empty() && source_.size() != cells) {
        throw Error(ErrorCategory::Input, "model", "source decimals must cover every cell");
    }
    const bool zero_diagonal =
        role_ == ScoreRole::ExpertResponse || role_ == ScoreRole::Average;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            const double v = values_[static_cast<std::size_t>(i) * n_ + j];
            const std::string cell =
                "cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw Error(ErrorCategory::Input, "model",
                            cell + ": scores must be finite and non-negative");
            }
            if (zero_diagonal && i == j && v != 0.0) {
                throw Error(ErrorCategory::Input, "model",
                            cell + ": diagonal must be 0 for role " +
                                std::string(to_string(role_)));
            }
            if (role_ == ScoreRole::ExpertResponse &&
                (v != std::floor(v) || v > 4.0)) {
                throw Error(ErrorCategory::Input, "model",
                            cell + ": expert scores must be integers in 0..4");
            }
        }
    }
}

InfluenceMatrix InfluenceMatrix::zeros(ScoreRole role, int n) {
    return InfluenceMatrix(role, n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0));
}

double InfluenceMatrix::at(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
        throw Error(ErrorCategory::Input, "model",
                    "matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                        ") out of range 1.." + std::to_string(n_));
    }
    return values_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

const Decimal* InfluenceMatrix::source_at(int i, int j) const {
    if (source_.empty()) return nullptr;
    at(i, j);  // range check
    return &source_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

}  // namespace barriers
