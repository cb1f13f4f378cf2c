#include "barriers/reachability.hpp"

#include <algorithm>
#include <string>

#include "barriers/errors.hpp"

namespace barriers {

std::string_view reach_literal(Reach r) noexcept {
    switch (r) {
    case Reach::Zero: return "0";
    case Reach::One: return "1";
    case Reach::OneStar: return "1*";
    }
    return "?";
}

ReachabilityMatrix::ReachabilityMatrix(int n, std::vector<Reach> cells)
    : n_(n), cells_(std::move(cells)) {
    if (n_ < 1 || cells_.size() != static_cast<std::size_t>(n_) * n_) {
        throw Error(ErrorCategory::Input, "model", "reachability matrix size mismatch");
    }
    driving_.assign(n_, 0);
    dependence_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) {
        if (cells_[static_cast<std::size_t>(i) * n_ + i] != Reach::One) {
            throw Error(ErrorCategory::Input, "model",
                        "reachability diagonal must be 1 at factor " + std::to_string(i + 1));
        }
        for (int j = 0; j < n_; ++j) {
            if (cells_[static_cast<std::size_t>(i) * n_ + j] != Reach::Zero) {
                ++driving_[i];
                ++dependence_[j];
            }
        }
    }
}

Reach ReachabilityMatrix::at(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
        throw Error(ErrorCategory::Input, "model",
                    "reachability index (" + std::to_string(i) + "," + std::to_string(j) +
                        ") out of range 1.." + std::to_string(n_));
    }
    return cells_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

bool ReachabilityMatrix::has_stars() const noexcept {
    return std::find(cells_.begin(), cells_.end(), Reach::OneStar) != cells_.end();
}

LevelPartition::LevelPartition(std::vector<LevelRecord> records)
    : records_(std::move(records)) {
    std::sort(records_.begin(), records_.end(),
              [](const LevelRecord& a, const LevelRecord& b) { return a.factor < b.factor; });
    const int n = static_cast<int>(records_.size());
    if (n < 1) {
        throw Error(ErrorCategory::Input, "model", "level partition is empty");
    }
    for (int i = 0; i < n; ++i) {
        if (records_[i].factor != i + 1) {
            throw Error(ErrorCategory::Input, "model",
                        "level partition must cover factors 1.." + std::to_string(n) +
                            " exactly once");
        }
        level_count_ = std::max(level_count_, records_[i].level);
    }
    std::vector<char> seen(static_cast<std::size_t>(level_count_) + 1, 0);
    for (const LevelRecord& r : records_) {
        if (r.level < 1) {
            throw Error(ErrorCategory::Input, "model", "levels are 1-based");
        }
        seen[static_cast<std::size_t>(r.level)] = 1;
    }
    for (int l = 1; l <= level_count_; ++l) {
        if (!seen[static_cast<std::size_t>(l)]) {
            throw Error(ErrorCategory::Input, "model",
                        "levels must form a contiguous range; level " + std::to_string(l) +
                            " is empty");
        }
    }
}

int LevelPartition::level_of(int factor) const {
    if (factor < 1 || factor > size()) {
        throw Error(ErrorCategory::Input, "model",
                    "factor " + std::to_string(factor) + " out of range");
    }
    return records_[static_cast<std::size_t>(factor) - 1].level;
}

std::vector<int> LevelPartition::factors_at(int level) const {
    std::vector<int> out;
    for (const LevelRecord& r : records_) {
        if (r.level == level) out.push_back(r.factor);
    }
    return out;
}

}  // namespace barriers
