#pragma once

#include <string_view>
#include <vector>

namespace barriers {

/// Reachability cell with provenance: OneStar marks a link that was absent
/// in the initial matrix and derived by transitivity (the tables' `1*`).
enum class Reach : unsigned char { Zero, One, OneStar };

std::string_view reach_literal(Reach r) noexcept;  // "0", "1", "1*"

/// Boolean reachability matrix over the registry order, with per-cell
/// provenance and cached driving (row) / dependence (column) powers.
/// The diagonal is always One: every factor reaches itself.
class ReachabilityMatrix {
public:
    ReachabilityMatrix(int n, std::vector<Reach> cells);  // row-major, size n*n

    int size() const noexcept { return n_; }

    Reach at(int i, int j) const;  // 1-based, range-checked

    bool reaches(int i, int j) const { return at(i, j) != Reach::Zero; }

    bool has_stars() const noexcept;

    /// Count of non-Zero cells per row / per column (1-based factor order,
    /// stored 0-based).
    const std::vector<int>& driving_powers() const noexcept { return driving_; }
    const std::vector<int>& dependence_powers() const noexcept { return dependence_; }

    const std::vector<Reach>& cells() const noexcept { return cells_; }

    friend bool operator==(const ReachabilityMatrix& a, const ReachabilityMatrix& b) {
        return a.n_ == b.n_ && a.cells_ == b.cells_;
    }

private:
    int n_ = 0;
    std::vector<Reach> cells_;
    std::vector<int> driving_;
    std::vector<int> dependence_;
};

/// One factor's assignment in the ISM level iteration, with the
/// reachability / antecedent / intersection sets as they stood in the
/// round that assigned it (restricted to the factors still unassigned).
struct LevelRecord {
    int factor = 0;  // 1-based
    int level = 0;   // 1-based
    std::vector<int> reachability_set;
    std::vector<int> antecedent_set;
    std::vector<int> intersection_set;
};

/// Complete level assignment: every factor exactly once, levels 1..L.
class LevelPartition {
public:
    explicit LevelPartition(std::vector<LevelRecord> records);

    int level_of(int factor) const;  // 1-based factor
    int level_count() const noexcept { return level_count_; }
    int size() const noexcept { return static_cast<int>(records_.size()); }

    /// Records ordered by factor index.
    const std::vector<LevelRecord>& records() const noexcept { return records_; }

    /// Factors at a level, ascending index.
    std::vector<int> factors_at(int level) const;

private:
    std::vector<LevelRecord> records_;
    int level_count_ = 0;
};

}  // namespace barriers
