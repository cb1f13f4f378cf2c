#pragma once

#include <vector>

#include "barriers/decimal.hpp"

namespace barriers {

/// Which stage of the analysis a score matrix belongs to. The role decides
/// which invariants hold (zero diagonal, integer 0..4 cells).
enum class ScoreRole : unsigned char {
    ExpertResponse,  // one expert's raw 0..4 scores
    Average,         // mean over experts
    Normalized,      // average / divisor
    TotalRelation,   // D (I - D)^-1
};

const char* to_string(ScoreRole role) noexcept;

/// n x n non-negative score matrix. Values live as full-precision doubles;
/// when the matrix was parsed from text the exact source decimals are kept
/// alongside so serialization round-trips byte-identically.
class InfluenceMatrix {
public:
    /// `values` row-major, size n*n. `source` empty or size n*n.
    /// Validates non-negativity plus the role invariants; throws
    /// Error(Input) on breach.
    InfluenceMatrix(ScoreRole role, int n, std::vector<double> values,
                    std::vector<Decimal> source = {});

    static InfluenceMatrix zeros(ScoreRole role, int n);

    ScoreRole role() const noexcept { return role_; }
    int size() const noexcept { return n_; }

    double at(int i, int j) const;  // 1-based, range-checked

    /// Exact parsed source cell, or nullptr for computed matrices.
    const Decimal* source_at(int i, int j) const;

    const std::vector<double>& values() const noexcept { return values_; }

private:
    ScoreRole role_;
    int n_ = 0;
    std::vector<double> values_;
    std::vector<Decimal> source_;
};

}  // namespace barriers
