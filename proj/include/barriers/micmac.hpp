#pragma once

#include <optional>
#include <vector>

#include "barriers/reachability.hpp"

namespace barriers::micmac {

enum class Quadrant : unsigned char { Autonomous, Dependent, Linkage, Independent };

const char* to_string(Quadrant q) noexcept;

struct QuadrantEntry {
    int factor = 0;  // 1-based
    int driving = 0;
    int dependence = 0;
    Quadrant quadrant{};
};

struct QuadrantAssignment {
    double mid = 0.0;
    std::vector<QuadrantEntry> entries;  // registry order
};

/// Classifies each factor from its final-reachability powers against the
/// midpoint (n/2 unless overridden). Power equal to the midpoint counts as
/// weak on both axes.
QuadrantAssignment classify(const ReachabilityMatrix& final_matrix,
                            std::optional<double> mid_override = std::nullopt);

}  // namespace barriers::micmac
