#include "barriers/micmac.hpp"

namespace barriers::micmac {

const char* to_string(Quadrant q) noexcept {
    switch (q) {
    case Quadrant::Autonomous: return "Autonomous";
    case Quadrant::Dependent: return "Dependent";
    case Quadrant::Linkage: return "Linkage";
    case Quadrant::Independent: return "Independent";
    }
    return "?";
}

QuadrantAssignment classify(const ReachabilityMatrix& frm,
                            std::optional<double> mid_override) {
    const int n = frm.size();
    QuadrantAssignment out;
    out.mid = mid_override.value_or(static_cast<double>(n) / 2.0);
    out.entries.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        QuadrantEntry e;
        e.factor = i;
        e.driving = frm.driving_powers()[static_cast<std::size_t>(i - 1)];
        e.dependence = frm.dependence_powers()[static_cast<std::size_t>(i - 1)];
        const bool strong_driving = e.driving > out.mid;
        const bool strong_dependence = e.dependence > out.mid;
        if (strong_driving) {
            e.quadrant = strong_dependence ? Quadrant::Linkage : Quadrant::Independent;
        } else {
            e.quadrant = strong_dependence ? Quadrant::Dependent : Quadrant::Autonomous;
        }
        out.entries.push_back(e);
    }
    return out;
}

}  // namespace barriers::micmac
