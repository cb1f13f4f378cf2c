#include "barriers/registry.hpp"

#include <unordered_set>

#include "barriers/errors.hpp"

namespace barriers {

BarrierRegistry::BarrierRegistry(std::vector<BarrierEntry> entries)
    : entries_(std::move(entries)) {
    if (entries_.size() < 2) {
        throw Error(ErrorCategory::Input, "model",
                    "registry needs at least 2 factors, got " +
                        std::to_string(entries_.size()));
    }
    std::unordered_set<std::string> abbrs;
    std::unordered_set<std::string> names;
    for (std::size_t row = 0; row < entries_.size(); ++row) {
        const BarrierEntry& e = entries_[row];
        const std::string where = "registry row " + std::to_string(row + 1);
        if (e.index != static_cast<int>(row) + 1) {
            throw Error(ErrorCategory::Input, "model",
                        where + ": expected index " + std::to_string(row + 1) + ", got " +
                            std::to_string(e.index));
        }
        if (e.abbr.empty()) {
            throw Error(ErrorCategory::Input, "model", where + ": empty abbreviation");
        }
        if (e.name.empty()) {
            throw Error(ErrorCategory::Input, "model", where + ": empty name");
        }
        if (!abbrs.insert(e.abbr).second) {
            throw Error(ErrorCategory::Input, "model",
                        where + ": duplicate abbreviation '" + e.abbr + "'");
        }
        if (!names.insert(e.name).second) {
            throw Error(ErrorCategory::Input, "model",
                        where + ": duplicate name '" + e.name + "'");
        }
    }
}

const BarrierEntry& BarrierRegistry::entry(int index) const {
    if (index < 1 || index > size()) {
        throw Error(ErrorCategory::Input, "model",
                    "factor index " + std::to_string(index) + " out of range 1.." +
                        std::to_string(size()));
    }
    return entries_[static_cast<std::size_t>(index) - 1];
}

int BarrierRegistry::find(std::string_view abbr) const noexcept {
    for (const BarrierEntry& e : entries_) {
        if (e.abbr == abbr) return e.index;
    }
    return 0;
}

}  // namespace barriers
