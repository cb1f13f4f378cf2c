#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace barriers {

struct BarrierEntry {
    int index = 0;  // 1-based
    std::string abbr;
    std::string name;
};

/// The ordered set of factors under analysis. Declaration order is the
/// row/column order of every matrix downstream; nothing is ever sorted
/// alphabetically.
class BarrierRegistry {
public:
    /// Validates contiguous 1..n indices, n >= 2, unique non-empty
    /// abbreviations and names. Throws Error(Input) naming the bad row.
    explicit BarrierRegistry(std::vector<BarrierEntry> entries);

    int size() const noexcept { return static_cast<int>(entries_.size()); }

    const BarrierEntry& entry(int index) const;  // 1-based, range-checked

    const std::vector<BarrierEntry>& entries() const noexcept { return entries_; }

    /// 1-based index for an abbreviation, 0 if unknown.
    int find(std::string_view abbr) const noexcept;

private:
    std::vector<BarrierEntry> entries_;
};

}  // namespace barriers
