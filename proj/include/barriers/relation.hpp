#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace barriers {

/// Contextual relation judgment for a factor pair (i, j), i < j:
///   V — i influences j, A — j influences i, X — mutual, O — none.
/// Enumerator order doubles as the aggregation tie-break order (V > A > X > O).
enum class RelationSymbol : unsigned char { V, A, X, O };

char to_char(RelationSymbol s) noexcept;

/// Parses a single-character symbol; throws Error(Input) otherwise.
RelationSymbol parse_relation_symbol(std::string_view text);

/// Complete upper-triangular matrix of relation judgments: one symbol for
/// every pair i < j, nothing stored on or below the diagonal.
class SsimMatrix {
public:
    /// `upper` holds n(n-1)/2 symbols in row-major pair order
    /// (1,2), (1,3), ..., (1,n), (2,3), ...
    SsimMatrix(int n, std::vector<RelationSymbol> upper);

    int size() const noexcept { return n_; }

    RelationSymbol at(int i, int j) const;  // requires 1 <= i < j <= n

    /// Linear slot of pair (i, j) in the upper-triangle layout.
    static std::size_t pair_slot(int n, int i, int j);

    static std::size_t pair_count(int n) noexcept {
        return static_cast<std::size_t>(n) * (n - 1) / 2;
    }

    friend bool operator==(const SsimMatrix&, const SsimMatrix&) = default;

private:
    int n_ = 0;
    std::vector<RelationSymbol> upper_;
};

}  // namespace barriers
