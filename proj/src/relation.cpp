#include "barriers/relation.hpp"

#include <string>

#include "barriers/errors.hpp"

namespace barriers {

char to_char(RelationSymbol s) noexcept {
    switch (s) {
    case RelationSymbol::V: return 'V';
    case RelationSymbol::A: return 'A';
    case RelationSymbol::X: return 'X';
    case RelationSymbol::O: return 'O';
    }
    return '?';
}

RelationSymbol parse_relation_symbol(std::string_view text) {
    if (text.size() == 1) {
        switch (text[0]) {
        case 'V': return RelationSymbol::V;
        case 'A': return RelationSymbol::A;
        case 'X': return RelationSymbol::X;
        case 'O': return RelationSymbol::O;
        default: break;
        }
    }
    throw Error(ErrorCategory::Input, "model",
                "not a relation symbol (want V/A/X/O): '" + std::string(text) + "'");
}

SsimMatrix::SsimMatrix(int n, std::vector<RelationSymbol> upper)
    : n_(n), upper_(std::move(upper)) {
    if (n_ < 2) {
        throw Error(ErrorCategory::Input, "model",
                    "SSIM needs at least 2 factors, got " + std::to_string(n_));
    }
    if (upper_.size() != pair_count(n_)) {
        throw Error(ErrorCategory::Input, "model",
                    "SSIM upper triangle for n=" + std::to_string(n_) + " needs " +
                        std::to_string(pair_count(n_)) + " cells, got " +
                        std::to_string(upper_.size()));
    }
}

std::size_t SsimMatrix::pair_slot(int n, int i, int j) {
    // Row-major over the strict upper triangle, i < j, 1-based.
    std::size_t row_offset = static_cast<std::size_t>(i - 1) * n -
                             static_cast<std::size_t>(i) * (i - 1) / 2;
    return row_offset + static_cast<std::size_t>(j - i - 1);
}

RelationSymbol SsimMatrix::at(int i, int j) const {
    if (i < 1 || j <= i || j > n_) {
        throw Error(ErrorCategory::Input, "model",
                    "SSIM pair (" + std::to_string(i) + "," + std::to_string(j) +
                        ") out of upper triangle for n=" + std::to_string(n_));
    }
    return upper_[pair_slot(n_, i, j)];
}

}  // namespace barriers
