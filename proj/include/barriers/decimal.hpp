#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace barriers {

/// Exact decimal number stored as mantissa * 10^-places.
///
/// Scores read from input files are kept in this form so that writing them
/// back reproduces the source text byte for byte; conversion to double
/// happens once, inside the numeric kernels that consume the matrix.
class Decimal {
public:
    Decimal() = default;
    Decimal(std::int64_t mantissa, int places);

    /// Parses "[+-]digits[.digits]". Throws Error(Input) on anything else.
    static Decimal parse(std::string_view text);
    static bool try_parse(std::string_view text, Decimal& out) noexcept;

    double to_double() const noexcept;

    /// Renders with exactly places() fractional digits.
    std::string to_string() const;

    std::int64_t mantissa() const noexcept { return mantissa_; }
    int places() const noexcept { return places_; }

    bool negative() const noexcept { return mantissa_ < 0; }

    /// Numeric equality (1.50 == 1.5).
    friend bool operator==(const Decimal& a, const Decimal& b) noexcept;

private:
    std::int64_t mantissa_ = 0;
    int places_ = 0;
};

}  // namespace barriers
