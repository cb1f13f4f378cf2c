#include "barriers/decimal.hpp"

#include <cmath>
#include <cstdlib>

#include "barriers/errors.hpp"

namespace barriers {

namespace {

constexpr int kMaxPlaces = 12;

double pow10_table(int p) noexcept {
    static const double table[] = {1e0, 1e1, 1e2,  1e3,  1e4,  1e5, 1e6,
                                   1e7, 1e8, 1e9, 1e10, 1e11, 1e12};
    return table[p];
}

}  // namespace

Decimal::Decimal(std::int64_t mantissa, int places) : mantissa_(mantissa), places_(places) {
    if (places < 0 || places > kMaxPlaces) {
        throw Error(ErrorCategory::Input, "model",
                    "decimal places out of range: " + std::to_string(places));
    }
}

bool Decimal::try_parse(std::string_view text, Decimal& out) noexcept {
    if (text.empty()) return false;
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    std::int64_t mantissa = 0;
    int places = 0;
    bool any_digit = false;
    bool seen_point = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '.') {
            if (seen_point) return false;
            seen_point = true;
            continue;
        }
        if (c < '0' || c > '9') return false;
        if (mantissa > (INT64_MAX - 9) / 10) return false;
        mantissa = mantissa * 10 + (c - '0');
        any_digit = true;
        if (seen_point) {
            if (++places > kMaxPlaces) return false;
        }
    }
    if (!any_digit) return false;
    out.mantissa_ = negative ? -mantissa : mantissa;
    out.places_ = places;
    return true;
}

Decimal Decimal::parse(std::string_view text) {
    Decimal d;
    if (!try_parse(text, d)) {
        throw Error(ErrorCategory::Input, "model",
                    "not a decimal number: '" + std::string(text) + "'");
    }
    return d;
}

double Decimal::to_double() const noexcept {
    return static_cast<double>(mantissa_) / pow10_table(places_);
}

std::string Decimal::to_string() const {
    std::int64_t mag = std::llabs(mantissa_);
    std::string digits = std::to_string(mag);
    if (static_cast<int>(digits.size()) <= places_) {
        digits.insert(0, places_ + 1 - digits.size(), '0');
    }
    std::string out;
    if (mantissa_ < 0) out += '-';
    out += digits.substr(0, digits.size() - places_);
    if (places_ > 0) {
        out += '.';
        out += digits.substr(digits.size() - places_);
    }
    return out;
}

bool operator==(const Decimal& a, const Decimal& b) noexcept {
    // Align to the wider scale; mantissas here are far from overflow.
    std::int64_t ma = a.mantissa_;
    std::int64_t mb = b.mantissa_;
    for (int p = a.places_; p < b.places_; ++p) ma *= 10;
    for (int p = b.places_; p < a.places_; ++p) mb *= 10;
    return ma == mb;
}

}  // namespace barriers
