#pragma once

#include <cstdint>
#include <string>

namespace mmrr {

/// Exact fraction used for averaged metrics. Kept normalized (den > 0,
/// gcd(num, den) == 1) so equality is plain member comparison.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);
    Rational(std::int64_t n) : num(n), den(1) {}

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    /// Exact textual form: integer ("130"), terminating decimal ("95.75"),
    /// or "num/den" when the decimal expansion does not terminate.
    std::string str() const;

    bool operator==(const Rational&) const = default;
    bool operator<(const Rational& other) const;
    bool operator<=(const Rational& other) const;
};

/// Parses the formats produced by Rational::str().
Rational parse_rational(const std::string& text);

}  // namespace mmrr
