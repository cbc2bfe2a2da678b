#include "mmrr/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace mmrr {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

bool Rational::operator<(const Rational& other) const {
    return num * other.den < other.num * den;
}

bool Rational::operator<=(const Rational& other) const {
    return num * other.den <= other.num * den;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    // A reduced fraction terminates in decimal iff den = 2^a * 5^b.
    std::int64_t d = den;
    int twos = 0;
    int fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return std::to_string(num) + "/" + std::to_string(den);

    const int digits = twos > fives ? twos : fives;
    std::int64_t scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    std::int64_t scaled = num * (scale / den);
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;

    std::string body = std::to_string(scaled);
    if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    while (body.back() == '0') body.pop_back();
    if (body.back() == '.') body.pop_back();
    return negative ? "-" + body : body;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    const std::string frac = text.substr(dot + 1);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::string whole = text.substr(0, dot);
    std::int64_t w = std::stoll(whole.empty() || whole == "-" ? whole + "0" : whole);
    std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
    const bool negative = !whole.empty() && whole[0] == '-';
    std::int64_t n = (negative ? -1 : 1) * ((negative ? -w : w) * scale + f);
    return Rational(n, scale);
}

}  // namespace mmrr
