#include "tubealg/phase.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace tubealg {

Phase::Phase(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("phase denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Phase operator*(Phase a, Phase b) {
    if (a.den_ == b.den_) return Phase(a.num_ + b.num_, a.den_);
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const __int128 den = static_cast<__int128>(a.den_ / g) * b.den_;
    const __int128 num = static_cast<__int128>(a.num_) * (b.den_ / g) +
                         static_cast<__int128>(b.num_) * (a.den_ / g);
    if (den > INT64_MAX) throw std::overflow_error("phase denominator overflow");
    return Phase(static_cast<std::int64_t>(num % den), static_cast<std::int64_t>(den));
}

Phase Phase::pow(std::int64_t k) const {
    const __int128 num = (static_cast<__int128>(num_) * k) % den_;
    return Phase(static_cast<std::int64_t>(num), den_);
}

std::complex<double> Phase::to_complex() const {
    if (num_ == 0) return {1.0, 0.0};
    if (den_ == 2) return {-1.0, 0.0};
    if (den_ == 4) return num_ == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
    const double t = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
    return {std::cos(t), std::sin(t)};
}

std::string Phase::str() const {
    if (num_ == 0) return "0";
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Phase Phase::parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Phase(std::stoll(s), 1);
        return Phase(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed phase '" + s + "'");
    }
}

}  // namespace tubealg
