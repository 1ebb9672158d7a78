#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>

namespace tubealg {

// A root of unity e^{2 pi i q}, stored as the reduced fraction q in [0, 1).
// The group operation is written multiplicatively, matching how the
// cocycle formulas read.
class Phase {
public:
    constexpr Phase() = default;
    Phase(std::int64_t num, std::int64_t den);

    static Phase one() { return {}; }
    static Phase minus_one() { return {1, 2}; }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_one() const { return num_ == 0; }

    Phase conj() const { return Phase(den_ - num_, den_); }
    Phase inv() const { return conj(); }
    Phase pow(std::int64_t k) const;

    friend Phase operator*(Phase a, Phase b);
    Phase& operator*=(Phase b) { return *this = *this * b; }
    friend Phase operator/(Phase a, Phase b) { return a * b.conj(); }
    friend bool operator==(Phase, Phase) = default;
    friend auto operator<=>(Phase a, Phase b) {
        return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
    }

    // Exact for q in {0, 1/4, 1/2, 3/4}.
    std::complex<double> to_complex() const;

    // "k/N" (or "0").
    std::string str() const;
    static Phase parse(const std::string& s);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace tubealg

template <>
struct std::hash<tubealg::Phase> {
    std::size_t operator()(const tubealg::Phase& p) const noexcept {
        return std::hash<std::int64_t>{}(p.num() * 1000003 + p.den());
    }
};
