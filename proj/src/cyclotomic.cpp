#include "tubealg/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace tubealg {

namespace {

using Poly = std::vector<std::int64_t>;

// a / b for monic b, exact over Z.
Poly divide_exact(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    Poly q(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        const std::int64_t t = a[k];
        q[k - db] = t;
        for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= t * b[j];
    }
    for (std::size_t j = 0; j < db; ++j)
        if (a[j] != 0) throw std::logic_error("inexact cyclotomic division");
    return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    Poly p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t d = 1; d < n; ++d)
        if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
    return p;
}

CyclotomicField::CyclotomicField(std::int64_t n) : n_(n), phi_(cyclotomic_polynomial(n)) {
    const std::size_t d = degree();
    powers_.reserve(static_cast<std::size_t>(n));
    Poly cur(d, 0);
    cur[0] = 1;
    if (d == 0) cur.clear();
    for (std::int64_t k = 0; k < n; ++k) {
        powers_.push_back(cur);
        // multiply by x and reduce
        Poly next(d + 1, 0);
        for (std::size_t j = 0; j < d; ++j) next[j + 1] = cur[j];
        const std::int64_t top = next[d];
        for (std::size_t j = 0; j <= d; ++j) next[j] -= top * phi_[j];
        next.resize(d);
        cur = next;
    }
}

const std::vector<std::int64_t>& CyclotomicField::power(std::int64_t k) const {
    k %= n_;
    if (k < 0) k += n_;
    return powers_[static_cast<std::size_t>(k)];
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CyclotomicField> field)
    : field_(std::move(field)), c_(field_->degree(), Rational(0)) {}

Cyclotomic Cyclotomic::one(std::shared_ptr<const CyclotomicField> field) {
    Cyclotomic out(std::move(field));
    out.c_[0] = 1;
    return out;
}

Cyclotomic Cyclotomic::from_phase(std::shared_ptr<const CyclotomicField> field, Phase q) {
    const std::int64_t n = field->order();
    if (n % q.den() != 0) throw std::invalid_argument("phase " + q.str() + " is not in the field");
    Cyclotomic out(field);
    const auto& p = field->power(q.num() * (n / q.den()));
    for (std::size_t j = 0; j < p.size(); ++j) out.c_[j] = p[j];
    return out;
}

bool Cyclotomic::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

Cyclotomic Cyclotomic::reduce(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> raw) {
    const auto& phi = field->minimal_polynomial();
    const std::size_t d = field->degree();
    for (std::size_t k = raw.size(); k-- > d;) {
        const Rational t = raw[k];
        if (t == 0) continue;
        for (std::size_t j = 0; j <= d; ++j) raw[k - d + j] -= t * phi[j];
    }
    raw.resize(d);
    Cyclotomic out(std::move(field));
    out.c_ = std::move(raw);
    return out;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic out = a;
    for (std::size_t j = 0; j < out.c_.size(); ++j) out.c_[j] += b.c_[j];
    return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic out = a;
    for (std::size_t j = 0; j < out.c_.size(); ++j) out.c_[j] -= b.c_[j];
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    const std::size_t d = a.c_.size();
    if (d == 0) return a;
    std::vector<Rational> raw(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (b.c_[j] != 0) raw[i + j] += a.c_[i] * b.c_[j];
    }
    return Cyclotomic::reduce(a.field_, std::move(raw));
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
    Cyclotomic out(field_);
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const auto& p = field_->power(static_cast<std::int64_t>(j) * k);
        for (std::size_t i = 0; i < p.size(); ++i) out.c_[i] += c_[j] * p[i];
    }
    return out;
}

Rational Cyclotomic::norm() const {
    Cyclotomic prod = one(field_);
    const std::int64_t n = field_->order();
    for (std::int64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) prod = prod * galois(k);
    for (std::size_t j = 1; j < prod.c_.size(); ++j)
        if (prod.c_[j] != 0) throw std::logic_error("norm is not rational");
    return prod.c_.empty() ? Rational(0) : prod.c_[0];
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Cyclotomic rest = one(field_);
    const std::int64_t n = field_->order();
    for (std::int64_t k = 2; k <= n; ++k)
        if (std::gcd(k, n) == 1 && k % n != 1) rest = rest * galois(k);
    const Rational nm = (*this * rest).c_[0];
    for (auto& v : rest.c_) v /= nm;
    return rest;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> out = 0;
    const double t = 2.0 * std::numbers::pi / static_cast<double>(field_->order());
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (c_[j] != 0)
            out += static_cast<double>(c_[j]) * std::polar(1.0, t * static_cast<double>(j));
    return out;
}

bool CyclotomicEchelon::add(CyclotomicRow row) {
    for (auto it = row.begin(); it != row.end();) {
        if (it->second.is_zero()) it = row.erase(it);
        else ++it;
    }
    while (!row.empty()) {
        const std::size_t col = row.begin()->first;
        auto piv = pivots_.find(col);
        if (piv == pivots_.end()) {
            const Cyclotomic lead_inv = row.begin()->second.inverse();
            for (auto& [c, v] : row) v = v * lead_inv;
            pivots_.emplace(col, std::move(row));
            return true;
        }
        const Cyclotomic f = row.begin()->second;
        for (const auto& [c, v] : piv->second) {
            auto [slot, fresh] = row.try_emplace(c, Cyclotomic::zero(field_));
            slot->second = slot->second - f * v;
            if (slot->second.is_zero()) row.erase(slot);
        }
    }
    return false;
}

}  // namespace tubealg
