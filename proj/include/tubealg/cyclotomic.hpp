#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tubealg/phase.hpp"

namespace tubealg {

using Rational = boost::multiprecision::cpp_rational;

// Q(zeta_N) presented as Q[x] / Phi_N(x); carries the reduction tables.
class CyclotomicField {
public:
    explicit CyclotomicField(std::int64_t n);

    std::int64_t order() const { return n_; }
    // phi(N), the degree of the field.
    std::size_t degree() const { return phi_.size() - 1; }
    // Coefficients of Phi_N, constant term first.
    const std::vector<std::int64_t>& minimal_polynomial() const { return phi_; }
    // x^k mod Phi_N for 0 <= k < N.
    const std::vector<std::int64_t>& power(std::int64_t k) const;

private:
    std::int64_t n_;
    std::vector<std::int64_t> phi_;
    std::vector<std::vector<std::int64_t>> powers_;
};

// The cyclotomic polynomial Phi_n with integer coefficients, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);

// An element of Q(zeta_N) in the power basis 1, x, ..., x^{phi(N)-1}.
class Cyclotomic {
public:
    Cyclotomic() = default;
    explicit Cyclotomic(std::shared_ptr<const CyclotomicField> field);

    static Cyclotomic zero(std::shared_ptr<const CyclotomicField> field) { return Cyclotomic(std::move(field)); }
    static Cyclotomic one(std::shared_ptr<const CyclotomicField> field);
    // zeta_N^(qN) for the phase q; q's denominator must divide N.
    static Cyclotomic from_phase(std::shared_ptr<const CyclotomicField> field, Phase q);

    const std::vector<Rational>& coefficients() const { return c_; }
    const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
    bool is_zero() const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }

    // zeta -> zeta^k for k coprime to N.
    Cyclotomic galois(std::int64_t k) const;
    Cyclotomic conj() const { return galois(field_->order() - 1); }
    // Product of all Galois conjugates; a nonzero rational for nonzero input.
    Rational norm() const;
    // Throws std::domain_error on zero.
    Cyclotomic inverse() const;

    std::complex<double> to_complex() const;

private:
    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> c_;

    static Cyclotomic reduce(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> raw);
};

// Sparse row: column -> entry.
using CyclotomicRow = std::map<std::size_t, Cyclotomic>;

// Incremental row echelon form over Q(zeta_N). Rank is exact.
class CyclotomicEchelon {
public:
    explicit CyclotomicEchelon(std::shared_ptr<const CyclotomicField> field) : field_(std::move(field)) {}
    // Returns true when the row was independent of those already added.
    bool add(CyclotomicRow row);
    std::size_t rank() const { return pivots_.size(); }

private:
    std::shared_ptr<const CyclotomicField> field_;
    std::map<std::size_t, CyclotomicRow> pivots_;  // leading column -> row with leading entry 1
};

}  // namespace tubealg
