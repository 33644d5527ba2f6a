#pragma once

#include "hrush/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hrush {

// Dense univariate polynomial over Q; coeffs[k] multiplies x^k. The zero
// polynomial has no coefficients and degree -1.
class UPoly {
public:
    UPoly() = default;
    UPoly(Rational constant);
    UPoly(int constant) : UPoly(Rational(constant)) {}
    explicit UPoly(std::vector<Rational> coeffs);

    static UPoly x();
    static UPoly monomial(const Rational& c, std::size_t k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    // Exponent of the lowest nonzero term (0 for the zero polynomial).
    std::size_t valuation() const;

    Rational operator()(const Rational& at) const;
    double eval(double at) const;

    UPoly derivative() const;
    UPoly monic() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly operator-() const;
    UPoly& operator+=(const UPoly& b) { return *this = *this + b; }
    UPoly& operator-=(const UPoly& b) { return *this = *this - b; }
    UPoly& operator*=(const UPoly& b) { return *this = *this * b; }
    bool operator==(const UPoly&) const = default;

    // Euclidean division; throws DomainError on division by zero.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
    UPoly pow(unsigned k) const;

    std::string to_string(const std::string& var = "lambda") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);
UPoly squarefree_part(const UPoly& p);

// Distinct real roots in the half-open interval (lo, hi], by Sturm's theorem.
std::size_t count_roots(const UPoly& p, const Rational& lo, const Rational& hi);

// Distinct positive real roots, by Sturm's theorem with a Cauchy bound.
std::size_t count_positive_roots(const UPoly& p);

// Independent floating-point scan of (lo, hi]: sign changes on a grid of
// `step`, each refined by bisection to `tolerance`, plus grid points where
// the value is exactly zero.
std::vector<double> scan_roots(const UPoly& p, double lo, double hi, double step = 1e-5, double tolerance = 1e-12);

// Quotient of polynomials kept in lowest terms with a monic denominator.
class RatFunc {
public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(UPoly num) : num_(std::move(num)), den_(1) {}
    RatFunc(UPoly num, UPoly den);

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    bool operator==(const RatFunc&) const = default;

    std::string to_string(const std::string& var = "lambda") const;

private:
    UPoly num_;
    UPoly den_;
};

} // namespace hrush
