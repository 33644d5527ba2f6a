#include "hrush/poly.hpp"

#include "hrush/error.hpp"

#include <algorithm>
#include <cmath>

namespace hrush {

UPoly::UPoly(Rational constant)
{
    if (constant != 0)
        coeffs_.push_back(std::move(constant));
}

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::x() { return monomial(1, 1); }

UPoly UPoly::monomial(const Rational& c, std::size_t k)
{
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UPoly(std::move(v));
}

void UPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::size_t UPoly::valuation() const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0)
            return k;
    return 0;
}

Rational UPoly::operator()(const Rational& at) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

double UPoly::eval(double at) const
{
    long double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + static_cast<long double>(it->convert_to<double>());
    return static_cast<double>(acc);
}

UPoly UPoly::derivative() const
{
    std::vector<Rational> v;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        v.push_back(coeffs_[k] * static_cast<long long>(k));
    return UPoly(std::move(v));
}

UPoly UPoly::monic() const
{
    if (is_zero())
        return *this;
    UPoly out = *this;
    Rational lead = leading();
    for (auto& c : out.coeffs_)
        c /= lead;
    return out;
}

UPoly operator+(const UPoly& a, const UPoly& b)
{
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = a.coeff(k) + b.coeff(k);
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly UPoly::operator-() const
{
    UPoly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    UPoly rem = a;
    std::vector<Rational> q(std::max(0, a.degree() - b.degree() + 1));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
        Rational c = rem.leading() / b.leading();
        q[shift] = c;
        rem -= monomial(c, shift) * b;
    }
    return {UPoly(std::move(q)), rem};
}

UPoly UPoly::pow(unsigned k) const
{
    UPoly out(1);
    for (unsigned i = 0; i < k; ++i)
        out *= *this;
    return out;
}

std::string UPoly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0)
            continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        bool unit = mag == 1 && k > 0;
        if (!unit)
            out += hrush::to_string(mag);
        if (k > 0)
            out += (unit ? "" : "*") + var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return out;
}

UPoly gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        auto r = UPoly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UPoly squarefree_part(const UPoly& p)
{
    if (p.degree() < 1)
        return p;
    return UPoly::divmod(p, gcd(p, p.derivative())).first;
}

namespace {

std::vector<UPoly> sturm_chain(const UPoly& p)
{
    std::vector<UPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        auto r = UPoly::divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero())
            break;
        chain.push_back(-r);
    }
    return chain;
}

std::size_t sign_changes(const std::vector<UPoly>& chain, const Rational& at)
{
    std::size_t changes = 0;
    int last = 0;
    for (const auto& q : chain) {
        Rational v = q(at);
        int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

} // namespace

std::size_t count_roots(const UPoly& p, const Rational& lo, const Rational& hi)
{
    if (p.is_zero())
        throw DomainError("the zero polynomial has infinitely many roots");
    UPoly sq = squarefree_part(p);
    if (sq.degree() < 1)
        return 0;
    auto chain = sturm_chain(sq);
    // With zeros skipped in the sign sequence, V(lo) - V(hi) counts the
    // distinct roots in (lo, hi] of a squarefree polynomial.
    return sign_changes(chain, lo) - sign_changes(chain, hi);
}

std::size_t count_positive_roots(const UPoly& p)
{
    if (p.is_zero())
        throw DomainError("the zero polynomial has infinitely many roots");
    if (p.degree() < 1)
        return 0;
    // Cauchy bound: every root has modulus below 1 + max |a_k / a_n|.
    Rational bound = 0;
    for (const auto& c : p.coeffs()) {
        Rational r = c / p.leading();
        bound = std::max(bound, r < 0 ? Rational(-r) : r);
    }
    return count_roots(p, 0, bound + 1);
}

std::vector<double> scan_roots(const UPoly& p, double lo, double hi, double step, double tolerance)
{
    std::vector<double> roots;
    if (p.is_zero())
        return roots;
    auto steps = static_cast<std::size_t>(std::ceil((hi - lo) / step));
    double prev_x = lo;
    double prev = p.eval(lo);
    for (std::size_t i = 1; i <= steps; ++i) {
        double x = std::min(hi, lo + static_cast<double>(i) * step);
        double v = p.eval(x);
        if (v == 0.0) {
            roots.push_back(x);
        } else if (prev != 0.0 && (v < 0) != (prev < 0)) {
            double a = prev_x, b = x, fa = prev;
            while (b - a > tolerance) {
                double m = 0.5 * (a + b);
                double fm = p.eval(m);
                if (fm == 0.0) {
                    a = b = m;
                    break;
                }
                if ((fm < 0) == (fa < 0))
                    a = m, fa = fm;
                else
                    b = m;
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev = v;
    }
    return roots;
}

RatFunc::RatFunc(UPoly num, UPoly den)
{
    if (den.is_zero())
        throw DomainError("rational function with zero denominator");
    UPoly g = gcd(num, den);
    if (num.is_zero())
        g = den;
    num = UPoly::divmod(num, g).first;
    den = UPoly::divmod(den, g).first;
    Rational lead = den.leading();
    num_ = num * UPoly(1 / lead);
    den_ = den * UPoly(1 / lead);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
RatFunc operator/(const RatFunc& a, const RatFunc& b)
{
    if (b.is_zero())
        throw DomainError("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string(const std::string& var) const
{
    if (den_ == UPoly(1))
        return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

} // namespace hrush
