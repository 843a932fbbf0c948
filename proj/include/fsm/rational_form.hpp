#pragma once

#include "fsm/laurent.hpp"
#include "fsm/useries.hpp"

#include <optional>
#include <vector>

namespace fsm {

// Laurent polynomial in z with USeries coefficients: sum_i c[i] z^(low + i).
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(const USeries& c) { if (!c.coeffs().empty()) c_.push_back(c); }
    static ZPoly monomial(const USeries& c, int power);
    static ZPoly z() { return monomial(USeries(1), 1); }

    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    USeries coeff(int e) const;
    void add_coeff(int e, const USeries& v);

    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    ZPoly& operator*=(const ZPoly& o) { return *this = *this * o; }
    ZPoly operator-() const;
    ZPoly pow(int k) const;
    ZPoly derivative() const;
    // Multiply by z^k.
    ZPoly shifted(int k) const;
    // Substitute z -> 1/z.
    ZPoly reflected() const;

    USeries eval(const USeries& z) const;
    // p(z0 + zeta) as a Laurent series in zeta (z0 must be a unit unless p is a polynomial).
    Laurent taylor_at(const USeries& z0, int prec) const;

    // Part with exponents < 0 (the "negative part").
    ZPoly negative_part() const;
    // Coefficients agree with o wherever both are known.
    bool agrees_with(const ZPoly& o) const;
    bool rational_in_t() const;
    int min_prec() const;

private:
    void trim();
    int low_ = 0;
    std::vector<USeries> c_;
};

class RationalForm {
public:
    RationalForm() : den_(USeries(1)) {}
    RationalForm(const ZPoly& num) : num_(num), den_(USeries(1)) {}
    RationalForm(const ZPoly& num, const ZPoly& den);

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    RationalForm& operator+=(const RationalForm& o);
    RationalForm& operator-=(const RationalForm& o);
    RationalForm& operator*=(const RationalForm& o);
    RationalForm& operator/=(const RationalForm& o);
    friend RationalForm operator+(RationalForm a, const RationalForm& b) { return a += b; }
    friend RationalForm operator-(RationalForm a, const RationalForm& b) { return a -= b; }
    friend RationalForm operator*(RationalForm a, const RationalForm& b) { return a *= b; }
    friend RationalForm operator/(RationalForm a, const RationalForm& b) { return a /= b; }
    RationalForm operator-() const { return RationalForm(-num_, den_); }
    RationalForm pow(int k) const;
    RationalForm derivative() const;
    // f(1/z) (not a pullback of the differential, only of the function).
    RationalForm reflected() const;
    // f(s * z) for a scalar s.
    RationalForm scaled(const USeries& s) const;

    USeries eval(const USeries& z) const;
    // Laurent expansion of f(z0 + zeta) to absolute order prec in zeta.
    Laurent expand_at(const USeries& z0, int prec) const;
    // Laurent expansion of f(1/y) in y to absolute order prec in y.
    Laurent expand_at_infinity(int prec) const;

    // Cross-multiplied identity num*o.den == o.num*den to the known u-order.
    bool same_as(const RationalForm& o) const;
    bool rational_in_t() const { return num_.rational_in_t() && den_.rational_in_t(); }

private:
    void normalize();
    ZPoly num_;
    ZPoly den_;
};

// Res_{z=point} multiplier(z) f(z) dz; std::nullopt stands for the point at infinity.
// The convention at infinity is Res f dz = -[z^-1] f.
USeries z_residue(const RationalForm& f, const std::optional<USeries>& point, const ZPoly& multiplier = ZPoly(USeries(1)),
                  int pole_bound = 64);

} // namespace fsm
