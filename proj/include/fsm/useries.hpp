#pragma once

#include "fsm/q3.hpp"

#include <climits>
#include <string>
#include <vector>

namespace fsm {

// Truncated power series in u over Q(sqrt3), with t = u^2.
// Coefficients of degree >= prec() are unknown; exact values carry prec() == exact_order.
class USeries {
public:
    static constexpr int exact_order = INT_MAX / 4;

    USeries() : prec_(exact_order) {}
    USeries(long v) : USeries(Q3(v)) {}
    USeries(const Rat& v) : USeries(Q3(v)) {}
    USeries(const Q3& v);

    static USeries zero(int prec = exact_order);
    static USeries monomial(const Q3& coeff, int power, int prec = exact_order);
    static USeries u(int prec = exact_order) { return monomial(Q3(1), 1, prec); }
    static USeries t(int prec = exact_order) { return monomial(Q3(1), 2, prec); }
    static USeries from_coeffs(std::vector<Q3> coeffs, int prec);

    int prec() const { return prec_; }
    bool is_exact() const { return prec_ == exact_order; }
    // Index of the first nonzero known coefficient, or prec() if none is known.
    int valuation() const;
    bool is_zero() const { return valuation() >= prec_; }
    bool unit() const { return !c_.empty() && !c_[0].is_zero(); }

    // Coefficient of u^i; throws if it is beyond the truncation order.
    Q3 coeff(int i) const;
    // Coefficient of t^q.
    Rat t_coeff(int q) const;
    const std::vector<Q3>& coeffs() const { return c_; }
    void set_coeff(int i, const Q3& v);

    USeries truncated(int prec) const;
    // Multiplication by u^k; k < 0 requires the low coefficients to vanish.
    USeries shifted(int k) const;

    USeries& operator+=(const USeries& o);
    USeries& operator-=(const USeries& o);
    USeries& operator*=(const USeries& o);
    USeries& operator/=(const USeries& o);
    USeries& operator*=(const Q3& s);

    friend USeries operator+(USeries a, const USeries& b) { return a += b; }
    friend USeries operator-(USeries a, const USeries& b) { return a -= b; }
    friend USeries operator*(const USeries& a, const USeries& b);
    friend USeries operator/(USeries a, const USeries& b) { return a /= b; }
    friend USeries operator*(USeries a, const Q3& s) { return a *= s; }
    friend USeries operator*(const Q3& s, USeries a) { return a *= s; }
    USeries operator-() const;

    USeries inverse() const;
    USeries inverse(int prec) const { return truncated(prec).inverse(); }
    USeries pow(int k) const;

    // Equal on all coefficients known for both operands.
    bool agrees_with(const USeries& o) const;

    bool rational_in_t() const;
    std::vector<std::string> coeff_strings() const;
    std::string str() const;

private:
    void trim();

    std::vector<Q3> c_;
    int prec_;
};

USeries series_sqrt(const USeries& a);

} // namespace fsm
