#pragma once

#include "fsm/useries.hpp"

#include <vector>

namespace fsm {

// Truncated Laurent series in a local variable with USeries coefficients.
// Coefficients of exponent >= prec() are unknown.
class Laurent {
public:
    static constexpr int exact_order = USeries::exact_order;

    Laurent() : val_(0), prec_(exact_order) {}
    explicit Laurent(const USeries& c, int prec = exact_order);

    static Laurent monomial(const USeries& c, int power, int prec = exact_order);
    static Laurent variable(int prec = exact_order) { return monomial(USeries(1), 1, prec); }
    static Laurent zero(int prec) { Laurent l; l.prec_ = prec; return l; }

    int prec() const { return prec_; }
    // Lowest exponent with a coefficient that is not identically zero, or prec() if none.
    int valuation() const;
    USeries coeff(int e) const;
    void add_coeff(int e, const USeries& v);

    Laurent truncated(int prec) const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    Laurent& operator*=(const USeries& s);
    Laurent operator-() const;

    // Requires the leading coefficient to be a unit of Q(sqrt3)[[u]].
    Laurent inverse() const;
    Laurent pow(int k) const;
    Laurent derivative() const;
    // this(g(zeta)) for g with valuation >= 1.
    Laurent compose(const Laurent& g) const;

    // Drop the zero-to-precision coefficients at the bottom.
    void normalize();

private:
    int val_;
    std::vector<USeries> c_;
    int prec_;
};

} // namespace fsm
