#pragma once

#include "fsm/rat.hpp"

#include <string>

namespace fsm {

// a + b*sqrt(3)
class Q3 {
public:
    Q3() = default;
    Q3(long a) : a_(a) {}
    Q3(const Rat& a) : a_(a) {}
    Q3(const Rat& a, const Rat& b) : a_(a), b_(b) {}

    const Rat& rational_part() const { return a_; }
    const Rat& surd_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    Q3 conj() const { return Q3(a_, -b_); }
    Rat norm() const { return a_ * a_ - 3 * b_ * b_; }
    Q3 inverse() const;

    Q3& operator+=(const Q3& o);
    Q3& operator-=(const Q3& o);
    Q3& operator*=(const Q3& o);
    Q3& operator/=(const Q3& o) { return *this *= o.inverse(); }

    friend Q3 operator+(Q3 x, const Q3& y) { return x += y; }
    friend Q3 operator-(Q3 x, const Q3& y) { return x -= y; }
    friend Q3 operator*(Q3 x, const Q3& y) { return x *= y; }
    friend Q3 operator/(Q3 x, const Q3& y) { return x /= y; }
    Q3 operator-() const { return Q3(-a_, -b_); }

    friend bool operator==(const Q3& x, const Q3& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const Q3& x, const Q3& y) { return !(x == y); }

    static Q3 sqrt3() { return Q3(Rat(0), Rat(1)); }

    std::string str() const;

private:
    Rat a_;
    Rat b_;
};

Q3 parse_q3(const std::string& s);

// Principal square root in Q(sqrt3); false if there is none.
bool q3_sqrt(const Q3& x, Q3& out);

} // namespace fsm
