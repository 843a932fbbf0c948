#include "fsm/q3.hpp"

#include <stdexcept>

namespace fsm {

Q3 Q3::inverse() const
{
    if (is_zero())
        throw std::domain_error("Q3: division by zero");
    if (is_rational())
        return Q3(1 / a_);
    Rat n = norm();
    return Q3(a_ / n, -b_ / n);
}

Q3& Q3::operator+=(const Q3& o)
{
    a_ += o.a_;
    if (sgn(o.b_) != 0)
        b_ += o.b_;
    return *this;
}

Q3& Q3::operator-=(const Q3& o)
{
    a_ -= o.a_;
    if (sgn(o.b_) != 0)
        b_ -= o.b_;
    return *this;
}

Q3& Q3::operator*=(const Q3& o)
{
    if (sgn(b_) == 0 && sgn(o.b_) == 0) {
        a_ *= o.a_;
        return *this;
    }
    Rat a = a_ * o.a_ + 3 * b_ * o.b_;
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

std::string Q3::str() const
{
    if (is_rational())
        return to_string(a_);
    std::string s = to_string(a_);
    if (sgn(b_) < 0)
        s += " - " + to_string(Rat(-b_)) + "*sqrt3";
    else
        s += " + " + to_string(b_) + "*sqrt3";
    return s;
}

Q3 parse_q3(const std::string& s)
{
    auto pos = s.find("*sqrt3");
    if (pos == std::string::npos)
        return Q3(parse_rat(s));
    // "a + b*sqrt3" or "a - b*sqrt3"
    auto op = s.find(" + ");
    bool neg = false;
    if (op == std::string::npos) {
        op = s.find(" - ");
        neg = true;
    }
    if (op == std::string::npos)
        throw std::invalid_argument("parse_q3: bad value '" + s + "'");
    Rat a = parse_rat(s.substr(0, op));
    Rat b = parse_rat(s.substr(op + 3, pos - op - 3));
    return Q3(a, neg ? Rat(-b) : b);
}

bool q3_sqrt(const Q3& x, Q3& out)
{
    const Rat& a = x.rational_part();
    const Rat& b = x.surd_part();
    Rat r;
    if (sgn(b) == 0) {
        if (rat_sqrt(a, r)) {
            out = Q3(r);
            return true;
        }
        if (rat_sqrt(Rat(a / 3), r)) {
            out = Q3(Rat(0), r);
            return true;
        }
        return false;
    }
    // (p + q sqrt3)^2 = p^2 + 3 q^2 + 2 p q sqrt3
    Rat disc;
    if (!rat_sqrt(Rat(a * a - 3 * b * b), disc))
        return false;
    for (int sgn_d : {1, -1}) {
        Rat p2 = (a + sgn_d * disc) / 2;
        Rat p;
        if (sgn(p2) <= 0 || !rat_sqrt(p2, p))
            continue;
        Rat q = b / (2 * p);
        out = Q3(p, q);
        return true;
    }
    return false;
}

} // namespace fsm
