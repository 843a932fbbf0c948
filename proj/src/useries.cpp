#include "fsm/useries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fsm {

USeries::USeries(const Q3& v) : prec_(exact_order)
{
    if (!v.is_zero())
        c_.push_back(v);
}

USeries USeries::zero(int prec)
{
    USeries s;
    s.prec_ = prec;
    return s;
}

USeries USeries::monomial(const Q3& coeff, int power, int prec)
{
    if (power < 0)
        throw std::invalid_argument("USeries: negative power");
    USeries s = zero(prec);
    if (power < prec && !coeff.is_zero()) {
        s.c_.assign(power + 1, Q3());
        s.c_[power] = coeff;
    }
    return s;
}

USeries USeries::from_coeffs(std::vector<Q3> coeffs, int prec)
{
    USeries s = zero(prec);
    if (static_cast<int>(coeffs.size()) > prec)
        coeffs.resize(prec);
    s.c_ = std::move(coeffs);
    s.trim();
    return s;
}

void USeries::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

int USeries::valuation() const
{
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            return static_cast<int>(i);
    return prec_;
}

Q3 USeries::coeff(int i) const
{
    if (i < 0)
        return Q3();
    if (i >= prec_)
        throw std::out_of_range("USeries: coefficient u^" + std::to_string(i) + " beyond truncation order " +
                                std::to_string(prec_));
    return i < static_cast<int>(c_.size()) ? c_[i] : Q3();
}

Rat USeries::t_coeff(int q) const
{
    Q3 v = coeff(2 * q);
    if (!v.is_rational())
        throw std::domain_error("USeries: t-coefficient has a sqrt3 part");
    return v.rational_part();
}

void USeries::set_coeff(int i, const Q3& v)
{
    if (i < 0 || i >= prec_)
        throw std::out_of_range("USeries: set_coeff out of range");
    if (i >= static_cast<int>(c_.size())) {
        if (v.is_zero())
            return;
        c_.resize(i + 1);
    }
    c_[i] = v;
    trim();
}

USeries USeries::truncated(int prec) const
{
    USeries s = *this;
    s.prec_ = std::min(prec_, prec);
    if (static_cast<int>(s.c_.size()) > s.prec_)
        s.c_.resize(s.prec_);
    s.trim();
    return s;
}

USeries USeries::shifted(int k) const
{
    USeries s;
    if (k >= 0) {
        s.prec_ = is_exact() ? exact_order : prec_ + k;
        if (!c_.empty()) {
            s.c_.assign(k, Q3());
            s.c_.insert(s.c_.end(), c_.begin(), c_.end());
        }
        return s;
    }
    int d = -k;
    if (valuation() < d)
        throw std::domain_error("USeries: valuation underflow (negative power of u)");
    s.prec_ = is_exact() ? exact_order : prec_ - d;
    if (static_cast<int>(c_.size()) > d)
        s.c_.assign(c_.begin() + d, c_.end());
    return s;
}

USeries& USeries::operator+=(const USeries& o)
{
    prec_ = std::min(prec_, o.prec_);
    size_t n = std::min<size_t>(std::max(c_.size(), o.c_.size()), prec_);
    c_.resize(n);
    for (size_t i = 0; i < n && i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

USeries& USeries::operator-=(const USeries& o)
{
    prec_ = std::min(prec_, o.prec_);
    size_t n = std::min<size_t>(std::max(c_.size(), o.c_.size()), prec_);
    c_.resize(n);
    for (size_t i = 0; i < n && i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

USeries operator*(const USeries& a, const USeries& b)
{
    int va = a.valuation(), vb = b.valuation();
    long pa = a.is_exact() ? USeries::exact_order : static_cast<long>(a.prec_) + vb;
    long pb = b.is_exact() ? USeries::exact_order : static_cast<long>(b.prec_) + va;
    int prec = static_cast<int>(std::min<long>({pa, pb, USeries::exact_order}));
    USeries r = USeries::zero(prec);
    if (a.c_.empty() || b.c_.empty())
        return r;
    size_t n = std::min<size_t>(a.c_.size() + b.c_.size() - 1, prec);
    r.c_.assign(n, Q3());
    for (size_t i = 0; i < a.c_.size() && i < n; ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (size_t j = 0; j < b.c_.size() && i + j < n; ++j) {
            if (b.c_[j].is_zero())
                continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

USeries& USeries::operator*=(const USeries& o)
{
    *this = *this * o;
    return *this;
}

USeries& USeries::operator*=(const Q3& s)
{
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_)
        x *= s;
    return *this;
}

USeries USeries::operator-() const
{
    USeries s = *this;
    for (auto& x : s.c_)
        x = -x;
    return s;
}

USeries USeries::inverse() const
{
    int v = valuation();
    if (v >= prec_)
        throw std::domain_error("USeries: division by the zero series");
    if (v > 0)
        throw std::domain_error("USeries: valuation underflow (inverse of a series vanishing at u = 0)");
    if (c_.size() == 1) {
        USeries r(c_[0].inverse());
        r.prec_ = prec_;
        return r;
    }
    if (is_exact())
        throw std::domain_error("USeries: inverse of an exact polynomial needs a truncation order");
    Q3 inv0 = c_[0].inverse();
    std::vector<Q3> r(prec_);
    r[0] = inv0;
    for (int n = 1; n < prec_; ++n) {
        Q3 s;
        for (int i = 1; i <= n && i < static_cast<int>(c_.size()); ++i)
            if (!c_[i].is_zero() && !r[n - i].is_zero())
                s += c_[i] * r[n - i];
        r[n] = -(s * inv0);
    }
    return from_coeffs(std::move(r), prec_);
}

USeries& USeries::operator/=(const USeries& o)
{
    int v = o.valuation();
    if (v >= o.prec_)
        throw std::domain_error("USeries: division by the zero series");
    USeries den = o.shifted(-v);
    USeries num = shifted(-v);
    int prec = std::min(num.prec_, den.prec_);
    if (den.c_.size() > 1 && den.is_exact()) {
        if (num.is_exact())
            throw std::domain_error("USeries: exact quotient needs a truncation order");
        den = den.truncated(prec);
    }
    *this = num * den.inverse();
    return *this;
}

USeries USeries::pow(int k) const
{
    if (k < 0)
        return inverse().pow(-k);
    USeries r(1);
    USeries b = *this;
    while (k) {
        if (k & 1)
            r *= b;
        k >>= 1;
        if (k)
            b *= b;
    }
    return r;
}

bool USeries::agrees_with(const USeries& o) const
{
    int p = std::min(prec_, o.prec_);
    size_t n = std::min<size_t>(std::max(c_.size(), o.c_.size()), p);
    for (size_t i = 0; i < n; ++i) {
        const Q3 z;
        const Q3& x = i < c_.size() ? c_[i] : z;
        const Q3& y = i < o.c_.size() ? o.c_[i] : z;
        if (x != y)
            return false;
    }
    return true;
}

bool USeries::rational_in_t() const
{
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_rational())
            return false;
        if (i % 2 == 1 && !c_[i].is_zero())
            return false;
    }
    return true;
}

std::vector<std::string> USeries::coeff_strings() const
{
    std::vector<std::string> out;
    for (const auto& x : c_)
        out.push_back(x.str());
    return out;
}

std::string USeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c_[i].str() << ")";
        if (i > 0)
            os << "*u^" << i;
    }
    if (first)
        os << "0";
    if (!is_exact())
        os << " + O(u^" << prec_ << ")";
    return os.str();
}

USeries series_sqrt(const USeries& a)
{
    int v = a.valuation();
    if (v >= a.prec())
        return USeries::zero(a.prec() / 2);
    if (v % 2 != 0)
        throw std::domain_error("series_sqrt: odd valuation");
    USeries b = a.shifted(-v);
    Q3 s0;
    if (!q3_sqrt(b.coeff(0), s0))
        throw std::domain_error("series_sqrt: leading term is not a square in Q(sqrt3)");
    const auto& bc = b.coeffs();
    if (bc.size() == 1 && b.is_exact())
        return USeries(s0).shifted(v / 2);
    if (b.is_exact())
        throw std::domain_error("series_sqrt: exact non-square polynomial needs a truncation order");
    int prec = b.prec();
    std::vector<Q3> s(prec);
    s[0] = s0;
    Q3 inv2s0 = (Q3(2) * s0).inverse();
    for (int n = 1; n < prec; ++n) {
        Q3 acc = n < static_cast<int>(bc.size()) ? bc[n] : Q3();
        for (int i = 1; i < n; ++i)
            if (!s[i].is_zero() && !s[n - i].is_zero())
                acc -= s[i] * s[n - i];
        s[n] = acc * inv2s0;
    }
    return USeries::from_coeffs(std::move(s), prec).shifted(v / 2);
}

} // namespace fsm
