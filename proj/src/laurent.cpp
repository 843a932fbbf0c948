#include "fsm/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace fsm {

Laurent::Laurent(const USeries& c, int prec) : val_(0), prec_(prec)
{
    if (prec > 0)
        c_.push_back(c);
    normalize();
}

Laurent Laurent::monomial(const USeries& c, int power, int prec)
{
    Laurent l;
    l.prec_ = prec;
    l.val_ = power;
    if (power < prec)
        l.c_.push_back(c);
    l.normalize();
    return l;
}

void Laurent::normalize()
{
    size_t k = 0;
    while (k < c_.size() && c_[k].is_zero() && c_[k].coeffs().empty())
        ++k;
    if (k > 0) {
        c_.erase(c_.begin(), c_.begin() + k);
        val_ += static_cast<int>(k);
    }
    while (!c_.empty() && c_.back().coeffs().empty())
        c_.pop_back();
    if (c_.empty())
        val_ = 0;
}

int Laurent::valuation() const
{
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].coeffs().empty())
            return val_ + static_cast<int>(i);
    return prec_;
}

USeries Laurent::coeff(int e) const
{
    if (e >= prec_)
        throw std::out_of_range("Laurent: coefficient beyond truncation order");
    int i = e - val_;
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return USeries();
    return c_[i];
}

void Laurent::add_coeff(int e, const USeries& v)
{
    if (e >= prec_)
        return;
    if (c_.empty()) {
        val_ = e;
        c_.push_back(v);
        return;
    }
    if (e < val_) {
        c_.insert(c_.begin(), val_ - e, USeries());
        val_ = e;
    }
    int i = e - val_;
    if (i >= static_cast<int>(c_.size()))
        c_.resize(i + 1);
    c_[i] += v;
}

Laurent Laurent::truncated(int prec) const
{
    Laurent l = *this;
    l.prec_ = std::min(prec_, prec);
    int keep = l.prec_ - l.val_;
    if (keep < static_cast<int>(l.c_.size()))
        l.c_.resize(std::max(keep, 0));
    l.normalize();
    return l;
}

Laurent& Laurent::operator+=(const Laurent& o)
{
    int p = std::min(prec_, o.prec_);
    for (size_t i = 0; i < o.c_.size(); ++i)
        if (o.val_ + static_cast<int>(i) < p)
            add_coeff(o.val_ + static_cast<int>(i), o.c_[i]);
    *this = truncated(p);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o)
{
    return *this += -o;
}

Laurent Laurent::operator-() const
{
    Laurent l = *this;
    for (auto& x : l.c_)
        x = -x;
    return l;
}

Laurent& Laurent::operator*=(const USeries& s)
{
    for (auto& x : c_)
        x *= s;
    normalize();
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b)
{
    int va = a.valuation(), vb = b.valuation();
    long pa = a.prec_ == Laurent::exact_order ? Laurent::exact_order : static_cast<long>(a.prec_) + vb;
    long pb = b.prec_ == Laurent::exact_order ? Laurent::exact_order : static_cast<long>(b.prec_) + va;
    if (a.c_.empty() && a.prec_ == Laurent::exact_order)
        pb = Laurent::exact_order;
    if (b.c_.empty() && b.prec_ == Laurent::exact_order)
        pa = Laurent::exact_order;
    int prec = static_cast<int>(std::min<long>({pa, pb, Laurent::exact_order}));
    Laurent r = Laurent::zero(prec);
    if (a.c_.empty() || b.c_.empty())
        return r;
    r.val_ = a.val_ + b.val_;
    long n = std::min<long>(static_cast<long>(a.c_.size() + b.c_.size()) - 1, static_cast<long>(prec) - r.val_);
    if (n <= 0) {
        r.val_ = 0;
        return r;
    }
    r.c_.assign(n, USeries());
    for (size_t i = 0; i < a.c_.size() && static_cast<long>(i) < n; ++i) {
        if (a.c_[i].coeffs().empty())
            continue;
        for (size_t j = 0; j < b.c_.size() && static_cast<long>(i + j) < n; ++j) {
            if (b.c_[j].coeffs().empty())
                continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.normalize();
    return r;
}

Laurent Laurent::inverse() const
{
    // leading coefficients that vanish to their precision are treated as zero
    size_t k = 0;
    while (k < c_.size() && c_[k].is_zero())
        ++k;
    if (k == c_.size())
        throw std::domain_error("Laurent: inverse of a series vanishing to its precision");
    const USeries& lead = c_[k];
    if (!lead.unit())
        throw std::domain_error("Laurent: leading coefficient is not invertible at leading u-order");
    int v = val_ + static_cast<int>(k);
    if (prec_ == exact_order && c_.size() == k + 1) {
        return monomial(lead.inverse(), -v);
    }
    if (prec_ == exact_order)
        throw std::domain_error("Laurent: inverse of an exact polynomial needs a truncation order");
    int len = prec_ - v; // relative precision
    USeries inv0 = lead.inverse();
    std::vector<USeries> r(len);
    for (int m = 0; m < len; ++m) {
        USeries s = m == 0 ? USeries(1) : USeries();
        for (int i = 1; i <= m; ++i) {
            size_t idx = k + i;
            if (idx >= c_.size() || r[m - i].coeffs().empty())
                continue;
            s -= c_[idx] * r[m - i];
        }
        r[m] = s * inv0;
    }
    Laurent out = zero(len - v);
    out.val_ = -v;
    out.c_ = std::move(r);
    out.normalize();
    return out;
}

Laurent Laurent::pow(int k) const
{
    if (k < 0)
        return inverse().pow(-k);
    Laurent r(USeries(1));
    Laurent b = *this;
    while (k) {
        if (k & 1)
            r *= b;
        k >>= 1;
        if (k)
            b *= b;
    }
    return r;
}

Laurent Laurent::derivative() const
{
    Laurent l = zero(prec_ == exact_order ? exact_order : prec_ - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        int e = val_ + static_cast<int>(i);
        if (e != 0 && !c_[i].coeffs().empty())
            l.add_coeff(e - 1, c_[i] * Q3(e));
    }
    l.normalize();
    return l;
}

Laurent Laurent::compose(const Laurent& g) const
{
    int vg = g.valuation();
    if (vg < 1)
        throw std::domain_error("Laurent: composition needs an inner series without constant term");
    if (!c_.empty() && val_ < 0 && valuation() < 0)
        throw std::domain_error("Laurent: composition needs an outer power series");
    long p = prec_ == exact_order ? exact_order : static_cast<long>(prec_) * vg;
    p = std::min<long>(p, g.prec_);
    int prec = static_cast<int>(std::min<long>(p, exact_order));
    Laurent r = zero(prec);
    Laurent gt = g.truncated(prec);
    Laurent gp(USeries(1));
    int e = 0;
    for (size_t i = 0; i < c_.size(); ++i) {
        int ei = val_ + static_cast<int>(i);
        if (static_cast<long>(ei) * vg >= prec)
            break;
        while (e < ei) {
            gp = (gp * gt).truncated(prec);
            ++e;
        }
        if (!c_[i].coeffs().empty()) {
            Laurent term = gp;
            term *= c_[i];
            r += term;
        }
    }
    return r.truncated(prec);
}

} // namespace fsm
