#include "fsm/rational_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace fsm {

ZPoly ZPoly::monomial(const USeries& c, int power)
{
    ZPoly p;
    if (!c.coeffs().empty()) {
        p.low_ = power;
        p.c_.push_back(c);
    }
    return p;
}

void ZPoly::trim()
{
    while (!c_.empty() && c_.back().coeffs().empty())
        c_.pop_back();
    size_t k = 0;
    while (k < c_.size() && c_[k].coeffs().empty())
        ++k;
    if (k) {
        c_.erase(c_.begin(), c_.begin() + k);
        low_ += static_cast<int>(k);
    }
    if (c_.empty())
        low_ = 0;
}

USeries ZPoly::coeff(int e) const
{
    int i = e - low_;
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return USeries();
    return c_[i];
}

void ZPoly::add_coeff(int e, const USeries& v)
{
    if (v.coeffs().empty())
        return;
    if (c_.empty()) {
        low_ = e;
        c_.push_back(v);
        return;
    }
    if (e < low_) {
        c_.insert(c_.begin(), low_ - e, USeries());
        low_ = e;
    }
    int i = e - low_;
    if (i >= static_cast<int>(c_.size()))
        c_.resize(i + 1);
    c_[i] += v;
    trim();
}

ZPoly& ZPoly::operator+=(const ZPoly& o)
{
    for (size_t i = 0; i < o.c_.size(); ++i)
        add_coeff(o.low_ + static_cast<int>(i), o.c_[i]);
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o)
{
    return *this += -o;
}

ZPoly ZPoly::operator-() const
{
    ZPoly p = *this;
    for (auto& x : p.c_)
        x = -x;
    return p;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b)
{
    ZPoly r;
    if (a.c_.empty() || b.c_.empty())
        return r;
    r.low_ = a.low_ + b.low_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, USeries());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].coeffs().empty())
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].coeffs().empty())
                r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

ZPoly ZPoly::pow(int k) const
{
    if (k < 0)
        throw std::invalid_argument("ZPoly: negative power");
    ZPoly r(USeries(1));
    for (int i = 0; i < k; ++i)
        r *= *this;
    return r;
}

ZPoly ZPoly::derivative() const
{
    ZPoly r;
    for (size_t i = 0; i < c_.size(); ++i) {
        int e = low_ + static_cast<int>(i);
        if (e != 0)
            r.add_coeff(e - 1, c_[i] * Q3(e));
    }
    return r;
}

ZPoly ZPoly::shifted(int k) const
{
    ZPoly p = *this;
    if (!p.c_.empty())
        p.low_ += k;
    return p;
}

ZPoly ZPoly::reflected() const
{
    ZPoly r;
    for (size_t i = 0; i < c_.size(); ++i)
        r.add_coeff(-(low_ + static_cast<int>(i)), c_[i]);
    return r;
}

USeries ZPoly::eval(const USeries& z) const
{
    USeries acc;
    if (c_.empty())
        return acc;
    // Horner on the polynomial part, then divide by z^-low if needed.
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * z + c_[i];
    if (low_ > 0)
        acc *= z.pow(low_);
    else if (low_ < 0)
        acc /= z.pow(-low_);
    return acc;
}

Laurent ZPoly::taylor_at(const USeries& z0, int prec) const
{
    Laurent base = Laurent(z0) + Laurent::variable();
    Laurent r = Laurent::zero(prec);
    if (c_.empty())
        return r;
    Laurent pw(USeries(1));
    int e0 = low_;
    if (e0 < 0)
        pw = base.truncated(prec + 1 - e0).pow(e0).truncated(prec);
    else
        pw = base.pow(e0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].coeffs().empty()) {
            Laurent term = pw;
            term *= c_[i];
            r += term;
        }
        pw = (pw * base).truncated(std::max(prec, 0) + 1 + static_cast<int>(c_.size()));
    }
    return r.truncated(prec);
}

ZPoly ZPoly::negative_part() const
{
    ZPoly r;
    for (size_t i = 0; i < c_.size(); ++i)
        if (low_ + static_cast<int>(i) < 0)
            r.add_coeff(low_ + static_cast<int>(i), c_[i]);
    return r;
}

bool ZPoly::agrees_with(const ZPoly& o) const
{
    ZPoly d = *this - o;
    for (const auto& c : d.c_)
        if (!c.is_zero())
            return false;
    return true;
}

bool ZPoly::rational_in_t() const
{
    for (const auto& c : c_)
        if (!c.rational_in_t())
            return false;
    return true;
}

int ZPoly::min_prec() const
{
    int p = USeries::exact_order;
    for (const auto& c : c_)
        p = std::min(p, c.prec());
    return p;
}

RationalForm::RationalForm(const ZPoly& num, const ZPoly& den) : num_(num), den_(den)
{
    if (den_.is_zero())
        throw std::domain_error("RationalForm: zero denominator");
    normalize();
}

void RationalForm::normalize()
{
    bool has_unit = false;
    for (int e = den_.low(); e <= den_.high(); ++e)
        if (den_.coeff(e).unit())
            has_unit = true;
    if (!has_unit)
        throw std::domain_error("RationalForm: denominator has no coefficient with nonzero u^0 part");
    USeries lead = den_.coeff(den_.low());
    if (lead.unit() && lead.coeff(0).is_rational() && sgn(lead.coeff(0).rational_part()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalForm& RationalForm::operator+=(const RationalForm& o)
{
    if (den_.agrees_with(o.den_) && den_.min_prec() == USeries::exact_order && o.den_.min_prec() == USeries::exact_order) {
        num_ += o.num_;
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalForm& RationalForm::operator-=(const RationalForm& o)
{
    return *this += -o;
}

RationalForm& RationalForm::operator*=(const RationalForm& o)
{
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalForm& RationalForm::operator/=(const RationalForm& o)
{
    if (o.num_.is_zero())
        throw std::domain_error("RationalForm: division by zero");
    ZPoly n = num_ * o.den_;
    ZPoly d = den_ * o.num_;
    num_ = n;
    den_ = d;
    normalize();
    return *this;
}

RationalForm RationalForm::pow(int k) const
{
    if (k < 0)
        return RationalForm(den_, num_).pow(-k);
    return RationalForm(num_.pow(k), den_.pow(k));
}

RationalForm RationalForm::derivative() const
{
    return RationalForm(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalForm RationalForm::reflected() const
{
    return RationalForm(num_.reflected(), den_.reflected());
}

RationalForm RationalForm::scaled(const USeries& s) const
{
    auto sc = [&](const ZPoly& p) {
        ZPoly r;
        for (int e = p.low(); e <= p.high(); ++e) {
            USeries c = p.coeff(e);
            if (c.coeffs().empty())
                continue;
            r.add_coeff(e, e >= 0 ? c * s.pow(e) : c / s.pow(-e));
        }
        return r;
    };
    return RationalForm(sc(num_), sc(den_));
}

USeries RationalForm::eval(const USeries& z) const
{
    return num_.eval(z) / den_.eval(z);
}

namespace {

Laurent divide(const Laurent& n, const Laurent& d_exact_or_not, int prec, const char* where)
{
    Laurent d = d_exact_or_not;
    int vd = d.valuation();
    if (vd >= d.prec())
        throw std::domain_error(std::string(where) + ": denominator vanishes to its precision");
    int vn = n.valuation();
    if (vn >= n.prec())
        return Laurent::zero(prec);
    if (vn - vd >= prec)
        return Laurent::zero(prec);
    int pd = prec - vn + 2 * vd;
    Laurent inv = d.truncated(pd).inverse();
    return (n * inv).truncated(prec);
}

Laurent reflect_expand(const ZPoly& p, int prec)
{
    Laurent r = Laurent::zero(prec);
    for (int e = p.low(); e <= p.high(); ++e)
        if (!p.coeff(e).coeffs().empty())
            r.add_coeff(-e, p.coeff(e));
    return r.truncated(prec);
}

} // namespace

Laurent RationalForm::expand_at(const USeries& z0, int prec) const
{
    int sh = std::max({0, -num_.low(), -den_.low()});
    Laurent n = num_.shifted(sh).taylor_at(z0, Laurent::exact_order);
    Laurent d = den_.shifted(sh).taylor_at(z0, Laurent::exact_order);
    return divide(n, d, prec, "expand_at");
}

Laurent RationalForm::expand_at_infinity(int prec) const
{
    Laurent d = reflect_expand(den_, Laurent::exact_order);
    Laurent n = reflect_expand(num_, Laurent::exact_order);
    return divide(n, d, prec, "expand_at_infinity");
}

bool RationalForm::same_as(const RationalForm& o) const
{
    return (num_ * o.den_).agrees_with(o.num_ * den_);
}

USeries z_residue(const RationalForm& f, const std::optional<USeries>& point, const ZPoly& multiplier, int pole_bound)
{
    RationalForm g = f * RationalForm(multiplier);
    if (!point) {
        Laurent e = g.expand_at_infinity(2);
        return -e.coeff(1);
    }
    Laurent e = g.expand_at(*point, 0);
    if (-e.valuation() > pole_bound)
        throw std::domain_error("z_residue: pole order exceeds the supplied bound");
    return e.coeff(-1);
}

} // namespace fsm
