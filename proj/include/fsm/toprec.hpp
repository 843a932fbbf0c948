#pragma once

#include "fsm/rational_form.hpp"
#include "fsm/spectral_curve.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fsm {

// (branch index, pole order) for each variable slot
using PoleKey = std::vector<std::pair<int, int>>;

// omega_{g,n} = sum_key coeff * prod_i ds_i / (s_i - b_{key_i.first})^{key_i.second}
// in the chart coordinate of the recursion that produced it.
struct Amplitude {
    int g = 0;
    int n = 0;
    std::string role;
    std::map<PoleKey, USeries> terms;

    int max_pole_order() const;
    bool symmetric() const;
};

class TopRec {
public:
    TopRec(const DiskCurve& curve, const std::string& role, int u_order);

    const Amplitude& amplitude(int g, int n);
    const Chart& chart() const { return chart_; }
    const DiskCurve& curve() const { return curve_; }
    int u_order() const { return u_order_; }

    // Pole-basis data moved to the global coordinate z with the true normalization:
    // coefficient of prod dz_i/(z_i - b_z)^k.
    std::map<PoleKey, USeries> z_terms(int g, int n);
    // n = 1 amplitude as a rational function f(z) with omega = f(z) dz.
    RationalForm as_rational_form(int g);

private:
    struct Local;
    Local& local(int branch, int depth);
    Amplitude compute(int g, int n);

    DiskCurve curve_;
    Chart chart_;
    int u_order_;
    std::map<std::pair<int, int>, Amplitude> cache_;
    std::map<std::pair<int, int>, std::shared_ptr<Local>> locals_;
};

int pole_order_cap(int g, int n);

// Tables indexed by Q = 0..q_max.
std::vector<Rat> extract_ordinary(TopRec& tr, int g, const std::vector<int>& lengths, int q_max);
std::vector<Rat> extract_fullysimple(TopRec& tr, int g, const std::vector<int>& lengths, int q_max);
// Same, as series in u, before reading off t-coefficients.
USeries ordinary_series(TopRec& tr, int g, const std::vector<int>& lengths);
USeries fullysimple_series(TopRec& tr, int g, const std::vector<int>& lengths);

// Reads the t^0..t^q_max coefficients; throws if the series is not rational in t.
std::vector<Rat> t_table(const USeries& s, int q_max);

} // namespace fsm
