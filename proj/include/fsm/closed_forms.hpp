#pragma once

#include "fsm/rational_form.hpp"
#include "fsm/useries.hpp"

#include <string>
#include <vector>

namespace fsm {

// Quadrangulation building blocks, all as series in u to the given u-order.
USeries sqrt_1m12t(int order);
USeries c_squared(int order); // (1 - sqrt(1 - 12t)) / (6t)
USeries c_series(int order);

// phi_m = c^(2m) (1 + (m-1) sqrt(1-12t)) / (1-12t)
USeries phi(int m, int order);
// The same series through its expansion in powers of 3t built from r_{m,i}.
USeries phi_expanded(int m, int order);
// r_{m,i} = 2^(m+2i) - 1/2 sum_j (-1)^j C(m-j-1, j) C(2(m+i-j), m+i-j)
Rat r_coeff(int m, int i);
// [ (3t)^i ] c^(2m)/(1-12t), read off the series directly.
Rat r_coeff_direct(int m, int i);

// One-boundary tori: F_{2(m+1)}^{[1]} and the exchanged-curve series for k = 2m.
USeries genus1_ordinary(int m, int order);
USeries genus1_fullysimple(int m, int order);

// Fully simple planar quadrangulations with Q inner faces.
int bf_internal_vertices(int Q, const std::vector<int>& lengths);
Rat bf_alpha(int Q, const std::vector<int>& lengths);
Q3 bf_epsilon(int k);
Q3 bernardi_fusy(int Q, const std::vector<int>& lengths);

// c^6 t
USeries h11_closed(int order);

// Closed forms of the genus-one one-point functions divided by dx (resp. dw).
RationalForm tori1_closed(int order);
RationalForm tori2_closed(int order);

struct ClosedFormReport {
    std::string id;
    std::string target;
    bool agree = false;
    int agreement_order = 0;
    std::string detail;
};

} // namespace fsm
