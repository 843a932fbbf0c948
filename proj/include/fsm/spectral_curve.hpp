#pragma once

#include "fsm/laurent.hpp"
#include "fsm/rational_form.hpp"
#include "fsm/useries.hpp"

#include <map>
#include <string>
#include <vector>

namespace fsm {

// V(x) = x^2/2 - sum_d t_d x^d / d
struct Potential {
    std::map<int, USeries> t;

    static Potential gaussian() { return {}; }
    // t_4 = t, truncated at u-order prec.
    static Potential quadrangulation(int prec);
    bool even() const;
};

struct DiskCurve {
    Potential potential;
    int order = 0;
    USeries alpha;
    USeries gamma;
    ZPoly x_poly;       // alpha + gamma (z + 1/z)
    ZPoly w_poly;       // negative z-part of V'(x(z))
    RationalForm x_of_z;
    RationalForm w_of_z;
};

// Local involution near a simple critical point b of a projection f:
// f(b + iota(zeta)) = f(b + zeta), iota = -zeta + O(zeta^2).
// The local variable is measured in the chart coordinate s = z / u^scale.
struct LocalDeck {
    USeries b;          // center in the chart coordinate
    USeries b_z;        // center in the global coordinate z
    int scale = 0;
    Laurent iota;
    int order = 0;
};

DiskCurve solve_disk_curve(const Potential& potential, int order);

// Zeros of dw/dz in the z coordinate.
std::vector<USeries> w_branch_points(const DiskCurve& curve);

// Generic construction for a projection f given in the chart coordinate.
LocalDeck local_deck(const RationalForm& f, const USeries& b, int zeta_order);
// Deck of w at a zero b of dw (z coordinate); works in the rescaled chart when b is small.
LocalDeck local_deck(const DiskCurve& curve, const USeries& b, int zeta_order);

// Data fed to the residue recursion: omega_{0,1} = y dx in the chart coordinate s = z / u^coord_scale;
// the true omega_{g,n} equals u^(form_scale * (2g - 2 + n)) times the chart one.
struct Chart {
    std::string role;
    RationalForm x;
    RationalForm y;
    std::vector<LocalDeck> branches;
    int coord_scale = 0;
    int form_scale = 0;
    int order = 0;
};

Chart ordinary_chart(const DiskCurve& curve, int zeta_order);
Chart exchanged_chart(const DiskCurve& curve, int zeta_order);

// Roots in Q(sqrt3) of a polynomial with Q3 coefficients (index = degree); throws if some root is not found.
std::vector<Q3> q3_roots(std::vector<Q3> poly);

} // namespace fsm
