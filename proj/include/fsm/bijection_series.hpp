#pragma once

#include "fsm/spectral_curve.hpp"
#include "fsm/toprec.hpp"

#include <string>
#include <vector>

namespace fsm {

// Compositional inverse of p(y) = y + sum_{j>=2} a[j] y^j (a[0], a[1] ignored) up to y^cutoff.
std::vector<USeries> series_reversion(const std::vector<USeries>& a, int cutoff);

// Disk data indexed by length; entry 0 is the empty-boundary convention (F_0 = 1).
std::vector<USeries> ordinary_disks(const DiskCurve& curve, int l_max);

// W(x) = 1/x + sum F_l x^(-l-1)  <->  X(w) = 1/w + sum_{k>=1} H_k w^(k-1), with X(W(x)) = x.
std::vector<USeries> fully_simple_disks(const std::vector<USeries>& F, int k_max);
std::vector<USeries> ordinary_from_fully_simple(const std::vector<USeries>& H, int l_max);

// Two-boundary tables, indexed [k1][k2] for 1 <= k <= cutoff (row/column 0 unused).
struct CylinderTable {
    std::string kind; // ordinary, simple, mixed, fully-simple
    int cutoff = 0;
    std::vector<std::vector<USeries>> c;

    const USeries& at(int k1, int k2) const { return c.at(k1).at(k2); }
    bool symmetric() const;
};

CylinderTable ordinary_cylinders(const DiskCurve& curve, int cutoff);
// Y_2(W(x1), W(x2)) dW dW = W_2(x1, x2) dx dx
CylinderTable simple_cylinders(const std::vector<USeries>& F, const CylinderTable& F2, int cutoff);
// first boundary simple, second ordinary
CylinderTable mixed_cylinders(const std::vector<USeries>& F, const CylinderTable& F2, int cutoff);
// X_2 = Y_2 - d1 d2 log((w1 - w2)/(X(w1) - X(w2))); needs H up to 2 * cutoff.
CylinderTable fully_simple_cylinders(const CylinderTable& G2, const std::vector<USeries>& H, int cutoff);

struct PantsReport {
    bool identical = false;
    int samples = 0;
    int u_order = 0;
    bool residue_sum_zero = false;
    std::vector<std::string> notes;
};

// omega_3 + check-omega_3 against the sum of total derivatives, as exact identities in z1
// for several rational sample values of (z2, z3).
PantsReport pants_identity_check(const DiskCurve& curve, int u_order);

} // namespace fsm
