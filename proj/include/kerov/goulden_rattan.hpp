#pragma once

#include "kerov/partition.hpp"
#include "kerov/tseries.hpp"

namespace kerov {

// Rescaled cumulant weight: script-R_i = (i-1) R_i.
CumulantPoly script_r(int i);

// C(t) = 1 / (1 - sum_{i>=2} script-R_i t^i), truncated at the given order.
// [t^n] C is sum over partitions mu of n with parts >= 2 of l(mu)! script-R_mu.
TSeries c_series(int order);

// P_m(t) = -(1/m!) C (D+m-2) C ... (D+1) C D C, fully right-nested.
TSeries p_series(int m, int order);

// Product of P over the parts of lambda.
TSeries p_lambda(const Partition& lambda, int order);

// The genus-expansion coefficient polynomial for g >= 1, k >= 2g-1:
// -(1/k) sum_{lambda |- 2g} mhat(lambda, k) [t^{k+1-2g}] P_lambda(t)/C(t).
CumulantPoly gr_genus_part(int k, int g);

}  // namespace kerov
