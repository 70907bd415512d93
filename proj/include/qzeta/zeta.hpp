#pragma once

#include <utility>
#include <vector>

#include "qzeta/interval.hpp"
#include "qzeta/qcalc.hpp"

namespace qzeta {

// zeta_q(1) = sum_{k>=1} 1/(p^k - 1), enclosed by the partial sum through N
// plus the proven tail bound p^{1-N}/(p-1)^2. Enclosures at increasing depth
// are nested.
RationalInterval zeta_q1(const QContext& ctx, long depth);

// zeta_q(2) = sum_{k>=1} k/(p^k - 1); tail bound p^{1-N}((N+1)p - N)/(p-1)^3,
// from k/(p^k-1) <= (p/(p-1)) k p^-k summed in closed form.
RationalInterval zeta_q2(const QContext& ctx, long depth);

// f1(p^M) = sum_{k>=0} 1/(p^{M+k} - 1), truncated at `depth` terms.
RationalInterval f1_at_power(const QContext& ctx, int M, long depth);

// f2(p^M) = sum_{k>=0} k/(p^{M+k} - 1).
RationalInterval f2_at_power(const QContext& ctx, int M, long depth);

// Depth that keeps enclosure widths negligible against the residual
// magnitudes at index n (grows like n^2, as the residuals decay like
// p^(-c n^2) while the integer factors grow like p^(c' n^2)).
long default_depth(int n);

// Enclosures of log_p |residual| / n^2 for a sweep; every residual enclosure
// must exclude zero.
std::vector<RationalInterval> decay_exponents(
    long p, const std::vector<std::pair<int, RationalInterval>>& residuals,
    int frac_bits = 48);

// Enclosures of 3 pi^2/(pi^2 - 4) and 3 pi^2/(pi^2 - 8); the pi^2 enclosure
// is injectable so the arithmetic can be exercised with exact inputs.
std::pair<RationalInterval, RationalInterval> irrationality_measure_constants(
    const RationalInterval& pi_sq = pi_squared());

// [a.lo/b.hi, a.hi/b.lo] for intervals with positive lower endpoints.
RationalInterval divide_positive(const RationalInterval& a, const RationalInterval& b);

}  // namespace qzeta
