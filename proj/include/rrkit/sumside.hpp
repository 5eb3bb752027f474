#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rrkit/fps.hpp"
#include "rrkit/zpoly.hpp"

namespace rrkit {

/// (q;q)_k = (1-q)(1-q^2)...(1-q^k); 1 for k = 0.
QSeries qrfac(std::size_t k, std::size_t order);

/// sum_{k>=0} q^{k^2 + t k} / (q;q)_k. t = 0 and t = 1 give the two
/// Rogers-Ramanujan sum sides H(1,q) and H(q,q). Only terms with
/// k^2 + t k <= order contribute.
QSeries rr_sum(std::size_t t, std::size_t order);

/// a_k = q^{k^2} / (q;q)_k for k = 0..kmax.
std::vector<QSeries> sum_coefficients(std::size_t kmax, std::size_t order);

/// True iff a_k (1 - q^k) = q^{2k-1} a_{k-1} for every 1 <= k < a.size().
bool coeff_recurrence_holds(std::span<const QSeries> a);

/// coeff_recurrence_holds over the genuine a_0..a_kmax.
bool coeff_recurrence_check(std::size_t kmax, std::size_t order);

/// H(z,q) = sum_{k=0}^{kmax} a_k z^k, truncated in z-degree at kmax.
ZPolynomial h_bivariate(std::size_t kmax, std::size_t order);

/// H(zq,q) + zq H(zq^2,q), the right side of the functional equation.
ZPolynomial functional_rhs(const ZPolynomial &h);

}  // namespace rrkit
