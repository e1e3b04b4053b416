#pragma once

#include "charcover/character_table.hpp"

#include <array>
#include <map>

namespace charcover {

// g_{mu nu lambda} = <chi_mu chi_nu, chi_lambda>, via the character table.
BigInt kron_coeff(const CharacterTable& table, const Partition& mu, const Partition& nu,
                  const Partition& lambda);

// Full decomposition of the pointwise product chi_mu chi_nu.
std::map<Partition, BigInt> kron_decompose(const CharacterTable& table, const Partition& mu,
                                           const Partition& nu);

// Kronecker coefficient g for mu = (n-e, 1^e), nu = (n-f, 1^f) in closed
// form.  Requires 1 <= e <= f and e + f <= n - 1 (callers normalize via
// hook_kron below).  Cases:
//   (1) d(lambda) > 2                       -> 0
//   (2) lambda = (n): 1 iff e = f;  lambda = (1^n): 1 iff e + f = n - 1
//   (3) lambda = (n-r, 1^r), 1 <= r <= n-2  -> ((f - e <= r <= e + f))
//   (4) double hook (n4, n3, 2^d2, 1^d1), x = 2 d2 + d1 ->
//         ((n3 - 1 <= (e+f-x)/2 <= n4)) ((f - e <= d1))
//       + ((n3 <= (e+f-x+1)/2 <= n4))   ((f - e <= d1 + 1))
// The upper bound in (3) is e + f; table computations refute the sometimes
// quoted e + f + 1 at r = e + f + 1 (see tests).
int hook_hook_kron(int e, int f, const Partition& lambda);

// Normalizing wrapper: swaps so e <= f.
int hook_kron(int e, int f, const Partition& lambda);

// sigma_lambda sigma_mu = sum over lambda x mu contingency matrices A of
// sigma_{sort(A)}: the map counts, per sorted-nonzero-entry partition, the
// number of matrices producing it.
std::map<Partition, BigInt> h_product_matrices(const Partition& lambda, const Partition& mu);

// sum_{alpha |- d, beta |- n-d} c^lambda_{alpha beta} c^nu_{alpha' beta};
// equals g_{lambda mu(d) nu} + g_{lambda mu(d-1) nu} with mu(0) = (n).
BigInt blasiak_rhs(const Partition& lambda, const Partition& nu, int d);

// Multiplicities of chi_(n), chi_(n-1,1), chi_(n-2,2), chi_(n-2,1,1) in
// chi_lambda^2, in closed form (d-statistics).  Requires n >= 4.
std::array<BigInt, 4> zisser_multiplicities(const Partition& lambda);

// Multiplicities of chi_(n-3,3), chi_(n-3,2,1), chi_(n-3,1^3) in
// chi_lambda^2, in closed form (d-statistics and the (k, l) pair).
// Requires n >= 6.
std::array<BigInt, 3> n3_multiplicities(const Partition& lambda);

struct DoubleHookForm {
    int n4 = 0, n3 = 0, d2 = 0, d1 = 0;
};
// Parse lambda = (n4, n3, 2^d2, 1^d1) with n4 >= n3 >= 2; requires
// d(lambda) == 2.
DoubleHookForm double_hook_form(const Partition& lambda);

} // namespace charcover
