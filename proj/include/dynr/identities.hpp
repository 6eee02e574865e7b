#ifndef DYNR_IDENTITIES_HPP
#define DYNR_IDENTITIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dynr/bijet.hpp"
#include "dynr/canonical_f.hpp"

namespace dynr {

/// Jet arithmetic loses roughly two digits per order; analytic identities are
/// checked at orders (k, l) <= MAX_ORDER_ANALYTIC with tolerance TOL_IDENTITY.
inline constexpr int MAX_ORDER_ANALYTIC = 4;
inline constexpr double TOL_IDENTITY = 1e-8;

struct IdentityCase {
  std::string name;
  long long k = -1, l = -1, m = -1, n = -1;
  cplx x{0}, y{0};
  cplx lhs{0}, rhs{0};
  std::string lhs_exact, rhs_exact; // rational text for the exact cases
  double residual = 0;
  double tol = TOL_IDENTITY;
  bool exact = false;
  bool pass = false;
};

/// Combinatorial identities in exact rational arithmetic; residual must be
/// exactly zero. Parameter packs: b1(k,l), b2(k,n), b3(k,l,m), b4(k,l,m).
IdentityCase check_b(int which, const std::vector<long long>& params);

/// Parity of f^(k) and the Riccati-type relation f' + 2f/x + f^2 = 1/4 at x;
/// the stored residual is the worse of the two.
IdentityCase check_c1(cplx x, int k);

/// Derivative identities; which is one of "1","2","3","4","5","5lim","6",
/// "6lim","7","7lim". Left side through bivariate jets, right side through
/// the closed forms. Limit variants evaluate at the excluded point.
IdentityCase check_d(const std::string& which, int k, int l, cplx x, cplx y);

/// Every admissible b-tuple with parameters <= max_order, plus the analytic
/// identities at 20 seeded points each and orders (k,l) <= min(max_order, 4).
std::vector<IdentityCase> identity_sweep(int max_order, uint64_t seed);

} // namespace dynr

#endif
