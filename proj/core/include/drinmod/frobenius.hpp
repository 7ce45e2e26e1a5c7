// SPDX-License-Identifier: Apache-2.0
//
// The minimal polynomial P(x) of the Frobenius pi = tau^n over A, found by
// solving the F_q-linear system obtained from P(pi) = 0 in k{tau} under the
// degree bounds deg_T(c_i) <= floor((r-i)n/r), and the discriminant of the
// order A[pi].

#ifndef DRINMOD_FROBENIUS_HPP
#define DRINMOD_FROBENIUS_HPP

#include "drinmod/drinfeld.hpp"
#include "drinmod/poly.hpp"

namespace drinmod {

struct CharPoly {
  XPoly P;        // monic of degree r in x, coefficients in A
  int rank = 0;
  Poly prime;     // the characteristic prime
  int m = 1;      // [k : F_p]
  FieldElem c0_unit;  // mu with c_0 = mu * prime^m

  Poly coeff(int i) const { return P.coeff(i); }
};

/// Step 1: the unique monic degree-r P with P(pi) = 0.  Probes degrees
/// s < r first and raises AssumptionViolated if a smaller monic relation
/// exists ([K:F] < r, i.e. a noncommutative endomorphism algebra).
CharPoly min_poly_frobenius(const DrinfeldModule& phi);

/// disc(A[pi]) = (-1)^(r(r-1)/2) * Res_x(P, P'), exact (unit included).
/// Throws InseparableCase when the discriminant vanishes.
Poly disc_order(const CharPoly& P);

}  // namespace drinmod

#endif
