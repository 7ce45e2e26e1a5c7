// SPDX-License-Identifier: Apache-2.0
//
// The Frobenius index (b_1, ..., b_{r-1}) and an explicit A-basis of the
// endomorphism ring: enumerate candidate indices from disc(A[pi]), test
// membership f_i(pi) in b_i*E by right division plus commutation, and find
// the f_i by an affine F_q-linear solve over the coefficient space.

#ifndef DRINMOD_ENDORING_HPP
#define DRINMOD_ENDORING_HPP

#include <optional>
#include <string>
#include <vector>

#include "drinmod/drinfeld.hpp"
#include "drinmod/frobenius.hpp"

namespace drinmod {

/// Invariant factors of E/A[pi]: monic, b_1 | b_2 | ... | b_{r-1}.
/// Empty for rank 1.
struct FrobeniusIndex {
  std::vector<Poly> b;
};

/// Basis 1, f_1(pi)/b_1, ..., f_{r-1}(pi)/b_{r-1} of E.  e[i] is the skew
/// polynomial with f_i(pi) = e[i] * phi_{b_i}; e[0] = 1.  The canonical
/// basis from frobenius_index() has deg_T(coefficients of f_i) < deg(b_i);
/// any monic f_i with f_i(pi) in b_i*E is accepted by the downstream ops.
struct EndoBasis {
  FrobeniusIndex index;
  std::vector<XPoly> f;    // f_1..f_{r-1}, monic, deg i
  std::vector<SkewPoly> e; // e_0..e_{r-1}
};

/// All index tuples compatible with the discriminant bound and the
/// divisibility constraints, ordered by decreasing deg(prod b_i) with
/// deterministic tie-breaking (the true index is the first that passes
/// the membership tests, by maximality).
std::vector<FrobeniusIndex> candidate_indices(const Factorization& disc,
                                              int r);

/// Divide g(pi) by phi_b on the right; Some(u) iff the remainder vanishes
/// and the quotient commutes with phi_T.
std::optional<SkewPoly> membership_test(const DrinfeldModule& phi,
                                        const XPoly& g, const Poly& b);

/// Monic degree-i f with coefficients of T-degree < deg(b) such that
/// f(pi) in b*E, found by an affine solve; among all solutions the one
/// with the smallest coefficient profile (high T-degrees minimized first).
std::optional<XPoly> find_f(const DrinfeldModule& phi, int i, const Poly& b);

/// Steps 1-2 end to end, given the minimal polynomial of pi.
EndoBasis frobenius_index(const DrinfeldModule& phi, const CharPoly& P,
                          std::uint64_t seed = 0);

/// Independent verification of a computed basis: the trace-form identity
/// disc(A[pi]) = (prod b_i)^2 * disc(E), the Smith-normal-form
/// certification of the index, and the skew identities.  Throws
/// VerificationFailed naming the first identity that fails.
struct VerifyReport {
  Poly disc_order_exact;  // disc(A[pi]) by resultant
  Poly disc_endo;         // disc(E) by the trace form
  std::vector<Poly> snf_factors;
  std::vector<std::string> checks;  // names of the identities verified
};
VerifyReport verify_basis(const DrinfeldModule& phi, const CharPoly& P,
                          const EndoBasis& basis);

}  // namespace drinmod

#endif
