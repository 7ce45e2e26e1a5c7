// SPDX-License-Identifier: Apache-2.0
//
// Drinfeld F_q[T]-modules over finite fields: phi_T over k, the ring map
// a -> phi_a, reduction of a global module at a good prime, and explicit
// l-torsion spaces with their operator actions.

#ifndef DRINMOD_DRINFELD_HPP
#define DRINMOD_DRINFELD_HPP

#include <optional>
#include <vector>

#include "drinmod/linalg.hpp"
#include "drinmod/poly.hpp"
#include "drinmod/skew.hpp"

namespace drinmod {

/// The l-torsion phi[l] inside a splitting extension of k, with the
/// F_q-linear operator actions that the diagnostics need.  tau itself does
/// not stabilize phi[l] in general (only pi = tau^n does), so the recorded
/// operators are phi_T and pi.
struct TorsionModule {
  Poly l;                          // monic irreducible, != the char prime
  FieldPtr splitting;              // k(alpha)
  std::vector<FieldElem> basis;    // F_q-basis of phi[l], dim r*deg(l)
  FieldMat phi_t_action;           // action of phi_T in that basis, over F_q
  FieldMat pi_action;              // action of pi = tau^n, over F_q
};

class DrinfeldModule {
 public:
  /// Builds the coefficient field tower F_q -> F_p (variable "t") and, for
  /// m > 1, a further step of degree m (variable "u", modulus either given
  /// or the first irreducible in enumeration order).
  static FieldPtr build_field(const FieldPtr& fq, const Poly& prime, int m,
                              const std::optional<Poly>& k_modulus = {});

  /// phi_T = gamma(T) + g_1 tau + ... + g_r tau^r with g_i in k; the
  /// constant term is fixed to the image of T.  g.back() must be nonzero.
  DrinfeldModule(FieldPtr fq, Poly prime, int m, FieldPtr k,
                 std::vector<FieldElem> g);

  const FieldPtr& fq() const { return fq_; }
  /// The residue field F_p = F_q[T]/(p) as a tower level of k.
  const FieldPtr& fp_level() const { return fp_; }
  const FieldPtr& k() const { return k_; }
  const Poly& prime() const { return prime_; }
  int m() const { return m_; }
  int n() const { return n_; }  // [k : F_q]
  int rank() const { return r_; }
  const SkewRing& ring() const { return ring_; }
  /// phi_T as a skew polynomial.
  const SkewPoly& phi_t() const { return phi_t_; }
  /// Image of T in k.
  const FieldElem& gamma_t() const { return gamma_t_; }
  /// The Frobenius pi = tau^n.
  SkewPoly pi() const { return SkewPoly::tau_power(k_, n_); }

  /// The ring homomorphism a -> phi_a (Horner in phi_T).
  SkewPoly phi_of(const Poly& a) const;
  /// g(pi) for g in A[x]: sum phi_(g_j) pi^j.
  SkewPoly eval_at_pi(const XPoly& g) const;

  /// The l-torsion space for a monic irreducible l != prime.
  TorsionModule torsion_space(const Poly& l) const;

 private:
  FieldPtr fq_, fp_, k_;
  Poly prime_;
  int m_, n_, r_;
  std::vector<FieldElem> g_;  // g_1..g_r
  FieldElem gamma_t_;
  SkewPoly phi_t_;
  SkewRing ring_;
};

/// Integral model Phi_T = T + g_1 tau + ... + g_r tau^r over A.
struct GlobalDrinfeld {
  std::vector<Poly> g;  // g_1..g_r in A, g_r != 0
  int rank() const { return static_cast<int>(g.size()); }
};

/// Reduction of Phi at a monic irreducible prime with good reduction
/// (ord_p(g_r) = 0; throws BadReduction otherwise).
DrinfeldModule reduce_at(const GlobalDrinfeld& Phi, const Poly& prime,
                         int m = 1);

}  // namespace drinmod

#endif
