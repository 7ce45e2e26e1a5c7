// SPDX-License-Identifier: Apache-2.0
//
// Diagnostics for E_l = E tensor A_l: the finite algebra E/lE via its
// structure constants, nilradical, decomposition into local factors, the
// Gorenstein test (socle dimension over the residue field), the shortcut
// criteria, and freeness of phi[l] as an E/lE-module (cyclic-vector test),
// which by Nakayama certifies freeness of the Tate module at l.

#ifndef DRINMOD_GORENSTEIN_HPP
#define DRINMOD_GORENSTEIN_HPP

#include <optional>
#include <string>
#include <vector>

#include "drinmod/drinfeld.hpp"
#include "drinmod/frobmatrix.hpp"

namespace drinmod {

/// A finite commutative unital algebra over F_l, given by structure
/// constants on a distinguished basis.  Commutativity, associativity and
/// the unit law are verified on basis triples at construction.
class FiniteCommAlgebra {
 public:
  using Vec = std::vector<FieldElem>;  // coordinates in the basis

  static FiniteCommAlgebra create(
      FieldPtr fl, std::vector<std::vector<Vec>> table, Vec unit);

  const FieldPtr& fl() const { return fl_; }
  int dim() const { return dim_; }
  const Vec& unit() const { return unit_; }

  Vec zero() const { return Vec(dim_, fl_->zero()); }
  Vec basis_vec(int i) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec pow(const Vec& a, std::int64_t e) const;
  /// Matrix of multiplication by a.
  FieldMat mult_matrix(const Vec& a) const;
  /// Minimal polynomial of an element over F_l.
  Poly element_minpoly(const Vec& a) const;

 private:
  FieldPtr fl_;
  int dim_ = 0;
  std::vector<std::vector<Vec>> sc_;
  Vec unit_;
};

/// E/lE for a monic irreducible l, with basis the reduction of the
/// triangular basis of E.
FiniteCommAlgebra algebra_mod_l(const StructureConstants& sc, const Poly& l);

/// Basis of the nilradical (= Jacobson radical), computed as the kernel of
/// the iterated |F_l|-power map, which is F_l-linear on a commutative
/// algebra over a perfect base.
std::vector<FiniteCommAlgebra::Vec> nilradical(const FiniteCommAlgebra& a);

/// Decomposition into local factors by orthogonal idempotents, obtained by
/// splitting minimal polynomials of Frobenius-fixed elements of the
/// semisimple quotient (those split over F_l) and lifting the idempotents
/// through the nilradical.
std::vector<FiniteCommAlgebra> local_decomposition(const FiniteCommAlgebra& a);

struct LocalVerdict {
  int dim = 0;
  int residue_degree = 0;  // dim_{F_l} of the residue field
  int socle_dim = 0;       // dim_{F_l} Ann(maximal ideal)
  bool gorenstein = false; // socle is 1-dimensional over the residue field
};
/// Gorenstein test for a local algebra.  A field factor reports socle_dim
/// equal to its residue degree (the annihilator of 0 is everything).
LocalVerdict is_gorenstein(const FiniteCommAlgebra& local);

/// Some(true) when a shortcut applies: r <= 2, or l does not divide
/// prod(b_i) (then E_l = A_l[pi] is monogenic); None means run the full
/// test.
std::optional<bool> gorenstein_shortcuts(const Poly& l,
                                         const FrobeniusIndex& index, int r);

struct GorensteinReport {
  std::vector<LocalVerdict> factors;
  bool gorenstein = false;
  std::optional<std::string> shortcut;
};
/// Full report: local decomposition plus per-factor verdicts; when a
/// shortcut applies its agreement with the full test is asserted.
GorensteinReport gorenstein_report(const StructureConstants& sc, const Poly& l,
                                   const FrobeniusIndex& index, int r);

struct TateFreeResult {
  bool free_rank_one = false;
  FieldPtr fl;
  std::vector<FieldMat> ebar;  // r x r over F_l, actions of e_0..e_{r-1}
  FieldMat pibar;              // action of pi on phi[l] over F_l
  std::optional<std::vector<FieldElem>> cyclic;  // a cyclic vector if free
};

/// Builds phi[l], converts it to an r-dimensional F_l-space (T acting
/// through the phi_T matrix), computes the actions of the basis of E, and
/// searches for a cyclic vector by enumeration with early exit.
TateFreeResult is_tate_free(const DrinfeldModule& phi, const Poly& l,
                            const EndoBasis& basis);

/// Matrix of pi acting on phi[l] in the chosen F_l-basis.
FieldMat pi_action_on_torsion(const DrinfeldModule& phi, const Poly& l);

/// Symbolic cross-check of the cyclic-vector search for r <= 3: whether
/// det[x | ebar_1 x | ... ] vanishes identically as a polynomial.
bool cyclic_det_identically_zero(const std::vector<FieldMat>& ops);

}  // namespace drinmod

#endif
