// SPDX-License-Identifier: Apache-2.0
//
// Canonical string syntax for polynomials and field elements.  Terms look
// like `3T^5` or `3*T^5`; multi-term coefficients are parenthesized, e.g.
// `(3T^4+T^2+3T+1)x`.  Integers are reduced mod p.  Each tower level
// contributes one variable name; parsing binds them all.

#ifndef DRINMOD_IO_HPP
#define DRINMOD_IO_HPP

#include <map>
#include <string>

#include "drinmod/poly.hpp"
#include "drinmod/skew.hpp"

namespace drinmod {

/// Element of a field tower from a string over the tower's variables.
/// `aliases` adds extra variable bindings (e.g. "T" for the image of T).
FieldElem parse_element(const FieldPtr& k, const std::string& s,
                        const std::map<std::string, FieldElem>& aliases = {});

/// Polynomial in `var` with coefficients parsed in the given field.
Poly parse_poly(const FieldPtr& k, const std::string& s,
                const std::string& var = "T");

/// Polynomial in x over A = F_q[T] (coefficient variable "T").
XPoly parse_xpoly(const FieldPtr& fq, const std::string& s);

std::string to_string(const FieldElem& x);
std::string to_string(const Poly& a, const std::string& var = "T");
std::string to_string(const XPoly& a, const std::string& xvar = "x",
                      const std::string& tvar = "T");
std::string to_string(const Frac& a, const std::string& var = "T");
std::string to_string(const SkewPoly& u, const std::string& tauvar = "tau");

}  // namespace drinmod

#endif
