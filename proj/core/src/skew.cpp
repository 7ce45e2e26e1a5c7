// SPDX-License-Identifier: Apache-2.0
#include "drinmod/skew.hpp"

namespace drinmod {

void SkewPoly::norm() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

SkewPoly SkewPoly::constant(FieldElem c) {
  SkewPoly r(c.field());
  if (!c.is_zero()) r.c_ = {std::move(c)};
  return r;
}

SkewPoly SkewPoly::tau_power(const FieldPtr& k, int e) {
  SkewPoly r(k);
  r.c_.assign(e + 1, k->zero());
  r.c_.back() = k->one();
  return r;
}

SkewPoly SkewPoly::from_coeffs(FieldPtr k, std::vector<FieldElem> c) {
  SkewPoly r(std::move(k));
  for (const auto& x : c)
    if (x.field().get() != r.k_.get())
      throw Error("skew coefficient from a different field");
  r.c_ = std::move(c);
  r.norm();
  return r;
}

FieldElem SkewPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return k_->zero();
  return c_[i];
}

const FieldElem& SkewPoly::lc() const {
  if (is_zero()) throw Error("leading coefficient of zero skew polynomial");
  return c_.back();
}

static void check_same_skew(const SkewPoly& a, const SkewPoly& b) {
  if (!a.field() || !b.field()) throw Error("operation on detached SkewPoly");
  if (a.field().get() != b.field().get())
    throw Error("skew polynomials over different fields");
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
  check_same_skew(*this, o);
  SkewPoly r(k_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), k_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.norm();
  return r;
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const {
  check_same_skew(*this, o);
  return *this + (-o);
}

SkewPoly SkewPoly::operator-() const {
  SkewPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

SkewPoly SkewPoly::operator*(const FieldElem& s) const {
  SkewPoly r = *this;
  for (auto& x : r.c_) x = s * x;
  r.norm();
  return r;
}

bool SkewPoly::operator==(const SkewPoly& o) const {
  check_same_skew(*this, o);
  return c_ == o.c_;
}

// ---------------------------------------------------------------------------
// SkewRing

SkewRing::SkewRing(FieldPtr k, FieldPtr fq)
    : k_(std::move(k)), fq_(std::move(fq)), s_(fq_->abs_degree()),
      table_(k_, fq_) {
  if (!k_->has_level(fq_.get()))
    throw Error("SkewRing: fq is not a level of k");
}

SkewPoly SkewRing::mul(const SkewPoly& u, const SkewPoly& v) const {
  check_same_skew(u, v);
  if (u.field().get() != k_.get())
    throw Error("SkewRing: operand from a different field");
  if (u.is_zero() || v.is_zero()) return SkewPoly::zero(k_);
  std::vector<FieldElem> out(u.degree() + v.degree() + 1, k_->zero());
  // tau^i c = c^(q^i) tau^i
  for (int i = 0; i <= u.degree(); ++i) {
    FieldElem ui = u.coeff(i);
    if (ui.is_zero()) continue;
    for (int j = 0; j <= v.degree(); ++j) {
      FieldElem vj = v.coeff(j);
      if (vj.is_zero()) continue;
      out[i + j] += ui * twist(vj, i);
    }
  }
  return SkewPoly::from_coeffs(k_, std::move(out));
}

std::pair<SkewPoly, SkewPoly> SkewRing::right_divmod(const SkewPoly& d,
                                                     const SkewPoly& s) const {
  check_same_skew(d, s);
  if (s.is_zero()) throw DivisorZero("right division by zero");
  SkewPoly q = SkewPoly::zero(k_);
  SkewPoly r = d;
  int ds = s.degree();
  std::vector<FieldElem> qc(
      r.degree() >= ds ? r.degree() - ds + 1 : 0, k_->zero());
  while (!r.is_zero() && r.degree() >= ds) {
    int e = r.degree() - ds;
    // (c tau^e)(lc_s tau^ds) = c lc_s^(q^e) tau^(e+ds)
    FieldElem c = r.lc() * twist(s.lc(), e).inverse();
    qc[e] = c;
    SkewPoly term = SkewPoly::from_coeffs(
        k_, [&] {
          std::vector<FieldElem> t(e + 1, k_->zero());
          t.back() = c;
          return t;
        }());
    r = r - mul(term, s);
  }
  q = SkewPoly::from_coeffs(k_, std::move(qc));
  return {std::move(q), std::move(r)};
}

bool SkewRing::commutes(const SkewPoly& u, const SkewPoly& v) const {
  return mul(u, v) == mul(v, u);
}

FieldElem SkewRing::apply(const SkewPoly& u, const FieldElem& x) const {
  const FieldPtr& ext = x.field();
  if (!ext->has_level(k_.get()))
    throw Error("apply: point does not lie in an extension of k");
  FieldElem acc = ext->zero();
  FieldElem power = x;  // x^(q^i)
  for (int i = 0; i <= u.degree(); ++i) {
    FieldElem ui = u.coeff(i);
    if (!ui.is_zero()) acc += ext->embed(ui) * power;
    if (i < u.degree()) power = frobenius_power(power, 1, s_);
  }
  return acc;
}

}  // namespace drinmod
