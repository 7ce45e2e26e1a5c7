// SPDX-License-Identifier: Apache-2.0
#include "drinmod/poly.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace drinmod {

using i64 = std::int64_t;

// ---------------------------------------------------------------------------
// Poly

void Poly::norm() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::gen(const FieldPtr& k) {
  Poly r(k);
  r.c_ = {k->zero(), k->one()};
  return r;
}

Poly Poly::constant(FieldElem c) {
  Poly r(c.field());
  if (!c.is_zero()) r.c_ = {std::move(c)};
  return r;
}

Poly Poly::from_coeffs(FieldPtr k, std::vector<FieldElem> c) {
  Poly r(std::move(k));
  for (const auto& x : c)
    if (x.field().get() != r.k_.get())
      throw Error("polynomial coefficient from a different field");
  r.c_ = std::move(c);
  r.norm();
  return r;
}

Poly Poly::from_ints(const FieldPtr& k, const std::vector<i64>& c) {
  std::vector<FieldElem> v;
  v.reserve(c.size());
  for (i64 x : c) v.push_back(k->from_int(x));
  return from_coeffs(k, std::move(v));
}

FieldElem Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return k_->zero();
  return c_[i];
}

const FieldElem& Poly::lc() const {
  if (is_zero()) throw Error("leading coefficient of zero polynomial");
  return c_.back();
}

static void check_same_poly_field(const Poly& a, const Poly& b) {
  if (!a.valid() || !b.valid()) throw Error("operation on detached poly");
  if (a.field().get() != b.field().get())
    throw Error("polynomials over different fields");
}

Poly Poly::operator+(const Poly& o) const {
  check_same_poly_field(*this, o);
  Poly r(k_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), k_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.norm();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_same_poly_field(*this, o);
  Poly r(k_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), k_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
  r.norm();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_same_poly_field(*this, o);
  Poly r(k_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, k_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.norm();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly Poly::operator*(const FieldElem& s) const {
  Poly r = *this;
  for (auto& x : r.c_) x *= s;
  r.norm();
  return r;
}

bool Poly::operator==(const Poly& o) const {
  check_same_poly_field(*this, o);
  return c_ == o.c_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  check_same_poly_field(*this, d);
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  Poly q(k_), r = *this;
  FieldElem lcinv = d.lc().inverse();
  int dd = d.degree();
  if (r.degree() >= dd) q.c_.assign(r.degree() - dd + 1, k_->zero());
  while (r.degree() >= dd) {
    int shift = r.degree() - dd;
    FieldElem c = r.lc() * lcinv;
    q.c_[shift] = c;
    for (int i = 0; i <= dd; ++i) r.c_[shift + i] -= c * d.c_[i];
    r.norm();
  }
  q.norm();
  return {std::move(q), std::move(r)};
}

Poly Poly::exact_div(const Poly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw Error("exact_div: not divisible");
  return q;
}

bool Poly::divides(const Poly& multiple) const {
  if (is_zero()) return multiple.is_zero();
  return (multiple % *this).is_zero();
}

Poly Poly::pow(i64 e) const {
  if (e < 0) throw Error("negative polynomial power");
  Poly acc = Poly::one(k_);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly r(k_);
  r.c_.assign(c_.size() + k, k_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

Poly Poly::derivative() const {
  Poly r(k_);
  if (degree() < 1) return r;
  r.c_.assign(c_.size() - 1, k_->zero());
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_[i - 1] = c_[i] * k_->from_int(static_cast<i64>(i));
  r.norm();
  return r;
}

FieldElem Poly::eval(const FieldElem& x) const {
  const FieldPtr& target = x.field();
  if (!target->has_level(k_.get()))
    throw Error("evaluation point not in an extension of coefficient field");
  FieldElem acc = target->zero();
  for (int i = degree(); i >= 0; --i) acc = acc * x + target->embed(c_[i]);
  return acc;
}

Poly Poly::monic(FieldElem* unit) const {
  if (is_zero()) {
    if (unit) *unit = k_->one();
    return *this;
  }
  if (unit) *unit = lc();
  return *this * lc().inverse();
}

Poly gcd(const Poly& a, const Poly& b) {
  check_same_poly_field(a, b);
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

XgcdResult xgcd(const Poly& a, const Poly& b) {
  const FieldPtr& k = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(k), s1 = Poly::zero(k);
  Poly t0 = Poly::zero(k), t1 = Poly::one(k);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (!r0.is_zero()) {
    FieldElem u = r0.lc().inverse();
    r0 = r0 * u; s0 = s0 * u; t0 = t0 * u;
  }
  return {std::move(r0), std::move(s0), std::move(t0)};
}

int poly_cmp(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    auto va = flatten_prime(a.coeff(i));
    auto vb = flatten_prime(b.coeff(i));
    for (std::size_t j = va.size(); j-- > 0;) {
      if (va[j] != vb[j]) return va[j] < vb[j] ? -1 : 1;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Factorization machinery

Poly Factorization::reassemble() const {
  Poly r = Poly::constant(unit);
  for (const auto& [f, m] : factors) r *= f.pow(m);
  return r;
}

namespace {

// c^(1/p) in a finite field: c^(p^(D-1)) with D the absolute degree.
FieldElem pth_root(const FieldElem& c) {
  int d = c.field()->abs_degree();
  FieldElem r = c;
  i64 p = c.field()->characteristic();
  for (int i = 0; i < d - 1; ++i) r = r.pow(p);
  return r;
}

// For f with f' = 0 (so f = g(x^p)), the polynomial g.
Poly pth_root_poly(const Poly& f) {
  const FieldPtr& k = f.field();
  i64 p = k->characteristic();
  std::vector<FieldElem> c;
  c.reserve(f.degree() / p + 1);
  for (int i = 0; i * p <= f.degree(); ++i) c.push_back(pth_root(f.coeff(i * p)));
  return Poly::from_coeffs(k, std::move(c));
}

// h^p mod m via the char-p identity.
Poly pow_char_mod(const Poly& h, const Poly& m) {
  const FieldPtr& k = h.field();
  i64 p = k->characteristic();
  if (h.is_zero()) return h;
  std::vector<FieldElem> c(static_cast<std::size_t>(h.degree()) * p + 1,
                           k->zero());
  for (int i = 0; i <= h.degree(); ++i) c[static_cast<std::size_t>(i) * p] = h.coeff(i).pow(p);
  return Poly::from_coeffs(k, std::move(c)) % m;
}

// h^(|k|) mod m.
Poly pow_field_mod(Poly h, const Poly& m) {
  int d = h.field()->abs_degree();
  for (int i = 0; i < d; ++i) h = pow_char_mod(h, m);
  return h;
}

FieldElem random_elem(const FieldPtr& k, std::mt19937_64& rng) {
  std::vector<i64> v(k->abs_degree());
  for (auto& x : v) x = static_cast<i64>(rng() % static_cast<std::uint64_t>(k->characteristic()));
  return unflatten_prime(k, v);
}

Poly random_poly_below(const FieldPtr& k, int deg_bound, std::mt19937_64& rng) {
  std::vector<FieldElem> c;
  c.reserve(deg_bound);
  for (int i = 0; i < deg_bound; ++i) c.push_back(random_elem(k, rng));
  return Poly::from_coeffs(k, std::move(c));
}

using u128 = unsigned __int128;

// |k|^d, guarded against overflow of the 128-bit exponent space.
u128 field_power(const FieldPtr& k, int d) {
  u128 acc = 1;
  u128 p = static_cast<u128>(k->characteristic());
  i64 steps = static_cast<i64>(k->abs_degree()) * d;
  for (i64 i = 0; i < steps; ++i) {
    if (acc > (u128(1) << 120)) throw Error("field size exceeds supported range");
    acc *= p;
  }
  return acc;
}

Poly pow_mod_big(const Poly& a, u128 e, const Poly& m) {
  Poly acc = Poly::one(a.field());
  Poly base = a % m;
  while (e > 0) {
    if (e & 1) acc = acc * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return acc;
}

// Equal-degree splitting of a monic squarefree product of irreducibles of
// degree d (Cantor-Zassenhaus; trace map in characteristic 2).
void equal_degree_split(const Poly& f, int d, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const FieldPtr& k = f.field();
  i64 p = k->characteristic();
  Poly x = Poly::gen(k);
  for (;;) {
    Poly a = random_poly_below(k, f.degree(), rng);
    if (a.degree() < 1) continue;
    Poly g = gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f.exact_div(g), d, rng, out);
      return;
    }
    Poly b(k);
    if (p == 2) {
      // Trace map to F_2: sum of 2^i-th powers, i < log2(|k|^d).
      int steps = k->abs_degree() * d;
      Poly t = a % f;
      b = t;
      for (int i = 1; i < steps; ++i) {
        t = t * t % f;
        b = b + t;
      }
    } else {
      u128 e = (field_power(k, d) - 1) / 2;
      b = pow_mod_big(a, e, f) - Poly::one(k);
    }
    g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f.exact_div(g), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a) {
  if (a.is_zero()) throw Error("squarefree decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  Poly f = a.monic();
  if (f.degree() == 0) return out;
  Poly fp = f.derivative();
  if (fp.is_zero()) {
    for (auto& [g, m] : squarefree_decomposition(pth_root_poly(f)))
      out.emplace_back(g, m * static_cast<int>(f.field()->characteristic()));
    return out;
  }
  Poly c = gcd(f, fp);
  Poly w = f.exact_div(c);
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w.exact_div(y);
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = std::move(y);
    c = c.exact_div(w);
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree_decomposition(pth_root_poly(c)))
      out.emplace_back(g, m * static_cast<int>(f.field()->characteristic()));
  }
  return out;
}

std::vector<std::pair<Poly, int>> distinct_degree_split(const Poly& a) {
  Poly f = a.monic();
  std::vector<std::pair<Poly, int>> out;
  Poly x = Poly::gen(f.field());
  Poly h = x % f;
  int d = 0;
  while (f.degree() > 0 && 2 * (d + 1) <= f.degree()) {
    ++d;
    h = pow_field_mod(std::move(h), f);
    Poly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f.exact_div(g);
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

Factorization factor(const Poly& a, std::uint64_t seed) {
  if (a.is_zero()) throw Error("factorization of zero");
  Factorization out;
  Poly f = a.monic(&out.unit);
  std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL);
  for (const auto& [sf, mult] : squarefree_decomposition(f)) {
    for (const auto& [prod, d] : distinct_degree_split(sf)) {
      std::vector<Poly> parts;
      equal_degree_split(prod, d, rng, parts);
      for (auto& irr : parts) out.factors.emplace_back(std::move(irr), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) {
              return poly_cmp(x.first, y.first) < 0;
            });
  return out;
}

bool is_irreducible(const Poly& a) {
  if (a.degree() < 1) return false;
  Poly f = a.monic();
  int d = f.degree();
  if (d == 1) return true;
  std::vector<int> prime_divs;
  int n = d;
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      prime_divs.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) prime_divs.push_back(n);
  Poly x = Poly::gen(f.field());
  Poly h = x % f;
  std::vector<Poly> at;
  at.reserve(d);
  for (int i = 1; i <= d; ++i) {
    h = pow_field_mod(std::move(h), f);
    at.push_back(h);
  }
  if (at[d - 1] != x % f) return false;
  for (int l : prime_divs) {
    Poly g = gcd(at[d / l - 1] - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

Poly find_irreducible(const FieldPtr& k, int degree) {
  if (degree < 1) throw Error("find_irreducible: degree must be >= 1");
  i64 p = k->characteristic();
  int digits = k->abs_degree();
  // Odometer over the flattened coefficients of (c_0, ..., c_{degree-1}).
  std::vector<i64> odo(static_cast<std::size_t>(degree) * digits, 0);
  for (;;) {
    std::vector<FieldElem> c;
    c.reserve(degree + 1);
    for (int i = 0; i < degree; ++i)
      c.push_back(unflatten_prime(
          k, std::span<const i64>(odo).subspan(static_cast<std::size_t>(i) * digits, digits)));
    c.push_back(k->one());
    Poly cand = Poly::from_coeffs(k, std::move(c));
    if (is_irreducible(cand)) return cand;
    std::size_t pos = 0;
    while (pos < odo.size() && ++odo[pos] == p) odo[pos++] = 0;
    if (pos == odo.size())
      throw InternalInconsistency("no irreducible polynomial found");
  }
}

// ---------------------------------------------------------------------------
// Frac

Frac::Frac(Poly num) : num_(std::move(num)) {
  den_ = Poly::one(num_.field());
}

Frac::Frac(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  check_same_poly_field(num_, den_);
  if (den_.is_zero()) throw DivisionByZero("fraction with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::one(num_.field());
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  FieldElem u = den_.lc();
  if (!u.is_one()) {
    FieldElem inv = u.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Frac Frac::operator+(const Frac& o) const {
  return Frac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Frac Frac::operator-(const Frac& o) const {
  return Frac(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
Frac Frac::operator*(const Frac& o) const {
  return Frac(num_ * o.num_, den_ * o.den_);
}
Frac Frac::operator/(const Frac& o) const {
  if (o.is_zero()) throw DivisionByZero("division by zero fraction");
  return Frac(num_ * o.den_, den_ * o.num_);
}
Frac Frac::operator-() const { return Frac(-num_, den_); }

Frac Frac::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero fraction");
  return Frac(den_, num_);
}

bool Frac::operator==(const Frac& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

// ---------------------------------------------------------------------------
// XPoly

void XPoly::norm() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly XPoly::one(const FieldPtr& k) { return constant(Poly::one(k)); }

XPoly XPoly::gen(const FieldPtr& k) {
  XPoly r(k);
  r.c_ = {Poly::zero(k), Poly::one(k)};
  return r;
}

XPoly XPoly::constant(Poly c) {
  XPoly r(c.field());
  if (!c.is_zero()) r.c_ = {std::move(c)};
  return r;
}

XPoly XPoly::from_coeffs(FieldPtr k, std::vector<Poly> c) {
  XPoly r(std::move(k));
  for (const auto& x : c)
    if (x.field().get() != r.k_.get())
      throw Error("XPoly coefficient over a different field");
  r.c_ = std::move(c);
  r.norm();
  return r;
}

Poly XPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Poly::zero(k_);
  return c_[i];
}

static void check_same_x(const XPoly& a, const XPoly& b) {
  if (!a.field() || !b.field()) throw Error("operation on detached XPoly");
  if (a.field().get() != b.field().get())
    throw Error("XPolys over different coefficient fields");
}

XPoly XPoly::operator+(const XPoly& o) const {
  check_same_x(*this, o);
  XPoly r(k_);
  r.c_.assign(std::max(c_.size(), o.c_.size()), Poly::zero(k_));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.norm();
  return r;
}

XPoly XPoly::operator-(const XPoly& o) const {
  check_same_x(*this, o);
  return *this + (-o);
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

XPoly XPoly::operator*(const XPoly& o) const {
  check_same_x(*this, o);
  XPoly r(k_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Poly::zero(k_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.norm();
  return r;
}

XPoly XPoly::operator*(const Poly& s) const {
  XPoly r = *this;
  for (auto& x : r.c_) x *= s;
  r.norm();
  return r;
}

bool XPoly::operator==(const XPoly& o) const {
  check_same_x(*this, o);
  return c_ == o.c_;
}

std::pair<XPoly, XPoly> XPoly::divmod(const XPoly& d) const {
  check_same_x(*this, d);
  if (d.is_zero()) throw DivisionByZero("XPoly division by zero");
  if (d.c_.back().degree() != 0)
    throw Error("XPoly divmod requires a unit leading coefficient");
  FieldElem lcinv = d.c_.back().coeff(0).inverse();
  XPoly q(k_), r = *this;
  int dd = d.degree();
  if (r.degree() >= dd) q.c_.assign(r.degree() - dd + 1, Poly::zero(k_));
  while (r.degree() >= dd) {
    int shift = r.degree() - dd;
    Poly c = r.c_.back() * lcinv;
    q.c_[shift] = c;
    for (int i = 0; i <= dd; ++i) r.c_[shift + i] -= c * d.c_[i];
    r.norm();
  }
  q.norm();
  return {std::move(q), std::move(r)};
}

XPoly XPoly::exact_div(const XPoly& d) const {
  check_same_x(*this, d);
  if (d.is_zero()) throw DivisionByZero("XPoly division by zero");
  XPoly q(k_), r = *this;
  int dd = d.degree();
  if (r.degree() >= dd) q.c_.assign(r.degree() - dd + 1, Poly::zero(k_));
  while (r.degree() >= dd) {
    int shift = r.degree() - dd;
    Poly c = r.c_.back().exact_div(d.c_.back());
    q.c_[shift] = c;
    for (int i = 0; i <= dd; ++i) r.c_[shift + i] -= c * d.c_[i];
    r.norm();
  }
  if (!r.is_zero()) throw Error("XPoly exact_div: not divisible");
  q.norm();
  return q;
}

XPoly XPoly::pow(i64 e) const {
  if (e < 0) throw Error("negative XPoly power");
  XPoly acc = XPoly::one(k_);
  XPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

XPoly XPoly::derivative() const {
  XPoly r(k_);
  if (degree() < 1) return r;
  r.c_.assign(c_.size() - 1, Poly::zero(k_));
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_[i - 1] = c_[i] * k_->from_int(static_cast<i64>(i));
  r.norm();
  return r;
}

Poly XPoly::eval(const Poly& a) const {
  Poly acc = Poly::zero(k_);
  for (int i = degree(); i >= 0; --i) acc = acc * a + c_[i];
  return acc;
}

Poly XPoly::map_coeffs(const FieldElem& t) const {
  const FieldPtr& target = t.field();
  std::vector<FieldElem> out;
  out.reserve(c_.size());
  for (const auto& ci : c_) out.push_back(ci.eval(t));
  return Poly::from_coeffs(target, std::move(out));
}

// ---------------------------------------------------------------------------
// Subresultant resultant

namespace {

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B, no divisions.
XPoly pseudo_rem(const XPoly& A, const XPoly& B) {
  XPoly R = A;
  Poly lb = B.coeff(B.degree());
  int e = A.degree() - B.degree() + 1;
  while (!R.is_zero() && R.degree() >= B.degree()) {
    int shift = R.degree() - B.degree();
    XPoly S = B * R.coeff(R.degree());
    // shift S by x^shift
    std::vector<Poly> sc(static_cast<std::size_t>(shift), Poly::zero(A.field()));
    for (int i = 0; i <= S.degree(); ++i) sc.push_back(S.coeff(i));
    R = R * lb - XPoly::from_coeffs(A.field(), std::move(sc));
    --e;
  }
  for (; e > 0; --e) R = R * lb;
  return R;
}

XPoly div_scalar_exact(const XPoly& A, const Poly& s) {
  std::vector<Poly> c;
  c.reserve(A.degree() + 1);
  for (int i = 0; i <= A.degree(); ++i) c.push_back(A.coeff(i).exact_div(s));
  return XPoly::from_coeffs(A.field(), std::move(c));
}

}  // namespace

Poly resultant_x(const XPoly& a, const XPoly& b) {
  check_same_x(a, b);
  if (a.is_zero() || b.is_zero())
    throw Error("resultant of zero polynomial");
  const FieldPtr& k = a.field();
  XPoly A = a, B = b;
  int sign = 1;
  if (A.degree() < B.degree()) {
    if ((A.degree() & 1) && (B.degree() & 1)) sign = -sign;
    std::swap(A, B);
  }
  if (B.degree() == 0) {
    Poly r = B.coeff(0).pow(A.degree());
    return sign < 0 ? -r : r;
  }
  Poly g = Poly::one(k), h = Poly::one(k);
  for (;;) {
    int dA = A.degree(), dB = B.degree();
    int delta = dA - dB;
    if ((dA & 1) && (dB & 1)) sign = -sign;
    XPoly R = pseudo_rem(A, B);
    if (R.is_zero()) return Poly::zero(k);  // common factor of positive degree
    A = B;
    B = div_scalar_exact(R, g * h.pow(delta));
    g = A.coeff(A.degree());
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = g.pow(delta).exact_div(h.pow(delta - 1));
    }
    if (B.degree() == 0) break;
  }
  // B is a nonzero constant; A has degree >= 1.  An abnormal remainder
  // sequence (degree drop > 1 at the last step) leaves deg A > 1; the
  // accumulated h absorbs the defect.
  int dA = A.degree();
  Poly res = B.coeff(0).pow(dA);
  if (dA > 1) res = res.exact_div(h.pow(dA - 1));
  return sign < 0 ? -res : res;
}

}  // namespace drinmod
