// SPDX-License-Identifier: Apache-2.0
#include "drinmod/fields.hpp"

#include <algorithm>
#include <utility>

namespace drinmod {
namespace {

using i64 = std::int64_t;
using Vp = std::vector<FieldElem>;  // polynomial over a field, little-endian

bool is_prime_int(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void vp_norm(Vp& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int vp_deg(const Vp& a) { return static_cast<int>(a.size()) - 1; }

Vp vp_add(const Field& f, const Vp& a, const Vp& b) {
  Vp r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  vp_norm(r);
  return r;
}

Vp vp_sub(const Field& f, const Vp& a, const Vp& b) {
  Vp r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  vp_norm(r);
  return r;
}

Vp vp_mul(const Field& f, const Vp& a, const Vp& b) {
  if (a.empty() || b.empty()) return {};
  Vp r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  vp_norm(r);
  return r;
}

Vp vp_scale(const Vp& a, const FieldElem& c) {
  Vp r = a;
  for (auto& x : r) x *= c;
  vp_norm(r);
  return r;
}

// Division with remainder over a field; divisor need not be monic.
std::pair<Vp, Vp> vp_divmod(const Field& f, Vp num, const Vp& den) {
  if (den.empty()) throw DivisionByZero("polynomial division by zero");
  FieldElem lcinv = den.back().inverse();
  int dd = vp_deg(den);
  Vp q;
  if (vp_deg(num) >= dd) q.assign(num.size() - den.size() + 1, f.zero());
  while (vp_deg(num) >= dd) {
    int shift = vp_deg(num) - dd;
    FieldElem c = num.back() * lcinv;
    q[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i)
      num[shift + i] -= c * den[i];
    vp_norm(num);
  }
  vp_norm(q);
  return {std::move(q), std::move(num)};
}

Vp vp_mod(const Field& f, Vp num, const Vp& den) {
  return vp_divmod(f, std::move(num), den).second;
}

Vp vp_gcd(const Field& f, Vp a, Vp b) {
  while (!b.empty()) {
    Vp r = vp_mod(f, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = vp_scale(a, a.back().inverse());
  return a;
}

Vp vp_x(const Field& f) { return Vp{f.zero(), f.one()}; }

// h(x)^p mod m using the char-p identity (sum c_i x^i)^p = sum c_i^p x^(pi).
Vp vp_pow_char_mod(const Field& f, const Vp& h, const Vp& m) {
  i64 p = f.characteristic();
  if (h.empty()) return {};
  Vp r(static_cast<std::size_t>(vp_deg(h)) * p + 1, f.zero());
  for (std::size_t i = 0; i < h.size(); ++i)
    r[i * p] = h[i].pow(p);
  return vp_mod(f, std::move(r), m);
}

// x^(|f|^e) mod m, iterating the |f|-power map (abs_degree p-th powers each).
Vp vp_field_frobenius_mod(const Field& f, Vp h, const Vp& m, int e) {
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < f.abs_degree(); ++j) h = vp_pow_char_mod(f, h, m);
  return h;
}

// Rabin's irreducibility test for a monic polynomial over a finite field.
bool vp_is_irreducible(const Field& f, const Vp& m) {
  int d = vp_deg(m);
  if (d < 1) return false;
  if (d == 1) return true;
  std::vector<int> prime_divs;
  int n = d;
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      prime_divs.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) prime_divs.push_back(n);

  // Iterates h_i = x^(|f|^i) mod m, checked at i = d and at i = d/l.
  Vp h = vp_x(f);
  std::vector<Vp> at;  // h at each step 1..d
  for (int i = 1; i <= d; ++i) {
    h = vp_field_frobenius_mod(f, std::move(h), m, 1);
    at.push_back(h);
  }
  if (vp_sub(f, at[d - 1], vp_x(f)) != Vp{}) return false;
  for (int l : prime_divs) {
    Vp diff = vp_sub(f, at[d / l - 1], vp_x(f));
    Vp g = vp_gcd(f, diff, m);
    if (vp_deg(g) != 0) return false;
  }
  return true;
}

// Extended gcd over a field: returns (g, u) with u*a = g mod m, g = gcd(a, m).
std::pair<Vp, Vp> vp_invert_mod(const Field& f, Vp a, const Vp& m) {
  Vp r0 = m, r1 = std::move(a);
  Vp s0 = {}, s1 = {f.one()};
  while (!r1.empty()) {
    auto [q, r] = vp_divmod(f, r0, r1);
    Vp s2 = vp_sub(f, s0, vp_mul(f, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return {std::move(r0), std::move(s0)};
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldElem

bool FieldElem::is_zero() const {
  if (!field_) throw Error("operation on detached field element");
  if (field_->is_prime_level()) return value_ == 0;
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool FieldElem::is_one() const {
  if (!field_) throw Error("operation on detached field element");
  if (field_->is_prime_level()) return value_ == 1;
  if (!coeffs_[0].is_one()) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

static void check_same_field(const FieldElem& a, const FieldElem& b) {
  if (!a.field() || !b.field())
    throw Error("operation on detached field element");
  if (a.field().get() != b.field().get())
    throw Error("field elements belong to different fields");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same_field(*this, o);
  FieldElem r = *this;
  if (field_->is_prime_level()) {
    r.value_ = (value_ + o.value_) % field_->characteristic();
  } else {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  }
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same_field(*this, o);
  FieldElem r = *this;
  if (field_->is_prime_level()) {
    i64 p = field_->characteristic();
    r.value_ = ((value_ - o.value_) % p + p) % p;
  } else {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  }
  return r;
}

FieldElem FieldElem::operator-() const {
  if (!field_) throw Error("operation on detached field element");
  return field_->zero() - *this;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same_field(*this, o);
  if (field_->is_prime_level()) {
    FieldElem r = *this;
    r.value_ = (value_ * o.value_) % field_->characteristic();
    return r;
  }
  std::vector<FieldElem> prod = vp_mul(*field_->base(), coeffs_, o.coeffs_);
  field_->reduce(prod);
  FieldElem r;
  r.field_ = field_;
  r.coeffs_ = std::move(prod);
  return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
  check_same_field(*this, o);
  if (field_->is_prime_level()) return value_ == o.value_;
  return coeffs_ == o.coeffs_;
}

FieldElem FieldElem::inverse() const {
  if (!field_) throw Error("operation on detached field element");
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (field_->is_prime_level()) {
    // Fermat: a^(p-2)
    return pow(field_->characteristic() - 2);
  }
  const Field& b = *field_->base();
  Vp a = coeffs_;
  vp_norm(a);
  auto [g, u] = vp_invert_mod(b, std::move(a), field_->modulus());
  if (vp_deg(g) != 0)
    throw InternalInconsistency("modulus not coprime to nonzero element");
  Vp inv = vp_scale(u, g.back().inverse());
  return field_->element(std::move(inv));
}

FieldElem FieldElem::pow(i64 e) const {
  if (!field_) throw Error("operation on detached field element");
  if (e < 0) return inverse().pow(-e);
  FieldElem acc = field_->one();
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

i64 FieldElem::prime_value() const {
  if (!field_ || !field_->is_prime_level())
    throw Error("prime_value on non-prime-level element");
  return value_;
}

const std::vector<FieldElem>& FieldElem::coeffs() const {
  if (!field_ || field_->is_prime_level())
    throw Error("coeffs on prime-level element");
  return coeffs_;
}

// ---------------------------------------------------------------------------
// Field

FieldPtr Field::prime(i64 p) {
  if (!is_prime_int(p)) throw Error("characteristic must be prime");
  if (p > (i64(1) << 31)) throw Error("characteristic too large");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  return f;
}

FieldPtr Field::extend(const FieldPtr& base, std::vector<FieldElem> modulus,
                       const std::string& var) {
  if (!base) throw Error("null base field");
  for (const auto& c : modulus)
    if (c.field().get() != base.get())
      throw Error("modulus coefficients must lie in the base field");
  vp_norm(modulus);
  if (vp_deg(modulus) < 1)
    throw Error("extension modulus must have degree >= 1");
  if (!modulus.back().is_one())
    modulus = vp_scale(modulus, modulus.back().inverse());
  if (!vp_is_irreducible(*base, modulus))
    throw ReducibleModulus("extension modulus is reducible over the base");
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = base->characteristic();
  f->base_ = base;
  f->degree_ = vp_deg(modulus);
  f->abs_degree_ = base->abs_degree() * f->degree_;
  f->modulus_ = std::move(modulus);
  f->var_ = var;
  return f;
}

void Field::reduce(std::vector<FieldElem>& c) const {
  Vp r = vp_mod(*base_, std::move(c), modulus_);
  r.resize(degree_, base_->zero());
  c = std::move(r);
}

FieldElem Field::zero() const {
  FieldElem r;
  r.field_ = shared_from_this();
  if (!is_prime_level()) r.coeffs_.assign(degree_, base_->zero());
  return r;
}

FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(i64 v) const {
  FieldElem r = zero();
  if (is_prime_level()) {
    r.value_ = (v % p_ + p_) % p_;
  } else {
    r.coeffs_[0] = base_->from_int(v);
  }
  return r;
}

FieldElem Field::gen() const {
  if (is_prime_level()) throw Error("prime field has no generator variable");
  std::vector<FieldElem> c{base_->zero(), base_->one()};
  return element(std::move(c));
}

FieldElem Field::element(std::vector<FieldElem> coeffs) const {
  if (is_prime_level()) throw Error("element() on prime level");
  for (const auto& c : coeffs)
    if (c.field().get() != base_.get())
      throw Error("element coefficients must lie in the base field");
  reduce(coeffs);
  FieldElem r;
  r.field_ = shared_from_this();
  r.coeffs_ = std::move(coeffs);
  return r;
}

bool Field::has_level(const Field* other) const {
  const Field* f = this;
  while (f) {
    if (f == other) return true;
    f = f->base_.get();
  }
  return false;
}

FieldElem Field::embed(const FieldElem& x) const {
  if (!x.field()) throw Error("embedding a detached element");
  if (x.field().get() == this) return x;
  if (!has_level(x.field().get()))
    throw Error("element not in an ancestor level of this field");
  FieldElem up = base_->embed(x);
  std::vector<FieldElem> c{std::move(up)};
  return element(std::move(c));
}

// ---------------------------------------------------------------------------
// Structural transfer between Field instances

bool same_structure(const FieldPtr& a, const FieldPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->characteristic() != b->characteristic()) return false;
  if (a->is_prime_level() != b->is_prime_level()) return false;
  if (a->is_prime_level()) return true;
  if (a->degree() != b->degree()) return false;
  if (!same_structure(a->base(), b->base())) return false;
  for (int i = 0; i <= a->degree(); ++i)
    if (flatten_prime(a->modulus()[i]) != flatten_prime(b->modulus()[i]))
      return false;
  return true;
}

FieldElem transfer(const FieldElem& x, const FieldPtr& target) {
  if (x.field().get() == target.get()) return x;
  if (!same_structure(x.field(), target))
    throw Error("transfer between structurally different fields");
  return unflatten_prime(target, flatten_prime(x));
}

// ---------------------------------------------------------------------------
// Flattening

std::vector<i64> flatten_prime(const FieldElem& x) {
  const Field& f = *x.field();
  if (f.is_prime_level()) return {x.prime_value()};
  std::vector<i64> out;
  out.reserve(f.abs_degree());
  for (const auto& c : x.coeffs()) {
    auto sub = flatten_prime(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

FieldElem unflatten_prime(const FieldPtr& field,
                          std::span<const i64> coords) {
  if (static_cast<int>(coords.size()) != field->abs_degree())
    throw Error("unflatten_prime: wrong coordinate count");
  if (field->is_prime_level()) return field->from_int(coords[0]);
  int sub = field->base()->abs_degree();
  std::vector<FieldElem> c;
  c.reserve(field->degree());
  for (int i = 0; i < field->degree(); ++i)
    c.push_back(unflatten_prime(field->base(),
                                coords.subspan(i * sub, sub)));
  return field->element(std::move(c));
}

std::vector<FieldElem> flatten_to(const FieldElem& x, const FieldPtr& sub) {
  if (x.field().get() == sub.get()) return {x};
  if (x.field()->is_prime_level())
    throw Error("flatten_to: target level not in the tower");
  std::vector<FieldElem> out;
  for (const auto& c : x.coeffs()) {
    auto part = flatten_to(c, sub);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

FieldElem unflatten_to(const FieldPtr& field, const FieldPtr& sub,
                       std::span<const FieldElem> coords) {
  if (field.get() == sub.get()) {
    if (coords.size() != 1) throw Error("unflatten_to: wrong size");
    return coords[0];
  }
  int rel = field->base()->abs_degree() / sub->abs_degree();
  std::vector<FieldElem> c;
  c.reserve(field->degree());
  for (int i = 0; i < field->degree(); ++i)
    c.push_back(unflatten_to(field->base(), sub,
                             coords.subspan(static_cast<std::size_t>(i) * rel,
                                            rel)));
  return field->element(std::move(c));
}

FieldElem frobenius_power(const FieldElem& x, int e, int s) {
  FieldElem r = x;
  i64 p = x.field()->characteristic();
  for (int i = 0; i < e * s; ++i) r = r.pow(p);
  return r;
}

// ---------------------------------------------------------------------------
// FrobeniusTable

FrobeniusTable::FrobeniusTable(FieldPtr field, const FieldPtr& sub) {
  if (!field->has_level(sub.get()))
    throw Error("FrobeniusTable: sub is not a level of field");
  field_ = std::move(field);
  p_ = field_->characteristic();
  dim_ = field_->abs_degree();
  int s = sub->abs_degree();
  if (field_->abs_degree() % s != 0)
    throw InternalInconsistency("tower degrees not multiplicative");
  order_ = field_->abs_degree() / s;

  // Matrix of x -> x^q on the flattened F_p coordinates.
  std::vector<i64> m(static_cast<std::size_t>(dim_) * dim_, 0);
  for (int j = 0; j < dim_; ++j) {
    std::vector<i64> unit(dim_, 0);
    unit[j] = 1;
    FieldElem b = unflatten_prime(field_, unit);
    std::vector<i64> img = flatten_prime(frobenius_power(b, 1, s));
    for (int i = 0; i < dim_; ++i) m[static_cast<std::size_t>(i) * dim_ + j] = img[i];
  }
  power_.resize(order_);
  power_[0].assign(static_cast<std::size_t>(dim_) * dim_, 0);
  for (int i = 0; i < dim_; ++i) power_[0][static_cast<std::size_t>(i) * dim_ + i] = 1;
  for (int e = 1; e < order_; ++e) {
    power_[e].assign(static_cast<std::size_t>(dim_) * dim_, 0);
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < dim_; ++k) {
        i64 v = m[static_cast<std::size_t>(i) * dim_ + k];
        if (v == 0) continue;
        for (int j = 0; j < dim_; ++j)
          power_[e][static_cast<std::size_t>(i) * dim_ + j] =
              (power_[e][static_cast<std::size_t>(i) * dim_ + j] +
               v * power_[e - 1][static_cast<std::size_t>(k) * dim_ + j]) % p_;
      }
  }
}

FieldElem FrobeniusTable::q_power(const FieldElem& x, int e) const {
  if (x.field().get() != field_.get())
    throw Error("FrobeniusTable: element from a different field");
  e %= order_;
  if (e < 0) e += order_;
  if (e == 0) return x;
  const auto& m = power_[e];
  std::vector<i64> v = flatten_prime(x);
  std::vector<i64> out(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    i64 acc = 0;
    const i64* row = m.data() + static_cast<std::size_t>(i) * dim_;
    for (int j = 0; j < dim_; ++j) acc += row[j] * v[j];
    out[i] = acc % p_;
  }
  return unflatten_prime(field_, out);
}

}  // namespace drinmod
