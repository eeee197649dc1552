#include "laurentbr/basefield.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace laurentbr {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeChar::PrimeChar(int p) : p_(p) {
  if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
}

namespace {

int mod_p(long a, int p) {
  long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Polynomials over F_p as int vectors, low to high.
std::vector<int> zp_mod(std::vector<int> a, const std::vector<int>& m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  int inv_lead = 1;
  for (int x = 1; x < p; ++x)
    if ((x * m.back()) % p == 1) inv_lead = x;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    int c = mod_p(static_cast<long>(a[i]) * inv_lead, p);
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) a[i - dm + j] = mod_p(a[i - dm + j] - static_cast<long>(c) * m[j], p);
  }
  a.resize(std::max(0, std::min<int>(static_cast<int>(a.size()), dm)));
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<int>& poly, int p) {
  std::vector<int> f = poly;
  while (!f.empty() && mod_p(f.back(), p) == 0) f.pop_back();
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  if (d == 1) return true;
  // trial division by every monic polynomial of degree 1..d/2
  for (int k = 1; 2 * k <= d; ++k) {
    long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      std::vector<int> g(k + 1);
      long x = idx;
      for (int i = 0; i < k; ++i) {
        g[i] = static_cast<int>(x % p);
        x /= p;
      }
      g[k] = 1;
      if (zp_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> default_modulus(int p, int d) {
  if (d == 1) return {0, 1};
  long count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (long idx = 0; idx < count; ++idx) {
    std::vector<int> g(d + 1);
    long x = idx;
    for (int i = 0; i < d; ++i) {
      g[i] = static_cast<int>(x % p);
      x /= p;
    }
    g[d] = 1;
    if (is_irreducible_mod_p(g, p)) return g;
  }
  throw Error("no irreducible polynomial found");
}

FiniteField::FiniteField(int p, std::vector<int> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
  for (auto& c : modulus_) c = mod_p(c, p);
  while (!modulus_.empty() && modulus_.back() == 0) modulus_.pop_back();
  d_ = static_cast<int>(modulus_.size()) - 1;
  if (d_ < 1) throw Error("field modulus must have degree >= 1");
  if (modulus_.back() != 1) throw Error("field modulus must be monic");
  if (!is_irreducible_mod_p(modulus_, p)) throw Error("field modulus is reducible");
  std::uint64_t q = 1;
  for (int i = 0; i < d_; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > (1u << 16)) throw Error("finite fields are limited to order <= 65536");
  }
  q_ = static_cast<std::uint32_t>(q);

  // primitive element by order test
  std::vector<std::uint32_t> prime_factors;
  {
    std::uint32_t m = q_ - 1;
    for (std::uint32_t f = 2; f * f <= m; ++f)
      if (m % f == 0) {
        prime_factors.push_back(f);
        while (m % f == 0) m /= f;
      }
    if (m > 1) prime_factors.push_back(m);
  }
  auto slow_pow = [&](Fq a, std::uint64_t e) {
    Fq r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  Fq gen = 0;
  for (Fq g = 1; g < q_; ++g) {
    bool ok = true;
    for (auto f : prime_factors)
      if (slow_pow(g, (q_ - 1) / f) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen = g;
      break;
    }
  }
  if (q_ == 2) gen = 1;
  exp_.assign(q_, 0);
  log_.assign(q_, 0);
  Fq x = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = mul_slow(x, gen);
  }

  root_.assign(q_, 0);
  wp_pre_.assign(q_, -1);
  for (Fq a = 0; a < q_; ++a) {
    root_[frobenius(a)] = a;
    const Fq y = wp(a);
    if (wp_pre_[y] < 0) wp_pre_[y] = a;
  }
  for (Fq a = 0; a < q_; ++a)
    if (trace(a) == 1) {
      tau_ = a;
      break;
    }
}

std::vector<int> FiniteField::digits(Fq a) const {
  std::vector<int> out(d_);
  for (int i = 0; i < d_; ++i) {
    out[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return out;
}

Fq FiniteField::from_digits(const std::vector<int>& dg) const {
  Fq r = 0;
  for (int i = d_ - 1; i >= 0; --i) r = r * p_ + (i < static_cast<int>(dg.size()) ? mod_p(dg[i], p_) : 0);
  return r;
}

Fq FiniteField::from_int(long n) const { return static_cast<Fq>(mod_p(n, p_)); }

Fq FiniteField::add(Fq a, Fq b) const {
  if (p_ == 2) return a ^ b;
  Fq r = 0, place = 1;
  while (a || b) {
    r += place * ((a % p_ + b % p_) % p_);
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

Fq FiniteField::sub(Fq a, Fq b) const {
  if (p_ == 2) return a ^ b;
  Fq r = 0, place = 1;
  while (a || b) {
    r += place * ((a % p_ + p_ - b % p_) % p_);
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

Fq FiniteField::mul_slow(Fq a, Fq b) const {
  auto da = digits(a), db = digits(b);
  std::vector<int> prod(2 * d_, 0);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  return from_digits(zp_mod(prod, modulus_, p_));
}

Fq FiniteField::mul(Fq a, Fq b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
}

Fq FiniteField::inv(Fq a) const {
  if (a == 0) throw Error("division by zero in finite field");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Fq FiniteField::pow(Fq a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

Fq FiniteField::trace(Fq a) const {
  Fq s = 0, x = a;
  for (int i = 0; i < d_; ++i) {
    s = add(s, x);
    x = frobenius(x);
  }
  return s;
}

std::optional<Fq> FiniteField::wp_preimage(Fq a) const {
  if (wp_pre_[a] < 0) return std::nullopt;
  return static_cast<Fq>(wp_pre_[a]);
}

std::string fq_to_string(const FiniteField& F, Fq a) {
  if (F.degree() == 1) return std::to_string(a);
  if (a == 0) return "0";
  auto dg = F.digits(a);
  std::string out;
  for (int i = F.degree() - 1; i >= 0; --i) {
    if (dg[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(dg[i]);
      continue;
    }
    if (dg[i] != 1) out += std::to_string(dg[i]) + "*";
    out += "w";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// BaseFieldDesc

FieldPtr BaseFieldDesc::prime_field(int p) {
  return std::make_shared<const BaseFieldDesc>(Kind::PrimeField, FiniteField(p, {0, 1}));
}

FieldPtr BaseFieldDesc::finite_field(int p, std::vector<int> modulus) {
  FiniteField F(p, std::move(modulus));
  const Kind k = F.degree() == 1 ? Kind::PrimeField : Kind::FiniteField;
  if (k == Kind::PrimeField) return prime_field(p);
  return std::make_shared<const BaseFieldDesc>(k, std::move(F));
}

FieldPtr BaseFieldDesc::rational_functions(int p, std::vector<int> modulus) {
  FiniteField F(p, std::move(modulus));
  if (F.degree() == 1) F = FiniteField(p, {0, 1});
  return std::make_shared<const BaseFieldDesc>(Kind::RatFunc, std::move(F));
}

namespace {

// Parses a polynomial in w over Z such as "w^2+w+1" (coefficients reduced mod p later).
std::vector<int> parse_w_poly(const std::string& s) {
  std::vector<int> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  int sign = 1;
  bool expect_term = true;
  while (true) {
    skip();
    if (i >= s.size()) break;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw Error("malformed modulus '" + s + "'");
    long coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) coeff = coeff * 10 + (s[i++] - '0');
      have_coeff = true;
      skip();
      if (i < s.size() && s[i] == '*') ++i;
      skip();
    }
    int power = 0;
    if (i < s.size() && s[i] == 'w') {
      ++i;
      power = 1;
      skip();
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip();
        power = 0;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
          throw Error("malformed modulus '" + s + "'");
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) power = power * 10 + (s[i++] - '0');
      }
    } else if (!have_coeff) {
      throw Error("malformed modulus '" + s + "'");
    }
    if (static_cast<int>(out.size()) <= power) out.resize(power + 1, 0);
    out[power] += static_cast<int>(sign * coeff);
    sign = 1;
    expect_term = false;
  }
  if (out.empty()) throw Error("empty modulus");
  return out;
}

}  // namespace

FieldPtr BaseFieldDesc::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s[0] != 'F') throw Error("malformed base field descriptor '" + text + "'");
  std::size_t i = 1;
  long q = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    q = q * 10 + (s[i++] - '0');
    if (q > 100000000) throw Error("field order too large in '" + text + "'");
  }
  if (q < 2) throw Error("malformed base field descriptor '" + text + "'");
  bool ratfunc = false;
  if (s.compare(i, 3, "(t)") == 0) {
    ratfunc = true;
    i += 3;
  }
  std::optional<std::vector<int>> modulus;
  if (i < s.size()) {
    if (s[i] != ':') throw Error("malformed base field descriptor '" + text + "'");
    modulus = parse_w_poly(s.substr(i + 1));
  }
  int p = 0, d = 0;
  for (long c = 2; c <= q; ++c)
    if (q % c == 0) {
      p = static_cast<int>(c);
      break;
    }
  long r = q;
  while (r % p == 0) {
    r /= p;
    ++d;
  }
  if (r != 1) throw Error("field order " + std::to_string(q) + " is not a prime power");
  std::vector<int> m = modulus ? *modulus : default_modulus(p, d);
  {
    // modulus degree must match the order
    FiniteField probe(p, m);
    if (probe.degree() != d) throw Error("modulus degree does not match field order in '" + text + "'");
  }
  if (ratfunc) return rational_functions(p, m);
  return finite_field(p, m);
}

std::string BaseFieldDesc::to_string() const {
  std::string out = "F" + std::to_string(fq_.order());
  if (kind_ == Kind::RatFunc) out += "(t)";
  if (fq_.degree() > 1) out += ":" + fqpoly::to_string(FiniteField(fq_.p(), {0, 1}), [&] {
    FqPoly m;
    for (int c : fq_.modulus()) m.push_back(static_cast<Fq>(c));
    return m;
  }(), "w");
  return out;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------------------
// polynomial helpers

namespace fqpoly {

void trim(FqPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const FqPoly& a) { return static_cast<int>(a.size()) - 1; }

FqPoly add(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

FqPoly sub(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

FqPoly mul(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

FqPoly scale(const FiniteField& F, const FqPoly& a, Fq c) {
  FqPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

void divmod(const FiniteField& F, const FqPoly& a, const FqPoly& b, FqPoly& q, FqPoly& r) {
  if (b.empty()) throw Error("polynomial division by zero");
  r = a;
  trim(r);
  const int db = degree(b);
  if (degree(r) < db) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, 0);
  const Fq lead_inv = F.inv(b.back());
  for (int i = degree(r); i >= db; --i) {
    const Fq c = F.mul(r[i], lead_inv);
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, b[j]));
  }
  trim(r);
  trim(q);
}

FqPoly mod(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly q, r;
  divmod(F, a, b, q, r);
  return r;
}

FqPoly quot(const FiniteField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly q, r;
  divmod(F, a, b, q, r);
  return q;
}

FqPoly monic(const FiniteField& F, const FqPoly& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

FqPoly gcd(const FiniteField& F, FqPoly a, FqPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FqPoly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

FqPoly derivative(const FiniteField& F, const FqPoly& a) {
  if (a.size() <= 1) return {};
  FqPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = F.mul(a[i], F.from_int(static_cast<long>(i)));
  trim(r);
  return r;
}

FqPoly pow(const FiniteField& F, const FqPoly& a, unsigned e) {
  FqPoly r{1}, b = a;
  while (e) {
    if (e & 1) r = mul(F, r, b);
    e >>= 1;
    if (e) b = mul(F, b, b);
  }
  return r;
}

FqPoly inv_mod(const FiniteField& F, const FqPoly& a, const FqPoly& m) {
  // extended Euclid on (a mod m, m)
  FqPoly r0 = m, r1 = mod(F, a, m);
  FqPoly s0{}, s1{1};
  while (!r1.empty()) {
    FqPoly q, r;
    divmod(F, r0, r1, q, r);
    FqPoly s = sub(F, s0, mul(F, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (degree(r0) != 0) throw Error("polynomial not invertible modulo m");
  return mod(F, scale(F, s0, F.inv(r0[0])), m);
}

std::string to_string(const FiniteField& F, const FqPoly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string out;
  for (int i = degree(a); i >= 0; --i) {
    if (a[i] == 0) continue;
    std::string c = fq_to_string(F, a[i]);
    const bool compound = c.find('+') != std::string::npos;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += compound ? "(" + c + ")" : c;
      continue;
    }
    if (a[i] != 1) out += (compound ? "(" + c + ")" : c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace fqpoly

// ---------------------------------------------------------------------------
// Element

Element::Element(FieldPtr f, FqPoly num, FqPoly den)
    : field_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Element::normalize() {
  const auto& F = field_->constants();
  fqpoly::trim(num_);
  fqpoly::trim(den_);
  if (den_.empty()) throw Error("zero denominator");
  if (num_.empty()) {
    den_ = {1};
    return;
  }
  if (field_->is_finite()) {
    if (num_.size() > 1 || den_.size() > 1) throw Error("non-constant element over a finite field");
    num_ = {F.div(num_[0], den_[0])};
    den_ = {1};
    return;
  }
  FqPoly g = fqpoly::gcd(F, num_, den_);
  if (g.size() > 1) {
    num_ = fqpoly::quot(F, num_, g);
    den_ = fqpoly::quot(F, den_, g);
  }
  const Fq lead = den_.back();
  if (lead != 1) {
    const Fq li = F.inv(lead);
    num_ = fqpoly::scale(F, num_, li);
    den_ = fqpoly::scale(F, den_, li);
  }
}

Element Element::zero(FieldPtr f) { return Element(std::move(f), {}, {1}); }
Element Element::one(FieldPtr f) { return Element(std::move(f), {1}, {1}); }
Element Element::from_int(FieldPtr f, long n) {
  const Fq c = f->constants().from_int(n);
  return Element(std::move(f), {c}, {1});
}
Element Element::constant(FieldPtr f, Fq c) {
  if (c >= f->constants().order()) throw Error("constant index out of range");
  return Element(std::move(f), {c}, {1});
}
Element Element::generator(FieldPtr f) {
  if (f->degree() < 2) throw Error("field " + f->to_string() + " has no generator w");
  return Element(f, {static_cast<Fq>(f->p())}, {1});
}
Element Element::variable(FieldPtr f) {
  if (f->kind() != BaseFieldDesc::Kind::RatFunc) throw Error("field " + f->to_string() + " has no variable t");
  return Element(std::move(f), {0, 1}, {1});
}
Element Element::fraction(FieldPtr f, FqPoly num, FqPoly den) {
  return Element(std::move(f), std::move(num), std::move(den));
}

bool Element::is_one() const { return num_.size() == 1 && num_[0] == 1 && den_.size() == 1; }

Fq Element::constant_value() const {
  if (!is_constant()) throw Error("element is not a constant");
  return num_.empty() ? 0 : num_[0];
}

void Element::require_same(const Element& o) const {
  if (!field_ || !o.field_) throw Error("uninitialised field element");
  if (!same_field(field_, o.field_)) throw Error("field elements over different base fields");
}

Element Element::operator-() const {
  return Element(field_, fqpoly::sub(field_->constants(), {}, num_), den_);
}

Element& Element::operator+=(const Element& o) {
  require_same(o);
  const auto& F = field_->constants();
  if (den_ == o.den_) {
    num_ = fqpoly::add(F, num_, o.num_);
  } else {
    num_ = fqpoly::add(F, fqpoly::mul(F, num_, o.den_), fqpoly::mul(F, o.num_, den_));
    den_ = fqpoly::mul(F, den_, o.den_);
  }
  normalize();
  return *this;
}

Element& Element::operator-=(const Element& o) { return *this += -o; }

Element& Element::operator*=(const Element& o) {
  require_same(o);
  const auto& F = field_->constants();
  num_ = fqpoly::mul(F, num_, o.num_);
  den_ = fqpoly::mul(F, den_, o.den_);
  normalize();
  return *this;
}

Element Element::inverse() const {
  if (is_zero()) throw Error("division by zero");
  return Element(field_, den_, num_);
}

Element& Element::operator/=(const Element& o) {
  require_same(o);
  return *this *= o.inverse();
}

bool operator==(const Element& a, const Element& b) {
  return same_field(a.field_, b.field_) && a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Element& a, const Element& b) {
  if (a.den_.size() != b.den_.size()) return a.den_.size() < b.den_.size();
  if (a.num_.size() != b.num_.size()) return a.num_.size() < b.num_.size();
  if (a.den_ != b.den_) return std::lexicographical_compare(a.den_.rbegin(), a.den_.rend(), b.den_.rbegin(), b.den_.rend());
  return std::lexicographical_compare(a.num_.rbegin(), a.num_.rend(), b.num_.rbegin(), b.num_.rend());
}

Element Element::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  const auto& F = field_->constants();
  return Element(field_, fqpoly::pow(F, num_, static_cast<unsigned>(e)), fqpoly::pow(F, den_, static_cast<unsigned>(e)));
}

Element Element::pth_power() const {
  const auto& F = field_->constants();
  const int p = field_->p();
  auto frob = [&](const FqPoly& a) {
    if (a.empty()) return a;
    FqPoly r((a.size() - 1) * p + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i * p] = F.frobenius(a[i]);
    return r;
  };
  return Element(field_, frob(num_), frob(den_));
}

bool Element::is_pth_power() const {
  if (field_->is_finite()) return true;
  const int p = field_->p();
  auto ok = [&](const FqPoly& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0 && i % p != 0) return false;
    return true;
  };
  return ok(num_) && ok(den_);
}

Element Element::pth_root() const {
  if (!is_pth_power()) throw Error("p-th root of " + to_string() + " does not exist in " + field_->to_string());
  const auto& F = field_->constants();
  const std::size_t p = static_cast<std::size_t>(field_->p());
  auto root = [&](const FqPoly& a) {
    FqPoly r;
    for (std::size_t i = 0; i < a.size(); i += p) r.push_back(F.pth_root(a[i]));
    return r;
  };
  return Element(field_, root(num_), root(den_));
}

std::string Element::to_string() const {
  const auto& F = field_->constants();
  if (field_->is_finite()) return fq_to_string(F, constant_value());
  std::string num = fqpoly::to_string(F, num_, "t");
  if (den_.size() == 1) return num;
  const bool compound_num = num.find('+') != std::string::npos;
  if (compound_num) num = "(" + num + ")";
  // monomial denominator t^k
  bool monomial_den = true;
  for (std::size_t i = 0; i + 1 < den_.size(); ++i)
    if (den_[i] != 0) monomial_den = false;
  std::string den_str;
  if (monomial_den)
    den_str = "t^-" + std::to_string(den_.size() - 1);
  else
    den_str = "(" + fqpoly::to_string(F, den_, "t") + ")^-1";
  if (num == "1") return den_str;
  return num + "*" + den_str;
}

// ---------------------------------------------------------------------------

std::optional<ASDependency> find_as_dependency(const std::vector<Element>& betas, int max_size) {
  if (static_cast<int>(betas.size()) > max_size)
    throw Error("independence check over " + std::to_string(betas.size()) +
                " elements exceeds the budget of " + std::to_string(max_size));
  if (betas.empty()) return std::nullopt;
  const auto& f = betas.front().field();
  const int p = f->p();
  const int r = static_cast<int>(betas.size());
  long count = 1;
  for (int i = 0; i < r; ++i) count *= p;
  for (long idx = 1; idx < count; ++idx) {
    std::vector<int> coeffs(r);
    long x = idx;
    Element comb = Element::zero(f);
    for (int i = 0; i < r; ++i) {
      coeffs[i] = static_cast<int>(x % p);
      x /= p;
      if (coeffs[i]) comb += Element::from_int(f, coeffs[i]) * betas[i];
    }
    auto red = artin_schreier_reduce(comb);
    if (red.in_image) return ASDependency{coeffs, comb, red.witness};
  }
  return std::nullopt;
}

bool as_independent(const std::vector<Element>& betas, int max_size) {
  return !find_as_dependency(betas, max_size).has_value();
}

CokernelDim cokernel_dim(const BaseFieldDesc& desc) {
  if (desc.is_finite()) return CokernelDim::finite(1);
  return CokernelDim::infinity();
}

}  // namespace laurentbr
