#include "laurentbr/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace laurentbr {

TowerPtr make_tower(FieldPtr base, int n, std::vector<std::string> names) {
  if (!base) throw Error("tower needs a base field");
  if (n < 0) throw Error("variable count must be >= 0");
  if (names.empty())
    for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i + 1));
  if (static_cast<int>(names.size()) != n) throw Error("variable name count mismatch");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw Error("duplicate variable name " + names[i]);
  auto t = std::make_shared<FieldTower>();
  t->base = std::move(base);
  t->n = n;
  t->names = std::move(names);
  return t;
}

bool same_tower(const TowerPtr& a, const TowerPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->n == b->n && a->names == b->names && same_field(a->base, b->base);
}

TowerPtr drop_outer(const TowerPtr& t) {
  if (t->n == 0) throw Error("tower has no outer variable");
  std::vector<std::string> names(t->names.begin(), t->names.end() - 1);
  return make_tower(t->base, t->n - 1, std::move(names));
}

bool Monomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

std::strong_ordering compare_rtl(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// ValueVec

bool ValueVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

bool ValueVec::is_negative() const {
  for (std::size_t i = coords_.size(); i-- > 0;)
    if (coords_[i] != 0) return coords_[i] < 0;
  return false;
}

bool ValueVec::is_positive() const { return !is_zero() && !is_negative(); }

std::strong_ordering operator<=>(const ValueVec& a, const ValueVec& b) {
  if (a.coords_.size() != b.coords_.size()) throw Error("value vectors of different rank");
  return compare_rtl(a.coords_, b.coords_);
}

ValueVec operator+(const ValueVec& a, const ValueVec& b) {
  std::vector<int> c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_.at(i);
  return ValueVec(std::move(c));
}

ValueVec operator-(const ValueVec& a, const ValueVec& b) {
  std::vector<int> c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_.at(i);
  return ValueVec(std::move(c));
}

ValueVec ValueVec::scaled(int k) const {
  std::vector<int> c(coords_);
  for (auto& x : c) x *= k;
  return ValueVec(std::move(c));
}

std::string ValueVec::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// LaurentPoly

namespace {

bool mono_less(const Monomial& a, const Monomial& b) { return compare_rtl(a.exponents, b.exponents) < 0; }

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return mono_less(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
  terms = std::move(out);
}

}  // namespace

LaurentPoly LaurentPoly::constant(TowerPtr tower, const Element& c) {
  return monomial(tower, Monomial{std::vector<int>(tower->n, 0)}, c);
}

LaurentPoly LaurentPoly::constant(TowerPtr tower, long c) {
  return constant(tower, Element::from_int(tower->base, c));
}

LaurentPoly LaurentPoly::monomial(TowerPtr tower, Monomial m, const Element& c) {
  if (static_cast<int>(m.exponents.size()) != tower->n) throw Error("monomial length does not match tower");
  if (!same_field(c.field(), tower->base)) throw Error("coefficient from a different base field");
  LaurentPoly out(std::move(tower));
  if (!c.is_zero()) out.terms_.push_back({std::move(m), c});
  return out;
}

LaurentPoly LaurentPoly::monomial(TowerPtr tower, std::vector<int> exps) {
  auto base = tower->base;
  return monomial(std::move(tower), Monomial{std::move(exps)}, Element::one(base));
}

LaurentPoly LaurentPoly::variable(TowerPtr tower, int i, int e) {
  if (i < 0 || i >= tower->n) throw Error("variable index out of range");
  std::vector<int> exps(tower->n, 0);
  exps[i] = e;
  return monomial(std::move(tower), std::move(exps));
}

LaurentPoly LaurentPoly::from_terms(TowerPtr tower, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (static_cast<int>(t.mono.exponents.size()) != tower->n) throw Error("monomial length does not match tower");
  LaurentPoly out(std::move(tower));
  canonicalize(terms);
  out.terms_ = std::move(terms);
  return out;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Element LaurentPoly::constant_term() const { return coefficient(Monomial{std::vector<int>(tower_->n, 0)}); }

Element LaurentPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return Element::zero(tower_->base);
}

void LaurentPoly::require_same(const LaurentPoly& o) const {
  if (!tower_ || !o.tower_) throw Error("uninitialised Laurent polynomial");
  if (!same_tower(tower_, o.tower_)) throw Error("Laurent polynomials over different towers");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same(o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && mono_less(terms_[i].mono, o.terms_[j].mono))) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || mono_less(o.terms_[j].mono, terms_[i].mono)) {
      merged.push_back(o.terms_[j++]);
    } else {
      Element c = terms_[i].coeff + o.terms_[j].coeff;
      if (!c.is_zero()) merged.push_back({std::move(terms_[i].mono), std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_same(b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      std::vector<int> e(s.mono.exponents);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += t.mono.exponents[i];
      prod.push_back({Monomial{std::move(e)}, s.coeff * t.coeff});
    }
  LaurentPoly out(a.tower_);
  canonicalize(prod);
  out.terms_ = std::move(prod);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (!same_tower(a.tower_, b.tower_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    auto c = compare_rtl(a.terms_[i].mono.exponents, b.terms_[i].mono.exponents);
    if (c != 0) return c < 0;
    if (a.terms_[i].coeff < b.terms_[i].coeff) return true;
    if (b.terms_[i].coeff < a.terms_[i].coeff) return false;
  }
  return false;
}

LaurentPoly LaurentPoly::scaled(const Element& c) const {
  if (c.is_zero()) return LaurentPoly(tower_);
  LaurentPoly out(*this);
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (e < 0) {
    if (!is_single_term()) throw Error("negative power of a non-monomial " + to_string());
    Term t = terms_[0];
    for (auto& x : t.mono.exponents) x = static_cast<int>(x * e);
    t.coeff = t.coeff.pow(e);
    LaurentPoly out(tower_);
    out.terms_.push_back(std::move(t));
    return out;
  }
  LaurentPoly r = constant(tower_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

LaurentPoly LaurentPoly::pth_power() const {
  const int p = tower_->p();
  LaurentPoly out(*this);
  for (auto& t : out.terms_) {
    for (auto& x : t.mono.exponents) x *= p;
    t.coeff = t.coeff.pth_power();
  }
  return out;
}

bool LaurentPoly::is_pth_power() const {
  const int p = tower_->p();
  for (const auto& t : terms_) {
    for (int x : t.mono.exponents)
      if (x % p != 0) return false;
    if (!t.coeff.is_pth_power()) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::pth_root() const {
  if (!is_pth_power()) throw Error(to_string() + " is not a p-th power");
  const int p = tower_->p();
  LaurentPoly out(*this);
  for (auto& t : out.terms_) {
    for (auto& x : t.mono.exponents) x /= p;
    t.coeff = t.coeff.pth_root();
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (int i = 0; i < tower_->n; ++i) {
      const int e = t.mono.exponents[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += tower_->names[i];
      if (e != 1) mono += "^" + std::to_string(e);
    }
    std::string c = t.coeff.to_string();
    if (mono.empty()) {
      out += c.find('+') != std::string::npos ? "(" + c + ")" : c;
      continue;
    }
    if (!t.coeff.is_one()) out += (c.find('+') != std::string::npos ? "(" + c + ")" : c) + "*";
    out += mono;
  }
  return out;
}

// ---------------------------------------------------------------------------

ValueVec valuation(const LaurentPoly& x) {
  if (x.is_zero()) throw Error("valuation of zero");
  return ValueVec(x.terms().front().mono.exponents);
}

Element leading_coeff(const LaurentPoly& x) {
  if (x.is_zero()) throw Error("leading coefficient of zero");
  return x.terms().front().coeff;
}

int min_exponent(const LaurentPoly& x, int var) {
  if (x.is_zero()) throw Error("exponent of zero");
  int m = x.terms().front().mono.exponents.at(var);
  for (const auto& t : x.terms()) m = std::min(m, t.mono.exponents[var]);
  return m;
}

LaurentPoly residue_outer(const LaurentPoly& x) {
  const auto& tower = x.tower();
  const int n = tower->n;
  if (n == 0) throw Error("residue needs at least one variable");
  std::vector<Term> kept;
  for (const auto& t : x.terms()) {
    const int e = t.mono.exponents[n - 1];
    if (e < 0)
      throw Error(x.to_string() + " is not in the valuation ring of the " + tower->names[n - 1] + "-adic valuation");
    if (e == 0) kept.push_back({Monomial{std::vector<int>(t.mono.exponents.begin(), t.mono.exponents.end() - 1)}, t.coeff});
  }
  return LaurentPoly::from_terms(drop_outer(tower), std::move(kept));
}

LaurentPoly map_monomials(const LaurentPoly& x, const TowerPtr& target,
                          const std::function<Monomial(const Monomial&)>& f) {
  std::vector<Term> terms;
  terms.reserve(x.size());
  for (const auto& t : x.terms()) terms.push_back({f(t.mono), t.coeff});
  return LaurentPoly::from_terms(target, std::move(terms));
}

// ---------------------------------------------------------------------------
// PrecisionWindow

PrecisionWindow PrecisionWindow::uniform(int n, int lo, int hi) {
  if (lo > hi) throw Error("window bounds must satisfy lo <= hi");
  return {std::vector<int>(n, lo), std::vector<int>(n, hi)};
}

bool PrecisionWindow::contains(const Monomial& m) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (m.exponents[i] < lo[i] || m.exponents[i] > hi[i]) return false;
  return true;
}

bool PrecisionWindow::contains_origin() const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > 0 || hi[i] < 0) return false;
  return true;
}

PrecisionWindow PrecisionWindow::grown(int by) const {
  PrecisionWindow w = *this;
  for (auto& x : w.lo) x -= by;
  for (auto& x : w.hi) x += by;
  return w;
}

std::size_t PrecisionWindow::volume() const {
  std::size_t v = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) v *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
  return v;
}

std::vector<Monomial> PrecisionWindow::monomials() const {
  std::vector<Monomial> out;
  out.reserve(volume());
  std::vector<int> e(lo);
  const std::size_t n = lo.size();
  // the first coordinate varies fastest; sort afterwards for value order
  while (true) {
    out.push_back(Monomial{e});
    std::size_t i = 0;
    while (i < n && e[i] == hi[i]) {
      e[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++e[i];
  }
  std::sort(out.begin(), out.end(), mono_less);
  return out;
}

std::string PrecisionWindow::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(lo[i]) + ".." + std::to_string(hi[i]);
  }
  return out + "]";
}

// ---------------------------------------------------------------------------

LaurentPoly invert(const LaurentPoly& x, const PrecisionWindow& w) {
  if (x.is_zero()) throw Error("inversion of zero");
  const auto& tower = x.tower();
  if (static_cast<int>(w.lo.size()) != tower->n) throw Error("window rank does not match tower");
  if (!w.contains_origin()) throw Error("window " + w.to_string() + " does not contain the constant term");
  const LaurentPoly lead = LaurentPoly::monomial(tower, x.terms().front().mono, x.terms().front().coeff);
  const LaurentPoly lead_inv = lead.pow(-1);
  if (x.is_single_term()) return lead_inv;
  const LaurentPoly one = LaurentPoly::constant(tower, 1);
  const LaurentPoly h = one - x * lead_inv;  // every term of positive value
  LaurentPoly sum = one;
  LaurentPoly power = h;
  constexpr int kMaxTerms = 100000;
  for (int k = 1; k <= kMaxTerms; ++k) {
    const bool inside = std::any_of(power.terms().begin(), power.terms().end(),
                                    [&](const Term& t) { return w.contains(t.mono); });
    if (!inside) return sum * lead_inv;
    sum += power;
    power = power * h;
  }
  throw Error("geometric series did not leave the window");
}

std::map<ParityClass, LaurentPoly> square_decompose(const LaurentPoly& x) {
  const auto& tower = x.tower();
  if (tower->p() != 2) throw Error("square decomposition needs characteristic 2");
  if (!tower->base->is_perfect()) throw Error("square decomposition needs a perfect base field");
  std::map<ParityClass, std::vector<Term>> parts;
  for (const auto& t : x.terms()) {
    ParityClass eps(tower->n);
    std::vector<int> half(tower->n);
    for (int i = 0; i < tower->n; ++i) {
      const int e = t.mono.exponents[i];
      eps[i] = ((e % 2) + 2) % 2;
      half[i] = (e - eps[i]) / 2;
    }
    parts[eps].push_back({Monomial{std::move(half)}, t.coeff.pth_root()});
  }
  std::map<ParityClass, LaurentPoly> out;
  for (auto& [eps, terms] : parts) out.emplace(eps, LaurentPoly::from_terms(tower, std::move(terms)));
  return out;
}

LaurentPoly reassemble_squares(const TowerPtr& tower, const std::map<ParityClass, LaurentPoly>& parts) {
  LaurentPoly out(tower);
  for (const auto& [eps, s] : parts) out += s * s * LaurentPoly::monomial(tower, eps);
  return out;
}

int p_rank(const FieldTower& tower) { return (tower.base->is_perfect() ? 0 : 1) + tower.n; }

// ---------------------------------------------------------------------------

LaurentASReduction as_reduce(const LaurentPoly& a) {
  const auto& tower = a.tower();
  const int p = tower->p();
  LaurentASReduction r;
  r.input = a;
  r.exact = tower->base->is_perfect();
  std::vector<Term> kept, dropped;
  for (const auto& t : a.terms()) {
    if (ValueVec(t.mono.exponents).is_positive())
      dropped.push_back(t);
    else
      kept.push_back(t);
  }
  LaurentPoly cur = LaurentPoly::from_terms(tower, std::move(kept));
  r.dropped = LaurentPoly::from_terms(tower, std::move(dropped));
  LaurentPoly witness(tower);
  for (;;) {
    const Term* hit = nullptr;
    for (const auto& t : cur.terms()) {
      if (t.mono.is_one()) continue;
      const bool divisible = std::all_of(t.mono.exponents.begin(), t.mono.exponents.end(),
                                         [p](int e) { return e % p == 0; });
      if (divisible && t.coeff.is_pth_power()) {
        hit = &t;
        break;
      }
    }
    if (!hit) break;
    Monomial m = hit->mono;
    for (auto& e : m.exponents) e /= p;
    const LaurentPoly z = LaurentPoly::monomial(tower, std::move(m), hit->coeff.pth_root());
    cur -= z.wp();
    witness += z;
  }
  const Element c0 = cur.constant_term();
  if (!c0.is_zero()) {
    auto base = artin_schreier_reduce(c0);
    if (!base.witness.is_zero()) {
      const LaurentPoly z = LaurentPoly::constant(tower, base.witness);
      cur -= z.wp();
      witness += z;
    }
  }
  r.canonical = std::move(cur);
  r.witness = std::move(witness);
  r.in_image = r.canonical.is_zero();
  return r;
}

}  // namespace laurentbr
