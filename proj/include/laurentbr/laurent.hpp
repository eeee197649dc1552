#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "laurentbr/basefield.hpp"

namespace laurentbr {

/// k((a1))...((an)). Variable i is 0-based internally; names default to a1..an.
struct FieldTower {
  FieldPtr base;
  int n = 0;
  std::vector<std::string> names;

  int p() const { return base->p(); }
};

using TowerPtr = std::shared_ptr<const FieldTower>;

TowerPtr make_tower(FieldPtr base, int n, std::vector<std::string> names = {});
bool same_tower(const TowerPtr& a, const TowerPtr& b);
/// The residue tower k((a1))...((a_{n-1})) of the outer a_n-adic valuation.
TowerPtr drop_outer(const TowerPtr& t);

struct Monomial {
  std::vector<int> exponents;

  bool is_one() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Element of Γ_F = Z^n. Tuples are written in variable order and compared
/// right to left: the last coordinate (outermost variable) is most significant.
class ValueVec {
 public:
  ValueVec() = default;
  explicit ValueVec(std::vector<int> coords) : coords_(std::move(coords)) {}

  const std::vector<int>& coords() const { return coords_; }
  int size() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[i]; }
  bool is_zero() const;
  bool is_negative() const;
  bool is_positive() const;

  friend std::strong_ordering operator<=>(const ValueVec& a, const ValueVec& b);
  friend bool operator==(const ValueVec& a, const ValueVec& b) = default;
  friend ValueVec operator+(const ValueVec& a, const ValueVec& b);
  friend ValueVec operator-(const ValueVec& a, const ValueVec& b);
  ValueVec scaled(int k) const;

  /// "(0,-1)"
  std::string to_string() const;

 private:
  std::vector<int> coords_;
};

/// Right-to-left lexicographic comparison of exponent vectors.
std::strong_ordering compare_rtl(const std::vector<int>& a, const std::vector<int>& b);

struct Term {
  Monomial mono;
  Element coeff;
};

/// Finite k-linear combination of monomials, terms strictly increasing in value.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(TowerPtr tower) : tower_(std::move(tower)) {}

  static LaurentPoly constant(TowerPtr tower, const Element& c);
  static LaurentPoly constant(TowerPtr tower, long c);
  static LaurentPoly monomial(TowerPtr tower, Monomial m, const Element& c);
  static LaurentPoly monomial(TowerPtr tower, std::vector<int> exps);
  /// a_{i+1}^e
  static LaurentPoly variable(TowerPtr tower, int i, int e = 1);
  /// Terms need not be sorted or distinct; zero coefficients are dropped.
  static LaurentPoly from_terms(TowerPtr tower, std::vector<Term> terms);

  const TowerPtr& tower() const { return tower_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_single_term() const { return terms_.size() == 1; }
  /// Lies in k.
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  Element constant_term() const;
  Element coefficient(const Monomial& m) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  /// Canonical total order (for deterministic sorting).
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(const Element& c) const;
  /// Negative exponents need a single-term polynomial.
  LaurentPoly pow(long e) const;
  LaurentPoly pth_power() const;
  bool is_pth_power() const;
  LaurentPoly pth_root() const;
  /// ℘(x) = x^p - x.
  LaurentPoly wp() const { return pth_power() - *this; }

  std::string to_string() const;

 private:
  void require_same(const LaurentPoly& o) const;
  TowerPtr tower_;
  std::vector<Term> terms_;
};

/// Minimum value among the monomials; throws on zero.
ValueVec valuation(const LaurentPoly& x);
/// Coefficient of the valuation-minimal monomial; throws on zero.
Element leading_coeff(const LaurentPoly& x);
/// Sets a_n = 0. Throws when a_n occurs with a negative exponent.
LaurentPoly residue_outer(const LaurentPoly& x);
/// Minimum exponent of the variable (0-based) in x; x must be nonzero.
int min_exponent(const LaurentPoly& x, int var);

/// Rewrites every monomial through f and moves to tower `target`.
LaurentPoly map_monomials(const LaurentPoly& x, const TowerPtr& target,
                          const std::function<Monomial(const Monomial&)>& f);

/// Per-variable exponent box lo <= e <= hi.
struct PrecisionWindow {
  std::vector<int> lo;
  std::vector<int> hi;

  static PrecisionWindow uniform(int n, int lo, int hi);
  bool contains(const Monomial& m) const;
  bool contains_origin() const;
  PrecisionWindow grown(int by = 1) const;
  std::size_t volume() const;
  /// All monomials in the box, in canonical (increasing value) order.
  std::vector<Monomial> monomials() const;
  std::string to_string() const;
};

/// y with every term of x*y - 1 outside the window; exact for single terms.
LaurentPoly invert(const LaurentPoly& x, const PrecisionWindow& w);

using ParityClass = std::vector<int>;

/// Characteristic 2, perfect k: x = sum over parity classes e of s_e^2 * a^e.
std::map<ParityClass, LaurentPoly> square_decompose(const LaurentPoly& x);
LaurentPoly reassemble_squares(const TowerPtr& tower, const std::map<ParityClass, LaurentPoly>& parts);

/// rank_p(k((a1))...((an))) = rank_p(k) + n.
int p_rank(const FieldTower& tower);

/// Reduction of a Laurent polynomial modulo ℘(F).
struct LaurentASReduction {
  LaurentPoly input;
  LaurentPoly canonical;
  /// Exact ℘-preimage of the lowered terms (excludes dropped positive-value terms).
  LaurentPoly witness;
  /// Terms of positive value removed (they lie in ℘(F) via a convergent series).
  LaurentPoly dropped;
  /// input = canonical + ℘(witness) + dropped.
  bool in_image = false;
  /// Base field perfect: canonical != 0 proves input is not in ℘(F).
  bool exact = false;
};

LaurentASReduction as_reduce(const LaurentPoly& a);

}  // namespace laurentbr
