#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace laurentbr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A prime characteristic, checked at construction.
class PrimeChar {
 public:
  explicit PrimeChar(int p);
  int value() const { return p_; }
  friend bool operator==(PrimeChar, PrimeChar) = default;

 private:
  int p_;
};

bool is_prime(long n);

/// Finite field element as an index 0..q-1: base-p digits of the coefficient
/// vector c_0 + c_1 w + ... + c_{d-1} w^{d-1}. Indices 0..p-1 are the prime field.
using Fq = std::uint32_t;

/// Coefficients low to high, no trailing zeros. Empty means zero.
using FqPoly = std::vector<Fq>;

/// Table-driven arithmetic in F_{p^d} = F_p[w]/(modulus).
class FiniteField {
 public:
  FiniteField(int p, std::vector<int> modulus);

  int p() const { return p_; }
  int degree() const { return d_; }
  std::uint32_t order() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const { return sub(0, a); }
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t e) const;
  Fq frobenius(Fq a) const { return pow(a, static_cast<std::uint64_t>(p_)); }
  Fq pth_root(Fq a) const { return root_[a]; }
  /// Absolute trace to F_p, returned as a prime-field index.
  Fq trace(Fq a) const;
  /// ℘(x) = x^p - x.
  Fq wp(Fq a) const { return sub(frobenius(a), a); }
  /// Least x with ℘(x) = a, if any.
  std::optional<Fq> wp_preimage(Fq a) const;
  /// Least index with trace 1; spans the canonical complement of ℘(F_q).
  Fq trace_one() const { return tau_; }

  std::vector<int> digits(Fq a) const;
  Fq from_digits(const std::vector<int>& digits) const;
  Fq from_int(long n) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  int p_;
  int d_;
  std::uint32_t q_;
  std::vector<int> modulus_;
  std::vector<Fq> log_;
  std::vector<Fq> exp_;
  std::vector<Fq> root_;
  std::vector<std::int64_t> wp_pre_;
  Fq tau_ = 0;

  Fq mul_slow(Fq a, Fq b) const;
};

/// Least monic irreducible polynomial of degree d over F_p (coefficients low to high).
std::vector<int> default_modulus(int p, int d);
bool is_irreducible_mod_p(const std::vector<int>& poly, int p);

/// Supported base fields k: F_p, F_{p^d}, F_{p^d}(t).
class BaseFieldDesc {
 public:
  enum class Kind { PrimeField, FiniteField, RatFunc };

  static std::shared_ptr<const BaseFieldDesc> prime_field(int p);
  static std::shared_ptr<const BaseFieldDesc> finite_field(int p, std::vector<int> modulus);
  static std::shared_ptr<const BaseFieldDesc> rational_functions(int p, std::vector<int> modulus);
  /// `F2`, `F9`, `F4:w^2+w+1`, `F2(t)`, `F4(t):w^2+w+1`.
  static std::shared_ptr<const BaseFieldDesc> parse(const std::string& text);

  Kind kind() const { return kind_; }
  int p() const { return fq_.p(); }
  int degree() const { return fq_.degree(); }
  const FiniteField& constants() const { return fq_; }
  bool is_finite() const { return kind_ != Kind::RatFunc; }
  bool is_perfect() const { return is_finite(); }
  std::string to_string() const;

  friend bool operator==(const BaseFieldDesc& a, const BaseFieldDesc& b) {
    return a.kind_ == b.kind_ && a.fq_ == b.fq_;
  }

  BaseFieldDesc(Kind kind, FiniteField fq) : kind_(kind), fq_(std::move(fq)) {}

 private:
  Kind kind_;
  FiniteField fq_;
};

using FieldPtr = std::shared_ptr<const BaseFieldDesc>;

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Element of k. Finite kinds store a constant numerator over denominator 1;
/// F_q(t) stores a reduced fraction with monic denominator.
class Element {
 public:
  Element() = default;
  static Element zero(FieldPtr f);
  static Element one(FieldPtr f);
  static Element from_int(FieldPtr f, long n);
  static Element constant(FieldPtr f, Fq c);
  /// The generator w of F_{p^d} (d > 1).
  static Element generator(FieldPtr f);
  /// The transcendental t of F_q(t).
  static Element variable(FieldPtr f);
  static Element fraction(FieldPtr f, FqPoly num, FqPoly den);

  const FieldPtr& field() const { return field_; }
  const FqPoly& numerator() const { return num_; }
  const FqPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  /// Lies in F_q (degree-0 fraction).
  bool is_constant() const { return num_.size() <= 1 && den_.size() == 1; }
  Fq constant_value() const;

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Element& o);
  Element& operator/=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend Element operator/(Element a, const Element& b) { return a /= b; }
  friend bool operator==(const Element& a, const Element& b);

  Element inverse() const;
  Element pow(long e) const;
  Element pth_power() const;
  bool is_pth_power() const;
  /// Throws for non-p-th powers (only possible over F_q(t)).
  Element pth_root() const;
  /// ℘(x) = x^p - x.
  Element wp() const { return pth_power() - *this; }

  std::string to_string() const;
  /// Total order used for canonical term sorting and hashing.
  friend bool operator<(const Element& a, const Element& b);

 private:
  Element(FieldPtr f, FqPoly num, FqPoly den);
  void require_same(const Element& o) const;
  void normalize();

  FieldPtr field_;
  FqPoly num_;
  FqPoly den_;
};

struct ASReduction {
  Element input;
  Element canonical;
  Element witness;
  bool in_image = false;
};

/// Canonical representative of beta modulo ℘(k) with input = canonical + ℘(witness).
ASReduction artin_schreier_reduce(const Element& beta);

struct ASDependency {
  std::vector<int> coefficients;  // F_p coefficients, not all zero
  Element combination;
  Element witness;  // combination = ℘(witness)
};

inline constexpr int kDefaultIndependenceBudget = 6;

/// Nonzero F_p-combination of betas lying in ℘(k), if any. Throws when
/// |betas| exceeds max_size.
std::optional<ASDependency> find_as_dependency(const std::vector<Element>& betas,
                                                int max_size = kDefaultIndependenceBudget);
bool as_independent(const std::vector<Element>& betas,
                    int max_size = kDefaultIndependenceBudget);

struct CokernelDim {
  bool infinite = false;
  int value = 0;
  static CokernelDim finite(int v) { return {false, v}; }
  static CokernelDim infinity() { return {true, 0}; }
  std::string to_string() const { return infinite ? "infinite" : std::to_string(value); }
  friend bool operator==(const CokernelDim&, const CokernelDim&) = default;
};

/// dim over F_p of k/℘(k).
CokernelDim cokernel_dim(const BaseFieldDesc& desc);

namespace fqpoly {
// Polynomial helpers over a fixed FiniteField; inputs and outputs trimmed.
void trim(FqPoly& a);
FqPoly add(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly sub(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly mul(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly scale(const FiniteField& F, const FqPoly& a, Fq c);
void divmod(const FiniteField& F, const FqPoly& a, const FqPoly& b, FqPoly& q, FqPoly& r);
FqPoly mod(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly quot(const FiniteField& F, const FqPoly& a, const FqPoly& b);
FqPoly gcd(const FiniteField& F, FqPoly a, FqPoly b);
FqPoly monic(const FiniteField& F, const FqPoly& a);
FqPoly derivative(const FiniteField& F, const FqPoly& a);
FqPoly pow(const FiniteField& F, const FqPoly& a, unsigned e);
/// Inverse of a modulo m (gcd must be 1).
FqPoly inv_mod(const FiniteField& F, const FqPoly& a, const FqPoly& m);
int degree(const FqPoly& a);
std::string to_string(const FiniteField& F, const FqPoly& a, const std::string& var);
}  // namespace fqpoly

std::string fq_to_string(const FiniteField& F, Fq a);

}  // namespace laurentbr
