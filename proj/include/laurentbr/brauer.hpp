#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laurentbr/basefield.hpp"
#include "laurentbr/laurent.hpp"

namespace laurentbr {

/// [a, b)_{p,F} = F<x, y : x^p - x = a, y^p = b, y x y^-1 = x + 1>.
struct SymbolAS {
  LaurentPoly a;  // Artin-Schreier slot
  LaurentPoly b;  // Kummer slot, nonzero

  SymbolAS(LaurentPoly a_, LaurentPoly b_);
  std::string to_string() const;
  friend bool operator==(const SymbolAS& x, const SymbolAS& y) { return x.a == y.a && x.b == y.b; }
};

/// Tensor product of symbols in pBr(F); the empty list is the trivial class.
struct BrauerClass {
  TowerPtr tower;
  PrimeChar p;
  std::vector<SymbolAS> symbols;

  BrauerClass(TowerPtr tower_, std::vector<SymbolAS> symbols_ = {});
  std::size_t size() const { return symbols.size(); }
  std::string to_string() const;
};

enum class DivisionStatus { Division, NotDivision, Unknown };
std::string to_string(DivisionStatus s);

struct DivisionVerdict {
  DivisionStatus status = DivisionStatus::Unknown;
  std::vector<std::string> trace;
  std::string reason;
};

/// Applies the symbol identities to a fixpoint:
///   [a, b) + [a', b) = [a + a', b),  [a, b) + [a, b') = [a, b b'),
///   [a, b) = 0 when a reduces into ℘(F) or b is a p-th power.
BrauerClass simplify(const BrauerClass& c);

/// Residue data of one symbol at the outer a_n-adic valuation.
struct SymbolResidue {
  enum class Kind { Inertial, TotallyRamified, Unrecognized };
  Kind kind = Kind::Unrecognized;
  /// Inertial: the residue symbol over k((a1))...((a_{n-1})).
  std::optional<SymbolAS> residue_symbol;
  /// TotallyRamified: the residue field adjoins q with q^p = adjoined_pth_power.
  std::optional<LaurentPoly> adjoined_pth_power;
  /// TotallyRamified: -(a_n-exponent of the Artin-Schreier slot), prime to p.
  int pole_order = 0;
  std::string description;
};

SymbolResidue residue_of_symbol(const SymbolAS& s);

/// Recursive division-algebra decision over the decidable fragment. Never
/// returns Division or NotDivision without a proof path; otherwise Unknown.
DivisionVerdict decide_division(const BrauerClass& c);

/// [a2^-1, a1) * [a3^-1, a2) * ... * [an^-1, a_{n-1}).
BrauerClass lemma_div_witness(const TowerPtr& tower);

/// Upper bound on the symbol length of pBr(F): n - 1 when m < n, else n.
int arav_bound(CokernelDim m, int n);

/// floor(n / 2), the symbol length away from characteristic p.
int known_symlen_char_ne_p(int n);

/// D = [b1, a1) * ... * [bn, an) as twisted Laurent series over
/// L = k[x1..xn : xi^p - xi = bi].
struct TwistedPresentation {
  FieldPtr base;
  std::vector<Element> betas;
};

DivisionVerdict twisted_laurent_division_check(const TwistedPresentation& tp,
                                               int budget = kDefaultIndependenceBudget);

/// A base field descriptor or the symbolic "algebraically closed" field.
struct SymlenBase {
  bool algebraically_closed = false;
  FieldPtr field;

  static SymlenBase parse(const std::string& text);
  std::string to_string() const;
};

struct SymlenReport {
  std::string base;
  int p = 0;
  int n = 0;
  CokernelDim cokernel;
  int claimed = 0;
  int upper_bound = 0;
  std::optional<BrauerClass> witness;
  DivisionVerdict verdict;
  std::optional<DivisionVerdict> twisted;
  std::vector<std::string> notes;
};

SymlenReport symlen_report(const SymlenBase& base, PrimeChar p, int n);

}  // namespace laurentbr
