#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laurentbr/laurent.hpp"

namespace laurentbr {

/// <<a1, ..., an>>; the empty slot list denotes <1>.
struct BilPfister {
  TowerPtr tower;
  std::vector<LaurentPoly> slots;

  std::string to_string() const;
};

/// <<a1, ..., a_{n-1}, b]] in characteristic 2.
struct QuadPfister {
  TowerPtr tower;
  std::vector<LaurentPoly> bil_slots;
  LaurentPoly as_slot;

  int fold() const { return static_cast<int>(bil_slots.size()) + 1; }
  std::string to_string() const;
};

/// scalar * <<multiplier>> (x) [1, w], with [1, w] = x^2 + xy + w y^2.
struct Block {
  LaurentPoly scalar;
  std::vector<LaurentPoly> multiplier;
  LaurentPoly w;

  std::string to_string() const;
};

struct BlockForm {
  TowerPtr tower;
  std::vector<Block> blocks;
  /// Residual diagonal part <d1, d2, ...>.
  std::vector<LaurentPoly> diag;

  /// Expands every multiplier: one block per product of multiplier slots.
  BlockForm flattened() const;
  /// Number of variables of the underlying quadratic form.
  int dimension() const;
  std::string to_string() const;
};

struct QuadLinkageCounterexample {
  QuadPfister phi;
  QuadPfister psi;
  BlockForm omega;
};

/// phi = <<a1..a_{n-1}, an^-1]], psi = <<a1..a_{n-2}, an, a_{n+1}^-1]] and the
/// anisotropic form omega Witt equivalent to phi _|_ psi.
QuadLinkageCounterexample quad_linkage_counterexample(int n, const TowerPtr& tower);

/// [1, u] _|_ [1, v] is Witt equivalent to [1, u + v] plus a hyperbolic plane.
LaurentPoly witt_block_sum(const LaurentPoly& u, const LaurentPoly& v);

enum class AnisotropyVerdict { Anisotropic, Unknown };
std::string to_string(AnisotropyVerdict v);

struct AnisotropyReport {
  AnisotropyVerdict verdict = AnisotropyVerdict::Unknown;
  /// One line per flattened block: its value classes modulo 2Z^n.
  std::vector<std::string> signatures;
  std::string reason;
};

/// Sufficient criterion: every binary block takes values in its own classes
/// modulo 2Γ, and all classes are distinct across blocks and diagonal entries.
AnisotropyReport anisotropic_by_values(const BlockForm& f);

struct IsotropySearch {
  /// Isotropic vector, one entry per variable of the flattened form.
  std::optional<std::vector<LaurentPoly>> witness;
  long evaluations = 0;
  bool budget_exhausted = false;
  long budget = 0;

  std::string to_string() const;
};

/// Enumerates vectors with entries supported in the window, by support size,
/// last support coefficient normalised to 1, and evaluates the form exactly.
IsotropySearch brute_force_isotropy(const BlockForm& f, const PrecisionWindow& w, long budget);

/// Value of the flattened quadratic form at v.
LaurentPoly evaluate_form(const BlockForm& f, const std::vector<LaurentPoly>& v);

/// Sum over i of F^2 * g_i.
struct F2SpanGenSet {
  TowerPtr tower;
  std::vector<LaurentPoly> generators;

  std::string to_string() const;
};

/// Products of the slots over e in {0,1}^n minus 0; e1 is the lowest bit of the counter.
F2SpanGenSet pure_subform_genset(const BilPfister& phi);

struct F2SpanIntersection {
  int dim_at_window = 0;
  bool stabilized = false;
  int dim_grown = 0;
  std::size_t f2_dim = 0;
  std::size_t f2_dim_grown = 0;
  std::size_t volume = 0;
  std::size_t volume_grown = 0;
  PrecisionWindow window;
};

/// F^2-dimension of the intersection with squares of scalars supported in the window.
F2SpanIntersection f2span_intersection_dim(const F2SpanGenSet& a, const F2SpanGenSet& b,
                                           const PrecisionWindow& w);

/// phi = <<a1..a_{n-1}, an>>, psi = <<a1..a_{n-2}, a_{n-1} + 1, a_{n+1}>>.
std::pair<BilPfister, BilPfister> bilinear_linkage_counterexample(int n, const TowerPtr& tower);

struct CommonFactor {
  bool anisotropy_violated = false;
  /// Slots of an (n-1)-fold common factor as square-class vectors.
  std::vector<Monomial> slots;
  int intersection_dim = 0;
};

/// Square classes of the slots span subspaces of F_2^{n_vars}; returns n-1
/// rows of the reduced echelon basis of their intersection.
CommonFactor charneq2_common_factor(const std::vector<Monomial>& phi_slots, const std::vector<Monomial>& psi_slots,
                                    int n_vars);

struct LinkageStatus {
  int two_rank = 0;
  int n = 0;
  bool rank_equals_n = false;
  bool linked = false;
  bool three_linked = false;
  std::vector<std::string> reasons;
};

LinkageStatus bilinear_linkage_status(int two_rank, int n);

}  // namespace laurentbr
