#include "laurentbr/quadforms.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <unordered_map>

#include "laurentbr/gf2.hpp"

namespace laurentbr {

namespace {

std::string join(const std::vector<LaurentPoly>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ", ";
    out += x.to_string();
  }
  return out;
}

std::string scalar_prefix(const LaurentPoly& c) {
  if (c == LaurentPoly::constant(c.tower(), 1)) return "";
  if (c.size() > 1) return "(" + c.to_string() + ")*";
  return c.to_string() + "*";
}

void require_char2(const TowerPtr& t) {
  if (t->p() != 2) throw Error("quadratic form constructions need characteristic 2");
}

// Packs exponent vectors into one word with a per-field bias, so that adding
// keys (minus the packed bias) multiplies monomials.
class Packer {
 public:
  Packer(int nvars, int max_abs) : nvars_(nvars) {
    if (nvars < 1 || nvars > 8) throw Error("monomial packing supports 1..8 variables");
    bits_ = std::min(16, 64 / nvars);
    bias_ = 1 << (bits_ - 1);
    if (max_abs >= bias_ / 2) throw Error("exponent range too large for the search");
    for (int i = 0; i < nvars; ++i) bias_all_ += static_cast<std::uint64_t>(bias_) << (bits_ * i);
  }

  std::uint64_t pack(const std::vector<int>& e) const {
    std::uint64_t k = 0;
    for (int i = 0; i < nvars_; ++i) k += static_cast<std::uint64_t>(e[i] + bias_) << (bits_ * i);
    return k;
  }

  std::vector<int> unpack(std::uint64_t k) const {
    std::vector<int> e(nvars_);
    const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
    for (int i = 0; i < nvars_; ++i) e[i] = static_cast<int>((k >> (bits_ * i)) & mask) - bias_;
    return e;
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a + b - bias_all_; }

 private:
  int nvars_;
  int bits_ = 0;
  int bias_ = 0;
  std::uint64_t bias_all_ = 0;
};

int max_abs_exponent(const LaurentPoly& x) {
  int m = 0;
  for (const auto& t : x.terms())
    for (int e : t.mono.exponents) m = std::max(m, std::abs(e));
  return m;
}

int max_abs_window(const PrecisionWindow& w) {
  int m = 0;
  for (int x : w.lo) m = std::max(m, std::abs(x));
  for (int x : w.hi) m = std::max(m, std::abs(x));
  return m;
}

// Window monomials, smallest total degree first.
std::vector<Monomial> search_order(const PrecisionWindow& w) {
  auto ms = w.monomials();
  auto weight = [](const Monomial& m) {
    int s = 0;
    for (int e : m.exponents) s += std::abs(e);
    return s;
  };
  std::stable_sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) { return weight(a) < weight(b); });
  return ms;
}

std::string parity_string(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(((v[i] % 2) + 2) % 2);
  }
  return out + ")";
}

std::vector<int> parity(const ValueVec& v) {
  std::vector<int> out(v.size());
  for (int i = 0; i < v.size(); ++i) out[i] = ((v[i] % 2) + 2) % 2;
  return out;
}

}  // namespace

std::string BilPfister::to_string() const { return "<<" + join(slots) + ">>"; }

std::string QuadPfister::to_string() const {
  if (bil_slots.empty()) return "<<" + as_slot.to_string() + "]]";
  return "<<" + join(bil_slots) + "; " + as_slot.to_string() + "]]";
}

std::string Block::to_string() const {
  std::string out = scalar_prefix(scalar);
  if (!multiplier.empty()) out += "<<" + join(multiplier) + ">>";
  return out + "[1, " + w.to_string() + "]";
}

BlockForm BlockForm::flattened() const {
  BlockForm out{tower, {}, diag};
  for (const auto& b : blocks) {
    const std::size_t k = b.multiplier.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      LaurentPoly c = b.scalar;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i)) c *= b.multiplier[i];
      out.blocks.push_back({c, {}, b.w});
    }
  }
  return out;
}

int BlockForm::dimension() const {
  int d = static_cast<int>(diag.size());
  for (const auto& b : blocks) d += 2 << b.multiplier.size();
  return d;
}

std::string BlockForm::to_string() const {
  std::string out;
  for (const auto& b : blocks) {
    if (!out.empty()) out += " _|_ ";
    out += b.to_string();
  }
  if (!diag.empty()) {
    if (!out.empty()) out += " _|_ ";
    out += "<" + join(diag) + ">";
  }
  return out.empty() ? "0" : out;
}

QuadLinkageCounterexample quad_linkage_counterexample(int n, const TowerPtr& tower) {
  if (n < 2) throw Error("the quadratic counterexample needs n >= 2");
  if (tower->n != n + 1) throw Error("the quadratic counterexample needs a tower with n + 1 variables");
  require_char2(tower);
  auto a = [&](int i, int e = 1) { return LaurentPoly::variable(tower, i - 1, e); };
  std::vector<LaurentPoly> common;
  for (int i = 1; i <= n - 2; ++i) common.push_back(a(i));
  QuadLinkageCounterexample out;
  out.phi.tower = tower;
  out.phi.bil_slots = common;
  out.phi.bil_slots.push_back(a(n - 1));
  out.phi.as_slot = a(n, -1);
  out.psi.tower = tower;
  out.psi.bil_slots = common;
  out.psi.bil_slots.push_back(a(n));
  out.psi.as_slot = a(n + 1, -1);
  const LaurentPoly one = LaurentPoly::constant(tower, 1);
  out.omega.tower = tower;
  out.omega.blocks.push_back({one, common, witt_block_sum(a(n, -1), a(n + 1, -1))});
  out.omega.blocks.push_back({a(n - 1), common, a(n, -1)});
  out.omega.blocks.push_back({a(n), common, a(n + 1, -1)});
  return out;
}

LaurentPoly witt_block_sum(const LaurentPoly& u, const LaurentPoly& v) { return u + v; }

std::string to_string(AnisotropyVerdict v) { return v == AnisotropyVerdict::Anisotropic ? "Anisotropic" : "Unknown"; }

AnisotropyReport anisotropic_by_values(const BlockForm& f) {
  AnisotropyReport rep;
  const BlockForm flat = f.flattened();
  std::set<std::vector<int>> seen;
  bool clash = false;
  auto claim = [&](const std::vector<int>& cls) {
    if (!seen.insert(cls).second) clash = true;
  };
  for (const auto& b : flat.blocks) {
    const std::string label = b.to_string();
    if (b.scalar.is_zero()) {
      rep.reason = "zero scalar in " + label;
      return rep;
    }
    if (b.w.is_zero()) {
      rep.reason = label + " is hyperbolic";
      return rep;
    }
    const ValueVec vc = valuation(b.scalar);
    const ValueVec vw = valuation(b.w);
    const auto pw = parity(vw);
    const bool odd = std::any_of(pw.begin(), pw.end(), [](int x) { return x != 0; });
    if (vw.is_negative() && odd) {
      const auto c0 = parity(vc), c1 = parity(vc + vw);
      claim(c0);
      claim(c1);
      rep.signatures.push_back(label + ": {" + parity_string(c0) + ", " + parity_string(c1) + "}");
    } else if (vw.is_zero() && !artin_schreier_reduce(leading_coeff(b.w)).in_image) {
      const auto c0 = parity(vc);
      claim(c0);
      rep.signatures.push_back(label + ": {" + parity_string(c0) + "} (anisotropic residue form)");
    } else {
      rep.reason = label + ": v(w) = " + vw.to_string() + " gives no value separation";
      return rep;
    }
  }
  for (const auto& d : flat.diag) {
    if (d.is_zero()) {
      rep.reason = "zero diagonal entry";
      return rep;
    }
    const auto c0 = parity(valuation(d));
    claim(c0);
    rep.signatures.push_back("<" + d.to_string() + ">: {" + parity_string(c0) + "}");
  }
  if (clash) {
    rep.reason = "value classes modulo 2Γ collide";
    return rep;
  }
  rep.verdict = AnisotropyVerdict::Anisotropic;
  rep.reason = "every block has its own value classes modulo 2Γ; the minimum-value term of any nonzero vector is unique";
  return rep;
}

std::string IsotropySearch::to_string() const {
  if (witness) {
    std::string out = "isotropic vector (";
    for (std::size_t i = 0; i < witness->size(); ++i) {
      if (i) out += ", ";
      out += (*witness)[i].to_string();
    }
    return out + ")";
  }
  if (budget_exhausted) return "none found (budget " + std::to_string(budget) + ")";
  return "none found";
}

LaurentPoly evaluate_form(const BlockForm& f, const std::vector<LaurentPoly>& v) {
  const BlockForm flat = f.flattened();
  if (static_cast<int>(v.size()) != flat.dimension()) throw Error("vector length differs from the form dimension");
  LaurentPoly q(f.tower);
  std::size_t k = 0;
  for (const auto& b : flat.blocks) {
    const LaurentPoly& x = v[k++];
    const LaurentPoly& y = v[k++];
    q += b.scalar * (x * x + x * y + b.w * y * y);
  }
  for (const auto& d : flat.diag) {
    q += d * v[k] * v[k];
    ++k;
  }
  return q;
}

IsotropySearch brute_force_isotropy(const BlockForm& f, const PrecisionWindow& w, long budget) {
  if (budget < 1) throw Error("budget must be >= 1");
  require_char2(f.tower);
  if (!f.tower->base->is_finite()) throw Error("isotropy search needs a finite base field");
  const auto& F = f.tower->base->constants();
  const int nv = f.tower->n;
  if (static_cast<int>(w.lo.size()) != nv) throw Error("window dimension differs from the tower");
  const BlockForm flat = f.flattened();

  using Sparse = std::vector<std::pair<std::uint64_t, Fq>>;
  struct Coord {
    LaurentPoly square;  // coefficient of x_k^2
    LaurentPoly cross;   // coefficient of x_k x_partner
    int partner = -1;
  };
  std::vector<Coord> coords;
  for (const auto& b : flat.blocks) {
    const int k = static_cast<int>(coords.size());
    coords.push_back({b.scalar, b.scalar, k + 1});
    coords.push_back({b.scalar * b.w, b.scalar, k});
  }
  for (const auto& d : flat.diag) coords.push_back({d, LaurentPoly(f.tower), -1});

  int bound = 0;
  for (const auto& c : coords) bound = std::max({bound, max_abs_exponent(c.square), max_abs_exponent(c.cross)});
  const Packer pk(nv, bound + 2 * max_abs_window(w));
  auto to_sparse = [&](const LaurentPoly& x) {
    Sparse s;
    for (const auto& t : x.terms()) s.push_back({pk.pack(t.mono.exponents), t.coeff.constant_value()});
    return s;
  };
  std::vector<Sparse> sq, cr;
  for (const auto& c : coords) {
    sq.push_back(to_sparse(c.square));
    cr.push_back(to_sparse(c.cross));
  }

  struct Pos {
    int coord;
    std::uint64_t mono;
  };
  const auto mons = search_order(w);
  std::vector<Pos> pos;
  for (const auto& m : mons)
    for (int k = 0; k < static_cast<int>(coords.size()); ++k) pos.push_back({k, pk.pack(m.exponents)});
  const int P = static_cast<int>(pos.size());

  std::vector<Fq> units;
  for (Fq c = 1; c < F.order(); ++c) units.push_back(c);

  IsotropySearch out;
  out.budget = budget;
  Sparse acc;
  auto add_scaled = [&](const Sparse& s, std::uint64_t mono, Fq c) {
    for (const auto& [k, v] : s) acc.push_back({pk.mul(k, mono), F.mul(v, c)});
  };
  auto is_zero = [&]() {
    std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < acc.size();) {
      std::size_t j = i;
      Fq s = 0;
      while (j < acc.size() && acc[j].first == acc[i].first) s = F.add(s, acc[j++].second);
      if (s != 0) return false;
      i = j;
    }
    return true;
  };

  for (int s = 1; s <= P; ++s) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      // coefficients of the first s - 1 positions range over units, the last is 1
      std::vector<std::size_t> ci(s, 0);
      for (;;) {
        if (out.evaluations >= budget) {
          out.budget_exhausted = true;
          return out;
        }
        ++out.evaluations;
        acc.clear();
        for (int i = 0; i < s; ++i) {
          const Pos& a = pos[idx[i]];
          const Fq ca = i + 1 < s ? units[ci[i]] : 1;
          add_scaled(sq[a.coord], pk.mul(a.mono, a.mono), F.mul(ca, ca));
          for (int j = i + 1; j < s; ++j) {
            const Pos& b = pos[idx[j]];
            const Fq cb = j + 1 < s ? units[ci[j]] : 1;
            if (coords[a.coord].partner == b.coord) add_scaled(cr[a.coord], pk.mul(a.mono, b.mono), F.mul(ca, cb));
          }
        }
        if (is_zero()) {
          std::vector<std::vector<Term>> entries(coords.size());
          for (int i = 0; i < s; ++i) {
            const Pos& a = pos[idx[i]];
            const Fq ca = i + 1 < s ? units[ci[i]] : 1;
            entries[a.coord].push_back({Monomial{pk.unpack(a.mono)}, Element::constant(f.tower->base, ca)});
          }
          std::vector<LaurentPoly> wv;
          for (auto& e : entries) wv.push_back(LaurentPoly::from_terms(f.tower, std::move(e)));
          out.witness = std::move(wv);
          return out;
        }
        int r = s - 2;
        while (r >= 0 && ci[r] + 1 == units.size()) ci[r--] = 0;
        if (r < 0) break;
        ++ci[r];
      }
      int r = s - 1;
      while (r >= 0 && idx[r] == P - s + r) --r;
      if (r < 0) break;
      ++idx[r];
      for (int i = r + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return out;
}

std::string F2SpanGenSet::to_string() const { return "span{" + join(generators) + "}"; }

F2SpanGenSet pure_subform_genset(const BilPfister& phi) {
  const std::size_t n = phi.slots.size();
  if (n < 1) throw Error("pure subform needs at least one slot");
  if (n > 20) throw Error("too many slots");
  for (const auto& s : phi.slots) {
    const bool mono = s.is_single_term();
    const bool binomial = s.size() == 2 && (s.terms()[0].mono.is_one() || s.terms()[1].mono.is_one());
    if (!mono && !binomial) throw Error("unsupported slot shape: " + s.to_string());
  }
  F2SpanGenSet out{phi.tower, {}};
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    LaurentPoly g = LaurentPoly::constant(phi.tower, 1);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) g *= phi.slots[i];
    out.generators.push_back(g);
  }
  return out;
}

namespace {

std::size_t windowed_intersection(const F2SpanGenSet& a, const F2SpanGenSet& b, const PrecisionWindow& w) {
  const auto mons = w.monomials();
  int bound = 0;
  for (const auto* gs : {&a, &b})
    for (const auto& g : gs->generators) bound = std::max(bound, max_abs_exponent(g));
  const Packer pk(a.tower->n, bound + 2 * max_abs_window(w));
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  auto column = [&](std::uint64_t key) {
    auto [it, fresh] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size()));
    return it->second;
  };
  std::vector<std::vector<std::uint64_t>> gens_a, gens_b;
  for (const auto& g : a.generators) {
    gens_a.emplace_back();
    for (const auto& t : g.terms()) gens_a.back().push_back(pk.pack(t.mono.exponents));
  }
  for (const auto& g : b.generators) {
    gens_b.emplace_back();
    for (const auto& t : g.terms()) gens_b.back().push_back(pk.pack(t.mono.exponents));
  }
  gf2::SparseBasis ba, bb, bab;
  std::vector<int> twice(a.tower->n);
  auto feed = [&](const std::vector<std::vector<std::uint64_t>>& gens, gf2::SparseBasis& own) {
    for (const auto& m : mons) {
      for (int i = 0; i < a.tower->n; ++i) twice[i] = 2 * m.exponents[i];
      const std::uint64_t sq = pk.pack(twice);
      for (const auto& g : gens) {
        std::vector<std::uint32_t> row;
        for (auto k : g) row.push_back(column(pk.mul(sq, k)));
        std::sort(row.begin(), row.end());
        own.insert(row);
        bab.insert(std::move(row));
      }
    }
  };
  feed(gens_a, ba);
  feed(gens_b, bb);
  return ba.rank() + bb.rank() - bab.rank();
}

}  // namespace

F2SpanIntersection f2span_intersection_dim(const F2SpanGenSet& a, const F2SpanGenSet& b, const PrecisionWindow& w) {
  if (!same_tower(a.tower, b.tower)) throw Error("generator sets over different towers");
  const auto& base = *a.tower->base;
  if (base.kind() != BaseFieldDesc::Kind::PrimeField || base.p() != 2)
    throw Error("F^2-span computations need base field F2");
  if (static_cast<int>(w.lo.size()) != a.tower->n) throw Error("window dimension differs from the tower");
  if (!w.contains_origin()) throw Error("window too small to contain all generators");
  for (const auto* gs : {&a, &b})
    for (const auto& g : gs->generators)
      if (g.is_zero()) throw Error("zero generator");
  F2SpanIntersection out;
  out.window = w;
  out.volume = w.volume();
  out.f2_dim = windowed_intersection(a, b, w);
  out.dim_at_window = static_cast<int>(out.f2_dim / out.volume);
  const PrecisionWindow g = w.grown(1);
  out.volume_grown = g.volume();
  out.f2_dim_grown = windowed_intersection(a, b, g);
  out.dim_grown = static_cast<int>(out.f2_dim_grown / out.volume_grown);
  out.stabilized = out.dim_grown == out.dim_at_window && out.f2_dim % out.volume == 0 &&
                   out.f2_dim_grown % out.volume_grown == 0;
  return out;
}

std::pair<BilPfister, BilPfister> bilinear_linkage_counterexample(int n, const TowerPtr& tower) {
  if (n < 2) throw Error("the bilinear counterexample needs n >= 2");
  if (tower->n < n + 1) throw Error("the bilinear counterexample needs at least n + 1 variables");
  require_char2(tower);
  auto a = [&](int i) { return LaurentPoly::variable(tower, i - 1); };
  BilPfister phi{tower, {}}, psi{tower, {}};
  for (int i = 1; i <= n - 2; ++i) {
    phi.slots.push_back(a(i));
    psi.slots.push_back(a(i));
  }
  phi.slots.push_back(a(n - 1));
  phi.slots.push_back(a(n));
  psi.slots.push_back(a(n - 1) + LaurentPoly::constant(tower, 1));
  psi.slots.push_back(a(n + 1));
  return {phi, psi};
}

CommonFactor charneq2_common_factor(const std::vector<Monomial>& phi_slots, const std::vector<Monomial>& psi_slots,
                                    int n_vars) {
  if (phi_slots.size() != psi_slots.size()) throw Error("slot count mismatch");
  if (phi_slots.empty()) throw Error("forms need at least one slot");
  if (n_vars < 1 || n_vars > gf2::kMaxDense) throw Error("variable count out of range");
  const int n = static_cast<int>(phi_slots.size());
  auto classes = [&](const std::vector<Monomial>& ms) {
    std::vector<gf2::Bits> out;
    for (const auto& m : ms) {
      if (static_cast<int>(m.exponents.size()) != n_vars) throw Error("slot exponent vector has the wrong length");
      out.push_back(gf2::from_vector(m.exponents));
    }
    return out;
  };
  const auto a = classes(phi_slots);
  const auto b = classes(psi_slots);
  CommonFactor out;
  if (gf2::rank(a) < n || gf2::rank(b) < n) {
    out.anisotropy_violated = true;
    return out;
  }
  const auto inter = gf2::intersection(a, b);
  out.intersection_dim = static_cast<int>(inter.size());
  if (out.intersection_dim < n - 1)
    throw Error("square-class spans meet in dimension " + std::to_string(out.intersection_dim) +
                ": no common (n-1)-fold factor");
  for (int i = 0; i < n - 1; ++i) out.slots.push_back(Monomial{gf2::to_vector(inter[i], n_vars)});
  return out;
}

LinkageStatus bilinear_linkage_status(int two_rank, int n) {
  if (n < 1) throw Error("n must be >= 1");
  if (two_rank < n) throw Error("2-rank below n: I^n F = 0");
  LinkageStatus s;
  s.two_rank = two_rank;
  s.n = n;
  s.rank_equals_n = two_rank == n;
  s.linked = s.rank_equals_n;
  s.three_linked = s.rank_equals_n;
  if (s.rank_equals_n) {
    s.reasons.push_back("2-rank equals n, so I^n F is 3-linked (cited result)");
    s.reasons.push_back("3-linked implies linked");
  } else {
    s.reasons.push_back("2-rank " + std::to_string(two_rank) + " exceeds n = " + std::to_string(n) +
                        ": the bilinear counterexample pair over n + 1 independent square classes shows I^n F is "
                        "not linked");
    s.reasons.push_back("not linked implies not 3-linked");
  }
  return s;
}

}  // namespace laurentbr
