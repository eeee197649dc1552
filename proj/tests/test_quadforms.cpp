#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "laurentbr/gf2.hpp"
#include "laurentbr/parse.hpp"
#include "laurentbr/quadforms.hpp"

using namespace laurentbr;

namespace {

TowerPtr tower_over(const char* base, int n) { return make_tower(BaseFieldDesc::parse(base), n); }

// direct evaluation of sum c_i (x_i^2 + x_i y_i + w_i y_i^2) + sum d_j z_j^2
LaurentPoly evaluate_directly(const BlockForm& f, const std::vector<LaurentPoly>& v) {
  const BlockForm g = f.flattened();
  LaurentPoly q(f.tower);
  std::size_t k = 0;
  for (const auto& b : g.blocks) {
    const auto& x = v[k++];
    const auto& y = v[k++];
    q += b.scalar * (x * x + x * y + b.w * y * y);
  }
  for (const auto& d : g.diag) {
    const auto& z = v[k++];
    q += d * z * z;
  }
  return q;
}

// all F_2-combinations of the rows, by subset enumeration
std::set<gf2::Bits> span_by_subsets(const std::vector<gf2::Bits>& rows) {
  std::set<gf2::Bits> out;
  for (unsigned mask = 0; mask < (1u << rows.size()); ++mask) {
    gf2::Bits x = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (mask >> i & 1) x ^= rows[i];
    out.insert(x);
  }
  return out;
}

gf2::Bits bits_of(const Monomial& m) {
  std::vector<int> v;
  for (int e : m.exponents) v.push_back(((e % 2) + 2) % 2);
  return gf2::from_vector(v);
}

}  // namespace

TEST_CASE("quadratic counterexample, n = 2") {
  auto tower = tower_over("F2", 3);
  const auto ex = quad_linkage_counterexample(2, tower);
  CHECK(ex.phi.to_string() == "<<a1; a2^-1]]");
  CHECK(ex.psi.to_string() == "<<a2; a3^-1]]");
  CHECK(ex.omega.to_string() == "[1, a3^-1 + a2^-1] _|_ a1*[1, a2^-1] _|_ a2*[1, a3^-1]");
  CHECK(ex.omega.dimension() == 6);
  CHECK(ex.phi.fold() == 2);
}

TEST_CASE("quadratic counterexample, n = 3 carries the multiplier <<a1>>") {
  auto tower = tower_over("F2", 4);
  const auto ex = quad_linkage_counterexample(3, tower);
  CHECK(ex.phi.to_string() == "<<a1, a2; a3^-1]]");
  CHECK(ex.psi.to_string() == "<<a1, a3; a4^-1]]");
  for (const auto& b : ex.omega.blocks) {
    REQUIRE(b.multiplier.size() == 1);
    CHECK(b.multiplier[0].to_string() == "a1");
  }
  CHECK(ex.omega.dimension() == 12);
  CHECK(ex.omega.flattened().blocks.size() == 6);
}

TEST_CASE("quadratic counterexample preconditions") {
  CHECK_THROWS_AS(quad_linkage_counterexample(1, tower_over("F2", 2)), Error);
  CHECK_THROWS_AS(quad_linkage_counterexample(2, tower_over("F2", 2)), Error);
  CHECK_THROWS_AS(quad_linkage_counterexample(2, tower_over("F3", 3)), Error);
}

TEST_CASE("Witt sum of binary blocks") {
  auto tower = tower_over("F2", 3);
  const auto u = parse_element("a2^-1", tower), v = parse_element("a3^-1", tower);
  const auto z = LaurentPoly(tower);
  CHECK(witt_block_sum(u, v) == parse_element("a2^-1 + a3^-1", tower));
  CHECK(witt_block_sum(u, u).is_zero());
  CHECK(witt_block_sum(u, z) == u);
  CHECK(as_reduce(witt_block_sum(u.wp(), z)).in_image);
  const auto w = parse_element("a1 + a3^-3", tower);
  CHECK(witt_block_sum(witt_block_sum(u, v), w) == witt_block_sum(u, witt_block_sum(v, w)));
  CHECK(witt_block_sum(u, v) == witt_block_sum(v, u));
}

TEST_CASE("Witt sum identity: [1,u] + [1,v] = [1,u+v] plus a hyperbolic plane") {
  // (x1, y1, x2, y2) = (X + Z, Y, Z, Y + W) turns the left side into
  // X^2 + XY + (u+v)Y^2 + W(Z + vW), the last summand hyperbolic
  auto tower = tower_over("F2", 2);
  const auto u = parse_element("a2^-1", tower), v = parse_element("a1^-1*a2", tower);
  const auto lhs = parse_block_form("[1, a2^-1] _|_ [1, a1^-1*a2]", tower);
  const BlockForm sum{tower, {{LaurentPoly::constant(tower, 1), {}, witt_block_sum(u, v)}}, {}};
  std::mt19937 rng(5);
  auto rnd = [&] {
    LaurentPoly x(tower);
    for (int i = 0; i < 3; ++i)
      if (rng() & 1) x += LaurentPoly::monomial(tower, {int(rng() % 5) - 2, int(rng() % 5) - 2});
    return x;
  };
  for (int i = 0; i < 100; ++i) {
    const auto X = rnd(), Y = rnd(), Z = rnd(), W = rnd();
    CHECK(evaluate_form(lhs, {X + Z, Y, Z, Y + W}) == evaluate_form(sum, {X, Y}) + W * (Z + v * W));
  }
}

TEST_CASE("value criterion on the quadratic family, n = 2..5") {
  for (int n = 2; n <= 5; ++n) {
    auto tower = make_tower(BaseFieldDesc::prime_field(2), n + 1);
    const auto ex = quad_linkage_counterexample(n, tower);
    const auto rep = anisotropic_by_values(ex.omega);
    CHECK(rep.verdict == AnisotropyVerdict::Anisotropic);
    CHECK(rep.signatures.size() == ex.omega.flattened().blocks.size());
  }
}

TEST_CASE("value criterion signatures for n = 2") {
  auto tower = tower_over("F2", 3);
  const auto rep = anisotropic_by_values(quad_linkage_counterexample(2, tower).omega);
  REQUIRE(rep.signatures.size() == 3);
  CHECK(rep.signatures[0].find("(0,0,0)") != std::string::npos);
  CHECK(rep.signatures[1].find("(1,0,0)") != std::string::npos);
  CHECK(rep.signatures[2].find("(0,1,0)") != std::string::npos);
}

TEST_CASE("value criterion is conservative") {
  auto tower = tower_over("F2", 3);
  CHECK(anisotropic_by_values(parse_block_form("[1, a1]", tower)).verdict == AnisotropyVerdict::Unknown);
  CHECK(anisotropic_by_values(parse_block_form("[1, a2^-1] _|_ [1, a3^-1]", tower)).verdict ==
        AnisotropyVerdict::Unknown);
  CHECK(anisotropic_by_values(parse_block_form("[1, a2^-2]", tower)).verdict == AnisotropyVerdict::Unknown);
  CHECK(anisotropic_by_values(parse_block_form("[1, a2^-1]", tower)).verdict == AnisotropyVerdict::Anisotropic);
  // unit w outside ℘(k): [1,1] over F_2 is anisotropic on k
  CHECK(anisotropic_by_values(parse_block_form("[1, 1]", tower)).verdict == AnisotropyVerdict::Anisotropic);
}

TEST_CASE("isotropy search: hyperbolic plane") {
  auto tower = tower_over("F2", 2);
  const auto f = parse_block_form("[1, 0]", tower);
  const auto r = brute_force_isotropy(f, PrecisionWindow::uniform(2, -1, 1), 1000);
  REQUIRE(r.witness.has_value());
  REQUIRE(r.witness->size() == 2);
  CHECK((*r.witness)[0].is_zero());
  CHECK((*r.witness)[1] == LaurentPoly::constant(tower, 1));
}

TEST_CASE("isotropy search: [1, wp(c)] has the witness (c, 1)") {
  auto tower = tower_over("F4:w^2+w+1", 2);
  const auto f4 = tower->base;
  const auto c = Element::generator(f4);
  BlockForm f{tower, {{LaurentPoly::constant(tower, 1), {}, LaurentPoly::constant(tower, c.wp())}}, {}};
  const auto r = brute_force_isotropy(f, PrecisionWindow::uniform(2, -1, 1), 10000);
  REQUIRE(r.witness.has_value());
  CHECK(evaluate_directly(f, *r.witness).is_zero());
  CHECK((*r.witness)[1] == LaurentPoly::constant(tower, 1));
  const auto x0 = (*r.witness)[0];
  CHECK((x0 == LaurentPoly::constant(tower, c) || x0 == LaurentPoly::constant(tower, c + Element::one(f4))));
}

TEST_CASE("isotropy search finds nothing on the n = 2 family") {
  auto tower = tower_over("F2", 3);
  const auto omega = quad_linkage_counterexample(2, tower).omega;
  const auto r = brute_force_isotropy(omega, PrecisionWindow::uniform(3, -2, 2), 20000);
  CHECK_FALSE(r.witness.has_value());
  CHECK(r.budget_exhausted);
  CHECK(r.evaluations <= 20000);
  CHECK(r.to_string() == "none found (budget 20000)");
}

TEST_CASE("isotropy search, exhaustive on a tiny window") {
  auto tower = tower_over("F2", 3);
  const auto omega = quad_linkage_counterexample(2, tower).omega;
  const auto r = brute_force_isotropy(omega, PrecisionWindow::uniform(3, 0, 0), 1000000);
  CHECK_FALSE(r.witness.has_value());
  CHECK_FALSE(r.budget_exhausted);
  CHECK(r.evaluations == 63);
}

TEST_CASE("evaluate_form agrees with direct evaluation") {
  auto tower = tower_over("F2", 4);
  const auto omega = quad_linkage_counterexample(3, tower).omega;
  std::mt19937 rng(9);
  for (int i = 0; i < 50; ++i) {
    std::vector<LaurentPoly> v;
    for (int k = 0; k < omega.dimension(); ++k) {
      LaurentPoly x(tower);
      if (rng() % 3) x += LaurentPoly::monomial(tower, {int(rng() % 3) - 1, int(rng() % 3) - 1, 0, int(rng() % 3) - 1});
      v.push_back(x);
    }
    CHECK(evaluate_form(omega, v) == evaluate_directly(omega, v));
  }
}

TEST_CASE("soundness: a found witness contradicts no Anisotropic verdict") {
  auto tower = tower_over("F2", 2);
  const std::vector<std::string> ws{"0", "1", "a1", "a2^-1", "a1^-1", "a1^-2", "a2^-1 + a1^-1", "a1*a2^-1"};
  const std::vector<std::string> cs{"1", "a1", "a2", "a1*a2"};
  std::mt19937 rng(21);
  int found = 0;
  for (int i = 0; i < 120; ++i) {
    BlockForm f{tower, {}, {}};
    const int blocks = 1 + static_cast<int>(rng() % 2);
    for (int b = 0; b < blocks; ++b)
      f.blocks.push_back({parse_element(cs[rng() % cs.size()], tower), {}, parse_element(ws[rng() % ws.size()], tower)});
    if (rng() % 3 == 0) f.diag.push_back(parse_element(cs[rng() % cs.size()], tower));
    const auto r = brute_force_isotropy(f, PrecisionWindow::uniform(2, -1, 1), 3000);
    if (r.witness) {
      ++found;
      CHECK(evaluate_directly(f, *r.witness).is_zero());
      CHECK(anisotropic_by_values(f).verdict != AnisotropyVerdict::Anisotropic);
    }
  }
  CHECK(found > 10);
}

TEST_CASE("pure subform generators") {
  auto t3 = tower_over("F2", 3);
  auto g = pure_subform_genset(parse_bilinear("<<a1, a2>>", t3));
  REQUIRE(g.generators.size() == 3);
  CHECK(g.generators[0].to_string() == "a1");
  CHECK(g.generators[1].to_string() == "a2");
  CHECK(g.generators[2] == parse_element("a1*a2", t3));

  g = pure_subform_genset(parse_bilinear("<<1 + a1, a3>>", t3));
  REQUIRE(g.generators.size() == 3);
  CHECK(g.generators[0] == parse_element("a1 + 1", t3));
  CHECK(g.generators[1] == parse_element("a3", t3));
  CHECK(g.generators[2] == parse_element("a1*a3 + a3", t3));

  g = pure_subform_genset(parse_bilinear("<<a1>>", t3));
  REQUIRE(g.generators.size() == 1);

  CHECK_THROWS_AS(pure_subform_genset(parse_bilinear("<<a1 + a2>>", t3)), Error);
}

TEST_CASE("self-intersection has full dimension 2^n - 1") {
  for (int n = 1; n <= 3; ++n) {
    auto tower = make_tower(BaseFieldDesc::prime_field(2), n);
    std::vector<LaurentPoly> slots;
    for (int i = 0; i < n; ++i) slots.push_back(LaurentPoly::variable(tower, i));
    const auto g = pure_subform_genset(BilPfister{tower, slots});
    const auto r = f2span_intersection_dim(g, g, PrecisionWindow::uniform(n, 0, 2));
    CHECK(r.dim_at_window == (1 << n) - 1);
    CHECK(r.stabilized);
  }
}

TEST_CASE("bilinear counterexample forms") {
  auto [phi, psi] = bilinear_linkage_counterexample(2, tower_over("F2", 3));
  CHECK(phi.to_string() == "<<a1, a2>>");
  CHECK(psi.to_string() == "<<1 + a1, a3>>");
  std::tie(phi, psi) = bilinear_linkage_counterexample(3, tower_over("F2", 4));
  CHECK(phi.to_string() == "<<a1, a2, a3>>");
  CHECK(psi.to_string() == "<<a1, 1 + a2, a4>>");
  CHECK_THROWS_AS(bilinear_linkage_counterexample(1, tower_over("F2", 3)), Error);
}

TEST_CASE("span intersection on the bilinear family: 2^(n-1) - 2, stabilized") {
  for (int n = 2; n <= 4; ++n) {
    auto tower = make_tower(BaseFieldDesc::prime_field(2), n + 1);
    const auto [phi, psi] = bilinear_linkage_counterexample(n, tower);
    const int hi = n == 4 ? 4 : 3;
    const auto r = f2span_intersection_dim(pure_subform_genset(phi), pure_subform_genset(psi),
                                           PrecisionWindow::uniform(n + 1, 0, hi));
    CHECK(r.dim_at_window == (1 << (n - 1)) - 2);
    CHECK(r.stabilized);
    CHECK(r.dim_at_window < (1 << (n - 1)) - 1);
  }
}

TEST_CASE("span intersection preconditions") {
  auto t3 = tower_over("F3", 3);
  const auto g3 = pure_subform_genset(BilPfister{t3, {LaurentPoly::variable(t3, 0)}});
  CHECK_THROWS_AS(f2span_intersection_dim(g3, g3, PrecisionWindow::uniform(3, 0, 2)), Error);
  auto t2 = tower_over("F2", 2);
  const auto g = pure_subform_genset(BilPfister{t2, {LaurentPoly::variable(t2, 0)}});
  CHECK_THROWS_AS(f2span_intersection_dim(g, g, PrecisionWindow::uniform(2, 1, 2)), Error);
}

TEST_CASE("common factor away from characteristic 2") {
  auto cf = charneq2_common_factor({Monomial{{1, 0, 0}}, Monomial{{0, 1, 0}}},
                                   {Monomial{{0, 1, 0}}, Monomial{{0, 0, 1}}}, 3);
  CHECK_FALSE(cf.anisotropy_violated);
  REQUIRE(cf.slots.size() == 1);
  CHECK(cf.slots[0] == Monomial{{0, 1, 0}});
  CHECK(cf.intersection_dim == 1);

  cf = charneq2_common_factor({Monomial{{1, 1, 0}}, Monomial{{0, 1, 0}}},
                              {Monomial{{1, 0, 0}}, Monomial{{0, 1, 0}}}, 3);
  CHECK(cf.intersection_dim == 2);
  REQUIRE(cf.slots.size() == 1);
  CHECK(cf.slots[0] == Monomial{{0, 1, 0}});

  cf = charneq2_common_factor({Monomial{{1, 0, 0}}, Monomial{{1, 0, 0}}},
                              {Monomial{{0, 1, 0}}, Monomial{{0, 0, 1}}}, 3);
  CHECK(cf.anisotropy_violated);

  CHECK_THROWS_AS(charneq2_common_factor({Monomial{{1, 0, 0}}}, {Monomial{{0, 1, 0}}, Monomial{{0, 0, 1}}}, 3),
                  Error);
}

TEST_CASE("common factor slots lie in both spans") {
  std::mt19937 rng(1234);
  int checked = 0;
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 100; ++trial) {
      const int vars = n + 1;
      auto random_slots = [&] {
        std::vector<Monomial> s;
        for (int i = 0; i < n; ++i) {
          std::vector<int> e(vars);
          for (auto& x : e) x = static_cast<int>(rng() % 5) - 2;
          s.push_back(Monomial{e});
        }
        return s;
      };
      const auto a = random_slots(), b = random_slots();
      std::vector<gf2::Bits> ra, rb;
      for (const auto& m : a) ra.push_back(bits_of(m));
      for (const auto& m : b) rb.push_back(bits_of(m));
      const auto sa = span_by_subsets(ra), sb = span_by_subsets(rb);
      const bool full = sa.size() == (1u << n) && sb.size() == (1u << n);
      std::size_t common = 0;
      for (auto x : sa) common += sb.count(x);
      if (!full) {
        CHECK(charneq2_common_factor(a, b, vars).anisotropy_violated);
        continue;
      }
      if (common < (1u << (n - 1))) {
        CHECK_THROWS_AS(charneq2_common_factor(a, b, vars), Error);
        continue;
      }
      const auto cf = charneq2_common_factor(a, b, vars);
      REQUIRE(cf.slots.size() == static_cast<std::size_t>(n - 1));
      std::vector<gf2::Bits> rc;
      for (const auto& m : cf.slots) {
        rc.push_back(bits_of(m));
        CHECK(sa.count(rc.back()) == 1);
        CHECK(sb.count(rc.back()) == 1);
      }
      CHECK(span_by_subsets(rc).size() == (1u << (n - 1)));
      ++checked;
    }
  CHECK(checked > 0);
}

TEST_CASE("bilinear linkage status") {
  auto s = bilinear_linkage_status(3, 3);
  CHECK(s.rank_equals_n);
  CHECK(s.linked);
  CHECK(s.three_linked);
  s = bilinear_linkage_status(4, 3);
  CHECK_FALSE(s.linked);
  CHECK_FALSE(s.three_linked);
  CHECK_FALSE(s.reasons.empty());
  CHECK_THROWS_AS(bilinear_linkage_status(2, 3), Error);
}
