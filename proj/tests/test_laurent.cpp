#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "laurentbr/laurent.hpp"

using namespace laurentbr;

namespace {

LaurentPoly random_poly(const TowerPtr& tower, std::mt19937& rng, int max_terms = 4, int lo = -3, int hi = 3) {
  const auto q = tower->base->constants().order();
  std::uniform_int_distribution<int> nterms(1, max_terms), ex(lo, hi);
  std::uniform_int_distribution<Fq> coef(1, q - 1);
  std::vector<Term> terms;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m;
    for (int j = 0; j < tower->n; ++j) m.exponents.push_back(ex(rng));
    terms.push_back({m, Element::constant(tower->base, coef(rng))});
  }
  return LaurentPoly::from_terms(tower, terms);
}

LaurentPoly nonzero_poly(const TowerPtr& tower, std::mt19937& rng) {
  for (;;) {
    auto x = random_poly(tower, rng);
    if (!x.is_zero()) return x;
  }
}

}  // namespace

TEST_CASE("right-to-left order: (0,-1) < (0,0) < (1,0) < (0,1)") {
  const ValueVec a({0, -1}), b({0, 0}), c({1, 0}), d({0, 1});
  CHECK(a < b);
  CHECK(b < c);
  CHECK(c < d);
  CHECK(a < d);
  CHECK(ValueVec({5, -1}) < ValueVec({-5, 0}));
  CHECK(compare_rtl({1, 0, 0}, {0, 0, 1}) == std::strong_ordering::less);
}

TEST_CASE("valuation examples") {
  auto tower = make_tower(BaseFieldDesc::prime_field(2), 2);
  CHECK(valuation(LaurentPoly::variable(tower, 1, -1)).to_string() == "(0,-1)");
  CHECK(valuation(LaurentPoly::variable(tower, 0)).to_string() == "(1,0)");
  CHECK(valuation(LaurentPoly::constant(tower, 1) + LaurentPoly::variable(tower, 0)).is_zero());
  CHECK_THROWS_AS(valuation(LaurentPoly(tower)), Error);
}

TEST_CASE("leading coefficient examples") {
  auto f = BaseFieldDesc::parse("F4:w^2+w+1");
  auto tower = make_tower(f, 2);
  const auto a1 = LaurentPoly::variable(tower, 0), a2 = LaurentPoly::variable(tower, 1);
  const auto one = LaurentPoly::constant(tower, 1);
  CHECK(leading_coeff(a1 + a1 * a1).is_one());
  const Element c = Element::generator(f);
  CHECK(leading_coeff(LaurentPoly::variable(tower, 1, -1).scaled(c)) == c);
  CHECK(leading_coeff((one + a1) * (one + a2)).is_one());
}

TEST_CASE("valuation and leading coefficient are multiplicative; ultrametric inequality") {
  for (const char* desc : {"F2", "F9", "F5"}) {
    auto tower = make_tower(BaseFieldDesc::parse(desc), 3);
    std::mt19937 rng(1234);
    for (int i = 0; i < 10000; ++i) {
      const auto x = nonzero_poly(tower, rng), y = nonzero_poly(tower, rng);
      REQUIRE(valuation(x * y) == valuation(x) + valuation(y));
      REQUIRE(leading_coeff(x * y) == leading_coeff(x) * leading_coeff(y));
      const auto s = x + y;
      if (!s.is_zero()) {
        const auto m = std::min(valuation(x), valuation(y));
        REQUIRE(valuation(s) >= m);
        if (valuation(x) != valuation(y)) REQUIRE(valuation(s) == m);
      }
    }
  }
}

TEST_CASE("terms are stored in strictly increasing value") {
  auto tower = make_tower(BaseFieldDesc::prime_field(3), 2);
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_poly(tower, rng, 6);
    for (std::size_t k = 1; k < x.size(); ++k)
      CHECK(ValueVec(x.terms()[k - 1].mono.exponents) < ValueVec(x.terms()[k].mono.exponents));
    for (const auto& t : x.terms()) CHECK_FALSE(t.coeff.is_zero());
  }
}

TEST_CASE("residue at the outer variable") {
  auto tower = make_tower(BaseFieldDesc::prime_field(2), 3);
  const auto a1 = LaurentPoly::variable(tower, 0), a3 = LaurentPoly::variable(tower, 2);
  const auto one = LaurentPoly::constant(tower, 1);
  CHECK(residue_outer(a1 + a3).to_string() == "a1");
  CHECK(residue_outer(a1 * a3).is_zero());
  CHECK(residue_outer(one + a1 * a3 + a1 * a1).to_string() == "1 + a1^2");
  CHECK_THROWS_AS(residue_outer(LaurentPoly::variable(tower, 2, -1)), Error);
  CHECK(residue_outer(a1).tower()->n == 2);
}

TEST_CASE("residue is a ring homomorphism on the valuation ring") {
  auto tower = make_tower(BaseFieldDesc::prime_field(3), 3);
  std::mt19937 rng(99);
  for (int i = 0; i < 1000; ++i) {
    auto x = random_poly(tower, rng), y = random_poly(tower, rng);
    // move into the a3-adic valuation ring
    auto fix = [&](LaurentPoly z) {
      if (z.is_zero()) return z;
      const int m = min_exponent(z, 2);
      return m < 0 ? z * LaurentPoly::variable(tower, 2, -m) : z;
    };
    x = fix(x);
    y = fix(y);
    CHECK(residue_outer(x + y) == residue_outer(x) + residue_outer(y));
    CHECK(residue_outer(x * y) == residue_outer(x) * residue_outer(y));
  }
}

TEST_CASE("windowed inversion") {
  auto tower = make_tower(BaseFieldDesc::prime_field(2), 1);
  const auto a1 = LaurentPoly::variable(tower, 0);
  const auto one = LaurentPoly::constant(tower, 1);
  CHECK(invert(a1, PrecisionWindow::uniform(1, -2, 2)) == LaurentPoly::variable(tower, 0, -1));
  const auto y = invert(one + a1, PrecisionWindow::uniform(1, 0, 3));
  CHECK(y.to_string() == "1 + a1 + a1^2 + a1^3");
  // oracle: (1 + a1) y - 1 = a1^4
  CHECK((one + a1) * y - one == LaurentPoly::variable(tower, 0, 4));
  CHECK_THROWS_AS(invert(LaurentPoly(tower), PrecisionWindow::uniform(1, 0, 3)), Error);
  CHECK_THROWS_AS(invert(one + a1, PrecisionWindow::uniform(1, 1, 3)), Error);
}

TEST_CASE("windowed inversion leaves no error term inside the window") {
  auto tower = make_tower(BaseFieldDesc::prime_field(3), 2);
  std::mt19937 rng(3);
  const auto w = PrecisionWindow::uniform(2, -4, 4);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_poly(tower, rng, 3, -1, 1);
    if (x.is_zero()) continue;
    const auto err = x * invert(x, w) - LaurentPoly::constant(tower, 1);
    for (const auto& t : err.terms()) CHECK_FALSE(w.contains(t.mono));
  }
}

TEST_CASE("square decomposition examples") {
  auto tower = make_tower(BaseFieldDesc::prime_field(2), 2);
  const auto a1 = LaurentPoly::variable(tower, 0), a2 = LaurentPoly::variable(tower, 1);
  auto d = square_decompose(a1);
  CHECK(d.size() == 1);
  CHECK(d.at({1, 0}).to_string() == "1");
  d = square_decompose(a1 * a1 + a1 * a2);
  CHECK(d.at({0, 0}) == a1);
  CHECK(d.at({1, 1}).to_string() == "1");

  auto f4 = BaseFieldDesc::parse("F4:w^2+w+1");
  auto t4 = make_tower(f4, 2);
  const Element c = Element::generator(f4);
  d = square_decompose(LaurentPoly::constant(t4, c));
  CHECK(d.at({0, 0}) == LaurentPoly::constant(t4, c * c));

  CHECK_THROWS_AS(square_decompose(LaurentPoly::variable(make_tower(BaseFieldDesc::prime_field(3), 1), 0)),
                  Error);
  CHECK_THROWS_AS(square_decompose(LaurentPoly::variable(make_tower(BaseFieldDesc::parse("F2(t)"), 1), 0)),
                  Error);
}

TEST_CASE("square decomposition round trip") {
  for (const char* desc : {"F2", "F4:w^2+w+1", "F8"}) {
    auto tower = make_tower(BaseFieldDesc::parse(desc), 3);
    std::mt19937 rng(17);
    for (int i = 0; i < 500; ++i) {
      const auto x = random_poly(tower, rng, 6);
      const auto d = square_decompose(x);
      CHECK(reassemble_squares(tower, d) == x);
      for (const auto& [eps, s] : d) {
        const LaurentPoly sq = s * s;
        for (const auto& t : sq.terms())
          for (int e : t.mono.exponents) CHECK(e % 2 == 0);
      }
    }
  }
}

TEST_CASE("p-rank") {
  CHECK(p_rank(*make_tower(BaseFieldDesc::prime_field(2), 2)) == 2);
  CHECK(p_rank(*make_tower(BaseFieldDesc::parse("F2(t)"), 3)) == 4);
  CHECK(p_rank(*make_tower(BaseFieldDesc::parse("F4"), 0)) == 0);
}

TEST_CASE("p-rank oracle: F over F^2 has a basis of square-free monomials") {
  // perfect base: every element decomposes over the 2^n square-free monomials, and all of them are needed
  auto tower = make_tower(BaseFieldDesc::prime_field(2), 2);
  std::set<ParityClass> seen;
  std::mt19937 rng(8);
  for (int i = 0; i < 200; ++i)
    for (const auto& [eps, s] : square_decompose(random_poly(tower, rng, 6))) seen.insert(eps);
  CHECK(seen.size() == 4u);
  CHECK(seen.size() == (1u << p_rank(*tower)));

  // F2(t): a coefficient c = N/D is (N D)/D^2 and N D splits into even and odd degree parts, so {1, t}
  // times the square-free monomials spans; t itself is not a square
  auto ft = BaseFieldDesc::parse("F2(t)");
  const Element t = Element::variable(ft);
  CHECK_FALSE(t.is_pth_power());
  const Element c = (t * t * t + Element::one(ft)) / (t + Element::one(ft));
  const auto& F = ft->constants();
  const FqPoly nd = fqpoly::mul(F, c.numerator(), c.denominator());
  FqPoly even, odd;
  for (std::size_t i = 0; i < nd.size(); ++i) {
    if (i % 2 == 0) {
      even.resize(i / 2 + 1, 0);
      even[i / 2] = nd[i];
    } else {
      odd.resize(i / 2 + 1, 0);
      odd[i / 2] = nd[i];
    }
  }
  fqpoly::trim(even);
  fqpoly::trim(odd);
  const Element u = Element::fraction(ft, even, c.denominator());
  const Element v = Element::fraction(ft, odd, c.denominator());
  CHECK(u * u + t * v * v == c);
  CHECK(p_rank(*make_tower(ft, 3)) == 1 + 3);
}

TEST_CASE("Laurent-level Artin-Schreier reduction") {
  auto tower = make_tower(BaseFieldDesc::prime_field(2), 2);
  const auto a1 = LaurentPoly::variable(tower, 0);
  const auto a2 = LaurentPoly::variable(tower, 1);
  // a2^-2 = wp(a2^-1) + a2^-1
  auto r = as_reduce(LaurentPoly::variable(tower, 1, -2));
  CHECK(r.canonical == LaurentPoly::variable(tower, 1, -1));
  CHECK(r.input == r.canonical + r.witness.wp() + r.dropped);
  // positive-value terms are in the image
  r = as_reduce(a1 + a2);
  CHECK(r.in_image);
  CHECK(r.canonical.is_zero());
  CHECK(as_reduce(LaurentPoly::constant(tower, 1)).in_image == false);
  std::mt19937 rng(21);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_poly(tower, rng, 5);
    const auto red = as_reduce(x);
    CHECK(x == red.canonical + red.witness.wp() + red.dropped);
    CHECK(as_reduce(red.canonical).canonical == red.canonical);
    // images of wp are recognised
    CHECK(as_reduce(x.wp()).in_image);
  }
}

TEST_CASE("tower parameters") {
  CHECK_THROWS_AS(make_tower(BaseFieldDesc::prime_field(2), -1), Error);
  CHECK_THROWS_AS(make_tower(BaseFieldDesc::prime_field(2), 2, {"x", "x"}), Error);
  auto t = make_tower(BaseFieldDesc::prime_field(2), 3);
  CHECK(t->names == std::vector<std::string>{"a1", "a2", "a3"});
  CHECK(drop_outer(t)->n == 2);
}
