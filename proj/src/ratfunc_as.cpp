// Artin-Schreier reduction modulo ℘(k) for k = F_q and k = F_q(t).
//
// Over F_q the canonical complement of ℘(F_q) is F_p * tau with Tr(tau) = 1.
// Over F_q(t) every pole of order divisible by p is lowered by subtracting
// ℘(c / S^{m/p}), where S is a squarefree factor of the denominator carrying
// multiplicity m and c^p = (top principal-part coefficient) mod S; then the
// polynomial part loses its t^{ip} terms the same way and the constant is
// reduced by the finite-field rule. The result is zero iff the input lies in
// ℘(k): a nonzero remainder has a pole of order prime to p or is a nonzero
// multiple of tau.

#include <algorithm>

#include "laurentbr/basefield.hpp"

namespace laurentbr {

namespace {

using namespace fqpoly;

struct SquarefreePart {
  FqPoly factor;  // monic squarefree
  int multiplicity;
};

FqPoly poly_pth_root(const FiniteField& F, const FqPoly& a) {
  const std::size_t p = static_cast<std::size_t>(F.p());
  FqPoly r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i % p == 0)
      r.push_back(F.pth_root(a[i]));
    else if (a[i] != 0)
      throw Error("polynomial is not a p-th power");
  }
  trim(r);
  return r;
}

// Squarefree factorisation f = prod S_i^{m_i} with S_i pairwise coprime.
void squarefree(const FiniteField& F, const FqPoly& f, int scale, std::vector<SquarefreePart>& out) {
  if (degree(f) < 1) return;
  FqPoly c = gcd(F, f, derivative(F, f));
  FqPoly w = quot(F, f, c);
  int i = 1;
  while (degree(w) > 0) {
    FqPoly y = gcd(F, w, c);
    FqPoly z = quot(F, w, y);
    if (degree(z) > 0) out.push_back({monic(F, z), i * scale});
    ++i;
    w = y;
    c = quot(F, c, y);
  }
  if (degree(c) > 0) squarefree(F, poly_pth_root(F, c), scale * F.p(), out);
}

// Solves c^p = r in F_q[t]/(S), S squarefree, by F_p-linear algebra on Frobenius.
FqPoly frobenius_root_mod(const FiniteField& F, const FqPoly& r, const FqPoly& S) {
  const int p = F.p();
  const int d = F.degree();
  const int ds = degree(S);
  const int N = d * ds;
  // column (j*d + i) = image of w^i t^j
  std::vector<std::vector<int>> M(N, std::vector<int>(N + 1, 0));
  for (int j = 0; j < ds; ++j)
    for (int i = 0; i < d; ++i) {
      std::vector<int> dg(d, 0);
      dg[i] = 1;
      FqPoly basis(j + 1, 0);
      basis[j] = F.from_digits(dg);
      FqPoly img = mod(F, pow(F, basis, static_cast<unsigned>(p)), S);
      for (int jj = 0; jj < static_cast<int>(img.size()); ++jj) {
        auto cd = F.digits(img[jj]);
        for (int ii = 0; ii < d; ++ii) M[jj * d + ii][j * d + i] = cd[ii];
      }
    }
  FqPoly rr = mod(F, r, S);
  for (int jj = 0; jj < static_cast<int>(rr.size()); ++jj) {
    auto cd = F.digits(rr[jj]);
    for (int ii = 0; ii < d; ++ii) M[jj * d + ii][N] = cd[ii];
  }
  auto inv_p = [p](int a) {
    for (int x = 1; x < p; ++x)
      if ((a * x) % p == 1) return x;
    return 0;
  };
  int row = 0;
  std::vector<int> pivot_col(N, -1);
  for (int col = 0; col < N && row < N; ++col) {
    int sel = -1;
    for (int k = row; k < N; ++k)
      if (M[k][col]) {
        sel = k;
        break;
      }
    if (sel < 0) continue;
    std::swap(M[row], M[sel]);
    const int iv = inv_p(M[row][col]);
    for (auto& x : M[row]) x = (x * iv) % p;
    for (int k = 0; k < N; ++k) {
      if (k == row || M[k][col] == 0) continue;
      const int f = M[k][col];
      for (int c2 = 0; c2 <= N; ++c2) M[k][c2] = ((M[k][c2] - f * M[row][c2]) % p + p) % p;
    }
    pivot_col[row] = col;
    ++row;
  }
  if (row != N) throw Error("Frobenius is not invertible modulo a non-squarefree polynomial");
  std::vector<int> sol(N, 0);
  for (int k = 0; k < N; ++k) sol[pivot_col[k]] = M[k][N];
  FqPoly c(ds, 0);
  for (int j = 0; j < ds; ++j) {
    std::vector<int> dg(sol.begin() + j * d, sol.begin() + (j + 1) * d);
    c[j] = F.from_digits(dg);
  }
  trim(c);
  return c;
}

ASReduction reduce_finite(const Element& beta) {
  const auto& f = beta.field();
  const auto& F = f->constants();
  const Fq b = beta.constant_value();
  const Fq tr = F.trace(b);
  const Fq canon = F.mul(tr, F.trace_one());
  const Fq wit = *F.wp_preimage(F.sub(b, canon));
  return {beta, Element::constant(f, canon), Element::constant(f, wit), canon == 0};
}

ASReduction reduce_ratfunc(const Element& beta) {
  const auto& f = beta.field();
  const auto& F = f->constants();
  const int p = f->p();
  Element cur = beta;
  Element witness = Element::zero(f);

  // poles at finite places
  for (;;) {
    const FqPoly& den = cur.denominator();
    if (degree(den) < 1) break;
    std::vector<SquarefreePart> parts;
    squarefree(F, den, 1, parts);
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
      if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
      return a.factor < b.factor;
    });
    auto it = std::find_if(parts.begin(), parts.end(), [p](const auto& s) { return s.multiplicity % p == 0; });
    if (it == parts.end()) break;
    const FqPoly& S = it->factor;
    const int m = it->multiplicity;
    const FqPoly Sm = pow(F, S, static_cast<unsigned>(m));
    const FqPoly cofactor = quot(F, den, Sm);
    // top coefficient of the S-principal part: num * cofactor^{-1} mod S
    const FqPoly top = mod(F, mul(F, cur.numerator(), inv_mod(F, cofactor, S)), S);
    const FqPoly c = frobenius_root_mod(F, top, S);
    const Element z = Element::fraction(f, c, pow(F, S, static_cast<unsigned>(m / p)));
    cur -= z.wp();
    witness += z;
  }

  // pole at infinity: polynomial part terms of degree divisible by p
  for (;;) {
    FqPoly poly = quot(F, cur.numerator(), cur.denominator());
    int hit = -1;
    for (int i = degree(poly); i > 0; --i)
      if (i % p == 0 && poly[i] != 0) {
        hit = i;
        break;
      }
    if (hit < 0) break;
    FqPoly zp(hit / p + 1, 0);
    zp[hit / p] = F.pth_root(poly[hit]);
    const Element z = Element::fraction(f, zp, {1});
    cur -= z.wp();
    witness += z;
  }

  // constant term
  FqPoly q, r;
  divmod(F, cur.numerator(), cur.denominator(), q, r);
  const Fq c0 = q.empty() ? 0 : q[0];
  const Fq canon0 = F.mul(F.trace(c0), F.trace_one());
  const Fq w0 = *F.wp_preimage(F.sub(c0, canon0));
  if (w0 != 0) {
    const Element z = Element::constant(f, w0);
    cur -= z.wp();
    witness += z;
  }
  const bool zero = cur.is_zero();
  return {beta, cur, witness, zero};
}

}  // namespace

ASReduction artin_schreier_reduce(const Element& beta) {
  if (!beta.field()) throw Error("uninitialised field element");
  if (beta.field()->is_finite()) return reduce_finite(beta);
  return reduce_ratfunc(beta);
}

}  // namespace laurentbr
