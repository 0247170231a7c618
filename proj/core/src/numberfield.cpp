#include "algdyn/numberfield.hpp"

#include <algorithm>

#include "algdyn/action.hpp"
#include "algdyn/errors.hpp"
#include "algdyn/factor.hpp"
#include "algdyn/nfpoly.hpp"

namespace algdyn {

QMatrix multiplication_matrix(const RatPoly& a, const RatPoly& f) {
  auto k = static_cast<std::size_t>(f.degree());
  QMatrix m(k, k);
  RatPoly col = a % f;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) m(i, j) = col.coeff(static_cast<int>(i));
    col = (col * RatPoly::x()) % f;
  }
  return m;
}

NumberFieldAction make_number_field_action(RatPoly f, std::vector<RatPoly> multipliers) {
  NumberFieldAction nf;
  nf.basis_map = QMatrix::identity(static_cast<std::size_t>(f.degree()));
  for (auto& g : multipliers) g = g % f;
  nf.f = std::move(f);
  nf.multipliers = std::move(multipliers);
  return nf;
}

NumberFieldAction diagonalize_block(const std::vector<QMatrix>& block, std::uint64_t seed) {
  if (block.empty()) throw DomainError("diagonalize_block: no generators");
  std::size_t k = block.front().rows();
  std::vector<QMatrix> candidates = block;
  SeededInts rng(seed);
  for (long bound = 2; bound <= 64; bound *= 2)
    for (int attempt = 0; attempt < 16; ++attempt) {
      QMatrix g(k, k);
      for (const auto& b : block) g += b * Rat(rng.next(bound));
      candidates.push_back(std::move(g));
    }
  for (const auto& g : candidates) {
    RatPoly mp = minpoly(g);
    if (static_cast<std::size_t>(mp.degree()) != k) continue;
    if (!is_irreducible(mp, seed)) throw DomainError("diagonalize_block: block is not irreducible");
    RatVec e(k);
    e[0] = 1;
    std::vector<RatVec> cols;
    RatVec v = e;
    for (std::size_t i = 0; i < k; ++i) {
      cols.push_back(v);
      v = g.apply(v);
    }
    QMatrix p = QMatrix::from_columns(cols, k);
    QMatrix pinv = inverse(p);
    NumberFieldAction nf;
    nf.f = mp;
    nf.basis_map = p;
    for (const auto& b : block) {
      RatVec h = pinv.apply(b.apply(e));
      RatPoly hp(h);
      if (pinv * b * p != multiplication_matrix(hp, mp))
        throw DomainError("diagonalize_block: generators do not act through the field");
      nf.multipliers.push_back(hp);
    }
    return nf;
  }
  throw DomainError("diagonalize_block: no primitive element found; block is not irreducible");
}

RatPoly element(const NumberFieldAction& nf, const IntVec& n) {
  if (n.size() != nf.rank()) throw DomainError("exponent vector has wrong length");
  RatPoly acc = RatPoly::constant(Rat(1)) % nf.f;
  for (std::size_t j = 0; j < n.size(); ++j)
    if (n[j] != 0) acc = (acc * powmod(nf.multipliers[j], n[j], nf.f)) % nf.f;
  return acc;
}

RatPoly element_charpoly(const NumberFieldAction& nf, const IntVec& n) {
  return charpoly(multiplication_matrix(element(nf, n), nf.f));
}

RatPoly element_minpoly(const FieldElement& e) {
  return squarefree_part(charpoly(multiplication_matrix(e.value, e.field)));
}

std::optional<unsigned long> is_root_of_unity(const FieldElement& e) {
  if ((e.value % e.field).is_zero()) throw DomainError("is_root_of_unity: zero element");
  RatPoly mp = element_minpoly(e);
  if (!mp.has_integer_coeffs()) return std::nullopt;
  auto k = static_cast<unsigned long>(mp.degree());
  for (unsigned long n = 1; n <= 2 * k * k + 2; ++n)
    if (euler_phi(n) == k && cyclotomic(static_cast<unsigned>(n)) == mp) return n;
  return std::nullopt;
}

RatPoly substitute(const RatPoly& expr, const RatPoly& image, const RatPoly& modulus) {
  RatPoly acc;
  for (int i = expr.degree(); i >= 0; --i) acc = (acc * image + RatPoly::constant(expr.coeff(i))) % modulus;
  return acc;
}

std::vector<NFFactor> factor_over_field(const RatPoly& g, const RatPoly& f, std::uint64_t seed) {
  if (g.degree() < 1) return {};
  NumberFieldArith field(f);
  NFPoly gk = NFPoly::from_rational(&field, squarefree_part(g));
  RatPoly alpha = RatPoly::x() % f;
  for (long s : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L, 6L, -6L, 7L, -7L}) {
    // gs(x) = g(x - s*alpha)
    NFPoly gs = gk.shift(alpha * Rat(-s));
    RatPoly n = norm(gs);
    if (gcd(n, n.derivative()).degree() > 0) continue;
    std::vector<NFFactor> out;
    for (const auto& q : factor_squarefree(n, seed)) {
      NFPoly h = gcd(gs, NFPoly::from_rational(&field, q));
      if (h.degree() < 1) continue;
      // back to x: h(x + s*alpha)
      NFPoly back = h.shift(alpha * Rat(s)).monic();
      out.push_back({back.coeffs()});
    }
    return out;
  }
  throw Error("factor_over_field: no squarefree norm shift found");
}

std::vector<FieldElement> embeddings_between(const RatPoly& f1, const RatPoly& f2, std::uint64_t seed) {
  std::vector<FieldElement> out;
  if (f1.degree() > f2.degree() || f2.degree() % f1.degree() != 0) return out;
  for (const auto& fac : factor_over_field(f1.monic(), f2.monic(), seed)) {
    if (fac.coeffs.size() != 2) continue;
    out.push_back({f2.monic(), -fac.coeffs[0]});
  }
  std::sort(out.begin(), out.end(),
            [](const FieldElement& a, const FieldElement& b) { return poly_less(a.value, b.value); });
  return out;
}

std::vector<CompositumComponent> compositum(const RatPoly& f1, const RatPoly& f2, std::uint64_t seed) {
  RatPoly a = f1.monic(), b = f2.monic();
  std::vector<CompositumComponent> out;
  for (long s : {1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L, 6L, -6L, 7L, -7L, 8L, -8L}) {
    // N(t) = Res_y(b(y), a(t - s y)): t = theta1 + s*theta2 over all pairs.
    NumberFieldArith kb(b);
    RatPoly y = RatPoly::x() % b;
    // a(t - s*y) as a polynomial in t with coefficients in Q[y]/(b).
    NFPoly at = NFPoly::from_rational(&kb, a).shift(y * Rat(-s));
    RatPoly n = norm(at);
    if (gcd(n, n.derivative()).degree() > 0) continue;
    for (const auto& big : factor_squarefree(n, seed)) {
      RatPoly F = big.monic();
      NumberFieldArith kf(F);
      RatPoly t = RatPoly::x() % F;
      // Common root y of b(y) and a(t - s y) over Q[t]/(F).
      NFPoly by = NFPoly::from_rational(&kf, b);
      // a(t - s y) as a polynomial in y: substitute x = -s*y + t.
      NFPoly lin(&kf, {t, RatPoly::constant(Rat(-s))});
      NFPoly ay(&kf, {});
      for (int i = a.degree(); i >= 0; --i) ay = ay * lin + NFPoly(&kf, {RatPoly::constant(a.coeff(i))});
      NFPoly h = gcd(by, ay);
      if (h.degree() != 1) throw Error("compositum: common factor is not linear");
      RatPoly theta2 = (-h.coeffs()[0]) % F;
      RatPoly theta1 = (t - theta2 * Rat(s)) % F;
      out.push_back({F, theta1, theta2});
    }
    return out;
  }
  throw Error("compositum: no separating shift found");
}

}  // namespace algdyn
