#include "algdyn/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "algdyn/errors.hpp"

namespace algdyn {

namespace {

// Round-to-nearest complex number used only for approximation.
class MpC {
 public:
  explicit MpC(mpfr_prec_t p) {
    mpfr_init2(re, p);
    mpfr_init2(im, p);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
  }
  MpC(const MpC& o) : MpC(mpfr_get_prec(o.re)) {
    mpfr_set(re, o.re, MPFR_RNDN);
    mpfr_set(im, o.im, MPFR_RNDN);
  }
  MpC& operator=(const MpC& o) {
    if (this != &o) {
      mpfr_set(re, o.re, MPFR_RNDN);
      mpfr_set(im, o.im, MPFR_RNDN);
    }
    return *this;
  }
  ~MpC() {
    mpfr_clear(re);
    mpfr_clear(im);
  }
  mpfr_prec_t prec() const { return mpfr_get_prec(re); }

  void mul(const MpC& a, const MpC& b) {
    MpC t(prec());
    mpfr_t x;
    mpfr_init2(x, prec());
    mpfr_mul(t.re, a.re, b.re, MPFR_RNDN);
    mpfr_mul(x, a.im, b.im, MPFR_RNDN);
    mpfr_sub(t.re, t.re, x, MPFR_RNDN);
    mpfr_mul(t.im, a.re, b.im, MPFR_RNDN);
    mpfr_mul(x, a.im, b.re, MPFR_RNDN);
    mpfr_add(t.im, t.im, x, MPFR_RNDN);
    mpfr_clear(x);
    *this = t;
  }
  void div(const MpC& a, const MpC& b) {
    mpfr_t n, x;
    mpfr_init2(n, prec());
    mpfr_init2(x, prec());
    mpfr_sqr(n, b.re, MPFR_RNDN);
    mpfr_sqr(x, b.im, MPFR_RNDN);
    mpfr_add(n, n, x, MPFR_RNDN);
    MpC conj(b);
    mpfr_neg(conj.im, conj.im, MPFR_RNDN);
    mul(a, conj);
    mpfr_div(re, re, n, MPFR_RNDN);
    mpfr_div(im, im, n, MPFR_RNDN);
    mpfr_clear(n);
    mpfr_clear(x);
  }
  void add(const MpC& a, const MpC& b) {
    mpfr_add(re, a.re, b.re, MPFR_RNDN);
    mpfr_add(im, a.im, b.im, MPFR_RNDN);
  }
  void sub(const MpC& a, const MpC& b) {
    mpfr_sub(re, a.re, b.re, MPFR_RNDN);
    mpfr_sub(im, a.im, b.im, MPFR_RNDN);
  }
  double abs_d() const { return std::hypot(mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN)); }
  double log2_abs() const {
    long e1 = 0, e2 = 0;
    double a = mpfr_zero_p(re) ? 0 : std::fabs(mpfr_get_d_2exp(&e1, re, MPFR_RNDN));
    double b = mpfr_zero_p(im) ? 0 : std::fabs(mpfr_get_d_2exp(&e2, im, MPFR_RNDN));
    if (a == 0 && b == 0) return -1e9;
    double la = a == 0 ? -1e9 : std::log2(a) + static_cast<double>(e1);
    double lb = b == 0 ? -1e9 : std::log2(b) + static_cast<double>(e2);
    return std::max(la, lb);
  }

  mpfr_t re, im;
};

// Horner evaluation of f and f'.
void horner(const std::vector<MpC>& coeffs, const MpC& z, MpC& val, MpC& der) {
  mpfr_prec_t p = z.prec();
  MpC v(p), d(p), t(p);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    t.mul(d, z);
    d.add(t, v);
    t.mul(v, z);
    v.add(t, coeffs[i]);
  }
  val = v;
  der = d;
}

std::vector<std::complex<double>> aberth_double(const RatPoly& f) {
  int n = f.degree();
  std::vector<std::complex<double>> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = f.coeff(i).get_d();
  double radius = 0;
  for (int i = 0; i < n; ++i)
    radius = std::max(radius, std::pow(std::abs(c[static_cast<std::size_t>(i)] / c.back()), 1.0 / (n - i)));
  radius = std::max(radius, 1e-3);
  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    z[static_cast<std::size_t>(i)] = std::polar(radius, 2 * M_PI * i / n + 0.4);
  for (int it = 0; it < 500; ++it) {
    double moved = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      std::complex<double> v = 0, d = 0;
      for (std::size_t k = c.size(); k-- > 0;) {
        d = d * z[i] + v;
        v = v * z[i] + c[k];
      }
      if (v == 0.0) continue;
      std::complex<double> w = v / d;
      std::complex<double> s = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      std::complex<double> step = w / (1.0 - w * s);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      moved = std::max(moved, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (moved < 1e-14) break;
  }
  return z;
}

struct Attempt {
  bool ok = false;
  IsolatedRoots roots;
};

Attempt try_isolate(const RatPoly& f, mpfr_prec_t wp, mpfr_prec_t target_bits) {
  int n = f.degree();
  auto approx = aberth_double(f);
  std::vector<MpC> coeffs;
  for (int i = 0; i <= n; ++i) {
    MpC c(wp);
    mpfr_set_q(c.re, f.coeff(i).get_mpq_t(), MPFR_RNDN);
    coeffs.push_back(c);
  }
  std::vector<MpC> z;
  for (const auto& a : approx) {
    MpC c(wp);
    mpfr_set_d(c.re, a.real(), MPFR_RNDN);
    mpfr_set_d(c.im, a.imag(), MPFR_RNDN);
    z.push_back(c);
  }
  MpC val(wp), der(wp), w(wp), s(wp), t(wp), one(wp), step(wp);
  mpfr_set_ui(one.re, 1, MPFR_RNDN);
  for (int it = 0; it < 200; ++it) {
    double worst = -1e9;
    for (std::size_t i = 0; i < z.size(); ++i) {
      horner(coeffs, z[i], val, der);
      if (mpfr_zero_p(val.re) && mpfr_zero_p(val.im)) continue;
      w.div(val, der);
      mpfr_set_zero(s.re, 1);
      mpfr_set_zero(s.im, 1);
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == i) continue;
        t.sub(z[i], z[j]);
        MpC inv(wp);
        inv.div(one, t);
        s.add(s, inv);
      }
      t.mul(w, s);
      t.sub(one, t);
      step.div(w, t);
      z[i].sub(z[i], step);
      worst = std::max(worst, step.log2_abs());
    }
    if (worst < -static_cast<double>(wp) + 16) break;
  }

  // Real/complex classification from the exact real-root count.
  int r = count_real_roots(f);
  std::vector<std::size_t> order(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(mpfr_get_d(z[a].im, MPFR_RNDN)) < std::fabs(mpfr_get_d(z[b].im, MPFR_RNDN));
  });
  std::vector<MpC> centers;
  std::vector<bool> is_real;
  std::vector<MpC> uppers;
  for (int i = 0; i < r; ++i) {
    MpC c = z[order[static_cast<std::size_t>(i)]];
    mpfr_set_zero(c.im, 1);
    centers.push_back(c);
    is_real.push_back(true);
  }
  for (std::size_t i = static_cast<std::size_t>(r); i < order.size(); ++i) {
    const MpC& c = z[order[i]];
    if (mpfr_sgn(c.im) > 0) uppers.push_back(c);
  }
  if (uppers.size() * 2 + static_cast<std::size_t>(r) != static_cast<std::size_t>(n)) return {};
  for (const auto& u : uppers) {
    centers.push_back(u);
    is_real.push_back(false);
    MpC c = u;
    mpfr_neg(c.im, c.im, MPFR_RNDN);
    centers.push_back(c);
    is_real.push_back(false);
  }

  // Weierstrass corrections in interval arithmetic: W_i = f(z_i) / (lc * prod (z_i - z_j)).
  auto point = [&](const MpC& c) {
    ComplexInterval b(wp);
    mpfr_set(b.re.lo(), c.re, MPFR_RNDD);
    mpfr_set(b.re.hi(), c.re, MPFR_RNDU);
    mpfr_set(b.im.lo(), c.im, MPFR_RNDD);
    mpfr_set(b.im.hi(), c.im, MPFR_RNDU);
    return b;
  };
  std::vector<ComplexInterval> pts;
  for (const auto& c : centers) pts.push_back(point(c));
  std::vector<Interval> radius;
  Interval nn(Rat(n), wp);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    ComplexInterval den(Interval(f.leading(), wp), Interval(wp));
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) den = den * (pts[i] - pts[j]);
    if (den.norm().contains_zero()) return {};
    ComplexInterval wi = evaluate(f, pts[i]) / den;
    Interval rho = wi.abs() * nn;
    radius.push_back(rho);
  }
  // Disjointness: |z_i - z_j|^2 > (rho_i + rho_j)^2.
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Interval gap = (pts[i] - pts[j]).norm() - (radius[i] + radius[j]).sqr();
      if (!gap.is_positive()) return {};
    }
  // Size target.
  Interval cap(Rat(1), wp);
  mpfr_mul_2si(cap.lo(), cap.lo(), -static_cast<long>(target_bits), MPFR_RNDD);
  mpfr_mul_2si(cap.hi(), cap.hi(), -static_cast<long>(target_bits), MPFR_RNDU);
  for (const auto& rho : radius)
    if (mpfr_greater_p(rho.hi(), cap.lo())) return {};

  Attempt out;
  out.ok = true;
  out.roots.precision = wp;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!is_real[i] && mpfr_sgn(centers[i].im) < 0) continue;
    RootBox rb;
    rb.real = is_real[i];
    Interval widen(wp);
    mpfr_neg(widen.lo(), radius[i].hi(), MPFR_RNDD);
    mpfr_set(widen.hi(), radius[i].hi(), MPFR_RNDU);
    rb.box = ComplexInterval(pts[i].re + widen, rb.real ? Interval(wp) : pts[i].im + widen);
    (rb.real ? out.roots.real : out.roots.upper).push_back(std::move(rb));
  }
  std::sort(out.roots.real.begin(), out.roots.real.end(),
            [](const RootBox& a, const RootBox& b) { return a.box.re.mid_double() < b.box.re.mid_double(); });
  std::sort(out.roots.upper.begin(), out.roots.upper.end(), [](const RootBox& a, const RootBox& b) {
    if (a.box.re.mid_double() != b.box.re.mid_double()) return a.box.re.mid_double() < b.box.re.mid_double();
    return a.box.im.mid_double() < b.box.im.mid_double();
  });
  return out;
}

}  // namespace

IsolatedRoots isolate_roots(const RatPoly& f, mpfr_prec_t prec) {
  if (f.degree() < 1) return {};
  if (gcd(f, f.derivative()).degree() > 0) throw DomainError("isolate_roots: polynomial is not squarefree");
  if (f.degree() == 1) {
    Rat root = -f.coeff(0) / f.coeff(1);
    IsolatedRoots out;
    out.precision = prec;
    out.real.push_back({true, ComplexInterval(Interval(root, prec), Interval(prec))});
    return out;
  }
  mpfr_prec_t target = prec - 8;
  for (mpfr_prec_t wp = prec + 64; wp <= 16 * prec + 512; wp *= 2) {
    Attempt a = try_isolate(f, wp, target);
    if (a.ok) return a.roots;
  }
  throw CertificationError("roots of " + f.str(), "root isolation failed after precision escalation");
}

Interval evaluate(const RatPoly& h, const Interval& x) {
  Interval acc(x.precision());
  for (int i = h.degree(); i >= 0; --i) acc = acc * x + Interval(h.coeff(i), x.precision());
  return acc;
}

ComplexInterval evaluate(const RatPoly& h, const ComplexInterval& z) {
  mpfr_prec_t p = z.re.precision();
  ComplexInterval acc(p);
  for (int i = h.degree(); i >= 0; --i) acc = acc * z + ComplexInterval(Interval(h.coeff(i), p), Interval(p));
  return acc;
}

Interval log_abs(const RatPoly& h, const RootBox& root) {
  if (root.real) {
    Interval v = evaluate(h, root.box.re).abs();
    if (v.contains_zero()) throw CertificationError("archimedean place", "|h(root)| not separated from zero");
    return v.log();
  }
  Interval n = evaluate(h, root.box).norm();
  if (n.contains_zero()) throw CertificationError("archimedean place", "|h(root)| not separated from zero");
  return n.log().scaled(Rat(1, 2));
}

}  // namespace algdyn
