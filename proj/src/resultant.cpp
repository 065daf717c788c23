#include "plucker/resultant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plucker {

namespace zpoly {

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

ZPoly scale(const ZPoly& a, const mpz_class& c) {
  if (c == 0) return {};
  ZPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

namespace {

// Long division; returns false when a coefficient division is inexact.
bool try_div(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  if (b.empty()) throw std::domain_error("division by the zero polynomial");
  q.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  ZPoly rem = a;
  q.assign(a.size() - b.size() + 1, 0);
  const mpz_class& lb = b.back();
  for (int i = degree(rem); i >= degree(b); --i) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), rem[i].get_mpz_t(), lb.get_mpz_t());
    const int shift = i - degree(b);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(rem[shift + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  for (const auto& r : rem)
    if (r != 0) return false;
  trim(q);
  return true;
}

}  // namespace

ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
  ZPoly q;
  if (!try_div(a, b, q)) throw std::domain_error("inexact polynomial division");
  return q;
}

bool divides(const ZPoly& b, const ZPoly& a) {
  ZPoly q;
  return try_div(a, b, q);
}

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive(const ZPoly& a) {
  if (a.empty()) return a;
  mpz_class c = content(a);
  if (a.back() < 0) c = -c;
  ZPoly r = a;
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

mpz_class eval(const ZPoly& a, const mpz_class& x) {
  mpz_class r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
  return r;
}

}  // namespace zpoly

namespace {

using namespace zpoly;

int ydeg(const ZXYPoly& p) { return static_cast<int>(p.size()) - 1; }

void ytrim(ZXYPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

ZPoly zpow(const ZPoly& b, int e) {
  ZPoly r{1};
  for (int i = 0; i < e; ++i) r = mul(r, b);
  return r;
}

// Pseudo-remainder of a by b in y: lc(b)^(deg a - deg b + 1) * a mod b.
ZXYPoly prem(ZXYPoly a, const ZXYPoly& b) {
  const int db = ydeg(b);
  const ZPoly& lb = b.back();
  int steps = ydeg(a) - db + 1;
  while (ydeg(a) >= db) {
    const ZPoly la = a.back();
    const int shift = ydeg(a) - db;
    for (auto& c : a) c = mul(c, lb);
    for (int j = 0; j <= db; ++j) a[shift + j] = sub(a[shift + j], mul(la, b[j]));
    ytrim(a);
    --steps;
  }
  if (steps > 0) {
    const ZPoly f = zpow(lb, steps);
    for (auto& c : a) c = mul(c, f);
  }
  return a;
}

// Word-size modular arithmetic for the gcd.
using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

using ModPoly = std::vector<u64>;

void mtrim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const ZPoly& a, u64 p) {
  ModPoly r(a.size());
  const mpz_class mp(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class m;
    mpz_fdiv_r(m.get_mpz_t(), a[i].get_mpz_t(), mp.get_mpz_t());
    r[i] = m.get_ui();
  }
  mtrim(r);
  return r;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    const u64 inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const u64 c = mulmod(a.back(), inv, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - mulmod(c, b[j], p)) % p;
      mtrim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const u64 inv = powmod(a.back(), p - 2, p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

}  // namespace

ZPoly resultant_y(const ZXYPoly& a_in, const ZXYPoly& b_in) {
  ZXYPoly a = a_in, b = b_in;
  ytrim(a);
  ytrim(b);
  if (a.empty() || b.empty()) return {};
  mpz_class sign = 1;
  if (ydeg(a) < ydeg(b)) {
    std::swap(a, b);
    if (ydeg(a) % 2 == 1 && ydeg(b) % 2 == 1) sign = -1;
  }
  if (ydeg(b) == 0) return scale(zpow(b[0], ydeg(a)), sign);

  ZPoly g{1}, h{1};
  while (true) {
    const int delta = ydeg(a) - ydeg(b);
    if (ydeg(a) % 2 == 1 && ydeg(b) % 2 == 1) sign = -sign;
    ZXYPoly r = prem(a, b);
    if (r.empty()) return {};
    a = std::move(b);
    const ZPoly divisor = mul(g, zpow(h, delta));
    for (auto& c : r) c = exact_div(c, divisor);
    b = std::move(r);
    g = a.back();
    if (delta > 0) h = exact_div(zpow(g, delta), zpow(h, delta - 1));
    if (ydeg(b) == 0) {
      const int da = ydeg(a);
      h = exact_div(zpow(b.back(), da), zpow(h, da - 1));
      return scale(h, sign);
    }
  }
}

SparsePoly resultant_y(const SparsePoly& f, const SparsePoly& g) {
  auto to_zxy = [](const SparsePoly& p, mpz_class& denom) {
    if (!p.is_zero() && (p.min_exponent().x < 0 || p.min_exponent().y < 0))
      throw std::invalid_argument("resultant_y needs nonnegative exponents");
    denom = 1;
    for (const auto& [e, c] : p.terms()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());
    ZXYPoly r(p.is_zero() ? 0 : p.degree_y() + 1);
    for (const auto& [e, c] : p.terms()) {
      auto& col = r[e.y];
      if (col.size() <= static_cast<std::size_t>(e.x)) col.resize(e.x + 1);
      col[e.x] = c.get_num() * (denom / c.get_den());
    }
    return r;
  };
  mpz_class df, dg;
  const ZXYPoly a = to_zxy(f, df), b = to_zxy(g, dg);
  const ZPoly r = resultant_y(a, b);
  if (r.empty()) return {};
  // Res(df f, dg g) = df^deg_y(g) dg^deg_y(f) Res(f, g).
  mpz_class s1, s2;
  mpz_pow_ui(s1.get_mpz_t(), df.get_mpz_t(), ydeg(b));
  mpz_pow_ui(s2.get_mpz_t(), dg.get_mpz_t(), ydeg(a));
  const mpq_class scale_back(1, s1 * s2);
  SparsePoly out;
  for (std::size_t i = 0; i < r.size(); ++i) out.add_term({static_cast<Int>(i), 0}, mpq_class(r[i]) * scale_back);
  return out;
}

ZPoly gcd(const ZPoly& a_in, const ZPoly& b_in) {
  ZPoly a = a_in, b = b_in;
  trim(a);
  trim(b);
  if (a.empty()) return primitive(b);
  if (b.empty()) return primitive(a);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
  a = primitive(a);
  b = primitive(b);
  if (degree(a) == 0 || degree(b) == 0) return {c};
  mpz_class lcg;
  mpz_gcd(lcg.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  int best = std::min(degree(a), degree(b)) + 1;
  ZPoly acc;  // CRT image, coefficients in [0, modulus)
  mpz_class modulus = 1;
  ZPoly previous;
  mpz_class prime = mpz_class(1) << 62;
  for (int iter = 0; iter < 10000; ++iter) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const u64 p = prime.get_ui();
    const mpz_class mp(static_cast<unsigned long>(p));
    if (mpz_divisible_p(a.back().get_mpz_t(), mp.get_mpz_t()) ||
        mpz_divisible_p(b.back().get_mpz_t(), mp.get_mpz_t()))
      continue;
    ModPoly gp = mod_gcd(reduce(a, p), reduce(b, p), p);
    const int d = static_cast<int>(gp.size()) - 1;
    if (d == 0) return {c};
    if (d > best) continue;  // unlucky prime
    if (d < best) {
      best = d;
      acc.clear();
      modulus = 1;
      previous.clear();
    }
    // Scale the monic image so its leading coefficient is lcg mod p.
    const u64 l = reduce(ZPoly{lcg}, p).empty() ? 0 : reduce(ZPoly{lcg}, p)[0];
    for (auto& x : gp) x = mulmod(x, l, p);
    if (acc.empty()) {
      acc.resize(gp.size());
      for (std::size_t i = 0; i < gp.size(); ++i) acc[i] = static_cast<unsigned long>(gp[i]);
      modulus = mp;
    } else {
      // x = acc + modulus * t with t = (gp - acc) / modulus mod p.
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), mp.get_mpz_t());
      for (std::size_t i = 0; i < gp.size(); ++i) {
        mpz_class t = (mpz_class(static_cast<unsigned long>(gp[i])) - acc[i]) * inv;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), mp.get_mpz_t());
        acc[i] += modulus * t;
      }
      modulus *= mp;
    }
    ZPoly lifted = acc;
    const mpz_class half = modulus / 2;
    for (auto& x : lifted)
      if (x > half) x -= modulus;
    trim(lifted);
    if (lifted == previous) {
      const ZPoly cand = primitive(lifted);
      if (divides(cand, a) && divides(cand, b)) return scale(cand, c);
    }
    previous = std::move(lifted);
  }
  throw std::runtime_error("modular gcd did not stabilise");
}

ZPoly squarefree_part(const ZPoly& a) {
  ZPoly p = a;
  trim(p);
  if (degree(p) <= 0) return primitive(p);
  const ZPoly g = gcd(p, derivative(p));
  return primitive(exact_div(primitive(p), primitive(g)));
}

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }

Complex to_complex(const mpq_class& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return Complex(r);
}

namespace {

Real to_real(const mpz_class& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

// Copy of x at the current default precision (copies otherwise keep the
// source precision).
Real rounded(const Real& x) {
  Real r;
  mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

// p(z) and p'(z) by Horner.
void horner(const std::vector<Complex>& c, const Complex& z, Complex& p, Complex& dp) {
  p = c.back();
  dp = Complex();
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
}

// Starting points on circles whose radii come from the upper convex hull of
// (i, log|c_i|).
std::vector<Complex> initial_points(const std::vector<Complex>& c, double sigma = 0.7) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<double> lg(n + 1);
  for (int i = 0; i <= n; ++i) {
    const Real a = abs(c[i]);
    lg[i] = a == 0 ? -HUGE_VAL : static_cast<double>(boost::multiprecision::log(a));
  }
  std::vector<int> hull;
  for (int i = 0; i <= n; ++i) {
    if (lg[i] == -HUGE_VAL) continue;
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2], b = hull.back();
      // Drop b if it lies on or below the segment a-i.
      if ((lg[b] - lg[a]) * (i - a) <= (lg[i] - lg[a]) * (b - a)) hull.pop_back();
      else break;
    }
    hull.push_back(i);
  }
  std::vector<Complex> z;
  z.reserve(n);
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const int i = hull[k], j = hull[k + 1];
    const double radius = std::exp((lg[i] - lg[j]) / (j - i));
    for (int m = 0; m < j - i; ++m) {
      const double angle = 2 * std::numbers::pi * m / (j - i) + 2 * std::numbers::pi * i / n + sigma;
      z.emplace_back(Real(radius * std::cos(angle)), Real(radius * std::sin(angle)));
    }
  }
  return z;
}

bool aberth(const std::vector<Complex>& c, std::vector<Complex>& z, unsigned bits) {
  const int n = static_cast<int>(z.size());
  // Rounding in p(z) puts a floor under the correction; stop well above it.
  const Real eps = boost::multiprecision::ldexp(Real(1), -static_cast<int>(bits * 3 / 4));
  for (int iter = 0; iter < 50 + 20 * static_cast<int>(bits / 64) + 2 * n; ++iter) {
    bool all = true;
    for (int i = 0; i < n; ++i) {
      Complex p, dp;
      horner(c, z[i], p, dp);
      if (p.re == 0 && p.im == 0) continue;
      if (dp.re == 0 && dp.im == 0) {
        // Stationary point: nudge off it.
        z[i] += Complex(eps * (1 + abs(z[i])), eps);
        all = false;
        continue;
      }
      const Complex ratio = p / dp;
      Complex sum;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += Complex(Real(1)) / (z[i] - z[j]);
      const Complex w = ratio / (Complex(Real(1)) - ratio * sum);
      z[i] -= w;
      if (abs(w) > eps * abs(z[i])) all = false;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs_in, unsigned bits, unsigned max_bits) {
  std::vector<Complex> coeffs = coeffs_in;
  while (!coeffs.empty() && coeffs.back().re == 0 && coeffs.back().im == 0) coeffs.pop_back();
  if (coeffs.size() <= 1) return {};
  if (coeffs.front().re == 0 && coeffs.front().im == 0)
    throw std::invalid_argument("polynomial_roots: divide out the root at zero first");
  const unsigned saved = Real::default_precision();
  for (int attempt = 0; bits <= max_bits; bits *= 2, ++attempt) {
    Real::default_precision(bits * 301 / 1000 + 1);
    std::vector<Complex> c;
    for (const auto& x : coeffs) c.emplace_back(rounded(x.re), rounded(x.im));
    std::vector<Complex> z = initial_points(c, 0.7 + 0.37 * attempt);
    if (!aberth(c, z, bits)) continue;
    // Accept when the roots are pairwise distinct and each is separated from
    // the others by much more than its Newton correction.
    bool ok = true;
    const Real tol = boost::multiprecision::ldexp(Real(1), -static_cast<int>(bits) / 2);
    const Real sep = boost::multiprecision::ldexp(Real(1), -static_cast<int>(bits) / 4);
    for (std::size_t i = 0; i < z.size() && ok; ++i) {
      Complex p, dp;
      horner(c, z[i], p, dp);
      if (dp.re == 0 && dp.im == 0) {
        ok = false;
        break;
      }
      const Real corr = abs(p / dp);
      if (corr > tol * abs(z[i])) ok = false;
      for (std::size_t j = 0; j < z.size() && ok; ++j)
        if (j != i && abs(z[i] - z[j]) <= std::max(Real(1000 * corr), Real(sep * (abs(z[i]) + abs(z[j])))))
          ok = false;
    }
    if (ok) {
      Real::default_precision(saved);
      return z;
    }
  }
  Real::default_precision(saved);
  throw RootFindingError("polynomial_roots: no convergence up to " + std::to_string(max_bits) + " bits");
}

std::vector<Complex> polynomial_roots(const ZPoly& p, unsigned bits, unsigned max_bits) {
  const unsigned saved = Real::default_precision();
  Real::default_precision(max_bits * 301 / 1000 + 1);
  std::vector<Complex> c;
  for (const auto& x : p) c.emplace_back(to_real(x));
  Real::default_precision(saved);
  return polynomial_roots(c, bits, max_bits);
}

std::vector<Complex> polynomial_roots_unchecked(const std::vector<Complex>& coeffs) {
  if (coeffs.size() <= 1) return {};
  const unsigned bits = static_cast<unsigned>(Real::default_precision() * 3.33);
  std::vector<Complex> c;
  for (const auto& x : coeffs) c.emplace_back(rounded(x.re), rounded(x.im));
  std::vector<Complex> z = initial_points(c);
  aberth(c, z, bits);
  return z;
}

}  // namespace plucker
