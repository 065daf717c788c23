// Exact elimination: univariate integer polynomials, the subresultant
// resultant in y over Z[x], modular gcd and squarefree parts, plus a
// multiprecision complex root finder.
#pragma once

#include "plucker/sparse_poly.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace plucker {

/// Dense univariate integer polynomial, coefficient of x^i at index i; the
/// zero polynomial is the empty vector.
using ZPoly = std::vector<mpz_class>;
/// Polynomial in y whose coefficients are ZPoly's in x.
using ZXYPoly = std::vector<ZPoly>;

namespace zpoly {
int degree(const ZPoly& p);  // -1 for the zero polynomial
void trim(ZPoly& p);
ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const mpz_class& c);
ZPoly derivative(const ZPoly& a);
/// Exact quotient a / b; throws std::domain_error if b does not divide a over Z.
ZPoly exact_div(const ZPoly& a, const ZPoly& b);
bool divides(const ZPoly& b, const ZPoly& a);
mpz_class content(const ZPoly& a);
/// a / content(a) with positive leading coefficient.
ZPoly primitive(const ZPoly& a);
mpz_class eval(const ZPoly& a, const mpz_class& x);
}  // namespace zpoly

/// Res_y(A, B) for A, B in Z[x][y] by the subresultant PRS; zero iff A and B
/// share a factor of positive y-degree (or either is zero).
ZPoly resultant_y(const ZXYPoly& a, const ZXYPoly& b);

/// Res_y(f, g) of polynomials with nonnegative exponents, exactly, as a
/// polynomial in x (exponents (i,0)). Zero signals a common factor.
SparsePoly resultant_y(const SparsePoly& f, const SparsePoly& g);

/// Primitive gcd over Z computed modulo word-size primes and lifted by CRT;
/// each candidate is confirmed by exact division.
ZPoly gcd(const ZPoly& a, const ZPoly& b);
/// a / gcd(a, a'), primitive.
ZPoly squarefree_part(const ZPoly& a);

using Real = boost::multiprecision::mpfr_float;

struct Complex {
  Real re, im;
  Complex() : re(0), im(0) {}
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}
  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator-() const { return {-re, -im}; }
  Complex operator*(const Complex& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  Complex operator/(const Complex& o) const {
    const Real d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }
};

Real abs(const Complex& z);
Complex to_complex(const mpq_class& q);

struct RootFindingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All complex roots of a polynomial with simple roots by Aberth iteration,
/// working at `bits` of precision and doubling it (up to max_bits) until every
/// root passes a Newton-correction test. Throws RootFindingError otherwise.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs, unsigned bits = 256,
                                      unsigned max_bits = 4096);
std::vector<Complex> polynomial_roots(const ZPoly& p, unsigned bits = 256, unsigned max_bits = 4096);

/// Aberth iterates at the current default precision without the simple-root
/// test; a root of multiplicity m comes back as m nearby values. Leading and
/// trailing coefficients must be nonzero.
std::vector<Complex> polynomial_roots_unchecked(const std::vector<Complex>& coeffs);

}  // namespace plucker
