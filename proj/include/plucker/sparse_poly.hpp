// Sparse bivariate Laurent polynomials with exact rational coefficients.
#pragma once

#include "plucker/lattice.hpp"

#include <gmpxx.h>

#include <map>
#include <string>

namespace plucker {

class SparsePoly {
 public:
  using Terms = std::map<LatticePoint, mpq_class>;

  SparsePoly() = default;
  explicit SparsePoly(const Terms& terms);
  static SparsePoly monomial(const mpq_class& c, LatticePoint e);

  /// Adds c * x^e.y^e; cancelled coefficients are dropped.
  void add_term(LatticePoint e, const mpq_class& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  mpq_class coefficient(LatticePoint e) const;

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator*(const mpq_class& c) const;
  bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }

  SparsePoly dx() const;
  SparsePoly dy() const;

  /// Multiplication by the monomial x^e.x y^e.y.
  SparsePoly shifted(LatticePoint e) const;
  /// Componentwise minimum exponent; requires a nonzero polynomial.
  LatticePoint min_exponent() const;
  /// Divides out the largest monomial factor, so min_exponent() == (0,0).
  SparsePoly without_monomial_factor() const;
  /// Keeps only the terms on the face of the Newton polygon where g is maximal.
  SparsePoly truncation(const Covector& g) const;

  LatticePolygon newton_polygon() const;
  Int degree_x() const;
  Int degree_y() const;

  /// Horner-free evaluation in any field type T constructible from mpq_class
  /// through the supplied conversion.
  template <class T, class Convert>
  T eval(const T& x, const T& y, Convert convert) const {
    T sum = convert(mpq_class(0));
    for (const auto& [e, c] : terms_) sum += convert(c) * ipow(x, e.x) * ipow(y, e.y);
    return sum;
  }

  mpq_class eval(const mpq_class& x, const mpq_class& y) const;

  std::string str() const;

 private:
  template <class T>
  static T ipow(const T& b, Int e) {
    T base = e < 0 ? T(1) / b : b;
    T r(1);
    for (Int n = e < 0 ? -e : e; n > 0; n >>= 1) {
      if (n & 1) r *= base;
      base *= base;
    }
    return r;
  }

  Terms terms_;
};

/// x^2 y^2 times the bordered Hessian det[[fxx,fxy,fx],[fxy,fyy,fy],[fx,fy,0]].
SparsePoly hessian_curve(const SparsePoly& f);

}  // namespace plucker
