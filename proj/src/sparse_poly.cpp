#include "plucker/sparse_poly.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace plucker {

SparsePoly::SparsePoly(const Terms& terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

SparsePoly SparsePoly::monomial(const mpq_class& c, LatticePoint e) {
  SparsePoly p;
  p.add_term(e, c);
  return p;
}

void SparsePoly::add_term(LatticePoint e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpq_class SparsePoly::coefficient(LatticePoint e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  SparsePoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

SparsePoly SparsePoly::operator*(const mpq_class& c) const {
  SparsePoly r;
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

SparsePoly SparsePoly::dx() const {
  SparsePoly r;
  for (const auto& [e, c] : terms_) r.add_term({e.x - 1, e.y}, c * e.x);
  return r;
}

SparsePoly SparsePoly::dy() const {
  SparsePoly r;
  for (const auto& [e, c] : terms_) r.add_term({e.x, e.y - 1}, c * e.y);
  return r;
}

SparsePoly SparsePoly::shifted(LatticePoint s) const {
  SparsePoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + s, c);
  return r;
}

LatticePoint SparsePoly::min_exponent() const {
  if (is_zero()) throw std::invalid_argument("min_exponent of the zero polynomial");
  LatticePoint lo = terms_.begin()->first;
  for (const auto& [e, c] : terms_) lo = {std::min(lo.x, e.x), std::min(lo.y, e.y)};
  return lo;
}

SparsePoly SparsePoly::without_monomial_factor() const {
  return is_zero() ? *this : shifted(-min_exponent());
}

SparsePoly SparsePoly::truncation(const Covector& g) const {
  if (is_zero()) return *this;
  Int best = g(terms_.begin()->first);
  for (const auto& [e, c] : terms_) best = std::max(best, g(e));
  SparsePoly r;
  for (const auto& [e, c] : terms_)
    if (g(e) == best) r.terms_.emplace(e, c);
  return r;
}

LatticePolygon SparsePoly::newton_polygon() const {
  if (is_zero()) throw std::invalid_argument("Newton polygon of the zero polynomial");
  std::vector<LatticePoint> pts;
  for (const auto& [e, c] : terms_) pts.push_back(e);
  return LatticePolygon::hull(pts);
}

Int SparsePoly::degree_x() const {
  Int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.x);
  return d;
}

Int SparsePoly::degree_y() const {
  Int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.y);
  return d;
}

mpq_class SparsePoly::eval(const mpq_class& x, const mpq_class& y) const {
  return eval<mpq_class>(x, y, [](const mpq_class& c) { return c; });
}

std::string SparsePoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    std::vector<std::string> factors;
    const mpq_class a = abs(c);
    if (a != 1 || (e.x == 0 && e.y == 0)) factors.push_back(a.get_str());
    for (auto [v, k] : {std::pair{'x', e.x}, std::pair{'y', e.y}}) {
      if (k == 0) continue;
      factors.push_back(std::string(1, v) + (k == 1 ? "" : "^" + std::to_string(k)));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

SparsePoly hessian_curve(const SparsePoly& f) {
  const SparsePoly fx = f.dx(), fy = f.dy();
  const SparsePoly fxx = fx.dx(), fxy = fx.dy(), fyy = fy.dy();
  const SparsePoly det =
      (fxy * fx * fy) * mpq_class(2) - fxx * fy * fy - fyy * fx * fx;
  return det.shifted({2, 2});
}

}  // namespace plucker
