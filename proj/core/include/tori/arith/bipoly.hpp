#ifndef TORI_ARITH_BIPOLY_HPP
#define TORI_ARITH_BIPOLY_HPP

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tori/arith/upoly.hpp"

namespace tori {

// Dense bivariate polynomial over a ring policy R: rows[j] is the
// coefficient of y^j, itself a polynomial in x.
template <class R>
struct Poly2 {
  using Elem = typename R::Elem;
  using XPoly = upoly::Vec<R>;

  R ring{};
  std::vector<XPoly> rows;

  Poly2() = default;
  explicit Poly2(R r) : ring(std::move(r)) {}
  Poly2(R r, std::vector<XPoly> rs) : ring(std::move(r)), rows(std::move(rs)) { normalize(); }

  // Sum of c * x^ex * y^ey.
  static Poly2 from_terms(R r, const std::vector<std::tuple<long, long, Elem>>& terms) {
    Poly2 out(std::move(r));
    for (const auto& [ex, ey, c] : terms) {
      if (ex < 0 || ey < 0) throw Error(Errc::InvalidInput, "negative exponent in polynomial term");
      out.add_term(ex, ey, c);
    }
    return out;
  }
  static Poly2 constant(R r, const Elem& c) { return from_terms(r, {{0, 0, c}}); }
  static Poly2 x(R r) { return from_terms(r, {{1, 0, r.one()}}); }
  static Poly2 y(R r) { return from_terms(r, {{0, 1, r.one()}}); }
  // A polynomial in x alone.
  static Poly2 from_x(R r, XPoly a) {
    Poly2 out(std::move(r));
    out.rows.push_back(std::move(a));
    out.normalize();
    return out;
  }
  // A polynomial in y alone.
  static Poly2 from_y(R r, const XPoly& a) {
    Poly2 out(r);
    for (std::size_t j = 0; j < a.size(); ++j) out.rows.push_back(upoly::constant(r, a[j]));
    out.normalize();
    return out;
  }

  void add_term(long ex, long ey, const Elem& c) {
    if (ring.is_zero(c)) return;
    if (static_cast<long>(rows.size()) <= ey) rows.resize(ey + 1);
    auto& row = rows[ey];
    if (static_cast<long>(row.size()) <= ex) row.resize(ex + 1, ring.zero());
    row[ex] = ring.add(row[ex], c);
    normalize();
  }

  void normalize() {
    for (auto& r : rows) upoly::trim(ring, r);
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
  }

  bool is_zero() const { return rows.empty(); }
  long deg_y() const { return static_cast<long>(rows.size()) - 1; }
  long deg_x() const {
    long d = -1;
    for (const auto& r : rows) d = std::max(d, upoly::degree(r));
    return d;
  }
  long total_degree() const {
    long d = -1;
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (!rows[j].empty()) d = std::max(d, upoly::degree(rows[j]) + static_cast<long>(j));
    return d;
  }
  Elem coeff(long ex, long ey) const {
    if (ey < 0 || ey >= static_cast<long>(rows.size())) return ring.zero();
    const auto& r = rows[ey];
    if (ex < 0 || ex >= static_cast<long>(r.size())) return ring.zero();
    return r[ex];
  }
  const XPoly& row(long ey) const {
    static const XPoly empty;
    if (ey < 0 || ey >= static_cast<long>(rows.size())) return empty;
    return rows[ey];
  }
  // Every (ex, ey, c) with c nonzero, ordered by (ey, ex).
  std::vector<std::tuple<long, long, Elem>> terms() const {
    std::vector<std::tuple<long, long, Elem>> out;
    for (std::size_t j = 0; j < rows.size(); ++j)
      for (std::size_t i = 0; i < rows[j].size(); ++i)
        if (!ring.is_zero(rows[j][i])) out.emplace_back(static_cast<long>(i), static_cast<long>(j), rows[j][i]);
    return out;
  }
  bool is_constant() const { return rows.size() <= 1 && (rows.empty() || rows[0].size() <= 1); }
  bool y_free() const { return rows.size() <= 1; }
};

namespace bipoly {

template <class R>
bool equal(const Poly2<R>& a, const Poly2<R>& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t j = 0; j < a.rows.size(); ++j)
    if (!upoly::equal(a.ring, a.rows[j], b.rows[j])) return false;
  return true;
}

template <class R>
Poly2<R> add(const Poly2<R>& a, const Poly2<R>& b) {
  Poly2<R> out(a.ring);
  out.rows.resize(std::max(a.rows.size(), b.rows.size()));
  for (std::size_t j = 0; j < out.rows.size(); ++j) out.rows[j] = upoly::add(a.ring, a.row(j), b.row(j));
  out.normalize();
  return out;
}

template <class R>
Poly2<R> sub(const Poly2<R>& a, const Poly2<R>& b) {
  Poly2<R> out(a.ring);
  out.rows.resize(std::max(a.rows.size(), b.rows.size()));
  for (std::size_t j = 0; j < out.rows.size(); ++j) out.rows[j] = upoly::sub(a.ring, a.row(j), b.row(j));
  out.normalize();
  return out;
}

template <class R>
Poly2<R> neg(const Poly2<R>& a) {
  Poly2<R> out(a.ring);
  for (const auto& r : a.rows) out.rows.push_back(upoly::neg(a.ring, r));
  return out;
}

template <class R>
Poly2<R> scale(const Poly2<R>& a, const typename R::Elem& c) {
  Poly2<R> out(a.ring);
  for (const auto& r : a.rows) out.rows.push_back(upoly::scale(a.ring, r, c));
  out.normalize();
  return out;
}

// Multiplies by a polynomial in x.
template <class R>
Poly2<R> scale_x(const Poly2<R>& a, const upoly::Vec<R>& c) {
  Poly2<R> out(a.ring);
  for (const auto& r : a.rows) out.rows.push_back(upoly::mul(a.ring, r, c));
  out.normalize();
  return out;
}

template <class R>
Poly2<R> mul(const Poly2<R>& a, const Poly2<R>& b) {
  Poly2<R> out(a.ring);
  if (a.is_zero() || b.is_zero()) return out;
  out.rows.resize(a.rows.size() + b.rows.size() - 1);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].empty()) continue;
    for (std::size_t j = 0; j < b.rows.size(); ++j)
      out.rows[i + j] = upoly::add(a.ring, out.rows[i + j], upoly::mul(a.ring, a.rows[i], b.rows[j]));
  }
  out.normalize();
  return out;
}

template <class R>
Poly2<R> pow(const Poly2<R>& a, unsigned long e) {
  Poly2<R> out = Poly2<R>::constant(a.ring, a.ring.one());
  Poly2<R> base = a;
  while (e) {
    if (e & 1) out = mul(out, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return out;
}

template <class R>
Poly2<R> dx(const Poly2<R>& a) {
  Poly2<R> out(a.ring);
  for (const auto& r : a.rows) out.rows.push_back(upoly::derivative(a.ring, r));
  out.normalize();
  return out;
}

template <class R>
Poly2<R> dy(const Poly2<R>& a) {
  Poly2<R> out(a.ring);
  for (std::size_t j = 1; j < a.rows.size(); ++j)
    out.rows.push_back(upoly::scale(a.ring, a.rows[j], a.ring.from_int(Int(static_cast<unsigned long>(j)))));
  out.normalize();
  return out;
}

// a(y, x).
template <class R>
Poly2<R> swap_xy(const Poly2<R>& a) {
  Poly2<R> out(a.ring);
  for (const auto& [ex, ey, c] : a.terms()) out.add_term(ey, ex, c);
  return out;
}

// a(x^e, y^e).
template <class R>
Poly2<R> inflate(const Poly2<R>& a, long e) {
  Poly2<R> out(a.ring);
  for (const auto& [ex, ey, c] : a.terms()) out.add_term(ex * e, ey * e, c);
  return out;
}

template <class S, class R, class F>
Poly2<S> map_coeffs(const Poly2<R>& a, const S& target, F&& f) {
  Poly2<S> out(target);
  for (const auto& [ex, ey, c] : a.terms()) out.add_term(ex, ey, f(c));
  return out;
}

template <class R>
typename R::Elem eval(const Poly2<R>& a, const typename R::Elem& x0, const typename R::Elem& y0) {
  const auto& r = a.ring;
  auto acc = r.zero();
  for (std::size_t j = a.rows.size(); j-- > 0;) acc = r.add(r.mul(acc, y0), upoly::eval(r, a.rows[j], x0));
  return acc;
}

// a(x, y0) as a polynomial in x.
template <class R>
upoly::Vec<R> eval_y(const Poly2<R>& a, const typename R::Elem& y0) {
  const auto& r = a.ring;
  upoly::Vec<R> acc;
  for (std::size_t j = a.rows.size(); j-- > 0;) acc = upoly::add(r, upoly::scale(r, acc, y0), a.rows[j]);
  return acc;
}

// a(x0, y) as a polynomial in y.
template <class R>
upoly::Vec<R> eval_x(const Poly2<R>& a, const typename R::Elem& x0) {
  const auto& r = a.ring;
  upoly::Vec<R> out(a.rows.size(), r.zero());
  for (std::size_t j = 0; j < a.rows.size(); ++j) out[j] = upoly::eval(r, a.rows[j], x0);
  upoly::trim(r, out);
  return out;
}

// Pseudo-remainder of g by h as polynomials in y over R[x]:
// lc_y(h)^e * g = q * h + rem with deg_y(rem) < deg_y(h), e = max(deg_y g - deg_y h + 1, 0).
template <class R>
Poly2<R> prem_y(const Poly2<R>& g, const Poly2<R>& h, long* exponent_out = nullptr) {
  if (h.is_zero()) throw Error(Errc::DivisionByZero, "pseudo-division by the zero polynomial");
  const auto& r = g.ring;
  const long dh = h.deg_y();
  Poly2<R> rem = g;
  long e = std::max<long>(g.deg_y() - dh + 1, 0);
  long used = 0;
  const auto& lc = h.rows.back();
  while (!rem.is_zero() && rem.deg_y() >= dh) {
    const long k = rem.deg_y() - dh;
    auto top = rem.rows.back();
    // rem <- lc * rem - top * y^k * h
    Poly2<R> next = scale_x(rem, lc);
    Poly2<R> sh(r);
    sh.rows.assign(k, {});
    for (const auto& row : h.rows) sh.rows.push_back(upoly::mul(r, row, top));
    sh.normalize();
    rem = sub(next, sh);
    ++used;
  }
  for (; used < e; ++used) rem = scale_x(rem, lc);
  if (exponent_out) *exponent_out = e;
  return rem;
}

template <class R>
std::string to_string(const Poly2<R>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  auto ts = a.terms();
  std::sort(ts.begin(), ts.end(), [](const auto& s, const auto& t) {
    long ds = std::get<0>(s) + std::get<1>(s), dt = std::get<0>(t) + std::get<1>(t);
    if (ds != dt) return ds > dt;
    return std::get<0>(s) > std::get<0>(t);
  });
  for (const auto& [ex, ey, c] : ts) {
    if (!out.empty()) out += " + ";
    std::string mono;
    if (ex > 0) mono += "x" + (ex > 1 ? "^" + std::to_string(ex) : std::string());
    if (ey > 0) mono += (mono.empty() ? "" : "*") + std::string("y") + (ey > 1 ? "^" + std::to_string(ey) : std::string());
    if (mono.empty()) out += a.ring.str(c);
    else if (a.ring.equal(c, a.ring.one())) out += mono;
    else out += "(" + a.ring.str(c) + ")*" + mono;
  }
  return out;
}

}  // namespace bipoly

// Resultant with respect to y of two polynomials over R[x], computed as the
// determinant of the Sylvester matrix by fraction-free (Bareiss) elimination.
// R must support exact division of polynomials in x (a field, or Z).
template <class R>
upoly::Vec<R> resultant_y(const Poly2<R>& a, const Poly2<R>& b) {
  const auto& r = a.ring;
  using XP = upoly::Vec<R>;
  if (a.is_zero() || b.is_zero()) return {};
  const long m = a.deg_y(), n = b.deg_y();
  if (m == 0 && n == 0) return upoly::constant(r, r.one());
  if (m == 0) return upoly::pow(r, a.rows[0], static_cast<unsigned long>(n));
  if (n == 0) return upoly::pow(r, b.rows[0], static_cast<unsigned long>(m));
  const long size = m + n;
  std::vector<std::vector<XP>> M(size, std::vector<XP>(size));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= m; ++j) M[i][i + j] = a.rows[m - j];
  for (long i = 0; i < m; ++i)
    for (long j = 0; j <= n; ++j) M[n + i][i + j] = b.rows[n - j];
  XP prev = upoly::constant(r, r.one());
  bool negate = false;
  for (long k = 0; k < size - 1; ++k) {
    if (M[k][k].empty()) {
      long piv = -1;
      for (long i = k + 1; i < size; ++i)
        if (!M[i][k].empty()) {
          piv = i;
          break;
        }
      if (piv < 0) return {};
      std::swap(M[k], M[piv]);
      negate = !negate;
    }
    for (long i = k + 1; i < size; ++i) {
      for (long j = k + 1; j < size; ++j) {
        XP t = upoly::sub(r, upoly::mul(r, M[k][k], M[i][j]), upoly::mul(r, M[i][k], M[k][j]));
        M[i][j] = upoly::divexact(r, t, prev);
      }
      M[i][k].clear();
    }
    prev = M[k][k];
  }
  XP det = M[size - 1][size - 1];
  return negate ? upoly::neg(r, det) : det;
}

}  // namespace tori

#endif  // TORI_ARITH_BIPOLY_HPP
