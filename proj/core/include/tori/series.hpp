#ifndef TORI_SERIES_HPP
#define TORI_SERIES_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "tori/arith/ring.hpp"
#include "tori/error.hpp"
#include "tori/padic.hpp"

namespace tori {

// Power series sum_{n <= trunc} a_n T^n + O(T^{trunc+1}) over the ring R.
// An exact series is a polynomial: every coefficient beyond trunc is known
// to vanish, so it behaves as if its truncation order were infinite.
template <class R>
class Series {
 public:
  using Ring = R;
  using Elem = typename R::Elem;

  Series() = default;
  Series(R ring, std::vector<Elem> coeffs, long trunc, bool exact = false)
      : ring_(std::move(ring)), c_(std::move(coeffs)), trunc_(trunc), exact_(exact) {
    if (trunc_ < 0) throw Error(Errc::InvalidInput, "negative truncation order");
    if (exact_) {
      while (!c_.empty() && ring_.is_zero(c_.back()) && static_cast<long>(c_.size()) > 1) c_.pop_back();
      trunc_ = std::max<long>(static_cast<long>(c_.size()) - 1, 0);
      if (c_.empty()) c_.push_back(ring_.zero());
    } else {
      c_.resize(trunc_ + 1, ring_.zero());
    }
  }

  static Series polynomial(R ring, std::vector<Elem> coeffs) {
    if (coeffs.empty()) coeffs.push_back(ring.zero());
    long t = static_cast<long>(coeffs.size()) - 1;
    return Series(std::move(ring), std::move(coeffs), t, true);
  }
  static Series constant(R ring, Elem c, long trunc) {
    std::vector<Elem> v{std::move(c)};
    return Series(std::move(ring), std::move(v), trunc);
  }
  // a + T, exact.
  static Series linear(R ring, Elem a) {
    Elem one = ring.one();
    return polynomial(std::move(ring), {std::move(a), std::move(one)});
  }

  const R& ring() const { return ring_; }
  long trunc() const { return trunc_; }
  bool exact() const { return exact_; }
  long size() const { return static_cast<long>(c_.size()); }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(long n) const {
    if (n < 0 || n >= size()) return ring_.zero();
    return c_[n];
  }
  Elem constant_term() const { return c_[0]; }

  // Truncates (and drops exactness) at order t.
  Series truncate(long t) const {
    if (!exact_ && t >= trunc_) return *this;
    std::vector<Elem> v(c_.begin(), c_.begin() + std::min<long>(size(), t + 1));
    return Series(ring_, std::move(v), t);
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [&](const Elem& e) { return ring_.is_zero(e); });
  }

 private:
  R ring_{};
  std::vector<Elem> c_;
  long trunc_ = 0;
  bool exact_ = false;
};

namespace series_detail {

template <class R>
void check_domain(const Series<R>& a, const Series<R>& b) {
  if (!(a.ring() == b.ring())) throw Error(Errc::DomainMismatch, "series over different coefficient rings");
}

template <class R>
long joint_trunc(const Series<R>& a, const Series<R>& b) {
  if (a.exact()) return b.trunc();
  if (b.exact()) return a.trunc();
  return std::min(a.trunc(), b.trunc());
}

}  // namespace series_detail

template <class R>
Series<R> add(const Series<R>& a, const Series<R>& b) {
  series_detail::check_domain(a, b);
  const auto& r = a.ring();
  const bool exact = a.exact() && b.exact();
  long t = exact ? std::max(a.trunc(), b.trunc()) : series_detail::joint_trunc(a, b);
  std::vector<typename R::Elem> v(t + 1, r.zero());
  for (long i = 0; i <= t; ++i) v[i] = r.add(a.coeff(i), b.coeff(i));
  return Series<R>(r, std::move(v), t, exact);
}

template <class R>
Series<R> neg(const Series<R>& a) {
  std::vector<typename R::Elem> v(a.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.ring().neg(a.coeffs()[i]);
  return Series<R>(a.ring(), std::move(v), a.trunc(), a.exact());
}

template <class R>
Series<R> sub(const Series<R>& a, const Series<R>& b) {
  return add(a, neg(b));
}

template <class R>
Series<R> scale(const Series<R>& a, const typename R::Elem& c) {
  std::vector<typename R::Elem> v(a.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.ring().mul(a.coeffs()[i], c);
  return Series<R>(a.ring(), std::move(v), a.trunc(), a.exact());
}

template <class R>
Series<R> mul(const Series<R>& a, const Series<R>& b) {
  series_detail::check_domain(a, b);
  const auto& r = a.ring();
  const bool exact = a.exact() && b.exact();
  long t = exact ? a.trunc() + b.trunc() : series_detail::joint_trunc(a, b);
  std::vector<typename R::Elem> v(t + 1, r.zero());
  for (long i = 0; i < a.size() && i <= t; ++i) {
    if (r.is_zero(a.coeffs()[i])) continue;
    for (long j = 0; j < b.size() && i + j <= t; ++j) v[i + j] = r.add(v[i + j], r.mul(a.coeffs()[i], b.coeffs()[j]));
  }
  return Series<R>(r, std::move(v), t, exact);
}

template <class R>
Series<R> pow(const Series<R>& a, unsigned long e) {
  Series<R> out = Series<R>::polynomial(a.ring(), {a.ring().one()});
  Series<R> base = a;
  while (e) {
    if (e & 1) out = mul(out, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return out;
}

// a(b(T)); b must have zero constant term.
template <class R>
Series<R> compose(const Series<R>& a, const Series<R>& b) {
  series_detail::check_domain(a, b);
  const auto& r = a.ring();
  if (!r.is_zero(b.constant_term()))
    throw Error(Errc::ComposeNonzeroConstant, "inner series of a composition must vanish at 0");
  const bool exact = a.exact() && b.exact();
  long t = exact ? a.trunc() * std::max<long>(b.trunc(), 1) : series_detail::joint_trunc(a, b);
  Series<R> bt = exact ? b : b.truncate(t);
  Series<R> acc = Series<R>::polynomial(r, {r.zero()});
  if (!exact) acc = acc.truncate(t);
  for (long i = std::min(a.size() - 1, exact ? a.size() - 1 : t); i >= 0; --i) {
    acc = mul(acc, bt);
    acc = add(acc, Series<R>::polynomial(r, {a.coeffs()[i]}));
  }
  if (!exact) return acc.truncate(t);
  return acc;
}

template <class R>
Series<R> derivative(const Series<R>& a) {
  const auto& r = a.ring();
  if (a.trunc() == 0) {
    return a.exact() ? Series<R>::polynomial(r, {r.zero()}) : Series<R>(r, {r.zero()}, 0);
  }
  std::vector<typename R::Elem> v(a.trunc(), r.zero());
  for (long i = 1; i <= a.trunc(); ++i) v[i - 1] = r.mul(a.coeff(i), r.from_int(Int(i)));
  return Series<R>(r, std::move(v), a.trunc() - 1, a.exact());
}

// Antiderivative with zero constant term. Needs division by integers.
template <class R>
Series<R> integrate(const Series<R>& a) {
  const auto& r = a.ring();
  std::vector<typename R::Elem> v(a.trunc() + 2, r.zero());
  for (long i = 0; i <= a.trunc(); ++i) v[i + 1] = r.div_int(a.coeff(i), i + 1);
  return Series<R>(r, std::move(v), a.trunc() + 1, a.exact());
}

// 1/a; the constant term must be invertible.
template <class R>
Series<R> inverse(const Series<R>& a, std::optional<long> order = std::nullopt) {
  const auto& r = a.ring();
  if (r.is_zero(a.constant_term())) throw Error(Errc::ConstantTermNotUnit, "series inverse needs a nonzero constant term");
  long t = a.exact() ? order.value_or(a.trunc()) : std::min(a.trunc(), order.value_or(a.trunc()));
  auto c0inv = r.inv(a.constant_term());
  std::vector<typename R::Elem> v(t + 1, r.zero());
  v[0] = c0inv;
  for (long n = 1; n <= t; ++n) {
    auto s = r.zero();
    for (long k = 1; k <= n && k < a.size(); ++k) s = r.add(s, r.mul(a.coeffs()[k], v[n - k]));
    v[n] = r.neg(r.mul(s, c0inv));
  }
  return Series<R>(r, std::move(v), t);
}

template <class R>
Series<R> divide(const Series<R>& a, const Series<R>& b, std::optional<long> order = std::nullopt) {
  long t = series_detail::joint_trunc(a, b);
  if (a.exact() && b.exact()) t = order.value_or(std::max(a.trunc(), b.trunc()));
  else if (order) t = std::min(t, *order);
  return mul(a.truncate(t), inverse(b, t));
}

// log s = log s(0) + integral of s'/s. Over Q the constant term must be 1;
// over the p-adics any unit constant term is allowed. `order` sets the
// truncation when s is an exact polynomial.
template <class R>
Series<R> formal_log(const Series<R>& s, std::optional<long> order = std::nullopt) {
  const auto& r = s.ring();
  long t = s.exact() ? order.value_or(s.trunc()) : std::min(s.trunc(), order.value_or(s.trunc()));
  Series<R> st = s.truncate(t);
  typename R::Elem c0 = r.zero();
  if constexpr (std::is_same_v<R, PadicRing>) {
    if (!s.constant_term().is_unit()) throw Error(Errc::ConstantTermNotUnit, "formal log needs a unit constant term");
    c0 = log_unit(s.constant_term());
  } else {
    if (!r.equal(s.constant_term(), r.one())) throw Error(Errc::ConstantTermNotUnit, "formal log needs constant term 1");
  }
  if (t == 0) return Series<R>(r, {c0}, 0);
  Series<R> q = divide(derivative(st), st.truncate(t - 1), t - 1);
  Series<R> out = integrate(q);
  std::vector<typename R::Elem> v = out.coeffs();
  v[0] = c0;
  return Series<R>(r, std::move(v), t);
}

// Coefficient-wise conversion into another ring.
template <class S, class R, class F>
Series<S> map_series(const Series<R>& a, const S& target, F&& f) {
  std::vector<typename S::Elem> v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) v.push_back(f(c));
  return Series<S>(target, std::move(v), a.trunc(), a.exact());
}

template <class R>
bool series_equal(const Series<R>& a, const Series<R>& b) {
  long t = std::min(a.trunc(), b.trunc());
  if (a.exact() && b.exact()) t = std::max(a.trunc(), b.trunc());
  for (long i = 0; i <= t; ++i)
    if (!a.ring().equal(a.coeff(i), b.coeff(i))) return false;
  return true;
}

template <class R>
std::string to_string(const Series<R>& a) {
  std::string out;
  for (long i = 0; i < a.size(); ++i) {
    if (a.ring().is_zero(a.coeffs()[i])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + a.ring().str(a.coeffs()[i]) + ")";
    if (i > 0) out += "*T" + (i > 1 ? "^" + std::to_string(i) : std::string());
  }
  if (out.empty()) out = "0";
  if (!a.exact()) out += " + O(T^" + std::to_string(a.trunc() + 1) + ")";
  return out;
}

}  // namespace tori

#endif  // TORI_SERIES_HPP
