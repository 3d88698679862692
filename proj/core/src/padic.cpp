#include "tori/padic.hpp"

#include <algorithm>

#include "tori/arith/ff_factor.hpp"

namespace tori {

namespace {

std::vector<std::uint64_t> to_digits(const std::vector<Int>& poly, const Int& p) {
  std::vector<std::uint64_t> d;
  d.reserve(poly.size());
  for (const auto& c : poly) d.push_back(to_u64(mod(c, p)));
  return d;
}

}  // namespace

PadicContext make_context(const Int& p, long N, unsigned f_deg, std::optional<std::vector<Int>> modulus) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, to_string(p) + " is not prime");
  if (N < 1) throw Error(Errc::InvalidInput, "precision must be at least 1");
  if (f_deg < 1) throw Error(Errc::InvalidInput, "residue degree must be at least 1");
  if (mpz_sizeinbase(p.get_mpz_t(), 2) > 62) throw Error(Errc::InvalidInput, "prime too large for residue field encoding");
  auto impl = std::make_shared<PadicContext::Impl>();
  impl->p = p;
  impl->N = N;
  impl->f = f_deg;
  const std::uint64_t pu = to_u64(p);
  if (modulus) {
    auto& m = *modulus;
    while (!m.empty() && m.back() == 0) m.pop_back();
    if (m.size() != f_deg + 1 || m.back() != 1)
      throw Error(Errc::InvalidInput, "modulus must be monic of degree " + std::to_string(f_deg));
    if (f_deg > 1) {
      GaloisField Fp(pu, {0, 1});
      auto d = to_digits(m, p);
      upoly::Vec<GaloisField> red(d.begin(), d.end());
      if (!ff::is_irreducible(Fp, red)) throw Error(Errc::ReducibleModulus, "modulus is reducible mod " + to_string(p));
    }
    impl->modulus = m;
  } else {
    for (auto c : default_irreducible(pu, f_deg)) impl->modulus.emplace_back(static_cast<unsigned long>(c));
  }
  impl->field = GaloisField(pu, to_digits(impl->modulus, p));
  const long cached = 2 * N + 64;
  impl->powers.resize(cached + 1);
  impl->powers[0] = 1;
  for (long i = 1; i <= cached; ++i) impl->powers[i] = impl->powers[i - 1] * p;

  PadicContext ctx;
  ctx.impl_ = impl;
  impl->root_precision = std::max<long>(N, 2) + 16;
  if (f_deg == 1) {
    impl->frobenius_root = {};
  } else {
    const long K = impl->root_precision;
    const auto& F = impl->field;
    Residue r = ctx.from_field(F.pow(F.from_digits({0, 1}), pu));
    std::vector<Int> dmu(f_deg);
    for (unsigned i = 1; i <= f_deg; ++i) dmu[i - 1] = impl->modulus[i] * i;
    auto eval = [&](const std::vector<Int>& poly, const Residue& x) {
      Residue acc = ctx.zero();
      for (std::size_t i = poly.size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x, K), ctx.from_int(poly[i], K), K);
      return acc;
    };
    for (long prec = 1; prec < 2 * K; prec *= 2) r = ctx.sub(r, ctx.mul(eval(impl->modulus, r), ctx.inv(eval(dmu, r), K), K), K);
    impl->frobenius_root = r;
  }
  return ctx;
}

Int PadicContext::pk(long k) const {
  if (k < 0) throw Error(Errc::InvalidInput, "negative precision");
  if (k < static_cast<long>(impl_->powers.size())) return impl_->powers[k];
  return ipow(impl_->p, static_cast<unsigned long>(k));
}

bool PadicContext::operator==(const PadicContext& o) const {
  if (impl_ == o.impl_) return true;
  if (!impl_ || !o.impl_) return false;
  return impl_->p == o.impl_->p && impl_->N == o.impl_->N && impl_->modulus == o.impl_->modulus;
}

Residue PadicContext::one() const {
  Residue r = zero();
  r[0] = 1;
  return r;
}

Residue PadicContext::from_int(const Int& a, long k) const {
  Residue r = zero();
  r[0] = mod(a, pk(k));
  return r;
}

Residue PadicContext::reduce(const Residue& a, long k) const {
  const Int m = pk(k);
  Residue r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i], m);
  return r;
}

Residue PadicContext::add(const Residue& a, const Residue& b, long k) const {
  const Int m = pk(k);
  Residue r(impl_->f);
  for (unsigned i = 0; i < impl_->f; ++i) r[i] = mod(a[i] + b[i], m);
  return r;
}

Residue PadicContext::sub(const Residue& a, const Residue& b, long k) const {
  const Int m = pk(k);
  Residue r(impl_->f);
  for (unsigned i = 0; i < impl_->f; ++i) r[i] = mod(a[i] - b[i], m);
  return r;
}

Residue PadicContext::neg(const Residue& a, long k) const {
  const Int m = pk(k);
  Residue r(impl_->f);
  for (unsigned i = 0; i < impl_->f; ++i) r[i] = mod(-a[i], m);
  return r;
}

Residue PadicContext::scale(const Residue& a, const Int& c, long k) const {
  const Int m = pk(k);
  Residue r(impl_->f);
  for (unsigned i = 0; i < impl_->f; ++i) r[i] = mod(a[i] * c, m);
  return r;
}

Residue PadicContext::reduce_degree(std::vector<Int> prod, long k) const {
  const unsigned f = impl_->f;
  const auto& mu = impl_->modulus;
  for (std::size_t i = prod.size(); i-- > f;) {
    if (prod[i] == 0) continue;
    Int c = prod[i];
    for (unsigned j = 0; j <= f; ++j) prod[i - f + j] -= c * mu[j];
  }
  prod.resize(f);
  return reduce(prod, k);
}

Residue PadicContext::mul(const Residue& a, const Residue& b, long k) const {
  const unsigned f = impl_->f;
  if (f == 1) return Residue{mod(a[0] * b[0], pk(k))};
  std::vector<Int> prod(2 * f - 1, 0);
  for (unsigned i = 0; i < f; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < f; ++j) prod[i + j] += a[i] * b[j];
  }
  return reduce_degree(std::move(prod), k);
}

Residue PadicContext::pow(const Residue& a, const Int& e, long k) const {
  if (e < 0) return pow(inv(a, k), Int(-e), k);
  Residue r = reduce(one(), k);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mul(r, r, k);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a, k);
  }
  return r;
}

Residue PadicContext::inv(const Residue& a, long k) const {
  const auto& F = impl_->field;
  auto abar = to_field(a);
  if (abar == 0) throw Error(Errc::NotAUnit, "residue " + residue_str(a) + " is not a unit");
  if (impl_->f == 1) return Residue{inverse_mod(a[0], pk(k))};
  Residue x = from_field(F.inv(abar));
  Residue two = from_int(2, k);
  for (long prec = 1; prec < k;) {
    prec = std::min(2 * prec, k);
    x = mul(x, sub(two, mul(a, x, prec), prec), prec);
  }
  return reduce(x, k);
}

long PadicContext::valuation(const Residue& a, long k) const {
  long best = k;
  for (const auto& c : a) {
    Int r = mod(c, pk(k));
    if (r == 0) continue;
    best = std::min(best, tori::valuation(r, impl_->p));
  }
  return best;
}

Residue PadicContext::divide_by_p_power(const Residue& a, long j) const {
  const Int m = pk(j);
  Residue r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!mpz_divisible_p(a[i].get_mpz_t(), m.get_mpz_t()))
      throw Error(Errc::InvalidInput, "residue not divisible by p^" + std::to_string(j));
    mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  }
  return r;
}

Residue PadicContext::teichmueller(const Residue& a, long k) const {
  if (to_field(a) == 0) throw Error(Errc::NotAUnit, "Teichmueller lift of a non-unit");
  const Int qq = q();
  Residue x = reduce(a, k);
  for (long i = 1; i < k; ++i) x = pow(x, qq, k);
  return x;
}

Residue PadicContext::frobenius(const Residue& a, long k) const {
  if (impl_->f == 1) return reduce(a, k);
  Residue root = impl_->frobenius_root;
  if (k > impl_->root_precision) {
    // Recompute the lift at the requested precision.
    Residue r = from_field(impl_->field.pow(impl_->field.from_digits({0, 1}), to_u64(impl_->p)));
    const unsigned f = impl_->f;
    std::vector<Int> dmu(f);
    for (unsigned i = 1; i <= f; ++i) dmu[i - 1] = impl_->modulus[i] * i;
    auto eval = [&](const std::vector<Int>& poly, const Residue& x) {
      Residue acc = zero();
      for (std::size_t i = poly.size(); i-- > 0;) acc = add(mul(acc, x, k), from_int(poly[i], k), k);
      return acc;
    };
    for (long prec = 1; prec < 2 * k; prec *= 2) r = sub(r, mul(eval(impl_->modulus, r), inv(eval(dmu, r), k), k), k);
    root = r;
  }
  Residue acc = zero();
  for (std::size_t i = impl_->f; i-- > 0;) acc = add(mul(acc, root, k), from_int(a[i], k), k);
  return acc;
}

Residue PadicContext::log_unit(const Residue& a, long k) const {
  if (to_field(a) == 0) throw Error(Errc::NotAUnit, "logarithm of a non-unit");
  if (k <= 0) return zero();
  const Int& p = impl_->p;
  long M = 1;
  while (M + 1 - floor_log(Int(M + 1), p) < k) ++M;
  const long e = floor_log(Int(M), p);
  const long K = k + e;
  Residue w = mul(reduce(a, K), inv(teichmueller(a, K), K), K);
  Residue t = sub(w, one(), K);
  Residue sum = zero();
  Residue tp = t;
  for (long i = 1; i <= M; ++i) {
    Int ii(i);
    long vi = 0;
    while (mpz_divisible_p(ii.get_mpz_t(), p.get_mpz_t())) {
      ii /= p;
      ++vi;
    }
    Residue term = scale(divide_by_p_power(tp, vi), inverse_mod(ii, pk(k)), k);
    sum = (i % 2 == 1) ? add(sum, term, k) : sub(sum, term, k);
    if (i < M) tp = mul(tp, t, K);
  }
  return sum;
}

GaloisField::Elem PadicContext::to_field(const Residue& a) const {
  return impl_->field.from_digits(to_digits(a, impl_->p));
}

Residue PadicContext::from_field(GaloisField::Elem e) const {
  auto d = impl_->field.digits(e);
  Residue r(impl_->f);
  for (unsigned i = 0; i < impl_->f; ++i) r[i] = Int(static_cast<unsigned long>(d[i]));
  return r;
}

std::string PadicContext::residue_str(const Residue& a) const {
  if (a.size() == 1) return to_string(a[0]);
  std::string out = "[";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + to_string(a[i]);
  return out + "]";
}

// ---------------------------------------------------------------------------

PadicScalar PadicScalar::exact_zero(const PadicContext& ctx) {
  PadicScalar s;
  s.ctx_ = ctx;
  s.unit_ = ctx.zero();
  return s;
}

PadicScalar PadicScalar::inexact_zero(const PadicContext& ctx, long abs_precision) {
  PadicScalar s = exact_zero(ctx);
  s.v_ = abs_precision;
  return s;
}

PadicScalar PadicScalar::one(const PadicContext& ctx) { return from_rational(ctx, Rat(1)); }

PadicScalar PadicScalar::from_rational(const PadicContext& ctx, const Rat& a) {
  if (a.get_den() == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  if (a == 0) return exact_zero(ctx);
  const Int& p = ctx.p();
  Int num = a.get_num(), den = a.get_den();
  long vn = tori::valuation(num, p), vd = tori::valuation(den, p);
  num /= ctx.pk(vn);
  den /= ctx.pk(vd);
  PadicScalar s;
  s.ctx_ = ctx;
  s.v_ = vn - vd;
  s.rel_ = ctx.precision();
  const Int m = ctx.pk(s.rel_);
  s.unit_ = ctx.from_int(mod(num * inverse_mod(den, m), m), s.rel_);
  return s;
}

PadicScalar PadicScalar::from_residue(const PadicContext& ctx, const Residue& a, long abs_precision) {
  long s = ctx.valuation(a, abs_precision);
  if (s >= abs_precision) return inexact_zero(ctx, abs_precision);
  PadicScalar out;
  out.ctx_ = ctx;
  out.v_ = s;
  out.rel_ = abs_precision - s;
  out.unit_ = ctx.reduce(ctx.divide_by_p_power(ctx.reduce(a, abs_precision), s), out.rel_);
  return out;
}

PadicScalar PadicScalar::from_field(const PadicContext& ctx, GaloisField::Elem e) {
  return from_residue(ctx, ctx.from_field(e), ctx.precision());
}

PadicScalar PadicScalar::operator-() const {
  PadicScalar s = *this;
  if (!is_zero()) s.unit_ = ctx_.neg(unit_, rel_);
  return s;
}

namespace {

void check_same(const PadicScalar& a, const PadicScalar& b) {
  if (a.context() != b.context()) throw Error(Errc::DomainMismatch, "scalars from different p-adic contexts");
}

}  // namespace

PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) {
  check_same(a, b);
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const auto& ctx = a.ctx_;
  const long A = std::min(a.absolute_precision(), b.absolute_precision());
  const long m = std::min(a.valuation(), b.valuation());
  if (m >= A) return PadicScalar::inexact_zero(ctx, A);
  const long k = A - m;
  Residue sum = ctx.zero();
  for (const PadicScalar* x : {&a, &b}) {
    if (x->is_zero()) continue;
    sum = ctx.add(sum, ctx.scale(x->unit_, ctx.pk(x->v_ - m), k), k);
  }
  long s = ctx.valuation(sum, k);
  if (s >= k) return PadicScalar::inexact_zero(ctx, A);
  PadicScalar out;
  out.ctx_ = ctx;
  out.v_ = m + s;
  out.rel_ = k - s;
  out.unit_ = ctx.reduce(ctx.divide_by_p_power(sum, s), out.rel_);
  return out;
}

PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) { return a + (-b); }

PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
  check_same(a, b);
  const auto& ctx = a.ctx_;
  if (a.is_exact_zero() || b.is_exact_zero()) return PadicScalar::exact_zero(ctx);
  if (a.is_zero() || b.is_zero()) {
    // Known to vanish modulo p^(sum of the lower bounds on the valuations).
    return PadicScalar::inexact_zero(ctx, a.v_ + b.v_);
  }
  PadicScalar out;
  out.ctx_ = ctx;
  out.v_ = a.v_ + b.v_;
  out.rel_ = std::min(a.rel_, b.rel_);
  out.unit_ = ctx.mul(a.unit_, b.unit_, out.rel_);
  return out;
}

PadicScalar PadicScalar::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of a p-adic zero");
  PadicScalar out = *this;
  out.v_ = -v_;
  out.unit_ = ctx_.inv(unit_, rel_);
  return out;
}

PadicScalar operator/(const PadicScalar& a, const PadicScalar& b) { return a * b.inverse(); }

PadicScalar PadicScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  PadicScalar r = one(ctx_);
  PadicScalar base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

GaloisField::Elem PadicScalar::reduction() const {
  if (is_zero()) {
    if (is_exact_zero() || v_ >= 1) return 0;
    throw Error(Errc::PrecisionExhausted, "residue of a zero with no known digits");
  }
  if (v_ < 0) throw Error(Errc::NonUnitValue, "reduction of a scalar with negative valuation");
  if (v_ > 0) return 0;
  return ctx_.to_field(unit_);
}

Residue PadicScalar::to_residue(long k) const {
  if (is_exact_zero()) return ctx_.zero();
  if (k > absolute_precision()) throw Error(Errc::PrecisionExhausted, "requested digits beyond the known precision");
  if (is_zero()) return ctx_.zero();
  if (v_ < 0) throw Error(Errc::NonUnitValue, "scalar has negative valuation");
  if (v_ >= k) return ctx_.zero();
  return ctx_.reduce(ctx_.scale(unit_, ctx_.pk(v_), k), k);
}

Int PadicScalar::to_integer() const {
  if (is_zero()) return 0;
  if (v_ < 0) throw Error(Errc::NonUnitValue, "scalar has negative valuation");
  return unit_[0] * ctx_.pk(v_);
}

std::string PadicScalar::str() const {
  const std::string p = to_string(ctx_.p());
  if (is_exact_zero()) return "0";
  if (is_zero()) return "O(" + p + "^" + std::to_string(v_) + ")";
  std::string out = ctx_.residue_str(unit_);
  if (v_ != 0) out += "*" + p + "^" + std::to_string(v_);
  return out + " + O(" + p + "^" + std::to_string(absolute_precision()) + ")";
}

PadicScalar teichmueller(const PadicScalar& u) {
  if (!u.is_unit()) throw Error(Errc::NotAUnit, "Teichmueller lift needs a unit");
  const auto& ctx = u.context();
  return PadicScalar::from_residue(ctx, ctx.teichmueller(u.unit(), ctx.precision()), ctx.precision());
}

PadicScalar frobenius(const PadicScalar& x) {
  if (x.is_zero()) return x;
  const auto& ctx = x.context();
  PadicScalar unit = PadicScalar::from_residue(ctx, ctx.frobenius(x.unit(), x.relative_precision()), x.relative_precision());
  if (x.valuation() == 0) return unit;
  return unit * PadicScalar::from_int(ctx, ctx.p()).pow(x.valuation());
}

PadicScalar log_unit(const PadicScalar& u) {
  if (!u.is_unit()) throw Error(Errc::NotAUnit, "logarithm needs a unit argument");
  const auto& ctx = u.context();
  const long k = u.relative_precision();
  return PadicScalar::from_residue(ctx, ctx.log_unit(u.unit(), k), k);
}

}  // namespace tori
