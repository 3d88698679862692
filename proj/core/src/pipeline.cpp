#include "tori/pipeline.hpp"

#include "tori/error.hpp"

namespace tori {

namespace {

const IntegerRing ZZ;

StageError stage_error(const char* stage, const Error& e) { return {stage, e.code(), e.what()}; }

bool is_zero(const ZPoly2& a) { return a.rows.empty(); }

}  // namespace

void validate(const TorusCurveSpec& spec) {
  if (!is_prime(spec.prime)) throw Error(Errc::NotPrime, "spec prime is not prime");
  if (spec.precision < 1) throw Error(Errc::InvalidInput, "precision must be positive");
  if (spec.genus < 0 || spec.boundary_degree < 0) throw Error(Errc::InvalidInput, "genus and boundary degree must be nonnegative");
  if (spec.B < 1 || spec.M < 1) throw Error(Errc::InvalidInput, "search bounds must be positive");
  if (spec.model == ModelKind::Rational) {
    if (spec.maps.size() != 3) throw Error(Errc::InvalidInput, "a rational model needs three functions");
    for (const auto& f : spec.maps)
      if (f.num.empty() || f.den.empty()) throw Error(Errc::ZeroFunction, "zero numerator or denominator");
  } else {
    if (spec.functions.size() != 3) throw Error(Errc::InvalidInput, "a plane model needs three functions");
    if (is_zero(spec.H)) throw Error(Errc::InvalidInput, "plane model has H = 0");
    for (const auto& f : spec.functions)
      if (is_zero(f.num) || is_zero(f.den)) throw Error(Errc::ZeroFunction, "zero numerator or denominator");
  }
}

PlaneCurve model_curve(const TorusCurveSpec& spec) {
  PadicContext ctx = make_context(spec.prime, spec.precision);
  if (spec.model == ModelKind::Plane) return make_curve(spec.H, spec.genus, spec.boundary_degree, ctx);
  ZPoly2 line(ZZ);
  line.add_term(0, 1, Int(1));
  return make_curve(line, spec.genus, spec.boundary_degree, ctx);
}

std::vector<RationalFunction> model_functions(const TorusCurveSpec& spec) {
  if (spec.model == ModelKind::Plane) return spec.functions;
  std::vector<RationalFunction> out;
  for (const auto& f : spec.maps) out.push_back(on_line(f));
  return out;
}

std::vector<PairVerdict> finiteness_pairs(const TorusCurveSpec& spec) {
  std::vector<PairVerdict> out;
  const GaloisField Fp = GaloisField::prime(to_u64(spec.prime));
  const PadicContext ctx2 = make_context(spec.prime, 2);
  const auto fs = model_functions(spec);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      PairVerdict pv;
      pv.i = i;
      pv.j = j;
      try {
        if (spec.model == ModelKind::Rational) {
          // The image of t -> (f_i, f_j) carries the coordinate functions.
          pv.image = implicit_equation(spec.maps[i], spec.maps[j]);
          ZPoly2 x(ZZ), y(ZZ);
          x.add_term(1, 0, Int(1));
          y.add_term(0, 1, Int(1));
          pv.dlog_independent =
              dlog_independent(pv.image, RationalFunction::poly(x), RationalFunction::poly(y), Fp);
        } else {
          pv.image = spec.H;
          pv.dlog_independent = dlog_independent(spec.H, fs[i], fs[j], Fp);
        }
        pv.verdict = finiteness_verdict(witt2_from_integer(pv.image, ctx2));
      } catch (const Error& e) {
        pv.error = stage_error(kStageFiniteness, e);
      }
      out.push_back(std::move(pv));
    }
  return out;
}

BoundTable evaluate_bounds(long genus, long boundary_degree, const Int& p, const std::optional<AnomalousReport>& a,
                           std::vector<StageError>* errors) {
  BoundTable out;
  out.ramification = ramification_bound(genus, boundary_degree, p);
  try {
    out.buium = buium_bound(genus, p);
  } catch (const Error& e) {
    if (errors) errors->push_back(stage_error(kStageBounds, e));
  }
  if (a) {
    out.anomalous = a->bound;
    out.anomalous_divisor = a->divisor_bound;
  }
  return out;
}

Report run_pipeline(const TorusCurveSpec& spec) {
  Report r;
  r.spec = spec;
  validate(spec);
  const GaloisField Fp = GaloisField::prime(to_u64(spec.prime));

  // Independence: exact for rational models, the dlog proxy mod p otherwise.
  try {
    if (spec.model == ModelKind::Rational) check_independent(spec.maps);
    r.independent = true;
  } catch (const Error& e) {
    r.errors.push_back(stage_error(kStageIndependence, e));
    if (e.code() == Errc::DependentFunctions || e.code() == Errc::InvalidInput) {
      r.stopped = true;
      return r;
    }
  }
  const PlaneCurve curve = model_curve(spec);
  const auto fs = model_functions(spec);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      try {
        if (!dlog_independent(curve.h, fs[i], fs[j], Fp)) r.dlog_dependent_pairs.emplace_back(i, j);
      } catch (const Error& e) {
        r.errors.push_back(stage_error(kStageIndependence, e));
      }
    }

  try {
    r.anomalous = anomalous_discs(curve, fs);
  } catch (const Error& e) {
    r.errors.push_back(stage_error(kStageAnomalous, e));
  }

  r.pairs = finiteness_pairs(spec);
  for (const auto& pv : r.pairs)
    if (pv.error) r.errors.push_back(*pv.error);

  if (spec.model == ModelKind::Rational) {
    try {
      r.hunt = relation_solve(spec.maps, spec.B, spec.M);
      if (r.hunt->bounds_too_small)
        r.errors.push_back({kStageHunt, Errc::BoundsTooSmall, "no pair of independent relations within the bounds"});
    } catch (const Error& e) {
      r.errors.push_back(stage_error(kStageHunt, e));
    }
  }

  if (r.hunt) {
    for (const auto& c : r.hunt->certificates) {
      CertificateCheck cc;
      cc.certificate = c;
      try {
        cc.filter = padic_rank_filter(c, spec.maps, spec.prime, spec.precision);
      } catch (const Error& e) {
        cc.errors.push_back(stage_error(kStageFilter, e));
      }
      try {
        cc.ramification = classify_ramification(c.minpoly, spec.prime, spec.precision, spec.genus, spec.boundary_degree);
      } catch (const Error& e) {
        cc.errors.push_back(stage_error(kStageRamification, e));
      }
      r.errors.insert(r.errors.end(), cc.errors.begin(), cc.errors.end());
      r.certificates.push_back(std::move(cc));
    }
  }

  r.bounds = evaluate_bounds(spec.genus, spec.boundary_degree, spec.prime, r.anomalous, &r.errors);
  return r;
}

}  // namespace tori
