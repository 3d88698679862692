#ifndef TORI_PIPELINE_HPP
#define TORI_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tori/frobenius_lift.hpp"
#include "tori/hunt.hpp"
#include "tori/slopes.hpp"

namespace tori {

enum class ModelKind { Rational, Plane };

// A curve in G_m^3, either as t -> (f1(t), f2(t), f3(t)) or as three
// functions on a plane curve H = 0.
struct TorusCurveSpec {
  Int prime{5};
  long precision = 10;
  long genus = 0;
  long boundary_degree = 0;
  long B = 1;
  long M = 1;
  ModelKind model = ModelKind::Rational;
  std::vector<RationalMap> maps;
  ZPoly2 H;
  std::vector<RationalFunction> functions;
};

// Throws InvalidInput on a malformed spec.
void validate(const TorusCurveSpec& spec);

// The plane curve and functions the local stages run on. Rational models
// use the line y = 0 with t = x.
PlaneCurve model_curve(const TorusCurveSpec& spec);
std::vector<RationalFunction> model_functions(const TorusCurveSpec& spec);

struct StageError {
  std::string stage;
  Errc code = Errc::InvalidInput;
  std::string message;
};

struct PairVerdict {
  std::size_t i = 0;
  std::size_t j = 0;
  ZPoly2 image;  // curve carrying (f_i, f_j)
  std::optional<bool> dlog_independent;
  std::optional<FinitenessVerdict> verdict;
  std::optional<StageError> error;
};

struct CertificateCheck {
  UnlikelyCertificate certificate;
  std::optional<FilterResult> filter;
  std::optional<RamificationClass> ramification;
  std::vector<StageError> errors;
};

struct BoundTable {
  RamificationBound ramification;
  std::optional<Int> buium;
  std::optional<long> anomalous;
  std::optional<long> anomalous_divisor;
};

struct Report {
  TorusCurveSpec spec;
  bool independent = false;
  std::vector<std::pair<std::size_t, std::size_t>> dlog_dependent_pairs;
  std::optional<AnomalousReport> anomalous;
  std::vector<PairVerdict> pairs;
  std::optional<HuntResult> hunt;
  std::vector<CertificateCheck> certificates;
  BoundTable bounds;
  std::vector<StageError> errors;
  bool stopped = false;  // a fatal stage error ended the run
};

// Stage names, in order.
inline constexpr const char* kStageIndependence = "independence";
inline constexpr const char* kStageAnomalous = "anomalous";
inline constexpr const char* kStageFiniteness = "finiteness";
inline constexpr const char* kStageHunt = "hunt";
inline constexpr const char* kStageFilter = "filter";
inline constexpr const char* kStageRamification = "ramification";
inline constexpr const char* kStageBounds = "bounds";

std::vector<PairVerdict> finiteness_pairs(const TorusCurveSpec& spec);
BoundTable evaluate_bounds(long genus, long boundary_degree, const Int& p, const std::optional<AnomalousReport>& a,
                           std::vector<StageError>* errors = nullptr);

// Runs every stage; errors are collected per stage rather than thrown.
// DependentFunctions stops the run after the first stage.
Report run_pipeline(const TorusCurveSpec& spec);

}  // namespace tori

#endif  // TORI_PIPELINE_HPP
