#pragma once

#include <stdexcept>
#include <string>

namespace freeconv {

// Failure categories. The CLI prints errc_name() on stderr and exits with
// code 3, so the names are part of the external interface and must stay
// stable.
enum class errc {
  invalid_argument,
  empty_measure,
  nonpositive_mass,
  negative_weight,
  mass_not_normalized,
  order_too_large,
  not_upper_half_plane,
  pole_at_atom,
  zero_cauchy_transform,
  root_finding_failure,
  invalid_stable_parameters,
  pole_at_sigma_node,
  degenerate_law,
  no_convergence,
  bracket_expansion_failure,
  evaluation_at_singularity,
  curve_monotonicity_violation,
  zero_jump,
  invalid_scheme,
  row_unavailable,
  target_required,
  grid_mismatch,
  invalid_exponent,
  cutoff_too_small,
  missing_exclusion,
  subordination_mismatch,
  no_admissible_root,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::empty_measure: return "EmptyMeasure";
    case errc::nonpositive_mass: return "NonpositiveMass";
    case errc::negative_weight: return "NegativeWeight";
    case errc::mass_not_normalized: return "MassNotNormalized";
    case errc::order_too_large: return "OrderTooLarge";
    case errc::not_upper_half_plane: return "NotUpperHalfPlane";
    case errc::pole_at_atom: return "PoleAtAtom";
    case errc::zero_cauchy_transform: return "ZeroCauchyTransform";
    case errc::root_finding_failure: return "RootFindingFailure";
    case errc::invalid_stable_parameters: return "InvalidStableParameters";
    case errc::pole_at_sigma_node: return "PoleAtSigmaNode";
    case errc::degenerate_law: return "DegenerateLaw";
    case errc::no_convergence: return "NoConvergence";
    case errc::bracket_expansion_failure: return "BracketExpansionFailure";
    case errc::evaluation_at_singularity: return "EvaluationAtSingularity";
    case errc::curve_monotonicity_violation: return "CurveMonotonicityViolation";
    case errc::zero_jump: return "ZeroJump";
    case errc::invalid_scheme: return "InvalidScheme";
    case errc::row_unavailable: return "RowUnavailable";
    case errc::target_required: return "TargetRequired";
    case errc::grid_mismatch: return "GridMismatch";
    case errc::invalid_exponent: return "InvalidExponent";
    case errc::cutoff_too_small: return "CutoffTooSmall";
    case errc::missing_exclusion: return "MissingExclusion";
    case errc::subordination_mismatch: return "SubordinationMismatch";
    case errc::no_admissible_root: return "NoAdmissibleRoot";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  explicit Error(errc code, const std::string& detail = {})
      : std::runtime_error(detail.empty()
                               ? std::string(errc_name(code))
                               : std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  errc code() const noexcept { return code_; }
  const char* name() const noexcept { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& detail = {}) {
  throw Error(code, detail);
}

inline void require(bool cond, errc code, const std::string& detail = {}) {
  if (!cond) raise(code, detail);
}

}  // namespace freeconv
