#include "minrep/error.hpp"

namespace minrep {

const char* errc_name(errc code) {
  switch (code) {
    case errc::non_integral_b: return "NonIntegralB";
    case errc::delta_undefined: return "DeltaUndefined";
    case errc::pole_in_formula: return "PoleInFormula";
    case errc::zero_lambda: return "ZeroLambda";
    case errc::sign_undefined: return "SignUndefined";
    case errc::no_convergence: return "NoConvergence";
    case errc::pole_c: return "PoleC";
    case errc::argument_near_one: return "ArgumentNearOne";
    case errc::not_on_sphere: return "NotOnSphere";
    case errc::signature_mismatch: return "SignatureMismatch";
    case errc::not_in_m_plus: return "NotInMPlus";
    case errc::not_in_m_minus: return "NotInMMinus";
    case errc::chart_mismatch: return "ChartMismatch";
    case errc::tangency_violated: return "TangencyViolated";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::not_tabulated: return "NotTabulated";
    case errc::tolerance_not_met: return "ToleranceNotMet";
    case errc::truncation_insufficient: return "TruncationInsufficient";
    case errc::not_in_kernel: return "NotInKernel";
    case errc::window_too_noisy: return "WindowTooNoisy";
    case errc::invalid_parameter: return "InvalidParameter";
  }
  return "UnknownError";
}

}  // namespace minrep
