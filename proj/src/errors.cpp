#include "mulab/errors.hpp"

namespace mulab {

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PoleError: return "PoleError";
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::DivergentSeries: return "DivergentSeries";
    case ErrorKind::PoleInDenominator: return "PoleInDenominator";
    case ErrorKind::KernelPole: return "KernelPole";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::ParameterDegeneracy: return "ParameterDegeneracy";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnknownIdentity: return "UnknownIdentity";
  }
  return "Error";
}

}  // namespace mulab
