#pragma once

#include <stdexcept>
#include <string>

namespace mulab {

enum class ErrorKind {
  PoleError,
  PoleProximity,
  ZeroArgument,
  NonConvergent,
  DivergentSeries,
  PoleInDenominator,
  KernelPole,
  QuadratureFailure,
  ParameterDegeneracy,
  SamplingExhausted,
  InvalidArgument,
  UnknownIdentity,
};

const char* kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

template <ErrorKind K>
class ErrorOf : public Error {
 public:
  explicit ErrorOf(const std::string& what) : Error(K, what) {}
};

using PoleError = ErrorOf<ErrorKind::PoleError>;
using PoleProximity = ErrorOf<ErrorKind::PoleProximity>;
using ZeroArgument = ErrorOf<ErrorKind::ZeroArgument>;
using NonConvergent = ErrorOf<ErrorKind::NonConvergent>;
using DivergentSeries = ErrorOf<ErrorKind::DivergentSeries>;
using PoleInDenominator = ErrorOf<ErrorKind::PoleInDenominator>;
using KernelPole = ErrorOf<ErrorKind::KernelPole>;
using QuadratureFailure = ErrorOf<ErrorKind::QuadratureFailure>;
using ParameterDegeneracy = ErrorOf<ErrorKind::ParameterDegeneracy>;
using SamplingExhausted = ErrorOf<ErrorKind::SamplingExhausted>;
using InvalidArgument = ErrorOf<ErrorKind::InvalidArgument>;
using UnknownIdentity = ErrorOf<ErrorKind::UnknownIdentity>;

}  // namespace mulab
