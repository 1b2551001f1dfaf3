#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace cartan {

using Complex = std::complex<double>;

/// Thrown on contract violations (mismatched factors, invalid parameters).
struct Error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an iterative routine fails to converge or an input is
/// numerically unusable (singular matrix, violated sampled inclusion).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation is refused for the given factor or element class
/// (type V spectral decomposition, non-self-adjoint type VI elements).
struct UnsupportedError : NumericalError {
  using NumericalError::NumericalError;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

}  // namespace cartan
