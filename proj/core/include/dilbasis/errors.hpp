#pragma once

#include <stdexcept>
#include <string>

namespace dilbasis {

/// A numerical procedure (quadrature, minimization, root bracketing) did not
/// reach its target. Input validation failures use std::invalid_argument or
/// std::domain_error instead.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double achieved_error = 0.0)
      : std::runtime_error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace dilbasis
