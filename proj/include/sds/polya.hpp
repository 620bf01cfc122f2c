#pragma once

#include <optional>

#include "sds/form.hpp"

namespace sds {

struct PolyaResult {
  bool found = false;
  int exponent = 0;       // least N with (x1+...+xn)^N * f trivially positive
  int searched_up_to = 0;
  /// Closed-form requirement for the AM-GM family, when the caller supplies
  /// one; informational only.
  std::optional<Rat> bound_hint;
};

/// Incremental search N = 0,1,...,nmax, multiplying by (x1+...+xn) once per
/// step. Not-found is a result, not an error. Minimality holds by
/// construction: the first trivially positive product wins.
PolyaResult polya_exponent(const Form& f, int nmax);

/// n^3(n-1)/(2*eps): the classical exponent sufficient for
/// sum x_i^n - (n-eps) prod x_i. Throws when eps <= 0 or n < 2.
Rat polya_bound_amgm(int n, const Rat& eps);

}  // namespace sds
