#pragma once

#include <cmath>
#include <stdexcept>

#include "liepca/matrix.hpp"

namespace liepca {

/// Matrix exponential by scaling-and-squaring: scale so the 1-norm is at most
/// one, sum the Taylor series until the term norm drops below 1e-16, then
/// square back. Relative error <= 1e-10 for ||A||_2 <= 10.
inline Mat mat_exp(const Mat& a) {
  if (!a.square()) throw std::invalid_argument("mat_exp: non-square matrix");
  if (!a.is_finite()) throw std::invalid_argument("mat_exp: non-finite entry");
  const int n = a.rows();

  const double n1 = a.one_norm();
  int squarings = 0;
  if (n1 > 1.0) squarings = static_cast<int>(std::ceil(std::log2(n1)));

  Mat b = a;
  b *= std::ldexp(1.0, -squarings);

  Mat sum = Mat::identity(n);
  Mat term = Mat::identity(n);
  for (int k = 1; k <= 64; ++k) {
    term = term * b;
    term *= 1.0 / k;
    sum += term;
    if (term.frobenius_norm() < 1e-16) break;
  }

  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace liepca
