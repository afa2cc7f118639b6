#pragma once

#include <cmath>

#include "jlx/errors.hpp"

// Self-contained double-precision kernels for ln Gamma, digamma and
// polygamma on positive real arguments. Evaluation shifts the argument
// upward to >= 10 by recurrence and then applies the Stirling/Bernoulli
// asymptotic series truncated after the B14 term. No caches, no global
// state; every function here is pure and reentrant.

namespace jlx::specfun {

// Strictly positive, finite real. The only argument type the kernels accept.
class PositiveReal {
  public:
    explicit PositiveReal(double v) : v_(v) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw DomainError("PositiveReal: argument must be finite and > 0");
    }
    double value() const noexcept { return v_; }

  private:
    double v_;
};

// ln Gamma(x). Relative error <= 1e-13 on [1e-6, 1e8] away from the zeros
// at x = 1, 2 (absolute error a few 1e-15 there).
double ln_gamma(PositiveReal x);

// psi(x) = (ln Gamma)'(x). Relative error <= 1e-12 on [1e-4, 1e8] away from
// the positive zero near x = 1.4616.
double digamma(PositiveReal x);

// psi^(m)(x) for m in {1, 2, 3}, true-signed: psi' > 0, psi'' < 0, psi''' > 0.
// Relative error <= 1e-10 on [1e-2, 1e8]. Throws DomainError for other m.
double polygamma(int order, PositiveReal x);

}  // namespace jlx::specfun
