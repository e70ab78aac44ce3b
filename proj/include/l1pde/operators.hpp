#pragma once

#include "l1pde/grid.hpp"

namespace l1pde {

/// Pointwise soft threshold: sign(v) * max(|v| - sigma, 0). Exact zero below sigma.
inline double soft_threshold(double v, double sigma) {
    const double a = (v < 0 ? -v : v) - sigma;
    if (a <= 0.0) return 0.0;
    return v < 0 ? -a : a;
}

/// Shrink operator applied pointwise; the proximal map of sigma * ||.||_1.
Field shrink(const Field& v, double sigma);
void shrink_into(const Field& v, double sigma, Field& out);

/** Explicit subgradient of ||u||_1 at a point, given forcing f and weight gamma:
 *  sign(u) off zero, clamp(f/gamma, -1, 1) at zero (the closed-form argmin of
 *  |f - gamma q| over |q| <= 1). Exposed for diagnostics; solvers use shrink. */
double subgradient_select(double u, double f, double gamma);

/// Second-difference Laplacian with periodic wrap (3-point in 1D, 5-point in 2D).
Field laplacian_apply(const Field& u);
void laplacian_apply_into(const Field& u, Field& out);

/** Fourier eigenvalues of the negated discrete Laplacian stencil:
 *  lambda_k = (2/h^2)(1 - cos(2 pi k / n)) per axis, summed across axes in 2D. */
class LaplacianSymbol {
  public:
    explicit LaplacianSymbol(const Grid& g);
    double axis_eigenvalue(int k) const { return lambda_[k]; }
    double eigenvalue(int k0, int k1 = 0) const {
        return lambda_[k0] + (dim_ == 2 ? lambda_[k1] : 0.0);
    }

  private:
    int dim_;
    std::vector<double> lambda_;
};

/** (I - tau * Laplacian)^{-1} via FFT: divides each Fourier coefficient by
 *  (1 + tau * lambda_k). Preserves the mean (lambda_0 = 0). */
Field resolvent_inverse(const Field& z, double tau);
void resolvent_inverse_into(const Field& z, double tau, Field& out);

} // namespace l1pde
