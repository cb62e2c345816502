#pragma once

namespace fracwave {

/// C(1, s) = ( \int_R (1 - cos z) / |z|^{1+2s} dz )^{-1} for s in (0, 1),
/// evaluated by quadrature with an asymptotic tail. Relative error ~1e-12.
double fractional_laplacian_constant(double s);

}  // namespace fracwave
