// Integration engines for integrands with integrable logarithmic
// singularities on R, CP^1 and CP^2.
//
// CP^1 is covered by the two unit-ish disk charts z and w = 1/z glued by a
// smooth partition of unity on the overlap annulus.  Declared singular
// points get polar patches with geometrically decaying radial layers; the
// layer sums are extrapolated in log(radius).  CP^2 integrals use seeded
// Monte Carlo with Fubini-Study sampling; results are a pure function of
// (seed, samples).
#pragma once

#include <complex>
#include <functional>

#include "polyreg/errors.hpp"
#include "polyreg/estimate.hpp"

namespace polyreg {

using Cx = std::complex<double>;

struct QuadOptions {
  std::int64_t max_evals = 40'000'000;
  int bulk_order = 8;        // tensor Gauss-Legendre order for bulk cells
  int max_bulk_cells = 40000;
  int patch_layers = 60;     // dyadic radial layers per singular patch
  int patch_theta_segments = 24;
  double chart_overlap = 1.25;  // charts reach |zeta| <= chart_overlap
};

// A 2-form integrand on CP^1: returns the coefficient g in  g dx ^ dy  at
// the point with affine coordinate zeta in the given chart (chart 0 is z,
// chart 1 is w = 1/z).
using Cp1Integrand = std::function<Cx(int chart, Cx zeta)>;

IntegralEstimate integrate_cp1(const Cp1Integrand& f, const SingularLocus& sing,
                               double tol, const QuadOptions& opts = {});

// A 4-form integrand on CP^2: coefficient of dx_u ^ dy_u ^ dx_v ^ dy_v at
// the point with coordinates (u, v) in chart k, where chart k of the point
// (z_0 : z_1 : z_2) has u = z_{k+1}/z_k, v = z_{k+2}/z_k (indices mod 3).
using Cp2Integrand = std::function<Cx(int chart, Cx u, Cx v)>;

IntegralEstimate integrate_cp2_mc(const Cp2Integrand& f, std::int64_t samples,
                                  std::uint64_t seed);

// Seeded Monte Carlo on CP^1 (same chart convention as integrate_cp1);
// used for cross-checking the adaptive engine.
IntegralEstimate integrate_cp1_mc(const Cp1Integrand& f, std::int64_t samples,
                                  std::uint64_t seed);

// Adaptive 1D integration on (a, b), b may be +infinity.
IntegralEstimate integrate_line(const std::function<double(double)>& f,
                                double a, double b, double tol,
                                std::int64_t max_intervals = 100000);

// Normalized Fubini-Study probability densities (total mass 1) against the
// chart Lebesgue measure dx dy (resp. dx_u dy_u dx_v dy_v).
double fs_density_cp1(Cx zeta);
double fs_density_cp2(Cx u, Cx v);

}  // namespace polyreg
