// Classical polylogarithms Li_n and their single-valued versions: the
// Bloch-Wigner dilogarithm, the Re/Im-corrected L_n with Bernoulli-number
// coefficients, and Levin's modified combination of L_{n-k} log^k|x|.
#pragma once

#include <complex>
#include <utility>

#include "polyreg/errors.hpp"

namespace polyreg {

using Cx = std::complex<double>;

struct PolylogOptions {
  double target_precision = 1e-14;
  int max_terms = 2000;
};

// Principal branch (cut [1, inf); on the cut the limit from below is taken).
Cx li_n(int n, Cx z, const PolylogOptions& opts = {});

// D(z) = Im Li_2(z) + arg(1-z) log|z|, continuous on CP^1, 0 at {0,1,inf}.
double bloch_wigner(Cx z);

// L_n(z) = Re/Im (n odd/even) sum_{k=0}^{n-1} beta_k log^k|z| Li_{n-k}(z),
// beta_k = 2^k B_k / k!; continuous on CP^1.
double zagier_single_valued(int n, Cx z);

// Levin's combination sum_{k even} c_k L_{n-k}(z) log^k|z|, normalized so
// that it agrees with L_n for n <= 3.
double levin_modified(int n, Cx z);

// Numeric check of the one-variable integral representation behind
// levin_modified for n = 2: returns the CP^1 integral of
// log|1-z| dlog|z| ^ dlog|z-a| and the matching closed form.
std::pair<double, double> levin_integral_check(int n, Cx a, double tol = 1e-5);

// zeta(j) at integer arguments (j != 1); negative and zero j use the
// Bernoulli values.
double zeta_int(int j);

// Bernoulli number B_k as a double (B_1 = -1/2).
double bernoulli(int k);

}  // namespace polyreg
