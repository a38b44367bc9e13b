// Scratch driver used while calibrating quadrature and constants.
#include <cstdio>

#include "polyreg/polylog.hpp"
#include "polyreg/quadrature.hpp"

using namespace polyreg;

int main() {
  setvbuf(stdout, nullptr, _IONBF, 0);
  // 1D oracle values
  for (int n = 2; n <= 5; ++n) {
    auto est = integrate_line(
        [n](double r) {
          return std::pow(r, 2 * n - 3) / std::pow(1.0 + r * r, 2 * n - 1);
        },
        0.0, std::numeric_limits<double>::infinity(), 1e-12);
    double binom = 1.0;
    for (int k = 0; k < n - 1; ++k) binom = binom * (2 * n - 2 - k) / (k + 1);
    double expect = 1.0 / ((2 * n - 2) * binom);
    std::printf("beta n=%d: %.15f vs %.15f (err %.2e, bnd %.2e, evals %lld)\n",
                n, est.value.real(), expect,
                std::abs(est.value.real() - expect), est.error_bound,
                (long long)est.evaluations);
  }

  // CP^1 total FS mass through the adaptive engine
  {
    auto est = integrate_cp1(
        [](int, Cx zeta) { return Cx{fs_density_cp1(zeta), 0.0}; },
        SingularLocus{}, 1e-8);
    std::printf("fs mass cp1: %.12f (bnd %.2e, evals %lld)\n",
                est.value.real(), est.error_bound, (long long)est.evaluations);
  }

  // log|z| * FS density: radial oracle = int_0^inf log(r)/(pi(1+r^2)^2) 2 pi r dr
  {
    SingularLocus s = SingularLocus::on_cp1({Cx{0, 0}});
    auto est = integrate_cp1(
        [](int chart, Cx zeta) {
          double lz = chart == 0 ? std::log(std::abs(zeta))
                                 : -std::log(std::abs(zeta));
          return Cx{lz * fs_density_cp1(zeta), 0.0};
        },
        s, 1e-8);
    auto oracle = integrate_line(
        [](double r) {
          return std::log(r) / (3.14159265358979323846 *
                                std::pow(1 + r * r, 2)) *
                 2 * 3.14159265358979323846 * r;
        },
        0.0, std::numeric_limits<double>::infinity(), 1e-12);
    std::printf("log|z| fs: %.12f vs %.12f\n", est.value.real(),
                oracle.value.real());
  }

  // Bloch-Wigner spot values
  Cx w{0.5, 0.8660254037844386};
  std::printf("D(exp(i pi/3)) = %.12f (expect 1.0149416064)\n",
              bloch_wigner(w));
  std::printf("Li_2(1) = %.15f (expect %.15f)\n", li_n(2, Cx{1, 0}).real(),
              zeta_int(2));
  std::printf("L_3(1) = %.15f (expect %.15f)\n",
              zagier_single_valued(3, Cx{1, 0}), zeta_int(3));

  // Levin integral probe: measure the constant against L_2(a)
  for (Cx a : {Cx{0.5, 0.0}, Cx{0.0, 1.0}, Cx{0.5, 0.5}}) {
    auto [lhs, rhs] = levin_integral_check(2, a, 1e-6);
    double d2 = bloch_wigner(a);
    std::printf("levin a=(%.2f,%.2f): lhs=%.9f  L2(a)=%.9f  ratio=%.9f\n",
                a.real(), a.imag(), lhs, d2, d2 != 0 ? lhs / d2 : 0.0);
  }
  std::printf("pi = %.9f, 2pi = %.9f\n", 3.141592653589793, 6.283185307179586);
  return 0;
}
