// Result type returned by all integration engines.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace polyreg {

enum class Engine { adaptive2d, montecarlo, line1d };

struct IntegralEstimate {
  std::complex<double> value{0.0, 0.0};
  double error_bound = 0.0;     // >= 0
  std::int64_t evaluations = 0; // > 0 on return
  Engine engine = Engine::adaptive2d;
  std::int64_t rejected = 0;    // NaN samples skipped (Monte Carlo only)

  double real() const { return value.real(); }
};

// Points where an integrand is allowed a log-type singularity.  A point is
// stored projectively (homogeneous coordinates) so each chart can compute
// its own image of it.
struct SingularLocus {
  enum class Kind { log, log_power };
  // Homogeneous coordinates, one vector per point (dimension 2 on CP^1).
  std::vector<std::vector<std::complex<double>>> points;
  Kind kind = Kind::log;

  static SingularLocus on_cp1(std::initializer_list<std::complex<double>> zs,
                              bool include_infinity = true) {
    SingularLocus s;
    for (auto z : zs) s.points.push_back({{1.0, 0.0}, z});
    if (include_infinity) s.points.push_back({{0.0, 0.0}, {1.0, 0.0}});
    return s;
  }
  void add_cp1(std::complex<double> z) { points.push_back({{1.0, 0.0}, z}); }
  void add_cp1_infinity() { points.push_back({{0.0, 0.0}, {1.0, 0.0}}); }
};

}  // namespace polyreg
