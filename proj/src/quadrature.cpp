#include "polyreg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "polyreg/rng.hpp"

namespace polyreg {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGL4x[] = {-0.8611363115940525752, -0.3399810435848562648,
                            0.3399810435848562648, 0.8611363115940525752};
constexpr double kGL4w[] = {0.3478548451374538574, 0.6521451548625461426,
                            0.6521451548625461426, 0.3478548451374538574};

constexpr double kGL6x[] = {-0.9324695142031520278, -0.6612093864662645137,
                            -0.2386191860831969087, 0.2386191860831969087,
                            0.6612093864662645137,  0.9324695142031520278};
constexpr double kGL6w[] = {0.1713244923791703450, 0.3607615730481386076,
                            0.4679139345726910474, 0.4679139345726910474,
                            0.3607615730481386076, 0.1713244923791703450};

constexpr double kGL8x[] = {-0.9602898564975362317, -0.7966664774136267395,
                            -0.5255324099163289858, -0.1834346424956498049,
                            0.1834346424956498049,  0.5255324099163289858,
                            0.7966664774136267395,  0.9602898564975362317};
constexpr double kGL8w[] = {0.1012285362903762592, 0.2223810344533744705,
                            0.3137066458778872873, 0.3626837833783619830,
                            0.3626837833783619830, 0.3137066458778872873,
                            0.2223810344533744705, 0.1012285362903762592};

// C^3 smoothstep: 0 at 0, 1 at 1, S(s) + S(1-s) = 1.
double smoothstep(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  double s2 = s * s;
  return s2 * s2 * (35.0 - 84.0 * s + 70.0 * s2 - 20.0 * s2 * s);
}

bool finite(Cx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// QUADPACK-style error estimate from a high/low rule pair: the raw
// difference measures the low rule, not the high one.
double pair_error(Cx hi, Cx lo) {
  double raw = std::abs(hi - lo);
  double scale = std::abs(hi) + 1e-300;
  return scale * std::min(1.0, std::pow(200.0 * raw / scale, 1.5));
}

struct ChartPoint {
  Cx zeta;
  double abs;
};

// Images of the projective singular points in a given CP^1 chart.
std::vector<Cx> chart_singulars(const SingularLocus& sing, int chart,
                                double reach) {
  std::vector<Cx> out;
  for (const auto& p : sing.points) {
    if (p.size() != 2) throw InvalidParameter("CP^1 singular point needs 2 homogeneous coordinates");
    Cx num = chart == 0 ? p[1] : p[0];
    Cx den = chart == 0 ? p[0] : p[1];
    if (std::abs(den) * reach <= std::abs(num)) continue;  // lives in the other chart region
    out.push_back(num / den);
  }
  return out;
}

struct PatchResult {
  Cx value{0, 0};
  double err = 0.0;
  bool diverged = false;
  double tail_ratio = 0.0;
};

// Weighted integrand for one chart: f * (partition-of-unity weight).
class ChartIntegrand {
 public:
  ChartIntegrand(const Cp1Integrand& f, int chart, double reach)
      : f_(f), chart_(chart), h_(std::log(reach)) {}

  Cx operator()(Cx zeta, std::int64_t* evals, std::int64_t* nans) const {
    double a = std::abs(zeta);
    double w;
    if (a == 0.0) {
      w = 1.0;
    } else {
      double tau = std::log(a);
      w = smoothstep((h_ - tau) / (2.0 * h_));
    }
    if (w == 0.0) return {0.0, 0.0};
    ++*evals;
    Cx v = f_(chart_, zeta);
    if (!finite(v)) {
      ++*nans;
      return {0.0, 0.0};
    }
    return v * w;
  }

 private:
  const Cp1Integrand& f_;
  int chart_;
  double h_;
};

// Polar integration of f*chi over a disk around a singular point, with
// dyadic radial layers and a geometric tail extrapolation in log(radius).
PatchResult integrate_patch(const ChartIntegrand& g, Cx center, double rho,
                            const QuadOptions& opts, std::int64_t* evals,
                            std::int64_t* nans) {
  PatchResult res;
  int layers = opts.patch_layers;
  double rmin_allowed = 1e-13 * std::max(1.0, std::abs(center));
  int geom_cap = static_cast<int>(std::ceil(std::log2(rho / rmin_allowed)));
  layers = std::min(layers, std::max(geom_cap, 8));

  int nseg = opts.patch_theta_segments;
  std::vector<double> layer_abs;
  double r_hi = rho;
  for (int k = 0; k < layers; ++k) {
    double r_lo = 0.5 * r_hi;
    Cx hi{0, 0}, lo{0, 0};
    for (int seg = 0; seg < nseg; ++seg) {
      double t0 = 2.0 * kPi * seg / nseg, t1 = 2.0 * kPi * (seg + 1) / nseg;
      double tm = 0.5 * (t1 + t0), th = 0.5 * (t1 - t0);
      double rm = 0.5 * (r_hi + r_lo), rh = 0.5 * (r_hi - r_lo);
      for (int i = 0; i < 6; ++i) {
        double r = rm + rh * kGL6x[i];
        double chi = r <= 0.5 * rho
                         ? 1.0
                         : smoothstep((rho - r) / (0.5 * rho));
        for (int j = 0; j < 6; ++j) {
          double th_ij = tm + th * kGL6x[j];
          Cx zeta = center + Cx{r * std::cos(th_ij), r * std::sin(th_ij)};
          Cx val = g(zeta, evals, nans) * (chi * r);
          hi += val * (kGL6w[i] * rh * kGL6w[j] * th);
        }
        // coarse rule: GL4 in theta on the same radial node
        for (int j = 0; j < 4; ++j) {
          double th_ij = tm + th * kGL4x[j];
          Cx zeta = center + Cx{r * std::cos(th_ij), r * std::sin(th_ij)};
          Cx val = g(zeta, evals, nans) * (chi * r);
          lo += val * (kGL6w[i] * rh * kGL4w[j] * th);
        }
      }
    }
    res.value += hi;
    res.err += pair_error(hi, lo);
    layer_abs.push_back(std::abs(hi));
    r_hi = r_lo;

    // early exit once contributions sit at the roundoff floor
    size_t n = layer_abs.size();
    double scale = 0.0;
    for (double v : layer_abs) scale = std::max(scale, v);
    if (n >= 10 && layer_abs[n - 1] < 1e-13 * scale &&
        layer_abs[n - 2] < 1e-13 * scale) {
      return res;
    }
  }

  // Geometric extrapolation of the truncated tail (layers live on a
  // uniform grid in log radius).
  size_t n = layer_abs.size();
  double scale = 0.0;
  for (double a : layer_abs) scale = std::max(scale, a);
  if (scale == 0.0) return res;
  double last = layer_abs[n - 1];
  if (last < 1e-12 * scale) return res;
  double q = 0.0;
  int m = 0;
  for (size_t k = n - 4; k + 1 < n; ++k) {
    if (layer_abs[k] > 1e-14 * scale) {
      q = std::max(q, layer_abs[k + 1] / layer_abs[k]);
      ++m;
    }
  }
  res.tail_ratio = q;
  if (m == 0 || q >= 0.95) {
    res.diverged = true;
    res.err += last * 100.0;
    return res;
  }
  res.err += last * q / (1.0 - q);
  return res;
}

struct Cell {
  double x0, y0, size;
  Cx value;
  double err;
  std::int64_t id;
};

struct CellLess {
  bool operator()(const Cell& a, const Cell& b) const {
    if (a.err != b.err) return a.err < b.err;
    return a.id > b.id;
  }
};

// Tensor Gauss-Legendre estimates (order 8 and embedded order 4).
void eval_cell(const ChartIntegrand& g,
               const std::vector<Cx>& patch_centers,
               const std::vector<double>& patch_radii, Cell* cell,
               std::int64_t* evals, std::int64_t* nans) {
  double hx = 0.5 * cell->size;
  double cx = cell->x0 + hx, cy = cell->y0 + hx;
  auto masked = [&](Cx zeta) -> Cx {
    double chi0 = 1.0;
    for (size_t i = 0; i < patch_centers.size(); ++i) {
      double d = std::abs(zeta - patch_centers[i]);
      if (d >= patch_radii[i]) continue;
      double chi = d <= 0.5 * patch_radii[i]
                       ? 1.0
                       : smoothstep((patch_radii[i] - d) / (0.5 * patch_radii[i]));
      chi0 -= chi;
    }
    if (chi0 <= 0.0) return {0.0, 0.0};
    return g(zeta, evals, nans) * chi0;
  };
  Cx i8{0, 0}, i4{0, 0};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Cx zeta{cx + hx * kGL8x[i], cy + hx * kGL8x[j]};
      i8 += masked(zeta) * (kGL8w[i] * kGL8w[j]);
    }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Cx zeta{cx + hx * kGL4x[i], cy + hx * kGL4x[j]};
      i4 += masked(zeta) * (kGL4w[i] * kGL4w[j]);
    }
  double jac = hx * hx;
  cell->value = i8 * jac;
  cell->err = pair_error(i8, i4) * jac;
}

}  // namespace

IntegralEstimate integrate_cp1(const Cp1Integrand& f, const SingularLocus& sing,
                               double tol, const QuadOptions& opts) {
  if (!(tol > 0)) throw InvalidParameter("tolerance must be positive");
  double reach = opts.chart_overlap;
  IntegralEstimate est;
  est.engine = Engine::adaptive2d;
  std::int64_t evals = 0;
  bool diverged = false;
  double tail_ratio = 0.0;

  for (int chart = 0; chart < 2; ++chart) {
    ChartIntegrand g(f, chart, reach);
    std::int64_t nans = 0;
    std::int64_t chart_evals_before = evals;

    // Singular patches.
    std::vector<Cx> centers = chart_singulars(sing, chart, reach * 1.35);
    std::vector<double> radii(centers.size());
    for (size_t i = 0; i < centers.size(); ++i) {
      double d = 0.6;
      for (size_t j = 0; j < centers.size(); ++j)
        if (j != i) d = std::min(d, std::abs(centers[i] - centers[j]));
      radii[i] = std::max(1e-6, 0.35 * d);
    }
    double patch_err = 0.0;
    for (size_t i = 0; i < centers.size(); ++i) {
      PatchResult pr = integrate_patch(g, centers[i], radii[i], opts, &evals, &nans);
      est.value += pr.value;
      patch_err += pr.err;
      if (pr.diverged) {
        diverged = true;
        tail_ratio = std::max(tail_ratio, pr.tail_ratio);
      }
    }
    est.error_bound += patch_err;

    // Bulk: adaptive tensor quadrature over the chart square.
    double R = reach * 1.0001;
    std::priority_queue<Cell, std::vector<Cell>, CellLess> heap;
    std::int64_t next_id = 0;
    double bulk_err = 0.0;
    Cx bulk_val{0, 0};
    const int n0 = 6;
    for (int i = 0; i < n0; ++i)
      for (int j = 0; j < n0; ++j) {
        Cell c{-R + 2 * R * i / n0, -R + 2 * R * j / n0, 2 * R / n0, {0, 0}, 0, next_id++};
        eval_cell(g, centers, radii, &c, &evals, &nans);
        bulk_val += c.value;
        bulk_err += c.err;
        heap.push(c);
      }
    double bulk_tol = std::max(0.45 * tol - patch_err, 0.05 * tol);
    int cells = n0 * n0;
    while (bulk_err > bulk_tol && cells < opts.max_bulk_cells &&
           evals < opts.max_evals) {
      Cell worst = heap.top();
      heap.pop();
      if (worst.size < 1e-7) {  // refinement floor: differences are roundoff
        bulk_err -= worst.err;
        worst.err = 0.0;
        heap.push(worst);
        if (heap.top().err == 0.0) break;
        continue;
      }
      bulk_val -= worst.value;
      bulk_err -= worst.err;
      double s = 0.5 * worst.size;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          Cell c{worst.x0 + a * s, worst.y0 + b * s, s, {0, 0}, 0, next_id++};
          eval_cell(g, centers, radii, &c, &evals, &nans);
          bulk_val += c.value;
          bulk_err += c.err;
          heap.push(c);
        }
      cells += 3;
    }
    est.value += bulk_val;
    est.error_bound += bulk_err;

    std::int64_t chart_evals = evals - chart_evals_before;
    if (chart_evals > 0 && nans > chart_evals / 2)
      throw InvalidChart("integrand undefined on most of chart " + std::to_string(chart));
  }

  est.evaluations = std::max<std::int64_t>(evals, 1);
  if (diverged)
    throw NonConvergent(tol, est.error_bound);
  if (est.error_bound > tol)
    throw NonConvergent(tol, est.error_bound);
  return est;
}

IntegralEstimate integrate_cp1_mc(const Cp1Integrand& f, std::int64_t samples,
                                  std::uint64_t seed) {
  if (samples < 1) throw InvalidParameter("samples must be positive");
  CounterRng rng{seed};
  double sr = 0, cr = 0, si = 0, ci = 0, s2 = 0, c2 = 0;
  std::int64_t rejected = 0, accepted = 0;
  auto acc = [](double& sum, double& comp, double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  };
  for (std::int64_t i = 0; i < samples; ++i) {
    Cx g0 = rng.complex_normal(i, 0);
    Cx g1 = rng.complex_normal(i, 1);
    int chart = std::abs(g0) >= std::abs(g1) ? 0 : 1;
    Cx zeta = chart == 0 ? g1 / g0 : g0 / g1;
    double p = fs_density_cp1(zeta);
    Cx x = f(chart, zeta) / p;
    if (!finite(x)) {
      ++rejected;
      continue;
    }
    ++accepted;
    acc(sr, cr, x.real());
    acc(si, ci, x.imag());
    acc(s2, c2, std::norm(x));
  }
  IntegralEstimate est;
  est.engine = Engine::montecarlo;
  est.evaluations = samples;
  est.rejected = rejected;
  if (accepted == 0) throw NonConvergent(0.0, 1.0);
  Cx mean{(sr + cr) / accepted, (si + ci) / accepted};
  double second = (s2 + c2) / accepted;
  double var = std::max(0.0, second - std::norm(mean));
  est.value = mean;
  est.error_bound = 3.0 * std::sqrt(var / accepted);
  return est;
}

IntegralEstimate integrate_cp2_mc(const Cp2Integrand& f, std::int64_t samples,
                                  std::uint64_t seed) {
  if (samples < 10000) throw InvalidParameter("need at least 1e4 samples");
  CounterRng rng{seed};
  double sr = 0, cr = 0, si = 0, ci = 0, s2 = 0, c2 = 0;
  std::int64_t rejected = 0, accepted = 0;
  auto acc = [](double& sum, double& comp, double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  };
  for (std::int64_t i = 0; i < samples; ++i) {
    Cx z[3] = {rng.complex_normal(i, 0), rng.complex_normal(i, 1),
               rng.complex_normal(i, 2)};
    int k = 0;
    if (std::abs(z[1]) > std::abs(z[k])) k = 1;
    if (std::abs(z[2]) > std::abs(z[k])) k = 2;
    Cx u = z[(k + 1) % 3] / z[k];
    Cx v = z[(k + 2) % 3] / z[k];
    double p = fs_density_cp2(u, v);
    Cx x = f(k, u, v) / p;
    if (!finite(x)) {
      ++rejected;
      continue;
    }
    ++accepted;
    acc(sr, cr, x.real());
    acc(si, ci, x.imag());
    acc(s2, c2, std::norm(x));
  }
  IntegralEstimate est;
  est.engine = Engine::montecarlo;
  est.evaluations = samples;
  est.rejected = rejected;
  if (accepted == 0) throw NonConvergent(0.0, 1.0);
  Cx mean{(sr + cr) / accepted, (si + ci) / accepted};
  double second = (s2 + c2) / accepted;
  double var = std::max(0.0, second - std::norm(mean));
  est.value = mean;
  est.error_bound = 3.0 * std::sqrt(var / accepted);
  return est;
}

double fs_density_cp1(Cx zeta) {
  double d = 1.0 + std::norm(zeta);
  return 1.0 / (kPi * d * d);
}

double fs_density_cp2(Cx u, Cx v) {
  double d = 1.0 + std::norm(u) + std::norm(v);
  return 2.0 / (kPi * kPi * d * d * d);
}

namespace {

// Gauss-Kronrod 7-15 pair (nodes/weights as in QUADPACK).
constexpr double kXgk[8] = {0.9914553711208126, 0.9491079123427585,
                            0.8648644233597691, 0.7415311855993944,
                            0.5860872354676911, 0.4058451513773972,
                            0.2077849550078985, 0.0};
constexpr double kWgk[8] = {0.02293532201052922, 0.06309209262997855,
                            0.1047900103222502,  0.1406532597155259,
                            0.1690047266392679,  0.1903505780647854,
                            0.2044329400752989,  0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

struct Interval {
  double a, b, value, err;
  std::int64_t id;
};
struct IntervalLess {
  bool operator()(const Interval& x, const Interval& y) const {
    if (x.err != y.err) return x.err < y.err;
    return x.id > y.id;
  }
};

void gk15(const std::function<double(double)>& f, double a, double b,
          double* value, double* err) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    double x = h * kXgk[j];
    double f1 = f(c - x), f2 = f(c + x);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  *value = resk * h;
  *err = std::abs((resk - resg) * h);
}

}  // namespace

IntegralEstimate integrate_line(const std::function<double(double)>& f,
                                double a, double b, double tol,
                                std::int64_t max_intervals) {
  if (!(tol > 0)) throw InvalidParameter("tolerance must be positive");
  std::function<double(double)> g;
  double lo, hi;
  if (std::isinf(b)) {
    // map (a, inf) to (0, 1)
    g = [&f, a](double t) {
      double om = 1.0 - t;
      double x = a + t / om;
      double v = f(x);
      return v / (om * om);
    };
    lo = 0.0;
    hi = 1.0;
  } else {
    g = f;
    lo = a;
    hi = b;
  }

  std::priority_queue<Interval, std::vector<Interval>, IntervalLess> heap;
  std::int64_t id = 0, nint = 1;
  Interval whole{lo, hi, 0, 0, id++};
  gk15(g, lo, hi, &whole.value, &whole.err);
  double total = whole.value, toterr = whole.err;
  heap.push(whole);
  std::int64_t evals = 15;
  while (toterr > tol && nint < max_intervals) {
    Interval w = heap.top();
    heap.pop();
    if (w.b - w.a < 1e-15 * (std::abs(w.a) + 1.0)) {
      // cannot subdivide further; treat as converged piece
      toterr -= w.err;
      w.err = 0;
      heap.push(w);
      if (heap.top().err == 0.0) break;
      continue;
    }
    total -= w.value;
    toterr -= w.err;
    double m = 0.5 * (w.a + w.b);
    Interval left{w.a, m, 0, 0, id++}, right{m, w.b, 0, 0, id++};
    gk15(g, left.a, left.b, &left.value, &left.err);
    gk15(g, right.a, right.b, &right.value, &right.err);
    evals += 30;
    total += left.value + right.value;
    toterr += left.err + right.err;
    heap.push(left);
    heap.push(right);
    ++nint;
  }
  if (toterr > tol) throw NonConvergent(tol, toterr);
  IntegralEstimate est;
  est.engine = Engine::line1d;
  est.value = total;
  est.error_bound = toterr;
  est.evaluations = evals;
  return est;
}

}  // namespace polyreg
