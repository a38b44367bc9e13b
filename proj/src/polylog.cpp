#include "polyreg/polylog.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "polyreg/quadrature.hpp"

namespace polyreg {

namespace {

constexpr double kPi = 3.14159265358979323846;

// B_0 .. B_{kMaxBernoulli} via the defining recurrence, computed once.
constexpr int kMaxBernoulli = 60;

const std::vector<double>& bernoulli_table() {
  static const std::vector<double> table = [] {
    std::vector<long double> b(kMaxBernoulli + 1, 0.0L);
    b[0] = 1.0L;
    for (int m = 1; m <= kMaxBernoulli; ++m) {
      // sum_{j=0}^{m} C(m+1, j) B_j = 0
      long double s = 0.0L;
      long double binom = 1.0L;  // C(m+1, 0)
      for (int j = 0; j < m; ++j) {
        s += binom * b[j];
        binom = binom * (m + 1 - j) / (j + 1);
      }
      b[m] = -s / (m + 1);
    }
    std::vector<double> out(b.size());
    for (size_t i = 0; i < b.size(); ++i) out[i] = static_cast<double>(b[i]);
    return out;
  }();
  return table;
}

// zeta(2)..zeta(33); beyond that 1 + 2^-j + 3^-j is below double roundoff
// of 1.
constexpr double kZeta[] = {
    1.6449340668482264365, 1.2020569031595942854, 1.0823232337111381916,
    1.0369277551433699263, 1.0173430619844491397, 1.0083492773819228268,
    1.0040773561979443394, 1.0020083928260822144, 1.0009945751278180853,
    1.0004941886041194646, 1.0002460865533080483, 1.0001227133475784891,
    1.0000612481350587048, 1.0000305882363070205, 1.0000152822594086519,
    1.0000076371976378998, 1.0000038172932649998, 1.0000019082127165539,
    1.0000009539620338728, 1.0000004769329867878, 1.0000002384505027277,
    1.0000001192199259653, 1.0000000596081890513, 1.0000000298035035147,
    1.0000000149015548284, 1.0000000074507117898, 1.0000000037253340248,
    1.0000000018626597235, 1.0000000009313274324, 1.0000000004656629065,
    1.0000000002328311834, 1.0000000001164155017};

// log(-z) with the limit-from-below convention on the cut: for real z > 0
// the value of log(-(z - i0)) = log z + i pi.
Cx log_neg_lower(Cx z) {
  if (z.imag() == 0.0 && z.real() > 0.0)
    return {std::log(z.real()), kPi};
  return std::log(-z);
}

// log z with the same convention (cut along the negative axis untouched;
// real positive z is fine for principal log).
Cx log_lower(Cx z) {
  if (z.imag() == 0.0 && z.real() < 0.0)
    return {std::log(-z.real()), -kPi};
  return std::log(z);
}

Cx li_series(int n, Cx z, const PolylogOptions& opts) {
  Cx sum{0, 0}, term = z;
  for (int k = 1; k <= opts.max_terms; ++k) {
    Cx add = term / std::pow(static_cast<double>(k), n);
    sum += add;
    if (std::abs(add) < opts.target_precision * (std::abs(sum) + 1e-30) &&
        k > 4)
      break;
    term *= z;
  }
  return sum;
}

// Expansion around z = 1 in mu = log z, valid for |mu| < 2 pi, n >= 2:
//   Li_n(e^mu) = sum_{m >= 0, m != n-1} zeta(n-m) mu^m / m!
//              + (H_{n-1} - log(-mu)) mu^{n-1} / (n-1)!
Cx li_log_expansion(int n, Cx z, const PolylogOptions& opts) {
  Cx mu = log_lower(z);
  Cx sum{0, 0};
  Cx mupow{1, 0};  // mu^m / m!
  for (int m = 0; m <= opts.max_terms; ++m) {
    if (m != n - 1) {
      Cx add = zeta_int(n - m) * mupow;
      sum += add;
      if (m > std::abs(mu) + 8 &&
          std::abs(add) < opts.target_precision * (std::abs(sum) + 1e-30))
        break;
    }
    mupow *= mu / static_cast<double>(m + 1);
  }
  double harmonic = 0.0;
  for (int k = 1; k <= n - 1; ++k) harmonic += 1.0 / k;
  if (std::abs(mu) > 0) {
    Cx mpow = std::pow(mu, n - 1);
    double fact = 1.0;
    for (int k = 2; k <= n - 1; ++k) fact *= k;
    sum += (harmonic - log_neg_lower(mu)) * mpow / fact;
  }
  return sum;
}

// Inversion: Li_n(z) = (-1)^{n-1} Li_n(1/z) - (2 pi i)^n / n! B_n(u),
// u = 1/2 + log(-z) / (2 pi i).
Cx li_inversion(int n, Cx z, const PolylogOptions& opts) {
  Cx inner = li_series(n, 1.0 / z, opts);
  Cx u = 0.5 + log_neg_lower(z) / Cx{0.0, 2.0 * kPi};
  // Bernoulli polynomial B_n(u) = sum_k C(n,k) B_{n-k} u^k
  const auto& B = bernoulli_table();
  Cx bn{0, 0};
  double binom = 1.0;
  Cx upow{1, 0};
  for (int k = 0; k <= n; ++k) {
    bn += binom * B[n - k] * upow;
    binom = binom * (n - k) / (k + 1);
    upow *= u;
  }
  Cx tpi = std::pow(Cx{0.0, 2.0 * kPi}, n);
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  double sign = (n % 2 == 1) ? 1.0 : -1.0;
  return sign * inner - tpi * bn / fact;
}

}  // namespace

double bernoulli(int k) { return bernoulli_table().at(k); }

double zeta_int(int j) {
  if (j >= 2) {
    if (j - 2 < static_cast<int>(sizeof(kZeta) / sizeof(double)))
      return kZeta[j - 2];
    return 1.0 + std::pow(2.0, -j) + std::pow(3.0, -j);
  }
  if (j == 0) return -0.5;
  if (j == 1) throw InvalidParameter("zeta(1) requested");
  int k = -j;  // zeta(-k) = -B_{k+1}/(k+1)
  if (k % 2 == 0) return 0.0;
  return -bernoulli(k + 1) / (k + 1);
}

Cx li_n(int n, Cx z, const PolylogOptions& opts) {
  if (n < 1) throw InvalidParameter("li_n needs n >= 1");
  if (n == 1) {
    if (z == Cx{1.0, 0.0}) throw OnBranchPoint("Li_1 at z = 1");
    if (z.imag() == 0.0 && z.real() > 1.0)
      return -Cx{std::log(z.real() - 1.0), -kPi};  // limit from below
    return -std::log(1.0 - z);
  }
  double a = std::abs(z);
  if (a == 0.0) return {0, 0};
  if (a <= 0.5) return li_series(n, z, opts);
  if (a >= 2.0) return li_inversion(n, z, opts);
  return li_log_expansion(n, z, opts);
}

double bloch_wigner(Cx z) {
  if (z.imag() == 0.0) return 0.0;  // vanishes on the real line
  double a = std::abs(z);
  if (a == 0.0 || !std::isfinite(a)) return 0.0;
  if (a > 1.0) return -bloch_wigner(1.0 / z);
  Cx l2 = li_n(2, z);
  return l2.imag() + std::arg(1.0 - z) * std::log(a);
}

double zagier_single_valued(int n, Cx z) {
  if (n < 2) throw InvalidParameter("single-valued L_n needs n >= 2");
  if (n == 2) return bloch_wigner(z);
  double a = std::abs(z);
  if (a == 0.0 || !std::isfinite(a)) return 0.0;
  if (z == Cx{1.0, 0.0} && n == 2) return 0.0;
  if (a > 1.0) {
    double sign = (n % 2 == 1) ? 1.0 : -1.0;
    return sign * zagier_single_valued(n, 1.0 / z);
  }
  double la = std::log(a);
  Cx sum{0, 0};
  double lpow = 1.0;  // log^k |z|
  for (int k = 0; k <= n - 1; ++k) {
    double beta = std::pow(2.0, k) * bernoulli(k);
    for (int j = 2; j <= k; ++j) beta /= j;
    if (beta * lpow != 0.0) sum += beta * lpow * li_n(n - k, z);
    lpow *= la;
  }
  return (n % 2 == 1) ? sum.real() : sum.imag();
}

double levin_modified(int n, Cx z) {
  if (n < 2) throw InvalidParameter("levin_modified needs n >= 2");
  double a = std::abs(z);
  if (a == 0.0 || !std::isfinite(a)) return 0.0;
  // Coefficients 2^k (n-2)! (2n-k-3)! / ((2n-3)! (k+1)! (n-k-2)!),
  // normalized so the k = 0 coefficient is 1 (then L~_n = L_n for n <= 3).
  auto fact = [](int m) {
    double f = 1.0;
    for (int j = 2; j <= m; ++j) f *= j;
    return f;
  };
  double sum = 0.0;
  double la = std::log(a);
  for (int k = 0; k <= n - 2; k += 2) {
    double c = std::pow(2.0, k) * fact(n - 2) * fact(2 * n - k - 3) /
               (fact(2 * n - 3) * fact(k + 1) * fact(n - k - 2));
    sum += c * zagier_single_valued(n - k, z) * std::pow(la, k);
  }
  return sum;
}

std::pair<double, double> levin_integral_check(int n, Cx a, double tol) {
  if (n != 2)
    throw InvalidParameter("levin_integral_check implemented for n = 2");
  if (a == Cx{0, 0}) throw InvalidParameter("a must avoid {0, infinity}");

  // Integrand log|1-z| dlog|z| ^ dlog|z-a| as a 2-form on CP^1.
  // In the w = 1/z chart: 1 - z = -(1 - w)/w, z = 1/w, z - a = -(aw - 1)/w.
  auto integrand = [a](int chart, Cx zeta) -> Cx {
    Cx g1, g2;  // Wirtinger dlog of z and z-a (or their chart-1 versions)
    double l0;  // log|1-z|
    if (chart == 0) {
      Cx z = zeta;
      if (z == Cx{0, 0} || z == Cx{1, 0} || z == a) return {0, 0};
      l0 = std::log(std::abs(1.0 - z));
      g1 = 1.0 / z;
      g2 = 1.0 / (z - a);
    } else {
      Cx w = zeta;
      if (w == Cx{0, 0} || w == Cx{1, 0} || w * a == Cx{1, 0}) return {0, 0};
      l0 = std::log(std::abs(1.0 - w)) - std::log(std::abs(w));
      g1 = -1.0 / w;
      g2 = a / (a * w - 1.0) - 1.0 / w;
    }
    // dlog|f| has components (Re g, -Im g); wedge of two of them:
    double wedge = -g1.real() * g2.imag() + g1.imag() * g2.real();
    // (Re g1)(-Im g2) - (-Im g1)(Re g2)
    return Cx{l0 * wedge, 0.0};
  };

  SingularLocus sing = SingularLocus::on_cp1({Cx{0, 0}, Cx{1, 0}, a});
  IntegralEstimate est = integrate_cp1(integrand, sing, tol);

  // Closed form: the integral equals -2 pi times the printed-normalization
  // combination, which is L~_2 / 2 in our normalization (L~_2 = L_2).
  double rhs = -kPi * levin_modified(2, a);
  return {est.value.real(), rhs};
}

}  // namespace polyreg
