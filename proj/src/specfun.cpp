#include "deltacrit/specfun.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace deltacrit::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr double kEuler = std::numbers::egamma;
constexpr double kPi = std::numbers::pi;

// Below this the ascending series are used for J/Y and K.
constexpr double kSeriesLimit = 2.0;
// Above these the large-argument expansions take over.
constexpr double kHankelLimit = 25.0;
constexpr double kModifiedAsymptoticLimit = 25.0;
// Scaled I via e^{-x} * series is used up to this argument.
constexpr double kISeriesLimit = 20.0;

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) throw std::domain_error(std::string(what) + ": argument must be > 0");
}

void require_nonnegative(double x, const char* what) {
  if (!(x >= 0.0)) throw std::domain_error(std::string(what) + ": argument must be >= 0");
}

// ---------------------------------------------------------------------------
// Ascending series, t = x^2/4.

struct Regular {
  double order0;
  double order1;
};

// J0, J1 (alternating) or I0, I1 together with the harmonic-weighted sums
//   s0 = sum H_k s^k/(k!)^2,  s1 = sum (H_k + H_{k+1}) s^k/(k!(k+1)!)
// needed by Y and K.
struct SeriesSums {
  Regular plain;
  double s0;
  double s1;
};

SeriesSums ascending_series(double x, bool alternating) {
  const double t = 0.25 * x * x;
  const double s = alternating ? -t : t;
  double c0 = 1.0;  // s^k/(k!)^2
  double c1 = 1.0;  // s^k/(k!(k+1)!)
  double h = 0.0;   // H_k
  double sum0 = 1.0, sum1 = 1.0, w0 = 0.0, w1 = 1.0;  // k = 0 terms, H_0 + H_1 = 1
  for (int k = 1; k < 200; ++k) {
    const double dk = k;
    c0 *= s / (dk * dk);
    c1 *= s / (dk * (dk + 1.0));
    h += 1.0 / dk;
    const double h_next = h + 1.0 / (dk + 1.0);
    sum0 += c0;
    sum1 += c1;
    w0 += h * c0;
    w1 += (h + h_next) * c1;
    if (std::fabs(c0) * (h_next + 1.0) < 0.25 * kEps * std::fabs(sum0) &&
        std::fabs(c1) * (2.0 * h_next + 1.0) < 0.25 * kEps * std::fabs(sum1) &&
        std::fabs(h * c0) < 0.25 * kEps * std::max(std::fabs(w0), kTiny) &&
        std::fabs((h + h_next) * c1) < 0.25 * kEps * std::max(std::fabs(w1), kTiny)) {
      break;
    }
  }
  return {{sum0, 0.5 * x * sum1}, w0, w1};
}

// ---------------------------------------------------------------------------
// Steed's continued-fraction method for J0, J1, Y0, Y1 at x >= 2.
// CF1 yields f = J0'/J0 and the sign of J0; CF2 yields p + iq =
// (J0' + iY0')/(J0 + iY0); the Wronskian fixes the normalisation.

struct Cylinder {
  double j0, j1, y0, y1;
};

Cylinder steed_jy(double x) {
  constexpr int kMaxIter = 100000;
  constexpr double kFpMin = 1e-300;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / kPi;

  int sign = 1;
  double h = kFpMin;
  double b = 0.0, d = 0.0, c = h;
  int it = 0;
  for (; it < kMaxIter; ++it) {
    b += xi2;
    d = b - d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = b - 1.0 / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) sign = -sign;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  if (it == kMaxIter) throw std::runtime_error("bessel J/Y: CF1 did not converge");
  const double f = h;  // J0'/J0 (the FPMIN seed is negligible)

  double a = 0.25;
  double p = -0.5 * xi;
  double q = 1.0;
  const double br = 2.0 * x;
  double bi = 2.0;
  double fact = a * xi / (p * p + q * q);
  double cr = br + q * fact;
  double ci = bi + p * fact;
  double den = br * br + bi * bi;
  double dr = br / den;
  double di = -bi / den;
  double dlr = cr * dr - ci * di;
  double dli = cr * di + ci * dr;
  double temp = p * dlr - q * dli;
  q = p * dli + q * dlr;
  p = temp;
  for (it = 2; it < kMaxIter; ++it) {
    a += 2.0 * (it - 1);
    bi += 2.0;
    dr = a * dr + br;
    di = a * di + bi;
    if (std::fabs(dr) + std::fabs(di) < kFpMin) dr = kFpMin;
    fact = a / (cr * cr + ci * ci);
    cr = br + cr * fact;
    ci = bi - ci * fact;
    if (std::fabs(cr) + std::fabs(ci) < kFpMin) cr = kFpMin;
    den = dr * dr + di * di;
    dr /= den;
    di /= -den;
    dlr = cr * dr - ci * di;
    dli = cr * di + ci * dr;
    temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    if (std::fabs(dlr - 1.0) + std::fabs(dli) < kEps) break;
  }
  if (it == kMaxIter) throw std::runtime_error("bessel J/Y: CF2 did not converge");

  const double pf = p - f;
  double j0 = std::sqrt(w / (pf * pf / q + q));
  if (sign < 0) j0 = -j0;
  const double y0 = j0 * pf / q;
  const double y0p = y0 * p + j0 * q;  // Y0' without dividing by gamma
  return {j0, -f * j0, y0, -y0p};
}

// ---------------------------------------------------------------------------
// Hankel expansion for x >= 25:
//   J_n = sqrt(2/(pi x)) (P cos chi - Q sin chi),
//   Y_n = sqrt(2/(pi x)) (P sin chi + Q cos chi),  chi = x - (n/2 + 1/4) pi.

struct HankelPQ {
  double p, q;
};

HankelPQ hankel_pq(int order, double x) {
  const double mu = 4.0 * order * order;
  const double z = 8.0 * x;
  double term = 1.0;
  double p = 1.0, q = 0.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (mu - odd * odd) / (k * z);
    if (std::fabs(next) >= last) break;  // asymptotic: stop at the smallest term
    term = next;
    last = std::fabs(term);
    // k = 1, 2, 3, 4, ... contribute +Q, -P, -Q, +P, ...
    switch (k % 4) {
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
      case 0: p += term; break;
    }
    if (last < 0.1 * kEps * std::max(std::fabs(p), std::fabs(q))) break;
  }
  return {p, q};
}

Cylinder hankel_jy(double x) {
  const double amp = std::sqrt(2.0 / (kPi * x));
  const double s = std::sin(x);
  const double c = std::cos(x);
  constexpr double r = std::numbers::sqrt2 / 2.0;
  // chi0 = x - pi/4, chi1 = x - 3pi/4.
  const double cos0 = r * (c + s), sin0 = r * (s - c);
  const double cos1 = r * (s - c), sin1 = -r * (s + c);
  const HankelPQ o0 = hankel_pq(0, x);
  const HankelPQ o1 = hankel_pq(1, x);
  return {amp * (o0.p * cos0 - o0.q * sin0), amp * (o1.p * cos1 - o1.q * sin1),
          amp * (o0.p * sin0 + o0.q * cos0), amp * (o1.p * sin1 + o1.q * cos1)};
}

Cylinder series_jy(double x) {
  const SeriesSums s = ascending_series(x, true);
  const double l = std::log(0.5 * x) + kEuler;
  const double y0 = (2.0 / kPi) * (l * s.plain.order0 - s.s0);
  const double y1 = -2.0 / (kPi * x) + (2.0 / kPi) * l * s.plain.order1 - x / (2.0 * kPi) * s.s1;
  return {s.plain.order0, s.plain.order1, y0, y1};
}

Cylinder cylinder(double x) {
  if (x < kSeriesLimit) return series_jy(x);
  if (x < kHankelLimit) return steed_jy(x);
  return hankel_jy(x);
}

// ---------------------------------------------------------------------------
// Modified functions, all returned in scaled form.

// Large-argument expansion: sum_k (+-1)^k a_k(n)/x^k.
double modified_asymptotic_sum(int order, double x, bool alternating) {
  const double mu = 4.0 * order * order;
  const double z = 8.0 * x;
  double term = 1.0, sum = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    double next = term * (mu - odd * odd) / (k * z);
    if (alternating) next = -next;
    if (std::fabs(next) >= last) break;
    term = next;
    last = std::fabs(term);
    sum += term;
    if (last < 0.1 * kEps * std::fabs(sum)) break;
  }
  return sum;
}

Regular scaled_i(double x) {
  if (x <= kISeriesLimit) {
    const SeriesSums s = ascending_series(x, false);
    const double e = std::exp(-x);
    return {e * s.plain.order0, e * s.plain.order1};
  }
  // e^{-x} I_n(x) ~ (2 pi x)^{-1/2} sum (-1)^k a_k(n)/x^k
  const double amp = 1.0 / std::sqrt(2.0 * kPi * x);
  return {amp * modified_asymptotic_sum(0, x, true), amp * modified_asymptotic_sum(1, x, true)};
}

// Steed's CF2 for K at x >= 2 (Temme / Thompson-Barnett form), scaled by e^x.
Regular steed_k_scaled(double x) {
  constexpr int kMaxIter = 10000;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d, delh = d;
  double q1 = 0.0, q2 = 1.0;
  const double a1 = 0.25;
  double q = a1, c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  int i = 2;
  for (; i < kMaxIter; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::fabs(dels / s) < 0.5 * kEps) break;
  }
  if (i == kMaxIter) throw std::runtime_error("bessel K: CF2 did not converge");
  h *= a1;
  const double k0 = std::sqrt(kPi / (2.0 * x)) / s;
  const double k1 = k0 * (x + 0.5 - h) / x;
  return {k0, k1};
}

Regular scaled_k(double x) {
  if (x < kSeriesLimit) {
    const SeriesSums s = ascending_series(x, false);
    const double l = std::log(0.5 * x) + kEuler;
    const double k0 = -l * s.plain.order0 + s.s0;
    const double k1 = 1.0 / x + l * s.plain.order1 - 0.25 * x * s.s1;
    const double e = std::exp(x);
    return {e * k0, e * k1};
  }
  if (x < kModifiedAsymptoticLimit) return steed_k_scaled(x);
  // e^{x} K_n(x) ~ sqrt(pi/(2x)) sum a_k(n)/x^k
  const double amp = std::sqrt(kPi / (2.0 * x));
  return {amp * modified_asymptotic_sum(0, x, false), amp * modified_asymptotic_sum(1, x, false)};
}

double unscale_i(double scaled, double x) {
  if (scaled == 0.0) return 0.0;
  const double log_value = x + std::log(scaled);
  if (log_value > std::log(std::numeric_limits<double>::max())) {
    throw std::overflow_error("bessel I: result overflows double at x = " + std::to_string(x));
  }
  return scaled * std::exp(x);
}

double unscale_k(double scaled, double x) {
  // Underflows gracefully to a subnormal/zero; callers needing the value at
  // large x use the scaled form.
  return scaled * std::exp(-x);
}

}  // namespace

BesselKind parse_kind(const std::string& name) {
  if (name.size() == 2) {
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    const char o = name[1];
    if ((o == '0' || o == '1') && (f == 'J' || f == 'Y' || f == 'I' || f == 'K')) {
      const Family fam = f == 'J' ? Family::J : f == 'Y' ? Family::Y : f == 'I' ? Family::I : Family::K;
      return {fam, o - '0'};
    }
  }
  throw std::invalid_argument("unknown Bessel kind '" + name + "' (expected J0..K1)");
}

std::string to_string(BesselKind kind) {
  const char* fam = kind.family == Family::J ? "J" : kind.family == Family::Y ? "Y"
                    : kind.family == Family::I ? "I" : "K";
  return std::string(fam) + std::to_string(kind.order);
}

double bessel_j0(double x) {
  require_nonnegative(x, "J0");
  if (x == 0.0) return 1.0;
  return cylinder(x).j0;
}

double bessel_j1(double x) {
  require_nonnegative(x, "J1");
  if (x == 0.0) return 0.0;
  return cylinder(x).j1;
}

double bessel_y0(double x) {
  require_positive(x, "Y0");
  return cylinder(x).y0;
}

double bessel_y1(double x) {
  require_positive(x, "Y1");
  return cylinder(x).y1;
}

double bessel_i0e(double x) {
  require_nonnegative(x, "I0");
  return scaled_i(x).order0;
}

double bessel_i1e(double x) {
  require_nonnegative(x, "I1");
  return scaled_i(x).order1;
}

double bessel_k0e(double x) {
  require_positive(x, "K0");
  return scaled_k(x).order0;
}

double bessel_k1e(double x) {
  require_positive(x, "K1");
  return scaled_k(x).order1;
}

double bessel_i0(double x) { return unscale_i(bessel_i0e(x), x); }
double bessel_i1(double x) { return unscale_i(bessel_i1e(x), x); }
double bessel_k0(double x) { return unscale_k(bessel_k0e(x), x); }
double bessel_k1(double x) { return unscale_k(bessel_k1e(x), x); }

double bessel_eval(BesselKind kind, double x) {
  if (kind.order != 0 && kind.order != 1) {
    throw std::invalid_argument("bessel_eval: only orders 0 and 1 are supported");
  }
  const bool first = kind.order == 0;
  switch (kind.family) {
    case Family::J: return first ? bessel_j0(x) : bessel_j1(x);
    case Family::Y: return first ? bessel_y0(x) : bessel_y1(x);
    case Family::I: return first ? bessel_i0(x) : bessel_i1(x);
    case Family::K: return first ? bessel_k0(x) : bessel_k1(x);
  }
  throw std::invalid_argument("bessel_eval: unknown family");
}

double k_ratio(double x) {
  require_positive(x, "K1/K0");
  const Regular k = scaled_k(x);
  return k.order1 / k.order0;
}

RatioBounds k_ratio_bounds(double x, RatioBoundParams params) {
  require_positive(x, "k_ratio_bounds");
  if (params.p < 0.0 || params.q < 0.0) {
    throw std::domain_error("k_ratio_bounds: p and q must be nonnegative");
  }
  return {1.0 + 1.0 / (2.0 * (x + params.p)), 1.0 + 1.0 / (2.0 * (x + params.q))};
}

}  // namespace deltacrit::specfun
