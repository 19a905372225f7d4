#include "numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "error.hpp"

namespace chz {

namespace {

constexpr Complex kI{0.0, 1.0};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::round(x); }

struct SeriesSum {
  Complex value;
  Complex derivative;
};

// Minimal complex type over a real scalar T; std::complex is not usable with
// __float128 without libquadmath.
template <class T>
struct Cx {
  T re{0}, im{0};
  Cx() = default;
  Cx(T r, T i) : re(r), im(i) {}
  explicit Cx(Complex z) : re(static_cast<T>(z.real())), im(static_cast<T>(z.imag())) {}
  Complex get() const { return {static_cast<double>(re), static_cast<double>(im)}; }
  double mag() const { return std::abs(get()); }
  Cx& operator+=(const Cx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend Cx operator+(Cx a, const Cx& b) { return a += b; }
  friend Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  friend Cx operator/(const Cx& a, const Cx& b) {
    const T d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend Cx operator*(const Cx& a, T s) { return {a.re * s, a.im * s}; }
};

// When the largest term exceeds the sum by this factor, double rounding would
// cost more than about 1e-13 relative and the series is summed again in quad.
constexpr double kCancellationLimit = 1e3;

struct Summed {
  SeriesSum s;
  double max_term = 0.0;
  double max_dterm = 0.0;
  bool cancelled() const {
    return max_term > kCancellationLimit * std::abs(s.value) || max_dterm > kCancellationLimit * std::abs(s.derivative);
  }
};

// 1F1(a; b; z) and d/dz 1F1(a; b; z), summed until the geometric tail bound of
// both series drops below tol * (1 + |partial sum|).
template <class T>
Summed hyp1f1_in(Complex a_, Complex b_, Complex z_, double tol) {
  using C = Cx<T>;
  const C a(a_), b(b_), z(z_), one(T(1), T(0));
  C term = one, dterm = a / b, value, derivative;
  Summed out;
  const double az = std::abs(z_);
  const double spread = std::abs(a_ - b_);
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    value += term;
    derivative += dterm;
    const double mt = term.mag(), md = dterm.mag();
    out.max_term = std::max(out.max_term, mt);
    out.max_dterm = std::max(out.max_dterm, md);
    const T kk = static_cast<T>(k);
    const C ak = a + C(kk, T(0)), bk = b + C(kk, T(0));
    term = term * (ak / bk * z) * (T(1) / (kk + T(1)));
    dterm = dterm * ((ak + one) / (bk + one) * z) * (T(1) / (kk + T(1)));
    // Ratio bound for every later term: |a+j|/|b+j| <= 1 + |a-b|/|b+j|, and
    // |b+j| grows once j exceeds |b|.
    const double k1 = static_cast<double>(k) + 1.0;
    if (k1 > 2.0 * std::abs(b_) && k1 > az) {
      const double r = (1.0 + spread / std::abs(b_ + k1)) * az / (k1 + 1.0);
      if (r < 1.0) {
        const double tail = term.mag() / (1.0 - r);
        const double dtail = dterm.mag() / (1.0 - r);
        const double v = value.mag(), d = derivative.mag();
        if (tail <= tol * (1.0 + v) && dtail <= tol * (1.0 + d)) {
          out.s = SeriesSum{value.get(), derivative.get()};
          return out;
        }
      }
    }
    if (!std::isfinite(term.mag())) fail(Errc::no_convergence, "1F1 series overflow at |z|=" + std::to_string(az));
  }
  fail(Errc::no_convergence, "1F1 series did not reach tolerance within " + std::to_string(kMaxSeriesTerms) + " terms");
}

SeriesSum hyp1f1(Complex a, Complex b, Complex z, double tol) {
  const Summed fast = hyp1f1_in<double>(a, b, z, tol);
  if (!fast.cancelled()) return fast.s;
  return hyp1f1_in<__float128>(a, b, z, tol).s;
}

// 0F1(; c; u) and its u-derivative at u = -rho^2/4, with u formed in T.
template <class T>
Summed hyp0f1_in(double c_, Complex rho, double tol) {
  using C = Cx<T>;
  const T c = static_cast<T>(c_);
  const C r(rho);
  const C u = r * r * T(-0.25);
  const Complex u_ = u.get();
  C term(T(1), T(0)), dterm(T(1) / c, T(0)), value, derivative;
  Summed out;
  const double au = std::abs(u_);
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    value += term;
    derivative += dterm;
    out.max_term = std::max(out.max_term, term.mag());
    out.max_dterm = std::max(out.max_dterm, dterm.mag());
    const T kk = static_cast<T>(k);
    term = term * u * (T(1) / ((c + kk) * (kk + T(1))));
    dterm = dterm * u * (T(1) / ((c + kk + T(1)) * (kk + T(1))));
    const double k1 = static_cast<double>(k) + 1.0;
    if (k1 > 2.0 * std::abs(c_) + 1.0) {
      const double r = au / ((k1 + 1.0) * std::abs(c_ + k1));
      if (r < 1.0) {
        const double tail = term.mag() / (1.0 - r);
        const double dtail = dterm.mag() / (1.0 - r);
        if (tail <= tol * (1.0 + value.mag()) && dtail <= tol * (1.0 + derivative.mag())) {
          out.s = SeriesSum{value.get(), derivative.get()};
          return out;
        }
      }
    }
  }
  fail(Errc::no_convergence, "0F1 series did not reach tolerance within " + std::to_string(kMaxSeriesTerms) + " terms");
}

SeriesSum hyp0f1(double c, Complex rho, double tol) {
  const Summed fast = hyp0f1_in<double>(c, rho, tol);
  if (!fast.cancelled()) return fast.s;
  return hyp0f1_in<__float128>(c, rho, tol).s;
}

}  // namespace

PhiValue phi_with_derivative(const NumericParams& p, Complex rho, double tol) {
  if (!(tol > 0.0)) fail(Errc::invalid_argument, "tol must be > 0");
  if (!std::isfinite(rho.real()) || !std::isfinite(rho.imag())) fail(Errc::invalid_argument, "rho must be finite");
  if (std::abs(rho) > kMaxRadius)
    fail(Errc::no_convergence, "|rho| exceeds the series radius limit " + std::to_string(kMaxRadius));
  const double b = 2.0 * p.L + 2.0;
  if (is_nonpositive_integer(b)) {
    if (p.eta != 0.0) fail(Errc::singular_b, "2L+2 is a non-positive integer; 1F1 undefined");
    // Gamma(nu+1) (2/rho)^nu J_nu(rho) = 0F1(; nu+1; -rho^2/4) with nu = L + 1/2.
    const double c = p.L + 1.5;
    if (is_nonpositive_integer(c)) fail(Errc::singular_b, "L+3/2 is a non-positive integer; Bessel form undefined");
    const SeriesSum s = hyp0f1(c, rho, tol);
    return PhiValue{s.value, s.derivative * (-rho / 2.0)};
  }
  const Complex a{p.L + 1.0, -p.eta};
  // Kummer: e^{-i rho} 1F1(a; b; 2i rho) = e^{i rho} 1F1(b-a; b; -2i rho); the
  // branch with a non-negative real part of the argument is summed.
  if (rho.imag() <= 0.0) {
    const Complex e = std::exp(-kI * rho);
    const SeriesSum s = hyp1f1(a, Complex{b, 0.0}, 2.0 * kI * rho, tol);
    const Complex value = e * s.value;
    return PhiValue{value, -kI * value + e * 2.0 * kI * s.derivative};
  }
  const Complex e = std::exp(kI * rho);
  const SeriesSum s = hyp1f1(Complex{b, 0.0} - a, Complex{b, 0.0}, -2.0 * kI * rho, tol);
  const Complex value = e * s.value;
  return PhiValue{value, kI * value - e * 2.0 * kI * s.derivative};
}

Complex phi(const NumericParams& p, Complex rho, double tol) { return phi_with_derivative(p, rho, tol).value; }

Rect default_search_region(double L) {
  const double m = std::max(0.0, std::floor(-L - 0.5));
  const double r = 6.0 + 2.0 * m;
  return Rect{-r, r, 0.0, r};
}

namespace {

constexpr double kMaxPhaseStep = std::numbers::pi / 6.0;
constexpr int kMaxBisections = 40;

class ContourWalker {
 public:
  ContourWalker(const NumericParams& p, double tol) : p_(p), tol_(tol) {}

  // Continuous change of arg(phi) along the segment a -> b.
  double edge(Complex a, Complex b) {
    const double length = std::abs(b - a);
    const int pieces = std::max(16, static_cast<int>(std::ceil(length * 16.0)));
    double total = 0.0;
    Complex z0 = a;
    Complex f0 = eval(z0);
    for (int i = 1; i <= pieces; ++i) {
      const Complex z1 = a + (b - a) * (static_cast<double>(i) / pieces);
      const Complex f1 = eval(z1);
      total += segment(z0, f0, z1, f1, 0);
      z0 = z1;
      f0 = f1;
    }
    return total;
  }

 private:
  Complex eval(Complex z) {
    const Complex f = phi(p_, z, std::min(tol_, 1e-14));
    if (std::abs(f) < 1e-280 || !std::isfinite(std::abs(f)))
      fail(Errc::contour_too_close, "phi vanishes or overflows on the contour near " + describe(z));
    return f;
  }

  double segment(Complex z0, Complex f0, Complex z1, Complex f1, int depth) {
    const double d = std::arg(f1 / f0);
    if (std::abs(d) < kMaxPhaseStep) {
      // Midpoint agreement guards against a full turn hiding between samples.
      const Complex zm = 0.5 * (z0 + z1);
      const Complex fm = eval(zm);
      const double d1 = std::arg(fm / f0);
      const double d2 = std::arg(f1 / fm);
      if (std::abs(d1 + d2 - d) < 1e-9) return d;
    }
    if (depth >= kMaxBisections)
      fail(Errc::contour_too_close, "phase step exceeds pi/2 after maximal subdivision near " + describe(z0));
    const Complex zm = 0.5 * (z0 + z1);
    const Complex fm = eval(zm);
    return segment(z0, f0, zm, fm, depth + 1) + segment(zm, fm, z1, f1, depth + 1);
  }

  static std::string describe(Complex z) {
    return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
  }

  NumericParams p_;
  double tol_;
};

int winding(const NumericParams& p, const Rect& r, double tol) {
  ContourWalker walker(p, tol);
  const Complex c00{r.re_min, r.im_min}, c10{r.re_max, r.im_min};
  const Complex c11{r.re_max, r.im_max}, c01{r.re_min, r.im_max};
  const double total = walker.edge(c00, c10) + walker.edge(c10, c11) + walker.edge(c11, c01) + walker.edge(c01, c00);
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 1e-3)
    fail(Errc::contour_too_close, "winding number " + std::to_string(turns) + " is not an integer");
  return static_cast<int>(rounded);
}

void require_rect(const Rect& r) {
  if (!(r.re_min < r.re_max) || !(r.im_min < r.im_max))
    fail(Errc::invalid_argument, "region must satisfy re_min < re_max and im_min < im_max");
}

}  // namespace

int count_zeros_region(const NumericParams& p, const Rect& region, double tol) {
  require_rect(region);
  const double scale = 1.0 + std::max(region.re_max - region.re_min, region.im_max - region.im_min);
  const std::array<double, 3> nudges{0.0, 1e-7 * scale, -1e-7 * scale};
  for (std::size_t i = 0; i < nudges.size(); ++i) {
    const double d = nudges[i];
    const Rect r{region.re_min - d, region.re_max + d, region.im_min - d, region.im_max + d};
    try {
      return winding(p, r, tol);
    } catch (const Error& e) {
      if (e.code() != Errc::contour_too_close || i + 1 == nudges.size()) throw;
    }
  }
  fail(Errc::contour_too_close, "unreachable");
}

namespace {

constexpr int kNewtonIterations = 60;
constexpr double kMinCellSize = 1e-7;
constexpr std::array<double, 4> kSplitFractions{0.5123, 0.4871, 0.5379, 0.4617};

struct Cell {
  Rect rect;
  int count;
};

std::optional<Complex> newton(const NumericParams& p, Complex z, double tol) {
  for (int it = 0; it < kNewtonIterations; ++it) {
    const PhiValue v = phi_with_derivative(p, z);
    if (v.derivative == Complex{0.0, 0.0}) return std::nullopt;
    const Complex step = v.value / v.derivative;
    z -= step;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::nullopt;
    if (std::abs(step) <= tol * (1.0 + std::abs(z))) {
      const PhiValue w = phi_with_derivative(p, z);
      if (w.derivative != Complex{0.0, 0.0}) z -= w.value / w.derivative;
      return z;
    }
  }
  return std::nullopt;
}

bool inside(const Rect& r, Complex z, double margin) {
  return z.real() >= r.re_min - margin && z.real() <= r.re_max + margin && z.imag() >= r.im_min - margin &&
         z.imag() <= r.im_max + margin;
}

class ZeroSearch {
 public:
  ZeroSearch(const NumericParams& p, double tol) : p_(p), tol_(tol) {}

  void resolve(const Cell& cell) {
    if (cell.count == 0) return;
    const Rect& r = cell.rect;
    const double width = r.re_max - r.re_min;
    const double height = r.im_max - r.im_min;
    const Complex centre{0.5 * (r.re_min + r.re_max), 0.5 * (r.im_min + r.im_max)};
    if (cell.count == 1) {
      if (auto z = newton(p_, centre, tol_); z && inside(r, *z, 1e-9 * (1.0 + std::max(width, height)))) {
        found_.push_back(FoundZero{*z, 1});
        return;
      }
    }
    if (std::max(width, height) < kMinCellSize) {
      FoundZero z{centre, cell.count};
      if (cell.count == 1) {
        z.resolved = false;
      } else if (auto refined = newton(p_, centre, tol_); refined && inside(r, *refined, kMinCellSize)) {
        z.point = *refined;
      }
      found_.push_back(z);
      return;
    }
    const auto [lo, hi] = split(cell);
    resolve(lo);
    resolve(hi);
  }

  std::vector<FoundZero> take() { return std::move(found_); }

 private:
  std::pair<Cell, Cell> split(const Cell& cell) {
    const Rect& r = cell.rect;
    const bool along_re = (r.re_max - r.re_min) >= (r.im_max - r.im_min);
    for (double f : kSplitFractions) {
      Rect lo = r, hi = r;
      if (along_re) {
        const double x = r.re_min + f * (r.re_max - r.re_min);
        lo.re_max = x;
        hi.re_min = x;
      } else {
        const double y = r.im_min + f * (r.im_max - r.im_min);
        lo.im_max = y;
        hi.im_min = y;
      }
      try {
        const int c_lo = winding(p_, lo, tol_);
        const int c_hi = winding(p_, hi, tol_);
        if (c_lo + c_hi == cell.count && c_lo >= 0 && c_hi >= 0) return {Cell{lo, c_lo}, Cell{hi, c_hi}};
      } catch (const Error& e) {
        if (e.code() != Errc::contour_too_close) throw;
      }
    }
    fail(Errc::contour_too_close, "no split line of the cell avoids the zeros of phi");
  }

  NumericParams p_;
  double tol_;
  std::vector<FoundZero> found_;
};

std::vector<double> real_zeros(const NumericParams& p, double lo, double hi) {
  std::vector<double> zeros;
  constexpr double kStep = 0.005;
  auto f = [&](double x) { return phi(p, Complex{x, 0.0}).real(); };
  const int steps = static_cast<int>(std::ceil((hi - lo) / kStep));
  double x0 = lo;
  double f0 = f(x0);
  for (int i = 1; i <= steps; ++i) {
    const double x1 = std::min(hi, lo + i * kStep);
    const double f1 = f(x1);
    if (f0 == 0.0) {
      zeros.push_back(x0);
    } else if ((f0 < 0.0) != (f1 < 0.0) && f1 != 0.0) {
      double a = x0, b = x1, fa = f0;
      for (int it = 0; it < 200 && b - a > 4e-16 * (1.0 + std::abs(a)); ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fm < 0.0) == (fa < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      zeros.push_back(0.5 * (a + b));
    }
    x0 = x1;
    f0 = f1;
  }
  if (f0 == 0.0) zeros.push_back(x0);
  return zeros;
}

}  // namespace

ZeroReport find_complex_zeros(const NumericParams& p, std::optional<Rect> search, double tol) {
  if (!(tol > 0.0)) fail(Errc::invalid_argument, "tol must be > 0");
  ZeroReport report;
  report.region = search.value_or(default_search_region(p.L));
  require_rect(report.region);
  const Rect& region = report.region;

  if (region.im_max > kRealAxisOffset) {
    const Rect upper{region.re_min, region.re_max, std::max(region.im_min, kRealAxisOffset), region.im_max};
    report.winding_count = count_zeros_region(p, upper, tol);
    ZeroSearch search_cells(p, tol);
    search_cells.resolve(Cell{upper, report.winding_count});
    for (FoundZero z : search_cells.take()) {
      z.purely_imaginary = std::abs(z.point.real()) < kImaginaryThreshold;
      if (!z.resolved) ++report.unresolved;
      report.counts.complex_pairs += z.multiplicity;
      if (z.purely_imaginary) ++report.counts.imaginary_pairs;
      FoundZero mirror = z;
      mirror.point = std::conj(z.point);
      mirror.mirrored = true;
      report.zeros.push_back(z);
      report.zeros.push_back(mirror);
    }
  }
  if (region.im_min <= 0.0 && region.im_max >= 0.0) {
    for (double x : real_zeros(p, region.re_min, region.re_max)) {
      FoundZero z{Complex{x, 0.0}, 1};
      z.real = true;
      report.zeros.push_back(z);
      ++report.counts.real;
    }
  }
  std::sort(report.zeros.begin(), report.zeros.end(), [](const FoundZero& a, const FoundZero& b) {
    return a.point.real() != b.point.real() ? a.point.real() < b.point.real() : a.point.imag() < b.point.imag();
  });
  return report;
}

}  // namespace chz
