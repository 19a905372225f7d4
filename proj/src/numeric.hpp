#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace chz {

using Complex = std::complex<double>;

struct NumericParams {
  double L = 0.0;
  double eta = 0.0;
};

// Axis-aligned rectangle in the complex rho-plane.
struct Rect {
  double re_min = 0.0;
  double re_max = 0.0;
  double im_min = 0.0;
  double im_max = 0.0;
};

inline constexpr int kMaxSeriesTerms = 500;
// Power series are not used beyond this modulus of rho.
inline constexpr double kMaxRadius = 64.0;
// Lower edge of the complex-zero search; real zeros are found on the axis itself.
inline constexpr double kRealAxisOffset = 0.01;
inline constexpr double kImaginaryThreshold = 1e-7;

struct PhiValue {
  Complex value;
  Complex derivative;
};

// phi_L(eta, rho) = e^{-i rho} 1F1(L+1-i eta; 2L+2; 2i rho) with its rho-derivative
// from the term-wise differentiated series. For eta = 0 and 2L+2 a non-positive
// integer the Bessel form 0F1(; L+3/2; -rho^2/4) is used instead.
// Errors: SingularB, NoConvergence.
PhiValue phi_with_derivative(const NumericParams& p, Complex rho, double tol = 1e-15);
Complex phi(const NumericParams& p, Complex rho, double tol = 1e-15);

// [-R, R] x [0, R] with R = 6 + 2 max(0, floor(-L-1/2)).
Rect default_search_region(double L);

// Number of zeros of phi inside the rectangle (with multiplicity), from the
// winding number of phi along its boundary. Retries with the edges nudged by a
// tiny amount before raising ContourTooClose.
int count_zeros_region(const NumericParams& p, const Rect& region, double tol = 1e-12);

struct FoundZero {
  Complex point;
  int multiplicity = 1;
  bool real = false;
  bool purely_imaginary = false;
  // Lower half-plane entry obtained by conjugating an upper one.
  bool mirrored = false;
  // Newton did not settle inside its cell; point is the cell centre.
  bool resolved = true;
};

struct ZeroCounts {
  int real = 0;
  int complex_pairs = 0;
  int imaginary_pairs = 0;
};

struct ZeroReport {
  Rect region;
  // Sorted by (re, im).
  std::vector<FoundZero> zeros;
  ZeroCounts counts;
  // Winding count over the upper search rectangle.
  int winding_count = 0;
  int unresolved = 0;
};

// Localizes non-real zeros in the upper part of the region by recursive
// subdivision plus Newton refinement, mirrors them to conjugate pairs, and
// brackets the real zeros on [re_min, re_max].
ZeroReport find_complex_zeros(const NumericParams& p, std::optional<Rect> search = std::nullopt,
                              double tol = 1e-12);

}  // namespace chz
