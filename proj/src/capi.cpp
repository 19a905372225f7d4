#include "chz/chz.h"

#include <exception>
#include <new>
#include <optional>
#include <string>
#include <utility>

#include "classifier.hpp"
#include "error.hpp"
#include "hankel.hpp"
#include "numeric.hpp"
#include "verify.hpp"

struct chz_rational {
  chz::Rational value;
  std::string text;
};

struct chz_zeta_table {
  chz::ZetaTable table;
};

struct chz_classification {
  chz::ZeroClassification c;
};

struct chz_zero_report {
  chz::ZeroReport report;
};

struct chz_verify_report {
  chz::VerifyReport report;
};

namespace {

thread_local std::string last_error;

chz_status to_status(chz::Errc code) {
  using chz::Errc;
  switch (code) {
    case Errc::invalid_argument: return CHZ_E_INVALID_ARGUMENT;
    case Errc::parse_error: return CHZ_E_PARSE;
    case Errc::singular_parameter: return CHZ_E_SINGULAR_PARAMETER;
    case Errc::excluded_parameter: return CHZ_E_EXCLUDED_PARAMETER;
    case Errc::boundary_parameter: return CHZ_E_BOUNDARY_PARAMETER;
    case Errc::unsupported_ell: return CHZ_E_UNSUPPORTED_ELL;
    case Errc::degenerate_recursion: return CHZ_E_DEGENERATE_RECURSION;
    case Errc::singular_b: return CHZ_E_SINGULAR_B;
    case Errc::no_convergence: return CHZ_E_NO_CONVERGENCE;
    case Errc::contour_too_close: return CHZ_E_CONTOUR_TOO_CLOSE;
    case Errc::newton_diverged: return CHZ_E_NEWTON_DIVERGED;
    case Errc::verification_failed: return CHZ_E_VERIFICATION_FAILED;
  }
  return CHZ_E_INTERNAL;
}

template <class Body>
chz_status guarded(Body&& body) {
  try {
    body();
    return CHZ_OK;
  } catch (const chz::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CHZ_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CHZ_E_INTERNAL;
  }
}

chz::Rational parse(const char* text, const char* what) {
  if (text == nullptr) chz::fail(chz::Errc::invalid_argument, std::string(what) + " is null");
  try {
    return chz::Rational::parse(text);
  } catch (const chz::Error& e) {
    chz::fail(e.code(), std::string(what) + ": " + e.what());
  }
}

void require_out(const void* out) {
  if (out == nullptr) chz::fail(chz::Errc::invalid_argument, "output pointer is null");
}

chz_rational* wrap(chz::Rational value) {
  std::string text = value.str();
  return new chz_rational{std::move(value), std::move(text)};
}

chz::CoulombParams params(const char* L, const char* eta) { return {parse(L, "L"), parse(eta, "eta")}; }

}  // namespace

extern "C" {

const char* chz_version(void) { return "0.1.0"; }

const char* chz_status_name(chz_status status) {
  switch (status) {
    case CHZ_OK: return "OK";
    case CHZ_E_INVALID_ARGUMENT: return "InvalidArgument";
    case CHZ_E_PARSE: return "ParseError";
    case CHZ_E_SINGULAR_PARAMETER: return "SingularParameter";
    case CHZ_E_EXCLUDED_PARAMETER: return "ExcludedParameter";
    case CHZ_E_BOUNDARY_PARAMETER: return "BoundaryParameter";
    case CHZ_E_UNSUPPORTED_ELL: return "UnsupportedEll";
    case CHZ_E_DEGENERATE_RECURSION: return "DegenerateRecursion";
    case CHZ_E_SINGULAR_B: return "SingularB";
    case CHZ_E_NO_CONVERGENCE: return "NoConvergence";
    case CHZ_E_CONTOUR_TOO_CLOSE: return "ContourTooClose";
    case CHZ_E_NEWTON_DIVERGED: return "NewtonDiverged";
    case CHZ_E_VERIFICATION_FAILED: return "VerificationFailed";
    case CHZ_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* chz_last_error(void) { return last_error.c_str(); }

chz_status chz_rational_parse(const char* text, chz_rational** out) {
  return guarded([&] {
    require_out(out);
    *out = wrap(parse(text, "rational"));
  });
}

const char* chz_rational_str(const chz_rational* x) { return x ? x->text.c_str() : ""; }
int chz_rational_sign(const chz_rational* x) { return x ? x->value.sign() : 0; }
int chz_rational_equal(const chz_rational* a, const chz_rational* b) { return a && b && a->value == b->value; }
double chz_rational_to_double(const chz_rational* x) { return x ? x->value.to_double() : 0.0; }
void chz_rational_free(chz_rational* x) { delete x; }

chz_status chz_zeta_table_create(const char* L, const char* eta, int kmax, chz_zeta_table** out) {
  return guarded([&] {
    require_out(out);
    *out = new chz_zeta_table{chz::ZetaTable(params(L, eta), kmax)};
  });
}

chz_status chz_zeta_table_extend(chz_zeta_table* table, int kmax) {
  return guarded([&] {
    require_out(table);
    table->table.extend(kmax);
  });
}

int chz_zeta_table_kmax(const chz_zeta_table* table) { return table ? table->table.kmax() : 0; }

chz_status chz_zeta_table_get(const chz_zeta_table* table, int k, chz_rational** out) {
  return guarded([&] {
    require_out(table);
    require_out(out);
    *out = wrap(table->table.at(k));
  });
}

void chz_zeta_table_free(chz_zeta_table* table) { delete table; }

chz_status chz_rayleigh(const char* nu, int k, chz_rational** out) {
  return guarded([&] {
    require_out(out);
    *out = wrap(chz::rayleigh(parse(nu, "nu"), k));
  });
}

chz_status chz_bernoulli(int n, chz_rational** out) {
  return guarded([&] {
    require_out(out);
    *out = wrap(chz::bernoulli(n));
  });
}

chz_status chz_genocchi(int n, chz_rational** out) {
  return guarded([&] {
    require_out(out);
    *out = wrap(chz::genocchi(n));
  });
}

chz_status chz_hankel_det(const char* L, const char* eta, int n, chz_method method, chz_rational** out) {
  return guarded([&] {
    require_out(out);
    const chz::CoulombParams p = params(L, eta);
    switch (method) {
      case CHZ_METHOD_DIRECT: *out = wrap(chz::det_exact(chz::build_coulomb_hankel(p, n).matrix)); return;
      case CHZ_METHOD_CLOSED: *out = wrap(chz::det_coulomb_closed(p, n)); return;
      case CHZ_METHOD_MOMENTS: *out = wrap(chz::det_coulomb_via_moments(p, n)); return;
      default: chz::fail(chz::Errc::invalid_argument, "method not available for the Coulomb Hankel determinant");
    }
  });
}

chz_status chz_rayleigh_det(const char* nu, int ell, int n, chz_method method, chz_rational** out) {
  return guarded([&] {
    require_out(out);
    const chz::Rational v = parse(nu, "nu");
    switch (method) {
      case CHZ_METHOD_DIRECT: *out = wrap(chz::det_rayleigh_direct(v, ell, n)); return;
      case CHZ_METHOD_CLOSED:
        if (ell == 2) {
          *out = wrap(chz::det_rayleigh_ell2(v, n));
        } else if (ell == 3) {
          *out = wrap(chz::det_rayleigh_ell3(v, n));
        } else {
          *out = wrap(chz::det_rayleigh_closed(v, ell, n));
        }
        return;
      case CHZ_METHOD_DJ: *out = wrap(chz::det_rayleigh_dj(v, ell, n)); return;
      default: chz::fail(chz::Errc::invalid_argument, "method not available for the Rayleigh Hankel determinant");
    }
  });
}

chz_status chz_bernoulli_det(int ell, int n, chz_method method, chz_rational** out) {
  return guarded([&] {
    require_out(out);
    switch (method) {
      case CHZ_METHOD_DIRECT: *out = wrap(chz::bernoulli_hankel_det(ell, n).direct); return;
      case CHZ_METHOD_CLOSED: *out = wrap(chz::bernoulli_hankel_closed(ell, n)); return;
      default: chz::fail(chz::Errc::invalid_argument, "method not available for the Bernoulli Hankel determinant");
    }
  });
}

chz_status chz_genocchi_det(int ell, int n, chz_method method, chz_rational** out) {
  return guarded([&] {
    require_out(out);
    switch (method) {
      case CHZ_METHOD_DIRECT: *out = wrap(chz::genocchi_hankel_det(ell, n).direct); return;
      case CHZ_METHOD_CLOSED: *out = wrap(chz::genocchi_hankel_closed(ell, n)); return;
      default: chz::fail(chz::Errc::invalid_argument, "method not available for the Genocchi Hankel determinant");
    }
  });
}

chz_status chz_parity_split(const char* nu, int n, chz_rational* out[4]) {
  return guarded([&] {
    require_out(out);
    const chz::ParitySplit s = chz::parity_split_check(parse(nu, "nu"), n);
    out[0] = wrap(s.odd_lhs);
    out[1] = wrap(s.odd_rhs);
    out[2] = wrap(s.even_lhs);
    out[3] = wrap(s.even_rhs);
  });
}

chz_status chz_dd_product(const char* L, const char* eta, int n, chz_rational** out) {
  return guarded([&] {
    require_out(out);
    *out = wrap(chz::dd_product_closed(params(L, eta), n));
  });
}

chz_status chz_classify(const char* L, const char* eta, int nmax, chz_classification** out) {
  return guarded([&] {
    require_out(out);
    *out = new chz_classification{chz::classify(params(L, eta), nmax)};
  });
}

int chz_classification_pair_count(const chz_classification* c) { return c ? c->c.pair_count : 0; }
int chz_classification_all_real(const chz_classification* c) { return c ? c->c.all_real : 0; }
int chz_classification_predicted(const chz_classification* c) { return c ? c->c.predicted_pairs : 0; }
int chz_classification_nmax(const chz_classification* c) { return c ? c->c.nmax : 0; }

int chz_classification_sign(const chz_classification* c, int n) {
  if (!c || n < 0 || static_cast<std::size_t>(n) >= c->c.sign_sequence.size()) return 0;
  return c->c.sign_sequence[static_cast<std::size_t>(n)];
}

void chz_classification_free(chz_classification* c) { delete c; }

chz_status chz_hurwitz_counts(const char* nu, chz_hurwitz* out) {
  return guarded([&] {
    require_out(out);
    const chz::HurwitzCounts h = chz::hurwitz_counts(parse(nu, "nu"));
    out->complex_zeros = h.complex_zeros;
    out->imaginary_pair = h.imaginary_pair ? (*h.imaginary_pair ? 1 : 0) : -1;
  });
}

chz_status chz_phi(double L, double eta, chz_complex rho, double tol, chz_complex* out) {
  return guarded([&] {
    require_out(out);
    const chz::Complex v = chz::phi(chz::NumericParams{L, eta}, chz::Complex{rho.re, rho.im}, tol);
    *out = chz_complex{v.real(), v.imag()};
  });
}

chz_rect chz_default_search_region(double L) {
  const chz::Rect r = chz::default_search_region(L);
  return chz_rect{r.re_min, r.re_max, r.im_min, r.im_max};
}

chz_status chz_count_zeros(double L, double eta, chz_rect region, double tol, int* out) {
  return guarded([&] {
    require_out(out);
    *out = chz::count_zeros_region(chz::NumericParams{L, eta},
                                   chz::Rect{region.re_min, region.re_max, region.im_min, region.im_max}, tol);
  });
}

chz_status chz_find_zeros(double L, double eta, const chz_rect* region, double tol, chz_zero_report** out) {
  return guarded([&] {
    require_out(out);
    std::optional<chz::Rect> search;
    if (region) search = chz::Rect{region->re_min, region->re_max, region->im_min, region->im_max};
    *out = new chz_zero_report{chz::find_complex_zeros(chz::NumericParams{L, eta}, search, tol)};
  });
}

chz_rect chz_zero_report_region(const chz_zero_report* r) {
  if (!r) return chz_rect{0, 0, 0, 0};
  const chz::Rect& g = r->report.region;
  return chz_rect{g.re_min, g.re_max, g.im_min, g.im_max};
}

size_t chz_zero_report_size(const chz_zero_report* r) { return r ? r->report.zeros.size() : 0; }

chz_status chz_zero_report_get(const chz_zero_report* r, size_t index, chz_zero* out) {
  return guarded([&] {
    require_out(r);
    require_out(out);
    if (index >= r->report.zeros.size()) chz::fail(chz::Errc::invalid_argument, "zero index out of range");
    const chz::FoundZero& z = r->report.zeros[index];
    *out = chz_zero{chz_complex{z.point.real(), z.point.imag()}, z.multiplicity, z.real, z.purely_imaginary,
                    z.mirrored, z.resolved};
  });
}

int chz_zero_report_real_count(const chz_zero_report* r) { return r ? r->report.counts.real : 0; }
int chz_zero_report_complex_pairs(const chz_zero_report* r) { return r ? r->report.counts.complex_pairs : 0; }
int chz_zero_report_imaginary_pairs(const chz_zero_report* r) { return r ? r->report.counts.imaginary_pairs : 0; }
int chz_zero_report_winding_count(const chz_zero_report* r) { return r ? r->report.winding_count : 0; }
void chz_zero_report_free(chz_zero_report* r) { delete r; }

chz_status chz_verify_all(const char* config_path, int quick, chz_verify_report** out) {
  return guarded([&] {
    require_out(out);
    if (config_path == nullptr) chz::fail(chz::Errc::invalid_argument, "config path is null");
    *out = new chz_verify_report{chz::verify_all(config_path, quick != 0)};
  });
}

size_t chz_verify_report_families(const chz_verify_report* r) { return r ? r->report.families.size() : 0; }

namespace {
const chz::FamilyResult* family_at(const chz_verify_report* r, size_t i) {
  return (r && i < r->report.families.size()) ? &r->report.families[i] : nullptr;
}
}  // namespace

const char* chz_verify_report_name(const chz_verify_report* r, size_t family) {
  const auto* f = family_at(r, family);
  return f ? f->name.c_str() : "";
}

size_t chz_verify_report_checks(const chz_verify_report* r, size_t family) {
  const auto* f = family_at(r, family);
  return f ? f->checks : 0;
}

size_t chz_verify_report_failures(const chz_verify_report* r, size_t family) {
  const auto* f = family_at(r, family);
  return f ? f->failures : 0;
}

const char* chz_verify_report_detail(const chz_verify_report* r, size_t family) {
  const auto* f = family_at(r, family);
  return f ? f->detail.c_str() : "";
}

int chz_verify_report_passed(const chz_verify_report* r) { return r && r->report.passed(); }
void chz_verify_report_free(chz_verify_report* r) { delete r; }

}  // extern "C"
