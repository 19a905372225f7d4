// chz command-line front end. Talks to the library only through the C API.

#include <chz/chz.h>

#include <cmath>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

// A failed library call; carries the exit code it maps to.
struct CallFailed {
  chz_status status;
  std::string message;
};

void check(chz_status s) {
  if (s != CHZ_OK) throw CallFailed{s, std::string(chz_status_name(s)) + ": " + chz_last_error()};
}

struct RationalDeleter {
  void operator()(chz_rational* r) const { chz_rational_free(r); }
};
using RationalPtr = std::unique_ptr<chz_rational, RationalDeleter>;

std::string take(chz_rational* r) {
  RationalPtr owned(r);
  return chz_rational_str(owned.get());
}

// Exact dyadic value of a double as "p/q".
std::string exact_from_double(double x) {
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  long long digits = 0;
  int shift = 0;
  while (mantissa != std::floor(mantissa) && shift < 1100) {
    mantissa *= 2.0;
    ++shift;
  }
  digits = static_cast<long long>(mantissa);
  exponent -= shift;
  chz_rational* r = nullptr;
  std::string text = std::to_string(digits);
  if (exponent >= 0) {
    // Small exponents only arise for integral inputs here.
    text = std::to_string(static_cast<long long>(std::ldexp(static_cast<double>(digits), exponent)));
  } else {
    std::string den = "1";
    for (int i = 0; i < -exponent; ++i) {
      // decimal doubling of the denominator string
      int carry = 0;
      for (auto it = den.rbegin(); it != den.rend(); ++it) {
        const int d = (*it - '0') * 2 + carry;
        *it = static_cast<char>('0' + d % 10);
        carry = d / 10;
      }
      if (carry) den.insert(den.begin(), static_cast<char>('0' + carry));
    }
    text += "/" + den;
  }
  check(chz_rational_parse(text.c_str(), &r));
  return take(r);
}

// ---- output ---------------------------------------------------------------

void flatten(const json& node, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, rows);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", rows);
  } else if (node.is_string()) {
    rows.emplace_back(path, node.get<std::string>());
  } else {
    rows.emplace_back(path, node.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const json& record, const std::string& format) {
  if (format == "json") {
    std::cout << record.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(record, "", rows);
  if (format == "csv") {
    std::cout << "key,value\n";
    for (const auto& [k, v] : rows) std::cout << csv_field(k) << "," << csv_field(v) << "\n";
    return;
  }
  for (const auto& [k, v] : rows) std::cout << k << " = " << v << "\n";
}

json record(const std::string& command) {
  return json{{"command", command}, {"parameters", json::object()}, {"results", json::object()},
              {"verification", json::object()}};
}

bool all_verified(const json& rec) {
  for (const auto& [key, value] : rec.at("verification").items())
    if (value.is_boolean() && !value.get<bool>()) return false;
  return true;
}

chz_method parse_method(const std::string& m) {
  if (m == "direct") return CHZ_METHOD_DIRECT;
  if (m == "closed") return CHZ_METHOD_CLOSED;
  if (m == "dj") return CHZ_METHOD_DJ;
  if (m == "moments") return CHZ_METHOD_MOMENTS;
  throw CallFailed{CHZ_E_INVALID_ARGUMENT, "unknown method '" + m + "'"};
}

bool reciprocal_integer(const std::string& r) {
  const auto slash = r.find('/');
  const std::string num = r.substr(0, slash);
  return num == "1" || num == "-1";
}

// ---- commands ---------------------------------------------------------------

struct Options {
  std::string L = "0", eta = "0", nu = "1";
  int kmax = 4, n = 1, ell = 0, k = 1;
  std::string nmax_text = "auto";
  std::string method = "direct";
  bool verify = false, quick = false;
  double fL = 0.0, feta = 0.0, re = 0.0, im = 0.0, tol = 1e-12;
  double re_min = NAN, re_max = NAN, im_min = NAN, im_max = NAN;
  std::string config = CHZ_DEFAULT_VERIFY_CONFIG;
};

json cmd_zeta(const Options& o) {
  json rec = record("zeta");
  rec["parameters"] = {{"L", o.L}, {"eta", o.eta}, {"kmax", o.kmax}};
  chz_zeta_table* raw = nullptr;
  check(chz_zeta_table_create(o.L.c_str(), o.eta.c_str(), o.kmax, &raw));
  std::unique_ptr<chz_zeta_table, decltype(&chz_zeta_table_free)> table(raw, chz_zeta_table_free);
  json zeta = json::object();
  for (int k = 2; k <= o.kmax; ++k) {
    chz_rational* r = nullptr;
    check(chz_zeta_table_get(table.get(), k, &r));
    zeta[std::to_string(k)] = take(r);
  }
  rec["results"]["zeta"] = zeta;
  return rec;
}

json cmd_hankel_det(const Options& o) {
  json rec = record("hankel-det");
  rec["parameters"] = {{"L", o.L}, {"eta", o.eta}, {"n", o.n}, {"verify", o.verify}};
  chz_rational* r = nullptr;
  check(chz_hankel_det(o.L.c_str(), o.eta.c_str(), o.n, CHZ_METHOD_DIRECT, &r));
  const std::string direct = take(r);
  rec["results"]["det"] = direct;
  if (o.verify) {
    check(chz_hankel_det(o.L.c_str(), o.eta.c_str(), o.n, CHZ_METHOD_CLOSED, &r));
    const std::string closed = take(r);
    check(chz_hankel_det(o.L.c_str(), o.eta.c_str(), o.n, CHZ_METHOD_MOMENTS, &r));
    const std::string moments = take(r);
    rec["results"]["closed"] = closed;
    rec["results"]["moments"] = moments;
    rec["verification"]["routes_equal"] = direct == closed && closed == moments;
  }
  return rec;
}

json cmd_rayleigh_det(const Options& o) {
  json rec = record("rayleigh-det");
  rec["parameters"] = {{"nu", o.nu}, {"ell", o.ell}, {"n", o.n}, {"method", o.method}, {"verify", o.verify}};
  chz_rational* r = nullptr;
  check(chz_rayleigh_det(o.nu.c_str(), o.ell, o.n, parse_method(o.method), &r));
  const std::string value = take(r);
  rec["results"]["det"] = value;
  if (o.verify) {
    check(chz_rayleigh_det(o.nu.c_str(), o.ell, o.n, CHZ_METHOD_DIRECT, &r));
    const std::string direct = take(r);
    check(chz_rayleigh_det(o.nu.c_str(), o.ell, o.n, CHZ_METHOD_DJ, &r));
    const std::string dj = take(r);
    rec["results"]["direct"] = direct;
    rec["results"]["dj"] = dj;
    bool equal = direct == dj && direct == value;
    if (o.ell <= 3) {
      check(chz_rayleigh_det(o.nu.c_str(), o.ell, o.n, CHZ_METHOD_CLOSED, &r));
      const std::string closed = take(r);
      rec["results"]["closed"] = closed;
      equal = equal && closed == direct;
    }
    rec["verification"]["routes_equal"] = equal;
  }
  return rec;
}

json cmd_special_det(const Options& o, bool genocchi) {
  json rec = record(genocchi ? "genocchi-det" : "bernoulli-det");
  rec["parameters"] = {{"ell", o.ell}, {"n", o.n}};
  auto fn = genocchi ? chz_genocchi_det : chz_bernoulli_det;
  chz_rational* r = nullptr;
  check(fn(o.ell, o.n, CHZ_METHOD_CLOSED, &r));
  const std::string closed = take(r);
  const chz_status s = fn(o.ell, o.n, CHZ_METHOD_DIRECT, &r);
  if (s == CHZ_E_VERIFICATION_FAILED) {
    rec["results"]["closed"] = closed;
    rec["verification"]["closed_form_equal"] = false;
    rec["verification"]["detail"] = chz_last_error();
    return rec;
  }
  check(s);
  const std::string direct = take(r);
  rec["results"]["direct"] = direct;
  rec["results"]["closed"] = closed;
  rec["verification"]["closed_form_equal"] = direct == closed;
  rec["verification"]["reciprocal_integer"] = reciprocal_integer(direct);
  return rec;
}

json cmd_classify(const Options& o) {
  json rec = record("classify");
  int nmax = 0;
  if (o.nmax_text != "auto") {
    try {
      std::size_t used = 0;
      nmax = std::stoi(o.nmax_text, &used);
      if (used != o.nmax_text.size() || nmax < 1) throw std::invalid_argument("nmax");
    } catch (const std::exception&) {
      throw CallFailed{CHZ_E_INVALID_ARGUMENT, "--nmax must be a positive integer or 'auto'"};
    }
  }
  rec["parameters"] = {{"L", o.L}, {"eta", o.eta}, {"nmax", o.nmax_text}};
  chz_classification* raw = nullptr;
  check(chz_classify(o.L.c_str(), o.eta.c_str(), nmax, &raw));
  std::unique_ptr<chz_classification, decltype(&chz_classification_free)> c(raw, chz_classification_free);
  json signs = json::array();
  for (int n = 0; n <= chz_classification_nmax(c.get()); ++n) signs.push_back(chz_classification_sign(c.get(), n));
  rec["results"] = {{"pair_count", chz_classification_pair_count(c.get())},
                    {"all_real", chz_classification_all_real(c.get()) != 0},
                    {"predicted_pairs", chz_classification_predicted(c.get())},
                    {"nmax", chz_classification_nmax(c.get())},
                    {"sign_sequence", signs}};
  rec["verification"]["matches_floor_rule"] =
      chz_classification_pair_count(c.get()) == chz_classification_predicted(c.get());
  return rec;
}

json zero_json(const chz_zero& z) {
  std::string kind = z.is_real ? "real" : (z.purely_imaginary ? "imaginary" : "complex");
  return json{{"re", z.point.re},           {"im", z.point.im},           {"multiplicity", z.multiplicity},
              {"kind", kind},               {"mirrored", z.mirrored != 0}, {"resolved", z.resolved != 0}};
}

json cmd_find_zeros(const Options& o) {
  json rec = record("find-zeros");
  chz_rect region = chz_default_search_region(o.fL);
  if (!std::isnan(o.re_min)) region.re_min = o.re_min;
  if (!std::isnan(o.re_max)) region.re_max = o.re_max;
  if (!std::isnan(o.im_min)) region.im_min = o.im_min;
  if (!std::isnan(o.im_max)) region.im_max = o.im_max;
  rec["parameters"] = {{"L", o.fL}, {"eta", o.feta}, {"tol", o.tol}};
  chz_zero_report* raw = nullptr;
  check(chz_find_zeros(o.fL, o.feta, &region, o.tol, &raw));
  std::unique_ptr<chz_zero_report, decltype(&chz_zero_report_free)> rep(raw, chz_zero_report_free);
  const chz_rect used = chz_zero_report_region(rep.get());
  json zeros = json::array();
  for (std::size_t i = 0; i < chz_zero_report_size(rep.get()); ++i) {
    chz_zero z;
    check(chz_zero_report_get(rep.get(), i, &z));
    zeros.push_back(zero_json(z));
  }
  const int pairs = chz_zero_report_complex_pairs(rep.get());
  rec["results"] = {
      {"region", {{"re_min", used.re_min}, {"re_max", used.re_max}, {"im_min", used.im_min}, {"im_max", used.im_max}}},
      {"zeros", zeros},
      {"counts",
       {{"real", chz_zero_report_real_count(rep.get())},
        {"complex_pairs", pairs},
        {"imaginary_pairs", chz_zero_report_imaginary_pairs(rep.get())}}},
      {"winding_count", chz_zero_report_winding_count(rep.get())}};

  // Cross-check against the algebraic count on the exact dyadic values of L, eta.
  const std::string L = exact_from_double(o.fL);
  const std::string eta = exact_from_double(o.feta);
  chz_classification* c = nullptr;
  if (chz_classify(L.c_str(), eta.c_str(), 0, &c) == CHZ_OK) {
    const int m = chz_classification_pair_count(c);
    chz_classification_free(c);
    const chz_rect def = chz_default_search_region(o.fL);
    const bool covers_default = used.re_min <= def.re_min && used.re_max >= def.re_max &&
                                used.im_min <= 0.0 && used.im_max >= def.im_max;
    rec["results"]["algebraic_pairs"] = m;
    if (covers_default) rec["verification"]["pairs_match_classification"] = pairs == m;
  }
  return rec;
}

json cmd_verify_all(const Options& o) {
  json rec = record("verify-all");
  rec["parameters"] = {{"quick", o.quick}, {"config", o.config}};
  chz_verify_report* raw = nullptr;
  check(chz_verify_all(o.config.c_str(), o.quick ? 1 : 0, &raw));
  std::unique_ptr<chz_verify_report, decltype(&chz_verify_report_free)> rep(raw, chz_verify_report_free);
  json families = json::object();
  for (std::size_t i = 0; i < chz_verify_report_families(rep.get()); ++i) {
    const std::string name = chz_verify_report_name(rep.get(), i);
    const std::size_t failures = chz_verify_report_failures(rep.get(), i);
    families[name] = {{"checks", chz_verify_report_checks(rep.get(), i)},
                      {"failures", failures},
                      {"status", failures == 0 ? "pass" : "fail"}};
    if (failures) families[name]["detail"] = chz_verify_report_detail(rep.get(), i);
    rec["verification"][name] = failures == 0;
  }
  rec["results"]["families"] = families;
  return rec;
}

json cmd_rayleigh(const Options& o) {
  json rec = record("rayleigh");
  rec["parameters"] = {{"nu", o.nu}, {"k", o.k}};
  chz_rational* r = nullptr;
  check(chz_rayleigh(o.nu.c_str(), o.k, &r));
  rec["results"]["sigma"] = take(r);
  return rec;
}

json cmd_number(const Options& o, bool genocchi) {
  json rec = record(genocchi ? "genocchi" : "bernoulli");
  rec["parameters"] = {{"n", o.n}};
  chz_rational* r = nullptr;
  check(genocchi ? chz_genocchi(o.n, &r) : chz_bernoulli(o.n, &r));
  rec["results"][genocchi ? "G_2n" : "B_2n"] = take(r);
  return rec;
}

json cmd_dd_product(const Options& o) {
  json rec = record("dd-product");
  rec["parameters"] = {{"L", o.L}, {"eta", o.eta}, {"n", o.n}};
  chz_rational* r = nullptr;
  check(chz_dd_product(o.L.c_str(), o.eta.c_str(), o.n, &r));
  RationalPtr owned(r);
  rec["results"] = {{"dd_product", chz_rational_str(owned.get())}, {"sign", chz_rational_sign(owned.get())}};
  return rec;
}

json cmd_parity_split(const Options& o) {
  json rec = record("parity-split");
  rec["parameters"] = {{"nu", o.nu}, {"n", o.n}};
  chz_rational* out[4] = {nullptr, nullptr, nullptr, nullptr};
  check(chz_parity_split(o.nu.c_str(), o.n, out));
  const std::string odd_l = take(out[0]), odd_r = take(out[1]), even_l = take(out[2]), even_r = take(out[3]);
  rec["results"] = {{"odd_lhs", odd_l}, {"odd_rhs", odd_r}, {"even_lhs", even_l}, {"even_rhs", even_r}};
  rec["verification"] = {{"odd_identity", odd_l == odd_r}, {"even_identity", even_l == even_r}};
  return rec;
}

json cmd_hurwitz(const Options& o) {
  json rec = record("hurwitz");
  rec["parameters"] = {{"nu", o.nu}};
  chz_hurwitz h;
  check(chz_hurwitz_counts(o.nu.c_str(), &h));
  rec["results"]["complex_zeros"] = h.complex_zeros;
  rec["results"]["imaginary_pair"] = h.imaginary_pair < 0 ? json("n/a") : json(h.imaginary_pair == 1);
  return rec;
}

json cmd_phi(const Options& o) {
  json rec = record("phi");
  rec["parameters"] = {{"L", o.fL}, {"eta", o.feta}, {"re", o.re}, {"im", o.im}, {"tol", o.tol}};
  chz_complex v;
  check(chz_phi(o.fL, o.feta, chz_complex{o.re, o.im}, o.tol, &v));
  rec["results"]["phi"] = {{"re", v.re}, {"im", v.im}};
  return rec;
}

json cmd_count_zeros(const Options& o) {
  json rec = record("count-zeros");
  const chz_rect region{o.re_min, o.re_max, o.im_min, o.im_max};
  rec["parameters"] = {{"L", o.fL},           {"eta", o.feta},          {"re_min", o.re_min},
                       {"re_max", o.re_max}, {"im_min", o.im_min}, {"im_max", o.im_max}};
  int count = 0;
  check(chz_count_zeros(o.fL, o.feta, region, o.tol, &count));
  rec["results"]["zeros"] = count;
  return rec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Coulomb spectral zeta values, Hankel determinant identities and zero classification"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  Options o;

  auto exact_L = [&](CLI::App* s) {
    s->add_option("--L", o.L, "Angular momentum L as p/q")->required();
    s->add_option("--eta", o.eta, "Sommerfeld parameter eta as p/q")->required();
  };
  auto float_L = [&](CLI::App* s) {
    s->add_option("--L", o.fL, "Angular momentum L")->required();
    s->add_option("--eta", o.feta, "Sommerfeld parameter eta")->required();
  };

  auto* zeta = app.add_subcommand("zeta", "Spectral zeta values zeta_L(2..kmax)");
  exact_L(zeta);
  zeta->add_option("--kmax", o.kmax, "Largest index")->required();

  auto* hankel = app.add_subcommand("hankel-det", "det H_n(L, eta)");
  exact_L(hankel);
  hankel->add_option("--n", o.n, "Matrix size")->required();
  hankel->add_flag("--verify", o.verify, "Also evaluate the closed product and the moment route");

  auto* rdet = app.add_subcommand("rayleigh-det", "det H_n^(ell)(nu) of Rayleigh function values");
  rdet->add_option("--nu", o.nu, "Bessel order nu as p/q")->required();
  rdet->add_option("--ell", o.ell, "Shift ell >= 0")->required();
  rdet->add_option("--n", o.n, "Matrix size")->required();
  rdet->add_option("--method", o.method, "direct|closed|dj")->check(CLI::IsMember({"direct", "closed", "dj"}));
  rdet->add_flag("--verify", o.verify, "Compare against the other routes");

  auto* bdet = app.add_subcommand("bernoulli-det", "Hankel determinant of B_{2m}/(2m)!");
  auto* gdet = app.add_subcommand("genocchi-det", "Hankel determinant of G_{2m}/(2m)!");
  for (auto* s : {bdet, gdet}) {
    s->add_option("--ell", o.ell, "ell in {0,1}")->required();
    s->add_option("--n", o.n, "Matrix size")->required();
  }

  auto* cls = app.add_subcommand("classify", "Count complex-conjugate zero pairs of F_L(eta, .)");
  exact_L(cls);
  cls->add_option("--nmax", o.nmax_text, "Last index of the sign sequence, or 'auto'");

  auto* fz = app.add_subcommand("find-zeros", "Locate the zeros of phi_L(eta, .) numerically");
  float_L(fz);
  fz->add_option("--re-min", o.re_min);
  fz->add_option("--re-max", o.re_max);
  fz->add_option("--im-min", o.im_min);
  fz->add_option("--im-max", o.im_max);
  fz->add_option("--tol", o.tol, "Newton/series tolerance");

  auto* va = app.add_subcommand("verify-all", "Run the identity verification grid");
  va->add_flag("--quick", o.quick, "Use the reduced grid");
  va->add_option("--config", o.config, "Grid config (JSON)");

  auto* ray = app.add_subcommand("rayleigh", "Rayleigh function sigma_{2k}(nu)");
  ray->add_option("--nu", o.nu, "nu as p/q")->required();
  ray->add_option("--k", o.k, "Order index k >= 1")->required();

  auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_{2n}");
  auto* geno = app.add_subcommand("genocchi", "Genocchi number G_{2n}");
  for (auto* s : {bern, geno}) s->add_option("--n", o.n, "n >= 1")->required();

  auto* dd = app.add_subcommand("dd-product", "D_{n-1} D_n from the closed product");
  exact_L(dd);
  dd->add_option("--n", o.n, "n >= 0")->required();

  auto* ps = app.add_subcommand("parity-split", "Odd/even splitting of det H_m(nu-1/2, 0)");
  ps->add_option("--nu", o.nu, "nu as p/q")->required();
  ps->add_option("--n", o.n, "n >= 1")->required();

  auto* hw = app.add_subcommand("hurwitz", "Complex-zero count of J_nu");
  hw->add_option("--nu", o.nu, "nu as p/q")->required();

  auto* ph = app.add_subcommand("phi", "Evaluate phi_L(eta, rho)");
  float_L(ph);
  ph->add_option("--re", o.re)->required();
  ph->add_option("--im", o.im)->required();
  ph->add_option("--tol", o.tol);

  auto* cz = app.add_subcommand("count-zeros", "Argument-principle zero count in a rectangle");
  float_L(cz);
  cz->add_option("--re-min", o.re_min)->required();
  cz->add_option("--re-max", o.re_max)->required();
  cz->add_option("--im-min", o.im_min)->required();
  cz->add_option("--im-max", o.im_max)->required();
  cz->add_option("--tol", o.tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    json rec;
    if (*zeta) rec = cmd_zeta(o);
    else if (*hankel) rec = cmd_hankel_det(o);
    else if (*rdet) rec = cmd_rayleigh_det(o);
    else if (*bdet) rec = cmd_special_det(o, false);
    else if (*gdet) rec = cmd_special_det(o, true);
    else if (*cls) rec = cmd_classify(o);
    else if (*fz) rec = cmd_find_zeros(o);
    else if (*va) rec = cmd_verify_all(o);
    else if (*ray) rec = cmd_rayleigh(o);
    else if (*bern) rec = cmd_number(o, false);
    else if (*geno) rec = cmd_number(o, true);
    else if (*dd) rec = cmd_dd_product(o);
    else if (*ps) rec = cmd_parity_split(o);
    else if (*hw) rec = cmd_hurwitz(o);
    else if (*ph) rec = cmd_phi(o);
    else if (*cz) rec = cmd_count_zeros(o);
    emit(rec, format);
    if (!all_verified(rec)) {
      std::cerr << "identity verification failed\n";
      return kExitVerification;
    }
    return kExitOk;
  } catch (const CallFailed& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.status == CHZ_E_VERIFICATION_FAILED ? kExitVerification : kExitUsage;
  }
}
