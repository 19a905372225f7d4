#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "classifier.hpp"
#include "error.hpp"
#include "hankel.hpp"
#include "numeric.hpp"

namespace chz {

namespace {

using nlohmann::json;

class Family {
 public:
  explicit Family(std::string name) { result_.name = std::move(name); }

  // Runs one check; an exception counts as a failure with its message.
  void check(const std::string& label, const std::function<bool(std::string&)>& body) {
    ++result_.checks;
    std::string why;
    bool ok = false;
    try {
      ok = body(why);
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (!ok) {
      ++result_.failures;
      if (result_.detail.empty()) result_.detail = label + (why.empty() ? "" : ": " + why);
    }
  }

  FamilyResult result() const { return result_; }

 private:
  FamilyResult result_;
};

std::vector<Rational> rationals(const json& arr) {
  std::vector<Rational> out;
  for (const auto& v : arr) out.push_back(Rational::parse(v.get<std::string>()));
  return out;
}

std::string at(const Rational& L, const Rational& eta, int n) {
  return "L=" + L.str() + " eta=" + eta.str() + " n=" + std::to_string(n);
}

FamilyResult coulomb_family(const json& g) {
  Family f("coulomb_determinant");
  const int n_max = g.at("n_max").get<int>();
  for (const auto& L : rationals(g.at("L")))
    for (const auto& eta : rationals(g.at("eta")))
      for (int n = 1; n <= n_max; ++n)
        f.check(at(L, eta, n), [&](std::string& why) {
          const CoulombDetRoutes r = coulomb_det_routes(CoulombParams{L, eta}, n);
          if (!r.agree()) why = "direct " + r.direct.str() + " closed " + r.closed.str() + " moments " + r.moments.str();
          return r.agree();
        });
  return f.result();
}

FamilyResult rayleigh_family(const json& g) {
  Family f("rayleigh_closed_ell01");
  const int n_max = g.at("n_max").get<int>();
  for (const auto& nu : rationals(g.at("nu")))
    for (int ell = 0; ell <= 1; ++ell)
      for (int n = 1; n <= n_max; ++n)
        f.check("nu=" + nu.str() + " ell=" + std::to_string(ell) + " n=" + std::to_string(n), [&](std::string& why) {
          const Rational direct = det_rayleigh_direct(nu, ell, n);
          const Rational closed = det_rayleigh_closed(nu, ell, n);
          if (direct != closed) why = direct.str() + " vs " + closed.str();
          return direct == closed;
        });
  return f.result();
}

FamilyResult rayleigh_ell23_family(const json& g) {
  Family f("rayleigh_closed_ell23");
  const int n_max = g.at("n_max").get<int>();
  const auto nus = rationals(g.at("nu"));
  for (const auto& nu : nus)
    for (int n = 1; n <= n_max; ++n) {
      const std::string where = "nu=" + nu.str() + " n=" + std::to_string(n);
      f.check("ell=2 " + where, [&](std::string&) { return det_rayleigh_ell2(nu, n) == det_rayleigh_direct(nu, 2, n); });
      f.check("ell=3 " + where, [&](std::string&) { return det_rayleigh_ell3(nu, n) == det_rayleigh_direct(nu, 3, n); });
    }
  f.check("ell=2 failure witness", [&](std::string& why) {
    for (const auto& nu : nus)
      for (int n = 1; n <= n_max; ++n) {
        const EllFailureWitness w = ell_failure_witness(nu, 2, n);
        if (w.formula != w.direct) return true;
      }
    why = "the ell in {0,1} product matched every ell=2 determinant";
    return false;
  });
  return f.result();
}

FamilyResult dj_family(const json& g) {
  Family f("desnanot_jacobi");
  const int ell_max = g.at("ell_max").get<int>();
  const int n_max = g.at("n_max").get<int>();
  for (const auto& nu : rationals(g.at("nu")))
    for (int ell = 0; ell <= ell_max; ++ell)
      for (int n = 1; n <= n_max; ++n)
        f.check("nu=" + nu.str() + " ell=" + std::to_string(ell) + " n=" + std::to_string(n),
                [&](std::string&) { return det_rayleigh_dj(nu, ell, n) == det_rayleigh_direct(nu, ell, n); });
  return f.result();
}

bool unit_numerator(const Rational& x) { return x.numerator() == 1 || x.numerator() == -1; }

FamilyResult bernoulli_genocchi_family(const json& g) {
  Family f("bernoulli_genocchi");
  const int n_max = g.at("n_max").get<int>();
  for (int ell = 0; ell <= 1; ++ell)
    for (int n = 1; n <= n_max; ++n) {
      const std::string where = "ell=" + std::to_string(ell) + " n=" + std::to_string(n);
      f.check("bernoulli " + where, [&](std::string& why) {
        const SpecialHankelDet d = bernoulli_hankel_det(ell, n);
        const bool ok = unit_numerator(d.direct) && bernoulli_hankel_det_via_scaling(ell, n) == d.direct;
        if (!ok) why = d.direct.str();
        return ok;
      });
      f.check("genocchi " + where, [&](std::string& why) {
        const SpecialHankelDet d = genocchi_hankel_det(ell, n);
        const bool ok = unit_numerator(d.direct) && genocchi_hankel_det_via_scaling(ell, n) == d.direct;
        if (!ok) why = d.direct.str();
        return ok;
      });
    }
  for (int n = 1; n <= 2 * n_max; ++n)
    f.check("genocchi bridges n=" + std::to_string(n), [&](std::string&) { return genocchi(n) == genocchi_via_rayleigh(n); });
  return f.result();
}

FamilyResult sign_family(const json& coulomb, const json& g) {
  Family f("sign_products");
  const int n_max = g.at("n_max").get<int>();
  for (const auto& L : rationals(coulomb.at("L")))
    for (const auto& eta : rationals(coulomb.at("eta"))) {
      const CoulombParams p{L, eta};
      Rational prev(1);  // det H_0
      for (int n = 0; n <= n_max; ++n) {
        f.check(at(L, eta, n), [&](std::string& why) {
          const Rational next = det_exact(build_coulomb_hankel(p, n + 1).matrix);
          const Rational dd = dd_product_closed(p, n);
          const int expected_sign = (Rational(2) * L + Rational(2 * n + 3)).sign();
          const bool ok = dd == prev * next && dd.sign() == expected_sign;
          if (!ok) why = dd.str() + " vs " + (prev * next).str();
          prev = next;
          return ok;
        });
      }
    }
  return f.result();
}

FamilyResult parity_family(const json& g) {
  Family f("parity_split");
  const int n_max = g.at("n_max").get<int>();
  for (const auto& nu : rationals(g.at("nu")))
    for (int n = 1; n <= n_max; ++n)
      f.check("nu=" + nu.str() + " n=" + std::to_string(n), [&](std::string&) { return parity_split_check(nu, n).holds(); });
  return f.result();
}

FamilyResult classification_family(const json& g) {
  Family f("classification");
  const json& real = g.at("all_real");
  for (const auto& L : rationals(real.at("L")))
    for (const auto& eta : rationals(real.at("eta")))
      f.check("L=" + L.str() + " eta=" + eta.str(), [&](std::string& why) {
        const ZeroClassification c = classify(CoulombParams{L, eta});
        why = "m=" + std::to_string(c.pair_count);
        return c.pair_count == 0 && c.all_real;
      });
  for (const auto& item : g.at("complex")) {
    const Rational L = Rational::parse(item.at("L").get<std::string>());
    const Rational eta = Rational::parse(item.at("eta").get<std::string>());
    const int pairs = item.at("pairs").get<int>();
    f.check("L=" + L.str() + " eta=" + eta.str(), [&](std::string& why) {
      const ZeroClassification c = classify(CoulombParams{L, eta});
      why = "m=" + std::to_string(c.pair_count);
      return c.pair_count == pairs && c.pair_count == predicted_pair_count(L);
    });
  }
  return f.result();
}

FamilyResult numeric_family(const json& g) {
  Family f("numeric_zeros");
  const double tolerance = g.at("tolerance").get<double>();
  for (const auto& item : g.at("cases")) {
    const NumericParams p{item.at("L").get<double>(), item.at("eta").get<double>()};
    const std::string where = "L=" + std::to_string(p.L) + " eta=" + std::to_string(p.eta);
    std::optional<ZeroReport> found;
    std::string error;
    try {
      found = find_complex_zeros(p);
    } catch (const std::exception& e) {
      error = e.what();
    }
    f.check(where + " search", [&](std::string& why) {
      why = error;
      return found.has_value();
    });
    if (!found) continue;
    const ZeroReport& report = *found;
    f.check(where + " pair count", [&](std::string& why) {
      why = std::to_string(report.counts.complex_pairs) + " pairs found";
      return static_cast<std::size_t>(report.counts.complex_pairs) == item.at("zeros").size();
    });
    for (const auto& expected : item.at("zeros")) {
      const Complex target{expected.at(0).get<double>(), expected.at(1).get<double>()};
      f.check(where + " zero near " + std::to_string(target.real()) + "+" + std::to_string(target.imag()) + "i",
              [&](std::string&) {
                return std::any_of(report.zeros.begin(), report.zeros.end(), [&](const FoundZero& z) {
                  return !z.mirrored && std::abs(z.point.real() - target.real()) <= tolerance &&
                         std::abs(z.point.imag() - target.imag()) <= tolerance;
                });
              });
    }
  }
  return f.result();
}

FamilyResult hurwitz_family(const json& g) {
  Family f("hurwitz");
  for (const auto& nu : rationals(g.at("nu")))
    f.check("nu=" + nu.str(), [&](std::string& why) {
      const HurwitzCounts h = hurwitz_counts(nu);
      const ZeroReport report = find_complex_zeros(NumericParams{nu.to_double() - 0.5, 0.0});
      const bool imaginary_ok = h.imaginary_pair.value_or(false) == (report.counts.imaginary_pairs == 1) &&
                                report.counts.imaginary_pairs <= 1;
      why = "numeric pairs " + std::to_string(report.counts.complex_pairs) + ", algebraic zeros " +
            std::to_string(h.complex_zeros);
      return 2 * report.counts.complex_pairs == h.complex_zeros && imaginary_ok;
    });
  return f.result();
}

}  // namespace

bool VerifyReport::passed() const {
  return !families.empty() &&
         std::all_of(families.begin(), families.end(), [](const FamilyResult& r) { return r.passed(); });
}

VerifyReport verify_grid(const std::string& grid_json) {
  json g;
  try {
    g = json::parse(grid_json);
  } catch (const json::exception& e) {
    fail(Errc::invalid_argument, std::string("malformed verification grid: ") + e.what());
  }
  VerifyReport report;
  try {
    report.families.push_back(coulomb_family(g.at("coulomb")));
    report.families.push_back(rayleigh_family(g.at("rayleigh")));
    report.families.push_back(rayleigh_ell23_family(g.at("rayleigh_ell23")));
    report.families.push_back(dj_family(g.at("desnanot_jacobi")));
    report.families.push_back(bernoulli_genocchi_family(g.at("bernoulli_genocchi")));
    report.families.push_back(sign_family(g.at("coulomb"), g.at("sign_products")));
    report.families.push_back(parity_family(g.at("parity_split")));
    report.families.push_back(classification_family(g.at("classification")));
    report.families.push_back(numeric_family(g.at("numeric_zeros")));
    report.families.push_back(hurwitz_family(g.at("hurwitz")));
  } catch (const json::exception& e) {
    fail(Errc::invalid_argument, std::string("malformed verification grid: ") + e.what());
  }
  return report;
}

VerifyReport verify_all(const std::string& config_path, bool quick) {
  std::ifstream in(config_path);
  if (!in) fail(Errc::invalid_argument, "cannot open verification config '" + config_path + "'");
  json config;
  try {
    config = json::parse(in);
  } catch (const json::exception& e) {
    fail(Errc::invalid_argument, std::string("malformed verification config: ") + e.what());
  }
  const char* key = quick ? "quick" : "full";
  if (!config.contains(key)) fail(Errc::invalid_argument, std::string("verification config lacks '") + key + "' grid");
  return verify_grid(config.at(key).dump());
}

}  // namespace chz
