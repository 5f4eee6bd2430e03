#include "dunkl/cli.hpp"

#include "dunkl/harmonic.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/oracle.hpp"
#include "dunkl/spherical.hpp"
#include "dunkl/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dunkl {

namespace {

using Json = nlohmann::ordered_json;

struct Args {
  std::string group = "z2^2";
  std::string kappa;
  std::string poly, p, q = "1", f, phi, xi, radial, families, out_path;
  unsigned degree = 0, n = 0, terms = 0, max_degree = 6;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000000;
  bool json = true;
};

RationalVector parse_rational_list(const std::string& text) {
  RationalVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    out.push_back(parse_rational(std::string_view(text).substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

DunklContext context_from(const Args& a) {
  const GroupSpec spec = parse_group(a.group);
  RationalVector kappa =
      a.kappa.empty() ? RationalVector(spec.orbit_count(), Rational(0)) : parse_rational_list(a.kappa);
  return make_context(spec, kappa);
}

RationalVector parse_xi(const std::string& text, std::size_t d) {
  if (text.size() >= 2 && text[0] == 'e') {
    const std::string idx = text.substr(1);
    if (idx.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument("bad --xi '" + text + "'");
    const auto axis = std::stoul(idx);
    if (axis < 1 || axis > d) throw std::invalid_argument("--xi axis out of range");
    RationalVector xi(d, Rational(0));
    xi[axis - 1] = 1;
    return xi;
  }
  if (text.rfind("v:", 0) == 0) {
    auto xi = parse_rational_list(text.substr(2));
    if (xi.size() != d) throw std::invalid_argument("--xi needs " + std::to_string(d) + " components");
    return xi;
  }
  throw std::invalid_argument("--xi must be eK or v:c1,...,cd");
}

Poly poly_arg(const std::string& text, const char* flag, std::size_t d) {
  if (text.empty()) throw std::invalid_argument(std::string(flag) + " is required");
  return parse_poly(text, d);
}

Json check_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["group"] = c.group;
  j["kappa"] = c.kappa;
  j["degrees"] = c.degrees;
  j["status"] = c.passed ? "pass" : "fail";
  j["cases"] = c.cases;
  if (!c.passed) j["counterexample"] = c.counterexample;
  return j;
}

Json report_json(const VerifyReport& report, const VerifyOptions& options) {
  Json summary;
  summary["checks"] = report.checks.size();
  summary["passed"] = report.passed();
  summary["failed"] = report.failed();
  summary["check_groups"] = report.check_groups().size();
  summary["max_degree"] = options.max_degree;
  summary["seed"] = options.seed;
  summary["mc_samples"] = options.mc_samples;
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(check_json(c));
  Json out;
  out["summary"] = summary;
  out["checks"] = checks;
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Dunkl-operator toolkit", "dunkl"};
  app.require_subcommand(1);
  Args a;

  auto context_opts = [&](CLI::App* sub) {
    sub->add_option("--group", a.group, "z2^D, aN, bD or dD")->capture_default_str();
    sub->add_option("--kappa", a.kappa, "comma-separated multiplicities, one per orbit (default 0)");
    sub->add_flag("--json", a.json, "JSON output (the only format)");
  };
  auto with = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    context_opts(sub);
    return sub;
  };

  auto* apply = with("apply", "Dunkl operator D_xi p");
  apply->add_option("--xi", a.xi, "eK or v:c1,...,cd")->required();
  apply->add_option("--poly", a.poly)->required();

  auto* lap = with("laplacian", "Dunkl Laplacian");
  lap->add_option("--poly", a.poly)->required();

  auto* pair = with("pair", "<p, q>_kappa = (p(D) q)(0)");
  pair->add_option("--p", a.p)->required();
  pair->add_option("--q", a.q)->required();

  auto* dec = with("decompose", "canonical h-harmonic decomposition of a homogeneous polynomial");
  dec->add_option("--poly", a.poly)->required();

  auto* hbasis = with("hbasis", "basis of the h-harmonics of degree n");
  hbasis->add_option("--degree", a.degree)->required();

  auto* sint = with("sphere-int", "normalized weighted sphere integral");
  sint->add_option("--poly", a.poly)->required();

  auto* piz = with("pizzetti", "coefficients of the extended Pizzetti series");
  piz->add_option("--q", a.q, "homogeneous h-harmonic (default 1)");
  piz->add_option("--f", a.f)->required();
  piz->add_option("--N", a.terms, "highest series index")->required();

  auto* hob = with("hobson", "p(D) f0(|x|) for radial f0 = sum c_j |x|^(2j)");
  hob->add_option("--p", a.p)->required();
  hob->add_option("--radial", a.radial, "j:c,j:c,...")->required();

  auto* inter = with("intertwine", "intertwining operator V_kappa p");
  inter->add_option("--poly", a.poly)->required();

  auto* fh = with("funk-hecke", "check the Funk-Hecke identity for phi(<x,y>) against q");
  fh->add_option("--phi", a.phi, "polynomial in t")->required();
  fh->add_option("--q", a.q)->required();

  auto* kern = with("kernel", "reproducing kernel P_n(x, y); y is x(d+1)..x(2d)");
  kern->add_option("--n", a.n)->required();

  auto* mc = with("mc", "Monte-Carlo estimate of the sphere integral");
  mc->add_option("--poly", a.poly)->required();
  mc->add_option("--samples", a.samples)->capture_default_str();
  mc->add_option("--seed", a.seed)->capture_default_str();

  auto* ver = app.add_subcommand("verify", "run the identity corpus");
  ver->add_option("--max-degree", a.max_degree)->capture_default_str();
  ver->add_option("--families", a.families, "comma list of z2, a, b, d");
  ver->add_option("--seed", a.seed);
  ver->add_option("--samples", a.samples, "Monte-Carlo samples per integral (default 200000)");
  ver->add_option("--out", a.out_path, "also write the report to this file");
  ver->add_flag("--json", a.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  auto emit = [&](const Json& j) { out << j.dump() << "\n"; };
  auto str = [](const Rational& r) { return to_string(r); };

  try {
    if (ver->parsed()) {
      VerifyOptions options;
      options.max_degree = a.max_degree;
      if (!a.families.empty()) options.families = parse_families(a.families);
      if (ver->count("--seed")) options.seed = a.seed;
      if (ver->count("--samples")) options.mc_samples = a.samples;
      const auto report = run_verification(options);
      const Json j = report_json(report, options);
      emit(j);
      if (!a.out_path.empty()) {
        std::ofstream file(a.out_path);
        if (!file) throw std::invalid_argument("cannot write " + a.out_path);
        file << j.dump(2) << "\n";
      }
      return report.all_passed() ? 0 : 1;
    }

    const DunklContext ctx = context_from(a);
    const std::size_t d = ctx.dimension();
    Json j;
    if (apply->parsed()) {
      j["result"] = format_poly(dunkl_apply(ctx, parse_xi(a.xi, d), poly_arg(a.poly, "--poly", d)));
    } else if (lap->parsed()) {
      j["result"] = format_poly(laplacian(ctx, poly_arg(a.poly, "--poly", d)));
    } else if (pair->parsed()) {
      j["result_rational"] = str(pairing(ctx, poly_arg(a.p, "--p", d), poly_arg(a.q, "--q", d)));
    } else if (dec->parsed()) {
      const auto result = canonical_decompose(ctx, poly_arg(a.poly, "--poly", d));
      j["degree"] = result.degree;
      j["components"] = Json::array();
      for (const auto& c : result.components) {
        Json item;
        item["i"] = c.index;
        item["poly"] = format_poly(c.poly);
        j["components"].push_back(item);
      }
    } else if (hbasis->parsed()) {
      const auto basis = h_harmonic_basis(ctx, a.degree);
      j["degree"] = a.degree;
      j["dimension"] = basis.size();
      j["basis"] = Json::array();
      for (const auto& b : basis) j["basis"].push_back(format_poly(b));
    } else if (sint->parsed()) {
      j["result_rational"] = str(sphere_integrate(ctx, poly_arg(a.poly, "--poly", d)));
    } else if (piz->parsed()) {
      const auto series = extended_pizzetti(ctx, poly_arg(a.q, "--q", d), poly_arg(a.f, "--f", d), a.terms);
      j["m"] = series.m;
      j["coeffs"] = Json::array();
      for (const auto& c : series.coefficients) j["coeffs"].push_back(str(c));
    } else if (hob->parsed()) {
      j["result"] = format_poly(hobson_apply(ctx, poly_arg(a.p, "--p", d), RadialPowerSum::parse(a.radial)));
    } else if (inter->parsed()) {
      j["result"] = format_poly(intertwiner_apply(ctx, poly_arg(a.poly, "--poly", d)));
    } else if (fh->parsed()) {
      const auto res = funk_hecke_check(ctx, UniPoly::parse(a.phi), poly_arg(a.q, "--q", d));
      j["holds"] = res.holds;
      j["a"] = str(res.a);
      j["lhs"] = format_poly(res.lhs);
      j["rhs"] = format_poly(res.rhs);
      emit(j);
      return res.holds ? 0 : 1;
    } else if (kern->parsed()) {
      j["n"] = a.n;
      j["result"] = format_poly(reproducing_kernel(ctx, a.n));
    } else if (mc->parsed()) {
      const auto est = mc_sphere_integral(ctx, poly_arg(a.poly, "--poly", d), a.seed, a.samples);
      j["mean"] = est.mean;
      j["stderr"] = est.std_error;
      j["samples"] = est.samples;
      j["seed"] = est.seed;
    }
    emit(j);
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace dunkl
