// Command-line front end: constant tables, two-sided squeezing certificates,
// the elliptic-domain pipeline, spectral decomposition and polydisc
// embedding of serialized elements.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cartan/serialize.hpp"

namespace {

using namespace cartan;

// Exit codes: 0 certified/ok, 1 numerical violation, 2 input or usage error.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string format_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.7g", v);
  std::string s(buf);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos) {
    s += ".0";
  }
  return s;
}

struct FactorFlags {
  std::string kind;
  int l = 0;
  int n = 0;
  int dim = 0;

  void attach(CLI::App* cmd, bool required = true) {
    auto* opt = cmd->add_option("--factor", kind, "factor kind: I, II, III, IV, V, VI");
    if (required) opt->required();
    cmd->add_option("--l", l, "rows (types I, II, III)");
    cmd->add_option("--n", n, "columns (type I)");
    cmd->add_option("--dim", dim, "spin dimension (type IV)");
  }

  FactorDescriptor build() const {
    if (kind == "I") return FactorDescriptor::type_i(l, n);
    if (kind == "II") return FactorDescriptor::type_ii(l);
    if (kind == "III") return FactorDescriptor::type_iii(l);
    if (kind == "IV") return FactorDescriptor::type_iv(dim > 0 ? dim : n);
    if (kind == "V") return FactorDescriptor::type_v();
    if (kind == "VI") return FactorDescriptor::type_vi();
    throw Error("unknown factor kind: " + kind);
  }
};

std::string factor_params(const FactorDescriptor& f) {
  switch (f.kind) {
    case FactorKind::I: return "l=" + std::to_string(f.l) + ";n=" + std::to_string(f.n);
    case FactorKind::II:
    case FactorKind::III: return "l=" + std::to_string(f.l);
    case FactorKind::IV: return "n=" + std::to_string(f.n);
    default: return "-";
  }
}

struct ConstantsRow {
  std::string factor;
  std::string params;
  int rank;
  std::string exact;
  double value;
};

int run_constants(bool all, const FactorFlags& flags, const std::string& product,
                  const std::string& format) {
  std::vector<ConstantsRow> rows;
  auto add_factor = [&rows](const FactorDescriptor& f) {
    const SqueezingConstant c = squeezing_constant_irreducible(f);
    rows.push_back({f.name(), factor_params(f), f.rank(), c.exact(), c.value});
  };

  if (all) {
    for (int l = 1; l <= 3; ++l) add_factor(FactorDescriptor::type_i(l, 8));
    add_factor(FactorDescriptor::type_ii(6));
    add_factor(FactorDescriptor::type_iii(3));
    for (int n : {3, 8, 16}) add_factor(FactorDescriptor::type_iv(n));
    add_factor(FactorDescriptor::type_v());
    add_factor(FactorDescriptor::type_vi());
  } else if (!flags.kind.empty()) {
    add_factor(flags.build());
  }

  if (!product.empty()) {
    std::vector<int> ranks;
    std::stringstream ss(product);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) ranks.push_back(std::stoi(tok));
    }
    const SqueezingConstant c = squeezing_constant_product(ranks);
    int total = 0;
    std::string joined;
    for (int p : ranks) {
      if (!joined.empty()) joined += "+";
      joined += std::to_string(p);
      total += p;
    }
    rows.push_back({"product", "ranks=" + joined, total, c.exact(), c.value});
  }

  if (rows.empty()) throw Error("constants: nothing to print (use --all, --factor or --product)");

  if (format == "json") {
    Json out;
    out["schema"] = "v1";
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json jr;
      jr["factor"] = r.factor;
      jr["params"] = r.params;
      jr["rank"] = r.rank;
      jr["constant_exact"] = r.exact;
      jr["constant_decimal"] = format_decimal(r.value);
      arr.push_back(jr);
    }
    out["rows"] = arr;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "factor,params,rank,constant_exact,constant_decimal\n";
    for (const auto& r : rows) {
      std::cout << r.factor << "," << r.params << "," << r.rank << "," << r.exact << ","
                << format_decimal(r.value) << "\n";
    }
  }
  return kExitOk;
}

int run_certify(const FactorFlags& flags, int64_t samples, uint64_t seed, int grid,
                double radius, double tol, bool serial, bool sweep) {
  const FactorDescriptor f = flags.build();
  SweepPolicy policy;
  policy.parallel = !serial;

  const SandwichCertificate sandwich = sandwich_verify(f, samples, seed, tol, policy);
  const EmbeddingEvaluator g = canonical_scaled_inclusion(f);
  const AxisEnergyReport rho = rho_upper_certificate(g, f.rank(), grid, radius, seed, 100000, policy);

  const double closed_form = squeezing_constant_irreducible(f).value;
  const bool certified =
      sandwich.pass && rho.chain_ok && std::abs(rho.rho_upper - closed_form) <= 1e-7;

  Json out;
  out["schema"] = "v1";
  Json cfg;
  cfg["factor"] = factor_to_json(f);
  cfg["samples"] = samples;
  cfg["seed"] = seed;
  cfg["grid"] = grid;
  cfg["radius"] = radius;
  cfg["tolerance"] = tol;
  cfg["serial"] = serial;
  out["config"] = cfg;
  out["sandwich"] = to_json(sandwich);
  out["rho"] = to_json(rho);
  out["bound_pair"] = Json::array({format_decimal(closed_form), format_decimal(rho.rho_upper)});
  out["certified"] = certified;
  if (sweep) {
    Json arr = Json::array();
    for (const auto& rep :
         rho_radius_sweep(g, f.rank(), grid, {0.9, 0.99, 0.999, 1.0 - 1e-6}, seed, policy)) {
      arr.push_back(to_json(rep));
    }
    out["radius_sweep"] = arr;
  }
  std::cout << out.dump(2) << "\n";
  return certified ? kExitOk : kExitViolation;
}

Ellipsoid ellipsoid_from_flags(const std::string& file, int ball_dim, double ball_radius,
                               const std::string& semiaxes) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open " + file);
    Json j;
    try {
      in >> j;
    } catch (const std::exception& ex) {
      throw Error(std::string("bad ellipsoid file: ") + ex.what());
    }
    return ellipsoid_from_json(j);
  }
  if (!semiaxes.empty()) {
    std::vector<double> ax;
    std::stringstream ss(semiaxes);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) ax.push_back(std::stod(tok));
    }
    Eigen::VectorXd a(static_cast<Eigen::Index>(ax.size()));
    for (size_t i = 0; i < ax.size(); ++i) a(static_cast<Eigen::Index>(i)) = ax[i];
    return Ellipsoid(ComplexVector::Zero(a.size()), a);
  }
  if (ball_dim > 0) {
    return Ellipsoid(ComplexVector::Zero(ball_dim),
                     Eigen::VectorXd::Constant(ball_dim, ball_radius));
  }
  throw Error("elliptic: provide --file, --semiaxes or --ball");
}

int run_elliptic(const std::string& file, int ball_dim, double ball_radius,
                 const std::string& semiaxes, int64_t samples, uint64_t seed, bool serial) {
  const Ellipsoid e = ellipsoid_from_flags(file, ball_dim, ball_radius, semiaxes);
  SweepPolicy policy;
  policy.parallel = !serial;

  const OsculatingRadii osc = osculating_radii(e);
  const bool is_ball = !osc.strict;
  const OsculatingRadii rr = is_ball ? ball_witness_radii(e.semiaxes()(0)) : osc;

  // Boundary point at the end of the largest axis: the maximal-curvature
  // point, where the inner osculating ball is tangent.
  const ComplexVector q = e.center() + e.semiaxes()(0) * e.basis().col(0);
  const EllipticityWitness w = witnesses(e, q, rr.r, rr.R, 2048, seed);
  const double threshold = lambda_threshold(rr.r);

  Json out;
  out["schema"] = "v1";
  Json cfg;
  cfg["ellipsoid"] = ellipsoid_to_json(e);
  cfg["samples"] = samples;
  cfg["seed"] = seed;
  cfg["serial"] = serial;
  out["config"] = cfg;
  out["ball"] = is_ball;
  out["r"] = rr.r;
  out["R"] = rr.R;
  out["lambda_threshold"] = threshold;
  out["lower_bound"] = format_decimal(elliptic_lower_bound(rr.r, rr.R));

  bool all_pass = true;
  Json runs = Json::array();
  for (double div : {2.0, 4.0, 8.0}) {
    const CayleyReport rep = verify_cayley_inclusions(e, w, threshold / div, samples, seed, policy);
    all_pass = all_pass && rep.pass;
    runs.push_back(to_json(rep));
  }
  out["runs"] = runs;
  out["pass"] = all_pass;
  std::cout << out.dump(2) << "\n";
  return all_pass ? kExitOk : kExitViolation;
}

int run_spectral(const std::string& file, double tol) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open " + file);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw Error(std::string("bad element file: ") + ex.what());
  }
  const Element z = element_from_json(j);
  const SpectralDecomposition d = spectral_decompose(z);

  Json out;
  out["schema"] = "v1";
  out["factor"] = factor_to_json(z.factor());
  out["decomposition"] = to_json(d);
  const double recon = (coordinates(d.reconstruct()) - coordinates(z)).norm();
  double trip_residual = 0;
  for (const auto& e : d.tripotents) {
    trip_residual = std::max(
        trip_residual, (coordinates(triple_product(e, e, e)) - coordinates(e)).norm());
  }
  out["reconstruction_residual"] = recon;
  out["tripotent_residual"] = trip_residual;
  out["spectral_norm"] = spectral_norm(z);
  out["tolerance"] = tol;
  const bool ok = recon <= tol && trip_residual <= tol;
  out["pass"] = ok;
  std::cout << out.dump(2) << "\n";
  return ok ? kExitOk : kExitViolation;
}

int run_embed(const FactorFlags& flags, const std::string& coords_text) {
  const FactorDescriptor f = flags.build();
  Json cj;
  try {
    cj = Json::parse(coords_text);
  } catch (const std::exception& ex) {
    throw Error(std::string("bad --coords: ") + ex.what());
  }
  require(cj.is_array(), "--coords must be a JSON array");
  ComplexVector coords(static_cast<Eigen::Index>(cj.size()));
  for (size_t i = 0; i < cj.size(); ++i)
    coords(static_cast<Eigen::Index>(i)) = complex_from_json(cj[i]);

  const Element z = polydisc_embed(canonical_embedding(f), coords);
  Json out;
  out["schema"] = "v1";
  out["element"] = element_to_json(z);
  out["spectral_norm"] = spectral_norm(z);
  out["hilbert_norm"] = hilbert_norm(z);
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("CARTAN_SQUEEZE_THREADS")) {
    const int cap = std::atoi(env);
#ifdef _OPENMP
    if (cap > 0) omp_set_num_threads(cap);
#else
    (void)cap;
#endif
  }

  CLI::App app{"finite-rank Cartan factors, squeezing constants and certificates"};
  app.require_subcommand(1);

  // constants
  auto* constants = app.add_subcommand("constants", "closed-form squeezing constants");
  bool all = false;
  FactorFlags const_flags;
  std::string product, format = "csv";
  constants->add_flag("--all", all, "every built-in factor");
  const_flags.attach(constants, /*required=*/false);
  constants->add_option("--product", product, "comma-separated ranks of a product domain");
  constants->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // certify
  auto* certify = app.add_subcommand("certify", "two-sided certificates for a factor");
  FactorFlags cert_flags;
  cert_flags.attach(certify);
  int64_t samples = 10000;
  uint64_t seed = 7;
  int grid = 64;
  double radius = 1.0 - 1e-6;
  double tol = 1e-8;
  bool serial = false, sweep = false;
  certify->add_option("--samples", samples, "sandwich sample count");
  certify->add_option("--seed", seed, "RNG seed");
  certify->add_option("--grid", grid, "circle grid size");
  certify->add_option("--radius", radius, "quadrature radius in (0,1)");
  certify->add_option("--tol", tol, "sandwich tolerance");
  certify->add_flag("--serial", serial, "run the serial reference sweeps");
  certify->add_flag("--sweep", sweep, "include a radius-refinement sweep");

  // elliptic
  auto* elliptic = app.add_subcommand("elliptic", "dilation/Cayley lower bound for an ellipsoid");
  std::string file, semiaxes;
  int ball_dim = 0;
  double ball_radius = 1.0;
  int64_t e_samples = 10000;
  uint64_t e_seed = 11;
  bool e_serial = false;
  elliptic->add_option("--file", file, "ellipsoid JSON file");
  elliptic->add_option("--semiaxes", semiaxes, "comma-separated semiaxes (center 0)");
  elliptic->add_option("--ball", ball_dim, "ball of the given complex dimension");
  elliptic->add_option("--radius-a", ball_radius, "ball radius (with --ball)");
  elliptic->add_option("--samples", e_samples, "samples per inclusion check");
  elliptic->add_option("--seed", e_seed, "RNG seed");
  elliptic->add_flag("--serial", e_serial, "run the serial reference sweeps");

  // spectral
  auto* spectral = app.add_subcommand("spectral", "decompose a serialized element");
  std::string element_file;
  double s_tol = 1e-8;
  spectral->add_option("--file", element_file, "element JSON file")->required();
  spectral->add_option("--tol", s_tol, "residual tolerance");

  // embed
  auto* embed = app.add_subcommand("embed", "evaluate the canonical polydisc embedding");
  FactorFlags embed_flags;
  embed_flags.attach(embed);
  std::string coords_text;
  embed->add_option("--coords", coords_text, "JSON array of complex coordinates")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (constants->parsed()) return run_constants(all, const_flags, product, format);
    if (certify->parsed())
      return run_certify(cert_flags, samples, seed, grid, radius, tol, serial, sweep);
    if (elliptic->parsed())
      return run_elliptic(file, ball_dim, ball_radius, semiaxes, e_samples, e_seed, e_serial);
    if (spectral->parsed()) return run_spectral(element_file, s_tol);
    if (embed->parsed()) return run_embed(embed_flags, coords_text);
  } catch (const cartan::UnsupportedError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const cartan::Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const cartan::NumericalError& ex) {
    std::cerr << "numerical violation: " << ex.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
