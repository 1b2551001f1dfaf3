#include "cartan/serialize.hpp"

namespace cartan {

namespace {

Json vector_to_json(const ComplexVector& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(complex_to_json(v(i)));
  return arr;
}

ComplexVector vector_from_json(const Json& j) {
  require(j.is_array(), "expected an array of complex scalars");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

Json real_vector_to_json(const Eigen::VectorXd& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

}  // namespace

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  require(j.is_array() && j.size() == 2, "complex scalar must be [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json factor_to_json(const FactorDescriptor& f) {
  Json j;
  switch (f.kind) {
    case FactorKind::I:
      j["kind"] = "I";
      j["l"] = f.l;
      j["n"] = f.n;
      break;
    case FactorKind::II:
      j["kind"] = "II";
      j["l"] = f.l;
      break;
    case FactorKind::III:
      j["kind"] = "III";
      j["l"] = f.l;
      break;
    case FactorKind::IV:
      j["kind"] = "IV";
      j["n"] = f.n;
      break;
    case FactorKind::V:
      j["kind"] = "V";
      break;
    case FactorKind::VI:
      j["kind"] = "VI";
      break;
  }
  return j;
}

FactorDescriptor factor_from_json(const Json& j) {
  require(j.contains("kind"), "factor needs a kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "I") return FactorDescriptor::type_i(j.at("l").get<int>(), j.at("n").get<int>());
  if (kind == "II") return FactorDescriptor::type_ii(j.at("l").get<int>());
  if (kind == "III") return FactorDescriptor::type_iii(j.at("l").get<int>());
  if (kind == "IV") return FactorDescriptor::type_iv(j.at("n").get<int>());
  if (kind == "V") return FactorDescriptor::type_v();
  if (kind == "VI") return FactorDescriptor::type_vi();
  throw Error("unknown factor kind: " + kind);
}

Json element_to_json(const Element& z) {
  Json j;
  j["schema"] = "v1";
  j["factor"] = factor_to_json(z.factor());
  j["coordinates"] = vector_to_json(coordinates(z));
  return j;
}

Element element_from_json(const Json& j) {
  require(j.contains("factor") && j.contains("coordinates"),
          "element needs factor and coordinates");
  if (j.contains("schema")) {
    require(j["schema"].get<std::string>() == "v1", "unsupported element schema");
  }
  const FactorDescriptor f = factor_from_json(j["factor"]);
  return from_coordinates(f, vector_from_json(j["coordinates"]));
}

Json ellipsoid_to_json(const Ellipsoid& e) {
  Json j;
  j["schema"] = "v1";
  j["center"] = vector_to_json(e.center());
  j["semiaxes"] = real_vector_to_json(e.semiaxes());
  if (!e.basis().isIdentity(1e-14)) {
    Json cols = Json::array();
    for (int c = 0; c < e.dim(); ++c) cols.push_back(vector_to_json(e.basis().col(c)));
    j["basis"] = cols;
  }
  return j;
}

Ellipsoid ellipsoid_from_json(const Json& j) {
  require(j.contains("semiaxes"), "ellipsoid needs semiaxes");
  if (j.contains("schema")) {
    require(j["schema"].get<std::string>() == "v1", "unsupported ellipsoid schema");
  }
  const Json& ax = j["semiaxes"];
  require(ax.is_array() && !ax.empty(), "semiaxes must be a nonempty array");
  Eigen::VectorXd semiaxes(static_cast<Eigen::Index>(ax.size()));
  for (size_t i = 0; i < ax.size(); ++i) semiaxes(static_cast<Eigen::Index>(i)) = ax[i].get<double>();
  const int n = static_cast<int>(semiaxes.size());
  ComplexVector center = ComplexVector::Zero(n);
  if (j.contains("center")) center = vector_from_json(j["center"]);
  if (j.contains("basis")) {
    const Json& cols = j["basis"];
    require(cols.is_array() && static_cast<int>(cols.size()) == n, "basis column count mismatch");
    ComplexMatrix basis(n, n);
    for (int c = 0; c < n; ++c) basis.col(c) = vector_from_json(cols[static_cast<size_t>(c)]);
    return Ellipsoid(std::move(center), std::move(semiaxes), std::move(basis));
  }
  return Ellipsoid(std::move(center), std::move(semiaxes));
}

Json to_json(const SpectralDecomposition& d) {
  Json j;
  j["alphas"] = real_vector_to_json(d.alphas);
  Json trips = Json::array();
  for (const auto& e : d.tripotents) trips.push_back(element_to_json(e));
  j["tripotents"] = trips;
  return j;
}

Json to_json(const SandwichCertificate& c) {
  Json j;
  j["factor"] = factor_to_json(c.factor);
  j["samples"] = c.sample_count;
  j["seed"] = c.seed;
  j["tolerance"] = c.tolerance;
  j["max_lower_violation"] = c.max_lower_violation;
  j["max_upper_violation"] = c.max_upper_violation;
  j["witness_tripotent_ratio"] = c.witness_tripotent_ratio;
  j["witness_frame_ratio"] = c.witness_frame_ratio;
  j["pass"] = c.pass;
  j["implied_lower_bound"] = c.implied_lower_bound;
  if (c.worst_sample) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < c.worst_sample->size(); ++i)
      arr.push_back(complex_to_json((*c.worst_sample)(i)));
    j["worst_sample"] = arr;
  }
  return j;
}

Json to_json(const AxisEnergyReport& r) {
  Json j;
  j["axis_energies"] = real_vector_to_json(r.axis_energies);
  j["total_energy"] = r.total_energy;
  j["rho_upper"] = r.rho_upper;
  j["grid"] = r.grid_size;
  j["radius"] = r.radius;
  j["mc_samples"] = r.mc_samples;
  j["mc_standard_error"] = r.mc_standard_error;
  j["quadrature_tolerance"] = r.quadrature_tolerance;
  j["chain_ok"] = r.chain_ok;
  return j;
}

Json to_json(const CayleyReport& r) {
  Json j;
  j["lambda"] = r.lambda;
  j["lambda_threshold"] = r.lambda_threshold;
  j["inner_radius"] = r.inner_radius;
  j["outer_radius"] = r.outer_radius;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["outer_violations"] = r.outer_violations;
  j["inner_violations"] = r.inner_violations;
  j["outer_worst_margin"] = r.outer_worst_margin;
  j["inner_worst_margin"] = r.inner_worst_margin;
  j["probe_image_norm"] = r.probe_image_norm;
  j["pass"] = r.pass;
  j["implied_lower_bound"] = r.implied_lower_bound;
  return j;
}

}  // namespace cartan
