#pragma once

#include <json.hpp>

#include "cartan/elliptic.hpp"
#include "cartan/spectral.hpp"
#include "cartan/squeezing.hpp"

namespace cartan {

using Json = nlohmann::ordered_json;

// Schema "v1": complex scalars as [re, im] pairs, factors tagged by kind and
// dimension parameters.

Json factor_to_json(const FactorDescriptor& f);
FactorDescriptor factor_from_json(const Json& j);

Json element_to_json(const Element& z);
Element element_from_json(const Json& j);

Json ellipsoid_to_json(const Ellipsoid& e);
Ellipsoid ellipsoid_from_json(const Json& j);

Json to_json(const SpectralDecomposition& d);
Json to_json(const SandwichCertificate& c);
Json to_json(const AxisEnergyReport& r);
Json to_json(const CayleyReport& r);

Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);

}  // namespace cartan
