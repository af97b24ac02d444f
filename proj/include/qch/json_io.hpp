#pragma once

#include "qch/certificates.hpp"
#include "qch/cohomology.hpp"
#include "qch/extensions.hpp"
#include "qch/limits.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>

/// JSON (de)serialization for every externally visible type. Parse failures
/// throw std::runtime_error; semantic violations are left to the library
/// (std::domain_error) so callers can distinguish I/O from domain errors.
namespace qch::io {

using json = nlohmann::ordered_json;

json int_to_json(const Int& v);
Int int_from_json(const json& j);
std::string rat_to_string(const Rat& v);
Rat rat_from_json(const json& j);

json quandle_to_json(const QuandleTable& t);
QuandleTable quandle_from_json(const json& j);
json group_to_json(const GroupTable& g);
GroupTable group_from_json(const json& j);

json imat_to_json(const IMat& m);
IMat imat_from_json(const json& j);
json qmat_to_json(const QMat& m);
QMat qmat_from_json(const json& j);
json qvec_to_json(const QVec& v);
QVec qvec_from_json(const json& j);

json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

json coefficient_to_json(const CoefficientModule& a);
CoefficientModule coefficient_from_json(const json& j);

json cochain_to_json(const CochainBasis& basis, std::size_t rank, const CochainVec& c);
CochainVec cochain_from_json(const CochainBasis& basis, std::size_t rank, const json& j);

QuandleModuleSpec module_from_json(const json& j, const IVec& factors, std::size_t q);

json principal_to_json(const PrincipalData& d, const CoefficientModule& a);
PrincipalData principal_from_json(const json& j);

TowerSystem tower_from_json(const json& j);
json colimit_to_json(const ColimitResult& r);

json chain_to_json(const FormalChain& w);
json certificate_to_json(const Certificate& c, const json& inputs);

}  // namespace qch::io
