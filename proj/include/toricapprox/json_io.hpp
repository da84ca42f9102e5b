#pragma once

#include <json.hpp>

#include "toricapprox/approx.hpp"
#include "toricapprox/decide.hpp"
#include "toricapprox/enumerate.hpp"

namespace toric {

using Json = nlohmann::json;

// Integers as JSON numbers when they fit in 64 bits, decimal strings otherwise;
// rationals as "p/q" strings.  Parsers accept both forms.
Json to_json(const mpz_class& x);
mpz_class mpz_from_json(const Json& j);
Json to_json(const mpq_class& x);
mpq_class mpq_from_json(const Json& j);
Json to_json(const ExtNat& x);
ExtNat extnat_from_json(const Json& j);

Json to_json(const Fan& f);
Fan fan_from_json(const Json& j);

Json to_json(const DivisorCondition& c);
DivisorCondition condition_from_json(const Json& j);
Json to_json(const MultiplicitySet& s);
MultiplicitySet multiplicity_set_from_json(const Json& j);

Json to_json(const FieldDescriptor& f);
FieldDescriptor field_from_json(const Json& j);

Json to_json(const CoxPoint& p);
CoxPoint point_from_json(const Json& j);
Json to_json(const TargetMap& t);
TargetMap targets_from_json(const Json& j);

Json to_json(const QuotientStructure& q);
QuotientStructure quotient_from_json(const Json& j);
Json to_json(const PairInvariants& inv);
PairInvariants invariants_from_json(const Json& j);

Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);
Json to_json(const ThinnessReport& t);
Json to_json(const Pi1Result& r);
Json to_json(const MPointCheck& c);
Json to_json(const ApproxCertificate& c);
Json to_json(const Census& c);
Census census_from_json(const Json& j);
Json to_json(const CrosscheckReport& r);
Json to_json(const RhoSpec& r);

// Malformed JSON documents surface as InputError.
Json parse_json(const std::string& text);

}  // namespace toric
