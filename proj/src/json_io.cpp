#include "toricapprox/json_io.hpp"

#include <algorithm>

namespace toric {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError("JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::uint64_t u64(const Json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return static_cast<std::uint64_t>(j.get<long long>());
  mpz_class x = mpz_from_json(j);
  if (x < 0 || !x.fits_ulong_p()) bad(std::string(what) + " must be a nonnegative 64-bit integer");
  return x.get_ui();
}

template <class T, class F>
std::vector<T> array_of(const Json& j, F f, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<T> out;
  for (auto& e : j) out.push_back(f(e));
  return out;
}

Json ivec(const IntVec& v) {
  Json a = Json::array();
  for (auto& x : v) a.push_back(to_json(x));
  return a;
}

IntVec ivec_from(const Json& j) { return array_of<mpz_class>(j, mpz_from_json, "integer vector"); }

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(const mpz_class& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

mpz_class mpz_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? mpz_class(static_cast<unsigned long>(j.get<std::uint64_t>()))
                                                           : mpz_class(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    mpz_class x;
    if (x.set_str(j.get<std::string>(), 10) != 0) bad("not an integer: " + j.get<std::string>());
    return x;
  }
  bad("expected an integer, got " + j.dump());
}

Json to_json(const mpq_class& x) { return Json(x.get_str()); }

mpq_class mpq_from_json(const Json& j) {
  if (j.is_number_integer()) return mpq_class(mpz_from_json(j));
  if (!j.is_string()) bad("expected a rational string, got " + j.dump());
  mpq_class q;
  if (q.set_str(j.get<std::string>(), 10) != 0) bad("not a rational: " + j.get<std::string>());
  if (q.get_den() == 0) bad("zero denominator");
  q.canonicalize();
  return q;
}

Json to_json(const ExtNat& x) { return x.is_inf() ? Json("inf") : Json(x.value()); }

ExtNat extnat_from_json(const Json& j) {
  if (j.is_string() && (lower(j.get<std::string>()) == "inf" || lower(j.get<std::string>()) == "infinity"))
    return ExtNat::infinity();
  return ExtNat(u64(j, "multiplicity"));
}

Json to_json(const Fan& f) {
  Json rays = Json::array(), cones = Json::array();
  for (auto& r : f.rays) rays.push_back(ivec(r));
  for (auto& c : f.max_cones) cones.push_back(c);
  return {{"dim", f.dim}, {"rays", rays}, {"max_cones", cones}};
}

Fan fan_from_json(const Json& j) {
  Fan f;
  f.dim = u64(field(j, "dim"), "dim");
  f.rays = array_of<IntVec>(field(j, "rays"), ivec_from, "rays");
  f.max_cones = array_of<Cone>(field(j, "max_cones"), [](const Json& c) {
    return array_of<std::size_t>(c, [](const Json& x) { return static_cast<std::size_t>(u64(x, "ray index")); }, "cone");
  }, "max_cones");
  return f;
}

namespace {

const std::pair<ConditionKind, const char*> kKindNames[] = {
    {ConditionKind::Any, "any"},           {ConditionKind::Integral, "integral"},
    {ConditionKind::Campana, "campana"},   {ConditionKind::Darmon, "darmon"},
    {ConditionKind::StrictDarmon, "strict_darmon"}, {ConditionKind::Squarefree, "squarefree"},
    {ConditionKind::FiniteSet, "finite_set"}};

const char* kind_name(ConditionKind k) {
  for (auto& [kk, n] : kKindNames)
    if (kk == k) return n;
  return "?";
}

ConditionKind kind_from(const std::string& s) {
  for (auto& [k, n] : kKindNames)
    if (lower(s) == n) return k;
  bad("unknown condition kind \"" + s + "\"");
}

}  // namespace

Json to_json(const DivisorCondition& c) {
  Json j = {{"kind", kind_name(c.kind)}};
  switch (c.kind) {
    case ConditionKind::Campana:
    case ConditionKind::Darmon:
    case ConditionKind::StrictDarmon: j["m"] = to_json(c.m); break;
    case ConditionKind::FiniteSet:
      j["values"] = c.values;
      j["allow_infinity"] = c.allow_infinity;
      break;
    default: break;
  }
  return j;
}

DivisorCondition condition_from_json(const Json& j) {
  if (j.is_string()) return DivisorCondition::make(kind_from(j.get<std::string>()));
  auto k = kind_from(field(j, "kind").get<std::string>());
  switch (k) {
    case ConditionKind::Campana:
    case ConditionKind::Darmon:
    case ConditionKind::StrictDarmon: return DivisorCondition::make(k, extnat_from_json(field(j, "m")));
    case ConditionKind::FiniteSet:
      return DivisorCondition::finite_set(
          array_of<std::uint64_t>(field(j, "values"), [](const Json& x) { return u64(x, "value"); }, "values"),
          j.value("allow_infinity", false));
    default: return DivisorCondition::make(k);
  }
}

Json to_json(const MultiplicitySet& s) {
  switch (s.variant) {
    case MultiplicityVariant::Product: {
      Json a = Json::array();
      for (auto& c : s.per_ray) a.push_back(to_json(c));
      return {{"variant", "product"}, {"conditions", a}};
    }
    case MultiplicityVariant::WeakCampana: {
      Json a = Json::array();
      for (auto& m : s.weights) a.push_back(to_json(m));
      return {{"variant", "weak_campana"}, {"m", a}};
    }
    case MultiplicityVariant::Custom: {
      Json a = Json::array();
      for (auto& v : s.vectors) {
        Json e = Json::array();
        for (auto& x : v) e.push_back(to_json(x));
        a.push_back(e);
      }
      return {{"variant", "custom"}, {"vectors", a}};
    }
    case MultiplicityVariant::UnionOfAxes: return {{"variant", "union_of_axes"}, {"n", s.axes}};
  }
  return {};
}

MultiplicitySet multiplicity_set_from_json(const Json& j) {
  if (!j.is_object()) bad("multiplicity set must be an object");
  auto ext_list = [](const Json& a) { return array_of<ExtNat>(a, extnat_from_json, "multiplicities"); };
  // shorthands {"campana": [...]} / {"darmon": [...]}
  if (j.contains("campana")) return MultiplicitySet::campana(ext_list(j.at("campana")));
  if (j.contains("darmon")) return MultiplicitySet::darmon(ext_list(j.at("darmon")));
  const std::string v = lower(field(j, "variant").get<std::string>());
  if (v == "product") return MultiplicitySet::product(array_of<DivisorCondition>(field(j, "conditions"), condition_from_json, "conditions"));
  if (v == "weak_campana") return MultiplicitySet::weak_campana(ext_list(field(j, "m")));
  if (v == "custom") return MultiplicitySet::custom(array_of<ExtVec>(field(j, "vectors"), ext_list, "vectors"));
  if (v == "union_of_axes") return MultiplicitySet::union_of_axes(u64(field(j, "n"), "n"));
  bad("unknown multiplicity variant \"" + v + "\"");
}

namespace {

const std::pair<BaseClass, const char*> kBaseNames[] = {
    {BaseClass::SeparablyClosed, "separably_closed"}, {BaseClass::RealClosed, "real_closed"},
    {BaseClass::Finite, "finite"}, {BaseClass::HilbertianChar0, "hilbertian_char0"},
    {BaseClass::PClosed, "p_closed"}, {BaseClass::HereditarilyEuclidean, "hereditarily_euclidean"},
    {BaseClass::Other, "other"}};

}  // namespace

Json to_json(const FieldDescriptor& f) {
  Json j;
  switch (f.kind) {
    case FieldKind::NumberField:
      j["kind"] = "number_field";
      j["class"] = f.number_field == NumberFieldClass::Rational            ? "rational"
                   : f.number_field == NumberFieldClass::ImaginaryQuadratic ? "imaginary_quadratic"
                                                                            : "other";
      break;
    case FieldKind::GlobalFunctionField:
      j["kind"] = "global_function_field";
      j["q"] = f.q;
      break;
    case FieldKind::FunctionField:
      j["kind"] = "function_field";
      for (auto& [b, n] : kBaseNames)
        if (b == f.base) j["base"] = n;
      j["char"] = f.characteristic;
      if (f.base == BaseClass::PClosed) j["closed_primes"] = f.closed_primes;
      if (f.curve_has_real_point) j["curve_has_real_point"] = *f.curve_has_real_point;
      break;
  }
  if (f.pic_fg_override) j["pic_fg"] = *f.pic_fg_override;
  return j;
}

FieldDescriptor field_from_json(const Json& j) {
  const std::string kind = lower(field(j, "kind").get<std::string>());
  FieldDescriptor f;
  if (kind == "number_field") {
    const std::string c = lower(j.value("class", std::string("rational")));
    if (c == "rational") f.number_field = NumberFieldClass::Rational;
    else if (c == "imaginary_quadratic") f.number_field = NumberFieldClass::ImaginaryQuadratic;
    else if (c == "other") f.number_field = NumberFieldClass::Other;
    else bad("unknown number field class \"" + c + "\"");
  } else if (kind == "global_function_field") {
    f = FieldDescriptor::global_function_field(u64(field(j, "q"), "q"));
  } else if (kind == "function_field") {
    const std::string b = lower(field(j, "base").get<std::string>());
    bool found = false;
    for (auto& [bc, n] : kBaseNames)
      if (b == n) {
        f = FieldDescriptor::function_field(bc, j.contains("char") ? u64(j.at("char"), "char") : 0);
        found = true;
      }
    if (!found) bad("unknown base class \"" + b + "\"");
    if (j.contains("curve_has_real_point")) f.curve_has_real_point = j.at("curve_has_real_point").get<bool>();
    if (j.contains("closed_primes"))
      f.closed_primes = array_of<std::uint64_t>(j.at("closed_primes"), [](const Json& x) { return u64(x, "prime"); }, "closed_primes");
  } else {
    bad("unknown field kind \"" + kind + "\"");
  }
  if (j.contains("pic_fg")) f.pic_fg_override = j.at("pic_fg").get<bool>();
  validate_field(f);
  return f;
}

Json to_json(const CoxPoint& p) {
  Json a = Json::array();
  for (auto& q : p.coords) a.push_back(q.get_str());
  return {{"coords", a}};
}

CoxPoint point_from_json(const Json& j) {
  CoxPoint p;
  p.coords = array_of<mpq_class>(j.is_array() ? j : field(j, "coords"), mpq_from_json, "coords");
  return p;
}

Json to_json(const TargetMap& t) {
  Json j = Json::object();
  for (auto& [p, tg] : t) j[p.get_str()] = {{"point", to_json(tg.point)}, {"digits", tg.digits}};
  return j;
}

TargetMap targets_from_json(const Json& j) {
  if (!j.is_object()) bad("targets must be an object keyed by primes");
  TargetMap t;
  for (auto it = j.begin(); it != j.end(); ++it) {
    mpz_class p;
    if (p.set_str(it.key(), 10) != 0) bad("target key \"" + it.key() + "\" is not an integer");
    PrimeTarget tg;
    tg.point = point_from_json(field(it.value(), "point"));
    tg.digits = static_cast<unsigned>(u64(field(it.value(), "digits"), "digits"));
    t[p] = tg;
  }
  return t;
}

Json to_json(const QuotientStructure& q) {
  Json a = Json::array();
  for (auto& x : q.invariant_factors) a.push_back(to_json(x));
  return {{"invariant_factors", a}, {"free_rank", q.free_rank}};
}

QuotientStructure quotient_from_json(const Json& j) {
  QuotientStructure q;
  q.invariant_factors = array_of<mpz_class>(field(j, "invariant_factors"), mpz_from_json, "invariant_factors");
  q.free_rank = u64(field(j, "free_rank"), "free_rank");
  return q;
}

Json to_json(const PairInvariants& inv) {
  Json basis = Json::array(), gens = Json::array();
  for (auto& c : inv.nm_basis.basis.columns()) basis.push_back(ivec(c));
  for (auto& g : inv.cone_generators) gens.push_back(ivec(g));
  Json j = {{"dim", inv.dim},
            {"nm_basis", basis},
            {"index", inv.index.is_infinite() ? Json("infinite") : to_json(*inv.index.value)},
            {"quotient", to_json(inv.quotient)},
            {"cone_generators", gens},
            {"cone_full", inv.cone_full},
            {"nm_plus_equals_n", inv.nm_plus_equals_n},
            {"notes", inv.notes}};
  if (inv.enumeration_bound) j["enumeration_bound"] = to_json(*inv.enumeration_bound);
  return j;
}

PairInvariants invariants_from_json(const Json& j) {
  PairInvariants inv;
  inv.dim = u64(field(j, "dim"), "dim");
  auto cols = array_of<IntVec>(field(j, "nm_basis"), ivec_from, "nm_basis");
  inv.nm_basis = lattice_from_generators(cols, inv.dim);
  const Json& idx = field(j, "index");
  if (!(idx.is_string() && idx.get<std::string>() == "infinite")) inv.index.value = mpz_from_json(idx);
  inv.quotient = quotient_from_json(field(j, "quotient"));
  inv.cone_generators = array_of<IntVec>(field(j, "cone_generators"), ivec_from, "cone_generators");
  inv.cone_full = field(j, "cone_full").get<bool>();
  inv.nm_plus_equals_n = field(j, "nm_plus_equals_n").get<bool>();
  if (j.contains("enumeration_bound")) inv.enumeration_bound = mpz_from_json(j.at("enumeration_bound"));
  if (j.contains("notes")) inv.notes = j.at("notes").get<std::vector<std::string>>();
  return inv;
}

Json to_json(const Verdict& v) {
  Json j = {{"property", v.property}, {"holds", to_string(v.holds)}, {"reasons", v.reasons}};
  if (v.invariants) j["invariants"] = to_json(*v.invariants);
  return j;
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.property = field(j, "property").get<std::string>();
  const std::string h = field(j, "holds").get<std::string>();
  if (h == "YES") v.holds = Holds::Yes;
  else if (h == "NO") v.holds = Holds::No;
  else if (h == "SUFFICIENT_ONLY") v.holds = Holds::SufficientOnly;
  else if (h == "UNKNOWN") v.holds = Holds::Unknown;
  else bad("unknown verdict \"" + h + "\"");
  v.reasons = field(j, "reasons").get<std::vector<std::string>>();
  if (j.contains("invariants")) v.invariants = invariants_from_json(j.at("invariants"));
  return v;
}

Json to_json(const ThinnessReport& t) {
  Json d = Json::array();
  for (auto& x : t.d_list) d.push_back(to_json(x));
  Json j = {{"classification", to_string(t.classification)},
            {"d_list", d},
            {"zariski_dense", to_string(t.zariski_dense)},
            {"reasons", t.reasons}};
  if (t.invariants) j["invariants"] = to_json(*t.invariants);
  return j;
}

Json to_json(const Pi1Result& r) {
  return {{"group", to_json(r.group)},
          {"text", r.group.to_string()},
          {"characteristic", r.characteristic},
          {"prime_to_p", r.prime_to_p},
          {"label", r.label}};
}

Json to_json(const MPointCheck& c) {
  Json per = Json::array();
  for (auto& [p, w] : c.per_prime) {
    Json e = Json::array();
    for (auto& x : w) e.push_back(to_json(x));
    per.push_back({{"p", to_json(p)}, {"mult", e}});
  }
  Json j = {{"ok", c.ok}, {"per_prime", per}};
  if (!c.ok) {
    Json e = Json::array();
    for (auto& x : c.failing_vector) e.push_back(to_json(x));
    j["failing_prime"] = to_json(*c.failing_prime);
    j["failing_vector"] = e;
  }
  return j;
}

Json to_json(const ApproxCertificate& c) {
  Json close = Json::array(), mult = Json::array(), excl = Json::array();
  for (auto& pc : c.closeness) {
    Json a = Json::array();
    for (auto& x : pc.achieved) a.push_back(to_json(x));
    close.push_back({{"p", to_json(pc.p)}, {"requested", pc.requested}, {"achieved", a}, {"ok", pc.ok}});
  }
  for (auto& [p, w] : c.multiplicities) {
    Json e = Json::array();
    for (auto& x : w) e.push_back(to_json(x));
    mult.push_back({{"p", to_json(p)}, {"mult", e}});
  }
  for (auto& p : c.excluded) excl.push_back(to_json(p));
  return {{"point", to_json(c.point)}, {"closeness", close}, {"multiplicities", mult},
          {"m_point", to_json(c.m_point)}, {"excluded", excl}, {"attempts", c.attempts},
          {"verified", c.verified}};
}

Json to_json(const Census& c) {
  Json pts = Json::array();
  for (auto& p : c.points) pts.push_back(ivec(p));
  return {{"pair", c.pair}, {"height_bound", c.height_bound}, {"count", c.count}, {"points", pts},
          {"convention", c.convention}};
}

Census census_from_json(const Json& j) {
  Census c;
  c.pair = field(j, "pair").get<std::string>();
  c.height_bound = u64(field(j, "height_bound"), "height_bound");
  c.count = u64(field(j, "count"), "count");
  c.points = array_of<std::vector<mpz_class>>(field(j, "points"), ivec_from, "points");
  c.convention = j.value("convention", std::string());
  return c;
}

Json to_json(const CrosscheckReport& r) {
  Json j = {{"checked", r.checked}, {"divergences", r.divergences}, {"summary", r.to_string()}};
  if (r.first_divergence) {
    j["first_divergence"] = ivec(*r.first_divergence);
    j["fan_verdict"] = r.fan_verdict;
  }
  return j;
}

Json to_json(const RhoSpec& r) {
  Json j;
  switch (r.kind) {
    case RhoKind::All: j["allowed_primes"] = "ALL"; break;
    case RhoKind::None: j["allowed_primes"] = "NONE"; break;
    case RhoKind::AllExcept: j["allowed_primes"] = {{"ALL_EXCEPT", r.excluded}}; break;
    case RhoKind::Exactly: j["allowed_primes"] = {{"EXACTLY", r.primes}}; break;
  }
  j["exact"] = r.exact;
  j["note"] = r.note;
  return j;
}

}  // namespace toric
