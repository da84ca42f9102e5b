#include "toricapprox/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include "toricapprox/catalog.hpp"

namespace toric::cli {

namespace {

std::optional<Json> json_source(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
  }
  auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return parse_json(arg);
  return std::nullopt;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  mpz_class x;
  if (s.empty() || x.set_str(s, 10) != 0 || x < 0 || !x.fits_ulong_p())
    throw InputError(what + ": expected a nonnegative integer, got \"" + s + "\"");
  return x.get_ui();
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw InputError("not a rational number: \"" + s + "\"");
  if (q.get_den() == 0) throw InputError("zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

std::vector<mpz_class> parse_int_list(const std::string& s) {
  std::vector<mpz_class> out;
  for (auto& t : split(s, ',')) {
    mpz_class x;
    if (x.set_str(t, 10) != 0) throw InputError("not an integer: \"" + t + "\"");
    out.push_back(x);
  }
  return out;
}

CoxPoint resolve_point(const std::string& arg) {
  if (auto j = json_source(arg)) return point_from_json(*j);
  CoxPoint p;
  for (auto& t : split(arg, ',')) p.coords.push_back(parse_rational(t));
  if (p.coords.empty()) throw InputError("empty point");
  return p;
}

// ---- text rendering ----

void print_invariants(std::ostream& out, const PairInvariants& inv) {
  out << "  dim N: " << inv.dim << "\n";
  out << "  |N : N_M|: " << inv.index.to_string() << "\n";
  out << "  N / N_M: " << inv.quotient.to_string() << "\n";
  out << "  N_M^+ cone generators:";
  for (auto& g : inv.cone_generators) out << " " << to_string(g);
  out << "\n  cone full: " << (inv.cone_full ? "true" : "false")
      << "\n  N_M^+ = N: " << (inv.nm_plus_equals_n ? "true" : "false") << "\n";
  if (inv.enumeration_bound) out << "  entry bound W: " << inv.enumeration_bound->get_str() << "\n";
  for (auto& n : inv.notes) out << "  note: " << n << "\n";
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << v.property << ": " << to_string(v.holds) << "\n";
  for (auto& r : v.reasons) out << "  - " << r << "\n";
  if (v.invariants) {
    out << "invariants:\n";
    print_invariants(out, *v.invariants);
  }
}

void print_thinness(std::ostream& out, const ThinnessReport& t) {
  out << "thinness: " << to_string(t.classification);
  if (!t.d_list.empty()) {
    out << " d = [";
    for (std::size_t i = 0; i < t.d_list.size(); ++i) out << (i ? "," : "") << t.d_list[i].get_str();
    out << "]";
  }
  out << "\nZariski dense: " << to_string(t.zariski_dense) << "\n";
  for (auto& r : t.reasons) out << "  - " << r << "\n";
}

std::string join_ints(const std::vector<mpz_class>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].get_str();
  return s;
}

struct Options {
  bool json = false;
  std::string fan, cond, field = "q";
  bool off_t = false, t_empty = false, assert_holds = false, b_equals_c = false;
  std::vector<std::size_t> removed;
  std::size_t excluded_places = 0;
  std::string property, m, point, targets, format = "text", example;
  std::vector<std::string> exclude, constraints, avoid;
  std::uint64_t characteristic = 0, height = 0, seed = 0;
  unsigned retries = 4, threads = 1;
  std::size_t count = 1;
  bool toric = false, squarefree = false, no_points = false;
  long r = 0;
  std::size_t n = 0, d = 0;
};

bool T_flag(const Options& o) {
  if (o.off_t && o.t_empty) throw InputError("--off-t and --t-empty are mutually exclusive");
  return !o.t_empty;
}

ToricPair load_pair(const Options& o) {
  if (o.fan.empty()) throw InputError("--fan is required");
  ToricPair pair;
  pair.fan = resolve_fan(o.fan);
  require_valid(pair.fan);
  if (o.cond.empty()) throw InputError("--cond is required");
  pair.conditions = resolve_conditions(o.cond, pair.fan.ray_count());
  validate_pair(pair);
  return pair;
}

int emit_verdict(const Options& o, std::ostream& out, const Verdict& v) {
  if (o.json) out << to_json(v).dump(2) << "\n";
  else print_verdict(out, v);
  return (o.assert_holds && v.holds == Holds::No) ? kNo : kOk;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.fan.empty()) throw InputError("--fan is required");
  Fan f = resolve_fan(o.fan);
  auto diag = fan_validate(f);
  if (!diag.ok()) {
    if (o.json) {
      err << Json{{"error", "invalid fan"}, {"diagnostics", diag.errors}}.dump(2) << "\n";
    } else {
      err << "invalid fan:\n";
      for (auto& e : diag.errors) err << "  - " << e << "\n";
    }
    return kInputError;
  }
  Json j = {{"valid", true}, {"rays", f.ray_count()}, {"max_cones", f.max_cones.size()},
            {"smooth", is_smooth(f)}, {"complete", is_complete(f)}};
  j["class_group"] = to_json(class_group(f));
  if (!o.cond.empty()) {
    ToricPair pair{f, resolve_conditions(o.cond, f.ray_count())};
    validate_pair(pair);
    j["conditions"] = to_json(pair.conditions);
  }
  if (!o.field.empty()) j["field"] = to_json(resolve_field(o.field));
  if (o.json) {
    out << j.dump(2) << "\n";
  } else {
    out << "valid fan: " << f.ray_count() << " rays, " << f.max_cones.size() << " maximal cones, "
        << (is_smooth(f) ? "smooth" : "simplicial") << ", " << (is_complete(f) ? "complete" : "not complete")
        << "\nclass group: " << class_group(f).to_string() << "\n";
    if (j.contains("conditions")) out << "conditions: " << resolve_conditions(o.cond, f.ray_count()).to_string() << "\n";
    out << "field: " << resolve_field(o.field).to_string() << "\n";
  }
  return kOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  ToricPair pair = load_pair(o);
  auto inv = compute_invariants(pair);
  const bool mred = mred_in_closure_of_mfin(pair);
  if (o.json) {
    Json j = {{"invariants", to_json(inv)},
              {"class_group", to_json(class_group(pair.fan))},
              {"smooth", is_smooth(pair.fan)},
              {"mred_in_closure_of_mfin", mred}};
    out << j.dump(2) << "\n";
  } else {
    out << "pair: " << pair.conditions.to_string() << " on " << pair.fan.ray_count() << " rays\n";
    out << "class group: " << class_group(pair.fan).to_string() << "\n";
    out << "M_red in closure of M_fin: " << (mred ? "true" : "false") << "\n";
    print_invariants(out, inv);
  }
  return kOk;
}

int cmd_decide(const Options& o, std::ostream& out) {
  const FieldDescriptor field = resolve_field(o.field);
  const bool T = T_flag(o);
  if (o.property == "strong-approx") {
    if (o.fan.empty()) throw InputError("--fan is required");
    Fan f = resolve_fan(o.fan);
    require_valid(f);
    return emit_verdict(o, out, decide_strong_approx(f, o.removed, field, T));
  }
  ToricPair pair = load_pair(o);
  if (o.property == "m-approx") return emit_verdict(o, out, decide_m_approx(pair, field, T));
  if (o.property == "integral") return emit_verdict(o, out, decide_integral_m_approx(pair, field, T));
  const FieldFlags flags = default_flags(field, o.excluded_places);
  if (o.property == "hilbert") return emit_verdict(o, out, decide_hilbert(pair, field, flags, o.b_equals_c));
  if (o.property == "thinness") {
    auto t = classify_thinness(pair, field, flags, o.b_equals_c);
    if (o.json) out << to_json(t).dump(2) << "\n";
    else print_thinness(out, t);
    const bool thin = t.classification == Thinness::StrictlyDThin || t.classification == Thinness::StablyThin;
    return (o.assert_holds && thin) ? kNo : kOk;
  }
  throw InputError("unknown property \"" + o.property + "\" (m-approx, strong-approx, integral, thinness, hilbert)");
}

int cmd_pi1(const Options& o, std::ostream& out) {
  if (o.fan.empty()) throw InputError("--fan is required");
  Pi1Result r;
  if (!o.m.empty()) {
    Fan f = resolve_fan(o.fan);
    r = pi1_root_stack(f, parse_ext_list(o.m), o.characteristic);
  } else {
    r = pi1_root_stack(load_pair(o), o.characteristic);
  }
  if (o.json) out << to_json(r).dump(2) << "\n";
  else out << r.group.to_string() << "\n" << "  " << r.label << "\n";
  return kOk;
}

int cmd_check_point(const Options& o, std::ostream& out) {
  ToricPair pair = load_pair(o);
  if (o.point.empty()) throw InputError("--point is required");
  CoxPoint P = resolve_point(o.point);
  std::vector<mpz_class> excl;
  for (auto& e : o.exclude)
    for (auto& x : parse_int_list(e)) excl.push_back(x);
  auto c = is_m_point(pair, P, excl);
  if (o.json) out << to_json(c).dump(2) << "\n";
  else out << P.to_string() << ": " << c.to_string() << "\n";
  return (o.assert_holds && !c.ok) ? kNo : kOk;
}

int cmd_approximate(const Options& o, std::ostream& out) {
  if (o.squarefree) {
    std::vector<LocalConstraint> cs;
    for (auto& c : o.constraints) {
      auto parts = split(c, ':');
      if (parts.size() != 3) throw InputError("--constraint expects p:target:digits, got \"" + c + "\"");
      LocalConstraint lc;
      lc.p = parse_int_list(parts[0]).at(0);
      lc.target = parse_rational(parts[1]);
      lc.digits = static_cast<unsigned>(parse_u64(parts[2], "digits"));
      cs.push_back(lc);
    }
    SquarefreeOptions so;
    so.seed = o.seed;
    for (auto& a : o.avoid)
      for (auto& x : parse_int_list(a)) so.avoid.push_back(x);
    auto lifts = squarefree_approximate(cs, o.count, so);
    if (o.json) {
      Json a = Json::array();
      for (auto& l : lifts)
        a.push_back({{"f", to_json(l.f)}, {"prefix", to_json(l.prefix)}, {"n", to_json(l.n)}});
      out << Json{{"lifts", a}}.dump(2) << "\n";
    } else {
      for (auto& l : lifts) out << l.f.get_str() << " = " << l.prefix.get_str() << " * " << l.n.get_str() << "\n";
    }
    return kOk;
  }
  ToricPair pair = load_pair(o);
  if (o.targets.empty()) throw InputError("--targets is required (or --squarefree)");
  auto j = json_source(o.targets);
  if (!j) throw InputError("--targets must be a JSON file or inline JSON object");
  TargetMap targets = targets_from_json(*j);
  ApproxOptions ao;
  ao.seed = o.seed;
  ao.max_retries = o.retries;
  auto cert = m_point_approximate(pair, targets, ao);
  if (o.json) {
    out << to_json(cert).dump(2) << "\n";
  } else {
    out << "point: " << cert.point.to_string() << "\n";
    for (auto& pc : cert.closeness)
      out << "  p=" << pc.p.get_str() << ": requested " << pc.requested << " digits, achieved " << to_string(pc.achieved)
          << (pc.ok ? " ok" : " FAILED") << "\n";
    out << "  M-point away from {" << join_ints(cert.excluded, ",") << "}: " << cert.m_point.to_string() << "\n";
    out << "verified: " << (cert.verified ? "true" : "false") << " after " << cert.attempts << " attempt(s)\n";
  }
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  ToricPair pair = load_pair(o);
  EnumerateOptions eo;
  eo.threads = std::max(1u, o.threads);
  eo.keep_points = !o.no_points;
  const bool toric = o.toric || !is_projective_space_fan(pair.fan);
  Census c = toric ? enumerate_toric(pair, o.height, eo) : enumerate_projective(pair, o.height, eo);
  std::string fmt = o.json ? "json" : o.format;
  if (fmt == "json") {
    out << to_json(c).dump(2) << "\n";
  } else if (fmt == "csv") {
    for (std::size_t i = 0; i < pair.fan.ray_count(); ++i) out << "x" << i << ",";
    out << "m_point\n";
    for (auto& p : c.points) out << join_ints(p, ",") << ",true\n";
  } else if (fmt == "text") {
    out << c.pair << ", H = " << c.height_bound << ": " << c.count << " points\n";
    out << "  convention: " << c.convention << "\n";
    for (auto& p : c.points) out << "  (" << join_ints(p, ":") << ")\n";
  } else {
    throw InputError("--format must be text, json or csv");
  }
  return kOk;
}

int cmd_crosscheck(const Options& o, std::ostream& out) {
  ToricPair pair = load_pair(o);
  auto r = crosscheck(pair, o.height, std::max(1u, o.threads));
  if (o.json) out << to_json(r).dump(2) << "\n";
  else out << r.to_string() << "\n";
  if (r.divergences) throw ComputationDefect("crosscheck divergence: " + r.to_string());
  return kOk;
}

int cmd_example(const Options& o, std::ostream& out) {
  CatalogParams p;
  p.r = o.r;
  p.n = o.n;
  p.d = o.d;
  if (!o.m.empty()) p.m = parse_ext_list(o.m);
  if (o.example == "pn-darmon" && p.n == 0) p.n = p.m.size();
  p.T_nonempty = T_flag(o);
  auto e = example_catalog(o.example, p);
  Verdict v = run_catalog_entry(e);
  const bool agree = (v.holds == e.expected);
  if (o.json) {
    out << Json{{"example", e.name},
                {"description", e.description},
                {"fan", to_json(e.pair.fan)},
                {"conditions", to_json(e.pair.conditions)},
                {"field", to_json(e.field)},
                {"T_nonempty", e.T_nonempty},
                {"formula", e.formula},
                {"expected", to_string(e.expected)},
                {"verdict", to_json(v)},
                {"agrees", agree}}
               .dump(2)
        << "\n";
  } else {
    out << e.description << " over " << e.field.to_string() << (e.T_nonempty ? ", off nonempty T" : ", T empty")
        << "\n  closed form: " << e.formula << " -> " << to_string(e.expected) << "\n";
    print_verdict(out, v);
    out << (agree ? "closed form and pipeline agree\n" : "MISMATCH between closed form and pipeline\n");
  }
  if (!agree) throw ComputationDefect("catalog example disagrees with the pipeline");
  return (o.assert_holds && v.holds == Holds::No) ? kNo : kOk;
}

}  // namespace

ExtVec parse_ext_list(const std::string& s) {
  ExtVec out;
  for (auto& t : split(s, ',')) {
    if (t == "inf" || t == "infinity" || t == "oo") out.push_back(ExtNat::infinity());
    else out.push_back(ExtNat(parse_u64(t, "multiplicity")));
  }
  if (out.empty()) throw InputError("empty multiplicity list");
  return out;
}

Fan resolve_fan(const std::string& arg) {
  if (auto j = json_source(arg)) return fan_from_json(*j);
  std::smatch mt;
  static const std::regex proj(R"(p(\d+))"), hirz(R"(h(\d+))"), wp(R"(p11r(\d+))"), aff(R"(a(\d+))");
  if (arg == "p1xp1") return product(projective_space(1), projective_space(1));
  if (std::regex_match(arg, mt, wp)) return weighted_P11r(static_cast<long>(parse_u64(mt[1], "r")));
  if (std::regex_match(arg, mt, proj)) return projective_space(parse_u64(mt[1], "n"));
  if (std::regex_match(arg, mt, hirz)) return hirzebruch(static_cast<long>(parse_u64(mt[1], "r")));
  if (std::regex_match(arg, mt, aff)) return affine_space(parse_u64(mt[1], "d"));
  throw InputError("--fan: \"" + arg + "\" is neither a file, inline JSON, nor a builtin (pN, hR, p11rR, p1xp1, aD)");
}

MultiplicitySet resolve_conditions(const std::string& arg, std::size_t rays) {
  if (auto j = json_source(arg)) return multiplicity_set_from_json(*j);
  auto colon = arg.find(':');
  const std::string kind = arg.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : arg.substr(colon + 1);
  auto list = [&] {
    ExtVec m = parse_ext_list(rest);
    if (m.size() == 1 && rays > 1) m.assign(rays, m[0]);
    return m;
  };
  if (kind == "campana") return MultiplicitySet::campana(list());
  if (kind == "darmon") return MultiplicitySet::darmon(list());
  if (kind == "strict_darmon") {
    std::vector<DivisorCondition> c;
    for (auto& x : list()) c.push_back(DivisorCondition::strict_darmon(x));
    return MultiplicitySet::product(c);
  }
  if (kind == "weak_campana") return MultiplicitySet::weak_campana(list());
  if (kind == "any") return MultiplicitySet::uniform(rays, DivisorCondition::any());
  if (kind == "integral") return MultiplicitySet::uniform(rays, DivisorCondition::integral());
  if (kind == "squarefree") return MultiplicitySet::uniform(rays, DivisorCondition::squarefree());
  if (kind == "union_of_axes" || kind == "coprime") return MultiplicitySet::union_of_axes(rays);
  throw InputError("--cond: \"" + arg +
                   "\" is neither a file, inline JSON, nor a shorthand (campana:m,.. darmon:m,.. strict_darmon:m,.. "
                   "weak_campana:m,.. any integral squarefree union_of_axes)");
}

FieldDescriptor resolve_field(const std::string& arg) {
  if (auto j = json_source(arg)) return field_from_json(*j);
  std::smatch mt;
  static const std::regex fq(R"(fq(\d+))"), sep(R"(sepclosed(\d+))"), fin(R"(finite(\d+))"),
      pcl(R"(pclosed(\d+)(?::([\d,]+))?)"), oth(R"(other(\d+))");
  FieldDescriptor f;
  if (arg == "q" || arg == "rationals") {
    f = FieldDescriptor::rationals();
  } else if (arg == "imag-quad") {
    f = FieldDescriptor::number(NumberFieldClass::ImaginaryQuadratic);
  } else if (arg == "number-field") {
    f = FieldDescriptor::number(NumberFieldClass::Other);
  } else if (std::regex_match(arg, mt, fq)) {
    f = FieldDescriptor::global_function_field(parse_u64(mt[1], "q"));
  } else if (std::regex_match(arg, mt, sep)) {
    f = FieldDescriptor::function_field(BaseClass::SeparablyClosed, parse_u64(mt[1], "char"));
  } else if (arg == "realclosed" || arg == "realclosed-nopoint") {
    f = FieldDescriptor::function_field(BaseClass::RealClosed, 0, arg == "realclosed");
  } else if (std::regex_match(arg, mt, fin)) {
    f = FieldDescriptor::function_field(BaseClass::Finite, parse_u64(mt[1], "char"));
  } else if (arg == "hilbertian") {
    f = FieldDescriptor::function_field(BaseClass::HilbertianChar0, 0);
  } else if (std::regex_match(arg, mt, pcl)) {
    f = FieldDescriptor::function_field(BaseClass::PClosed, parse_u64(mt[1], "char"));
    if (mt[2].matched)
      for (auto& x : split(mt[2], ',')) f.closed_primes.push_back(parse_u64(x, "prime"));
  } else if (arg == "he" || arg == "he-nopoint") {
    f = FieldDescriptor::function_field(BaseClass::HereditarilyEuclidean, 0, arg == "he");
  } else if (std::regex_match(arg, mt, oth)) {
    f = FieldDescriptor::function_field(BaseClass::Other, parse_u64(mt[1], "char"));
  } else {
    throw InputError("--field: \"" + arg +
                     "\" is neither a file, inline JSON, nor a builtin (q, imag-quad, number-field, fqQ, sepclosedP, "
                     "realclosed, realclosed-nopoint, finiteP, hilbertian, pclosedP[:primes], he, he-nopoint, otherP)");
  }
  validate_field(f);
  return f;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact decision procedures and constructive point search for toric pairs", "toricapprox"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable JSON on stdout");

  auto fan_opt = [&](CLI::App* s, bool cond = true) {
    s->add_option("--fan", o.fan, "Fan: JSON file, inline JSON, or builtin (pN, hR, p11rR, p1xp1, aD)");
    if (cond) s->add_option("--cond", o.cond, "Multiplicity set: JSON file, inline JSON, or shorthand kind:m1,m2,..");
  };
  auto T_opts = [&](CLI::App* s) {
    s->add_flag("--off-t", o.off_t, "Approximation off a nonempty finite set T (default)");
    s->add_flag("--t-empty", o.t_empty, "Approximation with T empty");
  };

  auto* validate = app.add_subcommand("validate", "Validate a fan (and optionally conditions and field)");
  fan_opt(validate);
  validate->add_option("--field", o.field, "Field descriptor");

  auto* analyze = app.add_subcommand("analyze", "Dump N_M invariants of a pair");
  fan_opt(analyze);

  auto* decide = app.add_subcommand("decide", "Decision verdicts for a pair");
  decide->add_option("property", o.property, "m-approx | strong-approx | integral | thinness | hilbert")->required();
  fan_opt(decide);
  decide->add_option("--field", o.field, "Field descriptor (default q)");
  T_opts(decide);
  decide->add_option("--removed", o.removed, "strong-approx: removed divisor indices")->delimiter(',');
  decide->add_option("--excluded-places", o.excluded_places, "thinness/hilbert: closed points of C outside B");
  decide->add_flag("--b-equals-c", o.b_equals_c, "thinness/hilbert: B = C");
  decide->add_flag("--assert", o.assert_holds, "Exit 1 on a NO verdict");

  auto* pi1 = app.add_subcommand("pi1", "Fundamental group of the toric root stack");
  fan_opt(pi1);
  pi1->add_option("--m", o.m, "Multiplicities per ray, e.g. 2,2 (inf allowed)");
  pi1->add_option("--char", o.characteristic, "Characteristic of the base field");

  auto* check = app.add_subcommand("check-point", "Test whether a point is an M-point");
  fan_opt(check);
  check->add_option("--point", o.point, "Cox coordinates a,b,c (rationals allowed) or JSON")->required();
  check->add_option("--exclude", o.exclude, "Excluded primes (comma separated)");
  check->add_flag("--assert", o.assert_holds, "Exit 1 if the point is not an M-point");

  auto* approx = app.add_subcommand("approximate", "Construct an M-point close to local targets");
  fan_opt(approx);
  approx->add_option("--targets", o.targets, "Targets JSON: {\"p\": {\"point\": .., \"digits\": k}}");
  approx->add_option("--seed", o.seed, "Scan offset");
  approx->add_option("--retries", o.retries, "Retries with extra digits");
  approx->add_flag("--squarefree", o.squarefree, "Squarefree lifting mode");
  approx->add_option("--constraint", o.constraints, "Squarefree mode: p:target:digits (repeatable)");
  approx->add_option("--count", o.count, "Squarefree mode: number of lifts R");
  approx->add_option("--avoid", o.avoid, "Squarefree mode: primes the lifts must avoid");

  auto* enumerate = app.add_subcommand("enumerate", "Bounded-height census of M-points");
  fan_opt(enumerate);
  enumerate->add_option("--height", o.height, "Height bound H")->required();
  enumerate->add_flag("--toric", o.toric, "Cox-box census on a smooth complete fan");
  enumerate->add_option("--threads", o.threads, "Worker threads");
  enumerate->add_option("--format", o.format, "text | json | csv");
  enumerate->add_flag("--no-points", o.no_points, "Count only");

  auto* cross = app.add_subcommand("crosscheck", "Fan machinery vs direct arithmetic on P^n");
  fan_opt(cross);
  cross->add_option("--height", o.height, "Box bound H")->required();
  cross->add_option("--threads", o.threads, "Worker threads");

  auto* example = app.add_subcommand("example", "Worked examples with closed-form expected verdicts");
  example->add_option("name", o.example, "pn-darmon | hirzebruch | p11r | affine-space")->required();
  example->add_option("--r", o.r, "hirzebruch / p11r parameter");
  example->add_option("--n", o.n, "pn-darmon: number of coordinates (default: length of --m)");
  example->add_option("--d", o.d, "affine-space dimension");
  example->add_option("--m", o.m, "Multiplicities");
  T_opts(example);
  example->add_flag("--assert", o.assert_holds, "Exit 1 on a NO verdict");

  auto report = [&](const char* kind, const std::string& msg, int code) {
    if (o.json) err << Json{{"error", kind}, {"message", msg}, {"exit_code", code}}.dump() << "\n";
    else err << "error (" << kind << "): " << msg << "\n";
    return code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report("usage", e.what(), kInputError);
  }

  try {
    if (*validate) return cmd_validate(o, out, err);
    if (*analyze) return cmd_analyze(o, out);
    if (*decide) return cmd_decide(o, out);
    if (*pi1) return cmd_pi1(o, out);
    if (*check) return cmd_check_point(o, out);
    if (*approx) return cmd_approximate(o, out);
    if (*enumerate) return cmd_enumerate(o, out);
    if (*cross) return cmd_crosscheck(o, out);
    if (*example) return cmd_example(o, out);
    return report("usage", "no subcommand", kInputError);
  } catch (const InputError& e) {
    return report("input", e.what(), kInputError);
  } catch (const ComputationDefect& e) {
    return report("defect", e.what(), kDefect);
  } catch (const std::exception& e) {
    return report("defect", e.what(), kDefect);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"toricapprox"};
  for (auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace toric::cli
