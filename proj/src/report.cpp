#include "report.hpp"

#include <sstream>
#include <utility>

#include "algebra_json.hpp"
#include "builtin.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "hypotheses.hpp"

namespace quatrec {

namespace {

using nlohmann::json;

const char* tristate_name(Tristate t) {
  switch (t) {
    case Tristate::Yes: return "yes";
    case Tristate::No: return "no";
    case Tristate::Unknown: return "unknown";
  }
  return "unknown";
}

json element_json(const AlgebraPresentation& a, const Element& x) {
  json coords = json::array();
  for (const Scalar& c : x.coords) coords.push_back(c.to_string());
  return json{{"coords", std::move(coords)}, {"pretty", render_element(a, x)}};
}

json zero_divisor_json(const AlgebraPresentation& a, const ZeroDivisorWitness& w) {
  return json{{"element", element_json(a, w.element)},
              {"partner", element_json(a, w.partner)},
              {"side", w.left ? "left" : "right"}};
}

json square_witness_json(const AlgebraPresentation& a, const CommutatorSquareWitness& w) {
  return json{{"x", element_json(a, w.x)},
              {"y", element_json(a, w.y)},
              {"commutator", element_json(a, w.v)},
              {"square", element_json(a, w.v_squared)},
              {"noncommuting_basis", w.noncommuting_basis}};
}

json regularity_witness_json(const AlgebraPresentation& a, const CommutatorZeroDivisorWitness& w) {
  return json{{"x", element_json(a, w.x)},
              {"y", element_json(a, w.y)},
              {"commutator", element_json(a, w.v)},
              {"divisor", zero_divisor_json(a, w.divisor)}};
}

const char* squares_kind_name(CentralSquaresVerdict::Kind k) {
  switch (k) {
    case CentralSquaresVerdict::Kind::HoldsSymbolic: return "holds_symbolic";
    case CentralSquaresVerdict::Kind::HoldsExhaustive: return "holds_exhaustive";
    case CentralSquaresVerdict::Kind::NoViolationSampled: return "no_violation_sampled";
    case CentralSquaresVerdict::Kind::Fails: return "fails";
  }
  return "unknown";
}

const char* regular_kind_name(RegularCommutatorsVerdict::Kind k) {
  switch (k) {
    case RegularCommutatorsVerdict::Kind::HoldsExhaustive: return "holds_exhaustive";
    case RegularCommutatorsVerdict::Kind::HoldsImplied: return "holds_implied";
    case RegularCommutatorsVerdict::Kind::NoViolationSampled: return "no_violation_sampled";
    case RegularCommutatorsVerdict::Kind::Fails: return "fails";
  }
  return "unknown";
}

json squares_verdict_json(const AlgebraPresentation& a, const CentralSquaresVerdict& v) {
  json j{{"verdict", squares_kind_name(v.kind)}, {"samples", v.samples}};
  if (v.witness) j["witness"] = square_witness_json(a, *v.witness);
  return j;
}

json regular_verdict_json(const AlgebraPresentation& a, const RegularCommutatorsVerdict& v) {
  json j{{"verdict", regular_kind_name(v.kind)}, {"samples", v.samples}};
  if (!v.note.empty()) j["note"] = v.note;
  if (v.witness) j["witness"] = regularity_witness_json(a, *v.witness);
  return j;
}

json validation_json(const ValidationReport& v) {
  json j{{"ok", v.ok()},
         {"associative", v.associative},
         {"unital", v.unital},
         {"commutative", v.commutative}};
  if (v.failing_triple) {
    json t = json::array();
    for (std::size_t s : *v.failing_triple) t.push_back(s);
    j["failing_triple"] = std::move(t);
  }
  if (v.failing_unit_index) j["failing_unit_index"] = *v.failing_unit_index;
  return j;
}

json refusal_json(const AlgebraPresentation& a, const Refusal& r) {
  json j{{"stage", to_string(r.stage)}, {"reason", to_string(r.reason)}};
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.elements.empty()) {
    json elems;
    for (const auto& [name, e] : r.elements) elems[name] = element_json(a, e);
    j["elements"] = std::move(elems);
  }
  if (r.triple) {
    json t = json::array();
    for (std::size_t s : *r.triple) t.push_back(s);
    j["triple"] = std::move(t);
  }
  if (r.basis_index) j["basis_index"] = *r.basis_index;
  if (r.zero_divisor) j["zero_divisor"] = zero_divisor_json(a, *r.zero_divisor);
  if (r.square_witness) j["square_witness"] = square_witness_json(a, *r.square_witness);
  if (r.regularity_witness)
    j["regularity_witness"] = regularity_witness_json(a, *r.regularity_witness);
  if (r.isotropic) {
    json v = json::array();
    for (long long c : *r.isotropic) v.push_back(c);
    j["isotropic"] = std::move(v);
  }
  return j;
}

json center_json(const AlgebraPresentation& a, const CenterBasis& c) {
  json basis = json::array();
  for (const Element& e : c.elements) basis.push_back(element_json(a, e));
  json j{{"rank", c.rank()}, {"field", tristate_name(c.field)}, {"basis", std::move(basis)}};
  if (!c.field_note.empty()) j["note"] = c.field_note;
  if (c.obstruction) j["obstruction"] = zero_divisor_json(a, *c.obstruction);
  return j;
}

json structure_json(const AlgebraPresentation& a, const QuaternionStructure& q) {
  return json{{"i", element_json(a, q.i)},
              {"j", element_json(a, q.j)},
              {"k", element_json(a, q.k)},
              {"i_squared", element_json(a, q.i_squared)},
              {"j_squared", element_json(a, q.j_squared)},
              {"fallback_used", q.fallback_used}};
}

json completeness_json(const AlgebraPresentation& a, const CompletenessReport& c) {
  json j{{"dim", c.dim},
         {"center_rank", c.center_rank},
         {"expected_rank", c.expected_rank},
         {"achieved_rank", c.achieved_rank},
         {"complete", c.complete}};
  if (c.failing_basis) j["failing_basis"] = *c.failing_basis;
  if (c.failure) j["failure"] = refusal_json(a, *c.failure);
  return j;
}

json division_json(const DivisionVerdict& d) {
  json evidence = json::array();
  for (const auto& [place, sym] : d.evidence)
    evidence.push_back(json{{"place", place}, {"symbol", sym}});
  json j{{"division", tristate_name(d.division)},
         {"form", json::array({d.form.first.str(), d.form.second.str()})},
         {"evidence", std::move(evidence)}};
  if (d.isotropic) {
    json v = json::array();
    for (long long c : *d.isotropic) v.push_back(c);
    j["isotropic"] = std::move(v);
  }
  if (!d.note.empty()) j["note"] = d.note;
  return j;
}

json envelope(const std::string& command, const RunOptions& opts) {
  return json{{"command", command},
              {"version", kVersion},
              {"parameters",
               json{{"seed", opts.seed}, {"samples", opts.samples}, {"height", opts.height}}}};
}

json input_json(const AlgebraPresentation& a) {
  return json{{"base", a.base.name()}, {"dim", a.dim}, {"digest", algebra_digest(a)}};
}

CheckMode pick_regularity_mode(const AlgebraPresentation& a) {
  if (a.base.kind == RingKind::PrimeField) {
    double pairs = 1.0;
    for (std::size_t i = 0; i < 2 * a.dim; ++i) pairs *= static_cast<double>(a.base.p);
    if (pairs <= 16777216.0) return CheckMode::Exhaustive;
  }
  return CheckMode::Randomized;
}

void fill_recognition(json& rep, const RecognitionOutcome& out) {
  const AlgebraPresentation& w = out.working;
  rep["lifted"] = out.lifted;
  rep["validation"] = validation_json(out.validation);
  if (out.center) rep["center"] = center_json(w, *out.center);
  if (out.squares) rep["central_squares"] = squares_verdict_json(w, *out.squares);
  if (out.regularity) rep["regular_commutators"] = regular_verdict_json(w, *out.regularity);
  if (out.structure) rep["structure"] = structure_json(w, *out.structure);
  if (out.completeness) rep["completeness"] = completeness_json(w, *out.completeness);
  if (out.division) rep["division"] = division_json(*out.division);
  rep["recognized"] = tristate_name(out.recognized);
  if (out.refusal) rep["refusal"] = refusal_json(w, *out.refusal);
  if (!out.note.empty()) rep["note"] = out.note;
}

Element element_into(const AlgebraPresentation& target, const Element& x, bool lifted) {
  if (!lifted) return x;
  Element out = target.zero();
  for (std::size_t s = 0; s < target.dim; ++s) out.coords[s] = x.coords[s].lifted_to_rationals();
  return out;
}

}  // namespace

CommandResult run_check(const AlgebraPresentation& a, const RunOptions& opts) {
  json rep = envelope("check", opts);
  rep["input"] = input_json(a);
  ValidationReport v = validate(a);
  rep["validation"] = validation_json(v);
  if (!v.ok()) return {1, std::move(rep)};

  AlgebraPresentation w = a.base.kind == RingKind::Integer ? lift_to_rationals(a) : a;
  rep["lifted"] = (a.base.kind == RingKind::Integer);
  if (v.commutative) {
    rep["central_squares"] = json{{"verdict", "holds_vacuously"}};
    rep["regular_commutators"] = json{{"verdict", "holds_vacuously"}};
    rep["note"] = "commutative input: every commutator is zero, so both hypotheses hold vacuously";
    return {0, std::move(rep)};
  }

  SampleOptions so{opts.seed, opts.samples, opts.height};
  CentralSquaresVerdict sq = check_commutator_squares_central(w, CheckMode::Symbolic, so);
  RegularCommutatorsVerdict reg = check_commutators_regular(w, pick_regularity_mode(w), so);
  rep["central_squares"] = squares_verdict_json(w, sq);
  rep["regular_commutators"] = regular_verdict_json(w, reg);

  int exit = 2;
  if (sq.failed() || reg.failed())
    exit = 1;
  else if (sq.conclusive_holds() && reg.conclusive_holds())
    exit = 0;
  return {exit, std::move(rep)};
}

CommandResult run_recognize(const AlgebraPresentation& a, const RunOptions& opts) {
  json rep = envelope("recognize", opts);
  rep["input"] = input_json(a);
  RecognitionOutcome out = recognize(a, RecognizeOptions{opts.seed, opts.samples, opts.height});
  fill_recognition(rep, out);
  int exit = out.refusal ? 1 : (out.recognized == Tristate::Yes ? 0 : 2);
  return {exit, std::move(rep)};
}

CommandResult run_center(const AlgebraPresentation& a, const RunOptions& opts) {
  json rep = envelope("center", opts);
  rep["input"] = input_json(a);
  ValidationReport v = validate(a);
  rep["validation"] = validation_json(v);
  if (!v.ok()) return {1, std::move(rep)};

  AlgebraPresentation w = a.base.kind == RingKind::Integer ? lift_to_rationals(a) : a;
  rep["lifted"] = (a.base.kind == RingKind::Integer);
  CenterBasis c = center_basis(w);
  rep["center"] = center_json(w, c);
  return {c.field == Tristate::Unknown ? 2 : 0, std::move(rep)};
}

CommandResult run_decompose(const AlgebraPresentation& a, const Element& x,
                            const RunOptions& opts) {
  json rep = envelope("decompose", opts);
  rep["input"] = input_json(a);
  rep["element"] = element_json(a, x);
  RecognitionOutcome out = recognize(a, RecognizeOptions{opts.seed, opts.samples, opts.height});
  fill_recognition(rep, out);
  if (out.refusal) return {1, std::move(rep)};
  if (!out.structure) {
    rep["note"] = "no quaternion structure is available to decompose against";
    return {2, std::move(rep)};
  }

  Element xw = element_into(out.working, x, out.lifted);
  try {
    Decomposition d = decompose_element(out.working, *out.structure, xw);
    const AlgebraPresentation& w = out.working;
    rep["decomposition"] = json{{"c0", element_json(w, d.c0)},     {"c1", element_json(w, d.c1)},
                                {"c2", element_json(w, d.c2)},     {"c3", element_json(w, d.c3)},
                                {"residual", element_json(w, d.residual)}, {"complete", d.complete}};
    return {d.complete ? 0 : 2, std::move(rep)};
  } catch (const RefusalError& e) {
    rep["refusal"] = refusal_json(out.working, e.refusal());
    return {1, std::move(rep)};
  }
}

CommandResult run_quadratic(const AlgebraPresentation& a, const Element& x,
                            const RunOptions& opts) {
  json rep = envelope("quadratic", opts);
  rep["input"] = input_json(a);
  rep["element"] = element_json(a, x);
  ValidationReport v = validate(a);
  rep["validation"] = validation_json(v);
  if (!v.ok()) return {1, std::move(rep)};

  AlgebraPresentation w = a.base.kind == RingKind::Integer ? lift_to_rationals(a) : a;
  bool lifted = a.base.kind == RingKind::Integer;
  rep["lifted"] = lifted;
  Element xw = element_into(w, x, lifted);
  try {
    QuadraticCertificate cert = quadratic_certificate(w, xw);
    json cj{{"x", element_json(w, cert.x)},
            {"commutator", element_json(w, cert.v)},
            {"a", element_json(w, cert.a)},
            {"b", element_json(w, cert.b)},
            {"c", element_json(w, cert.c)},
            {"identity_holds", cert.identity_holds},
            {"a_central", cert.a_central},
            {"b_central", cert.b_central},
            {"c_central", cert.c_central},
            {"a_nonzero", cert.a_nonzero},
            {"c_nonzero", cert.c_nonzero}};
    rep["certificate"] = std::move(cj);
    bool good = cert.identity_holds && cert.a_central && cert.b_central && cert.c_central &&
                cert.a_nonzero;
    if (!cert.c_nonzero)
      rep["note"] = "constant coefficient is zero: x times its commutator is nilpotent";
    return {good ? 0 : 2, std::move(rep)};
  } catch (const RefusalError& e) {
    rep["refusal"] = refusal_json(w, e.refusal());
    return {1, std::move(rep)};
  }
}

CommandResult run_enumerate(std::size_t dim, std::int64_t p, const RunOptions& opts) {
  json rep = envelope("enumerate", opts);
  rep["input"] = json{{"dim", dim}, {"field", p}};
  SweepOptions so;
  so.force = opts.force;
  SweepReport r = sweep_tables(dim, p, so);

  json witnesses = json::array();
  for (const TableWitness& w : r.witnesses) {
    json wj{{"cells", w.cells},
            {"commutator", w.commutator},
            {"square_violation", w.square_violation},
            {"regularity_violation", w.regularity_violation}};
    if (w.square_violation) {
      wj["square"] = w.square;
      wj["noncommuting_basis"] = w.noncommuting_basis;
    }
    if (w.regularity_violation) {
      wj["annihilator"] = w.annihilator;
      wj["side"] = w.left_annihilated ? "left" : "right";
    }
    witnesses.push_back(std::move(wj));
  }
  json survivors = json::array();
  for (const TableCells& cells : r.survivors) survivors.push_back(cells);

  rep["enumeration"] = json{{"dim", r.dim},
                            {"p", r.p},
                            {"total", r.total},
                            {"associative", r.associative},
                            {"commutative", r.commutative},
                            {"squares_fail", r.squares_fail},
                            {"regularity_fail", r.regularity_fail},
                            {"both_fail", r.both_fail},
                            {"passes_both", r.passes_both},
                            {"witnesses", std::move(witnesses)},
                            {"survivors", std::move(survivors)}};
  return {r.passes_both == 0 ? 0 : 1, std::move(rep)};
}

CommandResult run_examples(const std::string& name, const std::string& out_path,
                           const RunOptions& opts) {
  json rep = envelope("examples", opts);
  AlgebraPresentation a = builtin(name);
  save_algebra(a, out_path);
  rep["input"] = json{{"name", name}};
  rep["written"] = json{{"path", out_path},
                        {"base", a.base.name()},
                        {"dim", a.dim},
                        {"digest", algebra_digest(a)}};
  return {0, std::move(rep)};
}

CommandResult input_error_result(const std::string& command, const std::string& message) {
  json rep{{"command", command}, {"version", kVersion}, {"error", message}};
  return {3, std::move(rep)};
}

Element parse_element(const AlgebraPresentation& a, const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (parts.size() != a.dim)
    throw InputError("element needs " + std::to_string(a.dim) + " coordinates, got " +
                     std::to_string(parts.size()));
  Element x = a.zero();
  for (std::size_t s = 0; s < a.dim; ++s) x.coords[s] = parse_scalar(parts[s], a.base);
  return x;
}

namespace {

std::string pretty_of(const json& ej) { return ej.value("pretty", std::string("?")); }

void text_verdict(std::ostringstream& os, const char* label, const json& v) {
  os << label << ": " << v.value("verdict", std::string("?"));
  if (v.contains("samples") && v["samples"].get<std::size_t>() > 0)
    os << " (samples " << v["samples"].get<std::size_t>() << ")";
  if (v.contains("note")) os << " — " << v["note"].get<std::string>();
  os << '\n';
  if (v.contains("witness")) {
    const json& w = v["witness"];
    os << "  witness: x = " << pretty_of(w["x"]) << ", y = " << pretty_of(w["y"])
       << ", commutator = " << pretty_of(w["commutator"]);
    if (w.contains("square")) os << ", square = " << pretty_of(w["square"]);
    if (w.contains("divisor"))
      os << ", kills " << pretty_of(w["divisor"]["partner"]) << " ("
         << w["divisor"]["side"].get<std::string>() << ")";
    os << '\n';
  }
}

void text_refusal(std::ostringstream& os, const json& r) {
  os << "refusal: " << r["reason"].get<std::string>() << " at stage "
     << r["stage"].get<std::string>() << '\n';
  if (r.contains("note")) os << "  note: " << r["note"].get<std::string>() << '\n';
  if (r.contains("elements"))
    for (const auto& [name, ej] : r["elements"].items())
      os << "  " << name << " = " << pretty_of(ej) << '\n';
  if (r.contains("triple")) {
    const json& t = r["triple"];
    os << "  failing triple: (" << t[0].get<std::size_t>() << ", " << t[1].get<std::size_t>()
       << ", " << t[2].get<std::size_t>() << ")\n";
  }
  if (r.contains("zero_divisor")) {
    const json& z = r["zero_divisor"];
    os << "  zero divisor: " << pretty_of(z["element"]) << " kills " << pretty_of(z["partner"])
       << " (" << z["side"].get<std::string>() << ")\n";
  }
  if (r.contains("isotropic")) {
    const json& v = r["isotropic"];
    os << "  isotropic vector: (" << v[0].get<long long>() << ", " << v[1].get<long long>() << ", "
       << v[2].get<long long>() << ", " << v[3].get<long long>() << ")\n";
  }
}

}  // namespace

std::string render_text(const json& rep) {
  std::ostringstream os;
  std::string command = rep.value("command", std::string("?"));
  os << command << " (v" << rep.value("version", std::string("?")) << ")\n";
  if (rep.contains("error")) {
    os << "input error: " << rep["error"].get<std::string>() << '\n';
    return os.str();
  }
  if (rep.contains("input")) {
    const json& in = rep["input"];
    if (in.contains("digest"))
      os << "input: " << in["base"].get<std::string>() << ", dim " << in["dim"].get<std::size_t>()
         << ", digest " << in["digest"].get<std::string>() << '\n';
    else if (in.contains("name"))
      os << "input: builtin " << in["name"].get<std::string>() << '\n';
    else if (in.contains("dim"))
      os << "input: dim " << in["dim"].get<std::size_t>() << " over F_"
         << in["field"].get<std::int64_t>() << '\n';
  }
  if (rep.contains("element")) os << "element: " << pretty_of(rep["element"]) << '\n';
  if (rep.contains("validation")) {
    const json& v = rep["validation"];
    os << "validation: " << (v["ok"].get<bool>() ? "ok" : "failed");
    if (v["ok"].get<bool>()) os << (v["commutative"].get<bool>() ? " (commutative)" : "");
    os << '\n';
  }
  if (rep.contains("center")) {
    const json& c = rep["center"];
    os << "center: rank " << c["rank"].get<std::size_t>() << ", field "
       << c["field"].get<std::string>();
    if (c.contains("note")) os << " — " << c["note"].get<std::string>();
    os << '\n';
  }
  if (rep.contains("central_squares"))
    text_verdict(os, "commutator squares central", rep["central_squares"]);
  if (rep.contains("regular_commutators"))
    text_verdict(os, "commutators regular", rep["regular_commutators"]);
  if (rep.contains("structure")) {
    const json& s = rep["structure"];
    os << "structure: i = " << pretty_of(s["i"]) << ", j = " << pretty_of(s["j"])
       << ", k = " << pretty_of(s["k"]) << '\n';
    os << "  i^2 = " << pretty_of(s["i_squared"]) << ", j^2 = " << pretty_of(s["j_squared"])
       << (s["fallback_used"].get<bool>() ? " (fallback scan)" : "") << '\n';
  }
  if (rep.contains("completeness")) {
    const json& c = rep["completeness"];
    os << "completeness: achieved rank " << c["achieved_rank"].get<std::size_t>() << " of "
       << c["expected_rank"].get<std::size_t>() << " (dim " << c["dim"].get<std::size_t>() << "), "
       << (c["complete"].get<bool>() ? "complete" : "incomplete") << '\n';
  }
  if (rep.contains("division")) {
    const json& d = rep["division"];
    os << "division: " << d["division"].get<std::string>() << "; form ("
       << d["form"][0].get<std::string>() << ", " << d["form"][1].get<std::string>() << ")";
    if (!d["evidence"].empty()) {
      os << "; symbols:";
      for (const json& e : d["evidence"])
        os << ' ' << e["place"].get<std::string>() << ':' << e["symbol"].get<int>();
    }
    os << '\n';
    if (d.contains("isotropic")) {
      const json& v = d["isotropic"];
      os << "  isotropic vector: (" << v[0].get<long long>() << ", " << v[1].get<long long>()
         << ", " << v[2].get<long long>() << ", " << v[3].get<long long>() << ")\n";
    }
    if (d.contains("note")) os << "  note: " << d["note"].get<std::string>() << '\n';
  }
  if (rep.contains("decomposition")) {
    const json& d = rep["decomposition"];
    os << "decomposition: c0 = " << pretty_of(d["c0"]) << ", c1 = " << pretty_of(d["c1"])
       << ", c2 = " << pretty_of(d["c2"]) << ", c3 = " << pretty_of(d["c3"]) << '\n';
    os << "  residual = " << pretty_of(d["residual"]) << ", "
       << (d["complete"].get<bool>() ? "exact" : "incomplete") << '\n';
  }
  if (rep.contains("certificate")) {
    const json& c = rep["certificate"];
    os << "certificate: a = " << pretty_of(c["a"]) << ", b = " << pretty_of(c["b"])
       << ", c = " << pretty_of(c["c"]) << '\n';
    os << "  identity " << (c["identity_holds"].get<bool>() ? "holds" : "fails")
       << ", a nonzero: " << (c["a_nonzero"].get<bool>() ? "yes" : "no")
       << ", c nonzero: " << (c["c_nonzero"].get<bool>() ? "yes" : "no") << '\n';
  }
  if (rep.contains("enumeration")) {
    const json& e = rep["enumeration"];
    os << "tables: " << e["total"].get<std::uint64_t>() << " total, "
       << e["associative"].get<std::uint64_t>() << " associative, "
       << e["commutative"].get<std::uint64_t>() << " commutative\n";
    os << "failures: " << e["squares_fail"].get<std::uint64_t>() << " squares, "
       << e["regularity_fail"].get<std::uint64_t>() << " regularity, "
       << e["both_fail"].get<std::uint64_t>() << " both\n";
    os << "noncommutative passing both: " << e["passes_both"].get<std::uint64_t>() << '\n';
  }
  if (rep.contains("written")) {
    const json& w = rep["written"];
    os << "wrote " << w["path"].get<std::string>() << " (" << w["base"].get<std::string>()
       << ", dim " << w["dim"].get<std::size_t>() << ", digest " << w["digest"].get<std::string>()
       << ")\n";
  }
  if (rep.contains("recognized"))
    os << "recognized: " << rep["recognized"].get<std::string>() << '\n';
  if (rep.contains("refusal")) text_refusal(os, rep["refusal"]);
  if (rep.contains("note")) os << "note: " << rep["note"].get<std::string>() << '\n';
  return os.str();
}

}  // namespace quatrec
