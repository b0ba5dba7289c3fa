#include "softcvx/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "softcvx/document.hpp"
#include "softcvx/oracle.hpp"

namespace softcvx::cli {
namespace {

using nlohmann::ordered_json;

struct Options {
  std::string document;
  std::string family;
  std::string codomain_family;
  std::string target;
  std::string param;
  std::string op;
  std::string codomain_op;
  std::string function;
  std::string kind = "hull";
  std::string from = "base";
  std::string property;
  std::string crisp;
  std::string params;
  std::string mode = "fast";
  std::string out = "text";
  std::vector<std::string> inject;
  std::size_t cap = 5;
  std::size_t max_elems = 2;
  std::size_t max_params = 2;
  std::size_t workers = 1;
  std::uint64_t seed = EnumerationBudget{}.seed;
  bool single_set = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Collects one command's outcome and renders it as text or JSON.
class Report {
 public:
  Report(std::string command, const BoundDocument* doc) : command_(std::move(command)), doc_(doc) {}

  std::string label(const SoftSet& s) const {
    if (doc_ && doc_->space()->same_as(s.space()))
      if (auto n = doc_->name_of(s)) return *n;
    return to_string(s);
  }
  std::string labelled(const SoftSet& s) const {
    const std::string l = label(s);
    const std::string t = to_string(s);
    return l == t ? t : l + " = " + t;
  }

  void line(const std::string& text) { lines_.push_back(text); }
  void count(const std::string& key, std::uint64_t n) { counts_[key] = n; }
  ordered_json& result() { return result_; }

  void witness(const Witness& w) {
    valid_ = false;
    std::string text = "witness " + w.axiom + ":";
    ordered_json j;
    j["axiom"] = w.axiom;
    ordered_json members = ordered_json::array();
    for (std::size_t i = 0; i < w.members.size(); ++i) {
      text += (i ? ", " : " ") + label(w.members[i]);
      members.push_back(label(w.members[i]));
    }
    j["members"] = std::move(members);
    if (w.computed) {
      text += " -> " + to_string(*w.computed);
      j["computed"] = to_string(*w.computed);
    } else {
      j["computed"] = nullptr;
    }
    j["detail"] = w.detail;
    if (!w.detail.empty()) text += " (" + w.detail + ")";
    witness_text_.push_back(std::move(text));
    witnesses_.push_back(std::move(j));
  }
  void witnesses(const ValidationReport& r) {
    for (const auto& w : r.witnesses) witness(w);
    for (const auto& n : r.notes) line("note: " + n);
    if (!r.witnesses.empty()) count("witnesses", r.witnesses.size());
  }
  void fail() { valid_ = false; }
  bool valid() const { return valid_; }

  int emit(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      ordered_json j;
      j["command"] = command_;
      j["valid"] = valid_;
      j["witnesses"] = witnesses_;
      j["counts"] = counts_;
      if (!result_.is_null()) j["result"] = result_;
      out << j.dump(2) << "\n";
    } else {
      for (const auto& l : lines_) out << l << "\n";
      for (const auto& w : witness_text_) out << w << "\n";
      out << (valid_ ? "valid" : "invalid") << "\n";
    }
    return valid_ ? kHolds : kFails;
  }

 private:
  std::string command_;
  const BoundDocument* doc_;
  bool valid_ = true;
  std::vector<std::string> lines_;
  std::vector<std::string> witness_text_;
  ordered_json witnesses_ = ordered_json::array();
  ordered_json counts_ = ordered_json::object();
  ordered_json result_;
};

ValidationOptions validation_options(const Options& o) {
  ValidationOptions v;
  if (o.mode == "literal") v.mode = CheckMode::Literal;
  else if (o.mode != "fast") throw UsageError("--mode must be fast or literal");
  v.cap = o.cap;
  return v;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
}

BoundDocument open_document(const Options& o) {
  require(o.document, "a document path");
  const std::filesystem::path path(o.document);
  return BoundDocument(load_document(path), path.parent_path());
}

EnumerationBudget budget_of(const Options& o) {
  EnumerationBudget b;
  b.max_universe = o.max_elems;
  b.max_parameters = o.max_params;
  b.subfamily_cap = o.cap;
  b.seed = o.seed;
  b.workers = o.workers;
  return b;
}

SpacePtr numbered_space(std::size_t elems, std::size_t params) {
  std::vector<std::string> u, e;
  for (std::size_t i = 1; i <= elems; ++i) u.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= params; ++i) e.push_back("e" + std::to_string(i));
  return Space::make(u, e);
}

// Structure from a document family; reports the validation failure
// instead when it is not one.
std::optional<SoftConvexStructure> structure_or_report(const BoundDocument& doc, const std::string& name,
                                                       const Options& o, Report& r) {
  const SoftFamily f = doc.family(name);
  ValidationReport v = validate_structure(f, validation_options(o));
  if (!v.valid()) {
    r.line("family '" + name + "' is not a soft convex structure");
    r.witnesses(v);
    return std::nullopt;
  }
  return SoftConvexStructure::make(f);
}

void list_family(Report& r, const SoftFamily& f) {
  ordered_json members = ordered_json::array();
  for (const SoftSet& s : f) {
    r.line(r.labelled(s));
    members.push_back(to_string(s));
  }
  r.result()["members"] = std::move(members);
  r.count("members", f.size());
}

int cmd_validate(const Options& o, std::ostream& out) {
  const BoundDocument doc = open_document(o);
  require(o.family, "--family");
  Report r("validate", &doc);
  const SoftFamily f = doc.family(o.family);
  r.count("members", f.size());
  r.witnesses(validate_structure(f, validation_options(o)));
  return r.emit(out, o.out);
}

int cmd_validate_base(const Options& o, std::ostream& out) {
  const BoundDocument doc = open_document(o);
  require(o.family, "--family");
  Report r("validate-base", &doc);
  const SoftFamily f = doc.family(o.family);
  r.count("members", f.size());
  r.witnesses(validate_cbase(f, validation_options(o)));
  return r.emit(out, o.out);
}

int cmd_validate_operator(const Options& o, std::ostream& out) {
  const BoundDocument doc = open_document(o);
  require(o.op, "--operator");
  Report r("validate-operator", &doc);
  const OperatorTable t = doc.op(o.op);
  r.count("entries", t.size());
  if (o.kind == "hull") r.witnesses(validate_hull_operator(t, validation_options(o)));
  else if (o.kind == "derived") r.witnesses(validate_cderived_operator(t, validation_options(o)));
  else throw UsageError("--kind must be hull or derived");
  return r.emit(out, o.out);
}

int cmd_hull(const Options& o, std::ostream& out, bool pointwise) {
  const BoundDocument doc = open_document(o);
  require(o.family, "--family");
  require(o.target, "--target");
  Report r(pointwise ? "pointwise-hull" : "hull", &doc);
  const SoftSet target = doc.set(o.target);
  if (auto zeta = structure_or_report(doc, o.family, o, r)) {
    const SoftSet h = pointwise ? pointwise_hull(*zeta, target) : hull(*zeta, target);
    r.line(r.labelled(h));
    r.result()["hull"] = to_string(h);
    if (auto n = doc.name_of(h)) r.result()["name"] = *n;
  }
  return r.emit(out, o.out);
}

int cmd_slice(const Options& o, std::ostream& out) {
  const BoundDocument doc = open_document(o);
  require(o.family, "--family");
  require(o.param, "--param");
  Report r("slice", &doc);
  const SoftFamily f = doc.family(o.family);
  const std::size_t p = doc.space()->require_parameter(o.param);
  const auto parts = parameter_slices(f, p);
  ordered_json sets = ordered_json::array();
  for (const auto& part : parts) {
    r.line(format_elements(*doc.space(), part));
    sets.push_back(format_elements(*doc.space(), part));
  }
  r.result()["slice"] = std::move(sets);
  r.result()["crisp_valid"] = validate_crisp(doc.space()->universe_size(), parts).valid;
  r.count("members", parts.size());
  return r.emit(out, o.out);
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_induce(const Options& o, std::ostream& out) {
  require(o.crisp, "--crisp");
  std::ifstream in(o.crisp);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read '" + o.crisp + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, o.crisp + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("universe") || !j.contains("members"))
    throw Error(ErrorCode::SyntaxError, o.crisp + ": needs 'universe' and 'members'");
  const auto universe = j.at("universe").get<std::vector<std::string>>();
  std::vector<std::string> params = split_names(o.params);
  if (params.empty() && j.contains("parameters")) params = j.at("parameters").get<std::vector<std::string>>();
  if (params.empty() && !o.document.empty()) params = open_document(o).space()->parameters();
  if (params.empty()) throw UsageError("parameters come from --params, the crisp file, or a document");

  auto space = Space::make(universe, {"*"});
  std::vector<ElementSet> members;
  for (const auto& m : j.at("members")) {
    ElementSet s;
    for (const auto& x : m.get<std::vector<std::string>>()) s.push_back(space->require_element(x));
    std::sort(s.begin(), s.end());
    members.push_back(std::move(s));
  }
  Report r("induce", nullptr);
  const CrispReport crisp = validate_crisp(universe.size(), members);
  if (!crisp.valid) {
    for (const auto& p : crisp.problems) r.witness({"crisp", {}, std::nullopt, p});
    return r.emit(out, o.out);
  }
  const CrispConvexStructure upsilon(universe, members);
  const SoftConvexStructure zeta =
      o.single_set ? induced_single_set(upsilon, params) : induced_from_crisp(upsilon, params);
  list_family(r, zeta.members());
  return r.emit(out, o.out);
}

int cmd_generate(const Options& o, std::ostream& out) {
  const BoundDocument doc = open_document(o);
  Report r("generate", &doc);
  if (o.from == "base") {
    require(o.family, "--family");
    const SoftFamily f = doc.family(o.family);
    const ValidationReport v = validate_cbase(f, validation_options(o));
    if (!v.valid()) {
      r.witnesses(v);
      return r.emit(out, o.out);
    }
    list_family(r, structure_from_cbase(SoftConvexBase::make(f)).members());
  } else if (o.from == "operator") {
    require(o.op, "--operator");
    const OperatorTable t = doc.op(o.op);
    const bool hull_kind = o.kind == "hull";
    const ValidationReport v = hull_kind ? validate_hull_operator(t, validation_options(o))
                                         : validate_cderived_operator(t, validation_options(o));
    if (!v.valid()) {
      r.witnesses(v);
      return r.emit(out, o.out);
    }
    list_family(r, (hull_kind ? structure_from_hull_operator(t) : structure_from_cderived(t)).members());
  } else {
    throw UsageError("--from must be base or operator");
  }
  return r.emit(out, o.out);
}

void property_result(Report& r, const PropertyResult& p, const std::string& property) {
  r.result()["holds"] = p.holds;
  if (p.holds) {
    r.line(property + " holds");
    return;
  }
  r.line(property + " fails");
  r.witness({property, p.witness, std::nullopt, p.detail});
}

int cmd_check_fn(const Options& o, std::ostream& out) {
  const BoundDocument doc = open_document(o);
  require(o.function, "--function");
  require(o.property, "--property");
  const Property prop = parse_property(o.property);
  const SoftFunctionMap f = doc.function(o.function);
  const BoundDocument cod = doc.codomain_of(o.function);
  Report r("check-fn", &doc);
  const std::string name = to_string(prop);

  if (prop == Property::SDP) {
    require(o.op, "--operator");
    const OperatorTable dx = doc.op(o.op);
    const OperatorTable dy = cod.op(o.codomain_op.empty() ? o.op : o.codomain_op);
    property_result(r, is_sdp(f, dx, dy), name);
    return r.emit(out, o.out);
  }
  require(o.family, "--family");
  const std::string yname = o.codomain_family.empty() ? o.family : o.codomain_family;
  if (prop == Property::SBP) {
    const SoftConvexBase bx = SoftConvexBase::make(doc.family(o.family), validation_options(o));
    const SoftConvexBase by = SoftConvexBase::make(cod.family(yname), validation_options(o));
    property_result(r, is_sbp(f, bx, by), name);
    return r.emit(out, o.out);
  }
  const SoftConvexStructure zx = SoftConvexStructure::make(doc.family(o.family), validation_options(o));
  const SoftConvexStructure zy = SoftConvexStructure::make(cod.family(yname), validation_options(o));
  property_result(r, prop == Property::SCP ? is_scp(f, zx, zy) : is_scc(f, zx, zy), name);
  if (zx.space().bit_count() <= kMaxTableBits && zy.space().bit_count() <= kMaxTableBits) {
    const EquivalenceReport e = prop == Property::SCP ? check_scp_equivalence(f, zx, zy, o.cap)
                                                      : check_scc_equivalence(f, zx, zy, o.cap);
    ordered_json clauses = ordered_json::array();
    for (const auto& c : e.clauses) clauses.push_back(c.holds);
    r.result()["clauses"] = std::move(clauses);
    r.result()["agree"] = e.agree();
    r.line(std::string("clauses: ") + (e.clauses[0].holds ? "1" : "0") + (e.clauses[1].holds ? "1" : "0") +
           (e.clauses[2].holds ? "1" : "0") + (e.agree() ? " (agree)" : " (DISAGREE)"));
    for (const auto& n : e.notes) r.line("note: " + n);
    if (!e.agree()) r.fail();
  }
  return r.emit(out, o.out);
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  Report r("enumerate", nullptr);
  const EnumerationBudget budget = budget_of(o);
  // the largest space decides; fail before the smaller ones run
  check_budget(*numbered_space(o.max_elems, o.max_params), budget);
  ordered_json spaces = ordered_json::array();
  std::uint64_t total = 0;
  for (std::size_t x = 1; x <= o.max_elems; ++x) {
    for (std::size_t e = 1; e <= o.max_params; ++e) {
      const SpacePtr space = numbered_space(x, e);
      const StructureEnumeration en = enumerate_structures(space, budget);
      const char* strategy = en.strategy == Strategy::Filter ? "filter" : "generator";
      r.line("|X|=" + std::to_string(x) + " |E|=" + std::to_string(e) + " " + strategy +
             " candidates=" + std::to_string(en.candidates) +
             " structures=" + std::to_string(en.structures.size()));
      spaces.push_back({{"universe", x},
                        {"parameters", e},
                        {"strategy", strategy},
                        {"candidates", en.candidates},
                        {"structures", en.structures.size()}});
      total += en.structures.size();
    }
  }
  r.result()["spaces"] = std::move(spaces);
  r.count("structures", total);
  return r.emit(out, o.out);
}

int cmd_verify_suite(const Options& o, std::ostream& out) {
  EnumerationBudget budget = budget_of(o);
  SpacePtr space;
  std::vector<NamedFamily> injected;
  if (!o.document.empty()) {
    const BoundDocument doc = open_document(o);
    space = doc.space();
    budget.max_universe = std::max(budget.max_universe, space->universe_size());
    budget.max_parameters = std::max(budget.max_parameters, space->parameter_count());
    for (const auto& name : o.inject) injected.push_back({name, doc.family(name)});
  } else {
    if (!o.inject.empty()) throw UsageError("--inject needs a document");
    space = numbered_space(o.max_elems, o.max_params);
  }
  const SuiteReport report = verify_suite(space, budget, injected);
  out << (o.out == "json" ? to_json(report) : to_text(report));
  return report.failures() == 0 ? kHolds : kFails;
}

int cmd_tabulate_hull(const Options& o, std::ostream& out) {
  const BoundDocument doc = open_document(o);
  require(o.family, "--family");
  Report r("tabulate-hull", &doc);
  if (auto zeta = structure_or_report(doc, o.family, o, r)) {
    const OperatorTable t = tabulate_hull(*zeta);
    ordered_json table = ordered_json::array();
    for (std::uint64_t c = 0; c < t.size(); ++c) {
      const SoftSet in = SoftSet::from_code(doc.space(), c);
      const SoftSet img = SoftSet::from_code(doc.space(), t.apply_code(c));
      r.line(to_string(in) + " -> " + r.label(img));
      table.push_back({to_string(in), to_string(img)});
    }
    r.result()["table"] = std::move(table);
    r.count("entries", t.size());
  }
  return r.emit(out, o.out);
}

// Prints a fixture document holding the first counterexample.
int cmd_counterexample(const Options& o, std::ostream& out) {
  require(o.property, "--property");
  CounterexampleSearch search;
  search.space = o.document.empty() ? numbered_space(o.max_elems, o.max_params) : open_document(o).space();
  search.budget = budget_of(o);
  search.budget.max_universe = std::max(search.budget.max_universe, search.space->universe_size());
  search.budget.max_parameters = std::max(search.budget.max_parameters, search.space->parameter_count());
  const Property prop = parse_property(o.property);
  const auto found = find_counterexample(prop, search);
  Report r("counterexample", nullptr);
  if (!found) {
    r.line("no counterexample in the scanned pool");
    return r.emit(out, o.out);
  }
  DocumentBuilder b(search.space);
  b.add_function("f", found->function);
  if (prop == Property::SDP) {
    b.add_operator("domain", *found->domain_operator);
    b.add_operator("codomain", *found->codomain_operator);
  } else {
    b.add_family("domain", found->domain_family);
    b.add_family("codomain", found->codomain_family);
  }
  std::vector<std::string> witness;
  for (const SoftSet& w : found->result.witness) witness.push_back(b.add_set(w));
  Document doc = b.document();
  doc.families["witness"] = witness;
  if (o.out == "json") {
    r.witness({to_string(prop), found->result.witness, std::nullopt, found->result.detail});
    r.result()["document"] = ordered_json::parse(serialize(doc));
    return r.emit(out, o.out);
  }
  out << serialize(doc);
  return kFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"softcvx: soft convex structures on finite spaces"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool needs_doc) {
    auto* doc = sub->add_option("document", o.document, "JSON document");
    if (needs_doc) doc->required();
    sub->add_option("--mode", o.mode, "fast or literal")->check(CLI::IsMember({"fast", "literal"}));
    sub->add_option("--cap", o.cap, "subfamily size cap for literal checks");
    sub->add_option("--out", o.out, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", o.seed, "seed for sampled searches");
    return sub;
  };
  std::map<std::string, std::function<int()>> handlers;
  auto add = [&](const std::string& name, const std::string& help, bool needs_doc,
                 std::function<int()> fn) {
    handlers[name] = std::move(fn);
    return common(app.add_subcommand(name, help), needs_doc);
  };

  add("validate", "check the structure axioms on a family", true, [&] { return cmd_validate(o, out); })
      ->add_option("--family", o.family)->required();
  add("validate-base", "check SCB1-SCB3 on a family", true, [&] { return cmd_validate_base(o, out); })
      ->add_option("--family", o.family)->required();
  {
    auto* s = add("validate-operator", "check operator laws", true, [&] { return cmd_validate_operator(o, out); });
    s->add_option("--operator", o.op)->required();
    s->add_option("--kind", o.kind)->check(CLI::IsMember({"hull", "derived"}));
  }
  for (bool pointwise : {false, true}) {
    auto* s = add(pointwise ? "pointwise-hull" : "hull", pointwise ? "parameter-wise hull bound of a soft set" : "hull of a soft set in a structure", true,
                  [&, pointwise] { return cmd_hull(o, out, pointwise); });
    s->add_option("--family", o.family)->required();
    s->add_option("--target", o.target)->required();
  }
  {
    auto* s = add("slice", "parameter slice of a family", true, [&] { return cmd_slice(o, out); });
    s->add_option("--family", o.family)->required();
    s->add_option("--param", o.param)->required();
  }
  {
    auto* s = add("induce", "structure induced by a crisp structure", false, [&] { return cmd_induce(o, out); });
    s->add_option("--crisp", o.crisp)->required();
    s->add_option("--params", o.params, "comma separated parameter names");
    s->add_flag("--single-set", o.single_set);
  }
  {
    auto* s = add("generate", "structure from a base or an operator", true, [&] { return cmd_generate(o, out); });
    s->add_option("--from", o.from)->check(CLI::IsMember({"base", "operator"}));
    s->add_option("--family", o.family);
    s->add_option("--operator", o.op);
    s->add_option("--kind", o.kind, "operator kind for --from operator")->check(CLI::IsMember({"hull", "derived"}));
  }
  {
    auto* s = add("check-fn", "decide SCP, SCC, SDP or SBP for a soft function", true,
                  [&] { return cmd_check_fn(o, out); });
    s->add_option("--property", o.property)->required();
    s->add_option("--function", o.function)->required();
    s->add_option("--family", o.family);
    s->add_option("--codomain-family", o.codomain_family);
    s->add_option("--operator", o.op);
    s->add_option("--codomain-operator", o.codomain_op);
  }
  {
    auto* s = add("enumerate", "count structures on small spaces", false, [&] { return cmd_enumerate(o, out); });
    s->add_option("--max-elems", o.max_elems);
    s->add_option("--max-params", o.max_params);
    s->add_option("--workers", o.workers);
  }
  {
    auto* s = add("verify-suite", "run every law and morphism check", false, [&] { return cmd_verify_suite(o, out); });
    s->add_option("--max-elems", o.max_elems);
    s->add_option("--max-params", o.max_params);
    s->add_option("--workers", o.workers);
    s->add_option("--inject", o.inject, "document family to validate alongside");
  }
  add("tabulate-hull", "hull table of a structure", true, [&] { return cmd_tabulate_hull(o, out); })
      ->add_option("--family", o.family)->required();
  {
    auto* s = add("counterexample", "first failing tuple for a property", false,
                  [&] { return cmd_counterexample(o, out); });
    s->add_option("--property", o.property)->required();
    s->add_option("--max-elems", o.max_elems);
    s->add_option("--max-params", o.max_params);
  }

  std::vector<std::string> storage{"softcvx"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  for (auto* sub : app.get_subcommands()) {
    try {
      return handlers.at(sub->get_name())();
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << "\n";
      return kUsage;
    } catch (const ValidationError& e) {
      err << "error: " << e.what() << "\n";
      for (const auto& w : e.report().witnesses) err << "  " << describe(w) << "\n";
      return kUsage;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
  }
  return kUsage;
}

}  // namespace softcvx::cli
