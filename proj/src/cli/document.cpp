#include "softcvx/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace softcvx {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

const json& require_kind(const json& j, json::value_t kind, const std::string& site) {
  const bool ok = kind == json::value_t::string ? j.is_string()
                  : kind == json::value_t::array ? j.is_array()
                                                 : j.is_object();
  if (!ok) {
    const char* want = kind == json::value_t::string ? "a string"
                       : kind == json::value_t::array ? "an array"
                                                      : "an object";
    fail(ErrorCode::SyntaxError, site + " must be " + want);
  }
  return j;
}

std::vector<std::string> name_list(const json& j, const std::string& site) {
  require_kind(j, json::value_t::array, site);
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& v : j) {
    require_kind(v, json::value_t::string, site + " entry");
    auto s = v.get<std::string>();
    if (!seen.insert(s).second) fail(ErrorCode::DuplicateName, "'" + s + "' repeated in " + site);
    out.push_back(std::move(s));
  }
  return out;
}

bool reserved(const std::string& name) { return name == kNullName || name == kAbsoluteName; }

class Parser {
 public:
  explicit Parser(Document& doc) : doc_(doc) {}

  void space(const json& root) {
    if (!root.contains("universe")) fail(ErrorCode::SyntaxError, "missing key 'universe'");
    if (!root.contains("parameters")) fail(ErrorCode::SyntaxError, "missing key 'parameters'");
    doc_.universe = name_list(root["universe"], "universe");
    doc_.parameters = name_list(root["parameters"], "parameters");
    if (doc_.universe.empty()) fail(ErrorCode::InvalidSpace, "universe is empty");
    if (doc_.parameters.empty()) fail(ErrorCode::InvalidSpace, "parameters is empty");
    elements_.insert(doc_.universe.begin(), doc_.universe.end());
  }

  Assignment assignment(const json& j, const std::string& site) const {
    require_kind(j, json::value_t::object, site);
    std::map<std::string, std::set<std::string>> raw;
    for (const auto& [param, elems] : j.items()) {
      if (std::find(doc_.parameters.begin(), doc_.parameters.end(), param) == doc_.parameters.end())
        fail(ErrorCode::UnknownName, "unknown parameter '" + param + "' in " + site);
      require_kind(elems, json::value_t::array, site + "." + param);
      auto& bucket = raw[param];
      for (const auto& e : elems) {
        require_kind(e, json::value_t::string, site + "." + param + " entry");
        const auto name = e.get<std::string>();
        if (!elements_.count(name))
          fail(ErrorCode::UnknownName, "unknown element '" + name + "' in " + site + "." + param);
        if (!bucket.insert(name).second)
          fail(ErrorCode::DuplicateName, "'" + name + "' repeated in " + site + "." + param);
      }
    }
    Assignment out;
    for (const auto& p : doc_.parameters) {
      auto it = raw.find(p);
      if (it == raw.end())
        fail(ErrorCode::NonTotalAssignment, site + " assigns nothing to parameter '" + p + "'");
      auto& v = out[p];
      for (const auto& x : doc_.universe)
        if (it->second.count(x)) v.push_back(x);
    }
    return out;
  }

  SetRef ref(const json& j, const std::string& site) const {
    if (j.is_string()) {
      auto name = j.get<std::string>();
      if (!reserved(name) && !doc_.soft_sets.count(name))
        fail(ErrorCode::UnknownName, "unknown soft set '" + name + "' in " + site);
      return name;
    }
    return assignment(j, site);
  }

 private:
  Document& doc_;
  std::set<std::string> elements_;
};

ordered_json assignment_json(const Document& doc, const Assignment& a) {
  ordered_json out = ordered_json::object();
  for (const auto& p : doc.parameters) out[p] = a.at(p);
  return out;
}

ordered_json ref_json(const Document& doc, const SetRef& r) {
  if (const auto* name = std::get_if<std::string>(&r)) return *name;
  return assignment_json(doc, std::get<Assignment>(r));
}

std::map<std::string, std::vector<std::string>> to_assignment(const SoftSet& s) {
  Assignment a;
  const Space& sp = s.space();
  for (std::size_t p = 0; p < sp.parameter_count(); ++p) {
    auto& v = a[sp.parameters()[p]];
    for (auto x : s.slice(p)) v.push_back(sp.universe()[x]);
  }
  return a;
}

}  // namespace

Document parse_document(std::string_view text) {
  // Track keys per open object so duplicates are reported instead of
  // silently overwritten.
  std::vector<std::set<std::string>> open;
  json::parser_callback_t cb = [&](int, json::parse_event_t event, json& parsed) {
    if (event == json::parse_event_t::object_start) {
      open.emplace_back();
    } else if (event == json::parse_event_t::object_end) {
      if (!open.empty()) open.pop_back();
    } else if (event == json::parse_event_t::key) {
      const auto key = parsed.get<std::string>();
      if (!open.empty() && !open.back().insert(key).second)
        fail(ErrorCode::DuplicateName, "duplicate key '" + key + "'");
    }
    return true;
  };
  json root;
  try {
    root = json::parse(text.begin(), text.end(), cb);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::SyntaxError, "line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
  require_kind(root, json::value_t::object, "document");
  static const std::set<std::string> known{"universe", "parameters", "soft_sets",
                                           "families", "operators",  "functions"};
  for (const auto& [key, _] : root.items())
    if (!known.count(key)) fail(ErrorCode::SyntaxError, "unknown top-level key '" + key + "'");

  Document doc;
  Parser p(doc);
  p.space(root);

  if (root.contains("soft_sets")) {
    for (const auto& [name, body] : require_kind(root["soft_sets"], json::value_t::object, "soft_sets").items()) {
      if (reserved(name)) fail(ErrorCode::DuplicateName, "'" + name + "' is reserved");
      doc.soft_sets[name] = p.assignment(body, "soft_sets." + name);
    }
  }
  if (root.contains("families")) {
    for (const auto& [name, body] : require_kind(root["families"], json::value_t::object, "families").items()) {
      const std::string site = "families." + name;
      auto members = name_list(body, site);
      for (const auto& m : members)
        if (!reserved(m) && !doc.soft_sets.count(m))
          fail(ErrorCode::UnknownName, "unknown soft set '" + m + "' in " + site);
      doc.families[name] = std::move(members);
    }
  }
  if (root.contains("operators")) {
    for (const auto& [name, body] : require_kind(root["operators"], json::value_t::object, "operators").items()) {
      const std::string site = "operators." + name;
      auto& entries = doc.operators[name];
      require_kind(body, json::value_t::array, site);
      for (std::size_t i = 0; i < body.size(); ++i) {
        const std::string at = site + "[" + std::to_string(i) + "]";
        const json& e = body[i];
        if (!e.is_array() || e.size() != 2) fail(ErrorCode::SyntaxError, at + " must be [input, output]");
        entries.emplace_back(p.ref(e[0], at + ".input"), p.ref(e[1], at + ".output"));
      }
    }
  }
  if (root.contains("functions")) {
    for (const auto& [name, body] : require_kind(root["functions"], json::value_t::object, "functions").items()) {
      const std::string site = "functions." + name;
      require_kind(body, json::value_t::object, site);
      for (const auto& [key, _] : body.items())
        if (key != "codomain" && key != "map") fail(ErrorCode::SyntaxError, "unknown key '" + key + "' in " + site);
      if (!body.contains("codomain") || !body.contains("map"))
        fail(ErrorCode::SyntaxError, site + " needs 'codomain' and 'map'");
      FunctionSpec spec;
      spec.codomain = require_kind(body["codomain"], json::value_t::string, site + ".codomain").get<std::string>();
      for (const auto& [x, y] : require_kind(body["map"], json::value_t::object, site + ".map").items()) {
        if (std::find(doc.universe.begin(), doc.universe.end(), x) == doc.universe.end())
          fail(ErrorCode::UnknownName, "unknown element '" + x + "' in " + site + ".map");
        spec.map[x] = require_kind(y, json::value_t::string, site + ".map." + x).get<std::string>();
      }
      for (const auto& x : doc.universe)
        if (!spec.map.count(x))
          fail(ErrorCode::NonTotalAssignment, site + ".map has no value for '" + x + "'");
      if (spec.codomain == "self") {
        for (const auto& [x, y] : spec.map)
          if (std::find(doc.universe.begin(), doc.universe.end(), y) == doc.universe.end())
            fail(ErrorCode::UnknownName, "unknown element '" + y + "' in " + site + ".map." + x);
      }
      doc.functions[name] = std::move(spec);
    }
  }
  return doc;
}

std::string serialize(const Document& doc) {
  ordered_json root;
  root["universe"] = doc.universe;
  root["parameters"] = doc.parameters;
  ordered_json sets = ordered_json::object();
  for (const auto& [name, a] : doc.soft_sets) sets[name] = assignment_json(doc, a);
  root["soft_sets"] = std::move(sets);
  ordered_json fams = ordered_json::object();
  for (const auto& [name, members] : doc.families) fams[name] = members;
  root["families"] = std::move(fams);
  ordered_json ops = ordered_json::object();
  for (const auto& [name, entries] : doc.operators) {
    ordered_json list = ordered_json::array();
    for (const auto& [in, out] : entries) list.push_back({ref_json(doc, in), ref_json(doc, out)});
    ops[name] = std::move(list);
  }
  root["operators"] = std::move(ops);
  ordered_json fns = ordered_json::object();
  for (const auto& [name, spec] : doc.functions) {
    ordered_json map = ordered_json::object();
    for (const auto& x : doc.universe) map[x] = spec.map.at(x);
    fns[name] = {{"codomain", spec.codomain}, {"map", std::move(map)}};
  }
  root["functions"] = std::move(fns);
  return root.dump(2) + "\n";
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::SyntaxError, "cannot read '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_document(text.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

BoundDocument::BoundDocument(Document doc, std::filesystem::path base_dir)
    : doc_(std::move(doc)), base_dir_(std::move(base_dir)), space_(Space::make(doc_.universe, doc_.parameters)) {
  sets_.emplace(kNullName, SoftSet::null(space_));
  sets_.emplace(kAbsoluteName, SoftSet::absolute(space_));
  for (const auto& [name, a] : doc_.soft_sets) sets_.emplace(name, make_soft_set(space_, a));
}

SoftSet BoundDocument::set(const std::string& name) const {
  auto it = sets_.find(name);
  if (it == sets_.end()) fail(ErrorCode::UnknownName, "unknown soft set '" + name + "'");
  return it->second;
}

SoftSet BoundDocument::resolve(const SetRef& ref) const {
  if (const auto* name = std::get_if<std::string>(&ref)) return set(*name);
  return make_soft_set(space_, std::get<Assignment>(ref));
}

SoftFamily BoundDocument::family(const std::string& name) const {
  auto it = doc_.families.find(name);
  if (it == doc_.families.end()) fail(ErrorCode::UnknownName, "unknown family '" + name + "'");
  SoftFamily out(space_);
  for (const auto& m : it->second) out.insert(set(m));
  return out;
}

OperatorTable BoundDocument::op(const std::string& name) const {
  auto it = doc_.operators.find(name);
  if (it == doc_.operators.end()) fail(ErrorCode::UnknownName, "unknown operator '" + name + "'");
  if (space_->bit_count() > kMaxTableBits)
    fail(ErrorCode::BudgetExceeded, "operator tables need |X|*|E| <= 16");
  const std::size_t n = std::size_t{1} << space_->bit_count();
  std::vector<std::optional<SoftSet>> slots(n);
  for (const auto& [in, out] : it->second) {
    const SoftSet s = resolve(in);
    auto& slot = slots[s.code()];
    if (slot) fail(ErrorCode::DuplicateName, "operator '" + name + "' maps " + to_string(s) + " twice");
    slot = resolve(out);
  }
  std::vector<SoftSet> entries;
  for (std::size_t c = 0; c < n; ++c) {
    if (!slots[c])
      fail(ErrorCode::TableIncomplete, "operator '" + name + "' has no entry for " +
                                           to_string(SoftSet::from_code(space_, c)));
    entries.push_back(*slots[c]);
  }
  return OperatorTable(space_, entries);
}

BoundDocument BoundDocument::codomain_of(const std::string& function) const {
  auto it = doc_.functions.find(function);
  if (it == doc_.functions.end()) fail(ErrorCode::UnknownName, "unknown function '" + function + "'");
  if (it->second.codomain == "self") return *this;
  const auto path = base_dir_ / it->second.codomain;
  return BoundDocument(load_document(path), path.parent_path());
}

SoftFunctionMap BoundDocument::function(const std::string& name) const {
  const BoundDocument target = codomain_of(name);
  return SoftFunctionMap::from_names(space_, target.space(), doc_.functions.at(name).map);
}

std::optional<std::string> BoundDocument::name_of(const SoftSet& s) const {
  for (std::string_view r : {kNullName, kAbsoluteName})
    if (sets_.at(std::string(r)) == s) return std::string(r);
  for (const auto& [name, value] : sets_)
    if (!reserved(name) && value == s) return name;
  return std::nullopt;
}

DocumentBuilder::DocumentBuilder(const SpacePtr& space) : space_(space) {
  doc_.universe = space->universe();
  doc_.parameters = space->parameters();
}

std::string DocumentBuilder::add_set(const SoftSet& s) {
  require_same_space(*space_, s.space());
  if (s.is_null()) return std::string(kNullName);
  if (s.is_absolute()) return std::string(kAbsoluteName);
  for (const auto& [v, name] : names_)
    if (v == s) return name;
  // name by canonical code, padded so names sort like codes
  const std::size_t width = std::to_string((std::uint64_t{1} << space_->bit_count()) - 1).size();
  std::string digits = std::to_string(s.code());
  std::string name = "S" + std::string(width - digits.size(), '0') + digits;
  names_.emplace_back(s, name);
  doc_.soft_sets[name] = to_assignment(s);
  return name;
}

void DocumentBuilder::add_family(const std::string& name, const SoftFamily& f) {
  auto& members = doc_.families[name];
  members.clear();
  for (const SoftSet& s : f) members.push_back(add_set(s));
}

void DocumentBuilder::add_operator(const std::string& name, const OperatorTable& t) {
  auto& entries = doc_.operators[name];
  entries.clear();
  for (std::uint64_t c = 0; c < t.size(); ++c)
    entries.emplace_back(add_set(SoftSet::from_code(space_, c)),
                         add_set(SoftSet::from_code(space_, t.apply_code(c))));
}

void DocumentBuilder::add_function(const std::string& name, const SoftFunctionMap& f) {
  require_same_space(*space_, f.domain());
  FunctionSpec spec;
  spec.codomain = f.codomain().same_as(*space_) ? "self" : "codomain.json";
  for (std::size_t x = 0; x < f.map().size(); ++x)
    spec.map[space_->universe()[x]] = f.codomain().universe()[f(x)];
  doc_.functions[name] = std::move(spec);
}

}  // namespace softcvx
