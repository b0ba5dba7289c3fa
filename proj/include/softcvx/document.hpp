#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "softcvx/morphisms.hpp"
#include "softcvx/operators.hpp"

namespace softcvx {

/// parameter -> element names
using Assignment = std::map<std::string, std::vector<std::string>>;
/// A soft set named in the document, or written inline.
using SetRef = std::variant<std::string, Assignment>;

struct FunctionSpec {
  /// "self" or a path to the codomain document, relative to this one.
  std::string codomain;
  std::map<std::string, std::string> map;
};

/// The JSON document: one space plus named soft sets, families, operator
/// tables and point maps. PHI and ABS are bound to Phi_E and X_E.
struct Document {
  std::vector<std::string> universe;
  std::vector<std::string> parameters;
  std::map<std::string, Assignment> soft_sets;
  std::map<std::string, std::vector<std::string>> families;
  std::map<std::string, std::vector<std::pair<SetRef, SetRef>>> operators;
  std::map<std::string, FunctionSpec> functions;
};

inline constexpr std::string_view kNullName = "PHI";
inline constexpr std::string_view kAbsoluteName = "ABS";

/// Errors: SyntaxError (with line), DuplicateName, UnknownName,
/// NonTotalAssignment, InvalidSpace.
Document parse_document(std::string_view text);
/// Canonical text: fixed top-level key order, names sorted, assignment keys
/// in parameter order, elements in universe order, two-space indent.
std::string serialize(const Document& doc);

Document load_document(const std::filesystem::path& path);

/// A parsed document resolved against its space.
class BoundDocument {
 public:
  explicit BoundDocument(Document doc, std::filesystem::path base_dir = {});

  const Document& document() const noexcept { return doc_; }
  const SpacePtr& space() const noexcept { return space_; }

  SoftSet set(const std::string& name) const;
  SoftSet resolve(const SetRef& ref) const;
  SoftFamily family(const std::string& name) const;
  OperatorTable op(const std::string& name) const;
  /// Loads the codomain document when it is not "self".
  SoftFunctionMap function(const std::string& name) const;
  /// The bound document of a function's codomain.
  BoundDocument codomain_of(const std::string& function) const;

  /// A name bound to s: PHI or ABS first, then the smallest declared name.
  std::optional<std::string> name_of(const SoftSet& s) const;

 private:
  Document doc_;
  std::filesystem::path base_dir_;
  SpacePtr space_;
  std::map<std::string, SoftSet> sets_;
};

/// Document holding the given objects under generated names (S0, S1, ...).
/// Used to store counterexamples and generated structures.
class DocumentBuilder {
 public:
  explicit DocumentBuilder(const SpacePtr& space);
  /// Returns the name bound to s, adding it if new.
  std::string add_set(const SoftSet& s);
  void add_family(const std::string& name, const SoftFamily& f);
  void add_operator(const std::string& name, const OperatorTable& t);
  void add_function(const std::string& name, const SoftFunctionMap& f);
  const Document& document() const noexcept { return doc_; }

 private:
  SpacePtr space_;
  Document doc_;
  std::vector<std::pair<SoftSet, std::string>> names_;
};

}  // namespace softcvx
