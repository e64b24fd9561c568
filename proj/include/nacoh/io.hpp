#pragma once

// JSON ingest for groups, homomorphisms, Gamma-groups, crossed modules,
// short exact sequences and cocycles.
//
// A group reference is one of
//   "Z4"                          a standard name: Zn, Cn, Dn, Sn, Q8, Z2xZ2, ...
//   "name"                        an entry of the file's "groups" object, or <dir>/name.json
//   {"name", "order", "table"}    an inline table
// Gamma-group references work the same way through "gamma_groups".

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "nacoh/exactness.hpp"

namespace nacoh {

using Json = nlohmann::json;

enum class InputKind { group, gamma_group, crossed_module, ses, cocycle1, cocycle2 };

const char* to_string(InputKind kind);

class Loader {
 public:
  // Errors: ParseError with the file path.
  explicit Loader(const std::filesystem::path& file, GroupLimits limits = {});
  Loader(Json document, std::filesystem::path base_dir, std::string label, GroupLimits limits = {});

  const Json& document() const noexcept { return doc_; }
  InputKind detect() const;

  GroupPtr group() const;
  GammaGroup gamma_group() const;
  CrossedModulePtr crossed_module() const;
  ShortExactSequence ses() const;
  std::vector<Elem> cocycle1() const;
  Cocycle2Crossed cocycle2() const;

  // Reference resolution; `where` is a JSON path used in error messages.
  GroupPtr resolve_group(const Json& ref, const std::string& where) const;
  GammaGroup resolve_gamma_group(const Json& ref, const std::string& where) const;
  GroupHom resolve_hom(const Json& ref, const GroupPtr& source, const GroupPtr& target,
                       const std::string& where) const;

 private:
  GroupPtr group_from(const Json& obj, const std::string& where) const;
  GammaGroup gamma_group_from(const Json& obj, const std::string& where) const;
  Json sibling(const std::string& name, const std::string& where) const;
  std::string at(const std::string& where) const;

  Json doc_;
  std::filesystem::path dir_;
  std::string label_;
  GroupLimits limits_;
};

// Standard names: Zn / Cn, Dn (order 2n), Sn, Q8, and products joined by 'x'.
// Returns nullptr if `name` is not of that form.
GroupPtr standard_group_by_name(const std::string& name, GroupLimits limits = {});

// Canonical content of validated objects, used for cache keys.
Json canonical(const FiniteGroup& g);
Json canonical(const GroupHom& h);
Json canonical(const GammaGroup& x);
Json canonical(const GammaCrossedModule& m);
Json canonical(const ShortExactSequence& ses);

std::uint64_t fnv1a(std::string_view bytes);

}  // namespace nacoh
