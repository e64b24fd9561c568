#include "nacoh/io.hpp"

#include <algorithm>
#include <fstream>
#include <regex>

namespace nacoh {

namespace {

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) parse_error(where, std::string("missing \"") + key + "\"");
  return obj.at(key);
}

std::vector<Elem> int_array(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_error(where, "expected an integer array");
  std::vector<Elem> out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_number_integer()) parse_error(where + "/" + std::to_string(k), "expected an integer");
    out.push_back(j[k].get<Elem>());
  }
  return out;
}

// Validator errors become ValidationError carrying the JSON location and
// the original code.
template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ValidationError) throw;
    throw Error(ErrorCode::ValidationError, where + ": " + to_string(e.code()) + ": " + e.what());
  }
}

Json read_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::ParseError, file.string() + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, file.string() + ": " + e.what());
  }
}

}  // namespace

const char* to_string(InputKind kind) {
  switch (kind) {
    case InputKind::group: return "group";
    case InputKind::gamma_group: return "gamma_group";
    case InputKind::crossed_module: return "crossed_module";
    case InputKind::ses: return "ses";
    case InputKind::cocycle1: return "cocycle1";
    case InputKind::cocycle2: return "cocycle2";
  }
  return "?";
}

GroupPtr standard_group_by_name(const std::string& name, GroupLimits limits) {
  if (name.find('x') != std::string::npos) {
    GroupPtr out;
    std::size_t start = 0;
    while (start <= name.size()) {
      const std::size_t end = std::min(name.find('x', start), name.size());
      GroupPtr f = standard_group_by_name(name.substr(start, end - start), limits);
      if (!f) return nullptr;
      out = out ? direct_product(out, f, limits) : f;
      start = end + 1;
    }
    return out;
  }
  static const std::regex pattern("([ZCDS])([0-9]+)");
  std::smatch m;
  if (name == "Q8") return quaternion_group();
  if (!std::regex_match(name, m, pattern)) return nullptr;
  const int n = std::stoi(m[2].str());
  switch (m[1].str()[0]) {
    case 'Z':
    case 'C': return cyclic_group(n, limits);
    case 'D': return dihedral_group(n, limits);
    default: return symmetric_group(n, limits);
  }
}

Loader::Loader(const std::filesystem::path& file, GroupLimits limits)
    : doc_(read_json(file)), dir_(file.parent_path()), label_(file.string()), limits_(limits) {}

Loader::Loader(Json document, std::filesystem::path base_dir, std::string label, GroupLimits limits)
    : doc_(std::move(document)), dir_(std::move(base_dir)), label_(std::move(label)), limits_(limits) {}

std::string Loader::at(const std::string& where) const { return label_ + "#" + where; }

InputKind Loader::detect() const {
  if (!doc_.is_object()) parse_error(at(""), "expected a JSON object");
  if (doc_.contains("i") && doc_.contains("j")) return InputKind::ses;
  if (doc_.contains("rho") || doc_.contains("module")) return InputKind::crossed_module;
  if (doc_.contains("gamma") && doc_.contains("group")) return InputKind::gamma_group;
  if (doc_.contains("table")) return InputKind::group;
  if (doc_.contains("u") && doc_.contains("psi")) return InputKind::cocycle2;
  if (doc_.contains("values")) return InputKind::cocycle1;
  parse_error(at(""), "unrecognized input shape");
}

Json Loader::sibling(const std::string& name, const std::string& where) const {
  const auto path = dir_ / (name + ".json");
  if (!std::filesystem::exists(path)) parse_error(at(where), "unresolved reference \"" + name + "\"");
  return read_json(path);
}

GroupPtr Loader::group_from(const Json& obj, const std::string& where) const {
  if (obj.contains("standard")) {
    auto name = member(obj, "standard", at(where)).get<std::string>();
    GroupPtr g = located(at(where), [&] { return standard_group_by_name(name, limits_); });
    if (!g) parse_error(at(where), "unknown standard group \"" + name + "\"");
    return g;
  }
  const std::string name = obj.value("name", std::string("G"));
  const auto order = member(obj, "order", at(where)).get<std::size_t>();
  const Json& rows = member(obj, "table", at(where));
  if (!rows.is_array() || rows.size() != order) parse_error(at(where + "/table"), "expected " + std::to_string(order) + " rows");
  std::vector<Elem> table;
  for (std::size_t r = 0; r < order; ++r) {
    auto row = int_array(rows[r], at(where + "/table/" + std::to_string(r)));
    if (row.size() != order) parse_error(at(where + "/table/" + std::to_string(r)), "row has wrong length");
    table.insert(table.end(), row.begin(), row.end());
  }
  return located(at(where), [&] {
    if (order > limits_.max_order)
      throw Error(ErrorCode::UnsupportedSize, "order " + std::to_string(order) + " exceeds the supported bound");
    return std::make_shared<const FiniteGroup>(name, order, std::move(table));
  });
}

GroupPtr Loader::resolve_group(const Json& ref, const std::string& where) const {
  if (ref.is_object()) return group_from(ref, where);
  if (!ref.is_string()) parse_error(at(where), "expected a group reference");
  const auto name = ref.get<std::string>();
  if (doc_.contains("groups") && doc_["groups"].contains(name)) return group_from(doc_["groups"][name], "groups/" + name);
  if (std::filesystem::exists(dir_ / (name + ".json"))) {
    Loader other(dir_ / (name + ".json"), limits_);
    return other.group_from(other.doc_, "");
  }
  if (GroupPtr g = located(at(where), [&] { return standard_group_by_name(name, limits_); })) return g;
  parse_error(at(where), "unresolved reference \"" + name + "\"");
}

GroupHom Loader::resolve_hom(const Json& ref, const GroupPtr& source, const GroupPtr& target,
                             const std::string& where) const {
  const Json& images = ref.is_object() ? member(ref, "images", at(where)) : ref;
  auto values = int_array(images, at(where + "/images"));
  if (ref.is_object()) {
    if (ref.contains("source") && !(*resolve_group(ref["source"], where + "/source") == *source))
      throw Error(ErrorCode::ValidationError, at(where) + ": source does not match");
    if (ref.contains("target") && !(*resolve_group(ref["target"], where + "/target") == *target))
      throw Error(ErrorCode::ValidationError, at(where) + ": target does not match");
  }
  return located(at(where), [&] { return GroupHom(source, target, std::move(values)); });
}

GammaGroup Loader::gamma_group_from(const Json& obj, const std::string& where) const {
  GroupPtr gamma = resolve_group(member(obj, "gamma", at(where)), where + "/gamma");
  GroupPtr grp = resolve_group(member(obj, "group", at(where)), where + "/group");
  if (!obj.contains("action") || obj["action"].is_null())
    return located(at(where), [&] { return trivial_gamma_group(gamma, grp, nullptr, limits_); });
  const Json& action = obj["action"];
  if (!action.is_array() || action.size() != gamma->order())
    parse_error(at(where + "/action"), "expected one permutation per Gamma element");
  std::vector<std::vector<Elem>> perms;
  for (std::size_t s = 0; s < action.size(); ++s)
    perms.push_back(int_array(action[s], at(where + "/action/" + std::to_string(s))));
  return located(at(where), [&] { return make_gamma_group(gamma, grp, perms, nullptr, limits_); });
}

GammaGroup Loader::resolve_gamma_group(const Json& ref, const std::string& where) const {
  if (ref.is_object()) return gamma_group_from(ref, where);
  if (!ref.is_string()) parse_error(at(where), "expected a Gamma-group reference");
  const auto name = ref.get<std::string>();
  if (doc_.contains("gamma_groups") && doc_["gamma_groups"].contains(name))
    return gamma_group_from(doc_["gamma_groups"][name], "gamma_groups/" + name);
  Loader other(sibling(name, where), dir_, (dir_ / (name + ".json")).string(), limits_);
  return other.gamma_group_from(other.doc_, "");
}

GroupPtr Loader::group() const { return group_from(doc_, ""); }

GammaGroup Loader::gamma_group() const { return gamma_group_from(doc_, ""); }

CrossedModulePtr Loader::crossed_module() const {
  if (doc_.contains("module")) {
    // {"module": "inn" | "aut" | "center" | "trivial", "A": gamma-group-ref}
    const auto kind = doc_["module"].get<std::string>();
    GammaGroup a = resolve_gamma_group(member(doc_, "A", at("")), "A");
    return located(at("module"), [&] {
      if (kind == "inn") return inn_crossed_module(a, limits_);
      if (kind == "aut") return aut_crossed_module(a, limits_);
      if (kind == "center") return center_crossed_module(a, limits_);
      if (kind == "trivial") return trivial_crossed_module(a, limits_);
      throw Error(ErrorCode::ParseError, "unknown module kind \"" + kind + "\"");
    });
  }
  GammaGroup a = resolve_gamma_group(member(doc_, "A", at("")), "A");
  GammaGroup g = resolve_gamma_group(member(doc_, "G", at("")), "G");
  GroupHom rho = resolve_hom(member(doc_, "rho", at("")), a.group(), g.group(), "rho");
  const Json& action = member(doc_, "action", at(""));
  if (!action.is_array() || action.size() != g.order())
    parse_error(at("action"), "expected one permutation of A per element of G");
  std::vector<Elem> images;
  for (std::size_t x = 0; x < action.size(); ++x) {
    const std::string where = "action/" + std::to_string(x);
    auto perm = int_array(action[x], at(where));
    auto idx = a.aut()->index_of(perm);
    if (!idx) throw Error(ErrorCode::NotAnAction, at(where) + ": not an automorphism of A");
    images.push_back(*idx);
  }
  GroupHom act = located(at("action"), [&] { return GroupHom(g.group(), a.aut()->carrier(), std::move(images)); });
  return located(at(""), [&] { return validate_crossed_module(a, g, std::move(rho), std::move(act)); });
}

ShortExactSequence Loader::ses() const {
  GammaGroup a = resolve_gamma_group(member(doc_, "A", at("")), "A");
  GammaGroup b = resolve_gamma_group(member(doc_, "B", at("")), "B");
  GammaGroup c = resolve_gamma_group(member(doc_, "C", at("")), "C");
  GroupHom i = resolve_hom(member(doc_, "i", at("")), a.group(), b.group(), "i");
  GroupHom j = resolve_hom(member(doc_, "j", at("")), b.group(), c.group(), "j");
  return located(at(""), [&] { return validate_ses(a, b, c, std::move(i), std::move(j)); });
}

std::vector<Elem> Loader::cocycle1() const { return int_array(member(doc_, "values", at("")), at("values")); }

Cocycle2Crossed Loader::cocycle2() const {
  return Cocycle2Crossed{int_array(member(doc_, "u", at("")), at("u")), int_array(member(doc_, "psi", at("")), at("psi"))};
}

// ---------------------------------------------------------------------------

Json canonical(const FiniteGroup& g) { return Json{{"order", g.order()}, {"table", g.table()}}; }

Json canonical(const GroupHom& h) {
  return Json{{"source", canonical(*h.source())}, {"target", canonical(*h.target())}, {"images", h.images()}};
}

Json canonical(const GammaGroup& x) {
  Json action = Json::array();
  for (std::size_t s = 0; s < x.gamma_order(); ++s) action.push_back(x.aut()->realize(x.action_of(static_cast<Elem>(s))));
  return Json{{"gamma", canonical(*x.gamma())}, {"group", canonical(*x.group())}, {"action", action}};
}

Json canonical(const GammaCrossedModule& m) {
  Json action = Json::array();
  for (std::size_t g = 0; g < m.g_group().order(); ++g)
    action.push_back(m.A().aut()->realize(m.g_action()(static_cast<Elem>(g))));
  return Json{{"A", canonical(m.A())}, {"G", canonical(m.G())}, {"rho", m.rho().images()}, {"action", action}};
}

Json canonical(const ShortExactSequence& ses) {
  return Json{{"A", canonical(ses.A())},
              {"B", canonical(ses.B())},
              {"C", canonical(ses.C())},
              {"i", ses.i().images()},
              {"j", ses.j().images()}};
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace nacoh
