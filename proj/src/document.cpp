#include "colalg/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "colalg/errors.hpp"
#include "colalg/identities.hpp"

namespace colalg {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw InputError(where + ": " + msg);
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, "missing member '" + key + "'");
  return *it;
}

void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) fail(where, "unknown member '" + it.key() + "'");
  }
}

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::uint32_t as_index(const json& j, std::size_t bound, const std::string& where) {
  const std::int64_t v = as_int(j, where);
  if (v < 0 || static_cast<std::uint64_t>(v) >= bound)
    fail(where, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<std::uint32_t>(v);
}

Scalar as_scalar(const json& j, const Field& field, const std::string& where) {
  if (!j.is_string()) fail(where, "scalars are strings such as \"1/2\"");
  try {
    return field.parse(j.get<std::string>());
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

const std::string& as_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get_ref<const std::string&>();
}

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

Field parse_field(const json& j) {
  only_keys(j, {"rationals", "prime"}, "field");
  if (j.contains("rationals")) {
    if (j.size() != 1 || j["rationals"] != true) fail("field", "expected {\"rationals\": true}");
    return Field::rationals();
  }
  const std::int64_t p = as_int(member(j, "prime", "field"), "field.prime");
  if (p < 2 || p > 0x7fffffff) fail("field.prime", "modulus out of range");
  try {
    return Field::prime(static_cast<std::uint32_t>(p), true);
  } catch (const InputError& e) {
    fail("field.prime", e.what());
  }
}

GradingGroup parse_group(const json& j) {
  only_keys(j, {"free_rank", "torsion"}, "group");
  const std::int64_t r = as_int(member(j, "free_rank", "group"), "group.free_rank");
  if (r < 0) fail("group.free_rank", "must be nonnegative");
  const json& t = member(j, "torsion", "group");
  if (!t.is_array()) fail("group.torsion", "expected an array");
  std::vector<std::int64_t> torsion;
  for (std::size_t i = 0; i < t.size(); ++i) torsion.push_back(as_int(t[i], at("group.torsion", i)));
  try {
    return GradingGroup(static_cast<std::size_t>(r), torsion);
  } catch (const InputError& e) {
    fail("group", e.what());
  }
}

Bicharacter parse_bicharacter(const json& j, const GradingGroup& G, const Field& field) {
  only_keys(j, {"builtin", "on_generators"}, "bicharacter");
  if (j.size() != 1) fail("bicharacter", "give exactly one of 'builtin' or 'on_generators'");
  Bicharacter bc;
  if (j.contains("builtin")) {
    const std::string& name = as_string(j["builtin"], "bicharacter.builtin");
    auto which = parse_builtin_bicharacter(name);
    if (!which) fail("bicharacter.builtin", "unknown builtin '" + name + "'");
    const std::size_t n = *which == BuiltinBicharacter::Z2n ? G.torsion().size() : 1;
    bc = Bicharacter::builtin(*which, field, n);
    if (!(bc.group() == G)) fail("bicharacter.builtin", "builtin '" + name + "' does not match the declared group");
  } else {
    const json& rows = j["on_generators"];
    if (!rows.is_array()) fail("bicharacter.on_generators", "expected an array of rows");
    std::vector<std::vector<Scalar>> table;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string wi = at("bicharacter.on_generators", i);
      if (!rows[i].is_array()) fail(wi, "expected an array");
      std::vector<Scalar> row;
      for (std::size_t k = 0; k < rows[i].size(); ++k) row.push_back(as_scalar(rows[i][k], field, at(wi, k)));
      table.push_back(std::move(row));
    }
    try {
      bc = Bicharacter(G, std::move(table));
    } catch (const InputError& e) {
      fail("bicharacter.on_generators", e.what());
    }
  }
  const AxiomReport r = bc.validate();
  if (!r.pass()) fail("bicharacter", "not a bicharacter\n" + r.render());
  return bc;
}

GradedBasis parse_basis(const json& j, const GradingGroup& G, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  std::vector<BasisEntry> entries;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string wi = at(where, i);
    only_keys(j[i], {"name", "degree"}, wi);
    const std::string& name = as_string(member(j[i], "name", wi), wi + ".name");
    const json& d = member(j[i], "degree", wi);
    if (!d.is_array()) fail(wi + ".degree", "expected an array");
    if (d.size() != G.rank())
      fail(wi + ".degree", "has length " + std::to_string(d.size()) + ", group rank is " + std::to_string(G.rank()));
    std::vector<std::int64_t> coords;
    for (std::size_t k = 0; k < d.size(); ++k) coords.push_back(as_int(d[k], at(wi + ".degree", k)));
    entries.push_back({name, G.element(std::move(coords))});
  }
  try {
    return GradedBasis(std::move(entries));
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

void parse_entries(const json& j, MultilinearOp& op, const Field& field, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of constants");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string wi = at(where, i);
    const json& e = j[i];
    if (op.scalar_valued())
      only_keys(e, {"args", "coef"}, wi);
    else
      only_keys(e, {"args", "out", "coef"}, wi);
    const json& args = member(e, "args", wi);
    if (!args.is_array() || args.size() != op.arity())
      fail(wi + ".args", "expected " + std::to_string(op.arity()) + " indices");
    std::vector<std::uint32_t> a;
    for (std::size_t s = 0; s < args.size(); ++s) a.push_back(as_index(args[s], op.slot_dims()[s], at(wi + ".args", s)));
    const std::uint32_t out = op.scalar_valued() ? 0 : as_index(member(e, "out", wi), op.out_dim(), wi + ".out");
    op.add(a, out, as_scalar(member(e, "coef", wi), field, wi + ".coef"));
  }
}

json entries_json(const MultilinearOp& op) {
  json list = json::array();
  op.for_each([&](std::span<const std::uint32_t> args, std::uint32_t out, const Scalar& c) {
    json e;
    e["args"] = std::vector<std::uint32_t>(args.begin(), args.end());
    if (!op.scalar_valued()) e["out"] = out;
    e["coef"] = c.to_string();
    list.push_back(std::move(e));
  });
  return list;
}

json basis_json(const GradedBasis& basis) {
  json list = json::array();
  for (const auto& e : basis.entries()) list.push_back({{"name", e.name}, {"degree", e.degree.coords}});
  return list;
}

}  // namespace

GradedAlgebraObject parse_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("syntax error: ") + e.what());
  }
  only_keys(doc,
            {"field", "group", "bicharacter", "basis", "ops", "claims", "maps", "module", "name", "comment",
             "variant", "provenance"},
            "document");

  GradedAlgebraObject obj;
  obj.field = parse_field(member(doc, "field", "document"));
  const GradingGroup G = parse_group(member(doc, "group", "document"));
  obj.bicharacter = parse_bicharacter(member(doc, "bicharacter", "document"), G, obj.field);
  obj.basis = parse_basis(member(doc, "basis", "document"), G, "basis");
  const std::size_t n = obj.basis.size();

  for (const char* key : {"name", "comment", "variant", "provenance"})
    if (doc.contains(key)) {
      const std::string& v = as_string(doc[key], key);
      if (std::string(key) == "name") obj.name = v;
      else if (std::string(key) == "comment") obj.comment = v;
      else if (std::string(key) == "variant") obj.variant = v;
      else obj.provenance = v;
    }

  if (doc.contains("ops")) {
    const json& ops = doc["ops"];
    if (!ops.is_object()) fail("ops", "expected an object");
    for (auto it = ops.begin(); it != ops.end(); ++it) {
      const auto arity = op_arity(it.key());
      if (!arity) fail("ops." + it.key(), "unknown operation name");
      MultilinearOp op = MultilinearOp::on_space(it.key(), *arity, n, it.key() == "form2");
      parse_entries(it.value(), op, obj.field, "ops." + it.key());
      obj.set_op(std::move(op));
    }
  }

  if (doc.contains("claims")) {
    const json& claims = doc["claims"];
    if (!claims.is_array()) fail("claims", "expected an array");
    for (std::size_t i = 0; i < claims.size(); ++i) {
      const std::string& c = as_string(claims[i], at("claims", i));
      if (!parse_identity(c)) fail(at("claims", i), "unknown identity '" + c + "'");
      obj.claims.push_back(c);
    }
  }

  if (doc.contains("maps")) {
    const json& maps = doc["maps"];
    if (!maps.is_object()) fail("maps", "expected an object");
    for (auto it = maps.begin(); it != maps.end(); ++it) {
      const std::string where = "maps." + it.key();
      const json& rows = it.value();
      if (!rows.is_array()) fail(where, "expected an array of rows");
      const std::size_t cols = rows.empty() ? 0 : (rows[0].is_array() ? rows[0].size() : 0);
      EvenLinearMap m(rows.size(), cols);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array() || rows[r].size() != cols) fail(at(where, r), "rows must have equal length");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, as_scalar(rows[r][c], obj.field, at(at(where, r), c)));
      }
      obj.maps.emplace(it.key(), std::move(m));
    }
  }

  if (doc.contains("module")) {
    const json& mod = doc["module"];
    only_keys(mod, {"basis", "actions"}, "module");
    ModuleData data;
    data.basis = parse_basis(member(mod, "basis", "module"), G, "module.basis");
    if (mod.contains("actions")) {
      const json& acts = mod["actions"];
      if (!acts.is_object()) fail("module.actions", "expected an object");
      for (auto it = acts.begin(); it != acts.end(); ++it) {
        if (!action_pattern(it.key())) fail("module.actions." + it.key(), "unknown module action");
        MultilinearOp op = make_action(it.key(), n, data.basis.size());
        parse_entries(it.value(), op, obj.field, "module.actions." + it.key());
        data.actions.emplace(it.key(), std::move(op));
      }
    }
    obj.module = std::move(data);
  }

  const AxiomReport g = grading_check(obj);
  if (!g.pass()) fail("grading", "a structure constant is not homogeneous\n" + g.render());
  return obj;
}

std::string serialize_algebra(const GradedAlgebraObject& obj) {
  json doc;
  if (obj.field.is_rational())
    doc["field"] = {{"rationals", true}};
  else
    doc["field"] = {{"prime", obj.field.characteristic()}};
  const GradingGroup& G = obj.group();
  doc["group"] = {{"free_rank", G.free_rank()}, {"torsion", G.torsion()}};
  if (obj.bicharacter.builtin_tag()) {
    doc["bicharacter"] = {{"builtin", to_string(*obj.bicharacter.builtin_tag())}};
  } else {
    json rows = json::array();
    for (const auto& row : obj.bicharacter.table()) {
      json r = json::array();
      for (const auto& v : row) r.push_back(v.to_string());
      rows.push_back(std::move(r));
    }
    doc["bicharacter"] = {{"on_generators", rows}};
  }
  doc["basis"] = basis_json(obj.basis);
  doc["ops"] = json::object();
  for (const auto& [name, op] : obj.ops) doc["ops"][name] = entries_json(op);
  doc["claims"] = obj.claims;
  if (!obj.maps.empty()) {
    json maps = json::object();
    for (const auto& [name, m] : obj.maps) {
      json rows = json::array();
      for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.entry(r, c).to_string());
        rows.push_back(std::move(row));
      }
      maps[name] = std::move(rows);
    }
    doc["maps"] = std::move(maps);
  }
  if (obj.module) {
    json acts = json::object();
    for (const auto& [name, op] : obj.module->actions) acts[name] = entries_json(op);
    doc["module"] = {{"basis", basis_json(obj.module->basis)}, {"actions", acts}};
  }
  if (!obj.name.empty()) doc["name"] = obj.name;
  if (!obj.comment.empty()) doc["comment"] = obj.comment;
  if (!obj.variant.empty()) doc["variant"] = obj.variant;
  if (!obj.provenance.empty()) doc["provenance"] = obj.provenance;
  return doc.dump(2) + "\n";
}

GradedAlgebraObject read_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_algebra(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_algebra_file(const std::string& path, const GradedAlgebraObject& obj) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << serialize_algebra(obj);
}

}  // namespace colalg
