#include "colalg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "colalg/analysis.hpp"
#include "colalg/audit.hpp"
#include "colalg/constructions.hpp"
#include "colalg/corpus.hpp"
#include "colalg/document.hpp"
#include "colalg/errors.hpp"
#include "colalg/identities.hpp"
#include "colalg/operators.hpp"

namespace colalg {

namespace {

/// Exit code 1 carrying a report to print.
struct Violation {
  std::string message;
  AxiomReport report;
};

using Params = std::map<std::string, std::string>;

Params parse_params(const std::vector<std::string>& raw) {
  Params p;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--param expects KEY=VALUE, got '" + kv + "'");
    p[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return p;
}

std::string need(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw InputError("recipe needs --param " + key + "=...");
  return it->second;
}

std::string get_or(const Params& p, const std::string& key, const std::string& fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

template <class T>
T parsed(std::optional<T> v, const std::string& what, const std::string& text) {
  if (!v) throw InputError("unknown " + what + " '" + text + "'");
  return *v;
}

std::string element_text(const GradedElement& v, const GradedBasis& basis) { return v.to_string(basis); }

std::string map_text(const EvenLinearMap& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? " " : "") + m.entry(r, c).to_string();
    s += "]\n";
  }
  return s;
}

RepresentationObject representation_from_document(const GradedAlgebraObject& d) {
  if (!d.module) throw InputError("representation document needs a module block");
  RepresentationObject r;
  r.algebra = d;
  r.algebra.module.reset();
  r.module_basis = d.module->basis;
  r.lambda = d.module->action("lambda");
  r.mu = d.module->action("mu");
  r.rho = d.module->action("rho");
  return r;
}

GradedAlgebraObject run_recipe(const std::string& recipe, const Params& p, const std::vector<GradedAlgebraObject>& in) {
  ConstructOptions opts;
  opts.variant = get_or(p, "variant", "printed");
  const std::string verify = get_or(p, "verify", "true");
  if (verify != "true" && verify != "false") throw InputError("verify must be true or false");
  opts.verify = verify == "true";

  auto input = [&](std::size_t i) -> const GradedAlgebraObject& {
    if (in.size() <= i) throw InputError("recipe '" + recipe + "' needs " + std::to_string(i + 1) + " --in file(s)");
    return in[i];
  };
  auto weight = [&](const GradedAlgebraObject& obj) -> std::optional<Scalar> {
    auto it = p.find("weight");
    if (it == p.end()) return std::nullopt;
    return obj.field.parse(it->second);
  };
  auto map_param = [&](const GradedAlgebraObject& obj, const std::string& key) { return obj.map(need(p, key)); };
  auto module_out = [](const BimoduleObject& b) { return with_module(b); };

  if (recipe == "derive_ternary") return derive_ternary_from_binary(input(0), opts);
  if (recipe == "xi_contraction") {
    const auto& L = input(0);
    const std::string xi = need(p, "xi");
    auto idx = L.basis.find(xi);
    if (!idx) throw InputError("no basis element '" + xi + "'");
    return binary_from_ternary_at(L, static_cast<std::uint32_t>(*idx), opts);
  }
  if (recipe == "twist2") {
    const auto& L = input(0);
    const std::string k = need(p, "kind");
    return twist_binary(L, map_param(L, "map"), parsed(parse_binary_twist(k), "binary twist", k), weight(L), opts);
  }
  if (recipe == "twist3") {
    const auto& L = input(0);
    const std::string k = need(p, "kind");
    return ternary_twist(L, map_param(L, "map"), parsed(parse_ternary_twist(k), "ternary twist", k), weight(L), opts);
  }
  if (recipe == "direct_sum") {
    const std::string k = get_or(p, "kind", "binary");
    return direct_sum(input(0), input(1), parsed(parse_sum_kind(k), "sum kind", k), opts);
  }
  if (recipe == "semidirect_sum") return semidirect_sum(as_bimodule(input(0)), opts);
  if (recipe == "tensor_square_ternary") return tensor_square_ternary(input(0), opts);
  if (recipe == "tensor_assoc_ternary") return tensor_assoc_ternary(input(0), input(1), opts);
  if (recipe == "tensor_square_poisson3") return tensor_square_poisson3(input(0), opts);
  if (recipe == "trialgebra") {
    const std::string t = need(p, "target");
    return from_trialgebra(input(0), parsed(parse_trialgebra_target(t), "trialgebra target", t), opts);
  }
  if (recipe == "star_product") return star_product(input(0));
  if (recipe == "rb_trialgebra") {
    const auto& T = input(0);
    const std::string t = need(p, "target");
    const Identity target = parsed(parse_identity(t), "identity", t);
    auto w = weight(T);
    if (!w) throw InputError("rb_trialgebra needs --param weight=0 or -1");
    return rb_trialgebra_derived(T, map_param(T, "map"), *w, target, opts);
  }
  if (recipe == "dialgebra") return from_dialgebra(input(0), opts);
  if (recipe == "associative") {
    const auto& A = input(0);
    const std::string t = need(p, "target");
    std::optional<EvenLinearMap> theta;
    if (p.count("map")) theta = map_param(A, "map");
    return from_associative(A, parsed(parse_assoc_target(t), "associative target", t), theta, opts);
  }
  if (recipe == "poisson_to_ternary") {
    const std::string r = get_or(p, "recipe", "NESTED_BRACKET");
    return poisson_to_ternary(input(0), parsed(parse_poisson_recipe(r), "Poisson recipe", r), opts);
  }
  if (recipe == "lie") {
    const std::string t = need(p, "target");
    if (t != "LTS" && t != "COMSTRANS") throw InputError("unknown Lie target '" + t + "'");
    return from_lie(input(0), t == "LTS" ? LieTarget::LTS : LieTarget::COMSTRANS, opts);
  }
  if (recipe == "jts_to_lts") return jts_to_lts(input(0), opts);
  if (recipe == "comstrans_form") {
    const auto& F = input(0);
    return comstrans_from_bilinear_form(F.basis, F.bicharacter, F.field, F.op("form2"), opts);
  }
  if (recipe == "opposite_product") return opposite_product(input(0), opts);
  if (recipe == "bimodule_adjoint") return module_out(bimodule_adjoint(input(0), opts));
  if (recipe == "bimodule_semidirect3") return bimodule_semidirect3(as_bimodule(input(0)), opts);
  if (recipe == "bimodule_direct_sum")
    return module_out(bimodule_direct_sum(as_bimodule(input(0)), as_bimodule(input(1)), opts));
  if (recipe == "bimodule_tensor") return module_out(bimodule_tensor(as_bimodule(input(0)), as_bimodule(input(1)), opts));
  if (recipe == "bimodule_from_binary") return module_out(bimodule_from_binary(as_bimodule(input(0)), opts));
  if (recipe == "bimodule_pullback")
    return module_out(bimodule_pullback(input(0), input(1), map_param(input(0), "map"), opts));
  if (recipe == "to_representation") return representation_document(to_representation(as_bimodule(input(0)), opts));
  if (recipe == "from_representation")
    return module_out(from_representation(representation_from_document(input(0)), opts));
  throw InputError("unknown recipe '" + recipe + "'");
}

const char* kRecipes =
    "derive_ternary xi_contraction twist2 twist3 direct_sum semidirect_sum tensor_square_ternary "
    "tensor_assoc_ternary tensor_square_poisson3 trialgebra star_product rb_trialgebra dialgebra associative "
    "poisson_to_ternary lie jts_to_lts comstrans_form opposite_product bimodule_adjoint bimodule_semidirect3 "
    "bimodule_direct_sum bimodule_tensor bimodule_from_binary bimodule_pullback to_representation "
    "from_representation";

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checker and construction toolkit for color (group-graded) algebras", "colalg"};
  app.require_subcommand(1);

  std::string file, identity, variant, map_name, predicate_name, weight_text, op_name, what, format = "text",
                                                                                            out_path, recipe;
  std::vector<std::string> params, inputs;
  std::uint32_t prime = 3;
  std::uint64_t budget = 1u << 22, seed = 1;
  std::size_t show = 20, cap = kDefaultWitnessCap;
  bool allow_char2 = false, serial = false, timing = false;

  auto* validate = app.add_subcommand("validate", "Parse a document and run the grading checks");
  validate->add_option("file", file, "Algebra document")->required();

  auto* check = app.add_subcommand("check", "Check an identity exhaustively (default: every claim)");
  check->add_option("file", file, "Algebra document")->required();
  check->add_option("--identity", identity, "Identity id, e.g. LEIBNIZ2");
  check->add_option("--variant", variant, "printed or amended where an identity has both");
  check->add_option("--cap", cap, "Witnesses to keep");

  auto* oper = app.add_subcommand("operator", "Check an operator identity for a stored map");
  oper->add_option("file", file, "Algebra document")->required();
  oper->add_option("--map", map_name, "Map name in the document")->required();
  oper->add_option("--predicate", predicate_name, "AVERAGING, CENTROID2, NIJENHUIS, ...")->required();
  oper->add_option("--weight", weight_text, "Weight for Rota-Baxter predicates");
  oper->add_option("--op", op_name, "Operation the predicate reads");

  auto* construct = app.add_subcommand("construct", "Apply a construction recipe");
  construct->add_option("--recipe", recipe, std::string("One of: ") + kRecipes)->required();
  construct->add_option("--param", params, "KEY=VALUE (repeatable)");
  construct->add_option("--in", inputs, "Input document (repeatable)")->required();
  construct->add_option("--out", out_path, "Output document")->required();

  auto* analyze = app.add_subcommand("analyze", "Centers, Leibniz kernel or centroid");
  analyze->add_option("file", file, "Algebra document")->required();
  analyze->add_option("--what", what, "centers, kernel, centroid2 or centroid3")
      ->required()
      ->check(CLI::IsMember({"centers", "kernel", "centroid2", "centroid3"}));

  auto* search = app.add_subcommand("search", "Enumerate even operators over GF(p)");
  search->add_option("file", file, "Algebra document")->required();
  search->add_option("--predicate", predicate_name, "Operator predicate")->required();
  search->add_option("--prime", prime, "Field size")->required();
  search->add_option("--weight", weight_text, "Weight for Rota-Baxter predicates");
  search->add_option("--budget", budget, "Largest admissible search space");
  search->add_option("--op", op_name, "Operation the predicate reads");
  search->add_option("--show", show, "Matches to print");
  search->add_flag("--allow-char2", allow_char2, "Permit p = 2");
  search->add_flag("--serial", serial, "Single-threaded enumeration");

  auto* audit = app.add_subcommand("audit", "Run every construction over the seeded corpus");
  audit->add_option("--seed", seed, "Corpus and operator-choice seed");
  audit->add_option("--out", out_path, "Write the report here instead of stdout");
  audit->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  audit->add_flag("--timing", timing, "Record per-row wall time (not byte-deterministic)");

  auto* canon = app.add_subcommand("canonicalize", "Rewrite a document in canonical form");
  canon->add_option("file", file, "Algebra document")->required();
  canon->add_option("--out", out_path, "Output path (default: stdout)");

  auto* corpus = app.add_subcommand("corpus", "Write the seeded corpus as documents");
  corpus->add_option("--seed", seed, "Corpus seed");
  corpus->add_option("--out", out_path, "Directory")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*validate) {
      const auto obj = read_algebra_file(file);
      out << "valid: " << (obj.name.empty() ? file : obj.name) << ", dimension " << obj.dim() << ", ops";
      for (const auto& [n, op] : obj.ops) out << ' ' << n << '(' << op.nonzero_count() << ')';
      out << '\n';
      return 0;
    }
    if (*check) {
      const auto obj = read_algebra_file(file);
      std::vector<std::string> ids;
      if (!identity.empty()) ids.push_back(identity);
      else ids = obj.claims;
      if (ids.empty()) throw InputError("no --identity given and the document claims nothing");
      bool ok = true;
      for (const auto& id : ids) {
        CheckOptions c;
        c.cap = cap;
        c.variant = variant.empty() && (obj.variant == "printed" || obj.variant == "amended") ? obj.variant : variant;
        const AxiomReport r = check_identity(obj, parsed(parse_identity(id), "identity", id), c);
        out << r.render();
        ok = ok && r.pass();
      }
      return ok ? 0 : 1;
    }
    if (*oper) {
      const auto obj = read_algebra_file(file);
      OperatorOptions o;
      o.op = op_name;
      if (!weight_text.empty()) o.weight = obj.field.parse(weight_text);
      const AxiomReport r =
          check_operator(obj, obj.map(map_name), parsed(parse_predicate(predicate_name), "predicate", predicate_name), o);
      out << r.render();
      return r.pass() ? 0 : 1;
    }
    if (*construct) {
      std::vector<GradedAlgebraObject> docs;
      for (const auto& f : inputs) docs.push_back(read_algebra_file(f));
      GradedAlgebraObject result;
      try {
        result = run_recipe(recipe, parse_params(params), docs);
      } catch (const PreconditionError& e) {
        throw Violation{std::string("hypothesis fails: ") + e.what(), e.report()};
      } catch (const ClaimError& e) {
        throw Violation{std::string("output fails its claim: ") + e.what(), e.report()};
      }
      write_algebra_file(out_path, result);
      out << "wrote " << out_path << " (dimension " << result.dim() << ")\n";
      return 0;
    }
    if (*analyze) {
      const auto obj = read_algebra_file(file);
      auto print_space = [&](const std::string& label, const Subspace& s) {
        out << label << " (dimension " << s.dim() << "):";
        if (s.dim() == 0) out << " 0";
        for (const auto& v : s.basis()) out << "  " << element_text(v, obj.basis);
        out << '\n';
      };
      if (what == "centers" || what == "kernel") {
        StructureSubspaces s;
        try {
          s = structure_subspaces(obj);
        } catch (const PreconditionError& e) {
          throw Violation{e.what(), e.report()};
        }
        if (what == "centers") {
          print_space("left center", s.left_center);
          print_space("right center", s.right_center);
          print_space("center", s.center);
        } else {
          print_space("Leibniz kernel", s.leibniz_kernel);
        }
        return 0;
      }
      const auto maps = centroid_space(obj, what == "centroid2" ? 2 : 3);
      out << what << " dimension " << maps.size() << '\n';
      for (std::size_t i = 0; i < maps.size(); ++i) out << "basis map " << i + 1 << ":\n" << map_text(maps[i]);
      return 0;
    }
    if (*search) {
      const auto obj = read_algebra_file(file);
      SearchConfig cfg;
      cfg.prime = prime;
      cfg.allow_char2 = allow_char2;
      cfg.predicate = parsed(parse_predicate(predicate_name), "predicate", predicate_name);
      cfg.op = op_name;
      cfg.budget = budget;
      if (!weight_text.empty()) cfg.weight = Field::prime(prime, allow_char2).parse(weight_text);
      const SearchResult r = serial ? search_operators_serial(obj, cfg) : search_operators(obj, cfg);
      out << r.matches << " of " << r.candidates << " candidates satisfy " << predicate_name << " over GF(" << prime
          << ")\n";
      for (std::size_t i = 0; i < std::min(show, r.maps.size()); ++i) out << "match " << i + 1 << ":\n" << map_text(r.maps[i]);
      return 0;
    }
    if (*audit) {
      AuditOptions o;
      o.seed = seed;
      o.timing = timing;
      const AuditReport r = run_audit(generate_corpus(seed), o);
      const std::string text = format == "machine" ? r.render_machine() : r.render_text();
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw InputError("cannot write '" + out_path + "'");
        f << text;
        out << r.rows.size() << " rows, " << r.failing_rows() << " failing, report in " << out_path << '\n';
      }
      return r.witness_count() == 0 ? 0 : 1;
    }
    if (*canon) {
      const auto obj = read_algebra_file(file);
      if (out_path.empty()) out << serialize_algebra(obj);
      else write_algebra_file(out_path, obj);
      return 0;
    }
    if (*corpus) {
      std::error_code ec;
      std::filesystem::create_directories(out_path, ec);
      if (ec) throw InputError("cannot create '" + out_path + "': " + ec.message());
      for (const auto& obj : generate_corpus(seed)) write_algebra_file(out_path + "/" + obj.name + ".alg", obj);
      return 0;
    }
  } catch (const Violation& v) {
    out << v.message << '\n' << v.report.render();
    return 1;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace colalg
