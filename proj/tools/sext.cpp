#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sext/catalog.hpp"
#include "sext/cayley_io.hpp"
#include "sext/enumerate.hpp"
#include "sext/expr.hpp"
#include "sext/extension.hpp"
#include "sext/iso.hpp"
#include "sext/upfamily.hpp"
#include "sext/verify.hpp"

namespace {

sext::FiniteSemigroup load_semigroup(const std::string& expr,
                                     const std::string& path) {
  if (!expr.empty() && !path.empty())
    throw std::invalid_argument("give either --expr or --in, not both");
  if (!expr.empty()) return sext::parse_semigroup_expr(expr);
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return sext::parse_cayley(in);
  }
  throw std::invalid_argument("no input: use --expr or --in");
}

// `iso` positionals: an existing file is parsed as a table, anything else as
// a constructor expression.
sext::FiniteSemigroup load_positional(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open " + arg);
    return sext::parse_cayley(in);
  }
  return sext::parse_semigroup_expr(arg);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');)
    if (!tok.empty()) out.push_back(tok);
  return out;
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {
      "commutative", "idempotents_commute", "regular",
      "inverse",     "clifford",            "sub_clifford",
      "boolean",     "linear",              "semilattice"};
  return names;
}

bool property_value(const sext::PropertyReport& p, const std::string& name) {
  if (name == "commutative") return p.commutative;
  if (name == "idempotents_commute") return p.idempotents_commute;
  if (name == "regular") return p.regular;
  if (name == "inverse") return p.inverse;
  if (name == "clifford") return p.clifford;
  if (name == "sub_clifford") return p.sub_clifford;
  if (name == "boolean") return p.boolean;
  if (name == "linear") return p.linear;
  if (name == "semilattice") return p.semilattice;
  throw std::invalid_argument("unknown property: " + name);
}

int run(int argc, char** argv) {
  CLI::App app{"finite semigroup extension workbench"};
  app.require_subcommand(1);

  std::string expr, in_path, ext_name, out_mode = "table", props_arg;
  std::string theorem_id, catalog_sel = "default";
  std::string iso_a, iso_b, enum_class, cat_mode = "exhaustive";
  int enum_n = 0, cat_max = 3;
  bool json = false, anti = false, with_tables = false;

  CLI::App* build = app.add_subcommand("build", "materialize an extension");
  build->add_option("--expr", expr, "constructor expression, e.g. L(2)xC(2)");
  build->add_option("--in", in_path, "input .cay file");
  build->add_option("--ext", ext_name, "extension class")->required();
  build->add_option("--out", out_mode, "output: table or elements")
      ->check(CLI::IsMember({"table", "elements"}));
  build->add_flag("--json", json, "JSON output");

  CLI::App* check = app.add_subcommand("check", "classify properties");
  check->add_option("--expr", expr, "constructor expression");
  check->add_option("--in", in_path, "input .cay file");
  check->add_option("--ext", ext_name,
                    "classify this extension of the input instead of the "
                    "input itself");
  check->add_option("--props", props_arg, "comma-separated property subset");
  check->add_flag("--json", json, "JSON output");

  CLI::App* verify = app.add_subcommand("verify", "check a classification "
                                                  "theorem over a catalog");
  verify->add_option("--theorem", theorem_id, "t1l, t1f, t1n, or t1u")
      ->required();
  verify->add_option("--catalog", catalog_sel,
                     "exhaustive[:k], curated[:k], or default");
  verify->add_flag("--json", json, "JSON output");

  CLI::App* iso = app.add_subcommand("iso", "decide isomorphism");
  iso->add_option("A", iso_a, ".cay file or expression")->required();
  iso->add_option("B", iso_b, ".cay file or expression")->required();
  iso->add_flag("--anti", anti, "look for an anti-isomorphism");
  iso->add_flag("--json", json, "JSON output");

  CLI::App* enumerate = app.add_subcommand("enumerate",
                                           "list upfamilies of a class");
  enumerate->add_option("--n", enum_n, "ground set size")->required();
  enumerate
      ->add_option("--class", enum_class,
                   "beta|phi|n2|lambda|upsilon or ultrafilter|filter|linked|"
                   "maximal-linked|upfamily")
      ->required();
  enumerate->add_flag("--json", json, "JSON output");

  CLI::App* catalog = app.add_subcommand("catalog", "list catalog semigroups");
  catalog->add_option("--max-order", cat_max, "largest order to include");
  catalog->add_option("--mode", cat_mode, "exhaustive or curated")
      ->check(CLI::IsMember({"exhaustive", "curated"}));
  catalog->add_flag("--tables", with_tables, "include Cayley tables");
  catalog->add_flag("--json", json, "JSON output");

  CLI::App* spot = app.add_subcommand("spotcheck",
                                      "recompute the fixed product identities");
  spot->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const sext::Caps caps = sext::Caps::from_env();

  if (build->parsed()) {
    sext::FiniteSemigroup base = load_semigroup(expr, in_path);
    sext::LabeledExtension ext =
        sext::build_extension(base, sext::parse_extension_class(ext_name), caps);
    if (json) {
      sext::ordered_json j;
      j["class"] = sext::class_name(ext.cls);
      j["base_order"] = base.order();
      j["order"] = ext.semigroup.order();
      std::vector<std::string> elems;
      for (const auto& u : ext.elements) elems.push_back(sext::format_upfamily(u));
      j["elements"] = elems;
      j["cay"] = sext::format_cayley(ext.semigroup);
      std::cout << j.dump(2) << "\n";
    } else if (out_mode == "table") {
      std::cout << sext::format_cayley(ext.semigroup);
    } else {
      for (const auto& u : ext.elements)
        std::cout << sext::format_upfamily(u) << "\n";
    }
    return 0;
  }

  if (check->parsed()) {
    sext::FiniteSemigroup base = load_semigroup(expr, in_path);
    sext::FiniteSemigroup target = base;
    if (!ext_name.empty())
      target = sext::build_extension(base, sext::parse_extension_class(ext_name),
                                     caps)
                   .semigroup;
    sext::PropertyReport rep = sext::classify(target);
    std::vector<std::string> props =
        props_arg.empty() ? property_names() : split_commas(props_arg);
    for (const auto& p : props) property_value(rep, p);  // validate names
    if (json) {
      sext::ordered_json full = sext::property_report_json(target, rep);
      if (!props_arg.empty()) {
        sext::ordered_json filtered;
        for (const auto& p : props) filtered[p] = full["properties"][p];
        full["properties"] = filtered;
      }
      std::cout << full.dump(2) << "\n";
    } else {
      std::cout << "order " << target.order() << "\n";
      for (const auto& p : props) {
        std::cout << p << " = " << (property_value(rep, p) ? "true" : "false");
        auto it = rep.witnesses.find(p);
        if (it != rep.witnesses.end()) {
          std::cout << "  (witness:";
          std::size_t labeled = p == "sub_clifford" ? 1 : it->second.size();
          for (std::size_t k = 0; k < it->second.size(); ++k)
            std::cout << " "
                      << (k < labeled ? target.label(it->second[k])
                                      : std::to_string(it->second[k]));
          std::cout << ")";
        }
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (verify->parsed()) {
    sext::Catalog cat = sext::parse_catalog_selector(catalog_sel);
    sext::TheoremReport rep = sext::verify_theorem(theorem_id, cat, caps);
    if (json)
      std::cout << sext::to_json(rep).dump(2) << "\n";
    else
      std::cout << sext::to_text(rep);
    return rep.all_equivalent ? 0 : 1;
  }

  if (iso->parsed()) {
    sext::FiniteSemigroup a = load_positional(iso_a);
    sext::FiniteSemigroup b = load_positional(iso_b);
    sext::IsoOptions opts;
    opts.anti = anti;
    auto witness = sext::find_isomorphism(a, b, opts);
    if (json) {
      sext::ordered_json j;
      j["isomorphic"] = witness.has_value();
      j["anti"] = anti;
      if (witness) j["mapping"] = *witness;
      std::cout << j.dump(2) << "\n";
    } else if (witness) {
      for (int i = 0; i < a.order(); ++i)
        std::cout << a.label(i) << " -> " << b.label((*witness)[i]) << "\n";
    } else {
      std::cout << (anti ? "not anti-isomorphic" : "not isomorphic") << "\n";
    }
    return witness ? 0 : 1;
  }

  if (enumerate->parsed()) {
    sext::ExtensionClass cls = sext::parse_extension_class(enum_class);
    std::vector<sext::Upfamily> fams =
        sext::enumerate_class_capped(enum_n, cls, caps);
    if (json) {
      sext::ordered_json j;
      j["ground"] = enum_n;
      j["class"] = sext::class_name(cls);
      j["count"] = fams.size();
      std::vector<std::string> lits;
      for (const auto& u : fams) lits.push_back(sext::format_upfamily(u));
      j["families"] = lits;
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& u : fams) std::cout << sext::format_upfamily(u) << "\n";
    }
    return 0;
  }

  if (catalog->parsed()) {
    sext::Catalog cat = cat_mode == "exhaustive"
                            ? sext::exhaustive_catalog(cat_max)
                            : sext::curated_catalog(cat_max);
    if (json) {
      sext::ordered_json j;
      j["provenance"] = cat.provenance;
      j["count"] = cat.entries.size();
      sext::ordered_json arr = sext::ordered_json::array();
      for (const auto& e : cat.entries) {
        sext::ordered_json je;
        je["name"] = e.name;
        je["order"] = e.sg.order();
        if (with_tables) je["cay"] = sext::format_cayley(e.sg);
        arr.push_back(je);
      }
      j["entries"] = arr;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "# " << cat.provenance << "\n";
      for (const auto& e : cat.entries) {
        std::cout << e.name << " (order " << e.sg.order() << ")\n";
        if (with_tables) std::cout << sext::format_cayley(e.sg);
      }
    }
    return 0;
  }

  if (spot->parsed()) {
    std::vector<sext::SpotcheckItem> items = sext::spotcheck_claims();
    bool all = true;
    for (const auto& it : items) all = all && it.pass;
    if (json)
      std::cout << sext::to_json(items).dump(2) << "\n";
    else
      std::cout << sext::to_text(items);
    return all ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sext::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
