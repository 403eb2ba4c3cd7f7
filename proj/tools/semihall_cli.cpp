// Command-line front end: object listings, Hall tables, verification suites
// and SDH structure constants, all as JSON on stdout (or --out).

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "semihall/backends.hpp"
#include "semihall/complexes.hpp"
#include "semihall/double.hpp"
#include "semihall/fp_matrix.hpp"
#include "semihall/hall.hpp"
#include "semihall/ideal_oracle.hpp"
#include "semihall/sdh.hpp"

using namespace semihall;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitConfig = 3;

struct RunConfig {
  std::string backend = "vect";
  std::string quiver_file;
  std::uint64_t q = 2;
  std::string bound_text = "2";
  std::vector<std::string> suites;
  unsigned jobs = 1;
  int k_radius = 1;
  int max_total = -1;
  std::string out;
  bool inject_fault = false;
};

K0Class parse_bound(const std::string& text, std::size_t rank) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      const int x = std::stoi(part, &used);
      if (used != part.size() || x < 0) throw ConfigError("");
      v.push_back(x);
    } catch (const std::exception&) {
      throw ConfigError("bound entries must be nonnegative integers: " + text);
    }
  }
  if (v.size() == 1 && rank > 1) v.assign(rank, v.front());
  if (v.size() != rank) {
    throw ConfigError("bound has " + std::to_string(v.size()) + " entries, expected " + std::to_string(rank));
  }
  return K0Class(v);
}

std::unique_ptr<HereditaryCategory> make_backend(const RunConfig& cfg) {
  if (!is_prime(cfg.q) || cfg.q > 7) throw ConfigError("q must be one of 2, 3, 5, 7");
  if (cfg.backend == "vect") return std::make_unique<VectBackend>(cfg.q);
  if (cfg.backend == "a2") return make_a2(cfg.q);
  if (cfg.backend == "quiver") {
    if (cfg.quiver_file.empty()) throw ConfigError("--backend quiver needs --quiver FILE");
    return load_quiver_file(cfg.quiver_file, cfg.q);
  }
  throw ConfigError("unknown backend " + cfg.backend);
}

/// Shared state for one invocation; the heavier algebras are built on first use.
struct Context {
  const RunConfig& cfg;
  std::unique_ptr<HereditaryCategory> cat;
  K0Class bound;
  std::unique_ptr<HallAlgebra> hall;
  std::unique_ptr<SDHAlgebra> sdh;
  std::unique_ptr<ComplexCategory> complexes;
  std::unique_ptr<QuotientOracle> oracle;
  std::unique_ptr<DrinfeldDouble> dd;

  explicit Context(const RunConfig& c) : cfg(c), cat(make_backend(c)), bound(parse_bound(c.bound_text, cat->k0_rank())) {
    hall = std::make_unique<HallAlgebra>(*cat);
    if (cfg.inject_fault) corrupt();
  }

  int max_total() const { return cfg.max_total >= 0 ? cfg.max_total : 2 * bound.l1(); }

  SDHAlgebra& sdh_algebra() {
    if (!sdh) sdh = std::make_unique<SDHAlgebra>(*cat);
    return *sdh;
  }
  QuotientOracle& quotient_oracle() {
    if (!oracle) {
      complexes = std::make_unique<ComplexCategory>(*cat);
      oracle = std::make_unique<QuotientOracle>(sdh_algebra(), *complexes);
    }
    return *oracle;
  }
  DrinfeldDouble& drinfeld_double() {
    if (!dd) dd = std::make_unique<DrinfeldDouble>(sdh_algebra());
    return *dd;
  }

  /// Test mode: doubles the first nontrivial Hall number within bound.
  void corrupt() {
    for (const auto& [m, n, r] : graded_triples(*cat, bound)) {
      if (m == cat->zero() || n == cat->zero()) continue;
      if (hall->hall_number(m, n, r).is_zero()) continue;
      hall->inject_fault(m, n, r, hall->scalar(2));
      return;
    }
  }
};

using SuiteFn = std::function<SuiteReport(Context&)>;

struct SuiteEntry {
  std::string name;
  bool in_default;
  SuiteFn run;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> suites = {
      {"hall-double-entry", true,
       [](Context& c) { return verify_hall_double_entry(*c.hall, *c.cat, c.bound, c.cfg.jobs); }},
      {"gaussian", true,
       [](Context& c) {
         if (c.cfg.backend != "vect") throw ConfigError("suite gaussian needs the vect backend");
         return verify_gaussian_oracle(*c.cat, c.bound.l1(), c.cfg.jobs);
       }},
      {"associativity", true, [](Context& c) { return verify_associativity(*c.hall, c.bound, c.cfg.jobs); }},
      {"euler-form", true, [](Context& c) { return verify_euler_form(*c.hall, *c.cat, c.bound, c.cfg.jobs); }},
      {"green", true, [](Context& c) { return verify_green_formula(*c.hall, c.bound, c.cfg.jobs); }},
      {"green-corollary", true, [](Context& c) { return verify_green_corollary(*c.hall, c.bound, c.cfg.jobs); }},
      {"green-counit", true, [](Context& c) { return verify_green_counit(*c.hall, c.bound, c.cfg.jobs); }},
      {"green-coassociativity", true,
       [](Context& c) { return verify_green_coassociativity(*c.hall, c.bound, c.cfg.jobs); }},
      {"green-bialgebra", true, [](Context& c) { return verify_green_bialgebra(*c.hall, c.bound, c.cfg.jobs); }},
      {"sdh-k-relations", true,
       [](Context& c) { return verify_k_relations(c.sdh_algebra(), c.cfg.k_radius + 1, c.cfg.jobs); }},
      {"sdh-associativity", false,
       [](Context& c) { return verify_sdh_associativity(c.sdh_algebra(), c.bound, c.cfg.k_radius, c.cfg.jobs); }},
      {"sdh-coassociativity", true,
       [](Context& c) { return verify_coassociativity(c.sdh_algebra(), c.bound, c.cfg.k_radius, c.cfg.jobs); }},
      {"sdh-compatibility", true,
       [](Context& c) { return verify_compatibility(c.sdh_algebra(), c.bound, c.cfg.k_radius, c.cfg.jobs); }},
      {"sdh-counit", true,
       [](Context& c) { return verify_counit(c.sdh_algebra(), c.bound, c.cfg.k_radius, c.cfg.jobs); }},
      {"normal-form", true, [](Context& c) { return verify_normal_form(c.quotient_oracle(), c.bound, c.cfg.jobs); }},
      {"k-well-defined", true,
       [](Context& c) { return verify_k_well_defined(c.quotient_oracle(), c.bound, c.cfg.jobs); }},
      {"basis-independence", true,
       [](Context& c) { return verify_basis_independence(c.quotient_oracle(), c.bound, c.cfg.jobs); }},
      {"product-oracle", true,
       [](Context& c) {
         return verify_product_oracle(c.quotient_oracle(), c.bound, c.cfg.k_radius, c.max_total(), c.cfg.jobs);
       }},
      {"ext-plus", true,
       [](Context& c) {
         const auto& e = c.drinfeld_double().plus();
         SuiteReport r = verify_ext_associativity(e, c.bound, c.cfg.k_radius, c.cfg.jobs);
         r.merge(verify_ext_coassociativity(e, c.bound, c.cfg.k_radius, c.cfg.jobs));
         r.merge(verify_ext_compatibility(e, c.bound, c.cfg.k_radius, c.cfg.jobs));
         r.merge(verify_ext_counit(e, c.bound, c.cfg.k_radius, c.cfg.jobs));
         r.name = "ext-plus";
         return r;
       }},
      {"ext-minus", true,
       [](Context& c) {
         const auto& e = c.drinfeld_double().minus();
         SuiteReport r = verify_ext_associativity(e, c.bound, c.cfg.k_radius, c.cfg.jobs);
         r.merge(verify_ext_coassociativity(e, c.bound, c.cfg.k_radius, c.cfg.jobs));
         r.merge(verify_ext_compatibility(e, c.bound, c.cfg.k_radius, c.cfg.jobs));
         r.merge(verify_ext_counit(e, c.bound, c.cfg.k_radius, c.cfg.jobs));
         r.name = "ext-minus";
         return r;
       }},
      {"hopf-pairing", true,
       [](Context& c) { return verify_hopf_pairing(c.drinfeld_double(), c.bound, c.cfg.k_radius, c.cfg.jobs); }},
      {"double-d1", true,
       [](Context& c) { return verify_d1(c.drinfeld_double(), c.bound, c.cfg.k_radius, c.cfg.jobs); }},
      {"double-d2", true,
       [](Context& c) { return verify_d2(c.drinfeld_double(), c.bound, c.cfg.k_radius, c.cfg.jobs); }},
      {"double-d3", true,
       [](Context& c) { return verify_d3(c.drinfeld_double(), c.bound, c.cfg.k_radius, c.cfg.jobs); }},
      {"double-d4", true,
       [](Context& c) {
         return verify_d4(c.drinfeld_double(), c.bound, c.cfg.k_radius, D4Orientation::verified(), c.cfg.jobs);
       }},
      {"bialgebra-iso", true,
       [](Context& c) { return verify_bialgebra_iso(c.drinfeld_double(), c.bound, c.cfg.k_radius, c.cfg.jobs); }},
      {"iso-injective", true,
       [](Context& c) { return verify_iso_injective(c.drinfeld_double(), c.bound, c.cfg.k_radius, c.cfg.jobs); }},
  };
  return suites;
}

json config_json(const Context& c) {
  json j{{"backend", c.cfg.backend},
         {"q", c.cfg.q},
         {"bound", c.bound.v},
         {"jobs", c.cfg.jobs},
         {"k_radius", c.cfg.k_radius},
         {"descriptor", c.cat->descriptor()}};
  if (!c.cfg.quiver_file.empty()) j["quiver"] = c.cfg.quiver_file;
  if (c.cfg.inject_fault) j["inject_fault"] = true;
  return j;
}

void emit(const RunConfig& cfg, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw ConfigError("cannot write " + cfg.out);
  f << text;
}

int cmd_objects(const RunConfig& cfg) {
  Context c(cfg);
  json rows = json::array();
  for (ClassId m : c.cat->objects_up_to(c.bound)) {
    rows.push_back({{"label", c.cat->label(m)},
                    {"class", c.cat->class_of(m).v},
                    {"aut", c.cat->aut_count(m).get_str()}});
  }
  std::cerr << rows.size() << " isomorphism classes within " << c.bound.to_string() << "\n";
  emit(cfg, {{"version", kSchemaVersion}, {"config", config_json(c)}, {"objects", rows}});
  return 0;
}

int cmd_hall_table(const RunConfig& cfg) {
  Context c(cfg);
  json rows = json::array();
  std::size_t disagreements = 0;
  for (const auto& [m, n, r] : graded_triples(*c.cat, c.bound)) {
    const QSqrt h = c.hall->hall_number(m, n, r);
    const QSqrt d = hall_number_direct(*c.cat, m, n, r);
    if (h.is_zero() && d.is_zero()) continue;
    const bool agree = h == d;
    if (!agree) ++disagreements;
    rows.push_back({{"M", c.cat->label(m)},
                    {"N", c.cat->label(n)},
                    {"R", c.cat->label(r)},
                    {"h", to_json(h)},
                    {"h_direct", to_json(d)},
                    {"agree", agree}});
  }
  std::cerr << rows.size() << " nonzero Hall numbers, " << disagreements << " disagreements\n";
  emit(cfg, {{"version", kSchemaVersion}, {"config", config_json(c)}, {"rows", rows}});
  return disagreements == 0 ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
  Context c(cfg);
  std::vector<const SuiteEntry*> selected;
  if (cfg.suites.empty()) {
    for (const auto& e : registry()) {
      if (e.in_default && (e.name != "gaussian" || cfg.backend == "vect")) selected.push_back(&e);
    }
  } else {
    for (const auto& name : cfg.suites) {
      const SuiteEntry* found = nullptr;
      for (const auto& e : registry()) {
        if (e.name == name) found = &e;
      }
      if (!found) throw ConfigError("unknown suite " + name);
      selected.push_back(found);
    }
  }
  std::vector<SuiteReport> reports;
  json suites = json::array();
  for (const SuiteEntry* e : selected) {
    SuiteReport r;
    try {
      r = e->run(c);
    } catch (const TruncationError& err) {
      r.name = e->name;
      r.aborted = 1;
      r.failures.push_back({"suite", err.what()});
    }
    if (r.name.empty()) r.name = e->name;
    std::cerr << r.summary() << "\n";
    suites.push_back(r.to_json());
    reports.push_back(std::move(r));
  }
  emit(cfg, {{"version", kSchemaVersion}, {"config", config_json(c)}, {"suites", suites}});
  return exit_code_for(reports);
}

ClassId find_object(const Context& c, const std::string& label) {
  for (ClassId m : c.cat->objects_up_to(c.bound)) {
    if (c.cat->label(m) == label) return m;
  }
  throw ConfigError("no object labelled '" + label + "' within bound " + c.bound.to_string());
}

SDHKey parse_key(const Context& c, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    throw ConfigError("key is not valid JSON: " + text);
  }
  if (!j.is_object()) throw ConfigError("key must be a JSON object: " + text);
  const std::size_t rank = c.cat->k0_rank();
  auto vec = [&](const char* field) {
    if (!j.contains(field)) return K0Class::zero(rank);
    const auto v = j.at(field).get<std::vector<int>>();
    if (v.size() != rank) throw ConfigError(std::string("field ") + field + " has the wrong rank");
    return K0Class(v);
  };
  auto obj = [&](const char* field) {
    return j.contains(field) ? find_object(c, j.at(field).get<std::string>()) : c.cat->zero();
  };
  try {
    return {vec("alpha"), vec("beta"), obj("A"), obj("B")};
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed key: ") + e.what());
  }
}

int cmd_sdh(const RunConfig& cfg, const std::string& op, const std::vector<std::string>& args) {
  Context c(cfg);
  SDHAlgebra& alg = c.sdh_algebra();
  json body{{"version", kSchemaVersion}, {"config", config_json(c)}, {"op", op}};
  if (op == "mul") {
    if (args.size() != 2) throw ConfigError("sdh mul takes two keys");
    const SDHKey x = parse_key(c, args[0]);
    const SDHKey y = parse_key(c, args[1]);
    const SDHElement p = alg.key_product(x, y);
    body["x"] = alg.key_json(x);
    body["y"] = alg.key_json(y);
    body["terms"] = alg.element_json(p);
    std::cerr << p.size() << " terms\n";
  } else if (op == "coprod") {
    if (args.size() != 1) throw ConfigError("sdh coprod takes one key");
    const SDHKey x = parse_key(c, args[0]);
    const SDHTensor t = alg.coproduct(x);
    body["x"] = alg.key_json(x);
    body["terms"] = alg.tensor_json(t);
    std::cerr << t.size() << " terms\n";
  } else {
    throw ConfigError("sdh op must be mul or coprod");
  }
  emit(cfg, body);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall algebras, semi-derived Hall algebras and their verification suites"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--backend", cfg.backend, "vect, a2 or quiver")->capture_default_str();
    sub->add_option("--quiver", cfg.quiver_file, "quiver JSON file for --backend quiver");
    sub->add_option("--q", cfg.q, "field size (prime)")->capture_default_str();
    sub->add_option("--bound", cfg.bound_text, "K0 bound a,b,... (one value applies to every vertex)")
        ->capture_default_str();
    sub->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "write JSON here instead of stdout");
  };

  auto* objects = app.add_subcommand("objects", "list isomorphism classes within bound");
  add_common(objects);
  auto* table = app.add_subcommand("hall-table", "nonzero Hall numbers by both computation routes");
  add_common(table);
  table->add_flag("--inject-fault", cfg.inject_fault, "test mode: corrupt one Hall number");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify);
  verify->add_option("--suite", cfg.suites, "suite names (comma separated)")->delimiter(',');
  verify->add_option("--k-radius", cfg.k_radius, "l1 radius of K-parts in SDH keys")->capture_default_str();
  verify->add_option("--max-total", cfg.max_total, "largest product degree for product-oracle (default 2|bound|)");
  verify->add_flag("--inject-fault", cfg.inject_fault, "test mode: corrupt one Hall number");
  auto* list = app.add_subcommand("suites", "list registered suite names");
  auto* sdh = app.add_subcommand("sdh", "SDH structure constants");
  add_common(sdh);
  std::string op;
  std::vector<std::string> keys;
  sdh->add_option("op", op, "mul or coprod")->required()->check(CLI::IsMember({"mul", "coprod"}));
  sdh->add_option("keys", keys, R"(keys as JSON, e.g. {"alpha":[1],"beta":[0],"A":"V1","B":"V0"})");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*objects) return cmd_objects(cfg);
    if (*table) return cmd_hall_table(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*sdh) return cmd_sdh(cfg, op, keys);
    if (*list) {
      json names = json::array();
      for (const auto& e : registry()) names.push_back({{"name", e.name}, {"default", e.in_default}});
      std::cout << json{{"version", kSchemaVersion}, {"suites", names}}.dump(2) << "\n";
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const TruncationError& e) {
    std::cerr << "truncation: " << e.what() << "\n";
    return 2;
  }
  return kExitConfig;
}
