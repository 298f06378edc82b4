#include "starq/cli.hpp"

#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "starq/acceptance.hpp"
#include "starq/classify.hpp"
#include "starq/decomp.hpp"
#include "starq/emit.hpp"
#include "starq/error.hpp"
#include "starq/fock.hpp"
#include "starq/glside.hpp"
#include "starq/orbits.hpp"

namespace starq::cli {

namespace {

constexpr std::size_t kDefaultOrbitCap = 10000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t orbit_cap() {
  const char* env = std::getenv("STARQ_ORBIT_CAP");
  if (!env || !*env) return kDefaultOrbitCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end || v == 0) throw UsageError("STARQ_ORBIT_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded highest weight modules over q(n)", "starq"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string params;
  app.add_option("--params", params, "parameter refinements (unsupported)");

  std::string weight;
  bool dot = false, table = false, gl = false;
  int regularity = 0;

  auto* orbit_cmd = app.add_subcommand("orbit", "star orbit graph of a weight");
  orbit_cmd->add_option("weight", weight, "weight, e.g. \"(1,0,-1)\"")->required();
  auto* orbit_dot_flag = orbit_cmd->add_flag("--dot", dot, "Graphviz output");
  orbit_cmd->add_flag("--table", table, "aligned text output")->excludes(orbit_dot_flag);

  auto* classify_cmd = app.add_subcommand("classify", "boundedness verdict and type");
  classify_cmd->add_option("weight", weight)->required();
  classify_cmd->add_flag("--gl", gl, "use the gl_n dot action");
  classify_cmd->add_flag("--table", table);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "bounded weights over a maximal weight");
  enumerate_cmd->add_option("weight", weight)->required();
  enumerate_cmd->add_flag("--table", table);

  auto* family_cmd = app.add_subcommand("family", "families of a maximal weight");
  family_cmd->add_option("weight", weight)->required();
  family_cmd->add_flag("--gl", gl, "gl_n families");
  family_cmd->add_option("--regularity", regularity, "only the family of this regularity")->check(CLI::PositiveNumber);
  auto* family_dot_flag = family_cmd->add_flag("--dot", dot);
  family_cmd->add_flag("--table", table)->excludes(family_dot_flag);

  auto* degree_cmd = app.add_subcommand("degree", "degree of a gl-bounded weight of type n-1");
  degree_cmd->add_option("weight", weight)->required();

  int jh_n = 0;
  std::string jh_c;
  std::vector<int> jh_ks;
  auto* jh_cmd = app.add_subcommand("jh", "Jordan-Holder sets of the c eps_1 family");
  jh_cmd->add_option("--n", jh_n)->required()->check(CLI::Range(2, 64));
  jh_cmd->add_option("--c", jh_c)->required();
  jh_cmd->add_option("--k", jh_ks, "row index, repeatable; default all");
  jh_cmd->add_flag("--table", table);

  std::string check = "all";
  int fock_n = 3, samples = 20;
  unsigned seed = 1;
  auto* fock_cmd = app.add_subcommand("fock-check", "Fock realization checks");
  fock_cmd->add_option("--check", check)
      ->check(CLI::IsMember({"all", "J", "homomorphism", "u-relations", "primitives", "weight-spaces"}));
  fock_cmd->add_option("--n", fock_n)->check(CLI::Range(2, 6));
  fock_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
  fock_cmd->add_option("--seed", seed);

  auto* selftest_cmd = app.add_subcommand("selftest", "run every acceptance criterion");
  selftest_cmd->add_flag("--table", table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "starq: " << e.what() << "\n";
    return 2;
  }

  if (app.count("--params")) {
    err << "starq: --params is not supported; parameters in weights are generic nonintegral values\n";
    return 2;
  }

  try {
    if (*orbit_cmd) {
      OrbitGraph g = orbit(parse_weight(weight), orbit_cap());
      if (dot) out << orbit_dot(g);
      else if (table) out << orbit_table(g);
      else print_json(out, orbit_json(g));
    } else if (*classify_cmd) {
      Weight mu = parse_weight(weight);
      Verdict v = gl ? gl_classify(mu) : classify(mu);
      if (table) out << verdict_table(mu, v, gl);
      else print_json(out, verdict_json(mu, v, gl));
    } else if (*enumerate_cmd) {
      Weight l = parse_weight(weight);
      auto entries = enumerate_bounded(l);
      if (table) out << enumerate_table(l, entries);
      else print_json(out, enumerate_json(l, entries));
    } else if (*family_cmd) {
      Weight l = parse_weight(weight);
      std::vector<Family> fams;
      if (gl) {
        if (regularity) fams.push_back(gl_family(l, regularity));
        else fams = gl_families(l);
      } else {
        for (auto& f : families(l))
          if (!regularity || std::find(f.regularities.begin(), f.regularities.end(), regularity) != f.regularities.end())
            fams.push_back(std::move(f));
        if (fams.empty()) throw DomainError(ErrorCode::NotMaximal, "no family of regularity " + std::to_string(regularity));
      }
      if (dot) out << families_dot(fams);
      else if (table) out << families_table(fams);
      else print_json(out, families_json(l, fams));
    } else if (*degree_cmd) {
      Weight mu = parse_weight(weight);
      print_json(out, degree_json(mu, degree_type_n1(mu)));
    } else if (*jh_cmd) {
      Scalar c = parse_scalar(jh_c);
      if (jh_ks.empty())
        for (int k = 0; k < jh_n; ++k) jh_ks.push_back(k);
      for (int k : jh_ks)
        if (k < 0 || k >= jh_n) throw UsageError("--k must lie in 0..n-1");
      if (table) out << jh_table_text(jh_n, c, jh_ks);
      else print_json(out, jh_json(jh_n, c, jh_ks));
    } else if (*fock_cmd) {
      std::vector<CheckReport> reports;
      auto want = [&](const char* name) { return check == "all" || check == name; };
      if (want("J")) reports.push_back(check_J(fock_n, samples, seed));
      if (want("homomorphism")) reports.push_back(check_homomorphism(fock_n, samples, seed));
      if (want("weight-spaces")) reports.push_back(check_weight_spaces(samples, seed));
      if (want("primitives")) reports.push_back(check_primitives());
      if (want("u-relations")) reports.push_back(check_u_relations());
      Json j = Json::array();
      bool all = true;
      for (const auto& r : reports) {
        j.push_back(check_json(r));
        all = all && r.passed;
      }
      print_json(out, j);
      return all ? 0 : 1;
    } else if (*selftest_cmd) {
      bool all = true;
      Json j = Json::array();
      for (const auto& c : acceptance::criteria()) {
        auto r = acceptance::run(c);
        all = all && r.passed;
        if (table) {
          out << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << ": " << r.detail << "\n";
        } else {
          j.push_back({{"id", r.id}, {"name", r.name}, {"status", r.passed ? "pass" : "fail"}, {"detail", r.detail}});
        }
        out.flush();
      }
      if (!table) print_json(out, j);
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "starq: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    print_json(out, error_json(error_code_name(e.code()), e.what()));
    return 1;
  }
  return 0;
}

}  // namespace starq::cli
