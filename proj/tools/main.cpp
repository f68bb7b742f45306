#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "trivext/cli/suites.hpp"

using namespace trivext;
namespace fs = std::filesystem;

namespace {

struct Globals {
  std::optional<std::uint32_t> p;
  std::size_t pd_bound = 20;
  std::size_t max_stage = 24;
  std::size_t window = 4;
  std::size_t trials = 64;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  bool strict = false;
  bool json = false;
  bool timing = false;
  std::string out;
  std::set<std::string> given;  // options set on the command line
};

cli::SuiteOptions suite_options(const Globals& g) {
  cli::SuiteOptions o;
  if (g.p) o.p = *g.p;
  o.pd_bound = g.pd_bound;
  o.max_stage = g.max_stage;
  o.window = g.window;
  o.trials = g.trials;
  o.seed = g.seed;
  o.jobs = g.jobs;
  return o;
}

int emit(const cli::Report& rep, const Globals& g) {
  std::string text = g.json ? rep.json().dump(2) + "\n" : rep.text();
  std::cout << text;
  if (!g.out.empty()) {
    bool as_json = g.json || fs::path(g.out).extension() == ".json";
    io::write_file(g.out, as_json ? rep.json().dump(2) + "\n" : rep.text());
  }
  int code = rep.exit_code(g.strict);
  if (rep.overall() == Verdict::Undetermined && !g.strict)
    std::cerr << "warning: some checks are undetermined; pass --strict to treat them as failures\n";
  return code;
}

cli::Report cmd_build(const std::string& file, const std::string& algebra_out, const Globals& g) {
  std::string text = io::read_file(file);
  quiver::Presentation pres;
  try {
    pres = quiver::parse_presentation(text);
  } catch (const quiver::ParseError& e) {
    throw io::InputError(file + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message());
  }
  if (g.p) {
    if (!Field::is_prime(*g.p)) throw io::InputError("--p " + std::to_string(*g.p) + " is not a prime below 2^31");
    pres.field_prime = *g.p;
  }
  std::optional<quiver::PathBasis> pb;
  try {
    pb.emplace(pres);
  } catch (const quiver::NonAdmissibleError& e) {
    throw io::InputError(file + ": " + e.what());
  }
  AlgebraPtr alg = quiver::build_algebra(*pb);
  cli::Report rep("build " + file);
  rep.set_seed(g.seed);
  rep.add_input(file, text);
  auto& s = rep.section("algebra " + pres.name);
  s.add("field", "F_" + std::to_string(pres.field_prime));
  s.add("dim", std::to_string(alg->dim()));
  s.add("idempotents", std::to_string(alg->num_idempotents()));
  s.add("radical dim", std::to_string(alg->radical().dim()));
  std::string names;
  for (std::size_t i = 0; i < pb->dim(); ++i) names += (i ? " " : "") + pb->name(i);
  s.add("basis", names);
  s.add("max path length", std::to_string(pb->max_length()));
  fs::path dst = algebra_out.empty() ? fs::path(file).replace_extension(".alg.json") : fs::path(algebra_out);
  io::write_file(dst, io::algebra_to_json(*alg, pres.name).dump(1) + "\n");
  s.add("written", dst.string());
  rep.verdict("structure constants valid", Verdict::Pass, "dim " + std::to_string(alg->dim()));
  return rep;
}

cli::Report cmd_verify(const std::string& file, const Globals& g) {
  io::Bundle b = io::load_bundle(file);
  cli::SuiteOptions o = suite_options(g);
  // bundle options apply unless overridden on the command line
  if (!g.given.count("--pd-bound")) o.pd_bound = b.options.pd_bound;
  if (!g.given.count("--max-stage")) o.max_stage = b.options.max_stage;
  if (!g.given.count("--window")) o.window = b.options.window;
  if (!g.given.count("--seed")) o.seed = b.options.seed;
  if (!g.given.count("--trials")) o.trials = b.options.trials;
  InstancePtr inst;
  try {
    inst = make_instance(b.a, b.b, b.x, b.y);
  } catch (const std::invalid_argument& e) {
    throw io::InputError(file + ": " + e.what());
  }
  cli::Report rep("verify " + file);
  rep.set_seed(o.seed);
  rep.add_input(file, io::read_file(file));
  rep.section("instance").add("name", b.name);
  cli::verify_instance(rep, inst, o);
  return rep;
}

cli::Report cmd_resolve(const std::string& alg_file, const std::string& mod_file, const Globals& g) {
  AlgebraPtr alg = io::load_algebra(alg_file);
  LeftModule m = io::load_module(mod_file, alg);
  cli::Report rep("resolve " + alg_file + " " + mod_file + " --bound " + std::to_string(g.pd_bound));
  rep.set_seed(g.seed);
  rep.add_input(alg_file, io::read_file(alg_file));
  rep.add_input(mod_file, io::read_file(mod_file));
  ProjDimOptions o = suite_options(g).projdim();
  o.full_trace = true;
  ProjDimResult r = projdim_bounded(m, o);
  auto& s = rep.section("resolution");
  s.add("module dim", std::to_string(m.dim));
  s.add("syzygy dims", cli::join(r.trace));
  s.add("status", to_string(r.status));
  s.add("projective dimension", cli::describe(r, g.pd_bound));
  rep.verdict("projective dimension", r.status == PdStatus::Undetermined ? Verdict::Undetermined : Verdict::Pass,
              cli::describe(r, g.pd_bound));
  return rep;
}

cli::Report cmd_dsg(const std::string& alg_file, const std::string& m_file, const std::string& n_file, const Globals& g) {
  AlgebraPtr alg = io::load_algebra(alg_file);
  LeftModule m = io::load_module(m_file, alg), n = io::load_module(n_file, alg);
  cli::Report rep("dsg-hom " + alg_file + " " + m_file + " " + n_file);
  rep.set_seed(g.seed);
  for (const auto& f : {alg_file, m_file, n_file}) rep.add_input(f, io::read_file(f));
  StableHomTable t = dsg_hom(m, n, suite_options(g).dsg());
  auto& s = rep.section("stable Hom table");
  cli::add_table(s, "", t);
  rep.verdict("stabilization", t.stabilized ? Verdict::Pass : Verdict::Undetermined,
              t.stabilized ? "dim " + std::to_string(*t.value()) : "no stabilization within the stage limit; growth trace " + t.trace());
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trivial extensions, stable Hom tables and singular equivalence checks over F_p"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--p", g.p, "field prime (embedded presentations and build)");
  app.add_option("--pd-bound", g.pd_bound, "projective dimension search bound");
  app.add_option("--max-stage", g.max_stage, "last stage of stable Hom tables");
  app.add_option("--window", g.window, "bijective transitions required for stabilization");
  app.add_option("--trials", g.trials, "random trials of isomorphism searches");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--jobs", g.jobs, "worker threads for independent items")->check(CLI::PositiveNumber);
  app.add_flag("--strict", g.strict, "treat undetermined checks as failures (exit 3)");
  app.add_flag("--json", g.json, "print the report as JSON");
  app.add_flag("--timing", g.timing, "append wall-clock timing to the report");
  app.add_option("--out", g.out, "also write the report to a file");

  std::string build_file, algebra_out;
  auto* build = app.add_subcommand("build", "build structure constants from a presentation");
  build->add_option("file", build_file)->required();
  build->add_option("--algebra-out", algebra_out, "structure-constant output file");

  std::string bundle;
  auto* verify = app.add_subcommand("verify", "verify an equivalence instance bundle");
  verify->add_option("bundle", bundle)->required();

  auto* paper = app.add_subcommand("paper-suite", "end-to-end checks of the embedded example");

  std::size_t n_max = 3;
  auto* bn = app.add_subcommand("bn-suite", "classification of B_n for n = 0..n_max");
  bn->add_option("--n-max", n_max, "largest n")->required();

  std::string r_alg, r_mod;
  auto* resolve = app.add_subcommand("resolve", "bounded projective resolution of a module");
  resolve->add_option("algebra", r_alg)->required();
  resolve->add_option("module", r_mod)->required();
  resolve->add_option("--bound", g.pd_bound, "search bound");

  std::string d_alg, d_m, d_n;
  auto* dsg = app.add_subcommand("dsg-hom", "stable Hom table between two modules");
  dsg->add_option("algebra", d_alg)->required();
  dsg->add_option("M", d_m)->required();
  dsg->add_option("N", d_n)->required();

  for (auto* sub : {build, verify, paper, bn, resolve, dsg}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  for (const char* name : {"--pd-bound", "--max-stage", "--window", "--seed", "--trials"})
    if (app.get_option(name)->count() > 0) g.given.insert(name);

  auto start = std::chrono::steady_clock::now();
  try {
    std::optional<cli::Report> rep;
    if (*build) rep = cmd_build(build_file, algebra_out, g);
    else if (*verify) rep = cmd_verify(bundle, g);
    else if (*paper) rep = cli::paper_suite(suite_options(g));
    else if (*bn) rep = cli::bn_suite(n_max, suite_options(g));
    else if (*resolve) rep = cmd_resolve(r_alg, r_mod, g);
    else rep = cmd_dsg(d_alg, d_m, d_n, g);
    if (g.timing)
      rep->set_timing(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return emit(*rep, g);
  } catch (const io::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
