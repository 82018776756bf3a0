#include "cli.hpp"

#include <CLI11.hpp>

#include "commands.hpp"

namespace crossmod::cli {

namespace {

constexpr const char* kSubspaceHelp = "subspace: empty | full | rows \"1,0;0,1\" | subspace JSON file";
constexpr const char* kBivectorHelp = "bivector: zero | coefficients on e_i^e_j (i<j, lexicographic) | bivector JSON file";
constexpr const char* kElementsHelp = "subgroup: e | all | element indices \"0,2\"";

struct Leaf {
  std::string path;
  CLI::App* app;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for crossed modules, Lie 2-bialgebras and their homogeneous spaces", kToolName};
  Options opt;
  bool json = false, timing = false;
  app.add_flag("--json", json, "structured output (default: table rendered from the same document)");
  app.add_flag("--timing", timing, "add per-check wall time (makes output non-canonical)");
  app.set_help_flag("--help", "print help");
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::vector<Leaf> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& prefix, const std::string& name, const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("input", opt.input, "input JSON file")->required();
    leaves.push_back({prefix.empty() ? name : prefix + " " + name, sub});
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };

  CLI::App* check = group("check", "validators");
  leaf(check, "check", "cm", "crossed module of any kind (lie, finite, matrix)");
  CLI::App* lie2 = leaf(check, "check", "lie2", "Lie 2-algebra, its semidirect product and optional 2-subalgebra");
  lie2->add_option("--h0", opt.h0, kSubspaceHelp);
  lie2->add_option("--h1", opt.h1, kSubspaceHelp);
  leaf(check, "check", "bialg", "Lie bialgebra");
  leaf(check, "check", "2bialg", "Lie 2-bialgebra");
  leaf(check, "check", "fincm", "finite crossed module");

  leaf(&app, "", "double", "Manin double of a bialgebra or of the big bialgebra of a 2-bialgebra");

  CLI::App* dirac = group("dirac", "Dirac structures through characteristic pairs");
  CLI::App* dcheck = leaf(dirac, "dirac", "check", "decide whether (h, omega) is Dirac, by both routes");
  dcheck->add_option("--h", opt.h, kSubspaceHelp);
  dcheck->add_option("--omega", opt.omega, kBivectorHelp);
  CLI::App* denum = leaf(dirac, "dirac", "enumerate", "all canonical omega on a coefficient grid with (h, omega) Dirac");
  denum->add_option("--h", opt.h, kSubspaceHelp);
  denum->add_option("--coeffs", opt.coeffs, "comma-separated coefficient grid");

  CLI::App* cls = leaf(&app, "", "classify", "homogeneous-space verdict for (h0, h1, r) on a 2-bialgebra");
  cls->add_option("--h0", opt.h0, kSubspaceHelp);
  cls->add_option("--h1", opt.h1, kSubspaceHelp);
  cls->add_option("--r", opt.r, kBivectorHelp);

  CLI::App* fin = group("fin2grp", "finite 2-groups");
  leaf(fin, "fin2grp", "build", "2-group of a finite crossed module, coherence laws");
  for (const char* name : {"quotient", "bundle", "gamma"}) {
    CLI::App* sub = leaf(fin, "fin2grp", name, std::string("homogeneous space construction: ") + name);
    sub->add_option("--h0", opt.h0, kElementsHelp);
    sub->add_option("--h1", opt.h1, kElementsHelp);
    sub->add_option("--two-subgroup", opt.two_subgroup, "two_subgroup JSON file (instead of --h0/--h1)");
  }
  for (const char* name : {"orbits", "actions"}) {
    CLI::App* sub = leaf(fin, "fin2grp", name, std::string("2-group action: ") + name);
    sub->add_option("--action", opt.action, "left | action_table JSON file");
  }
  leaf(fin, "fin2grp", "bisections", "bisection crossed module of a groupoid");

  CLI::App* tv = group("twovect", "2-vector spaces and representations");
  leaf(tv, "twovect", "gl", "GL(V) over a prime field");
  for (const char* name : {"rep", "dual", "semidirect"}) {
    CLI::App* sub = leaf(tv, "twovect", name, std::string("representation: ") + name);
    sub->add_option("--cm", opt.cm, "finite crossed module JSON file")->required();
    sub->add_option("--rep", opt.rep, "representation JSON file")->required();
  }

  CLI::App* mat = group("mat", "matrix crossed modules");
  for (const char* name : {"ad", "coad", "tangent", "lambda"}) {
    CLI::App* sub = leaf(mat, "mat", name, std::string("matrix 2-group: ") + name);
    sub->add_option("--samples", opt.samples, "sample_set JSON file replacing the embedded samples");
    if (std::string(name) == "lambda") sub->add_option("--mu", opt.mu, kBivectorHelp);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kPass;
  } catch (const CLI::RequiredError& e) {
    err << "invalid command line: " << e.what() << '\n';
    bool any = false;
    for (const auto& l : leaves) any = any || l.app->parsed();
    if (!any) {
      err << "unknown or missing subcommand; expected one of:";
      for (const auto& l : leaves) err << "\n  " << l.path;
      err << '\n';
    }
    return kInvalid;
  } catch (const CLI::ParseError& e) {
    err << "invalid command line: " << e.what() << '\n';
    return kInvalid;
  }

  std::string path;
  for (const auto& l : leaves)
    if (l.app->parsed()) path = l.path;
  if (path.empty()) {
    err << "invalid command line: no subcommand\n";
    return kInvalid;
  }

  Context ctx(opt, path);
  auto emit = [&](const Json& doc) { out << (json ? doc.dump(2) + "\n" : render_human(doc)); };
  auto invalid = [&](const std::string& field, const std::string& message) {
    err << "invalid input: " << field << ": " << message << '\n';
    emit(error_doc(ctx.header(), field, message));
    return kInvalid;
  };
  try {
    Outcome outcome = commands().at(path)(ctx);
    emit(make_doc(ctx.header(), outcome, timing));
    return outcome.ok() ? kPass : kFail;
  } catch (const SchemaError& e) {
    std::string what = e.what();
    return invalid(e.field(), what.substr(e.field().size() + 2));
  } catch (const GuardError& e) {
    return invalid("guard", std::string("enumeration guard exceeded: ") + e.what());
  } catch (const Error& e) {
    return invalid("input", e.what());
  }
}

}  // namespace crossmod::cli
