#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "iara/pipeline.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw iara::Error(iara::ErrorCode::ConfigError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Common {
  int window = -1;
  bool witnesses = false;
  bool timing = false;
  std::string out;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--window", c.window, "window bound N, overriding the config");
  sub->add_flag("--witnesses", c.witnesses, "print witness elements under each verdict");
  sub->add_flag("--timing", c.timing, "print per-step wall time");
  sub->add_option("--out", c.out, "write the report to a file");
}

// Runs the config; with a step filter only those steps are printed, though all of them run.
int emit(const std::string& text, const std::string& title, const Common& c, const std::string& only = "") {
  iara::RunOptions ro;
  if (c.window >= 0) ro.window = c.window;
  iara::Report rep = iara::run_pipeline(text, title, ro);
  if (!only.empty()) {
    std::vector<iara::StepReport> keep;
    for (auto& s : rep.steps)
      if (s.heading.rfind(only, 0) == 0) keep.push_back(std::move(s));
    rep.steps = std::move(keep);
  }
  const std::string body = rep.render({c.witnesses, c.timing});
  if (c.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(c.out);
    if (!f) throw iara::Error(iara::ErrorCode::ConfigError, "cannot write " + c.out);
    f << body;
    std::cout << "result: " << (rep.all_pass() ? "PASS" : "FAIL") << " (" << rep.verdict_count() << " verdicts, report in "
              << c.out << ")\n";
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iara: invariant affine reflection algebras, gradings and affinization"};
  app.require_subcommand(1);

  Common run_c, preset_c, roots_c;
  std::string config, preset_name, dump;

  auto* run = app.add_subcommand("run", "run a pipeline config");
  run->add_option("config", config, "config file")->required();
  add_common(run, run_c);
  auto* pipeline = app.add_subcommand("pipeline", "same as run");
  pipeline->add_option("config", config, "config file")->required();
  add_common(pipeline, run_c);

  // verbs that run a config and show one kind of step
  const std::vector<std::string> focused = {"grade", "restrict", "fixpoint", "affinize"};
  std::map<std::string, CLI::App*> focus_cmds;
  for (const auto& v : focused) {
    auto* sub = app.add_subcommand(v, "run a config and print its " + v + " steps");
    sub->add_option("config", config, "config file")->required();
    add_common(sub, run_c);
    focus_cmds[v] = sub;
  }

  auto* preset = app.add_subcommand("preset", "run a named preset, or list them");
  preset->add_option("name", preset_name, "preset name");
  preset->add_flag("--print-config", "print the preset config instead of running it");
  add_common(preset, preset_c);

  auto* roots = app.add_subcommand("roots", "check R0-R5 and classify a root-set dump");
  roots->add_option("dump", dump, "file with gram = ... and list = ... lines")->required();
  add_common(roots, roots_c);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run || *pipeline) return emit(slurp(config), config, run_c);
    for (const auto& [v, sub] : focus_cmds)
      if (*sub) return emit(slurp(config), config, run_c, v);
    if (*preset) {
      const auto& ps = iara::presets();
      if (preset_name.empty()) {
        for (const auto& [n, t] : ps) std::cout << n << "\n";
        return 0;
      }
      auto it = ps.find(preset_name);
      if (it == ps.end()) {
        std::cerr << "unknown preset '" << preset_name << "'\n";
        return 2;
      }
      if (preset->count("--print-config")) {
        std::cout << it->second;
        return 0;
      }
      return emit(it->second, preset_name, preset_c);
    }
    if (*roots) {
      std::string text = slurp(dump);
      if (text.find("[roots") == std::string::npos) text = "[roots]\n" + text;
      return emit(text, dump, roots_c);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
