#include "shiftarg/commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string read_input(const std::string& path, const std::string& inline_json) {
  if (!inline_json.empty()) return inline_json;
  if (path.empty()) throw std::runtime_error("provide --input FILE or --inline JSON");
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(csv);
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(const shiftarg::CmdResult& res, const std::string& out_path, bool pretty) {
  std::string text = pretty ? res.output.dump(2) : res.output.dump();
  text += "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for the argument-shift subalgebras of gl_n"};
  app.require_subcommand(1);

  std::string input_path, inline_json, out_path, suites_csv;
  std::string family = "phi";
  std::uint64_t seed = 1;
  bool pretty = false, negative_control = false, timing = false;
  int ss_n = 0, ss_m = 0;

  auto add_io = [&](CLI::App* cmd, bool input_required) {
    auto* in_file = cmd->add_option("--input", input_path, "input JSON file");
    auto* in_text = cmd->add_option("--inline", inline_json, "inline input JSON");
    in_file->excludes(in_text);
    if (input_required) in_text->required(false);
    cmd->add_option("--out", out_path, "write the output JSON to this file instead of stdout");
    cmd->add_flag("--pretty", pretty, "indent the output");
  };

  CLI::App* diagram = app.add_subcommand(
      "diagram", "Jordan type, the diagram gamma, and the retained/excluded staircase boxes");
  add_io(diagram, true);

  CLI::App* generators =
      app.add_subcommand("generators", "one generator family with classical symbols");
  add_io(generators, true);
  generators->add_option("--family", family, "phi | psi-mm | theta-mm | varphi | psi");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_io(verify, true);
  verify->add_option("--suites", suites_csv,
                     "comma list of commutativity,poisson,gr,rank,centralizer,identities,ss-check");
  verify->add_option("--family", family, "table used by the commutativity and poisson suites");
  verify->add_option("--seed", seed, "seed for the random rational points");
  verify->add_flag("--negative-control", negative_control,
                   "swap in a deliberately noncommuting family (expected to fail)");
  verify->add_flag("--timing", timing, "report real elapsed times instead of 0");

  CLI::App* ss = app.add_subcommand("ss-check", "vacuum membership probes for the loop families");
  add_io(ss, false);
  ss->add_option("--n", ss_n, "rank (alternative to --input/--inline)");
  ss->add_option("--family", family, "phi | psi | theta");
  ss->add_option("--m", ss_m, "probe family degrees up to this bound (default n)");

  CLI11_PARSE(app, argc, argv);

  try {
    shiftarg::CmdResult res;
    if (diagram->parsed()) {
      res = shiftarg::cmd_diagram(shiftarg::parse_input_json(read_input(input_path, inline_json)));
    } else if (generators->parsed()) {
      res = shiftarg::cmd_generators(shiftarg::parse_input_json(read_input(input_path, inline_json)),
                                     shiftarg::family_from_string(family));
    } else if (verify->parsed()) {
      shiftarg::VerifyOptions opt;
      opt.suites = split_csv(suites_csv);
      opt.family = shiftarg::family_from_string(family);
      opt.seed = seed;
      opt.negative_control = negative_control;
      opt.timing = timing;
      res = shiftarg::cmd_verify(shiftarg::parse_input_json(read_input(input_path, inline_json)), opt);
    } else {
      shiftarg::SsOptions opt;
      opt.family = family;
      opt.max_m = ss_m;
      int n = ss_n;
      if (n == 0) n = shiftarg::parse_input_json(read_input(input_path, inline_json)).n;
      res = shiftarg::cmd_ss_check(n, opt);
    }
    emit(res, out_path, pretty);
    return res.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
