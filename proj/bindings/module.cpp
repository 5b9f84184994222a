#include "shiftarg/commands.hpp"

#include <pybind11/pybind11.h>

#include <sstream>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(csv);
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string run_diagram(const std::string& input_json) {
  return shiftarg::cmd_diagram(shiftarg::parse_input_json(input_json)).output.dump();
}

std::string run_generators(const std::string& input_json, const std::string& family) {
  return shiftarg::cmd_generators(shiftarg::parse_input_json(input_json),
                                  shiftarg::family_from_string(family))
      .output.dump();
}

std::string run_verify(const std::string& input_json, const std::string& suites,
                       const std::string& family, std::uint64_t seed, bool negative_control) {
  shiftarg::VerifyOptions opt;
  opt.suites = split_csv(suites);
  opt.family = shiftarg::family_from_string(family);
  opt.seed = seed;
  opt.negative_control = negative_control;
  return shiftarg::cmd_verify(shiftarg::parse_input_json(input_json), opt).output.dump();
}

std::string run_ss_check(int n, const std::string& family, int max_m) {
  shiftarg::SsOptions opt;
  opt.family = family;
  opt.max_m = max_m;
  return shiftarg::cmd_ss_check(n, opt).output.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact toolkit for the argument-shift subalgebras of gl_n";
  m.def("diagram", &run_diagram, py::arg("input_json"),
        "Jordan type, gamma, and the retained/excluded staircase boxes as a JSON string");
  m.def("generators", &run_generators, py::arg("input_json"), py::arg("family") = "phi",
        "one generator family with classical symbols as a JSON string");
  m.def("verify", &run_verify, py::arg("input_json"), py::arg("suites") = "",
        py::arg("family") = "phi", py::arg("seed") = std::uint64_t{1},
        py::arg("negative_control") = false, "verification suite reports as a JSON string");
  m.def("ss_check", &run_ss_check, py::arg("n"), py::arg("family") = "phi", py::arg("max_m") = 0,
        "vacuum membership probes for the loop families as a JSON string");
}
