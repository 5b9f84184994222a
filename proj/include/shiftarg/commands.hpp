#pragma once

#include "shiftarg/generators.hpp"
#include "shiftarg/jordan.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shiftarg {

using Json = nlohmann::json;

/* Parsed problem: n plus the matrix, given directly or reconstructed from a
 * declared Jordan type (canonical block matrix).  A declared type also
 * short-circuits the Jordan computation, which keeps non-split spectra out
 * of the picture when the caller already knows the block data. */
struct ProblemInput {
  int n = 0;
  QMatrix mu;
  std::optional<JordanData> declared;
};

/* Accepts {"n": int, "matrix": [[rational strings]]} and/or
 * {"jordan": [{"eigenvalue": "0", "blocks": [2,2,1,1]}]}; n may be omitted
 * when the matrix or the Jordan data pins it.  A missing matrix defaults to
 * the Jordan block matrix, or to zero when only n is given. */
ProblemInput parse_input_json(const std::string& text);

JordanData effective_jordan(const ProblemInput& in);

struct CmdResult {
  Json output;
  int exit_code = 0;
};

CmdResult cmd_diagram(const ProblemInput& in);
CmdResult cmd_generators(const ProblemInput& in, Family f);

struct VerifyOptions {
  std::vector<std::string> suites;  // empty = defaults for the size
  Family family = Family::Phi;      // table the commutativity/poisson suites run on
  std::uint64_t seed = 1;
  bool negative_control = false;    // swap in a deliberately noncommuting family
  bool timing = false;              // real elapsed_ms instead of 0 (reproducible output)
};

CmdResult cmd_verify(const ProblemInput& in, const VerifyOptions& opt);

struct SsOptions {
  std::string family = "phi";  // phi | psi | theta
  int max_m = 0;               // 0 = up to n
};

CmdResult cmd_ss_check(int n, const SsOptions& opt);

}  // namespace shiftarg
