#pragma once

#include "shiftarg/generators.hpp"
#include "shiftarg/jordan.hpp"
#include "shiftarg/qmatrix.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace shiftarg {

/* FNV-1a 64-bit hash, 16 lowercase hex digits; matrices are digested
 * through their canonical text form. */
std::string fnv1a_digest(const std::string& text);
std::string matrix_digest(const QMatrix& m);

/* Deterministic source of the small rational test points: numerators in
 * [-9, 9], denominators in [1, 4]. */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi);  // inclusive bounds
  Rational small_rational();
  QMatrix matrix(int n);

 private:
  std::mt19937_64 eng_;
};

struct VerificationReport {
  std::string suite;
  int n = 0;
  std::string mu_digest;
  int cases = 0;
  std::vector<std::string> failures;  // human-readable witnesses
  long long elapsed_ms = 0;
  bool ok() const { return failures.empty(); }
};

/* All pairwise commutators of the nonscalar table entries (k <= m-1)
 * vanish in U(gl_n). */
VerificationReport commutativity_suite(const GeneratorTable& t);

/* All pairwise Poisson brackets of the table symbols vanish in S(gl_n). */
VerificationReport poisson_suite(const GeneratorTable& t);

/* Jacobian rank of the retained symbols at a random rational point.  The
 * rank never exceeds expected = |retained| when the theory holds; a
 * deficient rank is retried with fresh points (non-generic draws). */
struct RankResult {
  int achieved = 0;
  int expected = 0;
  int retries = 0;        // extra draws beyond the first
  bool fatal_excess = false;
  bool conclusive = true; // false = retries exhausted below expected
};

RankResult independence_rank(const std::map<TableKey, CPoly>& symbols, const SkewSelection& sel,
                             std::uint64_t seed, int max_retries = 5);
VerificationReport rank_suite(const std::map<TableKey, CPoly>& symbols, const SkewSelection& sel,
                              const QMatrix& mu, std::uint64_t seed);

/* dim of the centralizer of mu three ways: kernel of ad_mu by exact
 * elimination, the per-eigenvalue partition formula, and 2|gamma| + n. */
struct CentralizerCheck {
  int by_linear_algebra = 0;
  int by_partitions = 0;
  int by_gamma = 0;
  bool ok() const { return by_linear_algebra == by_partitions && by_partitions == by_gamma; }
};

CentralizerCheck centralizer_dim(const QMatrix& mu, const JordanData& jd);
VerificationReport centralizer_suite(const QMatrix& mu, const JordanData& jd);

/* For every retained box, the filtration-degree m-k image of the table
 * entry equals the symbol-table entry and is nonzero. */
VerificationReport gr_suite(const GeneratorTable& t, const SkewSelection& sel);

}  // namespace shiftarg
