#pragma once

#include <functional>

#include "report.h"
#include "smatrix.h"

namespace qrll {

// 4x4 two-parameter exchange matrix, argument an arbitrary rational function
RMat build_r(const RatFunc& arg);

// pointwise mutations used to cross-validate the matrix and component
// verifiers and to prove the suite can fail
struct RMutation {
  enum Kind { none, negate_entry, zero_entry, scale_by_arg, swap_params };
  Kind kind = none;
  int row = 0, col = 0;  // ignored by swap_params
  std::string str() const;
};

RMat build_r_mutated(const RatFunc& arg, const RMutation& m);
std::vector<RMutation> standard_mutations();  // fixed list of 20

using RBuilder = std::function<RMat(const RatFunc&)>;

inline RBuilder plain_r_builder() {
  return [](const RatFunc& a) { return build_r(a); };
}

// graded Yang-Baxter identity in matrix form, sign carriers interleaved,
// all three slot embeddings unsigned (the sign carriers hold the grading)
CheckResult verify_gybe_matrix(const RBuilder& rb);
// the same identity in component form with explicit parity signs
CheckResult verify_gybe_components(const RBuilder& rb);
// inversion identity R12(z) R21(1/z) = 1; the graded-flip variant of R21 is
// evaluated alongside and its observed status recorded
CheckResult verify_unitarity(const RBuilder& rb);
// frozen special values of the exchange matrix itself
CheckResult check_r_special_values();

Report verify_rmatrix_all(const RBuilder& rb);

// composite index helpers shared with other verifiers
std::string idx2_name(int composite);  // dim-4 index as "21" style (1-based)
std::string idx3_name(int composite);  // dim-8 index

}  // namespace qrll
