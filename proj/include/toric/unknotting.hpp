#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toric/braid.hpp"
#include "toric/invariants.hpp"

namespace toric {

struct ToricParams {
  int p = 2;
  int q = 1;
  int d = 1;  // gcd(p, q)

  static ToricParams make(int p, int q);
  bool is_knot() const { return d == 1; }
  int crossings() const { return q * (p - 1); }
};

// 1-based crossing positions into B(p,q), strictly increasing.
using UCrossingData = std::vector<int>;

struct EuclidStep {
  int i = 1;
  int p = 0;
  int q = 0;
  int m = 0;
  int a = 0;
  bool odd = true;
};

struct EuclidTrace {
  std::vector<EuclidStep> steps;
  std::string terminal;  // "a=1", "a=p-1" or "a=0"
};

struct Provenance {
  int position = 0;
  int step = 0;         // recursion step that produced it
  std::string set;      // "X", "Y" (remainder block of an odd step) or "Xij"
  int block = 0;        // j within the step
};

struct UnknottingPlan {
  ToricParams params;
  UCrossingData positions;
  std::vector<Provenance> provenance;  // sorted by position
  EuclidTrace trace;
};

UCrossingData u_crossing_data(int p, int q);
int unknotting_number(int p, int q);
EuclidTrace euclid_trace(int p, int q);
UnknottingPlan minimal_ucd(int p, int q);

// x -> q(p-1) + 1 - x, for use on reverse(B(p,q)).
UCrossingData mirrored_positions(const UCrossingData& positions, int p, int q);
UCrossingData mirrored_ucd(const UnknottingPlan& plan);

struct MatlabParity {
  std::vector<int> mukd1;               // W in the order the program builds it
  std::vector<long> mukd2_as_printed;   // ((p-1)(q-1)/2) + 1 - W
  std::vector<int> mukd2_corrected;     // q(p-1) + 1 - W, sorted
  bool as_printed_in_range = true;
  int loop_bound = 0;                   // 5 * digits(min(p, q))
  bool loop_bound_truncates = false;    // the literal bound stops before the recursion ends
  std::vector<int> mukd1_literal;       // W under the literal bound
};

// The MATLAB program, emulated array by array. Knots only.
MatlabParity matlab_parity(int p, int q);

// Flips positions in B(p,q), or in reverse(B(p,q)) when `reversed`.
BraidWord flipped_toric_braid(int p, int q, const UCrossingData& positions, bool reversed = false);

TrivialityVerdict verify_positions(int p, int q, const UCrossingData& positions, bool reversed = false,
                                   const VerdictOptions& options = {});
TrivialityVerdict verify_plan(const UnknottingPlan& plan, const VerdictOptions& options = {});

// eta_1 ... eta_n with eta_i = sigma_1 ... sigma_{n-i+1} sigma_{n-i+2}^-1 ... sigma_n^-1,
// on n+1 strands.
BraidWord eta_product(int n);

// sigma_1...sigma_n repeated n+1 times, the k-th copy with its last k letters inverted.
BraidWord cancelling_staircase(int n);

// Both sides of the staircase reduction: the p-strand word
// eta_1 k_{p-1} eta_2 k_{p-2} s_{p-1}^-1 ... eta_a k_{p-a} s_{p-a+1}^-1 ... s_{p-1}^-1
// and eta_1 ... eta_a on p-a strands. signs is a x (p-a-1).
std::pair<BraidWord, BraidWord> staircase_instance(int p, int a, const std::vector<std::vector<int>>& signs);

}  // namespace toric
