#pragma once

#include <vector>

#include "soeinstein/poly/rational.hpp"
#include "soeinstein/solver/coefficient_data.hpp"

namespace soe::solver {

using poly::BigRational;

// Closed forms of the published sign facts, evaluated exactly.
BigRational h_at_zero_closed_form(int k, int l);        // 4(5k-2)^2 (k-1)^2 (2k+l-1)
BigRational h_at_one_closed_form(int k, int l);         // (k-1)(2k+l-1)(k-l)(2k+l)^2
BigRational h_leading_closed_form(int k, int l);        // l^2 (k+l)(2k^2+2kl+l^2-l)
BigRational hlin_x3_coefficient_closed_form(int k, int l);  // 2(l-1)(k-1)(k-2)(5k-2)(2k+l-1)(3k^2+(2k+l)(l-1))

struct SignFacts {
  int k = 0;
  int l = 0;
  BigRational h0, h0_expected;
  BigRational h1, h1_expected;
  BigRational leading, leading_expected;
  bool boundary = false;   // k == l, so h(1) = 0
  bool hypothesis = false; // l > k >= 3: h(0) > 0 and h(1) < 0 are asserted
};

// Exact checks. Throws Error(transcription_mismatch) naming the failing
// fact when an identity or (under l > k) a sign claim does not hold.
SignFacts sign_facts(int k, int l, const CoefficientData& data = default_coefficient_data());

struct DescartesReport {
  int k = 0;
  int l = 0;
  std::vector<int> signs;       // by ascending degree
  bool alternating = false;     // + at even degrees, - at odd degrees
  bool hypothesis = false;      // l > k >= 3
  int negative_roots = 0;       // by isolation on (-bound, 0)
};

// Raw observation; the pattern is only claimed when hypothesis is true.
DescartesReport descartes_check_p(int k, int l, const CoefficientData& data = default_coefficient_data());

}  // namespace soe::solver
