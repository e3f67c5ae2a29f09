#pragma once

// Counter-model descent across a single rule instance: given a model and
// valuation refuting the conclusion, find a premise they (suitably extended)
// refute as well.

#include "rtc/kernel.hpp"
#include "rtc/semantics.hpp"

namespace rtc {

struct DescentStep {
  int premise = 0;
  FiniteModel model;
  Valuation valuation;
};

// Throws NoCounterexample when (m, v) does not invalidate the conclusion or
// no premise can be refuted, NotApplicable for RtcRefl.
//
// RtcCase: the first premise when v(s) = v(t); otherwise the second, with
// the eigenvariable sent to the penultimate element of the minimal chain.
// Other rules keep v and assign the premise's new variables the
// lexicographically first values that refute it.
DescentStep descent_witness(const RuleInstance& r, const FiniteModel& m, const Valuation& v);

}  // namespace rtc
