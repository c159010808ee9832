#pragma once

#include <string>
#include <vector>

namespace turancert {

// One audited constant: the reference (printed) value against the value this
// toolkit recomputes from scratch.
struct SelfCheckRow {
  std::string name;
  double reference = 0.0;
  double recomputed = 0.0;
  double difference = 0.0;
  bool agree = false;
  std::string note;
};

struct SelfCheckReport {
  std::vector<SelfCheckRow> rows;
  bool oracles_converged = true;
};

// Cross-validates the coefficient closed forms against quadrature, the
// series constants against partial summation, the Parseval identity, and the
// explicit frame lower bound. Disagreements are reported, not hidden.
SelfCheckReport run_selfcheck();

}  // namespace turancert
