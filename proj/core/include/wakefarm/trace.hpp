#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "wakefarm/layout.hpp"

namespace wakefarm {

struct TraceRecord {
  int iteration = 0;
  long evaluations = 0;
  double best_value = 0.0;
  std::optional<Layout> snapshot;
};

/// One record per optimizer iteration (generation, hop, or accepted step).
struct ConvergenceTrace {
  std::vector<TraceRecord> records;

  bool empty() const { return records.empty(); }
  void add(int iteration, long evaluations, double best_value, const Layout* snapshot = nullptr);
};

/// CSV with header `iteration,evaluations,best_J`; values use 17 significant
/// digits.
void write_trace_csv(std::ostream& out, const ConvergenceTrace& trace);
ConvergenceTrace read_trace_csv(std::istream& in);

}  // namespace wakefarm
