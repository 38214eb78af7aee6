#include "wakefarm/trace.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace wakefarm {

void ConvergenceTrace::add(int iteration, long evaluations, double best_value, const Layout* snapshot) {
  TraceRecord rec{iteration, evaluations, best_value, std::nullopt};
  if (snapshot) rec.snapshot = *snapshot;
  records.push_back(std::move(rec));
}

void write_trace_csv(std::ostream& out, const ConvergenceTrace& trace) {
  out << "iteration,evaluations,best_J\n";
  char buf[96];
  for (const auto& r : trace.records) {
    std::snprintf(buf, sizeof buf, "%d,%ld,%.17g\n", r.iteration, r.evaluations, r.best_value);
    out << buf;
  }
}

ConvergenceTrace read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("iteration,evaluations,best_J", 0) != 0)
    throw std::runtime_error("trace csv: missing header");
  ConvergenceTrace trace;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string it, ev, j;
    if (!std::getline(row, it, ',') || !std::getline(row, ev, ',') || !std::getline(row, j))
      throw std::runtime_error("trace csv: malformed row `" + line + "`");
    trace.add(std::stoi(it), std::stol(ev), std::stod(j));
  }
  return trace;
}

}  // namespace wakefarm
