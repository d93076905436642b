#pragma once

#include <string>
#include <utility>

namespace cyleuler {

/// Outcome of one check. Every check is phrased as "metric <= tolerance", so
/// `passed` is always exactly that comparison.
struct VerificationRecord {
  std::string name;
  bool passed = true;
  double metric = 0.0;
  double tolerance = 0.0;
  double worst_t = 0.0;
  double worst_x = 0.0;
  std::string notes;
};

inline VerificationRecord make_record(std::string name, double metric, double tolerance,
                                      double worst_t, double worst_x, std::string notes = {}) {
  VerificationRecord r;
  r.name = std::move(name);
  r.metric = metric;
  r.tolerance = tolerance;
  r.passed = metric <= tolerance;
  r.worst_t = worst_t;
  r.worst_x = worst_x;
  r.notes = std::move(notes);
  return r;
}

}  // namespace cyleuler
