#pragma once

#include <string>
#include <vector>

#include "qsyslab/tensor_core.hpp"

namespace qsyslab {

/// Per-axiom residuals of a verifier run.
///
/// An entry marked informational is reported but does not affect passed(); the
/// counit condition of a non-unital quantum function is the only such entry.
class VerificationReport {
public:
  struct Entry {
    std::string axiom;
    double residual = 0.0;
    bool passed = false;
    bool required = true;
  };

  explicit VerificationReport(Tolerance tol = {}) : tol_(tol) {}

  void add(std::string axiom, double residual, bool required = true);
  /// Entry whose pass/fail is decided by the caller (rank tests, flags).
  void add_decided(std::string axiom, double residual, bool passed, bool required = true);
  /// Appends another report's entries, prefixing their axiom ids.
  void merge(const VerificationReport& other, const std::string& prefix = {});

  bool passed() const;
  double max_residual() const;
  Tolerance tolerance() const { return tol_; }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Throws std::out_of_range when the axiom id is absent.
  const Entry& at(const std::string& axiom) const;
  bool contains(const std::string& axiom) const;

  std::string summary() const;

private:
  Tolerance tol_;
  std::vector<Entry> entries_;
};

}  // namespace qsyslab
