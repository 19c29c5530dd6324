#include "qsyslab/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qsyslab {

void VerificationReport::add(std::string axiom, double residual, bool required) {
  const bool ok = residual <= tol_.eps;
  entries_.push_back({std::move(axiom), residual, ok, required});
}

void VerificationReport::add_decided(std::string axiom, double residual, bool passed,
                                     bool required) {
  entries_.push_back({std::move(axiom), residual, passed, required});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& e : other.entries_) {
    entries_.push_back({prefix + e.axiom, e.residual, e.passed, e.required});
  }
}

bool VerificationReport::passed() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.passed || !e.required; });
}

double VerificationReport::max_residual() const {
  double r = 0.0;
  for (const auto& e : entries_) {
    if (e.required) r = std::max(r, e.residual);
  }
  return r;
}

const VerificationReport::Entry& VerificationReport::at(const std::string& axiom) const {
  for (const auto& e : entries_) {
    if (e.axiom == axiom) return e;
  }
  throw std::out_of_range("no report entry '" + axiom + "'");
}

bool VerificationReport::contains(const std::string& axiom) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const Entry& e) { return e.axiom == axiom; });
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os.precision(3);
  for (const auto& e : entries_) {
    os << "  " << (e.passed ? "ok  " : (e.required ? "FAIL" : "info")) << ' ' << e.axiom
       << "  residual=" << std::scientific << e.residual << '\n';
  }
  return os.str();
}

}  // namespace qsyslab
