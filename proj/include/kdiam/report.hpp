#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kdiam/scalar.hpp"

namespace kdiam {

/// Outcome of a verifier.
///
/// A false verdict carries the violating index tuple in `witness`; a true one
/// carries the certifying edges. `details` holds property-specific values
/// (volume ratios, sample counts, sub-verdicts) as strings.
struct VerificationReport {
  std::string property;
  std::size_t k = 0;
  std::optional<std::string> norm;
  bool verdict = false;
  std::vector<std::size_t> witness;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::optional<std::string> diameter_key;
  std::string mode = "exact";
  std::optional<double> tolerance;
  std::vector<std::string> flags;
  std::map<std::string, std::string> details;

  bool has_flag(const std::string& f) const {
    for (const auto& g : flags)
      if (g == f) return true;
    return false;
  }
  void add_flag(const std::string& f) {
    if (!has_flag(f)) flags.push_back(f);
  }
};

template <Scalar T>
VerificationReport make_report(std::string property, std::size_t k, const Tolerance& tol) {
  VerificationReport r;
  r.property = std::move(property);
  r.k = k;
  r.mode = ScalarTraits<T>::mode_name;
  if constexpr (!ScalarTraits<T>::exact) {
    r.tolerance = tol.rel;
    r.add_flag("numerical");
  }
  return r;
}

}  // namespace kdiam
