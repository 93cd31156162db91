#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "zdci/groebner.hpp"
#include "zdci/minors.hpp"
#include "zdci/primdec.hpp"

namespace zdci {

enum class FailureReason { None, CastelnuovoAsymmetric, AllMinorsZero };

std::string_view to_string(FailureReason reason) noexcept;

struct CIOptions {
  bool short_circuit = false;
  unsigned threads = 1;
  bool assume_primary = false;
  std::uint64_t seed = kDefaultSeed;
};

struct CIReport {
  bool verdict = false;
  std::optional<SyzygyMatrix> matrix;
  std::vector<MinorReport> minors;
  std::vector<std::vector<std::size_t>> witnesses;
  // Per witness: whether the subset alone generates the ideal. Unset when not
  // decided (parametric fields, strict checks).
  std::vector<std::optional<bool>> full_generation;
  std::optional<HilbertData> hilbert;
  FailureReason failure_reason = FailureReason::AllMinorsZero;
};

// Q must be M-primary; checked unless options.assume_primary.
CIReport check_ci_at_maximal(std::span<const Polynomial> q, std::span<const Polynomial> m,
                             const CIOptions& options = {});

struct ComponentCI {
  PrimaryComponent component;
  CIReport report;
};

struct LocalCIResult {
  bool verdict = false;
  std::vector<ComponentCI> components;
};

LocalCIResult check_locally_ci(std::span<const Polynomial> generators,
                               const CIOptions& options = {});

// Minors of W over (x_1..x_n) built from the degree forms of a Macaulay basis,
// reduced modulo DF(I). Columns are the Macaulay basis elements.
CIReport check_sci_macaulay(std::span<const Polynomial> generators,
                            const CIOptions& options = {});

// Fills verdict, witnesses and failure_reason from the minors.
void finish_report(CIReport& report);

// Rad(<subset>) == M; false when <subset> is not zero-dimensional.
bool radical_equals(std::span<const Polynomial> subset, std::span<const Polynomial> m);

}  // namespace zdci
