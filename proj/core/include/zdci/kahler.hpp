#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zdci/ci.hpp"
#include "zdci/minors.hpp"
#include "zdci/primdec.hpp"

namespace zdci {

enum class KahlerTarget { Self, DegreeForm };

struct KahlerReport {
  // r x n, entry (i, j) = d f_i / d x_j.
  std::vector<std::vector<Polynomial>> jacobian;
  std::vector<Polynomial> generators;
  // Nonzero residues of the maximal minors, in lexicographic row-subset order.
  std::vector<MinorReport> theta_generators;
  std::size_t mu = 0;
  bool char_ok = false;
  std::optional<bool> verdict_if_applicable;
};

// Jacobian minors of the generators (target Self) or of the degree forms of a
// Macaulay basis (target DegreeForm), reduced modulo I or DF(I).
KahlerReport kahler_different(std::span<const Polynomial> generators, KahlerTarget target,
                              const MinorOptions& options = {});

struct ComponentKahler {
  PrimaryComponent component;
  std::vector<MinorReport> theta_generators;
  bool nonzero = false;
};

struct KahlerLocalReport {
  bool verdict = false;
  std::vector<ComponentKahler> components;
};

// Raises CharacteristicObstruction when char K divides mu or the
// multiplicity of some component.
KahlerLocalReport kahler_local_ci_check(std::span<const Polynomial> generators,
                                        const CIOptions& options = {});

}  // namespace zdci
