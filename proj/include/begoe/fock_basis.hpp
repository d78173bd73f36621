// Copyright 2026 The begoe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace begoe::fock {

/// Bosons per single-particle level; length is the level count N.
using OccupationVector = std::vector<int>;

/// Result of acting with a normalized k-boson monomial operator on a state.
/// `target` is empty when the state is annihilated; then amplitude == 0.
struct MonomialAction {
  std::optional<OccupationVector> target;
  double amplitude = 0.0;
};

/// Number of ways to place `particles` bosons in `levels` levels,
/// C(levels + particles - 1, particles), in exact integer arithmetic.
/// Valid for levels + particles <= 64; beyond that a CapacityError is
/// thrown if the value would overflow 64 bits.
std::uint64_t dimension(int levels, int particles);

/// Occupation-number basis for a fixed particle number, ordered by
/// descending lexicographic occupation. Immutable after construction and
/// safe for concurrent reads.
class BosonBasis {
 public:
  BosonBasis(int levels, int particles);

  int levels() const { return levels_; }
  int particles() const { return particles_; }
  std::size_t size() const { return states_.size(); }

  const OccupationVector& state(std::size_t i) const { return states_[i]; }
  const std::vector<OccupationVector>& states() const { return states_; }

  /// Exact inverse of state(): combinatorial rank in the descending-lex
  /// order. Throws std::invalid_argument for vectors outside this basis.
  std::size_t index_of(const OccupationVector& occ) const;

 private:
  int levels_;
  int particles_;
  std::vector<OccupationVector> states_;
};

/// B(b)|state>: removes the k-boson monomial b. Amplitude is
/// sqrt(prod_i C(state_i, b_i)) in the normalized-operator convention,
/// so that a full k-boson removal has unit amplitude.
MonomialAction annihilate_monomial(const OccupationVector& state,
                                   const OccupationVector& b);

/// B+(a)|state>: adds the k-boson monomial a. Amplitude is
/// sqrt(prod_i C(state_i + a_i, a_i)).
MonomialAction create_monomial(const OccupationVector& state,
                               const OccupationVector& a);

/// Binomial coefficient as a double, computed multiplicatively (no large
/// factorials). Exact for values representable in 53 bits.
double binomial_double(int n, int k);

}  // namespace begoe::fock
