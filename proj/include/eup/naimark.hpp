#pragma once

#include <cstdint>

#include "eup/entropy_bounds.hpp"
#include "eup/measurement.hpp"

namespace eup {

/// Projective dilation of a POVM (Y_1,...,Y_n) on an n·d-dimensional ambient
/// space. Built by stacking W = (Y_1^{1/2}; ...; Y_n^{1/2}), completing W to
/// a unitary U and conjugating the block projectors: the j-th projector has
/// Y_j as its top-left d×d block.
struct NaimarkDilation {
  Measurement original;
  int ambient_dim;
  Measurement projectors;
  Matrix unitary;
};

NaimarkDilation dilate(const Measurement& y);

/// Pads a measurement to the ambient space: the first operator picks up the
/// identity on the extension, the rest are zero-padded. Preserves validity,
/// projectivity and embedded-state statistics.
Measurement extend_measurement(const Measurement& x, int ambient_dim);

/// Zero-pads a state into the ambient space.
PureState embed_state(const PureState& psi, int ambient_dim);

struct DilationCheck {
  int trials = 0;
  double max_bound_mismatch = 0.0;    // dilated vs direct bound
  double max_entropy_mismatch = 0.0;  // per-measurement entropies
  double max_probability_mismatch = 0.0;  // outcome-by-outcome transfer
};

/// Samples random states and random projective partners on the base space and
/// compares the dilated-space bound and statistics against the direct ones.
/// Mismatches are reported, not thrown.
DilationCheck verify_dilation(const NaimarkDilation& dilation, int trials,
                              std::uint64_t seed);

}  // namespace eup
