#pragma once

// Every polynomial literal used by the library, transcribed once.
// Terms are listed in the same order as their printed form (descending
// powers of the unknown, each coefficient in ascending powers of z / x).
// The residual tests in map_series_test.cpp cover each transcription.

#include <vector>

#include "cubicpm/series.hpp"

namespace cubicpm::polynomials {

/// 72 M^2 z^2 + (216 z^2 - 36 z + 1) M + 162 z^2 - 6 z = 0.
/// Branch seed: [0] (no matched map of size 0).
inline BivariatePoly matched_maps() {
  return {
      {2, 2, 72},
      {1, 2, 216}, {1, 1, -36}, {1, 0, 1},
      {0, 2, 162}, {0, 1, -6},
  };
}
inline const std::vector<Rational>& matched_maps_seed() {
  static const std::vector<Rational> seed{0};
  return seed;
}

/// Minimal polynomial of T1 (3-connected matched maps, root edge in the matching).
/// Branch seed: [0, 0, 1], read off K4 with its single rooting and three matchings
/// (one third of them have the root edge matched).
///
/// The printed form has leading term T1^6. The weight-12 part of the other
/// terms is 4 (T1 + z)^6 minus that term, and only 4 T1^6 keeps both map
/// systems on their closed formulas past z^11, so 4 is used here.
inline BivariatePoly matched_3connected_root_in_matching() {
  return {
      {6, 0, 4},
      {5, 1, 24}, {5, 0, 16},
      {4, 2, 60}, {4, 1, 92}, {4, 0, 25},
      {3, 3, 80}, {3, 2, 208}, {3, 1, 96}, {3, 0, 19},
      {2, 4, 60}, {2, 3, 232}, {2, 2, 150}, {2, 1, 12}, {2, 0, 7},
      {1, 5, 24}, {1, 4, 128}, {1, 3, 112}, {1, 2, 1}, {1, 1, -16}, {1, 0, 1},
      {0, 6, 4}, {0, 5, 28}, {0, 4, 33}, {0, 3, 12}, {0, 2, -1},
  };
}
/// The same polynomial with the leading coefficient exactly as printed.
inline BivariatePoly matched_3connected_root_in_matching_as_printed() {
  BivariatePoly p = matched_3connected_root_in_matching();
  p.add_term(6, 0, Integer(-3));
  return p;
}

inline const std::vector<Rational>& matched_3connected_seed() {
  static const std::vector<Rational> seed{0, 0, 1};
  return seed;
}

/// Quartic satisfied by B = D0 + D1 for bridgeless matched maps.
inline BivariatePoly matched_bridgeless_maps() {
  return {
      {4, 3, 64},
      {3, 3, 384}, {3, 2, 144},
      {2, 3, 864}, {2, 2, 1224}, {2, 1, 108},
      {1, 3, 864}, {1, 2, 2700}, {1, 1, -756}, {1, 0, 27},
      {0, 3, 324}, {0, 2, 1782}, {0, 1, -81},
  };
}
inline const std::vector<Rational>& matched_bridgeless_seed() {
  static const std::vector<Rational> seed{0};
  return seed;
}

/// z = U (1 - U)^3 written as U(1-U)^3 - z = 0.
inline BivariatePoly triangulation_parameter() {
  return {
      {4, 0, -1}, {3, 0, 3}, {2, 0, -3}, {1, 0, 1}, {0, 1, -1},
  };
}

// Univariate integer polynomials, coefficients in ascending degree.

/// Singularity of the matched connected cubic planar graph series (x).
inline std::vector<long> sigma_factor() { return {3616, 0, -45362, 0, -11833, 0, 7232, 0, 904}; }

/// Singularity of the plain connected cubic planar graph series (x).
inline std::vector<long> rho_factor() {
  return {46656, 0, 279936, 0, -7293760, 0, 513216, 0, 148716, 0, 17496, 0, 729};
}

/// Singularity of the matched bridgeless cubic planar graph series (x).
inline std::vector<long> sigma_bridgeless_factor() { return {432, 0, -5587, 0, 864, 0, 216}; }

/// Singularity of the plain bridgeless cubic planar graph series (x).
inline std::vector<long> rho_bridgeless_factor() { return {432, 0, -4265, 0, 324, 0, 54}; }

/// alpha_b = ((3 sqrt 3 - 5) / 2)^(1/2) is the positive root of 2 x^4 + 10 x^2 - 1.
inline std::vector<long> alpha_bridgeless_poly() { return {-1, 0, 10, 0, 2}; }

}  // namespace cubicpm::polynomials
