#pragma once

#include <stdexcept>

namespace nesthilb {

/// A generic specialization of (w1, w2) hit a zero weight; redraw.
class DegenerateSpecialization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Euler class of a character with a trivial weight was requested.
class TrivialWeightError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two computations that must agree exactly did not. Always a bug or broken
/// input data, never a numerical accident.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nesthilb
