#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "center.hpp"
#include "multipoly.hpp"

namespace quatrec {

struct SampleOptions {
  std::uint64_t seed = 0;
  int samples = 64;
  long long height = 10;
};

enum class CheckMode { Symbolic, Exhaustive, Randomized };

// A pair (x, y) whose commutator square escapes the center, together with a
// basis element that refuses to commute with it.
struct CommutatorSquareWitness {
  Element x, y, v, v_squared;
  std::size_t noncommuting_basis = 0;
};

// A pair (x, y) with a non-zero commutator that annihilates something.
struct CommutatorZeroDivisorWitness {
  Element x, y, v;
  ZeroDivisorWitness divisor;
};

// Verdict for "every commutator square is central".
struct CentralSquaresVerdict {
  enum class Kind { HoldsSymbolic, HoldsExhaustive, NoViolationSampled, Fails };
  Kind kind = Kind::NoViolationSampled;
  std::size_t samples = 0;
  std::optional<CommutatorSquareWitness> witness;

  bool conclusive_holds() const {
    return kind == Kind::HoldsSymbolic || kind == Kind::HoldsExhaustive;
  }
  bool failed() const { return kind == Kind::Fails; }
};

// Verdict for "no non-zero commutator is a zero divisor".
struct RegularCommutatorsVerdict {
  enum class Kind { HoldsExhaustive, HoldsImplied, NoViolationSampled, Fails };
  Kind kind = Kind::NoViolationSampled;
  std::size_t samples = 0;
  std::optional<CommutatorZeroDivisorWitness> witness;
  std::string note;

  bool conclusive_holds() const {
    return kind == Kind::HoldsExhaustive || kind == Kind::HoldsImplied;
  }
  bool failed() const { return kind == Kind::Fails; }
};

// The coordinates of (v^2)e_s - e_s(v^2) for v = (x, y), expanded in 2n
// indeterminates (x_0..x_{n-1}, y_0..y_{n-1}); all-zero iff every commutator
// square is central.  Over F_p the exponents are reduced via t^p = t so the
// zero polynomial coincides with the zero function.
std::vector<MultiPoly> commutator_square_polynomials(const AlgebraPresentation& a);

CentralSquaresVerdict check_commutator_squares_central(const AlgebraPresentation& a,
                                                       CheckMode mode,
                                                       const SampleOptions& opts = {});

// Symbolic mode is not available here; use Exhaustive (finite base) or
// Randomized (deterministic basis-pair screen, then seeded sampling).
RegularCommutatorsVerdict check_commutators_regular(const AlgebraPresentation& a, CheckMode mode,
                                                    const SampleOptions& opts = {});

}  // namespace quatrec
