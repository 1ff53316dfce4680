#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "center.hpp"
#include "hypotheses.hpp"
#include "normform.hpp"
#include "tristate.hpp"

namespace quatrec {

enum class Stage {
  Validation,
  Center,
  CommutatorSquares,
  CommutatorRegularity,
  Structure,
  Completeness,
  Division,
  Decomposition,
  Certificate,
};

enum class RefusalReason {
  NotAssociative,
  NotUnital,
  Commutative,
  CharacteristicTwo,
  CenterNotField,
  SquaresNotCentral,
  CommutatorZeroDivisor,
  NoncentralCommutatorMissing,
  FallbackFailed,
  AnticommutationFailed,
  DegenerateSquare,
  DependentBasis,
  DecompositionIncomplete,
  CentralInput,
  NoncentralAnticommutator,
  SplitAlgebra,
};

std::string to_string(Stage s);
std::string to_string(RefusalReason r);

// A structured "not a quaternion algebra here" answer: where the pipeline
// stopped, why, and the elements that demonstrate it.
struct Refusal {
  Stage stage = Stage::Validation;
  RefusalReason reason = RefusalReason::NotAssociative;
  std::string note;
  std::vector<std::pair<std::string, Element>> elements;
  std::optional<std::array<std::size_t, 3>> triple;
  std::optional<std::size_t> basis_index;
  std::optional<ZeroDivisorWitness> zero_divisor;
  std::optional<CommutatorSquareWitness> square_witness;
  std::optional<CommutatorZeroDivisorWitness> regularity_witness;
  std::optional<std::array<long long, 4>> isotropic;
};

class RefusalError : public std::runtime_error {
 public:
  explicit RefusalError(Refusal r)
      : std::runtime_error(to_string(r.stage) + ": " + to_string(r.reason) +
                           (r.note.empty() ? "" : " (" + r.note + ")")),
        refusal_(std::move(r)) {}

  const Refusal& refusal() const { return refusal_; }

 private:
  Refusal refusal_;
};

// Quaternion generators: i^2 and j^2 central and non-zero, ij = -ji, k = ij,
// and {1, i, j, k} linearly independent over the base field.
struct QuaternionStructure {
  Element i, j, k;
  Element i_squared, j_squared;
  // Provenance: i came from the commutator of gen_x and gen_y (times gen_x
  // when the fallback fired), j from the commutator of i and gen_s.
  Element gen_x, gen_y, gen_s;
  bool fallback_used = false;
};

// Witnesses a x^2 + b x + c = 0 with a = v^2, c = (vx)^2,
// b = v^2 + (vx)^2 - (v + vx)^2 for a commutator v of x.
struct QuadraticCertificate {
  Element x, v;
  Element a, b, c;
  bool identity_holds = false;
  bool a_central = false, b_central = false, c_central = false;
  bool a_nonzero = false, c_nonzero = false;
};

// x = c0 + c1 i + c2 j + c3 k with central coefficients; the residual is what
// is left over and must vanish for the expression to be exact.
struct Decomposition {
  Element c0, c1, c2, c3;
  Element residual;
  bool complete = false;
};

struct CompletenessReport {
  std::size_t dim = 0;
  std::size_t center_rank = 0;
  std::size_t expected_rank = 0;  // 4 * center_rank
  std::size_t achieved_rank = 0;  // rank of { c * u : c in center basis, u in {1,i,j,k} }
  bool complete = false;
  std::optional<std::size_t> failing_basis;
  std::optional<Refusal> failure;
};

struct RecognizeOptions {
  std::uint64_t seed = 0;
  int samples = 64;
  long long height = 10;
};

struct RecognitionOutcome {
  AlgebraPresentation working;  // the presentation actually analyzed (lifted to Q when given over Z)
  bool lifted = false;
  ValidationReport validation;
  std::optional<CenterBasis> center;
  std::optional<CentralSquaresVerdict> squares;
  std::optional<RegularCommutatorsVerdict> regularity;
  std::optional<QuaternionStructure> structure;
  std::optional<CompletenessReport> completeness;
  std::optional<DivisionVerdict> division;
  Tristate recognized = Tristate::Unknown;
  std::optional<Refusal> refusal;
  std::string note;  // explanation when recognized == Unknown
};

struct CommutatorScan {
  Element v;       // the noncentral element produced (a commutator, or commutator * x)
  Element x, y;    // v or its precursor is the commutator of x and y
  bool fallback_used = false;
  Element direct_commutator;  // (x, y) itself, equal to v unless the fallback fired
};

// First noncentral basis element x, first basis y with (x, y) != 0; when that
// commutator is central, falls back to (x, y) * x.  Throws RefusalError when
// nothing noncentral exists (commutative) or the fallback also lands in the
// center.
CommutatorScan scan_noncentral_commutator(const AlgebraPresentation& a, const CenterBasis& c);

QuaternionStructure build_quaternion_structure(const AlgebraPresentation& a, const CenterBasis& c,
                                               const RecognizeOptions& opts = {});

// Quadratic dependence certificate for a noncentral x over the center.
QuadraticCertificate quadratic_certificate(const AlgebraPresentation& a, const Element& x);

// Express x over the center in the quaternion basis; requires characteristic
// != 2 and invertible central anticommutator data.
Decomposition decompose_element(const AlgebraPresentation& a, const QuaternionStructure& q,
                                const Element& x);

CompletenessReport completeness_check(const AlgebraPresentation& a, const CenterBasis& c,
                                      const QuaternionStructure& q);

// Full pipeline: validate, lift, center, hypothesis checks, structure,
// completeness, division.
RecognitionOutcome recognize(const AlgebraPresentation& a, const RecognizeOptions& opts = {});

}  // namespace quatrec
