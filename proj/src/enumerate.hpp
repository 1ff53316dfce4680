#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "algebra.hpp"

namespace quatrec {

// Exhaustive sweep over the structure-constant tables of a small unital
// algebra over F_p.  Basis element e_0 is pinned as the unit, so only the
// products e_s * e_t with s, t >= 1 are free: (dim-1)^2 * dim coefficient
// cells, each ranging over [0, p).  Cell ((s-1)*(dim-1) + (t-1))*dim + u
// holds the coefficient of e_u in e_s * e_t.
using TableCells = std::vector<std::int64_t>;

enum class TableClass {
  NotAssociative,
  Commutative,     // associative with all brackets zero; both hypotheses vacuous
  SquaresFail,     // some commutator square escapes the center
  RegularityFail,  // some nonzero commutator is a zero divisor
  BothFail,
  PassesBoth,      // noncommutative, yet both hypotheses hold
};

// One violating table together with the data needed to re-verify the
// violation from the raw multiplication alone.  With a unit and dim <= 3
// every commutator of the algebra is a scalar multiple of
// d = e_1*e_2 - e_2*e_1, so d itself witnesses whatever fails.
struct TableWitness {
  TableCells cells;
  std::size_t dim = 0;
  std::int64_t p = 0;
  std::array<std::int64_t, 3> commutator{};  // d, coefficients on e_0..e_2
  bool square_violation = false;
  std::array<std::int64_t, 3> square{};       // d*d
  std::size_t noncommuting_basis = 0;         // d*d fails to commute with this e_b
  bool regularity_violation = false;
  std::array<std::int64_t, 3> annihilator{};  // nonzero z killing d
  bool left_annihilated = true;               // d*z == 0 when true, else z*d == 0
};

struct SweepOptions {
  // Lifts the dim <= 3, p in {2, 3} guard.  The dimension ceiling itself is
  // structural (the single-bracket shortcut needs it) and stays.
  bool force = false;
  bool collect_witnesses = true;
};

struct SweepReport {
  std::size_t dim = 0;
  std::int64_t p = 0;
  std::uint64_t total = 0;
  std::uint64_t associative = 0;
  std::uint64_t commutative = 0;
  std::uint64_t squares_fail = 0;
  std::uint64_t regularity_fail = 0;
  std::uint64_t both_fail = 0;
  std::uint64_t passes_both = 0;  // noncommutative survivors; expected to stay 0
  std::vector<TableWitness> witnesses;  // one per failing table, enumeration order
  std::vector<TableCells> survivors;    // any passes-both tables, dumped in full
};

// Classifies a single table without leaving machine integers.  When the
// table is noncommutative and fails, fills *witness if given.
TableClass classify_table(std::size_t dim, std::int64_t p, const TableCells& cells,
                          TableWitness* witness = nullptr);

// Builds the exact presentation for one table (basis names 1, e1, e2).
AlgebraPresentation presentation_from_cells(std::size_t dim, std::int64_t p,
                                            const TableCells& cells);

// Decodes table index n (odometer over cells, cell 0 least significant).
TableCells cells_from_index(std::size_t dim, std::int64_t p, std::uint64_t n);

SweepReport sweep_tables(std::size_t dim, std::int64_t p, const SweepOptions& opts = {});

}  // namespace quatrec
