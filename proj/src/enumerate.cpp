#include "enumerate.hpp"

#include <string>

#include "errors.hpp"

namespace quatrec {

namespace {

// Dense machine-integer view of one table, unit rows included.
struct FastTable {
  std::size_t dim = 0;
  std::int64_t p = 0;
  std::int64_t g[3][3][3] = {};  // g[s][t][u]: coefficient of e_u in e_s*e_t

  void load(std::size_t d, std::int64_t prime, const TableCells& cells) {
    dim = d;
    p = prime;
    for (std::size_t s = 0; s < 3; ++s)
      for (std::size_t t = 0; t < 3; ++t)
        for (std::size_t u = 0; u < 3; ++u) g[s][t][u] = 0;
    for (std::size_t t = 0; t < dim; ++t) g[0][t][t] = 1;
    for (std::size_t s = 1; s < dim; ++s) g[s][0][s] = 1;
    for (std::size_t s = 1; s < dim; ++s)
      for (std::size_t t = 1; t < dim; ++t)
        for (std::size_t u = 0; u < dim; ++u)
          g[s][t][u] = cells[((s - 1) * (dim - 1) + (t - 1)) * dim + u] % p;
  }

  void mul(const std::int64_t x[3], const std::int64_t y[3], std::int64_t z[3]) const {
    for (std::size_t v = 0; v < dim; ++v) z[v] = 0;
    for (std::size_t s = 0; s < dim; ++s) {
      if (x[s] == 0) continue;
      for (std::size_t t = 0; t < dim; ++t) {
        if (y[t] == 0) continue;
        std::int64_t c = x[s] * y[t] % p;
        for (std::size_t v = 0; v < dim; ++v) z[v] = (z[v] + c * g[s][t][v]) % p;
      }
    }
  }

  bool is_zero(const std::int64_t x[3]) const {
    for (std::size_t v = 0; v < dim; ++v)
      if (x[v] % p != 0) return false;
    return true;
  }

  // Triples touching the unit hold by construction, so only free indices run.
  bool associative() const {
    for (std::size_t s = 1; s < dim; ++s)
      for (std::size_t t = 1; t < dim; ++t)
        for (std::size_t r = 1; r < dim; ++r) {
          const std::int64_t* w = g[s][t];
          const std::int64_t* z = g[t][r];
          for (std::size_t v = 0; v < dim; ++v) {
            std::int64_t lhs = 0;
            std::int64_t rhs = 0;
            for (std::size_t u = 0; u < dim; ++u) {
              lhs += w[u] * g[u][r][v];
              rhs += z[u] * g[s][u][v];
            }
            if (lhs % p != rhs % p) return false;
          }
        }
    return true;
  }
};

std::uint64_t checked_power(std::int64_t p, std::size_t e, std::uint64_t cap) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < e; ++i) {
    n *= static_cast<std::uint64_t>(p);
    if (n > cap) throw InputError("table count exceeds the 2^28 sweep budget");
  }
  return n;
}

}  // namespace

TableClass classify_table(std::size_t dim, std::int64_t p, const TableCells& cells,
                          TableWitness* witness) {
  if (dim == 0 || dim > 3) throw InputError("table classification needs dimension 1 through 3");
  if (p < 2) throw InputError("field size must be at least 2");
  if (cells.size() != (dim - 1) * (dim - 1) * dim)
    throw InputError("cell vector has the wrong length for this dimension");

  FastTable ft;
  ft.load(dim, p, cells);
  if (!ft.associative()) return TableClass::NotAssociative;
  // One generator next to the unit commutes with everything.
  if (dim < 3) return TableClass::Commutative;

  // With a unit and two free generators, [x, y] = (x_1 y_2 - x_2 y_1) d for
  // d = e_1*e_2 - e_2*e_1: the single bracket decides both hypotheses, since
  // scaling d preserves centrality of the square and zero-divisor status.
  std::int64_t d[3];
  bool commutes = true;
  for (std::size_t u = 0; u < dim; ++u) {
    d[u] = ((ft.g[1][2][u] - ft.g[2][1][u]) % p + p) % p;
    if (d[u] != 0) commutes = false;
  }
  if (commutes) return TableClass::Commutative;

  std::int64_t dd[3];
  ft.mul(d, d, dd);
  bool central = true;
  std::size_t bad_basis = 0;
  for (std::size_t r = 1; r < dim && central; ++r) {
    for (std::size_t v = 0; v < dim; ++v) {
      std::int64_t lhs = 0;
      std::int64_t rhs = 0;
      for (std::size_t s = 0; s < dim; ++s) {
        lhs += dd[s] * ft.g[s][r][v];
        rhs += dd[s] * ft.g[r][s][v];
      }
      if (lhs % p != rhs % p) {
        central = false;
        bad_basis = r;
        break;
      }
    }
  }

  bool regular = true;
  std::int64_t ann[3] = {};
  bool left = true;
  std::int64_t z[3] = {};
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim; ++i) count *= static_cast<std::uint64_t>(p);
  std::int64_t out[3];
  for (std::uint64_t n = 1; n < count && regular; ++n) {
    std::size_t i = 0;
    while (++z[i] == p) {
      z[i] = 0;
      ++i;
    }
    ft.mul(d, z, out);
    if (ft.is_zero(out)) {
      regular = false;
      left = true;
    } else {
      ft.mul(z, d, out);
      if (ft.is_zero(out)) {
        regular = false;
        left = false;
      }
    }
    if (!regular)
      for (std::size_t v = 0; v < dim; ++v) ann[v] = z[v];
  }

  if (witness && !(central && regular)) {
    witness->cells = cells;
    witness->dim = dim;
    witness->p = p;
    for (std::size_t v = 0; v < 3; ++v) {
      witness->commutator[v] = v < dim ? d[v] : 0;
      witness->square[v] = 0;
      witness->annihilator[v] = 0;
    }
    witness->square_violation = !central;
    witness->regularity_violation = !regular;
    if (!central) {
      for (std::size_t v = 0; v < dim; ++v) witness->square[v] = dd[v];
      witness->noncommuting_basis = bad_basis;
    }
    if (!regular) {
      for (std::size_t v = 0; v < dim; ++v) witness->annihilator[v] = ann[v];
      witness->left_annihilated = left;
    }
  }

  if (central && regular) return TableClass::PassesBoth;
  if (!central && regular) return TableClass::SquaresFail;
  if (central) return TableClass::RegularityFail;
  return TableClass::BothFail;
}

AlgebraPresentation presentation_from_cells(std::size_t dim, std::int64_t p,
                                            const TableCells& cells) {
  if (dim == 0 || dim > 3) throw InputError("table presentations need dimension 1 through 3");
  if (cells.size() != (dim - 1) * (dim - 1) * dim)
    throw InputError("cell vector has the wrong length for this dimension");
  BaseRing base = BaseRing::Fp(p);
  AlgebraPresentation a;
  a.base = base;
  a.dim = dim;
  a.unit = Element{std::vector<Scalar>(dim, Scalar(base))};
  a.unit.coords[0] = Scalar::of(base, 1);
  a.table.assign(dim, std::vector<Element>(dim, a.unit));
  for (std::size_t s = 0; s < dim; ++s)
    for (std::size_t t = 0; t < dim; ++t) {
      Element e{std::vector<Scalar>(dim, Scalar(base))};
      if (s == 0)
        e.coords[t] = Scalar::of(base, 1);
      else if (t == 0)
        e.coords[s] = Scalar::of(base, 1);
      else
        for (std::size_t u = 0; u < dim; ++u)
          e.coords[u] = Scalar::of(base, cells[((s - 1) * (dim - 1) + (t - 1)) * dim + u]);
      a.table[s][t] = std::move(e);
    }
  const char* names[3] = {"1", "e1", "e2"};
  for (std::size_t s = 0; s < dim; ++s) a.names.push_back(names[s]);
  return a;
}

TableCells cells_from_index(std::size_t dim, std::int64_t p, std::uint64_t n) {
  if (dim == 0 || dim > 3) throw InputError("table indices need dimension 1 through 3");
  std::size_t ncells = (dim - 1) * (dim - 1) * dim;
  TableCells cells(ncells, 0);
  for (std::size_t i = 0; i < ncells; ++i) {
    cells[i] = static_cast<std::int64_t>(n % static_cast<std::uint64_t>(p));
    n /= static_cast<std::uint64_t>(p);
  }
  return cells;
}

SweepReport sweep_tables(std::size_t dim, std::int64_t p, const SweepOptions& opts) {
  if (dim == 0 || dim > 3)
    throw InputError(
        "enumeration covers dimensions 1 through 3 (a unit plus at most two free generators)");
  if (!opts.force && p != 2 && p != 3)
    throw InputError("field size " + std::to_string(p) +
                     " is outside the default guard {2, 3}; set force to override");
  BaseRing::Fp(p);  // rejects composite or oversized p

  std::size_t ncells = (dim - 1) * (dim - 1) * dim;
  std::uint64_t total = checked_power(p, ncells, 1ull << 28);

  SweepReport rep;
  rep.dim = dim;
  rep.p = p;
  rep.total = total;

  TableCells cells(ncells, 0);
  TableWitness w;
  for (std::uint64_t n = 0; n < total; ++n) {
    TableClass cls = classify_table(dim, p, cells, &w);
    switch (cls) {
      case TableClass::NotAssociative:
        break;
      case TableClass::Commutative:
        ++rep.associative;
        ++rep.commutative;
        break;
      case TableClass::SquaresFail:
        ++rep.associative;
        ++rep.squares_fail;
        if (opts.collect_witnesses) rep.witnesses.push_back(w);
        break;
      case TableClass::RegularityFail:
        ++rep.associative;
        ++rep.regularity_fail;
        if (opts.collect_witnesses) rep.witnesses.push_back(w);
        break;
      case TableClass::BothFail:
        ++rep.associative;
        ++rep.both_fail;
        if (opts.collect_witnesses) rep.witnesses.push_back(w);
        break;
      case TableClass::PassesBoth:
        ++rep.associative;
        ++rep.passes_both;
        rep.survivors.push_back(cells);
        break;
    }
    if (n + 1 < total) {
      std::size_t i = 0;
      while (++cells[i] == p) {
        cells[i] = 0;
        ++i;
      }
    }
  }
  return rep;
}

}  // namespace quatrec
