#include "matrix.hpp"

#include <cassert>

namespace quatrec {

ExactMatrix ExactMatrix::identity(const BaseRing& ring, std::size_t n) {
  ExactMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::of(ring, 1);
  return m;
}

ExactMatrix ExactMatrix::from_columns(const BaseRing& ring, std::size_t rows,
                                      const std::vector<std::vector<Scalar>>& cols) {
  ExactMatrix m(ring, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

namespace {

// Forward elimination for rational input: clear denominators per row, then run
// Bareiss so every intermediate entry stays an exact subdeterminant (no
// fraction blowup). Row scaling does not change the row space, hence not the
// RREF. Returns integer echelon rows plus pivot columns.
void bareiss_echelon(std::vector<std::vector<BigInt>>& n, std::vector<std::size_t>& pivots) {
  const std::size_t rows = n.size();
  const std::size_t cols = rows ? n[0].size() : 0;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && n[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(n[r], n[pr]);
    const BigInt pivot = n[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const BigInt factor = n[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        BigInt t = n[i][j] * pivot - factor * n[r][j];
        assert(t % prev == 0);
        n[i][j] = t / prev;
      }
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }
}

RrefResult rref_rational(const ExactMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigInt>> n(rows, std::vector<BigInt>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < cols; ++c)
      l = lcm(l, denominator(m.at(r, c).rational_value()));
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational& q = m.at(r, c).rational_value();
      n[r][c] = numerator(q) * (l / denominator(q));
    }
  }

  std::vector<std::size_t> pivots;
  bareiss_echelon(n, pivots);

  // Normalize pivots to 1 and eliminate above them, now in rationals.
  ExactMatrix out(m.ring(), rows, cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Rational pivot(n[r][pivots[r]]);
    for (std::size_t c = 0; c < cols; ++c)
      out.at(r, c) = Scalar::from_rational(m.ring(), Rational(n[r][c]) / pivot);
  }
  for (std::size_t r = pivots.size(); r-- > 0;) {
    for (std::size_t above = 0; above < r; ++above) {
      Scalar f = out.at(above, pivots[r]);
      if (f.is_zero()) continue;
      for (std::size_t c = pivots[r]; c < cols; ++c)
        out.at(above, c) -= f * out.at(r, c);
    }
  }
  return {std::move(out), std::move(pivots), 0};
}

RrefResult rref_prime_field(const ExactMatrix& m) {
  ExactMatrix out = m;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && out.at(pr, c).is_zero()) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(out.at(r, j), out.at(pr, j));
    Scalar inv = out.at(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) out.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || out.at(i, c).is_zero()) continue;
      Scalar f = out.at(i, c);
      for (std::size_t j = c; j < cols; ++j) out.at(i, j) -= f * out.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(out), std::move(pivots), 0};
}

}  // namespace

RrefResult rref(const ExactMatrix& m) {
  if (!m.ring().is_field())
    throw InputError("linear algebra over Z is not supported; lift coefficients to Q");
  RrefResult res = m.ring().kind == RingKind::Rational ? rref_rational(m) : rref_prime_field(m);
  res.rank = res.pivot_cols.size();
  return res;
}

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols(), Scalar(m.ring()));
    v[f] = Scalar::of(m.ring(), 1);
    for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
      v[r.pivot_cols[pr]] = -r.rref.at(pr, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Scalar> mat_vec(const ExactMatrix& m, const std::vector<Scalar>& v) {
  if (v.size() != m.cols()) throw InputError("matrix/vector size mismatch");
  std::vector<Scalar> out(m.rows(), Scalar(m.ring()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero() && !v[c].is_zero()) out[r] += m.at(r, c) * v[c];
  return out;
}

std::optional<std::vector<Scalar>> solve(const ExactMatrix& m, const std::vector<Scalar>& b) {
  if (b.size() != m.rows()) throw InputError("matrix/vector size mismatch");
  ExactMatrix aug(m.ring(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  RrefResult rr = rref(aug);
  for (std::size_t c : rr.pivot_cols)
    if (c == m.cols()) return std::nullopt;  // row [0 ... 0 | 1]

  std::vector<Scalar> x(m.cols(), Scalar(m.ring()));
  for (std::size_t pr = 0; pr < rr.pivot_cols.size(); ++pr)
    x[rr.pivot_cols[pr]] = rr.rref.at(pr, m.cols());

  // Exactness guard: a solution must reproduce b on the nose.
  std::vector<Scalar> check = mat_vec(m, x);
  if (check != b) throw std::logic_error("solve verification failed");
  return x;
}

}  // namespace quatrec
