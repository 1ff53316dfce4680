#include "unipoly.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace quatrec {

namespace {

std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = mod_pos(a, p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::logic_error("non-invertible residue");
  return mod_pos(t, p);
}

FpPoly fp_poly_make_monic(FpPoly f, std::int64_t p) {
  f = fp_poly_trim(std::move(f));
  if (f.empty()) return f;
  std::int64_t inv = mod_inv(f.back(), p);
  for (auto& c : f) c = (static_cast<__int128>(c) * inv) % p;
  return f;
}

// Remainder of a modulo monic b.
FpPoly fp_poly_rem(FpPoly a, const FpPoly& b, std::int64_t p) {
  a = fp_poly_trim(std::move(a));
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size() && !a.empty()) {
    std::int64_t factor = a.back();
    std::size_t shift = a.size() - 1 - db;
    if (factor != 0) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::int64_t prod = static_cast<std::int64_t>((static_cast<__int128>(factor) * b[i]) % p);
        a[shift + i] = mod_pos(a[shift + i] - prod, p);
      }
    }
    a = fp_poly_trim(std::move(a));
    if (a.size() <= db) break;
  }
  return a;
}

// Quotient of a by monic b (remainder must vanish).
FpPoly fp_poly_exact_div(FpPoly a, const FpPoly& b, std::int64_t p) {
  a = fp_poly_trim(std::move(a));
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("exact polynomial division underflow");
  FpPoly q(a.size() - db, 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::int64_t factor = a.back();
    std::size_t shift = a.size() - 1 - db;
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::int64_t prod = static_cast<std::int64_t>((static_cast<__int128>(factor) * b[i]) % p);
      a[shift + i] = mod_pos(a[shift + i] - prod, p);
    }
    a = fp_poly_trim(std::move(a));
  }
  if (!a.empty()) throw std::logic_error("polynomial division left a remainder");
  return fp_poly_trim(std::move(q));
}

FpPoly fp_poly_powmod(FpPoly base, std::int64_t exp, const FpPoly& mod, std::int64_t p) {
  FpPoly result{1};
  base = fp_poly_rem(std::move(base), mod, p);
  while (exp > 0) {
    if (exp & 1) result = fp_poly_mulmod(result, base, mod, p);
    base = fp_poly_mulmod(base, base, mod, p);
    exp >>= 1;
  }
  return result;
}

FpPoly fp_poly_sub_x(FpPoly g, std::int64_t p) {
  if (g.size() < 2) g.resize(2, 0);
  g[1] = mod_pos(g[1] - 1, p);
  return fp_poly_trim(std::move(g));
}

std::vector<unsigned> prime_factors_of(unsigned m) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      out.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

std::vector<BigInt> divisors_of(const BigInt& n) {
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

QPoly qpoly_trim(QPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Rational qpoly_eval(const QPoly& f, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

QPoly qpoly_divide_linear(const QPoly& f, const Rational& r) {
  QPoly g = qpoly_trim(f);
  if (g.size() < 2) throw std::logic_error("cannot divide a constant by a linear factor");
  QPoly q(g.size() - 1);
  Rational carry = 0;
  for (std::size_t i = g.size(); i-- > 1;) {
    carry = g[i] + carry * r;
    q[i - 1] = carry;
  }
  Rational rem = g[0] + carry * r;
  if (rem != 0) throw std::logic_error("linear factor does not divide polynomial");
  return q;
}

RationalRootScan qpoly_rational_root(const QPoly& f) {
  QPoly g = qpoly_trim(f);
  if (g.size() <= 1) return {std::nullopt, true};
  // Clear denominators to integer coefficients.
  BigInt lcm = 1;
  for (const auto& c : g) lcm = boost::multiprecision::lcm(lcm, BigInt(boost::multiprecision::denominator(c)));
  std::vector<BigInt> ic(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    Rational scaled = g[i] * Rational(lcm);
    ic[i] = BigInt(boost::multiprecision::numerator(scaled));
  }
  if (ic[0] == 0) return {Rational(0), true};
  BigInt a0 = boost::multiprecision::abs(ic[0]);
  BigInt am = boost::multiprecision::abs(ic.back());
  const BigInt budget = BigInt(1000000000000LL);
  if (a0 > budget || am > budget) return {std::nullopt, false};
  auto nums = divisors_of(a0);
  auto dens = divisors_of(am);
  for (const auto& den : dens) {
    for (const auto& num : nums) {
      if (boost::multiprecision::gcd(num, den) != 1) continue;
      Rational cand = Rational(num) / Rational(den);
      if (qpoly_eval(g, cand) == 0) return {cand, true};
      if (qpoly_eval(g, -cand) == 0) return {-cand, true};
    }
  }
  return {std::nullopt, true};
}

FpPoly fp_poly_trim(FpPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

FpPoly fp_poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::int64_t>((prod[i + j] + static_cast<__int128>(a[i]) * b[j]) % p);
    }
  }
  return fp_poly_rem(std::move(prod), mod, p);
}

FpPoly fp_poly_gcd(FpPoly a, FpPoly b, std::int64_t p) {
  a = fp_poly_trim(std::move(a));
  b = fp_poly_trim(std::move(b));
  while (!b.empty()) {
    FpPoly monic = fp_poly_make_monic(b, p);
    FpPoly r = fp_poly_rem(a, monic, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_poly_make_monic(std::move(a), p);
}

FpPoly fp_poly_frobenius_power(const FpPoly& f, std::int64_t p, unsigned k) {
  FpPoly g{0, 1};
  g = fp_poly_rem(std::move(g), f, p);
  for (unsigned step = 0; step < k; ++step) g = fp_poly_powmod(g, p, f, p);
  return g;
}

bool fp_poly_irreducible(FpPoly f, std::int64_t p) {
  f = fp_poly_make_monic(std::move(f), p);
  if (f.size() <= 1) return false;
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  if (m == 1) return true;
  FpPoly xm = fp_poly_frobenius_power(f, p, m);
  FpPoly x = fp_poly_rem(FpPoly{0, 1}, f, p);
  if (xm != x) return false;
  for (unsigned q : prime_factors_of(m)) {
    FpPoly h = fp_poly_sub_x(fp_poly_frobenius_power(f, p, m / q), p);
    FpPoly g = fp_poly_gcd(h, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::optional<std::pair<FpPoly, FpPoly>> fp_poly_factor_split(FpPoly f, std::int64_t p) {
  f = fp_poly_make_monic(std::move(f), p);
  if (f.size() <= 2) return std::nullopt;
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= m; ++d) {
    FpPoly h = fp_poly_sub_x(fp_poly_frobenius_power(f, p, d), p);
    FpPoly g = fp_poly_gcd(h, f, p);
    if (g.size() > 1 && g.size() < f.size()) {
      FpPoly rest = fp_poly_exact_div(f, g, p);
      return std::make_pair(std::move(g), std::move(rest));
    }
  }
  return std::nullopt;
}

std::optional<FpPoly> qpoly_reduce_mod(const QPoly& f, std::int64_t p) {
  QPoly g = qpoly_trim(f);
  FpPoly out(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    BigInt den = BigInt(boost::multiprecision::denominator(g[i]));
    BigInt num = BigInt(boost::multiprecision::numerator(g[i]));
    std::int64_t dm = static_cast<std::int64_t>(den % p);
    if (mod_pos(dm, p) == 0) return std::nullopt;
    std::int64_t nm = mod_pos(static_cast<std::int64_t>(num % p), p);
    out[i] = static_cast<std::int64_t>((static_cast<__int128>(nm) * mod_inv(dm, p)) % p);
  }
  if (!out.empty() && out.back() == 0) return std::nullopt;
  return out;
}

}  // namespace quatrec
