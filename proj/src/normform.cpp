#include "normform.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "errors.hpp"

namespace quatrec {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

int valuation(const Rational& r, std::int64_t p) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  int v = 0;
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  return v;
}

std::int64_t mod_pos64(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inv64(std::int64_t a, std::int64_t m) {
  std::int64_t t = 0, nt = 1, r = m, nr = mod_pos64(a, m);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::logic_error("non-invertible residue in Hilbert symbol");
  return mod_pos64(t, m);
}

// Residue mod m of the p-free part of r (m is p itself or, for p = 2, eight).
std::int64_t unit_residue(const Rational& r, std::int64_t p, std::int64_t m) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  while (num % p == 0) num /= p;
  while (den % p == 0) den /= p;
  std::int64_t nm = mod_pos64(static_cast<std::int64_t>(num % m), m);
  std::int64_t dm = mod_pos64(static_cast<std::int64_t>(den % m), m);
  return static_cast<std::int64_t>(
      (static_cast<__int128>(nm) * mod_inv64(dm, m)) % m);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t result = 1;
  base = mod_pos64(base, mod);
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>((static_cast<__int128>(result) * base) % mod);
    base = static_cast<std::int64_t>((static_cast<__int128>(base) * base) % mod);
    exp >>= 1;
  }
  return result;
}

int legendre(std::int64_t u, std::int64_t p) {
  std::int64_t r = pow_mod(u, (p - 1) / 2, p);
  if (r == 1) return 1;
  if (r == p - 1) return -1;
  throw std::logic_error("Legendre symbol of a non-unit");
}

// Odd primes dividing the numerator or denominator; nullopt when a cofactor
// resists the trial-division budget.
std::optional<std::set<std::int64_t>> odd_support(const Rational& r) {
  std::set<std::int64_t> out;
  for (BigInt n : {BigInt(abs(numerator(r))), BigInt(abs(denominator(r)))}) {
    while (n % 2 == 0) n /= 2;
    for (std::int64_t d = 3; BigInt(d) * d <= n && d <= 1000000; d += 2) {
      if (n % d == 0) {
        out.insert(d);
        while (n % d == 0) n /= d;
      }
    }
    if (n > 1) {
      // No factor below 10^6, so a cofactor below 10^12 is prime.
      if (n > BigInt(1000000000000LL)) return std::nullopt;
      out.insert(static_cast<std::int64_t>(n));
    }
  }
  return out;
}

long long gcd4(const std::array<long long, 4>& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

}  // namespace

Rational quaternion_norm(const Rational& a, const Rational& b, const std::array<Rational, 4>& v) {
  return v[0] * v[0] - a * v[1] * v[1] - b * v[2] * v[2] + a * b * v[3] * v[3];
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
  if (a == 0 || b == 0) throw InputError("Hilbert symbol requires non-zero arguments");
  if (place.infinite) return (a < 0 && b < 0) ? -1 : 1;
  const std::int64_t p = place.p;
  if (p < 2) throw InputError("Hilbert symbol place must be a prime or infinity");
  const int alpha = valuation(a, p);
  const int beta = valuation(b, p);
  if (p == 2) {
    const std::int64_t u = unit_residue(a, 2, 8);
    const std::int64_t w = unit_residue(b, 2, 8);
    const int eps_u = (u % 4 == 3) ? 1 : 0;           // (u-1)/2 mod 2
    const int eps_w = (w % 4 == 3) ? 1 : 0;
    const int om_u = (u == 3 || u == 5) ? 1 : 0;      // (u^2-1)/8 mod 2
    const int om_w = (w == 3 || w == 5) ? 1 : 0;
    const int e = eps_u * eps_w + alpha * om_w + beta * om_u;
    return (e % 2 != 0) ? -1 : 1;
  }
  const std::int64_t u = unit_residue(a, p, p);
  const std::int64_t w = unit_residue(b, p, p);
  int sign = 1;
  if ((alpha & 1) && (beta & 1) && (((p - 1) / 2) & 1)) sign = -sign;
  if (beta & 1) sign *= legendre(u, p);
  if (alpha & 1) sign *= legendre(w, p);
  return sign;
}

std::optional<std::array<long long, 4>> isotropy_search(const Rational& a, const Rational& b,
                                                        long long bound) {
  if (a == 0 || b == 0) throw InputError("norm-form parameters must be non-zero");
  if (bound < 1) return std::nullopt;
  // Clear denominators: (ad bd) x0^2 - (an bd) x1^2 - (bn ad) x2^2 + (an bn) x3^2.
  BigInt an = numerator(a), ad = denominator(a);
  BigInt bn = numerator(b), bd = denominator(b);
  std::array<BigInt, 4> big{ad * bd, -an * bd, -bn * ad, an * bn};
  std::array<long long, 4> c{};
  for (int i = 0; i < 4; ++i) {
    if (abs(big[i]) > BigInt(900000000000000000LL)) return std::nullopt;
    c[i] = static_cast<long long>(big[i]);
  }
  auto eval = [&](long long x0, long long x1, long long x2, long long x3) -> __int128 {
    return static_cast<__int128>(c[0]) * x0 * x0 + static_cast<__int128>(c[1]) * x1 * x1 +
           static_cast<__int128>(c[2]) * x2 * x2 + static_cast<__int128>(c[3]) * x3 * x3;
  };

  if (bound <= 120) {
    // Shell-by-shell scan over non-negative tuples with max component == h,
    // components ascending, the last index varying fastest.
    for (long long h = 1; h <= bound; ++h) {
      for (long long x0 = 0; x0 <= h; ++x0) {
        for (long long x1 = 0; x1 <= h; ++x1) {
          for (long long x2 = 0; x2 <= h; ++x2) {
            for (long long x3 = 0; x3 <= h; ++x3) {
              if (x0 != h && x1 != h && x2 != h && x3 != h) continue;
              std::array<long long, 4> v{x0, x1, x2, x3};
              if (gcd4(v) != 1) continue;
              if (eval(x0, x1, x2, x3) == 0) return v;
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  // Two-half join: table the left-half values, then stream the right half.
  // First hit in (x2, x3)-major order wins; the result is normalized to a
  // primitive vector.
  for (int i = 0; i < 4; ++i) {
    if (c[i] > 4000000000LL || c[i] < -4000000000LL) return std::nullopt;
  }
  std::unordered_map<long long, std::pair<int, int>> table;
  table.reserve(static_cast<std::size_t>((bound + 1) * (bound + 1)));
  std::optional<std::pair<int, int>> zero_key_nonzero;
  for (long long x0 = 0; x0 <= bound; ++x0) {
    for (long long x1 = 0; x1 <= bound; ++x1) {
      long long val = c[0] * x0 * x0 + c[1] * x1 * x1;
      table.emplace(val, std::make_pair(static_cast<int>(x0), static_cast<int>(x1)));
      if (val == 0 && (x0 != 0 || x1 != 0) && !zero_key_nonzero)
        zero_key_nonzero = std::make_pair(static_cast<int>(x0), static_cast<int>(x1));
    }
  }
  for (long long x2 = 0; x2 <= bound; ++x2) {
    for (long long x3 = 0; x3 <= bound; ++x3) {
      long long rhs = -(c[2] * x2 * x2 + c[3] * x3 * x3);
      auto it = table.find(rhs);
      if (it == table.end()) continue;
      std::array<long long, 4> v{it->second.first, it->second.second, x2, x3};
      if (v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0) {
        if (!zero_key_nonzero) continue;
        v[0] = zero_key_nonzero->first;
        v[1] = zero_key_nonzero->second;
      }
      long long g = gcd4(v);
      for (auto& x : v) x /= g;
      return v;
    }
  }
  return std::nullopt;
}

DivisionVerdict is_division(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw InputError("norm-form parameters must be non-zero");
  DivisionVerdict out;
  out.form = {a, b};
  auto sa = odd_support(a);
  auto sb = odd_support(b);
  if (!sa || !sb) {
    out.note = "support factorization exceeded the trial-division budget";
    return out;
  }
  std::set<std::int64_t> odds = *sa;
  odds.insert(sb->begin(), sb->end());

  std::vector<Place> places;
  places.push_back(Place::at_infinity());
  places.push_back(Place::at_prime(2));
  for (std::int64_t p : odds) places.push_back(Place::at_prime(p));

  int negatives = 0;
  for (const Place& place : places) {
    int s = hilbert_symbol(a, b, place);
    out.evidence.emplace_back(place.name(), s);
    if (s < 0) ++negatives;
  }
  if (negatives % 2 != 0)
    throw std::logic_error("local symbols violate the product formula");

  if (negatives > 0) {
    out.division = Tristate::Yes;
    out.note = "the norm form is anisotropic: some local symbol is -1";
    return out;
  }

  for (long long bound : {10LL, 100LL, 1000LL}) {
    if (auto v = isotropy_search(a, b, bound)) {
      std::array<Rational, 4> rv{Rational((*v)[0]), Rational((*v)[1]), Rational((*v)[2]),
                                 Rational((*v)[3])};
      if (quaternion_norm(a, b, rv) != 0 || gcd4(*v) != 1)
        throw std::logic_error("isotropy search returned an invalid vector");
      out.isotropic = v;
      break;
    }
  }
  if (out.isotropic) {
    out.division = Tristate::No;
    out.note = "the norm form is isotropic: the algebra splits";
  } else {
    out.note = "all local symbols are +1 but no isotropic vector surfaced within the search bounds";
  }
  return out;
}

}  // namespace quatrec
