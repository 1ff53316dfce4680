#include "builtin.hpp"

#include <cctype>

namespace quatrec {

namespace {

void set_coord(Element& e, std::size_t idx, const Scalar& v) { e.coords[idx] = v; }

AlgebraPresentation empty_presentation(const BaseRing& base, std::size_t dim) {
  AlgebraPresentation a;
  a.base = base;
  a.dim = dim;
  a.unit = a.zero();
  a.table.assign(dim, std::vector<Element>(dim, a.zero()));
  return a;
}

}  // namespace

AlgebraPresentation make_quaternion(const Scalar& a, const Scalar& b, const BaseRing& base) {
  if (a.ring() != base || b.ring() != base) throw InputError("quaternion parameters must live in the base ring");
  if (a.is_zero() || b.is_zero()) throw InputError("quaternion parameters must be non-zero");
  AlgebraPresentation q = empty_presentation(base, 4);
  q.names = {"1", "i", "j", "k"};
  const Scalar one = Scalar::of(base, 1);
  q.unit.coords[0] = one;

  auto elem = [&](std::size_t idx, const Scalar& c) {
    Element e = q.zero();
    set_coord(e, idx, c);
    return e;
  };

  for (std::size_t s = 0; s < 4; ++s) {
    q.table[0][s] = elem(s, one);
    q.table[s][0] = elem(s, one);
  }
  q.table[1][1] = elem(0, a);        // i i = a
  q.table[1][2] = elem(3, one);      // i j = k
  q.table[1][3] = elem(2, a);        // i k = a j
  q.table[2][1] = elem(3, -one);     // j i = -k
  q.table[2][2] = elem(0, b);        // j j = b
  q.table[2][3] = elem(1, -b);       // j k = -b i
  q.table[3][1] = elem(2, -a);       // k i = -a j
  q.table[3][2] = elem(1, b);        // k j = b i
  q.table[3][3] = elem(0, -(a * b)); // k k = -a b
  return q;
}

AlgebraPresentation make_matrix_algebra(std::size_t n, const BaseRing& base) {
  if (n == 0) throw InputError("matrix algebra needs n >= 1");
  AlgebraPresentation m = empty_presentation(base, n * n);
  const Scalar one = Scalar::of(base, 1);
  m.names.resize(m.dim);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m.names[r * n + c] = "E" + std::to_string(r + 1) + std::to_string(c + 1);
  for (std::size_t r = 0; r < n; ++r) m.unit.coords[r * n + r] = one;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t d = 0; d < n; ++d)
        for (std::size_t e = 0; e < n; ++e)
          if (c == d) m.table[r * n + c][d * n + e].coords[r * n + e] = one;
  return m;
}

AlgebraPresentation make_upper_triangular(std::size_t n, const BaseRing& base) {
  if (n == 0) throw InputError("upper-triangular algebra needs n >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) slots.emplace_back(r, c);

  AlgebraPresentation m = empty_presentation(base, slots.size());
  const Scalar one = Scalar::of(base, 1);
  m.names.resize(m.dim);
  auto index_of = [&](std::size_t r, std::size_t c) {
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (slots[i] == std::make_pair(r, c)) return i;
    return slots.size();
  };
  for (std::size_t i = 0; i < slots.size(); ++i)
    m.names[i] = "E" + std::to_string(slots[i].first + 1) + std::to_string(slots[i].second + 1);
  for (std::size_t r = 0; r < n; ++r) m.unit.coords[index_of(r, r)] = one;
  for (std::size_t i = 0; i < slots.size(); ++i)
    for (std::size_t j = 0; j < slots.size(); ++j)
      if (slots[i].second == slots[j].first)
        m.table[i][j].coords[index_of(slots[i].first, slots[j].second)] = one;
  return m;
}

AlgebraPresentation make_quadratic_extension_tensor(const AlgebraPresentation& a, const Scalar& d) {
  if (d.ring() != a.base) throw InputError("extension parameter must live in the base ring");
  if (d.is_zero()) throw InputError("extension parameter must be non-zero");
  const std::size_t n = a.dim;
  AlgebraPresentation b = empty_presentation(a.base, 2 * n);
  b.names.resize(2 * n);
  for (std::size_t s = 0; s < n; ++s) {
    const std::string base_name = a.names.size() == n ? a.names[s] : "e" + std::to_string(s);
    b.names[s] = base_name;
    b.names[n + s] = base_name == "1" ? "t" : "t*" + base_name;
  }
  for (std::size_t s = 0; s < n; ++s) b.unit.coords[s] = a.unit.coords[s];

  // (t^eps e_s)(t^del e_u) = t^(eps+del) e_s e_u, with t^2 = d folded back.
  for (std::size_t eps = 0; eps < 2; ++eps)
    for (std::size_t del = 0; del < 2; ++del)
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t u = 0; u < n; ++u) {
          const Element& prod = a.table[s][u];
          Element& slot = b.table[eps * n + s][del * n + u];
          if (eps + del == 1) {
            for (std::size_t w = 0; w < n; ++w) slot.coords[n + w] = prod.coords[w];
          } else {
            const Scalar f = (eps + del == 2) ? d : Scalar::of(a.base, 1);
            for (std::size_t w = 0; w < n; ++w) slot.coords[w] = f * prod.coords[w];
          }
        }
  return b;
}

AlgebraPresentation make_lipschitz() {
  const BaseRing z = BaseRing::Z();
  return make_quaternion(Scalar::of(z, -1), Scalar::of(z, -1), z);
}

namespace {

BaseRing parse_base(const std::string& s) {
  if (s == "Q") return BaseRing::Q();
  if (s == "Z") return BaseRing::Z();
  if (s.size() >= 2 && s[0] == 'F') {
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw InputError("unknown base ring '" + s + "'");
    return BaseRing::Fp(std::stoll(s.substr(1)));
  }
  throw InputError("unknown base ring '" + s + "'");
}

// Splits "a,b,c" at top level, respecting nested parentheses.
std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::size_t parse_size(const std::string& s) {
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad size '" + s + "'");
  if (s.empty()) throw InputError("bad size ''");
  return static_cast<std::size_t>(std::stoull(s));
}

}  // namespace

AlgebraPresentation builtin(const std::string& descriptor) {
  const auto open = descriptor.find('(');
  std::string name = descriptor, args_text;
  if (open != std::string::npos) {
    if (descriptor.back() != ')') throw InputError("malformed descriptor '" + descriptor + "'");
    name = descriptor.substr(0, open);
    args_text = descriptor.substr(open + 1, descriptor.size() - open - 2);
  }

  if (name == "hamilton") {
    if (open != std::string::npos) throw InputError("hamilton takes no arguments");
    const BaseRing q = BaseRing::Q();
    return make_quaternion(Scalar::of(q, -1), Scalar::of(q, -1), q);
  }
  if (name == "lipschitz") {
    if (open != std::string::npos) throw InputError("lipschitz takes no arguments");
    return make_lipschitz();
  }

  const std::vector<std::string> args = open == std::string::npos ? std::vector<std::string>{} : split_args(args_text);
  if (name == "quaternion") {
    if (args.size() != 3) throw InputError("quaternion needs (a,b,BASE)");
    const BaseRing base = parse_base(args[2]);
    return make_quaternion(parse_scalar(args[0], base), parse_scalar(args[1], base), base);
  }
  if (name == "matrix") {
    if (args.size() != 2) throw InputError("matrix needs (n,BASE)");
    return make_matrix_algebra(parse_size(args[0]), parse_base(args[1]));
  }
  if (name == "upper_triangular") {
    if (args.size() != 2) throw InputError("upper_triangular needs (n,BASE)");
    return make_upper_triangular(parse_size(args[0]), parse_base(args[1]));
  }
  if (name == "quadratic_extension") {
    if (args.size() != 2) throw InputError("quadratic_extension needs (DESC,d)");
    AlgebraPresentation inner = builtin(args[0]);
    return make_quadratic_extension_tensor(inner, parse_scalar(args[1], inner.base));
  }
  throw InputError("unknown builtin '" + descriptor + "'");
}

}  // namespace quatrec
