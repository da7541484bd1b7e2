#include "nilfilt/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <tuple>

namespace nilfilt {

// ------------------------------------------------------------------- Perm

Perm Perm::identity(std::size_t degree) {
  Perm p;
  p.images.resize(degree);
  std::iota(p.images.begin(), p.images.end(), std::uint8_t{0});
  return p;
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
  if (degree > kMaxPermDegree) throw ValidationError("permutation degree exceeds " + std::to_string(kMaxPermDegree));
  Perm p = identity(degree);
  std::vector<char> used(degree, 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int a = cyc[i];
      const int b = cyc[(i + 1) % cyc.size()];
      if (a < 1 || static_cast<std::size_t>(a) > degree || b < 1 || static_cast<std::size_t>(b) > degree)
        throw ValidationError("cycle point out of range 1.." + std::to_string(degree));
      if (used[a - 1]++) throw ValidationError("point " + std::to_string(a) + " repeated in cycle list");
      p.images[a - 1] = static_cast<std::uint8_t>(b - 1);
    }
  }
  return p;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images.size(), 0);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i] || images[i] == i) continue;
    std::vector<int> cyc;
    for (std::size_t j = i; !seen[j]; j = images[j]) {
      seen[j] = 1;
      cyc.push_back(static_cast<int>(j) + 1);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
  }
  return os.str();
}

Perm operator*(const Perm& a, const Perm& b) {
  Perm r;
  r.images.resize(a.images.size());
  for (std::size_t i = 0; i < a.images.size(); ++i) r.images[i] = b.images[a.images[i]];
  return r;
}

// ------------------------------------------------------------ small fields

namespace {

// GF(q) for q in {2,3,4,5,7,8}: prime fields mod p, GF(4) and GF(8) as
// polynomials over GF(2) modulo x^2+x+1 and x^3+x+1.
class SmallField {
 public:
  explicit SmallField(int q) : q_(q) {
    switch (q) {
      case 2: case 3: case 5: case 7: p_ = q; poly_ = 0; break;
      case 4: p_ = 2; poly_ = 0b111; deg_ = 2; break;
      case 8: p_ = 2; poly_ = 0b1011; deg_ = 3; break;
      default: throw ValidationError("SL2: unsupported field size " + std::to_string(q));
    }
  }
  int size() const { return q_; }
  int add(int a, int b) const { return poly_ ? (a ^ b) : (a + b) % p_; }
  int neg(int a) const { return poly_ ? a : (p_ - a) % p_; }
  int mul(int a, int b) const {
    if (!poly_) return a * b % p_;
    int r = 0;
    for (int i = 0; i < deg_; ++i)
      if ((b >> i) & 1) r ^= a << i;
    for (int i = 2 * deg_ - 2; i >= deg_; --i)
      if ((r >> i) & 1) r ^= poly_ << (i - deg_);
    return r;
  }
  std::string label(int a) const {
    if (!poly_) return std::to_string(a);
    // element as polynomial in the generator w
    std::string s;
    for (int i = deg_ - 1; i >= 0; --i) {
      if (!((a >> i) & 1)) continue;
      if (!s.empty()) s += "+";
      s += i == 0 ? "1" : (i == 1 ? "w" : "w^" + std::to_string(i));
    }
    return s.empty() ? "0" : s;
  }

 private:
  int q_;
  int p_ = 2;
  int poly_ = 0;
  int deg_ = 1;
};

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Pair = std::pair<int, int>;

std::string power_label(int i, int j) {
  std::string s;
  if (i == 1) s = "a";
  else if (i > 1) s = "a^" + std::to_string(i);
  if (j) s += "b";
  return s.empty() ? "1" : s;
}

}  // namespace

// ----------------------------------------------------------- constructors

FiniteGroup cyclic_group(int n) {
  if (n < 1 || static_cast<std::size_t>(n) > kMaxGroupOrder) throw ValidationError("cyclic: bad order " + std::to_string(n));
  return group_from_generators(
      "Z" + std::to_string(n), 0, std::vector<int>{n == 1 ? 0 : 1},
      [n](int a, int b) { return (a + b) % n; }, [](int a) { return std::to_string(a); });
}

FiniteGroup abelian_group(const std::vector<int>& invariants) {
  if (invariants.empty()) return cyclic_group(1);
  FiniteGroup g = cyclic_group(invariants[0]);
  for (std::size_t i = 1; i < invariants.size(); ++i) g = direct_product(g, cyclic_group(invariants[i]));
  return g;
}

FiniteGroup dihedral_group(int order) {
  if (order < 2 || order % 2) throw ValidationError("dihedral: order must be even and >= 2");
  const int n = order / 2;
  // a^i b^j with b a b^-1 = a^-1
  auto mul = [n](Pair x, Pair y) {
    const int i = x.second ? (x.first - y.first + n) % n : (x.first + y.first) % n;
    return Pair{i, x.second ^ y.second};
  };
  return group_from_generators("D" + std::to_string(order), Pair{0, 0}, {Pair{1 % n, 0}, Pair{0, 1}}, mul,
                               [](Pair x) { return power_label(x.first, x.second); });
}

FiniteGroup quaternion_group(int order) {
  if (order < 8 || order % 4) throw ValidationError("quaternion: order must be a multiple of 4 and >= 8");
  const int n = order / 4;
  const int m = 2 * n;  // order of a
  // a^i b^j with b^2 = a^n, b a b^-1 = a^-1
  auto mul = [n, m](Pair x, Pair y) {
    if (!x.second) return Pair{(x.first + y.first) % m, y.second};
    if (!y.second) return Pair{((x.first - y.first) % m + m) % m, 1};
    return Pair{((x.first - y.first + n) % m + m) % m, 0};
  };
  return group_from_generators("Q" + std::to_string(order), Pair{0, 0}, {Pair{1, 0}, Pair{0, 1}}, mul,
                               [](Pair x) { return power_label(x.first, x.second); });
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 6) throw ValidationError("symmetric: degree must be in 1..6");
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::from_cycles(n, {{1, 2}}));
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 1);
    if (n > 2) gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return permutation_group("S" + std::to_string(n), gens.empty() ? std::vector<Perm>{Perm::identity(n)} : gens);
}

FiniteGroup alternating_group(int n) {
  if (n < 1 || n > 6) throw ValidationError("alternating: degree must be in 1..6");
  std::vector<Perm> gens;
  for (int k = 3; k <= n; ++k) gens.push_back(Perm::from_cycles(n, {{1, 2, k}}));
  if (gens.empty()) gens.push_back(Perm::identity(n));
  return permutation_group("A" + std::to_string(n), gens);
}

FiniteGroup sl2_group(int q) {
  const SmallField f(q);
  using Mat = std::array<int, 4>;  // row-major [a b; c d]
  auto mul = [&f](const Mat& x, const Mat& y) {
    return Mat{f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])), f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
               f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])), f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3]))};
  };
  // Elementary matrices generate SL2 over a field.
  std::vector<Mat> gens;
  for (int t = 1; t < q; ++t) {
    gens.push_back({1, t, 0, 1});
    gens.push_back({1, 0, t, 1});
  }
  auto label = [&f](const Mat& m) {
    return "[" + f.label(m[0]) + " " + f.label(m[1]) + "; " + f.label(m[2]) + " " + f.label(m[3]) + "]";
  };
  return group_from_generators("SL2(" + std::to_string(q) + ")", Mat{1, 0, 0, 1}, gens, mul, label);
}

FiniteGroup heisenberg_group(int p) {
  if (p != 3 && p != 5) throw ValidationError("heisenberg: p must be 3 or 5");
  using T = std::tuple<int, int, int>;
  // upper unitriangular [[1,a,c],[0,1,b],[0,0,1]]
  auto mul = [p](const T& x, const T& y) {
    const auto [a, b, c] = x;
    const auto [a2, b2, c2] = y;
    return T{(a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p};
  };
  auto label = [](const T& x) {
    return "[" + std::to_string(std::get<0>(x)) + "," + std::to_string(std::get<1>(x)) + "," +
           std::to_string(std::get<2>(x)) + "]";
  };
  return group_from_generators("Heis" + std::to_string(p), T{0, 0, 0}, {T{1, 0, 0}, T{0, 1, 0}}, mul, label);
}

FiniteGroup frobenius_group(int order) {
  // order = p*q with primes q < p and q | p-1: the affine maps x -> u x + t
  // over GF(p) with u in the order-q subgroup of GF(p)^*.
  int p = 0, q = 0;
  for (int d = 2; d < order; ++d) {
    if (order % d == 0 && is_prime(d) && is_prime(order / d) && d < order / d) {
      q = d;
      p = order / d;
      break;
    }
  }
  if (!p || (p - 1) % q) throw ValidationError("frobenius: order must be p*q with primes q | p-1");
  int u = 0;
  for (int g = 2; g < p && !u; ++g) {
    // element of multiplicative order exactly q
    int x = 1;
    for (int i = 0; i < (p - 1) / q; ++i) x = x * g % p;
    if (x != 1) u = x;
  }
  // (u, t) is x -> u x + t; left factor applied first.
  auto mul = [p](Pair f, Pair g) { return Pair{f.first * g.first % p, (g.first * f.second + g.second) % p}; };
  auto label = [](Pair f) { return "x->" + std::to_string(f.first) + "x+" + std::to_string(f.second); };
  return group_from_generators("Frob" + std::to_string(order), Pair{1, 0}, {Pair{1, 1}, Pair{u, 0}}, mul, label);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() * b.order() > kMaxGroupOrder)
    throw GuardExceeded("direct product order exceeds " + std::to_string(kMaxGroupOrder));
  using P = std::pair<Elem, Elem>;
  std::vector<P> gens;
  for (Elem x = 1; x < a.order(); ++x) gens.push_back({x, 0});
  for (Elem y = 1; y < b.order(); ++y) gens.push_back({0, y});
  auto mul = [&](P x, P y) { return P{a.mul(x.first, y.first), b.mul(x.second, y.second)}; };
  auto label = [&](P x) { return "(" + a.label(x.first) + "," + b.label(x.second) + ")"; };
  return group_from_generators(a.name() + "x" + b.name(), P{0, 0}, gens, mul, label);
}

FiniteGroup permutation_group(std::string name, const std::vector<Perm>& gens) {
  if (gens.empty()) throw ValidationError("permutation group needs at least one generator");
  const std::size_t degree = gens.front().degree();
  if (degree > kMaxPermDegree) throw ValidationError("permutation degree exceeds " + std::to_string(kMaxPermDegree));
  for (const auto& g : gens)
    if (g.degree() != degree) throw ValidationError("permutation generators have different degrees");
  return group_from_generators(std::move(name), Perm::identity(degree), gens, std::multiplies<>{},
                               [](const Perm& p) { return p.to_string(); });
}

// ------------------------------------------------------------------ names

FiniteGroup build_builtin(const BuiltinSpec& spec) {
  auto param = [&](std::size_t i) {
    if (spec.params.size() <= i) throw ValidationError("builtin: missing parameter");
    return spec.params[i];
  };
  switch (spec.family) {
    case Family::Cyclic: return cyclic_group(param(0));
    case Family::Abelian: {
      FiniteGroup g = abelian_group(spec.params);
      return g;
    }
    case Family::Dihedral: return dihedral_group(param(0));
    case Family::Quaternion: return quaternion_group(param(0));
    case Family::Symmetric: return symmetric_group(param(0));
    case Family::Alternating: return alternating_group(param(0));
    case Family::SL2: return sl2_group(param(0));
    case Family::Heisenberg: return heisenberg_group(param(0));
    case Family::Frobenius: return frobenius_group(param(0));
    case Family::Product: {
      if (spec.factors.empty()) throw ValidationError("builtin: empty product");
      FiniteGroup g = build_builtin(spec.factors[0]);
      for (std::size_t i = 1; i < spec.factors.size(); ++i) g = direct_product(g, build_builtin(spec.factors[i]));
      return g;
    }
  }
  throw ValidationError("builtin: unknown family");
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ValidationError("unknown group name '" + std::string(whole) + "'");
  return v;
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

// Strips "prefix(" ... ")" or "prefix_" / "prefix" and returns the argument.
bool match_prefix(std::string_view s, std::string_view prefix, std::string_view& arg) {
  if (s.size() <= prefix.size() || s.substr(0, prefix.size()) != prefix) return false;
  std::string_view rest = s.substr(prefix.size());
  if (rest.front() == '(' && rest.back() == ')') {
    arg = rest.substr(1, rest.size() - 2);
    return true;
  }
  if (rest.front() == '_') rest.remove_prefix(1);
  if (rest.empty() || !std::isdigit(static_cast<unsigned char>(rest.front()))) return false;
  arg = rest;
  return true;
}

BuiltinSpec parse_factor(std::string_view s, std::string_view whole) {
  std::string_view arg;
  auto one = [&](Family f) {
    BuiltinSpec b;
    b.family = f;
    b.params = {parse_int(arg, whole)};
    return b;
  };
  // Longer prefixes first so that e.g. "SL2" is not read as "S".
  if (match_prefix(s, "abelian", arg)) {
    BuiltinSpec b;
    b.family = Family::Abelian;
    for (auto part : split_top_level(arg, ',')) b.params.push_back(parse_int(part, whole));
    return b;
  }
  if (match_prefix(s, "Heisenberg", arg) || match_prefix(s, "Heis", arg)) return one(Family::Heisenberg);
  if (match_prefix(s, "Frobenius", arg) || match_prefix(s, "Frob", arg)) return one(Family::Frobenius);
  if (match_prefix(s, "SL2F", arg) || match_prefix(s, "SL2", arg)) return one(Family::SL2);
  if (match_prefix(s, "Z", arg) || match_prefix(s, "C", arg)) return one(Family::Cyclic);
  if (match_prefix(s, "D", arg)) return one(Family::Dihedral);
  if (match_prefix(s, "Q", arg)) return one(Family::Quaternion);
  if (match_prefix(s, "S", arg)) return one(Family::Symmetric);
  if (match_prefix(s, "A", arg)) return one(Family::Alternating);
  throw ValidationError("unknown group name '" + std::string(whole) + "'");
}

}  // namespace

BuiltinSpec parse_group_name(std::string_view name) {
  auto parts = split_top_level(name, 'x');
  if (parts.size() == 1) return parse_factor(parts[0], name);
  BuiltinSpec b;
  b.family = Family::Product;
  for (auto p : parts) b.factors.push_back(parse_factor(p, name));
  return b;
}

FiniteGroup builtin_group(std::string_view name) { return build_builtin(parse_group_name(name)); }

std::string spec_name(const BuiltinSpec& spec) {
  auto p0 = [&] { return spec.params.empty() ? std::string("?") : std::to_string(spec.params[0]); };
  switch (spec.family) {
    case Family::Cyclic: return "Z" + p0();
    case Family::Abelian: {
      std::string s;
      for (std::size_t i = 0; i < spec.params.size(); ++i) s += (i ? "x" : "") + ("Z" + std::to_string(spec.params[i]));
      return s;
    }
    case Family::Dihedral: return "D" + p0();
    case Family::Quaternion: return "Q" + p0();
    case Family::Symmetric: return "S" + p0();
    case Family::Alternating: return "A" + p0();
    case Family::SL2: return "SL2(" + p0() + ")";
    case Family::Heisenberg: return "Heis" + p0();
    case Family::Frobenius: return "Frob" + p0();
    case Family::Product: {
      std::string s;
      for (std::size_t i = 0; i < spec.factors.size(); ++i) s += (i ? "x" : "") + spec_name(spec.factors[i]);
      return s;
    }
  }
  return "?";
}

std::vector<std::string> standard_catalog(std::size_t max_order) {
  // (order, name) pairs; orders listed so the filter needs no construction.
  static const std::vector<std::pair<std::size_t, std::string>> all = {
      {2, "Z2"},         {3, "Z3"},      {4, "Z4"},      {4, "Z2xZ2"},  {5, "Z5"},     {6, "Z6"},
      {6, "D6"},         {6, "S3"},      {6, "SL2(2)"},  {7, "Z7"},     {8, "Z8"},     {8, "Z2xZ4"},
      {8, "Z2xZ2xZ2"},   {8, "D8"},      {8, "Q8"},      {9, "Z9"},     {9, "Z3xZ3"},  {10, "D10"},
      {12, "Z12"},       {12, "A4"},     {12, "D12"},    {12, "Q12"},   {14, "D14"},   {16, "D16"},
      {16, "Q16"},       {18, "S3xZ3"},  {21, "Frob21"}, {24, "S4"},   {24, "SL2(3)"},
      {27, "Z3xZ9"},     {27, "Heis3"},  {39, "Frob39"}, {55, "Frob55"}, {60, "A5"},    {60, "SL2(4)"}, {120, "S5"},
      {120, "SL2(5)"},   {125, "Heis5"}, {336, "SL2(7)"}, {360, "A6"},  {504, "SL2(8)"}, {720, "S6"},
  };
  std::vector<std::string> out;
  for (const auto& [order, name] : all)
    if (order <= max_order) out.push_back(name);
  return out;
}

}  // namespace nilfilt
