#include "monolith/families.hpp"

#include <string>
#include <vector>

#include "monolith/errors.hpp"

namespace monolith {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw BadParameter("cyclic order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_table(table, std::move(names));
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw BadParameter("dihedral parameter must be positive");
  const int order = 2 * n;
  // 0..n-1 rotations r^a, n..2n-1 reflections r^a s
  auto mul = [n](int x, int y) {
    bool xr = x >= n, yr = y >= n;
    int a = x % n, b = y % n;
    if (!xr && !yr) return (a + b) % n;
    if (!xr && yr) return n + (a + b) % n;
    if (xr && !yr) return n + ((a - b) % n + n) % n;
    return ((a - b) % n + n) % n;
  };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  std::vector<std::string> names(order);
  for (int x = 0; x < order; ++x) {
    int a = x % n;
    std::string ra = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
    names[x] = x < n ? (a == 0 ? "e" : ra) : (ra.empty() ? "s" : ra + "s");
    for (int y = 0; y < order; ++y) table[x][y] = mul(x, y);
  }
  return FiniteGroup::from_table(table, std::move(names));
}

FiniteGroup quaternion_group() {
  // Elements 1,-1,i,-i,j,-j,k,-k as (axis, sign); index = 2*axis + (sign<0).
  // Basis products: axis_mul[a][b] and the sign picked up.
  static const int axis_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int ax = x / 2, sx = x % 2 ? -1 : 1;
      int ay = y / 2, sy = y % 2 ? -1 : 1;
      int az = axis_mul[ax][ay];
      int sz = sx * sy * sign_mul[ax][ay];
      table[x][y] = 2 * az + (sz < 0 ? 1 : 0);
    }
  std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return FiniteGroup::from_table(table, std::move(names));
}

FiniteGroup heisenberg_group(int p) {
  if (!is_prime(p)) throw BadParameter("heisenberg parameter must be prime");
  // (a,b,c) = [[1,a,c],[0,1,b],[0,0,1]] mod p, row-major index (a*p + b)*p + c.
  const int order = p * p * p;
  auto idx = [p](int a, int b, int c) { return (a * p + b) * p + c; };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  std::vector<std::string> names(order);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c) {
        int x = idx(a, b, c);
        names[x] = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + ")";
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              table[x][idx(a2, b2, c2)] =
                  idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
      }
  return FiniteGroup::from_table(table, std::move(names));
}

FiniteGroup symmetric_group(int n) {
  if (n < 1) throw BadParameter("symmetric parameter must be positive");
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation t = Permutation::identity(n);
    std::swap(t.images[0], t.images[1]);
    gens.push_back(t);
  }
  if (n >= 3) {
    Permutation c = Permutation::identity(n);
    for (int i = 0; i < n; ++i) c.images[i] = (i + 1) % n;
    gens.push_back(c);
  }
  return FiniteGroup::from_permutations(gens);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  const int order = na * nb;
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      table[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  std::vector<std::string> names;
  if (a.has_names() && b.has_names()) {
    names.resize(order);
    for (int x = 0; x < order; ++x)
      names[x] = "(" + a.name_of(x / nb) + "," + b.name_of(x % nb) + ")";
  }
  return FiniteGroup::from_table(table, std::move(names));
}

namespace {

int parse_int(const std::string& s, const std::string& family) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw BadParameter("bad parameter '" + s + "' for family " + family);
  }
}

}  // namespace

FiniteGroup named_group(const std::string& spec) {
  auto colon = spec.find(':');
  std::string family = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (family == "quaternion") {
    if (!arg.empty()) throw BadParameter("quaternion takes no parameter");
    return quaternion_group();
  }
  if (family == "trivial") return cyclic_group(1);
  if (family == "cyclic") return cyclic_group(parse_int(arg, family));
  if (family == "dihedral") return dihedral_group(parse_int(arg, family));
  if (family == "heisenberg") return heisenberg_group(parse_int(arg, family));
  if (family == "symmetric") return symmetric_group(parse_int(arg, family));
  if (family == "product") {
    if (arg.size() < 2 || arg.front() != '(' || arg.back() != ')')
      throw BadParameter("product expects (spec,spec)");
    std::string inner = arg.substr(1, arg.size() - 2);
    int depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      else if (inner[i] == ')') --depth;
      else if (inner[i] == ',' && depth == 0) { split = i; break; }
    }
    if (split == std::string::npos)
      throw BadParameter("product expects two comma-separated specs");
    return direct_product(named_group(inner.substr(0, split)),
                          named_group(inner.substr(split + 1)));
  }
  throw UnknownFamily("unknown group family '" + family + "'");
}

}  // namespace monolith
