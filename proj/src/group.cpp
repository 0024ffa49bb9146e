#include "monolith/group.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>

#include "monolith/errors.hpp"

namespace monolith {

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.degree = degree;
  p.images.resize(degree);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree; ++i)
    if (images[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& other) const {
  Permutation r;
  r.degree = degree;
  r.images.resize(degree);
  for (int i = 0; i < degree; ++i) r.images[i] = images[other.images[i]];
  return r;
}

namespace {

void check_permutation(const Permutation& p) {
  if (p.degree <= 0 || static_cast<int>(p.images.size()) != p.degree)
    throw BadParameter("permutation degree/images mismatch");
  std::vector<bool> seen(p.degree, false);
  for (int x : p.images) {
    if (x < 0 || x >= p.degree || seen[x])
      throw BadParameter("images is not a permutation");
    seen[x] = true;
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_validated(int order, std::vector<int> table,
                                        std::vector<std::string> names) {
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.names_ = std::move(names);
  g.inverses_.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (g.table_[static_cast<std::size_t>(a) * order + b] == kIdentity) {
        g.inverses_[a] = b;
        break;
      }
    }
    if (g.inverses_[a] < 0) {
      std::ostringstream os;
      os << "element " << a << " has no inverse";
      throw NoIdentity(os.str());
    }
  }
  return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table,
                                    std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw BadParameter("empty multiplication table");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(table[r].size()) != n)
      throw BadParameter("multiplication table is not square");
    for (int v : table[r]) {
      if (v < 0 || v >= n)
        throw BadParameter("table entry out of range");
      flat.push_back(v);
    }
  }
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw BadParameter("names length does not match order");

  auto at = [&](int a, int b) { return flat[static_cast<std::size_t>(a) * n + b]; };

  // Latin square: each row and column a permutation.
  for (int r = 0; r < n; ++r) {
    std::vector<bool> seen(n, false);
    for (int c = 0; c < n; ++c) {
      int v = at(r, c);
      if (seen[v]) {
        std::ostringstream os;
        os << "row " << r << " repeats entry " << v;
        throw NotLatinSquare(os.str());
      }
      seen[v] = true;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<bool> seen(n, false);
    for (int r = 0; r < n; ++r) {
      int v = at(r, c);
      if (seen[v]) {
        std::ostringstream os;
        os << "column " << c << " repeats entry " << v;
        throw NotLatinSquare(os.str());
      }
      seen[v] = true;
    }
  }

  // Two-sided identity.
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = at(e, a) == a && at(a, e) == a;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw NoIdentity("table has no two-sided identity");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) {
          std::ostringstream os;
          os << "(a b) c != a (b c) for a=" << a << " b=" << b << " c=" << c;
          throw NotAssociative(os.str());
        }

  if (id != 0) {
    // Renumber by swapping the identity with index 0.
    std::vector<int> to_new(n);
    std::iota(to_new.begin(), to_new.end(), 0);
    std::swap(to_new[0], to_new[id]);  // involution, also old->new
    std::vector<int> renum(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        renum[static_cast<std::size_t>(to_new[a]) * n + to_new[b]] =
            to_new[at(a, b)];
    flat = std::move(renum);
    if (!names.empty()) std::swap(names[0], names[id]);
  }

  return from_validated(n, std::move(flat), std::move(names));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& gens,
                                           int order_cap) {
  int degree = gens.empty() ? 1 : gens.front().degree;
  for (const auto& g : gens) {
    check_permutation(g);
    if (g.degree != degree)
      throw BadParameter("generators have differing degrees");
  }

  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::map<std::vector<int>, int> index{{elems[0].images, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = elems[head] * g;
      if (index.emplace(next.images, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > order_cap) {
          std::ostringstream os;
          os << "closure exceeds the order cap of " << order_cap;
          throw SizeLimitExceeded(os.str());
        }
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<std::size_t>(a) * n + b] =
          index.at((elems[a] * elems[b]).images);
  return from_validated(n, std::move(flat), {});
}

int FiniteGroup::power(int a, long long n) const {
  if (n < 0) return power(inv(a), -n);
  int acc = kIdentity;
  int base = a;
  while (n > 0) {
    if (n & 1) acc = mul(acc, base);
    base = mul(base, base);
    n >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  int cur = a;
  while (cur != kIdentity) {
    cur = mul(cur, a);
    ++k;
  }
  return k;
}

int FiniteGroup::exponent() const {
  if (exponent_cache_ == 0) {
    long long m = 1;
    for (int a = 0; a < order_; ++a) m = std::lcm(m, (long long)element_order(a));
    exponent_cache_ = static_cast<int>(m);  // divides order, so it fits
  }
  return exponent_cache_;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

void FiniteGroup::validate() const {
  for (int a = 0; a < order_; ++a)
    if (mul(kIdentity, a) != a || mul(a, kIdentity) != a)
      throw NoIdentity("identity law fails at element " + std::to_string(a));
  for (int a = 0; a < order_; ++a)
    if (mul(a, inv(a)) != kIdentity)
      throw NoIdentity("inverse law fails at element " + std::to_string(a));
  for (int r = 0; r < order_; ++r) {
    std::vector<bool> row(order_, false), col(order_, false);
    for (int c = 0; c < order_; ++c) {
      if (row[mul(r, c)])
        throw NotLatinSquare("row " + std::to_string(r) + " repeats an entry");
      row[mul(r, c)] = true;
      if (col[mul(c, r)])
        throw NotLatinSquare("column " + std::to_string(r) + " repeats an entry");
      col[mul(c, r)] = true;
    }
  }
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          std::ostringstream os;
          os << "associativity fails at a=" << a << " b=" << b << " c=" << c;
          throw NotAssociative(os.str());
        }
}

std::optional<int> FiniteGroup::index_of_name(const std::string& name) const {
  for (int e = 0; e < static_cast<int>(names_.size()); ++e)
    if (names_[e] == name) return e;
  return std::nullopt;
}

std::string FiniteGroup::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(order_));
  for (int v : table_) mix(static_cast<std::uint64_t>(v));
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace monolith
