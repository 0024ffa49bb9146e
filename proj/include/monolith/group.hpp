#pragma once

#include <optional>
#include <string>
#include <vector>

namespace monolith {

inline constexpr int kDefaultOrderCap = 100000;

struct Permutation {
  int degree = 0;
  std::vector<int> images;  // bijection on 0..degree-1

  static Permutation identity(int degree);
  bool is_identity() const;
  // (p * q)(x) = p(q(x))
  Permutation operator*(const Permutation& other) const;
  bool operator==(const Permutation& other) const = default;
};

// A finite group as a complete multiplication table. Elements are dense
// indices 0..order-1 with the identity fixed at index 0. Immutable after
// construction; every instance satisfies the group axioms (checked by the
// constructors, re-checkable via validate()).
class FiniteGroup {
 public:
  static constexpr int kIdentity = 0;

  // Builds from an explicit table. The identity is relocated to index 0 when
  // it sits elsewhere. Throws NotLatinSquare / NoIdentity / NotAssociative
  // naming the first violation.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                std::vector<std::string> names = {});

  // Closure of the generators under composition, breadth-first with the
  // generators applied in list order, so element numbering is reproducible.
  // Element 0 is the identity permutation.
  static FiniteGroup from_permutations(const std::vector<Permutation>& gens,
                                       int order_cap = kDefaultOrderCap);

  int order() const noexcept { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverses_[a]; }

  // h x h^-1
  int conjugate(int h, int x) const { return mul(mul(h, x), inv(h)); }
  // a b a^-1 b^-1
  int commutator(int a, int b) const { return mul(conjugate(a, b), inv(b)); }

  int power(int a, long long n) const;
  int element_order(int a) const;
  // Least m with g^m = 1 for all g; the lcm of element orders.
  int exponent() const;

  bool is_abelian() const;

  // Re-checks all four table invariants; throws on the first violation.
  void validate() const;

  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name_of(int e) const { return names_[e]; }
  std::optional<int> index_of_name(const std::string& name) const;

  // FNV-1a over order and table entries; used to pin base groups in
  // provenance records.
  std::string content_hash() const;

  const std::vector<int>& raw_table() const noexcept { return table_; }

 private:
  FiniteGroup() = default;
  static FiniteGroup from_validated(int order, std::vector<int> table,
                                    std::vector<std::string> names);

  int order_ = 0;
  std::vector<int> table_;     // row-major, table_[a*order+b] = a·b
  std::vector<int> inverses_;
  std::vector<std::string> names_;  // empty when elements are unnamed
  mutable int exponent_cache_ = 0;  // 0 = not yet computed
};

}  // namespace monolith
