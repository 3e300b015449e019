#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cltlab/errors.hpp"

namespace cltlab {

/// Immutable multiplication-table group. Element 0 is always the identity.
struct FiniteGroup {
  int n = 0;
  std::vector<uint16_t> mul;  // n*n, row-major: mul[a*n+b] = a*b
  std::vector<uint16_t> inv;
  std::vector<std::string> labels;
  std::string spec_tag;

  int op(int a, int b) const { return mul[static_cast<size_t>(a) * n + b]; }
  int inverse(int a) const { return inv[a]; }
  int conj(int g, int x) const { return op(op(g, x), inv[g]); }  // g x g^-1
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct Subgroup {
  GroupPtr parent;
  std::vector<uint16_t> members;  // sorted element indices

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int x) const;
};

struct Automorphism {
  GroupPtr parent;
  std::vector<uint16_t> image;  // image[x] = phi(x)
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool associativity_sampled = false;
  long long triples_checked = 0;

  bool ok() const { return violations.empty(); }
};

/// Builds a canonical FiniteGroup from a faithful element model. Elements are
/// sorted by their encoding, then the identity is swapped to index 0.
/// Encoding must be totally ordered and hashable via operator<.
template <class Elem>
FiniteGroup build_group(std::vector<Elem> elements,
                        const std::function<Elem(const Elem&, const Elem&)>& multiply,
                        const std::function<std::string(const Elem&)>& label,
                        std::string spec_tag);

FiniteGroup trivial_group();

ValidationReport validate_group(const FiniteGroup& g);

int element_order(const FiniteGroup& g, int x);
int power(const FiniteGroup& g, int x, long long e);
int commutator(const FiniteGroup& g, int x, int y);  // x^-1 y^-1 x y
bool is_abelian(const FiniteGroup& g);
int exponent(const FiniteGroup& g);

Subgroup center(const FiniteGroup& g, const GroupPtr& self);
Subgroup whole_group(const GroupPtr& g);

/// Multiset of element orders, as sorted (order, count) pairs.
std::vector<std::pair<int, int>> order_profile(const FiniteGroup& g);

/// Closure of a seed set under multiplication, as sorted indices.
std::vector<uint16_t> generated_subgroup(const FiniteGroup& g, std::vector<uint16_t> seed);

/// Greedy minimal generating set: repeatedly add the lowest-index element
/// whose closure grows the generated subgroup the most.
std::vector<int> minimal_generating_set(const FiniteGroup& g);

/// Extends gens[i] -> images[i] to a homomorphism G -> H if one exists,
/// returning the full image map. gens must generate G.
std::optional<std::vector<uint16_t>> extend_generator_map(
    const FiniteGroup& g, const std::vector<int>& gens, const FiniteGroup& h,
    const std::vector<int>& images);

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                   std::vector<uint16_t>* witness = nullptr);

/// All automorphisms as permutations, in deterministic backtracking order.
/// Throws TooLarge when |G| exceeds the automorphism bound.
std::vector<std::vector<uint16_t>> enumerate_automorphisms(const FiniteGroup& g);
long long automorphism_count(const FiniteGroup& g);

Automorphism identity_automorphism(const GroupPtr& g);
Automorphism automorphism_from_image(const GroupPtr& g, std::vector<uint16_t> image);
int automorphism_order(const Automorphism& a);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Semidirect product H x| Z_m for an automorphism alpha of H with
/// alpha^m = id. Elements are pairs (h, k), k in 0..m-1, multiplied as
/// (h1,k1)(h2,k2) = (h1 * alpha^k1(h2), k1+k2 mod m).
FiniteGroup semidirect_product(const GroupPtr& h, int m, const Automorphism& alpha,
                               const std::string& spec_tag = "");

/// General external semidirect product N x| H where action[h] is the
/// automorphism of N contributed by the H-element h (a homomorphism
/// H -> Aut(N), validated up front).
FiniteGroup semidirect_product_general(const GroupPtr& n, const GroupPtr& h,
                                       const std::vector<std::vector<uint16_t>>& action,
                                       const std::string& spec_tag);

/// The subgroup as a standalone group; labels inherited from the parent.
FiniteGroup subgroup_as_group(const Subgroup& s, const std::string& spec_tag = "");

// --- template implementation -------------------------------------------

namespace detail {
FiniteGroup finish_build(int n, std::vector<uint16_t> mul, std::vector<std::string> labels,
                         std::string spec_tag);
}

template <class Elem>
FiniteGroup build_group(std::vector<Elem> elements,
                        const std::function<Elem(const Elem&, const Elem&)>& multiply,
                        const std::function<std::string(const Elem&)>& label,
                        std::string spec_tag) {
  std::sort(elements.begin(), elements.end());
  const int n = static_cast<int>(elements.size());
  std::map<Elem, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(elements[i], i).second)
      throw InvalidArgument("build_group: duplicate elements");
  }
  std::vector<uint16_t> mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(multiply(elements[a], elements[b]));
      if (it == index.end()) throw InvalidArgument("build_group: rule not closed");
      mul[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(it->second);
    }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = label(elements[i]);
  return detail::finish_build(n, std::move(mul), std::move(labels), std::move(spec_tag));
}

}  // namespace cltlab
