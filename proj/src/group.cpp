#include "cltlab/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "cltlab/config.hpp"
#include "cltlab/errors.hpp"

namespace cltlab {

bool Subgroup::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), static_cast<uint16_t>(x));
}

namespace detail {

FiniteGroup finish_build(int n, std::vector<uint16_t> mul, std::vector<std::string> labels,
                         std::string spec_tag) {
  if (n < 1) throw InvalidArgument("build_group: empty element set");
  if (n > max_order()) throw TooLarge("build_group: order exceeds CLTLAB_MAX_ORDER");
  if (n > 65535) throw TooLarge("build_group: order exceeds index width");
  auto at = [&](int a, int b) { return mul[static_cast<size_t>(a) * n + b]; };
  // Locate the identity.
  int id = -1;
  for (int e = 0; e < n; ++e) {
    if (at(e, 0) == 0 && at(0, e) == 0) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
      if (ok) {
        id = e;
        break;
      }
    }
  }
  if (id == -1) throw InvalidArgument("build_group: no identity element");
  if (id != 0) {
    // Swap identity to index 0.
    std::vector<uint16_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[id]);
    std::vector<uint16_t> remul(mul.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int v = at(perm[a], perm[b]);
        remul[static_cast<size_t>(a) * n + b] = perm[v];  // perm is an involution
      }
    std::vector<std::string> relab(n);
    for (int i = 0; i < n; ++i) relab[i] = labels[perm[i]];
    mul = std::move(remul);
    labels = std::move(relab);
  }
  FiniteGroup g;
  g.n = n;
  g.mul = std::move(mul);
  g.labels = std::move(labels);
  g.spec_tag = std::move(spec_tag);
  g.inv.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int found = -1;
    for (int b = 0; b < n; ++b)
      if (g.op(a, b) == 0 && g.op(b, a) == 0) {
        found = b;
        break;
      }
    if (found == -1) throw InvalidArgument("build_group: element without inverse");
    g.inv[a] = static_cast<uint16_t>(found);
  }
  return g;
}

}  // namespace detail

FiniteGroup trivial_group() {
  return build_group<int>(
      {0}, [](const int&, const int&) { return 0; },
      [](const int&) { return std::string("e"); }, "cyclic:1");
}

ValidationReport validate_group(const FiniteGroup& g) {
  ValidationReport rep;
  const int n = g.n;
  // Latin square rows/columns.
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) seen[g.op(a, b)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      rep.violations.push_back("row " + std::to_string(a) + " is not a permutation");
  }
  for (int b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) seen[g.op(a, b)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      rep.violations.push_back("column " + std::to_string(b) + " is not a permutation");
  }
  for (int x = 0; x < n; ++x) {
    if (g.op(0, x) != x || g.op(x, 0) != x) {
      rep.violations.push_back("identity fails at " + std::to_string(x));
      break;
    }
  }
  for (int x = 0; x < n; ++x) {
    if (g.op(x, g.inv[x]) != 0 || g.op(g.inv[x], x) != 0) {
      rep.violations.push_back("inverse fails at " + std::to_string(x));
      break;
    }
  }
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c))) {
            rep.violations.push_back("associativity fails at (" + std::to_string(a) + "," +
                                     std::to_string(b) + "," + std::to_string(c) + ")");
            rep.triples_checked++;
            return rep;
          }
        }
    rep.triples_checked = static_cast<long long>(n) * n * n;
  } else {
    rep.associativity_sampled = true;
    std::mt19937 rng(0xC17'1AB);
    std::uniform_int_distribution<int> dist(0, n - 1);
    const long long samples = 100000;
    for (long long i = 0; i < samples; ++i) {
      int a = dist(rng), b = dist(rng), c = dist(rng);
      if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c))) {
        rep.violations.push_back("associativity fails at (" + std::to_string(a) + "," +
                                 std::to_string(b) + "," + std::to_string(c) + ")");
        return rep;
      }
    }
    rep.triples_checked = samples;
  }
  return rep;
}

int element_order(const FiniteGroup& g, int x) {
  if (x < 0 || x >= g.n) throw InvalidArgument("element_order: index out of range");
  int acc = x, k = 1;
  while (acc != 0) {
    acc = g.op(acc, x);
    ++k;
  }
  return k;
}

int power(const FiniteGroup& g, int x, long long e) {
  int ord = element_order(g, x);
  e %= ord;
  if (e < 0) e += ord;
  int acc = 0;
  for (long long i = 0; i < e; ++i) acc = g.op(acc, x);
  return acc;
}

int commutator(const FiniteGroup& g, int x, int y) {
  return g.op(g.op(g.inv[x], g.inv[y]), g.op(x, y));
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (g.op(a, b) != g.op(b, a)) return false;
  return true;
}

int exponent(const FiniteGroup& g) {
  long long e = 1;
  for (int x = 0; x < g.n; ++x) e = std::lcm(e, static_cast<long long>(element_order(g, x)));
  return static_cast<int>(e);
}

Subgroup center(const FiniteGroup& g, const GroupPtr& self) {
  Subgroup z;
  z.parent = self;
  for (int x = 0; x < g.n; ++x) {
    bool central = true;
    for (int y = 0; y < g.n && central; ++y) central = g.op(x, y) == g.op(y, x);
    if (central) z.members.push_back(static_cast<uint16_t>(x));
  }
  return z;
}

Subgroup whole_group(const GroupPtr& g) {
  Subgroup s;
  s.parent = g;
  s.members.resize(g->n);
  std::iota(s.members.begin(), s.members.end(), 0);
  return s;
}

std::vector<std::pair<int, int>> order_profile(const FiniteGroup& g) {
  std::map<int, int> counts;
  for (int x = 0; x < g.n; ++x) counts[element_order(g, x)]++;
  return {counts.begin(), counts.end()};
}

std::vector<uint16_t> generated_subgroup(const FiniteGroup& g, std::vector<uint16_t> seed) {
  std::vector<char> in(g.n, 0);
  std::vector<uint16_t> elems;
  elems.push_back(0);
  in[0] = 1;
  for (uint16_t s : seed)
    if (!in[s]) {
      in[s] = 1;
      elems.push_back(s);
    }
  // Worklist closure under left/right products.
  for (size_t i = 0; i < elems.size(); ++i) {
    int x = elems[i];
    for (size_t j = 0; j < elems.size(); ++j) {
      int y = elems[j];
      int p1 = g.op(x, y);
      if (!in[p1]) {
        in[p1] = 1;
        elems.push_back(static_cast<uint16_t>(p1));
      }
      int p2 = g.op(y, x);
      if (!in[p2]) {
        in[p2] = 1;
        elems.push_back(static_cast<uint16_t>(p2));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> minimal_generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<uint16_t> current{0};
  while (static_cast<int>(current.size()) < g.n) {
    int best = -1;
    size_t best_size = current.size();
    for (int x = 0; x < g.n; ++x) {
      if (std::binary_search(current.begin(), current.end(), static_cast<uint16_t>(x))) continue;
      std::vector<uint16_t> seed = current;
      seed.push_back(static_cast<uint16_t>(x));
      size_t sz = generated_subgroup(g, seed).size();
      if (sz > best_size) {
        best_size = sz;
        best = x;
      }
    }
    gens.push_back(best);
    std::vector<uint16_t> seed = current;
    seed.push_back(static_cast<uint16_t>(best));
    current = generated_subgroup(g, seed);
  }
  return gens;
}

std::optional<std::vector<uint16_t>> extend_generator_map(
    const FiniteGroup& g, const std::vector<int>& gens, const FiniteGroup& h,
    const std::vector<int>& images) {
  // BFS over the Cayley graph defines the map; a full edge check then
  // certifies the homomorphism property (sufficient on a generating set).
  constexpr uint16_t UNSET = 0xFFFF;
  std::vector<uint16_t> phi(g.n, UNSET);
  phi[0] = 0;
  std::vector<uint16_t> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int a = queue[qi];
    for (size_t k = 0; k < gens.size(); ++k) {
      int ag = g.op(a, gens[k]);
      uint16_t img = static_cast<uint16_t>(h.op(phi[a], images[k]));
      if (phi[ag] == UNSET) {
        phi[ag] = img;
        queue.push_back(static_cast<uint16_t>(ag));
      } else if (phi[ag] != img) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != static_cast<size_t>(g.n)) return std::nullopt;  // gens don't generate
  for (int a = 0; a < g.n; ++a)
    for (size_t k = 0; k < gens.size(); ++k) {
      if (phi[g.op(a, gens[k])] != h.op(phi[a], images[k])) return std::nullopt;
    }
  return phi;
}

namespace {

bool image_is_bijective(const std::vector<uint16_t>& phi, int hn) {
  if (static_cast<int>(phi.size()) != hn) return false;
  std::vector<char> hit(hn, 0);
  for (uint16_t v : phi) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

// Backtracking over generator images with same-order candidate filtering.
// visit() gets each bijective homomorphism; returning false stops the search.
bool for_each_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                          const std::function<bool(const std::vector<uint16_t>&)>& visit) {
  if (g.n != h.n) return true;
  std::vector<int> gens = minimal_generating_set(g);
  if (gens.empty()) {  // trivial group
    std::vector<uint16_t> phi{0};
    return visit(phi);
  }
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    int ord = element_order(g, gens[k]);
    for (int y = 0; y < h.n; ++y)
      if (element_order(h, y) == ord) candidates[k].push_back(y);
    if (candidates[k].empty()) return true;
  }
  std::vector<int> images(gens.size());
  auto rec = [&](auto&& self, size_t depth) -> bool {
    if (depth == gens.size()) {
      auto phi = extend_generator_map(g, gens, h, images);
      if (phi && image_is_bijective(*phi, h.n)) {
        if (!visit(*phi)) return false;
      }
      return true;
    }
    for (int cand : candidates[depth]) {
      images[depth] = cand;
      if (!self(self, depth + 1)) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

}  // namespace

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h, std::vector<uint16_t>* witness) {
  if (g.n != h.n) return false;
  if (order_profile(g) != order_profile(h)) return false;
  bool found = false;
  for_each_isomorphism(g, h, [&](const std::vector<uint16_t>& phi) {
    found = true;
    if (witness) *witness = phi;
    return false;  // stop at first
  });
  return found;
}

std::vector<std::vector<uint16_t>> enumerate_automorphisms(const FiniteGroup& g) {
  if (g.n > aut_bound()) throw TooLarge("enumerate_automorphisms: order exceeds bound");
  std::vector<std::vector<uint16_t>> autos;
  for_each_isomorphism(g, g, [&](const std::vector<uint16_t>& phi) {
    autos.push_back(phi);
    return true;
  });
  return autos;
}

long long automorphism_count(const FiniteGroup& g) {
  if (g.n > aut_bound()) throw TooLarge("automorphism_count: order exceeds bound");
  long long count = 0;
  for_each_isomorphism(g, g, [&](const std::vector<uint16_t>&) {
    ++count;
    return true;
  });
  return count;
}

Automorphism identity_automorphism(const GroupPtr& g) {
  Automorphism a;
  a.parent = g;
  a.image.resize(g->n);
  std::iota(a.image.begin(), a.image.end(), 0);
  return a;
}

Automorphism automorphism_from_image(const GroupPtr& g, std::vector<uint16_t> image) {
  if (static_cast<int>(image.size()) != g->n)
    throw InvalidArgument("automorphism_from_image: wrong size");
  if (!image_is_bijective(image, g->n) || image[0] != 0)
    throw InvalidArgument("automorphism_from_image: not a bijection fixing identity");
  for (int a = 0; a < g->n; ++a)
    for (int b = 0; b < g->n; ++b)
      if (image[g->op(a, b)] != g->op(image[a], image[b]))
        throw InvalidArgument("automorphism_from_image: not multiplicative");
  Automorphism x;
  x.parent = g;
  x.image = std::move(image);
  return x;
}

int automorphism_order(const Automorphism& a) {
  const int n = a.parent->n;
  std::vector<uint16_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<uint16_t> acc = a.image;
  int k = 1;
  while (acc != id) {
    std::vector<uint16_t> next(n);
    for (int i = 0; i < n; ++i) next[i] = a.image[acc[i]];
    acc = std::move(next);
    ++k;
    if (k > n * n) throw Error("automorphism_order: runaway");
  }
  return k;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  long long total = static_cast<long long>(a.n) * b.n;
  if (total > max_order()) throw TooLarge("direct_product: order exceeds bound");
  using Pair = std::pair<int, int>;
  std::vector<Pair> elems;
  elems.reserve(total);
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < b.n; ++y) elems.emplace_back(x, y);
  return build_group<Pair>(
      std::move(elems),
      [&](const Pair& u, const Pair& v) {
        return Pair{a.op(u.first, v.first), b.op(u.second, v.second)};
      },
      [&](const Pair& u) {
        return "(" + a.labels[u.first] + "," + b.labels[u.second] + ")";
      },
      "dp(" + a.spec_tag + "," + b.spec_tag + ")");
}

FiniteGroup semidirect_product(const GroupPtr& h, int m, const Automorphism& alpha,
                               const std::string& spec_tag) {
  if (m < 1) throw InvalidArgument("semidirect_product: m must be positive");
  long long total = static_cast<long long>(h->n) * m;
  if (total > max_order()) throw TooLarge("semidirect_product: order exceeds bound");
  // Precompute alpha^0 .. alpha^{m-1} and require alpha^m = id.
  std::vector<std::vector<uint16_t>> pow(m);
  pow[0].resize(h->n);
  std::iota(pow[0].begin(), pow[0].end(), 0);
  for (int k = 1; k < m; ++k) {
    pow[k].resize(h->n);
    for (int i = 0; i < h->n; ++i) pow[k][i] = alpha.image[pow[k - 1][i]];
  }
  std::vector<uint16_t> last(h->n);
  for (int i = 0; i < h->n; ++i) last[i] = alpha.image[pow[m - 1][i]];
  if (last != pow[0]) throw InvalidArgument("semidirect_product: alpha^m is not the identity");

  using Pair = std::pair<int, int>;
  std::vector<Pair> elems;
  elems.reserve(total);
  for (int x = 0; x < h->n; ++x)
    for (int k = 0; k < m; ++k) elems.emplace_back(x, k);
  std::string tag = spec_tag.empty() ? "sdp(" + h->spec_tag + "," + std::to_string(m) + ",?)"
                                     : spec_tag;
  return build_group<Pair>(
      std::move(elems),
      [&, h](const Pair& u, const Pair& v) {
        return Pair{h->op(u.first, pow[u.second][v.first]), (u.second + v.second) % m};
      },
      [&, h](const Pair& u) {
        return "(" + h->labels[u.first] + "," + std::to_string(u.second) + ")";
      },
      tag);
}

FiniteGroup semidirect_product_general(const GroupPtr& n, const GroupPtr& h,
                                       const std::vector<std::vector<uint16_t>>& action,
                                       const std::string& spec_tag) {
  if (static_cast<int>(action.size()) != h->n)
    throw InvalidArgument("semidirect_product_general: one automorphism per H element");
  long long total = static_cast<long long>(n->n) * h->n;
  if (total > max_order()) throw TooLarge("semidirect_product_general: order exceeds bound");
  // action must be a homomorphism H -> Aut(N).
  for (int a = 0; a < h->n; ++a)
    for (int b = 0; b < h->n; ++b) {
      const auto& lhs = action[h->op(a, b)];
      for (int x = 0; x < n->n; ++x)
        if (lhs[x] != action[a][action[b][x]])
          throw InvalidArgument("semidirect_product_general: action is not a homomorphism");
    }
  using Pair = std::pair<int, int>;
  std::vector<Pair> elems;
  elems.reserve(total);
  for (int x = 0; x < n->n; ++x)
    for (int y = 0; y < h->n; ++y) elems.emplace_back(x, y);
  return build_group<Pair>(
      std::move(elems),
      [&, n, h](const Pair& u, const Pair& v) {
        return Pair{n->op(u.first, action[u.second][v.first]), h->op(u.second, v.second)};
      },
      [&, n, h](const Pair& u) {
        return "(" + n->labels[u.first] + "," + h->labels[u.second] + ")";
      },
      spec_tag);
}

FiniteGroup subgroup_as_group(const Subgroup& s, const std::string& spec_tag) {
  const FiniteGroup& parent = *s.parent;
  const int m = s.order();
  std::vector<int> to_sub(parent.n, -1);
  for (int i = 0; i < m; ++i) to_sub[s.members[i]] = i;
  std::vector<uint16_t> mul(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int prod = parent.op(s.members[i], s.members[j]);
      if (to_sub[prod] < 0) throw InvalidArgument("subgroup_as_group: set not closed");
      mul[static_cast<size_t>(i) * m + j] = static_cast<uint16_t>(to_sub[prod]);
    }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = parent.labels[s.members[i]];
  std::string tag = spec_tag.empty()
                        ? parent.spec_tag + "|sub" + std::to_string(m)
                        : spec_tag;
  return detail::finish_build(m, std::move(mul), std::move(labels), std::move(tag));
}

}  // namespace cltlab
