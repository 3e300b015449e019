#include "cltlab/constructors.hpp"

#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "cltlab/config.hpp"
#include "cltlab/errors.hpp"

namespace cltlab {

namespace {

std::string tuple_label(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

}  // namespace

GroupPtr cyclic(int n) {
  if (n < 1) throw InvalidArgument("cyclic: order must be positive");
  if (n > max_order()) throw TooLarge("cyclic: order exceeds bound");
  std::vector<int> elems(n);
  std::iota(elems.begin(), elems.end(), 0);
  return share(build_group<int>(
      std::move(elems), [n](const int& a, const int& b) { return (a + b) % n; },
      [](const int& a) { return std::to_string(a); }, "cyclic:" + std::to_string(n)));
}

GroupPtr elementary_abelian(int q, int k) {
  if (!gf::is_prime(q)) throw InvalidArgument("elementary_abelian: q must be prime");
  if (k < 1) throw InvalidArgument("elementary_abelian: k must be positive");
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= q;
    if (total > max_order()) throw TooLarge("elementary_abelian: order exceeds bound");
  }
  using Vec = std::vector<int>;
  std::vector<Vec> elems;
  elems.reserve(total);
  Vec v(k, 0);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = k - 1; i >= 0; --i) {
      v[i] = static_cast<int>(c % q);
      c /= q;
    }
    elems.push_back(v);
  }
  return share(build_group<Vec>(
      std::move(elems),
      [q, k](const Vec& a, const Vec& b) {
        Vec r(k);
        for (int i = 0; i < k; ++i) r[i] = (a[i] + b[i]) % q;
        return r;
      },
      [](const Vec& a) { return tuple_label(a); },
      "elemab:" + std::to_string(q) + "," + std::to_string(k)));
}

HeisenbergGroup heisenberg(int q) {
  if (!gf::is_prime(q) || q == 2)
    throw InvalidArgument("heisenberg: q must be an odd prime");
  long long total = static_cast<long long>(q) * q * q;
  if (total > max_order()) throw TooLarge("heisenberg: order exceeds bound");
  // Exponent triples (a,b,c) for the unitriangular matrix with (1,2)=a,
  // (2,3)=b, (1,3)=c; the matrix product gives c' = c1+c2+a1*b2.
  using Tri = std::array<int, 3>;
  std::vector<Tri> elems;
  elems.reserve(total);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) elems.push_back({a, b, c});
  FiniteGroup g = build_group<Tri>(
      std::move(elems),
      [q](const Tri& u, const Tri& v) {
        return Tri{(u[0] + v[0]) % q, (u[1] + v[1]) % q, (u[2] + v[2] + u[0] * v[1]) % q};
      },
      [](const Tri& u) { return tuple_label({u[0], u[1], u[2]}); },
      "heis:" + std::to_string(q));
  HeisenbergGroup h;
  h.x = q * q;  // (1,0,0)
  h.y = q;      // (0,1,0)
  h.z = 1;      // (0,0,1)
  h.group = share(std::move(g));
  return h;
}

ModularGroup modular_group(int q) {
  if (!gf::is_prime(q) || q == 2)
    throw InvalidArgument("modular_group: q must be an odd prime");
  int q2 = q * q;
  if (static_cast<long long>(q2) * q > max_order())
    throw TooLarge("modular_group: order exceeds bound");
  // Elements x^a y^b as pairs (a,b); t = (q+1)^-1 mod q^2 moves x past y so
  // that y^-1 x y = x^{q+1} holds.
  int t = (q2 - q + 1) % q2;
  std::vector<int> tpow(q, 1);
  for (int i = 1; i < q; ++i) tpow[i] = static_cast<int>(static_cast<long long>(tpow[i - 1]) * t % q2);
  using Pair = std::pair<int, int>;
  std::vector<Pair> elems;
  elems.reserve(q2 * q);
  for (int a = 0; a < q2; ++a)
    for (int b = 0; b < q; ++b) elems.emplace_back(a, b);
  FiniteGroup g = build_group<Pair>(
      std::move(elems),
      [q, q2, &tpow](const Pair& u, const Pair& v) {
        int a = static_cast<int>((u.first + static_cast<long long>(v.first) * tpow[u.second]) % q2);
        return Pair{a, (u.second + v.second) % q};
      },
      [](const Pair& u) {
        return "x^" + std::to_string(u.first) + "y^" + std::to_string(u.second);
      },
      "mod:" + std::to_string(q));
  ModularGroup m;
  m.x = q;  // (1,0)
  m.y = 1;  // (0,1)
  m.group = share(std::move(g));
  return m;
}

GroupPtr quaternion8() {
  // Unit quaternions: (axis, sign), axis 0..3 = 1,i,j,k.
  using Pair = std::pair<int, int>;
  static const int axis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign_mul[a][b]: extra sign from multiplying base axes a*b
  // (i*j=k, j*i=-k, i*i=-1, ...).
  static const char* names[4] = {"1", "i", "j", "k"};
  std::vector<Pair> elems;
  for (int a = 0; a < 4; ++a)
    for (int s = 0; s < 2; ++s) elems.emplace_back(a, s);
  return share(build_group<Pair>(
      std::move(elems),
      [](const Pair& u, const Pair& v) {
        int axis = axis_mul[u.first][v.first];
        int sign = (u.second + v.second + sign_mul[u.first][v.first]) % 2;
        return Pair{axis, sign};
      },
      [](const Pair& u) {
        return std::string(u.second ? "-" : "") + names[u.first];
      },
      "q8"));
}

GroupPtr dihedral(int n) {
  if (n < 4 || n % 2 != 0) throw InvalidArgument("dihedral: order must be even and >= 4");
  if (n > max_order()) throw TooLarge("dihedral: order exceeds bound");
  int m = n / 2;
  using Pair = std::pair<int, int>;  // (rotation, flip)
  std::vector<Pair> elems;
  for (int i = 0; i < m; ++i)
    for (int f = 0; f < 2; ++f) elems.emplace_back(i, f);
  return share(build_group<Pair>(
      std::move(elems),
      [m](const Pair& u, const Pair& v) {
        int rot = u.second ? (u.first - v.first % m + m) % m : (u.first + v.first) % m;
        return Pair{rot, (u.second + v.second) % 2};
      },
      [](const Pair& u) {
        return (u.second ? "sr^" : "r^") + std::to_string(u.first);
      },
      "dih:" + std::to_string(n)));
}

GroupPtr dicyclic(int n) {
  if (n < 8 || n % 4 != 0)
    throw InvalidArgument("dicyclic: order must be a multiple of 4 and >= 8");
  if (n > max_order()) throw TooLarge("dicyclic: order exceeds bound");
  int big = n / 2, half = n / 4;  // a has order big; b^2 = a^half
  using Pair = std::pair<int, int>;
  std::vector<Pair> elems;
  for (int i = 0; i < big; ++i)
    for (int f = 0; f < 2; ++f) elems.emplace_back(i, f);
  return share(build_group<Pair>(
      std::move(elems),
      [big, half](const Pair& u, const Pair& v) {
        if (u.second == 0) return Pair{(u.first + v.first) % big, v.second};
        int rot = (u.first - v.first % big + big) % big;
        if (v.second == 0) return Pair{rot, 1};
        return Pair{(rot + half) % big, 0};
      },
      [](const Pair& u) {
        return (u.second ? "a^" + std::to_string(u.first) + "b" : "a^" + std::to_string(u.first));
      },
      "dic:" + std::to_string(n)));
}

GroupPtr sl2_3() {
  using Mat = std::array<int, 4>;
  std::vector<Mat> elems;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if (((a * d - b * c) % 3 + 3) % 3 == 1) elems.push_back({a, b, c, d});
  return share(build_group<Mat>(
      std::move(elems),
      [](const Mat& u, const Mat& v) {
        return Mat{(u[0] * v[0] + u[1] * v[2]) % 3, (u[0] * v[1] + u[1] * v[3]) % 3,
                   (u[2] * v[0] + u[3] * v[2]) % 3, (u[2] * v[1] + u[3] * v[3]) % 3};
      },
      [](const Mat& u) {
        return "[[" + std::to_string(u[0]) + "," + std::to_string(u[1]) + "],[" +
               std::to_string(u[2]) + "," + std::to_string(u[3]) + "]]";
      },
      "sl23"));
}

GroupPtr symmetric4() {
  using Perm = std::array<int, 4>;
  std::vector<Perm> elems;
  Perm p{0, 1, 2, 3};
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return share(build_group<Perm>(
      std::move(elems),
      [](const Perm& u, const Perm& v) {
        return Perm{u[v[0]], u[v[1]], u[v[2]], u[v[3]]};
      },
      [](const Perm& u) {
        return std::to_string(u[0]) + std::to_string(u[1]) + std::to_string(u[2]) +
               std::to_string(u[3]);
      },
      "s4"));
}

Automorphism matrix_action_on_elemab(const GroupPtr& elemab, int q, int k,
                                     const gf::Matrix& m) {
  if (m.dim != k || m.q != q)
    throw InvalidArgument("matrix_action_on_elemab: matrix shape mismatch");
  if (!gf::is_invertible(m)) throw InvalidArgument("matrix_action_on_elemab: singular matrix");
  // Index <-> exponent vector, big-endian base q.
  const int n = elemab->n;
  std::vector<uint16_t> image(n);
  std::vector<int> v(k), w(k);
  for (int idx = 0; idx < n; ++idx) {
    int c = idx;
    for (int i = k - 1; i >= 0; --i) {
      v[i] = c % q;
      c /= q;
    }
    for (int r = 0; r < k; ++r) {
      int acc = 0;
      for (int col = 0; col < k; ++col) acc = (acc + m.at(r, col) * v[col]) % q;
      w[r] = acc;
    }
    int widx = 0;
    for (int i = 0; i < k; ++i) widx = widx * q + w[i];
    image[idx] = static_cast<uint16_t>(widx);
  }
  return automorphism_from_image(elemab, std::move(image));
}

Automorphism matrix_action_on_cyclic(const GroupPtr& zq, int q, const gf::Matrix& m) {
  if (m.dim != 1 || m.q != q)
    throw InvalidArgument("matrix_action_on_cyclic: need a 1x1 matrix over GF(q)");
  if (zq->n != q || !gf::is_prime(q))
    throw InvalidArgument("matrix_action_on_cyclic: base must be cyclic of prime order");
  int s = m.at(0, 0);
  if (s == 0) throw InvalidArgument("matrix_action_on_cyclic: singular action");
  std::vector<uint16_t> image(q);
  for (int v = 0; v < q; ++v) image[v] = static_cast<uint16_t>(v * s % q);
  return automorphism_from_image(zq, std::move(image));
}

Automorphism sl2_action_on_heisenberg(const HeisenbergGroup& h, int q, const gf::Matrix& m) {
  if (m.dim != 2 || m.q != q)
    throw InvalidArgument("sl2_action_on_heisenberg: need a 2x2 matrix over GF(q)");
  if (gf::mat_det(m) != 1)
    throw InvalidArgument("sl2_action_on_heisenberg: determinant must be 1 to fix the center");
  const FiniteGroup& g = *h.group;
  // x -> x^a y^c, y -> x^b y^d (column action on the generator pair).
  auto word = [&](int xe, int ye) {
    int acc = 0;
    for (int i = 0; i < xe; ++i) acc = g.op(acc, h.x);
    for (int i = 0; i < ye; ++i) acc = g.op(acc, h.y);
    return acc;
  };
  std::vector<int> gens{h.x, h.y};
  std::vector<int> images{word(m.at(0, 0), m.at(1, 0)), word(m.at(0, 1), m.at(1, 1))};
  auto phi = extend_generator_map(g, gens, g, images);
  if (!phi) throw Error("sl2_action_on_heisenberg: lift failed to extend");
  return automorphism_from_image(h.group, std::move(*phi));
}

GroupPtr zq3_semi_zp(int p, int q) {
  if (!gf::is_prime(p) || !gf::is_prime(q))
    throw InvalidArgument("zq3_semi_zp: p, q must be prime");
  gf::Matrix m = gf::find_gl_element_of_order(3, q, p);
  GroupPtr base = elementary_abelian(q, 3);
  Automorphism alpha = matrix_action_on_elemab(base, q, 3, m);
  return share(semidirect_product(base, p, alpha,
                                  "zq3xzp:" + std::to_string(p) + "," + std::to_string(q)));
}

GroupPtr eq3_semi_zp(int p, int q) {
  if (!gf::is_prime(p) || !gf::is_prime(q))
    throw InvalidArgument("eq3_semi_zp: p, q must be prime");
  HeisenbergGroup h = heisenberg(q);  // rejects q = 2
  gf::Matrix m = gf::find_sl2_element_of_order(q, p);
  Automorphism alpha = sl2_action_on_heisenberg(h, q, m);
  return share(semidirect_product(h.group, p, alpha,
                                  "eq3xzp:" + std::to_string(p) + "," + std::to_string(q)));
}

namespace {

// The order-2 automorphism of C6 x C2 whose semidirect extension by C2 is
// the nonabelian group of order 24 with a central involution and no element
// of order 12 (inverts the 3-part, transvects the 2-part).
Automorphism c6xc2_twist(const GroupPtr& base) {
  std::vector<uint16_t> image(12);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 2; ++j) {
      int a = (3 - i % 3) % 3;       // inverted 3-part
      int b = (i + j) % 2;           // 2-part picks up the C2 coordinate
      int u = (a * 4 + b * 3) % 6;   // CRT back into C6
      image[i * 2 + j] = static_cast<uint16_t>(u * 2 + j);
    }
  return automorphism_from_image(base, std::move(image));
}

int automorphism_index(const GroupPtr& g, const Automorphism& a) {
  auto autos = enumerate_automorphisms(*g);
  for (size_t i = 0; i < autos.size(); ++i)
    if (autos[i] == a.image) return static_cast<int>(i);
  throw Error("automorphism_index: automorphism not found in enumeration");
}

}  // namespace

std::vector<GroupPtr> order24_catalog() {
  std::vector<GroupPtr> cat;
  cat.push_back(cyclic(24));
  cat.push_back(share(direct_product(*cyclic(12), *cyclic(2))));
  cat.push_back(share(direct_product(*cyclic(6), *elementary_abelian(2, 2))));
  cat.push_back(symmetric4());
  cat.push_back(sl2_3());
  {
    // A4 as Z2^2 x| Z3, then times Z2.
    GroupPtr v4 = elementary_abelian(2, 2);
    gf::Matrix m(2, 2);
    m.at(0, 0) = 0;
    m.at(0, 1) = 1;
    m.at(1, 0) = 1;
    m.at(1, 1) = 1;
    Automorphism rot = matrix_action_on_elemab(v4, 2, 2, m);
    GroupPtr a4 = share(semidirect_product(v4, 3, rot, "sdp(elemab:2,2,3,matrix:[0,1;1,1])"));
    cat.push_back(share(direct_product(*a4, *cyclic(2))));
  }
  cat.push_back(dihedral(24));
  cat.push_back(dicyclic(24));
  cat.push_back(share(direct_product(*cyclic(3), *dihedral(8))));
  cat.push_back(share(direct_product(*cyclic(3), *quaternion8())));
  {
    GroupPtr z3 = cyclic(3);
    gf::Matrix m(1, 3);
    m.at(0, 0) = 2;
    Automorphism invert = matrix_action_on_cyclic(z3, 3, m);
    cat.push_back(share(semidirect_product(z3, 8, invert, "sdp(cyclic:3,8,matrix:[2])")));
  }
  cat.push_back(share(direct_product(*cyclic(2), *dicyclic(12))));
  cat.push_back(share(direct_product(*cyclic(4), *dihedral(6))));
  cat.push_back(share(direct_product(*elementary_abelian(2, 2), *dihedral(6))));
  {
    GroupPtr base = share(direct_product(*cyclic(6), *cyclic(2)));
    Automorphism twist = c6xc2_twist(base);
    int k = automorphism_index(base, twist);
    cat.push_back(share(semidirect_product(base, 2, twist,
                                           "sdp(dp(cyclic:6,cyclic:2),2,aut:" +
                                               std::to_string(k) + ")")));
  }
  if (cat.size() != 15) throw Error("order24_catalog: expected 15 constructions");
  for (size_t i = 0; i < cat.size(); ++i)
    for (size_t j = i + 1; j < cat.size(); ++j)
      if (is_isomorphic(*cat[i], *cat[j]))
        throw Error("order24_catalog: members " + cat[i]->spec_tag + " and " +
                    cat[j]->spec_tag + " are isomorphic; catalog is wrong");
  return cat;
}

std::string enumeration_assumption() {
  return "enumeration assumes every group of order p*q^3 (order 24 aside, which is "
         "catalogued directly) has a normal Sylow q-subgroup or a normal Sylow "
         "p-subgroup";
}

namespace {

// Canonical key for the cyclic subgroup generated by an order-p matrix:
// the least sorted irreducible-factor signature over all nontrivial powers.
std::string matrix_subgroup_key(const gf::Matrix& m, int p) {
  auto factor_signature = [](const gf::Matrix& a) {
    // char(A) = x^3 - tr x^2 + m2 x - det for dim 3 (dim 1 and 2 analogous).
    int q = a.q;
    gf::Poly ch;
    ch.q = q;
    if (a.dim == 1) {
      ch.coeffs = {gf::sub(0, a.at(0, 0), q), 1};
    } else if (a.dim == 2) {
      int tr = gf::add(a.at(0, 0), a.at(1, 1), q);
      ch.coeffs = {gf::mat_det(a), gf::sub(0, tr, q), 1};
    } else {
      int tr = gf::add(gf::add(a.at(0, 0), a.at(1, 1), q), a.at(2, 2), q);
      int m2 = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          int minor = gf::sub(gf::mul(a.at(i, i), a.at(j, j), q),
                              gf::mul(a.at(i, j), a.at(j, i), q), q);
          m2 = gf::add(m2, minor, q);
        }
      int det = gf::mat_det(a);
      ch.coeffs = {gf::sub(0, det, q), m2, gf::sub(0, tr, q), 1};
    }
    // Split off linear factors by root scan; the nonlinear remainder of a
    // cubic or quadratic is irreducible once rootless.
    std::vector<std::vector<int>> factors;
    std::vector<int> work = ch.coeffs;
    auto eval = [&](const std::vector<int>& f, int x) {
      long long v = 0, xp = 1;
      for (int c : f) {
        v = (v + static_cast<long long>(c) * xp) % q;
        xp = xp * x % q;
      }
      return static_cast<int>(v);
    };
    bool found = true;
    while (work.size() > 1 && found) {
      found = false;
      for (int r = 0; r < q && !found; ++r) {
        if (eval(work, r) != 0) continue;
        found = true;
        factors.push_back({gf::sub(0, r, q), 1});
        // Synthetic division by (x - r).
        std::vector<int> quot(work.size() - 1, 0);
        int carry = 0;
        for (int i = static_cast<int>(work.size()) - 1; i >= 1; --i) {
          quot[i - 1] = gf::add(work[i], gf::mul(carry, r, q), q);
          carry = quot[i - 1];
        }
        work = quot;
      }
    }
    if (work.size() > 1) factors.push_back(work);
    std::vector<std::string> sigs;
    for (auto& f : factors) {
      std::string s;
      for (int c : f) s += std::to_string(c) + ".";
      sigs.push_back(s);
    }
    std::sort(sigs.begin(), sigs.end());
    std::string out;
    for (auto& s : sigs) out += s + "|";
    return out;
  };
  std::string best;
  gf::Matrix acc = m;
  for (int j = 1; j < p; ++j) {
    std::string sig = factor_signature(acc);
    if (best.empty() || sig < best) best = sig;
    acc = gf::mat_mul(acc, m);
  }
  return best;
}

std::vector<uint16_t> compose_perm(const std::vector<uint16_t>& f,
                                   const std::vector<uint16_t>& g) {
  // (f o g)(x) = f(g(x))
  std::vector<uint16_t> r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

std::vector<uint16_t> invert_perm(const std::vector<uint16_t>& f) {
  std::vector<uint16_t> r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[f[i]] = static_cast<uint16_t>(i);
  return r;
}

int perm_order(const std::vector<uint16_t>& f) {
  const int n = static_cast<int>(f.size());
  std::vector<char> seen(n, 0);
  long long ord = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = f[j];
      ++len;
    }
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

// Key of the cyclic subgroup <alpha>: its least member permutation.
std::vector<uint16_t> cyclic_perm_key(const std::vector<uint16_t>& alpha, int p) {
  std::vector<uint16_t> best = alpha, acc = alpha;
  for (int j = 2; j < p; ++j) {
    acc = compose_perm(acc, alpha);
    if (acc < best) best = acc;
  }
  return best;
}

struct PermHash {
  size_t operator()(const std::vector<uint16_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (uint16_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using PermSet = std::unordered_set<std::vector<uint16_t>, PermHash>;

PermSet inner_automorphisms(const FiniteGroup& h) {
  PermSet inns;
  std::vector<uint16_t> perm(h.n);
  for (int g = 0; g < h.n; ++g) {
    for (int x = 0; x < h.n; ++x) perm[x] = static_cast<uint16_t>(h.conj(g, x));
    inns.insert(perm);
  }
  return inns;
}

// H x| <a> and H x| <b> (cyclic complements of order p) are isomorphic
// exactly when some Aut(H)-conjugate of a equals inn_m o b^j. Returns the
// autos indices of one representative per isomorphism class.
std::vector<int> exact_order_p_action_classes(const FiniteGroup& h,
                                              const std::vector<std::vector<uint16_t>>& autos,
                                              int p) {
  // Distinct cyclic subgroups first.
  std::map<std::vector<uint16_t>, int> subgroup_first;  // key -> autos index
  for (size_t i = 0; i < autos.size(); ++i) {
    if (perm_order(autos[i]) != p) continue;
    auto key = cyclic_perm_key(autos[i], p);
    subgroup_first.emplace(std::move(key), static_cast<int>(i));
  }
  // Aut-conjugacy orbits.
  std::vector<int> orbit_reps;
  PermSet visited;
  for (const auto& [key, idx] : subgroup_first) {
    if (visited.count(key)) continue;
    orbit_reps.push_back(idx);
    for (const auto& g : autos) {
      auto ginv = invert_perm(g);
      auto conj = compose_perm(compose_perm(g, autos[idx]), ginv);
      visited.insert(cyclic_perm_key(conj, p));
    }
  }
  if (orbit_reps.size() <= 1) return orbit_reps;
  // Merge orbits equivalent modulo inner automorphisms.
  PermSet inns = inner_automorphisms(h);
  auto equivalent = [&](const std::vector<uint16_t>& a, const std::vector<uint16_t>& b) {
    std::vector<std::vector<uint16_t>> b_pow_inv(p);
    b_pow_inv[1] = invert_perm(b);
    for (int j = 2; j < p; ++j) b_pow_inv[j] = compose_perm(b_pow_inv[j - 1], b_pow_inv[1]);
    for (const auto& g : autos) {
      auto delta = compose_perm(compose_perm(g, a), invert_perm(g));
      for (int j = 1; j < p; ++j) {
        if (inns.count(compose_perm(delta, b_pow_inv[j]))) return true;
      }
    }
    return false;
  };
  std::vector<int> reps;
  for (int idx : orbit_reps) {
    bool dup = false;
    for (int kept : reps)
      if (equivalent(autos[idx], autos[kept])) {
        dup = true;
        break;
      }
    if (!dup) reps.push_back(idx);
  }
  return reps;
}

}  // namespace

std::vector<GroupPtr> all_pq3_groups(int p, int q) {
  if (!gf::is_prime(p) || !gf::is_prime(q))
    throw InvalidArgument("all_pq3_groups: p, q must be prime");
  if (p == q) throw InvalidArgument("all_pq3_groups: requires p != q");
  long long order = static_cast<long long>(p) * q * q * q;
  if (order > max_order()) throw TooLarge("all_pq3_groups: order exceeds bound");
  if (order == 24) return order24_catalog();

  std::vector<GroupPtr> hs;
  if (q == 2) {
    hs = {cyclic(8), share(direct_product(*cyclic(4), *cyclic(2))), elementary_abelian(2, 3),
          dihedral(8), quaternion8()};
  } else {
    hs = {cyclic(q * q * q), share(direct_product(*cyclic(q), *cyclic(q * q))),
          elementary_abelian(q, 3), modular_group(q).group, heisenberg(q).group};
  }

  // Candidates grouped by family. Within a branch-(a) family the action
  // classes are exact isomorphism classes (direct product included), so no
  // further testing is needed there; families with different Sylow types or
  // Sylow normality can never collide. Only branch-(b) members of the same
  // family still need a generic isomorphism pass.
  struct Cand {
    GroupPtr g;
    std::string family;
    bool exact;
  };
  std::vector<Cand> candidates;

  for (const GroupPtr& h : hs) {
    const std::string fam = "a:" + h->spec_tag;
    candidates.push_back({share(direct_product(*h, *cyclic(p))), fam, true});
    if (h->spec_tag.rfind("elemab:", 0) == 0) {
      // Aut(H) = GL(3,q) is too large to enumerate; rational canonical
      // representatives, deduplicated at the cyclic-subgroup level, give
      // exactly one action per conjugacy class of order-p subgroups.
      std::set<std::string> seen;
      for (const gf::Matrix& m : gf::order_p_action_representatives(3, q, p)) {
        if (!seen.insert(matrix_subgroup_key(m, p)).second) continue;
        Automorphism alpha = matrix_action_on_elemab(h, q, 3, m);
        candidates.push_back({share(semidirect_product(
                                  h, p, alpha,
                                  "sdp(" + h->spec_tag + "," + std::to_string(p) +
                                      ",matrix:" + m.to_string() + ")")),
                              fam, true});
      }
    } else {
      auto autos = enumerate_automorphisms(*h);
      for (int idx : exact_order_p_action_classes(*h, autos, p)) {
        Automorphism alpha = automorphism_from_image(h, autos[idx]);
        candidates.push_back({share(semidirect_product(
                                  h, p, alpha,
                                  "sdp(" + h->spec_tag + "," + std::to_string(p) +
                                      ",aut:" + std::to_string(idx) + ")")),
                              fam, true});
      }
    }
  }

  // Normal Sylow p branch: Z_p x| H over homomorphisms H -> Aut(Z_p),
  // whose image is the q-part of the cyclic group of order p-1.
  int t = 1;
  {
    int rest = p - 1;
    while (rest % q == 0 && t < q * q * q) {
      t *= q;
      rest /= q;
    }
  }
  if (t > 1) {
    GroupPtr zp = cyclic(p);
    GroupPtr zt = cyclic(t);
    int root = 2;
    while (true) {  // smallest primitive root mod p
      bool primitive = true;
      long long acc = 1;
      for (int e = 1; e < p - 1 && primitive; ++e) {
        acc = acc * root % p;
        if (acc == 1) primitive = false;
      }
      if (primitive) break;
      ++root;
    }
    int s = gf::pow_mod(root, (p - 1) / t, p);  // order exactly t mod p
    for (const GroupPtr& h : hs) {
      std::vector<int> gens = minimal_generating_set(*h);
      const int k = static_cast<int>(gens.size());
      // All homomorphisms H -> Z_t via generator images.
      std::vector<std::vector<uint16_t>> homs;
      std::vector<int> images(k, 0);
      long long count = 1;
      for (int i = 0; i < k; ++i) count *= t;
      for (long long code = 1; code < count; ++code) {  // skip the trivial hom
        long long c = code;
        for (int i = 0; i < k; ++i) {
          images[i] = static_cast<int>(c % t);
          c /= t;
        }
        auto phi = extend_generator_map(*h, gens, *zt, images);
        if (phi) homs.push_back(std::move(*phi));
      }
      // Precomposition with Aut(H) gives isomorphic products; keep one hom
      // per orbit. For elementary abelian H all nontrivial homs are
      // GL-equivalent.
      std::vector<std::vector<uint16_t>> reps;
      if (h->spec_tag.rfind("elemab:", 0) == 0) {
        if (!homs.empty()) reps.push_back(homs.front());
      } else {
        auto autos = enumerate_automorphisms(*h);
        std::set<std::vector<uint16_t>> visited;
        for (const auto& hom : homs) {
          if (visited.count(hom)) continue;
          reps.push_back(hom);
          for (const auto& g : autos) {
            std::vector<uint16_t> variant(hom.size());
            for (size_t x = 0; x < hom.size(); ++x) variant[x] = hom[g[x]];
            visited.insert(std::move(variant));
          }
        }
      }
      for (const auto& hom : reps) {
        std::vector<std::vector<uint16_t>> action(h->n);
        for (int x = 0; x < h->n; ++x) {
          int scale = gf::pow_mod(s, hom[x], p);
          action[x].resize(p);
          for (int v = 0; v < p; ++v)
            action[x][v] = static_cast<uint16_t>(static_cast<long long>(v) * scale % p);
        }
        std::ostringstream tag;
        tag << "sdg(cyclic:" << p << "," << h->spec_tag << ",hom:[";
        for (int i = 0; i < k; ++i) {
          if (i) tag << ",";
          tag << hom[gens[i]];
        }
        tag << "])";
        candidates.push_back(
            {share(semidirect_product_general(zp, h, action, tag.str())), "b:" + h->spec_tag,
             false});
      }
    }
  }

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Cand& a, const Cand& b) { return a.g->spec_tag < b.g->spec_tag; });
  std::vector<Cand> kept;
  for (const Cand& cand : candidates) {
    bool dup = false;
    for (const Cand& k : kept) {
      if (k.family != cand.family) continue;  // distinct Sylow structure
      if (k.exact && cand.exact) continue;    // proven distinct at class level
      if (order_profile(*k.g) == order_profile(*cand.g) && is_isomorphic(*k.g, *cand.g)) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(cand);
  }
  std::vector<GroupPtr> result;
  result.reserve(kept.size());
  for (auto& k : kept) result.push_back(k.g);
  std::sort(result.begin(), result.end(),
            [](const GroupPtr& a, const GroupPtr& b) { return a->spec_tag < b->spec_tag; });
  return result;
}

}  // namespace cltlab
