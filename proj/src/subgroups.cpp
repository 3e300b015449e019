#include "cltlab/subgroups.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <unordered_map>

#include <json.hpp>

#include "cltlab/config.hpp"
#include "cltlab/errors.hpp"
#include "cltlab/gf.hpp"

namespace cltlab {

namespace {

struct MemberHash {
  size_t operator()(const std::vector<uint16_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (uint16_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<uint16_t> conjugate_members(const FiniteGroup& g, int c,
                                        const std::vector<uint16_t>& members) {
  std::vector<uint16_t> out(members.size());
  for (size_t i = 0; i < members.size(); ++i)
    out[i] = static_cast<uint16_t>(g.conj(c, members[i]));
  std::sort(out.begin(), out.end());
  return out;
}

constexpr int kWholeGroup = -2;

// Closure of S u C. Returns kWholeGroup as soon as the size outgrows every
// proper-divisor order compatible with lcm(|S|,|C|); otherwise fills `out`.
int join_closure(const FiniteGroup& g, const std::vector<uint16_t>& s,
                 const std::vector<uint16_t>& c, const std::vector<int>& divisors,
                 std::vector<char>& in, std::vector<uint16_t>& out) {
  long long l = std::lcm(static_cast<long long>(s.size()), static_cast<long long>(c.size()));
  int limit = 0;  // largest proper divisor of n that is a multiple of l
  for (int d : divisors)
    if (d != g.n && d % l == 0) limit = std::max(limit, d);
  out.clear();
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      out.push_back(static_cast<uint16_t>(x));
    }
  };
  for (uint16_t x : s) add(x);
  for (uint16_t x : c) add(x);
  int result = 0;
  if (static_cast<int>(out.size()) > limit) {
    result = kWholeGroup;
  } else {
    for (size_t i = 0; i < out.size() && result == 0; ++i) {
      for (size_t j = 0; j < out.size(); ++j) {
        add(g.op(out[i], out[j]));
        add(g.op(out[j], out[i]));
        if (static_cast<int>(out.size()) > limit) {
          result = kWholeGroup;
          break;
        }
      }
    }
  }
  for (uint16_t x : out) in[x] = 0;  // reset scratch
  if (result == kWholeGroup) return kWholeGroup;
  std::sort(out.begin(), out.end());
  return 0;
}

}  // namespace

std::vector<int> divisors_of(int n) {
  std::vector<int> divs;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  return divs;
}

SubgroupLattice all_subgroups(const GroupPtr& gp) {
  const FiniteGroup& g = *gp;
  if (g.n > max_order()) throw TooLarge("all_subgroups: order exceeds bound");
  const std::vector<int> divisors = divisors_of(g.n);
  std::vector<int> gens = minimal_generating_set(g);
  if (gens.empty()) gens.push_back(0);

  // All distinct cyclic subgroups.
  std::unordered_map<std::vector<uint16_t>, int, MemberHash> found;
  std::vector<std::vector<uint16_t>> store;
  auto insert = [&](std::vector<uint16_t> members) -> int {
    auto it = found.find(members);
    if (it != found.end()) return -1;
    int idx = static_cast<int>(store.size());
    found.emplace(members, idx);
    store.push_back(std::move(members));
    return idx;
  };
  std::vector<std::vector<uint16_t>> cyclics;
  {
    std::unordered_map<std::vector<uint16_t>, char, MemberHash> seen;
    for (int x = 0; x < g.n; ++x) {
      std::vector<uint16_t> cyc;
      int acc = 0;
      do {
        cyc.push_back(static_cast<uint16_t>(acc));
        acc = g.op(acc, x);
      } while (acc != 0);
      std::sort(cyc.begin(), cyc.end());
      if (seen.emplace(cyc, 1).second) cyclics.push_back(std::move(cyc));
    }
  }

  // Worklist of conjugacy-class representatives; each new subgroup's orbit
  // under conjugation is expanded so the final lattice is complete.
  std::vector<int> worklist;
  auto add_with_orbit = [&](std::vector<uint16_t> members) {
    int idx = insert(std::move(members));
    if (idx < 0) return;
    worklist.push_back(idx);
    std::vector<int> orbit{idx};
    for (size_t i = 0; i < orbit.size(); ++i) {
      for (int c : gens) {
        auto img = conjugate_members(g, c, store[orbit[i]]);
        int ni = insert(std::move(img));
        if (ni >= 0) orbit.push_back(ni);
      }
    }
  };
  for (const auto& cyc : cyclics) add_with_orbit(cyc);

  std::vector<char> scratch(g.n, 0);
  std::vector<uint16_t> joined;
  std::vector<char> in_sub(g.n, 0);
  bool whole_seen = false;
  for (size_t w = 0; w < worklist.size(); ++w) {
    const std::vector<uint16_t> sub = store[worklist[w]];  // copy: store may grow
    for (uint16_t x : sub) in_sub[x] = 1;
    for (const auto& cyc : cyclics) {
      bool contained = true;
      for (uint16_t x : cyc)
        if (!in_sub[x]) {
          contained = false;
          break;
        }
      if (contained) continue;
      int r = join_closure(g, sub, cyc, divisors, scratch, joined);
      if (r == kWholeGroup) {
        whole_seen = true;
        continue;
      }
      add_with_orbit(joined);
    }
    for (uint16_t x : sub) in_sub[x] = 0;
  }
  if (whole_seen || g.n == 1) {
    std::vector<uint16_t> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    insert(std::move(all));
  }

  SubgroupLattice lat;
  lat.parent = gp;
  lat.subgroups.reserve(store.size());
  for (auto& members : store) {
    Subgroup s;
    s.parent = gp;
    s.members = std::move(members);
    lat.subgroups.push_back(std::move(s));
  }
  std::sort(lat.subgroups.begin(), lat.subgroups.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  for (const Subgroup& s : lat.subgroups) lat.by_order[s.order()]++;
  return lat;
}

namespace {

// d = p * q^i inside a group of order p * q^3: search for a q^i-subgroup of
// a Sylow q-subgroup joined with an order-p element.
bool mixed_order_subgroup_exists(const GroupPtr& gp, int p, int qi, int d) {
  const FiniteGroup& g = *gp;
  SylowInfo sq;
  {
    int q = 2;
    while (qi % q != 0) ++q;
    sq = sylow_analysis(gp, q);
  }
  FiniteGroup sq_group = subgroup_as_group(sq.subgroup);
  GroupPtr sq_ptr = std::make_shared<const FiniteGroup>(std::move(sq_group));
  SubgroupLattice sq_lat = all_subgroups(sq_ptr);
  std::vector<int> porders;
  for (int x = 0; x < g.n; ++x)
    if (element_order(g, x) == p) porders.push_back(x);
  std::vector<char> in_v(g.n, 0);
  std::vector<char> scratch(g.n, 0);
  std::vector<uint16_t> joined;
  const std::vector<int> divisors = divisors_of(g.n);
  for (const Subgroup& vs : sq_lat.subgroups) {
    if (vs.order() != qi) continue;
    std::vector<uint16_t> v(vs.members.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = sq.subgroup.members[vs.members[i]];
    std::sort(v.begin(), v.end());
    if (sq.normal) {
      // Inside a normal Sylow q every order-pq^i subgroup is V x| <x>, so an
      // invariance scan is exhaustive.
      for (uint16_t x : v) in_v[x] = 1;
      bool hit = false;
      for (int x : porders) {
        bool invariant = true;
        for (uint16_t m : v)
          if (!in_v[g.conj(x, m)]) {
            invariant = false;
            break;
          }
        if (invariant) {
          hit = true;
          break;
        }
      }
      for (uint16_t x : v) in_v[x] = 0;
      if (hit) return true;
    } else {
      for (int x : porders) {
        std::vector<uint16_t> xs{static_cast<uint16_t>(x)};
        int r = join_closure(g, v, xs, divisors, scratch, joined);
        if (r != kWholeGroup && static_cast<int>(joined.size()) == d) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool targeted_has_subgroup_of_order(const GroupPtr& gp, int d) {
  const FiniteGroup& g = *gp;
  if (d <= 0 || g.n % d != 0)
    throw InvalidArgument("has_subgroup_of_order: d must divide the group order");
  if (d == 1 || d == g.n) return true;
  // Factor d.
  std::vector<std::pair<int, int>> factors;  // (prime, exponent)
  {
    int rest = d;
    for (int r = 2; r <= rest; ++r) {
      if (rest % r) continue;
      int e = 0;
      while (rest % r == 0) {
        rest /= r;
        ++e;
      }
      factors.emplace_back(r, e);
    }
  }
  if (factors.size() == 1) {
    // Prime power: take it inside a Sylow subgroup (r-groups have subgroups
    // of every dividing order; verified on the Sylow lattice).
    SylowInfo s = sylow_analysis(gp, factors[0].first);
    GroupPtr sp = std::make_shared<const FiniteGroup>(subgroup_as_group(s.subgroup));
    return all_subgroups(sp).contains_order(d);
  }
  if (factors.size() == 2) {
    auto [r1, e1] = factors[0];
    auto [r2, e2] = factors[1];
    if (e1 == 1 && g.n % r1 == 0 && (g.n / d) % r1 != 0)
      return mixed_order_subgroup_exists(gp, r1, d / r1, d);
    if (e2 == 1 && g.n % r2 == 0 && (g.n / d) % r2 != 0)
      return mixed_order_subgroup_exists(gp, r2, d / r2, d);
  }
  // Shape outside the p*q^i pattern: fall back to the lattice.
  return all_subgroups(gp).contains_order(d);
}

bool has_subgroup_of_order(const GroupPtr& g, int d, const SubgroupLattice* lat) {
  if (lat) {
    if (d <= 0 || g->n % d != 0)
      throw InvalidArgument("has_subgroup_of_order: d must divide the group order");
    return lat->contains_order(d);
  }
  return targeted_has_subgroup_of_order(g, d);
}

SylowInfo sylow_analysis(const GroupPtr& gp, int r) {
  const FiniteGroup& g = *gp;
  if (!gf::is_prime(r) || g.n % r != 0)
    throw InvalidArgument("sylow_analysis: r must be a prime dividing |G|");
  int full = 1;
  while (g.n % (full * r) == 0) full *= r;
  // Seed: lowest-index element of order r.
  int seed = -1;
  for (int x = 1; x < g.n && seed < 0; ++x) {
    int ord = element_order(g, x);
    if (ord % r == 0) seed = power(g, x, ord / r);
  }
  if (seed < 0) throw Error("sylow_analysis: Cauchy element missing");
  std::vector<uint16_t> members = generated_subgroup(g, {static_cast<uint16_t>(seed)});
  while (static_cast<int>(members.size()) < full) {
    Subgroup s;
    s.parent = gp;
    s.members = members;
    Subgroup n = normalizer(gp, s);
    std::vector<char> in(g.n, 0);
    for (uint16_t x : members) in[x] = 1;
    int pick = -1;
    for (uint16_t y : n.members) {
      if (in[y]) continue;
      if (in[power(g, y, r)]) {
        pick = y;
        break;
      }
    }
    if (pick < 0) throw Error("sylow_analysis: normalizer extension failed");
    // S <y> as a union of cosets S y^i.
    std::vector<uint16_t> bigger;
    bigger.reserve(members.size() * r);
    int acc = 0;
    for (int i = 0; i < r; ++i) {
      for (uint16_t m : members) bigger.push_back(static_cast<uint16_t>(g.op(m, acc)));
      acc = g.op(acc, pick);
    }
    std::sort(bigger.begin(), bigger.end());
    bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
    if (static_cast<int>(bigger.size()) != static_cast<int>(members.size()) * r)
      throw Error("sylow_analysis: coset extension has wrong size");
    members = std::move(bigger);
  }
  SylowInfo info;
  info.subgroup.parent = gp;
  info.subgroup.members = std::move(members);
  Subgroup norm = normalizer(gp, info.subgroup);
  info.n_r = g.n / norm.order();
  info.normal = info.n_r == 1;
  return info;
}

Subgroup normalizer(const GroupPtr& gp, const Subgroup& h) {
  const FiniteGroup& g = *gp;
  std::vector<char> in(g.n, 0);
  for (uint16_t x : h.members) {
    if (x >= g.n) throw InvalidArgument("normalizer: subgroup not inside the group");
    in[x] = 1;
  }
  Subgroup result;
  result.parent = gp;
  for (int c = 0; c < g.n; ++c) {
    bool ok = true;
    for (uint16_t x : h.members)
      if (!in[g.conj(c, x)]) {
        ok = false;
        break;
      }
    if (ok) result.members.push_back(static_cast<uint16_t>(c));
  }
  return result;
}

int count_subgroups_of_order(const GroupPtr& g, int m, const SubgroupLattice* lat) {
  if (m <= 0 || g->n % m != 0)
    throw InvalidArgument("count_subgroups_of_order: m must divide the group order");
  if (lat) {
    auto it = lat->by_order.find(m);
    return it == lat->by_order.end() ? 0 : it->second;
  }
  SubgroupLattice full = all_subgroups(g);
  auto it = full.by_order.find(m);
  return it == full.by_order.end() ? 0 : it->second;
}

std::vector<std::vector<Subgroup>> conjugacy_classes_of_subgroups(const GroupPtr& gp, int m,
                                                                  const SubgroupLattice* lat) {
  if (m <= 0 || gp->n % m != 0)
    throw InvalidArgument("conjugacy_classes_of_subgroups: m must divide the group order");
  SubgroupLattice own;
  if (!lat) {
    own = all_subgroups(gp);
    lat = &own;
  }
  const FiniteGroup& g = *gp;
  std::unordered_map<std::vector<uint16_t>, int, MemberHash> index;
  std::vector<const Subgroup*> of_order;
  for (const Subgroup& s : lat->subgroups)
    if (s.order() == m) {
      index.emplace(s.members, static_cast<int>(of_order.size()));
      of_order.push_back(&s);
    }
  std::vector<int> gens = minimal_generating_set(g);
  if (gens.empty()) gens.push_back(0);
  std::vector<char> visited(of_order.size(), 0);
  std::vector<std::vector<Subgroup>> classes;
  for (size_t i = 0; i < of_order.size(); ++i) {
    if (visited[i]) continue;
    std::vector<int> orbit{static_cast<int>(i)};
    visited[i] = 1;
    for (size_t k = 0; k < orbit.size(); ++k) {
      for (int c : gens) {
        auto img = conjugate_members(g, c, of_order[orbit[k]]->members);
        auto it = index.find(img);
        if (it == index.end()) throw Error("conjugacy_classes: lattice not conjugation-closed");
        if (!visited[it->second]) {
          visited[it->second] = 1;
          orbit.push_back(it->second);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    std::vector<Subgroup> cls;
    for (int idx : orbit) cls.push_back(*of_order[idx]);
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup frattini_subgroup(const GroupPtr& gp, const SubgroupLattice* lat) {
  SubgroupLattice own;
  if (!lat) {
    own = all_subgroups(gp);
    lat = &own;
  }
  const int n = gp->n;
  // Maximal = proper and not contained in a larger proper subgroup.
  std::vector<const Subgroup*> proper;
  for (const Subgroup& s : lat->subgroups)
    if (s.order() < n) proper.push_back(&s);
  std::vector<char> intersect(n, 1);
  bool any_maximal = false;
  for (const Subgroup* s : proper) {
    bool maximal = true;
    for (const Subgroup* t : proper) {
      if (t->order() <= s->order()) continue;
      if (std::includes(t->members.begin(), t->members.end(), s->members.begin(),
                        s->members.end())) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    any_maximal = true;
    std::vector<char> in(n, 0);
    for (uint16_t x : s->members) in[x] = 1;
    for (int x = 0; x < n; ++x) intersect[x] = intersect[x] && in[x];
  }
  Subgroup phi;
  phi.parent = gp;
  if (!any_maximal) {
    phi.members = whole_group(gp).members;  // trivial group: Phi(G) = G
    return phi;
  }
  for (int x = 0; x < n; ++x)
    if (intersect[x]) phi.members.push_back(static_cast<uint16_t>(x));
  return phi;
}

CltReport clt_report(const GroupPtr& gp, bool force_lattice, const SubgroupLattice* lat) {
  auto start = std::chrono::steady_clock::now();
  const FiniteGroup& g = *gp;
  CltReport rep;
  rep.spec_tag = g.spec_tag;
  rep.order = g.n;
  rep.divisors = divisors_of(g.n);
  SubgroupLattice own;
  if (!lat && (force_lattice || g.n <= lattice_threshold())) {
    own = all_subgroups(gp);
    lat = &own;
  }
  rep.used_lattice = lat != nullptr;
  for (int d : rep.divisors) {
    bool present = lat ? lat->contains_order(d) : targeted_has_subgroup_of_order(gp, d);
    (present ? rep.present_orders : rep.missing_orders).push_back(d);
  }
  rep.is_clt = rep.missing_orders.empty();
  {
    int rest = g.n;
    for (int r = 2; r <= rest; ++r) {
      if (rest % r) continue;
      int full = 1;
      while (rest % r == 0) {
        rest /= r;
        full *= r;
      }
      SylowRecord rec;
      rec.prime = r;
      if (lat) {
        auto it = lat->by_order.find(full);
        rec.n_r = it == lat->by_order.end() ? 0 : it->second;
        rec.normal = rec.n_r == 1;
      } else {
        SylowInfo info = sylow_analysis(gp, r);
        rec.n_r = info.n_r;
        rec.normal = info.normal;
      }
      rep.sylow.push_back(rec);
    }
  }
  rep.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

MSetReport verify_m_set_claim(const GroupPtr& gp, int p, int q) {
  const FiniteGroup& g = *gp;
  if (!gf::is_prime(p) || !gf::is_prime(q) || p == q)
    throw InvalidArgument("verify_m_set_claim: p, q must be distinct primes");
  if (g.n != p * q * q * q)
    throw InvalidArgument("verify_m_set_claim: group order must be p*q^3");
  CltReport rep = clt_report(gp);
  if (rep.is_clt)
    throw InvalidArgument("verify_m_set_claim: group is CLT, remark does not apply");
  SylowInfo sq = sylow_analysis(gp, q);
  if (!sq.normal)
    throw InvalidArgument("verify_m_set_claim: Sylow q-subgroup is not normal");
  // M = order-q^2 subgroups of S_q, lifted to G coordinates.
  GroupPtr sq_ptr = std::make_shared<const FiniteGroup>(subgroup_as_group(sq.subgroup));
  SubgroupLattice sq_lat = all_subgroups(sq_ptr);
  std::vector<std::vector<uint16_t>> mset;
  for (const Subgroup& vs : sq_lat.subgroups) {
    if (vs.order() != q * q) continue;
    std::vector<uint16_t> lifted(vs.members.size());
    for (size_t i = 0; i < lifted.size(); ++i) lifted[i] = sq.subgroup.members[vs.members[i]];
    std::sort(lifted.begin(), lifted.end());
    mset.push_back(std::move(lifted));
  }
  MSetReport out;
  out.m_size = static_cast<int>(mset.size());
  out.p_divides_m = out.m_size % p == 0;
  // Conjugation orbits within M (stays inside S_q because S_q is normal).
  std::unordered_map<std::vector<uint16_t>, int, MemberHash> index;
  for (size_t i = 0; i < mset.size(); ++i) index.emplace(mset[i], static_cast<int>(i));
  std::vector<int> gens = minimal_generating_set(g);
  std::vector<char> visited(mset.size(), 0);
  out.normalizers_equal_sylow_q = true;
  for (size_t i = 0; i < mset.size(); ++i) {
    if (visited[i]) continue;
    ++out.class_count;
    std::vector<int> orbit{static_cast<int>(i)};
    visited[i] = 1;
    for (size_t k = 0; k < orbit.size(); ++k)
      for (int c : gens) {
        auto img = conjugate_members(g, c, mset[orbit[k]]);
        auto it = index.find(img);
        if (it == index.end()) throw Error("verify_m_set_claim: orbit escaped the Sylow subgroup");
        if (!visited[it->second]) {
          visited[it->second] = 1;
          orbit.push_back(it->second);
        }
      }
    Subgroup rep_sub;
    rep_sub.parent = gp;
    rep_sub.members = mset[i];
    Subgroup norm = normalizer(gp, rep_sub);
    out.normalizer_orders.push_back(norm.order());
    if (norm.members != sq.subgroup.members) out.normalizers_equal_sylow_q = false;
  }
  return out;
}

namespace {

std::string cache_filename(const std::string& spec_tag) {
  unsigned long long h = 1469598103934665603ull;
  for (char c : spec_tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", h);
  return std::string("lattice-") + buf + ".json";
}

}  // namespace

bool save_lattice_cache(const SubgroupLattice& lat, const std::string& dir) {
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["spec_tag"] = lat.parent->spec_tag;
  doc["order"] = lat.parent->n;
  nlohmann::ordered_json subs = nlohmann::ordered_json::array();
  for (const Subgroup& s : lat.subgroups) {
    nlohmann::ordered_json members = nlohmann::ordered_json::array();
    for (uint16_t x : s.members) members.push_back(x);
    subs.push_back(std::move(members));
  }
  doc["subgroups"] = std::move(subs);
  std::ofstream out(dir + "/" + cache_filename(lat.parent->spec_tag));
  if (!out) return false;
  out << doc.dump();
  return out.good();
}

std::optional<SubgroupLattice> load_lattice_cache(const GroupPtr& g, const std::string& dir) {
  std::ifstream in(dir + "/" + cache_filename(g->spec_tag));
  if (!in) return std::nullopt;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
  if (!doc.is_object() || doc.value("version", 0) != 1) return std::nullopt;
  if (doc.value("spec_tag", std::string()) != g->spec_tag) return std::nullopt;
  if (doc.value("order", -1) != g->n) return std::nullopt;
  SubgroupLattice lat;
  lat.parent = g;
  for (const auto& members : doc["subgroups"]) {
    Subgroup s;
    s.parent = g;
    for (const auto& x : members) {
      int v = x.get<int>();
      if (v < 0 || v >= g->n) return std::nullopt;
      s.members.push_back(static_cast<uint16_t>(v));
    }
    lat.subgroups.push_back(std::move(s));
  }
  for (const Subgroup& s : lat.subgroups) lat.by_order[s.order()]++;
  return lat;
}

}  // namespace cltlab
