#include "cltlab/gf.hpp"

#include <algorithm>
#include <sstream>

#include "cltlab/errors.hpp"

namespace cltlab::gf {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int add(int a, int b, int q) { return (a + b) % q; }
int sub(int a, int b, int q) { return ((a - b) % q + q) % q; }
int mul(int a, int b, int q) {
  return static_cast<int>(static_cast<long long>(a) * b % q);
}

int pow_mod(int a, long long e, int q) {
  long long base = ((a % q) + q) % q, acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return static_cast<int>(acc);
}

int inv(int a, int q) {
  a = ((a % q) + q) % q;
  if (a == 0) throw InvalidArgument("gf::inv: zero has no inverse");
  return pow_mod(a, q - 2, q);
}

Matrix::Matrix(int dim_, int q_) : dim(dim_), q(q_), entries(dim_ * dim_, 0) {
  if (dim < 1) throw InvalidArgument("Matrix: dim must be >= 1");
  if (!is_prime(q)) throw InvalidArgument("Matrix: modulus must be prime");
}

bool Matrix::operator<(const Matrix& other) const {
  if (dim != other.dim) return dim < other.dim;
  if (q != other.q) return q < other.q;
  return entries < other.entries;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < dim; ++r) {
    if (r) os << ";";
    for (int c = 0; c < dim; ++c) {
      if (c) os << ",";
      os << at(r, c);
    }
  }
  os << "]";
  return os.str();
}

Matrix identity(int dim, int q) {
  Matrix m(dim, q);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.dim != b.dim || a.q != b.q)
    throw InvalidArgument("mat_mul: dimension or modulus mismatch");
  Matrix c(a.dim, a.q);
  for (int r = 0; r < a.dim; ++r)
    for (int k = 0; k < a.dim; ++k) {
      int v = a.at(r, k);
      if (!v) continue;
      for (int j = 0; j < a.dim; ++j)
        c.at(r, j) = (c.at(r, j) + v * b.at(k, j)) % a.q;
    }
  return c;
}

Matrix mat_pow(const Matrix& a, long long e) {
  Matrix acc = identity(a.dim, a.q), base = a;
  while (e > 0) {
    if (e & 1) acc = mat_mul(acc, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return acc;
}

int mat_det(const Matrix& a) {
  // Cofactor expansion; dimensions in this project stay tiny.
  if (a.dim == 1) return a.at(0, 0);
  if (a.dim == 2)
    return sub(mul(a.at(0, 0), a.at(1, 1), a.q), mul(a.at(0, 1), a.at(1, 0), a.q), a.q);
  int det = 0;
  for (int c = 0; c < a.dim; ++c) {
    Matrix minor(a.dim - 1, a.q);
    for (int r = 1; r < a.dim; ++r) {
      int mc = 0;
      for (int cc = 0; cc < a.dim; ++cc) {
        if (cc == c) continue;
        minor.at(r - 1, mc++) = a.at(r, cc);
      }
    }
    int term = mul(a.at(0, c), mat_det(minor), a.q);
    det = (c % 2 == 0) ? add(det, term, a.q) : sub(det, term, a.q);
  }
  return det;
}

bool is_invertible(const Matrix& a) { return mat_det(a) != 0; }

unsigned long long gl_order(int dim, int q) {
  unsigned long long qd = 1;
  for (int i = 0; i < dim; ++i) qd *= static_cast<unsigned long long>(q);
  unsigned long long total = 1, qi = 1;
  for (int i = 0; i < dim; ++i) {
    total *= qd - qi;
    qi *= static_cast<unsigned long long>(q);
  }
  return total;
}

long long mat_order(const Matrix& a) {
  if (!is_invertible(a)) throw NoSuchElement("mat_order: singular matrix");
  Matrix id = identity(a.dim, a.q), acc = a;
  long long bound = static_cast<long long>(gl_order(a.dim, a.q));
  for (long long k = 1; k <= bound; ++k) {
    if (acc == id) return k;
    acc = mat_mul(acc, a);
  }
  throw Error("mat_order: order exceeds |GL|, table corrupt");
}

namespace {

void poly_normalize(Poly& f) {
  while (f.coeffs.size() > 1 && f.coeffs.back() == 0) f.coeffs.pop_back();
}

// Remainder of dividend / divisor, divisor monic.
Poly poly_mod(const Poly& dividend, const Poly& divisor) {
  Poly r = dividend;
  int dq = divisor.q;
  while (r.degree() >= divisor.degree() && !(r.coeffs.size() == 1 && r.coeffs[0] == 0)) {
    int shift = r.degree() - divisor.degree();
    int lead = r.coeffs.back();
    for (int i = 0; i <= divisor.degree(); ++i) {
      int idx = i + shift;
      r.coeffs[idx] = sub(r.coeffs[idx], mul(lead, divisor.coeffs[i], dq), dq);
    }
    poly_normalize(r);
    if (r.degree() == 0 && r.coeffs[0] == 0) break;
  }
  return r;
}

}  // namespace

Poly poly_xp_minus_1(int p, int q) {
  Poly f;
  f.q = q;
  f.coeffs.assign(p + 1, 0);
  f.coeffs[0] = q - 1;
  f.coeffs[p] = 1;
  return f;
}

bool poly_divides(const Poly& divisor, const Poly& dividend) {
  Poly r = poly_mod(dividend, divisor);
  return r.coeffs.size() == 1 && r.coeffs[0] == 0;
}

bool poly_irreducible_deg_le3(const Poly& f) {
  int d = f.degree();
  if (d > 3) throw InvalidArgument("irreducibility test limited to degree 3");
  if (d <= 0) return false;
  if (d == 1) return true;
  // Degree 2 or 3: irreducible iff no roots in GF(q).
  for (int x = 0; x < f.q; ++x) {
    long long v = 0, xp = 1;
    for (int c : f.coeffs) {
      v = (v + c * xp) % f.q;
      xp = xp * x % f.q;
    }
    if (v == 0) return false;
  }
  return true;
}

std::vector<Poly> factor_xp_minus_1(int p, int q) {
  Poly target = poly_xp_minus_1(p, q);
  std::vector<Poly> factors;
  Poly rem = target;
  // Trial division by monic polynomials of degree 1..3 in lex coefficient
  // order, repeating a factor while it divides.
  for (int deg = 1; deg <= 3 && rem.degree() > 0; ++deg) {
    long long count = 1;
    for (int i = 0; i < deg; ++i) count *= q;
    for (long long code = 0; code < count && rem.degree() > 0; ++code) {
      Poly cand;
      cand.q = q;
      cand.coeffs.assign(deg + 1, 0);
      long long c = code;
      for (int i = 0; i < deg; ++i) {
        cand.coeffs[i] = static_cast<int>(c % q);
        c /= q;
      }
      cand.coeffs[deg] = 1;
      if (!poly_irreducible_deg_le3(cand)) continue;
      while (rem.degree() >= deg && poly_divides(cand, rem)) {
        factors.push_back(cand);
        // rem /= cand
        Poly quotient;
        quotient.q = q;
        quotient.coeffs.assign(rem.degree() - deg + 1, 0);
        Poly cur = rem;
        for (int sh = rem.degree() - deg; sh >= 0; --sh) {
          int lead = cur.degree() == sh + deg ? cur.coeffs.back() : 0;
          quotient.coeffs[sh] = lead;
          if (lead) {
            for (int i = 0; i <= deg; ++i)
              cur.coeffs[i + sh] = sub(cur.coeffs[i + sh], mul(lead, cand.coeffs[i], q), q);
          }
          poly_normalize(cur);
        }
        poly_normalize(quotient);
        rem = quotient;
      }
    }
  }
  if (rem.degree() > 0)
    throw TooLarge("factor_xp_minus_1: factor of degree > 3 required");
  return factors;
}

Matrix companion(const Poly& f) {
  int d = f.degree();
  Matrix m(d, f.q);
  for (int r = 1; r < d; ++r) m.at(r, r - 1) = 1;
  for (int r = 0; r < d; ++r) m.at(r, d - 1) = sub(0, f.coeffs[r], f.q);
  return m;
}

Matrix block_diag(const std::vector<Matrix>& blocks, int q) {
  int dim = 0;
  for (const auto& b : blocks) dim += b.dim;
  Matrix m(dim, q);
  int off = 0;
  for (const auto& b : blocks) {
    for (int r = 0; r < b.dim; ++r)
      for (int c = 0; c < b.dim; ++c) m.at(off + r, off + c) = b.at(r, c);
    off += b.dim;
  }
  return m;
}

Matrix find_gl_element_of_order(int dim, int q, int p) {
  if (!is_prime(q) || !is_prime(p))
    throw InvalidArgument("find_gl_element_of_order: p, q must be prime");
  if (p == q) {
    // Unipotent route: a 2x2 Jordan block has order q in any characteristic.
    if (dim < 2) throw NoSuchElement("no element of order q in GL(1,q)");
    Matrix jordan = identity(2, q);
    jordan.at(0, 1) = 1;
    std::vector<Matrix> blocks{jordan};
    if (dim > 2) blocks.push_back(identity(dim - 2, q));
    return block_diag(blocks, q);
  }
  // Multiplicative order of q mod p = degree of the irreducible factors of
  // (x^p - 1)/(x - 1) over GF(q).
  int d = 1;
  {
    int acc = q % p;
    while (acc != 1) {
      acc = static_cast<int>(static_cast<long long>(acc) * q % p);
      ++d;
    }
  }
  if (d > dim)
    throw NoSuchElement("find_gl_element_of_order: p does not divide |GL(dim,q)|");
  for (const Poly& f : factor_xp_minus_1(p, q)) {
    if (f.degree() != d) continue;
    // Skip x - 1, whose companion is the identity block.
    if (d == 1 && f.coeffs[0] == q - 1) continue;
    std::vector<Matrix> blocks{companion(f)};
    if (dim > d) blocks.push_back(identity(dim - d, q));
    return block_diag(blocks, q);
  }
  throw NoSuchElement("find_gl_element_of_order: no usable factor");
}

Matrix find_sl2_element_of_order(int q, int p) {
  if (!is_prime(q) || !is_prime(p))
    throw InvalidArgument("find_sl2_element_of_order: p, q must be prime");
  // Row-major exhaustive scan of SL(2,q); first hit is the canonical result.
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          if (sub(mul(a, d, q), mul(b, c, q), q) != 1) continue;
          Matrix m(2, q);
          m.at(0, 0) = a;
          m.at(0, 1) = b;
          m.at(1, 0) = c;
          m.at(1, 1) = d;
          if (mat_order(m) == p) return m;
        }
  throw NoSuchElement("find_sl2_element_of_order: no det-1 element of order p");
}

std::vector<Matrix> order_p_action_representatives(int dim, int q, int p) {
  if (dim > 3) throw InvalidArgument("order_p_action_representatives: dim <= 3 only");
  if (p == q) throw InvalidArgument("order_p_action_representatives: requires p != q");
  int d = 1;
  {
    int acc = q % p;
    while (acc != 1) {
      acc = static_cast<int>(static_cast<long long>(acc) * q % p);
      ++d;
    }
  }
  if (d > dim) return {};
  std::vector<Poly> factors = factor_xp_minus_1(p, q);
  std::sort(factors.begin(), factors.end(),
            [](const Poly& a, const Poly& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              std::vector<int> ra(a.coeffs.rbegin(), a.coeffs.rend());
              std::vector<int> rb(b.coeffs.rbegin(), b.coeffs.rend());
              return ra < rb;
            });
  factors.erase(std::unique(factors.begin(), factors.end(),
                            [](const Poly& a, const Poly& b) { return a.coeffs == b.coeffs; }),
                factors.end());
  // Multisets of factor indices with total degree dim; a semisimple matrix
  // with squarefree minimal polynomial dividing x^p - 1 is determined up to
  // conjugacy by this multiset. Exclude the identity-only multiset.
  int nf = static_cast<int>(factors.size());
  std::vector<Matrix> reps;
  std::vector<int> pick;
  auto emit = [&]() {
    bool nontrivial = false;
    std::vector<Matrix> blocks;
    for (int idx : pick) {
      const Poly& f = factors[idx];
      if (!(f.degree() == 1 && f.coeffs[0] == q - 1)) nontrivial = true;
      blocks.push_back(companion(f));
    }
    if (nontrivial) reps.push_back(block_diag(blocks, q));
  };
  // Non-decreasing index sequences = multisets.
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int i = start; i < nf; ++i) {
      if (factors[i].degree() > remaining) continue;
      pick.push_back(i);
      self(self, i, remaining - factors[i].degree());
      pick.pop_back();
    }
  };
  rec(rec, 0, dim);
  return reps;
}

}  // namespace cltlab::gf
