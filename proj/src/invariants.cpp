#include "conjtop/invariants.hpp"

#include "conjtop/errors.hpp"

namespace conjtop {

namespace {

void check_gram(const Gf2Matrix& gram, std::size_t values) {
  if (gram.rows() != gram.cols()) throw InputError("pairing matrix is not square");
  if (!gram.is_symmetric()) throw InputError("pairing matrix is not symmetric");
  if (values != gram.rows())
    throw InputError("form has " + std::to_string(values) + " basis values for dimension " +
                     std::to_string(gram.rows()));
}

void check_argument(std::size_t dim, const BitVector& x) {
  if (x.size() != dim)
    throw InputError("class has length " + std::to_string(x.size()) + ", form has dimension " + std::to_string(dim));
}

// Sum over i < j of x_i x_j (e_i . e_j), modulo 2.
int cross_terms(const Gf2Matrix& gram, const BitVector& x) {
  const auto idx = x.indices();
  int s = 0;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) s ^= gram.get(idx[a], idx[b]) ? 1 : 0;
  return s;
}

Gf2Matrix block_sum(const Gf2Matrix& a, const Gf2Matrix& b) {
  const std::size_t n = a.rows(), m = b.rows();
  Gf2Matrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.get(i, j)) g.set(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (b.get(i, j)) g.set(n + i, n + j);
  return g;
}

Gf2Matrix changed_gram(const Gf2Matrix& gram, const Gf2Matrix& change) {
  if (change.rows() != gram.rows() || change.cols() != gram.rows() || !gf2_inverse(change))
    throw InputError("basis change must be an invertible square matrix");
  return change * gram * change.transpose();
}

}  // namespace

QForm2::QForm2(Gf2Matrix g, BitVector v) : gram(std::move(g)), values(std::move(v)) {
  check_gram(gram, values.size());
  if (gram.diagonal().any()) throw InputError("pairing is not alternating; the Z/2 quadratic law is inconsistent");
}

QForm4::QForm4(Gf2Matrix g, std::vector<int> v) : gram(std::move(g)), values(std::move(v)) {
  check_gram(gram, values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = ((values[i] % 4) + 4) % 4;
    if ((values[i] % 2 == 1) != gram.get(i, i))
      throw InputError("parity condition violated at basis class " + std::to_string(i) +
                       ": q mod 2 must equal the self-intersection");
  }
}

int evaluate_q2(const QForm2& q, const BitVector& x) {
  check_argument(q.dimension(), x);
  return (x.dot(q.values) ? 1 : 0) ^ cross_terms(q.gram, x);
}

int evaluate_q4(const QForm4& q, const BitVector& x) {
  check_argument(q.dimension(), x);
  int s = 0;
  for (auto i : x.indices()) s += q.values[i];
  return (s + 2 * cross_terms(q.gram, x)) % 4;
}

std::vector<std::pair<BitVector, BitVector>> symplectic_basis(const Gf2Matrix& gram) {
  const std::size_t n = gram.rows();
  if (gram.cols() != n || !gram.is_symmetric() || gram.diagonal().any())
    throw InputError("symplectic basis needs an alternating pairing");
  auto pair = [&](const BitVector& x, const BitVector& y) { return x.dot(gram.apply(y)); };
  std::vector<BitVector> pool;
  for (std::size_t i = 0; i < n; ++i) pool.push_back(BitVector::unit(n, i));
  std::vector<std::pair<BitVector, BitVector>> out;
  while (!pool.empty()) {
    const BitVector a = pool.front();
    std::size_t partner = pool.size();
    for (std::size_t j = 1; j < pool.size() && partner == pool.size(); ++j)
      if (pair(a, pool[j])) partner = j;
    if (partner == pool.size()) throw InputError("pairing is degenerate; kernel contains (" + a.to_string() + ")");
    const BitVector b = pool[partner];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
    pool.erase(pool.begin());
    for (auto& v : pool) {
      // Project off span{a, b}: v + (v.b) a + (v.a) b.
      const bool vb = pair(v, b), va = pair(v, a);
      if (vb) v ^= a;
      if (va) v ^= b;
    }
    out.emplace_back(a, b);
  }
  return out;
}

int arf(const QForm2& q) {
  int s = 0;
  for (const auto& [a, b] : symplectic_basis(q.gram)) s ^= evaluate_q2(q, a) & evaluate_q2(q, b);
  return s;
}

std::pair<long long, long long> gauss_sum(const QForm4& q) {
  const std::size_t n = q.dimension();
  if (n > 24) throw InputError("Gauss sum is limited to dimension 24");
  long long count[4] = {0, 0, 0, 0};
  BitVector x(n);
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i)
      if (((mask >> i) & 1ULL) != static_cast<unsigned long long>(x.get(i))) x.flip(i);
    ++count[evaluate_q4(q, x)];
  }
  return {count[0] - count[2], count[1] - count[3]};
}

int brown(const QForm4& q) {
  const std::size_t n = q.dimension();
  const auto [re, im] = gauss_sum(q);
  if (re == 0 && im == 0) throw InputError("Gauss sum vanishes; input is not a nondegenerate form");
  if (re * re + im * im != (1LL << n))
    throw InputError("Gauss sum has the wrong magnitude; the pairing is degenerate");
  // (sqrt 2)^n zeta_8^B is 2^(n/2) i^(B/2) for even n and 2^((n-1)/2) (1+i) i^((B-1)/2) for odd n.
  const long long scale = 1LL << (n / 2);
  for (int b = 0; b < 8; ++b) {
    long long cr = 0, ci = 0;
    if (n % 2 == 0) {
      if (b % 2) continue;
      const int k = b / 2;
      cr = k == 0 ? scale : k == 2 ? -scale : 0;
      ci = k == 1 ? scale : k == 3 ? -scale : 0;
    } else {
      if (b % 2 == 0) continue;
      const int k = (b - 1) / 2;
      // (1+i) i^k
      const long long r[4] = {1, -1, -1, 1}, i[4] = {1, 1, -1, -1};
      cr = scale * r[k];
      ci = scale * i[k];
    }
    if (cr == re && ci == im) return b;
  }
  throw ModelIntegrityError("Gauss sum does not have the argument of an eighth root of unity");
}

QForm2 direct_sum(const QForm2& a, const QForm2& b) {
  std::vector<int> bits = a.values.bits();
  for (int v : b.values.bits()) bits.push_back(v);
  return QForm2(block_sum(a.gram, b.gram), BitVector::from_bits(bits));
}

QForm4 direct_sum(const QForm4& a, const QForm4& b) {
  std::vector<int> vals = a.values;
  vals.insert(vals.end(), b.values.begin(), b.values.end());
  return QForm4(block_sum(a.gram, b.gram), vals);
}

QForm2 change_basis(const QForm2& q, const Gf2Matrix& change) {
  Gf2Matrix g = changed_gram(q.gram, change);
  BitVector v(q.dimension());
  for (std::size_t i = 0; i < q.dimension(); ++i)
    if (evaluate_q2(q, change.row(i))) v.set(i);
  return QForm2(std::move(g), std::move(v));
}

QForm4 change_basis(const QForm4& q, const Gf2Matrix& change) {
  Gf2Matrix g = changed_gram(q.gram, change);
  std::vector<int> v(q.dimension());
  for (std::size_t i = 0; i < q.dimension(); ++i) v[i] = evaluate_q4(q, change.row(i));
  return QForm4(std::move(g), std::move(v));
}

void validate(const LoopData& d) {
  if (d.k < 0) throw InputError("loop count is negative");
  if (d.lambda.size() != static_cast<std::size_t>(d.k))
    throw InputError("expected " + std::to_string(d.k) + " linking values, got " + std::to_string(d.lambda.size()));
  for (int l : d.lambda)
    if (l != 0 && l != 1) throw InputError("linking values are taken modulo 2 and must be 0 or 1");
  if (d.rc_intersections < 0) throw InputError("intersection count is negative");
}

int spin_value_from_loops(const LoopData& d) {
  validate(d);
  int s = d.k;
  for (int l : d.lambda) s += l;
  return s % 2;
}

int pin_value_from_loops(const LoopData& d) {
  validate(d);
  long long s = 2LL * d.k + d.rc_intersections;
  for (int l : d.lambda) s += 2 * l;
  return static_cast<int>(s % 4);
}

std::variant<QForm2, QForm4> qform_from_loop_table(FormKind kind, const Gf2Matrix& gram,
                                                   const std::vector<LoopData>& basis_entries,
                                                   const std::vector<RedundantEntry>& redundant) {
  if (basis_entries.size() != gram.rows())
    throw InputError("loop table needs one entry per basis class (" + std::to_string(gram.rows()) + ")");
  if (kind == FormKind::Spin) {
    BitVector v(gram.rows());
    for (std::size_t i = 0; i < basis_entries.size(); ++i)
      if (spin_value_from_loops(basis_entries[i])) v.set(i);
    QForm2 q(gram, v);
    for (const auto& r : redundant)
      if (evaluate_q2(q, r.cls) != spin_value_from_loops(r.loops))
        throw InputError("loop data for class (" + r.cls.to_string() + ") contradicts the quadratic law");
    return q;
  }
  std::vector<int> v;
  for (const auto& e : basis_entries) v.push_back(pin_value_from_loops(e));
  QForm4 q(gram, v);
  for (const auto& r : redundant)
    if (evaluate_q4(q, r.cls) != pin_value_from_loops(r.loops))
      throw InputError("loop data for class (" + r.cls.to_string() + ") contradicts the quadratic law");
  return q;
}

}  // namespace conjtop
