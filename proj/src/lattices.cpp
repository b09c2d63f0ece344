#include "conjtop/lattices.hpp"

#include "conjtop/errors.hpp"

namespace conjtop {

namespace {

IntVector scaled(const IntVector& v, const Integer& s) {
  IntVector out(v);
  for (auto& x : out) x *= s;
  return out;
}

}  // namespace

Integer IntegerLattice::pairing(const IntVector& x, const IntVector& y) const {
  if (x.size() != rank || y.size() != rank) throw InputError("class length does not match the lattice rank");
  const IntVector gy = gram.apply(y);
  Integer s = 0;
  for (std::size_t i = 0; i < rank; ++i) s += x[i] * gy[i];
  return s;
}

const IntVector& IntegerLattice::mark(const std::string& name) const {
  auto it = marks.find(name);
  if (it == marks.end()) throw InputError("lattice has no marked class '" + name + "'");
  return it->second;
}

IntegerLattice build_lattice(IntMatrix gram, IntMatrix isometry, std::map<std::string, IntVector> marks) {
  const std::size_t n = gram.rows();
  if (gram.cols() != n) throw InputError("Gram matrix is not square");
  if (!gram.is_symmetric()) throw InputError("Gram matrix is not symmetric");
  if (isometry.rows() != n || isometry.cols() != n)
    throw InputError("isometry must be " + std::to_string(n) + "x" + std::to_string(n));
  if (!(isometry.transpose() * gram * isometry == gram)) throw InputError("T is not an isometry of the form");
  if (!(isometry * isometry == IntMatrix::identity(n))) throw InputError("T is not an involution");
  for (const auto& [name, v] : marks)
    if (v.size() != n) throw InputError("marked class '" + name + "' has length " + std::to_string(v.size()));
  IntegerLattice l;
  l.rank = n;
  l.gram = std::move(gram);
  l.isometry = std::move(isometry);
  l.marks = std::move(marks);
  return l;
}

InvariantSublattices invariant_sublattices(const IntegerLattice& l) {
  const IntMatrix id = IntMatrix::identity(l.rank);
  return {integer_kernel(l.isometry - id), integer_kernel(l.isometry + id)};
}

BilinearFormGF2 conj_form_mod2(const IntegerLattice& l) { return {(l.gram * l.isometry).mod2()}; }

TransferReport transfer_report(const IntegerLattice& l, const QuotientTransferData& q) {
  const std::size_t r = l.rank, m = q.quotient_rank;
  if (q.push.rows() != m || q.push.cols() != r) throw InputError("push must be quotient_rank x rank");
  if (q.pull.rows() != r || q.pull.cols() != m) throw InputError("pull must be rank x quotient_rank");
  TransferReport rep;
  rep.composition_is_double = q.push * q.pull == Integer(2) * IntMatrix::identity(m);
  if (!rep.composition_is_double) rep.failures.push_back("push * pull is not multiplication by 2");
  rep.pull_injective = smith_normal_form(q.pull).rank == m;
  if (!rep.pull_injective) rep.failures.push_back("pull is not injective");
  rep.image_invariant = l.isometry * q.pull == q.pull;
  if (!rep.image_invariant) rep.failures.push_back("image of pull is not invariant under T");
  rep.invariant_doubles_into_image = true;
  for (const auto& alpha : invariant_sublattices(l).invariant)
    if (!integer_solve(q.pull, scaled(alpha, 2))) {
      rep.invariant_doubles_into_image = false;
      rep.failures.push_back("invariant class " + to_string(alpha) + " does not double into the image of pull");
    }
  return rep;
}

TransferReport transfer_audit(const IntegerLattice& l, const QuotientTransferData& q) {
  TransferReport rep = transfer_report(l, q);
  if (!rep.composition_is_double || !rep.pull_injective || !rep.image_invariant)
    throw InputError("transfer data rejected: " + rep.failures.front());
  if (!rep.invariant_doubles_into_image)
    throw ModelIntegrityError("transfer data contradicts the doubling property: " + rep.failures.front());
  return rep;
}

OrientationClassVerdict orientation_class_check(const IntegerLattice& l, const QuotientTransferData& q,
                                                const IntVector& alpha) {
  if (alpha.size() != l.rank) throw InputError("class length does not match the lattice rank");
  if (q.pull.rows() != l.rank || q.pull.cols() != q.quotient_rank)
    throw InputError("pull must be rank x quotient_rank");
  OrientationClassVerdict v;
  v.delta = integer_solve(Integer(2) * q.pull, alpha);
  v.realizable = v.delta.has_value();
  return v;
}

OrderVerdict order_obstruction(const IntegerLattice& l, long long d, const IntVector& beta) {
  if (beta.size() != l.rank) throw InputError("class length does not match the lattice rank");
  if (l.isometry.apply(beta) != beta) throw InputError("witness " + to_string(beta) + " is not invariant under T");
  const Integer self = l.pairing(beta, beta);
  if ((self - d) % 2 != 0)
    throw InputError("witness self-intersection " + self.str() + " does not match d = " + std::to_string(d) +
                     " modulo 2");
  OrderVerdict v;
  v.witness = beta;
  v.obstructed = d % 2 != 0;
  v.message = v.obstructed ? "cannot be I_abs" : "no obstruction";
  return v;
}

TorsionReport torsion_audit(const IntegerLattice& l) {
  TorsionReport r;
  if (!l.presentation) {
    r.note = "no presentation supplied; absence of 2-torsion is assumed";
    return r;
  }
  r.presentation_supplied = true;
  for (const auto& f : smith_normal_form(*l.presentation).invariant_factors())
    if (f > 1) {
      r.torsion.push_back(f);
      if (f % 2 == 0) r.two_torsion = true;
    }
  r.note = r.two_torsion ? "2-torsion present; transfer-based checks are unsound for this input"
                         : "no 2-torsion";
  return r;
}

std::optional<SelfIntersectionCheck> self_intersection_check(const IntegerLattice& l, const std::string& alpha_mark) {
  auto it = l.marks.find(alpha_mark);
  if (it == l.marks.end() || !l.real_euler_characteristic) return std::nullopt;
  SelfIntersectionCheck c;
  c.self_intersection = l.pairing(it->second, it->second);
  c.expected = -*l.real_euler_characteristic;
  c.holds = c.self_intersection == c.expected;
  return c;
}

}  // namespace conjtop
