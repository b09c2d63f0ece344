#include "conjtop/frontend.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <variant>

#include "conjtop/coverings.hpp"
#include "conjtop/involutions.hpp"

namespace conjtop {

namespace {

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string gram_rows(const Gf2Matrix& g) {
  std::vector<std::string> rows;
  for (const auto& r : g.to_rows()) rows.push_back(join(r, ""));
  return join(rows, ";");
}

std::string basis_text(const std::vector<IntVector>& basis) {
  std::vector<std::string> parts;
  for (const auto& v : basis) parts.push_back("(" + to_string(v) + ")");
  return parts.empty() ? "none" : join(parts, " ");
}

std::string cls(const BitVector& v) { return "(" + v.to_string() + ")"; }

std::string list_or_none(const std::vector<std::size_t>& v) { return v.empty() ? "none" : join(v); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

using Involution = std::variant<SimplicialMap, const ChainComplexData*>;

Involution involution_object(const ModelFile& m, const std::string& name) {
  if (m.maps.count(name)) {
    SimplicialMap f = m.map(name);
    if (!f.is_involution()) throw InputError("map '" + name + "' is not an involution");
    return f;
  }
  if (auto it = m.chains.find(name); it != m.chains.end()) return &it->second;
  throw InputError("unknown object '" + name + "' (expected a map or chain data)");
}

std::string default_name(const ModelFile& m, const std::string& object, const std::string& suffix) {
  const std::string name = object + suffix;
  if (!m.complexes.count(name)) throw InputError("no complex '" + name + "'; pass one explicitly");
  return name;
}

ComplexPtr surface_object(const ModelFile& m, const std::string& name) {
  if (m.complexes.count(name)) return m.complex(name);
  if (auto it = m.maps.find(name); it != m.maps.end()) return m.complex(it->second.source);
  throw InputError("unknown complex '" + name + "'");
}

BitVector top_chain_of(const SimplicialComplex& x, const SimplicialComplex& sub, int degree) {
  if (!sub.is_subcomplex_of(x)) throw InputError("cut is not a subcomplex of the base");
  if (sub.dimension() != degree) throw InputError("cut must have dimension " + std::to_string(degree));
  BitVector c(x.count(degree));
  for (const auto& s : sub.simplices(degree)) c.set(*x.index_of(s));
  return c;
}

void cmd_homology(Report& r, const ModelFile& m, const std::string& obj) {
  if (auto it = m.chains.find(obj); it != m.chains.end()) {
    const auto b = betti_numbers(it->second);
    long long chi = 0;
    for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long long>(b[k]);
    r.add("betti", join(b), "Betti numbers mod 2");
    r.add("euler", chi, "Euler characteristic");
    return;
  }
  const ComplexPtr k = surface_object(m, obj);
  r.add("vertices", static_cast<long long>(k->vertex_count()), "vertices");
  r.add("dimension", k->dimension(), "dimension");
  r.add("top_simplices", static_cast<long long>(k->count(std::max(k->dimension(), 0))), "top simplices");
  r.add("betti", join(betti_numbers(*k)), "Betti numbers mod 2");
  r.add("euler", k->euler_characteristic(), "Euler characteristic");
}

template <class F>
void with_involution(const ModelFile& m, const std::string& obj, F&& f) {
  auto inv = involution_object(m, obj);
  std::visit(
      [&](auto& x) {
        if constexpr (std::is_pointer_v<std::decay_t<decltype(x)>>) f(*x);
        else f(x);
      },
      inv);
}

void cmd_fixed_set(Report& r, const ModelFile& m, const std::string& obj) {
  with_involution(m, obj, [&](const auto& tau) {
    if constexpr (std::is_same_v<std::decay_t<decltype(tau)>, SimplicialMap>) {
      const FixedSet fs = fixed_subcomplex(tau);
      r.add("fixed.dimension", fs.dimension(), "fixed set dimension");
      r.add("fixed.components", static_cast<long long>(fs.component_dimensions.size()), "fixed components");
      r.add("fixed.betti", list_or_none(fs.betti), "fixed set Betti numbers");
      if (tau.source().dimension() % 2 == 0) r.add("fixed.class", cls(fs.middle_class), "fixed class");
    }
    const HarnackReport h = harnack_audit(tau);
    r.add("harnack.fixed_total", static_cast<long long>(h.fixed_total), "fixed total Betti number");
    r.add("harnack.ambient_total", static_cast<long long>(h.ambient_total), "ambient total Betti number");
    r.add_flag("harnack.m_variety", h.is_m, "M-variety");
    bool even_dim = true;
    if constexpr (std::is_same_v<std::decay_t<decltype(tau)>, SimplicialMap>) even_dim = tau.source().dimension() % 2 == 0;
    if (!even_dim) return;
    const FixedClassReport fc = verify_fixed_class_characteristic(tau);
    r.add("characteristic", cls(fc.characteristic), "characteristic class");
    r.add_flag("fixed_class_is_characteristic", fc.holds, "fixed class realizes the characteristic class");
    const MVarietyReport mv = check_m_variety_bounds(tau);
    r.add_flag("m_bounds.vacuous", mv.vacuous, "M-variety bound vacuous");
    r.add_flag("m_bounds.even_form", mv.even_form, "even intersection form");
    r.add_flag("m_bounds.acts_trivially", mv.acts_trivially, "acts trivially in homology");
    if constexpr (std::is_same_v<std::decay_t<decltype(tau)>, SimplicialMap>) {
      if (tau.source().dimension() == 4) {
        const SmithReport s = smith_kernel_bound(tau);
        r.add("smith.kernel_dimension", static_cast<long long>(s.kernel_dimension), "kernel of H_2(Fix) -> H_2(K)");
        r.add_flag("smith.h1_trivial", s.h1_trivial, "H_1 trivial");
        for (auto [k, rank] : s.relative_quotient_ranks)
          r.add("smith.quotient_rank." + std::to_string(k), static_cast<long long>(rank),
                "dim H_" + std::to_string(k) + "(K/tau, Fix)");
      }
    }
    if (!fc.holds) r.fail(1, "fixed class differs from the characteristic class");
  });
}

void report_form(Report& r, const BilinearFormGF2& b) {
  r.add("form", gram_rows(b.gram), "form of the involution");
  r.add_flag("form.nondegenerate", b.is_nondegenerate(), "nondegenerate");
  r.add_flag("form.even", is_even(b), "even");
  r.add("characteristic", cls(characteristic_class(b)), "characteristic class");
}

void cmd_conj_form(Report& r, const ModelFile& m, const std::string& obj) {
  if (auto it = m.lattices.find(obj); it != m.lattices.end()) {
    report_form(r, conj_form_mod2(it->second.lattice));
    return;
  }
  with_involution(m, obj, [&](const auto& tau) { report_form(r, involution_form(tau)); });
}

void cmd_classify(Report& r, const ModelFile& m, const std::string& obj, const RunArgs& a) {
  std::optional<BitVector> h;
  if (a.h) h = parse_class(*a.h);
  with_involution(m, obj, [&](const auto& tau) {
    const TypeVerdict v = classify_type(tau, h);
    r.add("type", to_string(v.type), "type");
    r.add("fixed.class", cls(v.witness), "fixed class");
    if (v.compared) r.add("h", cls(*v.compared), "hyperplane class");
  });
}

void cmd_divide(Report& r, const ModelFile& m, const std::string& obj) {
  const DividingResult d = dividing_test(m.map(obj));
  r.add_flag("dividing", d.dividing, "dividing");
  r.add("components", static_cast<long long>(d.component_count), "components of the complement");
  for (std::size_t i = 0; i < d.halves.size(); ++i)
    r.add("half." + std::to_string(i) + ".size", static_cast<long long>(d.halves[i].size()),
          "half " + std::to_string(i) + " triangles");
}

void cmd_orient(Report& r, const ModelFile& m, const std::string& obj) {
  const SimplicialMap tau = m.map(obj);
  const CurveOrientation co = curve_complex_semiorientation(tau, 0);
  const CurveOrientation other = curve_complex_semiorientation(tau, 1);
  const FixedSet fs = fixed_subcomplex(tau);
  r.add("circles", static_cast<long long>(fs.component_dimensions.size()), "fixed circles");
  r.add_flag("halves_opposite", co.halves_opposite, "halves induce opposite orientations");
  r.add_flag("halves_agree_as_semi", co.semi == other.semi, "both halves give the same semi-orientation");
  std::vector<std::string> edges;
  const auto& es = co.semi.carrier().simplices(1);
  for (std::size_t i = 0; i < es.size(); ++i)
    edges.push_back((co.semi.signs()[i] > 0 ? "+" : "-") + to_string(es[i]));
  r.add("semi_orientation", join(edges, " "), "semi-orientation of the fixed curve");
}

void report_cover(Report& r, const CoverComplex& c) {
  const long long expected = 2 * c.base->euler_characteristic() - c.branch.euler_characteristic();
  r.add("base.euler", c.base->euler_characteristic(), "base Euler characteristic");
  r.add("branch.euler", c.branch.euler_characteristic(), "branch locus Euler characteristic");
  r.add("total.euler", c.total->euler_characteristic(), "total Euler characteristic");
  r.add_flag("euler_law", c.total->euler_characteristic() == expected, "Euler characteristic law");
  r.add("total.vertices", static_cast<long long>(c.total->vertex_count()), "total vertices");
  r.add("total.betti", join(betti_numbers(*c.total)), "total Betti numbers mod 2");
  r.add_flag("total.orientable", is_orientable(*c.total), "total space orientable");
}

void cmd_cover(Report& r, const ModelFile& m, const std::string& obj, const RunArgs& a) {
  const ComplexPtr x = surface_object(m, obj);
  const std::string cut = a.cut ? *a.cut : default_name(m, obj, "_cut");
  const auto sub = m.complex(cut);
  r.add("cut", cut, "cut");
  report_cover(r, branched_double_cover(x, top_chain_of(*x, *sub, x->dimension() - 1)));
}

void cmd_orient_cover(Report& r, const ModelFile& m, const std::string& obj, const RunArgs& a) {
  const ComplexPtr x = surface_object(m, obj);
  const std::string curve = a.curves.empty() ? default_name(m, obj, "_curve") : a.curves.front();
  r.add("curve", curve, "curve");
  const OrientationCover oc = orientation_cover(x, *m.complex(curve));
  report_cover(r, oc.cover);
  r.add_flag("deck_reverses", oc.deck_reverses, "deck reverses the semi-orientation");
}

void cmd_compare(Report& r, const ModelFile& m, const std::string& obj, const RunArgs& a) {
  const ComplexPtr x = surface_object(m, obj);
  std::vector<std::string> names = a.curves;
  if (names.empty()) names = {default_name(m, obj, "_curve"), default_name(m, obj, "_curve2")};
  if (names.size() != 2) throw InputError("compare needs exactly two curves");
  const auto y1 = m.complex(names[0]);
  const auto y2 = m.complex(names[1]);
  const Comparison c = compare_mod_curves(*x, *y1, *y2, complement_orientation(*x, *y1), complement_orientation(*x, *y2));
  r.add("curves", join(names), "curves");
  r.add("h.size", static_cast<long long>(c.part_h.size()), "triangles in the bounding chain");
  r.add("rest.size", static_cast<long long>(c.part_rest.size()), "triangles outside it");
  auto label = [](const std::optional<bool>& b) { return b ? (*b ? "agree" : "disagree") : "empty"; };
  r.add("h.orientations", label(c.agree_on_h), "orientations on the bounding chain");
  r.add("rest.orientations", label(c.agree_on_rest), "orientations outside it");
}

void cmd_congruence(Report& r, const ModelFile& m, const std::string& obj, const RunArgs& a) {
  std::optional<long long> chi = a.chi;
  std::optional<SurfaceType> type;
  if (a.type) type = parse_surface_type(*a.type);
  bool h1 = a.h1_trivial;
  if (!obj.empty()) {
    const SimplicialMap tau = m.map(obj);
    const FixedSet fs = fixed_subcomplex(tau);
    if (!chi) chi = fs.empty() ? 0 : fs.complex.euler_characteristic();
    if (!type) type = classify_type(tau).type;
    const auto b = betti_numbers(tau.source());
    if (!a.h1_trivial) h1 = b.size() < 2 || b[1] == 0;
  }
  if (!chi) throw InputError("congruence needs --chi or an involution");
  if (!type) throw InputError("congruence needs --type or an involution");
  const KharlamovReport k = kharlamov_trace(*chi, *type, h1);
  r.add("chi", *chi, "Euler characteristic of the real part");
  r.add("type", to_string(*type), "type");
  r.add_flag("h1_trivial", h1, "H_1 trivial");
  r.add_flag("applicable", k.applicable, "congruence applicable");
  if (k.applicable) {
    r.add("s_ca", k.s_ca, "self-intersection in the complexification");
    r.add("s_quot", k.s_quot, "self-intersection in the quotient");
  }
  r.add("trace", k.trace, "trace");
  r.add_flag("holds", k.holds, "congruence holds");
  if (!k.holds) r.fail(1, "violates χ(RA) ≡ 0 (mod 8)");
}

void cmd_lattice_audit(Report& r, const ModelFile& m, const std::string& obj) {
  auto it = m.lattices.find(obj);
  if (it == m.lattices.end()) throw InputError("unknown lattice '" + obj + "'");
  const LatticeSpec& spec = it->second;
  const IntegerLattice& l = spec.lattice;
  r.add("rank", static_cast<long long>(l.rank), "rank");
  const InvariantSublattices sub = invariant_sublattices(l);
  r.add("invariant", basis_text(sub.invariant), "invariant sublattice");
  r.add("anti_invariant", basis_text(sub.anti_invariant), "anti-invariant sublattice");
  const BilinearFormGF2 b = conj_form_mod2(l);
  r.add("conj_form", gram_rows(b.gram), "form (x, Ty) mod 2");
  r.add_flag("conj_form.even", is_even(b), "even");
  if (b.is_nondegenerate()) r.add("characteristic", cls(characteristic_class(b)), "characteristic class");
  int status = 0;
  std::string failure;
  if (spec.transfer) {
    const TransferReport t = transfer_report(l, *spec.transfer);
    r.add_flag("transfer.composition_is_double", t.composition_is_double, "push * pull = 2");
    r.add_flag("transfer.pull_injective", t.pull_injective, "pull injective");
    r.add_flag("transfer.image_invariant", t.image_invariant, "image of pull invariant");
    r.add_flag("transfer.invariant_doubles", t.invariant_doubles_into_image, "doubled invariant classes in the image");
    if (!t.composition_is_double || !t.pull_injective || !t.image_invariant) {
      status = 2;
      failure = t.failures.front();
    } else if (!t.invariant_doubles_into_image) {
      status = 1;
      failure = t.failures.front();
    }
    if (t.composition_is_double && t.pull_injective)
      for (const auto& [name, alpha] : l.marks) {
        const auto v = orientation_class_check(l, *spec.transfer, alpha);
        r.add("orientation_class." + name, v.realizable ? "realizable, delta=(" + to_string(*v.delta) + ")" : "not realizable",
              "orientation class " + name);
      }
  }
  const TorsionReport tor = torsion_audit(l);
  r.add("torsion", tor.presentation_supplied ? (tor.torsion.empty() ? "none" : to_string(tor.torsion)) : "unknown",
        "torsion");
  r.add_flag("torsion.two", tor.two_torsion, "2-torsion");
  r.add("torsion.note", tor.note, "torsion note");
  if (spec.order) {
    const OrderVerdict v = order_obstruction(l, spec.order->first, l.mark(spec.order->second));
    r.add("order", spec.order->first, "order");
    r.add("order.verdict", v.message, "order obstruction");
  }
  if (auto s = self_intersection_check(l)) {
    r.add("alpha_squared", s->self_intersection.str(), "alpha . alpha");
    r.add("minus_chi", s->expected, "-chi");
    r.add_flag("alpha_squared_matches", s->holds, "alpha . alpha = -chi");
    if (!s->holds && status == 0) {
      status = 1;
      failure = "alpha . alpha differs from -chi";
    }
  }
  if (status) r.fail(status, failure);
}

void cmd_qform(Report& r, const ModelFile& m, const std::string& obj) {
  auto it = m.loops.find(obj);
  if (it == m.loops.end()) throw InputError("unknown loop table '" + obj + "'");
  const LoopTable& t = it->second;
  const auto q = qform_from_loop_table(t.kind, t.gram, t.basis, t.redundant);
  r.add("redundant_checked", static_cast<long long>(t.redundant.size()), "redundant entries checked");
  if (const auto* q2 = std::get_if<QForm2>(&q)) {
    r.add("kind", "spin", "kind");
    r.add("values", cls(q2->values), "values on the basis");
    r.add("arf", arf(*q2), "Arf invariant");
  } else {
    const auto& q4 = std::get<QForm4>(q);
    r.add("kind", "pin", "kind");
    r.add("values", "(" + join(q4.values) + ")", "values on the basis");
    const auto [re, im] = gauss_sum(q4);
    r.add("gauss_sum", std::to_string(re) + (im < 0 ? "" : "+") + std::to_string(im) + "i", "Gauss sum");
    r.add("brown", brown(q4), "Brown invariant");
  }
}

}  // namespace

void Report::add(const std::string& key, const std::string& value, const std::string& label) {
  entries_.emplace_back(key, label.empty() ? key : label, value);
}
void Report::add(const std::string& key, long long value, const std::string& label) {
  add(key, std::to_string(value), label);
}
void Report::add_flag(const std::string& key, bool value, const std::string& label) { add(key, yes_no(value), label); }

void Report::fail(int s, const std::string& message) {
  status = std::max(status, s);
  add("error", message, "error");
}

std::optional<std::string> Report::value(const std::string& key) const {
  for (const auto& [k, label, v] : entries_)
    if (k == key) return v;
  return std::nullopt;
}

std::string Report::human() const {
  std::ostringstream os;
  os << "conjtop " << command << (object.empty() ? "" : " " + object) << '\n';
  for (const auto& [k, label, v] : entries_) os << "  " << label << ": " << v << '\n';
  os << "  status: " << status << '\n';
  return os.str();
}

std::string Report::machine() const {
  std::map<std::string, std::string> kv;
  kv["command"] = command;
  kv["object"] = object;
  kv["status"] = std::to_string(status);
  for (const auto& [k, label, v] : entries_) kv[k] = v;
  std::ostringstream os;
  for (const auto& [k, v] : kv) os << k << '=' << v << '\n';
  return os.str();
}

std::string Report::text(bool machine_only) const {
  return machine_only ? machine() : human() + "\n[machine]\n" + machine();
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"homology", "fixed-set", "conj-form", "classify",
                                              "divide", "orient", "cover", "orient-cover",
                                              "compare", "congruence", "lattice-audit", "qform"};
  return names;
}

BitVector parse_class(const std::string& text) {
  std::vector<int> bits;
  for (char ch : text) {
    if (ch == '0' || ch == '1') bits.push_back(ch - '0');
    else if (ch != '(' && ch != ')' && ch != ',' && ch != ' ')
      throw InputError("cannot parse class '" + text + "'");
  }
  return BitVector::from_bits(bits);
}

Report run(const std::string& command, const std::string& object, const RunArgs& args, const ModelFile& model) {
  Report r;
  r.command = command;
  r.object = object;
  try {
    if (command != "congruence" && object.empty()) throw InputError(command + " needs an object name");
    if (command == "homology") cmd_homology(r, model, object);
    else if (command == "fixed-set") cmd_fixed_set(r, model, object);
    else if (command == "conj-form") cmd_conj_form(r, model, object);
    else if (command == "classify") cmd_classify(r, model, object, args);
    else if (command == "divide") cmd_divide(r, model, object);
    else if (command == "orient") cmd_orient(r, model, object);
    else if (command == "cover") cmd_cover(r, model, object, args);
    else if (command == "orient-cover") cmd_orient_cover(r, model, object, args);
    else if (command == "compare") cmd_compare(r, model, object, args);
    else if (command == "congruence") cmd_congruence(r, model, object, args);
    else if (command == "lattice-audit") cmd_lattice_audit(r, model, object);
    else if (command == "qform") cmd_qform(r, model, object);
    else throw InputError("unknown command '" + command + "'");
  } catch (const ModelIntegrityError& e) {
    r.fail(1, e.what());
  } catch (const InputError& e) {
    r.fail(2, e.what());
  } catch (const std::exception& e) {
    r.fail(2, std::string("unexpected failure: ") + e.what());
  }
  return r;
}

}  // namespace conjtop
