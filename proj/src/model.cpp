#include "conjtop/model.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace conjtop {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
  const Token& at(std::size_t i) const { return tokens.at(i); }
};

[[noreturn]] void fail(const Line& l, std::size_t token, const std::string& what) {
  const std::size_t col = token < l.tokens.size() ? l.tokens[token].column : l.tokens.empty() ? 1 : l.tokens.back().column;
  throw ParseError(l.number, col, what);
}

long long to_int(const Line& l, std::size_t i) {
  if (i >= l.tokens.size()) fail(l, i, "missing integer");
  const std::string& s = l.tokens[i].text;
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(l, i, "expected an integer, got '" + s + "'");
  return v;
}

Integer to_big(const Line& l, std::size_t i) {
  const std::string& s = l.tokens.at(i).text;
  const std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
    fail(l, i, "expected an integer, got '" + s + "'");
  return s[0] == '+' ? Integer(s.substr(1)) : Integer(s);
}

int to_bit(const Line& l, std::size_t i) {
  const long long v = to_int(l, i);
  if (v != 0 && v != 1) fail(l, i, "expected 0 or 1");
  return static_cast<int>(v);
}

void expect_count(const Line& l, std::size_t n, const std::string& what) {
  if (l.tokens.size() != n)
    fail(l, std::min(n, l.tokens.size()), what + ": expected " + std::to_string(n) + " entries, got " +
                                             std::to_string(l.tokens.size()));
}

// Lines of one section, consumed front to back.
class Body {
 public:
  Body(const Line& header, std::vector<Line> lines) : header_(header), lines_(std::move(lines)) {}
  bool done() const { return pos_ == lines_.size(); }
  const Line& next() {
    if (done()) throw ParseError(end_line(), 1, "unexpected end of section");
    return lines_[pos_++];
  }
  const Line& header() const { return header_; }
  std::size_t end_line() const { return lines_.empty() ? header_.number : lines_.back().number; }

  Gf2Matrix gf2_rows(std::size_t rows, std::size_t cols) {
    Gf2Matrix m(rows, cols);
    if (cols == 0) return m;
    for (std::size_t r = 0; r < rows; ++r) {
      const Line& l = next();
      expect_count(l, cols, "matrix row");
      for (std::size_t c = 0; c < cols; ++c)
        if (to_bit(l, c)) m.set(r, c);
    }
    return m;
  }
  IntMatrix int_rows(std::size_t rows, std::size_t cols) {
    IntMatrix m(rows, cols);
    if (cols == 0) return m;
    for (std::size_t r = 0; r < rows; ++r) {
      const Line& l = next();
      expect_count(l, cols, "matrix row");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = to_big(l, c);
    }
    return m;
  }

 private:
  Line header_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      if (raw[i] == '[' || raw[i] == ']' || raw[i] == ';') {
        l.tokens.push_back({std::string(1, raw[i]), i + 1});
        ++i;
        continue;
      }
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '[' && raw[i] != ']' && raw[i] != ';') ++i;
      l.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

IntVector int_tail(const Line& l, std::size_t from) {
  IntVector v;
  for (std::size_t i = from; i < l.tokens.size(); ++i) v.push_back(to_big(l, i));
  return v;
}

SimplicialComplex parse_complex(Body& b) {
  const Line& first = b.next();
  if (first.at(0).text != "vertices") fail(first, 0, "complex must start with 'vertices <count>'");
  expect_count(first, 2, "vertices line");
  const long long n = to_int(first, 1);
  if (n < 0) fail(first, 1, "vertex count is negative");
  std::vector<Simplex> simplices;
  while (!b.done()) {
    const Line& l = b.next();
    Simplex s;
    for (std::size_t i = 0; i < l.tokens.size(); ++i) {
      const long long v = to_int(l, i);
      if (v < 0 || v >= n) fail(l, i, "vertex " + l.at(i).text + " out of range");
      s.push_back(static_cast<Vertex>(v));
    }
    simplices.push_back(std::move(s));
  }
  return SimplicialComplex::from_simplices(static_cast<int>(n), simplices);
}

MapSpec parse_map(Body& b, const Line& header) {
  if (header.tokens.size() != 6) fail(header, 1, "map header must be [map <name> <source> <target>]");
  MapSpec m{header.at(3).text, header.at(4).text, {}};
  while (!b.done()) {
    const Line& l = b.next();
    for (std::size_t i = 0; i < l.tokens.size(); ++i) m.images.push_back(static_cast<Vertex>(to_int(l, i)));
  }
  return m;
}

ChainComplexData parse_chain(Body& b) {
  ChainComplexData c;
  const Line& first = b.next();
  if (first.at(0).text != "dims") fail(first, 0, "chain data must start with 'dims'");
  for (std::size_t i = 1; i < first.tokens.size(); ++i) {
    const long long d = to_int(first, i);
    if (d < 0) fail(first, i, "negative chain dimension");
    c.dims.push_back(static_cast<std::size_t>(d));
  }
  const int top = c.top();
  for (int k = 0; k <= top; ++k) c.boundary.emplace_back(k == 0 ? 0 : c.dim(k - 1), c.dim(k));
  std::map<int, Gf2Matrix> inv;
  std::map<int, IntMatrix> ints;
  auto degree = [&](const Line& l, int lo) {
    expect_count(l, 2, l.at(0).text);
    const long long k = to_int(l, 1);
    if (k < lo || k > top) fail(l, 1, "degree out of range");
    return static_cast<int>(k);
  };
  while (!b.done()) {
    const Line& l = b.next();
    const std::string& key = l.at(0).text;
    if (key == "boundary") {
      const int k = degree(l, 1);
      c.boundary[static_cast<std::size_t>(k)] = b.gf2_rows(c.dim(k - 1), c.dim(k));
    } else if (key == "int-boundary") {
      const int k = degree(l, 1);
      ints[k] = b.int_rows(c.dim(k - 1), c.dim(k));
    } else if (key == "involution") {
      const int k = degree(l, 0);
      inv[k] = b.gf2_rows(c.dim(k), c.dim(k));
    } else if (key == "pairing") {
      expect_count(l, 1, "pairing");
      if (top < 0 || top % 2) fail(l, 0, "a pairing needs an even top degree");
      const std::size_t m = c.dim(top / 2);
      c.pairing = b.gf2_rows(m, m);
    } else if (key == "fixed-class") {
      std::vector<int> bits;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) bits.push_back(to_bit(l, i));
      c.fixed_class = BitVector::from_bits(bits);
    } else if (key == "fixed-betti") {
      expect_count(l, 2, "fixed-betti");
      const long long v = to_int(l, 1);
      if (v < 0) fail(l, 1, "negative Betti number");
      c.fixed_betti_total = static_cast<std::size_t>(v);
    } else {
      fail(l, 0, "unknown chain keyword '" + key + "'");
    }
  }
  if (!inv.empty()) {
    for (int k = 0; k <= top; ++k) {
      auto it = inv.find(k);
      if (it == inv.end()) throw ParseError(b.end_line(), 1, "involution missing in degree " + std::to_string(k));
      c.involution.push_back(it->second);
    }
  }
  if (!ints.empty()) {
    c.int_boundary.resize(c.dims.size());
    c.int_boundary[0] = IntMatrix(0, c.dim(0));
    for (auto& [k, m] : ints) c.int_boundary[static_cast<std::size_t>(k)] = std::move(m);
  }
  return c;
}

LatticeSpec parse_lattice(Body& b) {
  const Line& first = b.next();
  if (first.at(0).text != "rank") fail(first, 0, "lattice must start with 'rank <n>'");
  expect_count(first, 2, "rank line");
  const long long n = to_int(first, 1);
  if (n < 0) fail(first, 1, "negative rank");
  const auto r = static_cast<std::size_t>(n);
  std::optional<IntMatrix> gram, iso, presentation;
  std::optional<long long> chi;
  std::map<std::string, IntVector> marks;
  LatticeSpec spec;
  while (!b.done()) {
    const Line& l = b.next();
    const std::string& key = l.at(0).text;
    if (key == "gram") {
      gram = b.int_rows(r, r);
    } else if (key == "isometry") {
      iso = b.int_rows(r, r);
    } else if (key == "mark") {
      if (l.tokens.size() < 2) fail(l, 1, "mark needs a name");
      if (l.tokens.size() != r + 2) fail(l, l.tokens.size(), "mark needs " + std::to_string(r) + " coordinates");
      if (!marks.emplace(l.at(1).text, int_tail(l, 2)).second) fail(l, 1, "duplicate mark '" + l.at(1).text + "'");
    } else if (key == "presentation") {
      expect_count(l, 3, "presentation");
      const long long rows = to_int(l, 1), cols = to_int(l, 2);
      if (rows < 0 || cols < 0) fail(l, 1, "negative matrix size");
      presentation = b.int_rows(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    } else if (key == "real-euler") {
      expect_count(l, 2, "real-euler");
      chi = to_int(l, 1);
    } else if (key == "transfer") {
      expect_count(l, 2, "transfer");
      const long long q = to_int(l, 1);
      if (q < 0) fail(l, 1, "negative quotient rank");
      QuotientTransferData t;
      t.quotient_rank = static_cast<std::size_t>(q);
      const Line& push = b.next();
      if (push.at(0).text != "push") fail(push, 0, "expected 'push'");
      t.push = b.int_rows(t.quotient_rank, r);
      const Line& pull = b.next();
      if (pull.at(0).text != "pull") fail(pull, 0, "expected 'pull'");
      t.pull = b.int_rows(r, t.quotient_rank);
      spec.transfer = std::move(t);
    } else if (key == "order") {
      expect_count(l, 3, "order");
      spec.order = std::pair{to_int(l, 1), l.at(2).text};
    } else {
      fail(l, 0, "unknown lattice keyword '" + key + "'");
    }
  }
  if (!gram) throw ParseError(b.end_line(), 1, "lattice has no gram matrix");
  if (!iso) iso = IntMatrix::identity(r);
  spec.lattice = build_lattice(*gram, *iso, std::move(marks));
  spec.lattice.presentation = std::move(presentation);
  spec.lattice.real_euler_characteristic = chi;
  return spec;
}

LoopData loop_entry(const Line& l, std::size_t from) {
  if (l.tokens.size() < from + 2) fail(l, l.tokens.size(), "loop entry needs '<k> <rc> <lambda...>'");
  LoopData d;
  d.k = static_cast<int>(to_int(l, from));
  d.rc_intersections = to_int(l, from + 1);
  for (std::size_t i = from + 2; i < l.tokens.size(); ++i) d.lambda.push_back(to_bit(l, i));
  try {
    validate(d);
  } catch (const InputError& e) {
    fail(l, from, e.what());
  }
  return d;
}

LoopTable parse_loops(Body& b) {
  LoopTable t;
  const Line& kind = b.next();
  expect_count(kind, 2, "kind line");
  if (kind.at(0).text != "kind") fail(kind, 0, "loop table must start with 'kind spin|pin'");
  if (kind.at(1).text == "spin") t.kind = FormKind::Spin;
  else if (kind.at(1).text == "pin") t.kind = FormKind::Pin;
  else fail(kind, 1, "kind must be spin or pin");
  const Line& dim = b.next();
  if (dim.at(0).text != "dimension") fail(dim, 0, "expected 'dimension <n>'");
  expect_count(dim, 2, "dimension line");
  const long long n = to_int(dim, 1);
  if (n < 0) fail(dim, 1, "negative dimension");
  const auto d = static_cast<std::size_t>(n);
  t.gram = Gf2Matrix(d, d);
  while (!b.done()) {
    const Line& l = b.next();
    const std::string& key = l.at(0).text;
    if (key == "gram") {
      t.gram = b.gf2_rows(d, d);
    } else if (key == "basis") {
      t.basis.push_back(loop_entry(l, 1));
    } else if (key == "redundant") {
      if (l.tokens.size() < d + 2 || l.at(d + 1).text != ";") fail(l, d + 1, "expected class bits followed by ';'");
      std::vector<int> bits;
      for (std::size_t i = 1; i <= d; ++i) bits.push_back(to_bit(l, i));
      t.redundant.push_back({BitVector::from_bits(bits), loop_entry(l, d + 2)});
    } else {
      fail(l, 0, "unknown loops keyword '" + key + "'");
    }
  }
  return t;
}

template <class M>
void insert_unique(M& m, const std::string& name, typename M::mapped_type value, const Line& header,
                   const std::string& kind) {
  if (!m.emplace(name, std::move(value)).second) fail(header, 2, "duplicate " + kind + " '" + name + "'");
}

void write_row(std::ostream& out, const Gf2Matrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << (m.get(r, c) ? 1 : 0);
  out << '\n';
}

void write_matrix(std::ostream& out, const Gf2Matrix& m) {
  if (m.cols() == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) write_row(out, m, r);
}

void write_matrix(std::ostream& out, const IntMatrix& m) {
  if (m.cols() == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
    out << '\n';
  }
}

void write_loop(std::ostream& out, const LoopData& d) {
  out << d.k << ' ' << d.rc_intersections;
  for (int l : d.lambda) out << ' ' << l;
}

}  // namespace

ComplexPtr ModelFile::complex(const std::string& name) const {
  auto it = complexes.find(name);
  if (it == complexes.end()) throw InputError("unknown complex '" + name + "'");
  return make_complex(it->second);
}

SimplicialMap ModelFile::map(const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) throw InputError("unknown map '" + name + "'");
  try {
    return SimplicialMap(complex(it->second.source), complex(it->second.target), it->second.images);
  } catch (const InputError& e) {
    throw InputError("map " + name + ": " + e.what());
  }
}

void ModelFile::validate() const {
  for (const auto& [name, spec] : maps) map(name);
  for (const auto& [name, c] : chains) {
    try {
      c.validate();
    } catch (const InputError& e) {
      throw InputError("chain " + name + ": " + e.what());
    }
  }
  for (const auto& [name, l] : lattices) {
    try {
      build_lattice(l.lattice.gram, l.lattice.isometry, l.lattice.marks);
      if (l.order) l.lattice.mark(l.order->second);
    } catch (const InputError& e) {
      throw InputError("lattice " + name + ": " + e.what());
    }
  }
  for (const auto& [name, t] : loops) {
    try {
      qform_from_loop_table(t.kind, t.gram, t.basis, t.redundant);
    } catch (const InputError& e) {
      throw InputError("loops " + name + ": " + e.what());
    }
  }
}

ModelFile parse_model(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  ModelFile m;
  std::size_t i = 0;
  if (!lines.empty() && lines[0].at(0).text != "[") fail(lines[0], 0, "expected a section header");
  while (i < lines.size()) {
    const Line& header = lines[i++];
    if (header.tokens.size() < 4 || header.at(0).text != "[" || header.tokens.back().text != "]")
      fail(header, 0, "malformed section header");
    std::vector<Line> body;
    while (i < lines.size() && lines[i].at(0).text != "[") body.push_back(lines[i++]);
    Body b(header, std::move(body));
    const std::string& kind = header.at(1).text;
    const std::string& name = header.at(2).text;
    if (kind != "map" && header.tokens.size() != 4) fail(header, 3, "unexpected tokens in section header");
    try {
      if (kind == "complex") {
        insert_unique(m.complexes, name, parse_complex(b), header, kind);
      } else if (kind == "map") {
        insert_unique(m.maps, name, parse_map(b, header), header, kind);
      } else if (kind == "chain") {
        auto c = parse_chain(b);
        c.validate();
        insert_unique(m.chains, name, std::move(c), header, kind);
      } else if (kind == "lattice") {
        insert_unique(m.lattices, name, parse_lattice(b), header, kind);
      } else if (kind == "loops") {
        insert_unique(m.loops, name, parse_loops(b), header, kind);
      } else {
        fail(header, 1, "unknown section kind '" + kind + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(header.number, header.at(2).column, kind + " " + name + ": " + e.what());
    }
  }
  // Maps refer to complexes that may appear later in the file.
  for (const auto& [name, spec] : m.maps) {
    try {
      m.map(name);
    } catch (const InputError& e) {
      for (const auto& l : lines)
        if (l.tokens.size() > 2 && l.at(1).text == "map" && l.at(2).text == name) throw ParseError(l.number, l.at(2).column, e.what());
      throw;
    }
  }
  m.validate();
  return m;
}

ModelFile parse_model_string(const std::string& text) {
  std::istringstream in(text);
  return parse_model(in);
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file '" + path + "'");
  return parse_model(in);
}

void print_model(std::ostream& out, const ModelFile& m) {
  bool first = true;
  auto section = [&](const std::string& head) {
    if (!first) out << '\n';
    first = false;
    out << '[' << head << "]\n";
  };
  for (const auto& [name, k] : m.complexes) {
    section("complex " + name);
    out << "vertices " << k.vertex_count() << '\n';
    for (const auto& s : k.maximal_simplices()) {
      for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
      out << '\n';
    }
  }
  for (const auto& [name, spec] : m.maps) {
    section("map " + name + ' ' + spec.source + ' ' + spec.target);
    for (std::size_t i = 0; i < spec.images.size(); ++i) out << (i ? " " : "") << spec.images[i];
    if (!spec.images.empty()) out << '\n';
  }
  for (const auto& [name, c] : m.chains) {
    section("chain " + name);
    out << "dims";
    for (auto d : c.dims) out << ' ' << d;
    out << '\n';
    for (int k = 1; k <= c.top(); ++k) {
      const auto& bd = c.boundary[static_cast<std::size_t>(k)];
      if (bd.is_zero()) continue;
      out << "boundary " << k << '\n';
      write_matrix(out, bd);
    }
    if (!c.int_boundary.empty())
      for (int k = 1; k <= c.top(); ++k)
        if (const auto& ib = c.int_boundary[static_cast<std::size_t>(k)]) {
          out << "int-boundary " << k << '\n';
          write_matrix(out, *ib);
        }
    for (std::size_t k = 0; k < c.involution.size(); ++k) {
      out << "involution " << k << '\n';
      write_matrix(out, c.involution[k]);
    }
    if (c.pairing) {
      out << "pairing\n";
      write_matrix(out, *c.pairing);
    }
    if (c.fixed_class) {
      out << "fixed-class";
      for (int bit : c.fixed_class->bits()) out << ' ' << bit;
      out << '\n';
    }
    if (c.fixed_betti_total) out << "fixed-betti " << *c.fixed_betti_total << '\n';
  }
  for (const auto& [name, spec] : m.lattices) {
    const auto& l = spec.lattice;
    section("lattice " + name);
    out << "rank " << l.rank << "\ngram\n";
    write_matrix(out, l.gram);
    out << "isometry\n";
    write_matrix(out, l.isometry);
    for (const auto& [mark, v] : l.marks) {
      out << "mark " << mark;
      for (const auto& x : v) out << ' ' << x;
      out << '\n';
    }
    if (l.presentation) {
      out << "presentation " << l.presentation->rows() << ' ' << l.presentation->cols() << '\n';
      write_matrix(out, *l.presentation);
    }
    if (l.real_euler_characteristic) out << "real-euler " << *l.real_euler_characteristic << '\n';
    if (spec.transfer) {
      out << "transfer " << spec.transfer->quotient_rank << "\npush\n";
      write_matrix(out, spec.transfer->push);
      out << "pull\n";
      write_matrix(out, spec.transfer->pull);
    }
    if (spec.order) out << "order " << spec.order->first << ' ' << spec.order->second << '\n';
  }
  for (const auto& [name, t] : m.loops) {
    section("loops " + name);
    out << "kind " << (t.kind == FormKind::Spin ? "spin" : "pin") << "\ndimension " << t.gram.rows() << "\ngram\n";
    write_matrix(out, t.gram);
    for (const auto& e : t.basis) {
      out << "basis ";
      write_loop(out, e);
      out << '\n';
    }
    for (const auto& r : t.redundant) {
      out << "redundant";
      for (int bit : r.cls.bits()) out << ' ' << bit;
      out << " ; ";
      write_loop(out, r.loops);
      out << '\n';
    }
  }
}

std::string print_model_string(const ModelFile& m) {
  std::ostringstream out;
  print_model(out, m);
  return out.str();
}

}  // namespace conjtop
