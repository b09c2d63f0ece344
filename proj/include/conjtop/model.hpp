#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conjtop/errors.hpp"
#include "conjtop/homology.hpp"
#include "conjtop/invariants.hpp"
#include "conjtop/lattices.hpp"
#include "conjtop/simplicial.hpp"

namespace conjtop {

/// Syntax or validation failure in a model file, located at a line and column.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct MapSpec {
  std::string source;
  std::string target;
  std::vector<Vertex> images;
  friend bool operator==(const MapSpec&, const MapSpec&) = default;
};

struct LatticeSpec {
  IntegerLattice lattice;
  std::optional<QuotientTransferData> transfer;
  /// Order obstruction data: the order d and the name of the witness mark.
  std::optional<std::pair<long long, std::string>> order;
  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

struct LoopTable {
  FormKind kind = FormKind::Spin;
  Gf2Matrix gram;
  std::vector<LoopData> basis;
  std::vector<RedundantEntry> redundant;
  friend bool operator==(const LoopTable&, const LoopTable&) = default;
};

struct ModelFile {
  std::map<std::string, SimplicialComplex> complexes;
  std::map<std::string, MapSpec> maps;
  std::map<std::string, ChainComplexData> chains;
  std::map<std::string, LatticeSpec> lattices;
  std::map<std::string, LoopTable> loops;

  bool empty() const noexcept {
    return complexes.empty() && maps.empty() && chains.empty() && lattices.empty() && loops.empty();
  }
  ComplexPtr complex(const std::string& name) const;
  SimplicialMap map(const std::string& name) const;
  /// Checks every cross reference and runs the module validators.
  void validate() const;
  friend bool operator==(const ModelFile&, const ModelFile&) = default;
};

ModelFile parse_model(std::istream& in);
ModelFile parse_model_string(const std::string& text);
ModelFile load_model(const std::string& path);
void print_model(std::ostream& out, const ModelFile& m);
std::string print_model_string(const ModelFile& m);

/// Bundled models: circles, tori, Klein bottle, projective plane, spheres,
/// genus-two real structures, the quadric, abstract T^4 data, lattices and
/// loop tables.
const ModelFile& model_library();

}  // namespace conjtop
