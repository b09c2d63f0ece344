#include <CLI11.hpp>
#include <iostream>

#include "conjtop/frontend.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Topology of real structures on finite simplicial models"};
  app.set_help_flag("--help", "print this help and exit");
  std::string command, object, model_path;
  conjtop::RunArgs args;
  bool machine = false, list = false;
  app.add_option("command", command, "homology, fixed-set, conj-form, classify, divide, orient, cover, "
                                     "orient-cover, compare, congruence, lattice-audit or qform");
  app.add_option("object", object, "name of a complex, map, chain, lattice or loop table");
  app.add_option("--h", args.h, "hyperplane class, e.g. \"(1,1)\"");
  app.add_option("--chi", args.chi, "Euler characteristic of the real part");
  app.add_option("--type", args.type, "I_abs, I_rel or II");
  app.add_flag("--h1-trivial", args.h1_trivial, "H_1 of the complexification vanishes");
  app.add_option("--cut", args.cut, "complex whose top cells form the cut chain");
  app.add_option("--curve", args.curves, "curve subcomplex (repeatable)");
  app.add_option("--model", model_path, "model file; defaults to the bundled library");
  app.add_flag("--machine", machine, "print only the machine-readable section");
  app.add_flag("--list", list, "list the objects of the model");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  conjtop::ModelFile loaded;
  try {
    if (!model_path.empty()) loaded = conjtop::load_model(model_path);
  } catch (const conjtop::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  const conjtop::ModelFile& model = model_path.empty() ? conjtop::model_library() : loaded;

  if (list) {
    for (const auto& [name, k] : model.complexes) std::cout << "complex " << name << '\n';
    for (const auto& [name, k] : model.maps) std::cout << "map " << name << '\n';
    for (const auto& [name, k] : model.chains) std::cout << "chain " << name << '\n';
    for (const auto& [name, k] : model.lattices) std::cout << "lattice " << name << '\n';
    for (const auto& [name, k] : model.loops) std::cout << "loops " << name << '\n';
    return 0;
  }
  if (command.empty()) {
    std::cerr << app.help();
    return 2;
  }
  const conjtop::Report report = conjtop::run(command, object, args, model);
  std::cout << report.text(machine);
  if (auto err = report.value("error")) std::cerr << "error: " << *err << '\n';
  return report.status;
}
