#include <fstream>
#include <iostream>

#include "conjtop/model.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: export_library <output path>\n";
    return 2;
  }
  std::ofstream out(argv[1]);
  if (!out) {
    std::cerr << "cannot write " << argv[1] << '\n';
    return 2;
  }
  conjtop::print_model(out, conjtop::model_library());
  return out ? 0 : 1;
}
