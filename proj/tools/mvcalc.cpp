#include <iostream>
#include <string>
#include <vector>

#include "mvcli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mvcli::run(args, std::cout, std::cerr);
}
