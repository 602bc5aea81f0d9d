#include <iostream>
#include <string>
#include <vector>

#include "jointvec/app.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jointvec::app::main_entry(args, std::cout, std::cerr);
}
