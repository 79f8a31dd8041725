#include <iostream>
#include <string>
#include <vector>

#include "tecsrs/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tecsrs::RunTool(args, std::cout, std::cerr);
}
