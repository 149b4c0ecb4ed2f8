// Runs every acceptance criterion and prints one pass/fail line per
// criterion, with its sub-results indented below.

#include <iostream>
#include <string>

#include "garside/verify.hpp"

int main(int argc, char** argv) {
  const std::string scope = argc > 1 ? argv[1] : "all";
  int failures = 0;
  try {
    failures = garside::run_acceptance(std::cout, scope);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (failures != 0) {
    std::cout << failures << " criterion/criteria FAILED\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
