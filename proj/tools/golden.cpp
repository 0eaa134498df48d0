// Regenerates the oracle golden-value file checked in under tests/golden/.
//   sdiep_golden <output.json> [n_max]

#include <cstdlib>
#include <iostream>
#include <string>

#include "sdiep/error.hpp"
#include "sdiep/io.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: sdiep_golden <output.json> [n_max]\n";
    return 1;
  }
  const std::size_t n_max = argc > 2 ? std::stoul(argv[2]) : 32;
  try {
    sdiep::io::save_json(argv[1], sdiep::io::oracle_golden(n_max));
  } catch (const sdiep::Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == sdiep::ErrorCode::Io ? 3 : 1;
  }
  return 0;
}
