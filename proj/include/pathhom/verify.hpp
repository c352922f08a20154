#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pathhom {

// Quantitative end-to-end checks over the digraph families and seeded
// random instances. Every expected value is exact; a row fails only on a
// genuine mismatch (or an escaped exception, reported in `actual`).
struct VerifyOptions {
  uint64_t seed = 0x70617468ULL;
  size_t mutation_cap = 1000000;
};

struct VerifyRow {
  int id = 0;
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

std::vector<VerifyRow> run_verification(const VerifyOptions& opt = {});

}  // namespace pathhom
