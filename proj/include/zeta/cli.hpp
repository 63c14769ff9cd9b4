#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zeta/catalog.hpp"

namespace zeta::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;

enum class Format { Csv, Json };

struct RunConfig {
  std::string command;
  std::vector<std::string> construction;
  long long N = 20;
  long long oracle_N = 0;  // 0: same as N
  bool prime_powers_only = false;
  Format format = Format::Csv;
  std::string out_path;  // empty: standard output
  std::vector<std::string> inputs;
};

// A named construction: its formula and the order the census runs on.
struct Construction {
  std::string label;
  GlobalZeta zeta;
  IntegralOrder order;
  std::string note;
};

// Parses `cp <p>`, `kn <n>`, `cp-x-kn <p> <n>`, `km-x-kn <m> <n>`, `zc6`,
// `rank2-over <n> <field>` (field: Q or cyc<l>). Throws PreconditionError.
Construction make_construction(const std::vector<std::string>& tokens);

FieldDescriptor parse_field(const std::string& text);

// Runs one command line (without the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zeta::cli
