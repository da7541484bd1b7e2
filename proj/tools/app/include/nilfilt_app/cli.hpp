#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace nilfilt::cli {

enum Exit : int {
  kOk = 0,
  kUnknownCommand = 1,
  kGuardExceeded = 2,
  kValidation = 3,
  kIo = 4,
  kVerifyFailed = 5,
  kInternal = 6,
};

struct QuerySpec {
  std::string command;
  std::string group;  // builtin name
  std::string file;   // group file, instead of a builtin
  std::string q = "2";
  int p = 0;          // nonzero selects the p-local series
  int n = 1;
  int k = 1;
  int j = 0;
  int i = 1;
  int dmax = -1;      // homology: defaults to i + 1
  std::string space = "B";
  std::string method = "direct";
  std::string format = "table";
  std::string suite = "all";
  std::string out;
  unsigned jobs = 1;
  bool slow = false;
  std::uint64_t seed = 20240611;
};

// Runs one parsed query and returns the exit code.
int run_query(const QuerySpec& spec, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and runs the query.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nilfilt::cli
