#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace kuforge::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, not_stabilized = 3 };

using Cell = std::variant<std::int64_t, std::string, bool>;

struct Table {
  std::string name;
  std::vector<std::string> columns;  // columns[0] is "degree" for degree-indexed tables
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  std::string subcommand;
  int rank = 0;
  int max_degree = 0;
  std::vector<Table> tables;
};

void write_tsv(const Report& report, std::ostream& out);
void write_json(const Report& report, std::ostream& out);

// Parses argv and runs one subcommand. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kuforge::cli
