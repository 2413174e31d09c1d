// Runs the eight acceptance suites and prints one PASS/FAIL line per criterion.
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include "kuforge/verify.hpp"

int main(int argc, char** argv) {
  kuforge::verify::VerifyOptions opt;
  opt.jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  if (argc > 1) opt.jobs = std::max(1, std::atoi(argv[1]));

  const auto reports = kuforge::verify::run_acceptance(opt);
  int failed = 0;
  double seconds = 0.0;
  for (const auto& rep : reports) {
    std::cout << rep.summary_line() << '\n';
    for (const auto& c : rep.checks)
      if (!c.passed) std::cout << "    " << c.name << ": " << c.detail << '\n';
    if (!rep.passed()) ++failed;
    seconds += rep.seconds;
  }
  std::cout << reports.size() - static_cast<std::size_t>(failed) << '/' << reports.size()
            << " criteria passed, " << static_cast<int>(seconds) << " s of suite time\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
