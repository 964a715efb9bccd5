#include <cstring>
#include <iostream>

#include "echoes/acceptance.hpp"

int main(int argc, char **argv)
{
  echoes::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--fast") == 0) {
      opts.fast = true;
    } else {
      std::cerr << "usage: echoes_acceptance [--fast]\n";
      return 2;
    }
  }
  const echoes::AcceptanceReport report = echoes::run_acceptance(opts);
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto &r : report.results) {
    std::cout << echoes::format_result(r) << '\n';
    pass += r.outcome == echoes::Outcome::pass;
    fail += r.outcome == echoes::Outcome::fail;
    skip += r.outcome == echoes::Outcome::skip;
  }
  std::cout << "summary: " << pass << " pass, " << fail << " fail, " << skip << " skip";
  if (!report.all_pass())
    std::cout << (report.acceptable() ? " (failures are known deviations)" : " (unexpected failure)");
  std::cout << '\n';
  return report.acceptable() ? 0 : 1;
}
