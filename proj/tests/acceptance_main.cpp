#include "ddp/verification/acceptance.hpp"

#include <iomanip>
#include <iostream>
#include <thread>

int main() {
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  int failed = 0;
  ddp::acceptance::run_all(threads, [&](const ddp::acceptance::CriterionResult& r) {
    if (!r.pass) ++failed;
    std::cout << ddp::acceptance::format_line(r) << "  (" << std::fixed << std::setprecision(2) << r.seconds
              << " s)" << std::endl;
  });
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " of 10 criteria failed" : "acceptance: all 10 criteria passed")
            << std::endl;
  return failed ? 1 : 0;
}
