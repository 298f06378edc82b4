#include <cstdio>

#include "starq/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& c : starq::acceptance::criteria()) {
    auto r = starq::acceptance::run(c);
    std::printf("[%s] %2d %s (%.2fs): %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(starq::acceptance::criteria().size()) - failed,
              starq::acceptance::criteria().size());
  return failed ? 1 : 0;
}
