#pragma once

#include <functional>
#include <string>
#include <vector>

namespace starq::acceptance {

struct Result {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget = 0;  // seconds; 0 when the criterion has no time limit
};

struct Criterion {
  int id;
  std::string name;
  double budget;
  std::function<bool(std::string& detail)> run;
};

const std::vector<Criterion>& criteria();

Result run(const Criterion& c);
std::vector<Result> run_all();

}  // namespace starq::acceptance
