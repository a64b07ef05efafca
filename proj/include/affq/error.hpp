#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace affq {

// A computation ran out of its step budget.  Callers exposing yes/no answers
// must surface this as "inconclusive", never as "false".
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed user input: bad polynomial text, inconsistent job data, ...
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A verified postcondition failed.  Indicates a bug or inconsistent data that
// passed the input checks; never raised on a mere "no" answer.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Step allowance for one heavy computation (one Groebner run, one point
// enumeration, ...).  Passed by value: each run gets its own counter.
struct Budget {
  std::uint64_t steps = 1'000'000;

  void spend(std::uint64_t n = 1) {
    if (n > steps) throw budget_error("step budget exhausted");
    steps -= n;
  }
};

}  // namespace affq
