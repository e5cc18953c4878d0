#pragma once

#include <stdexcept>

namespace frey {

// A mathematical precondition or hypothesis gate failed (CLI exit code 2).
struct gate_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ingested or persisted data violates an invariant (CLI exit code 3).
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace frey
