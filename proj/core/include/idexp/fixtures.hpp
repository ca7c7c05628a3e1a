#pragma once

#include <string>
#include <vector>

namespace idexp {

// Built-in problem documents exercising the library end to end; each is a
// complete JSON document for the batch front end.
struct Fixture {
  std::string name;
  std::string description;
  std::string document;
};

const std::vector<Fixture>& fixtures();

// Lookup by name; unknown names raise input_error listing what is available.
const Fixture& fixture(const std::string& name);

}  // namespace idexp
