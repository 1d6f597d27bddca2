#pragma once

#include <stdexcept>
#include <string>

namespace qcube {

struct OutcomeNotOnAxis : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OutsideOctahedron : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotEpistemic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidWeights : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace qcube
