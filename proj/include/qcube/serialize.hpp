#pragma once

#include <json.hpp>

#include "qcube/circuit.hpp"
#include "qcube/equivalence.hpp"
#include "qcube/qubit.hpp"

namespace qcube {

using Json = nlohmann::ordered_json;

// Array of 8 rational strings in lowest terms, e.g. ["1/4","0",...].
Json prob_json(const ProbVec8& p);
ProbVec8 prob_from_json(const Json& j);

// Array of 3 rational strings.
Json bloch_json(const std::array<Rat, 3>& r);

// Four [re, im] pairs in row-major order, 17 significant digits.
Json density_json(const DensityMatrix& rho);

Json report_json(const Report& report);

Json eval_json(const Circuit& c, const std::vector<BranchOutcome>& branches);

Json sample_json(const SampleResult& result);

Json group_json(const RotationGroup& group);
Json group_classes_json(const RotationGroup& group);
Json group_table_json(const RotationGroup& group);

}  // namespace qcube
