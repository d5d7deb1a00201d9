#pragma once

#include <string>
#include <vector>

#include "hdeg/verify.hpp"

namespace corpus {

/// S/J with parameters Q, given as text.
hdeg::ProblemInstance cyclic_instance(const std::string& name, const hdeg::RingPtr& ring, const std::vector<std::string>& J,
                                      const std::vector<std::string>& Q);

/// Presentation with generators in degrees `twists` and the given relation
/// columns (one vector of entries per relation).
hdeg::ProblemInstance module_instance(const std::string& name, const hdeg::RingPtr& ring, const std::vector<int>& twists,
                                      const std::vector<std::vector<std::string>>& relations, const std::vector<std::string>& Q);

/// Both example families, Cohen-Macaulay controls and low-depth modules;
/// every entry comes with a parameter ideal.
std::vector<hdeg::ProblemInstance> instances();

}  // namespace corpus
