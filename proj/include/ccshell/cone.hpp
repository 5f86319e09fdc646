#pragma once

#include "ccshell/complex.hpp"
#include "ccshell/shelling.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ccs {

/// d(tau) = c * target + r with r supported on S of the target's degree
/// (on the distinguished vertex for degree 0).
struct ConeWitness {
    Cell target;
    Chain tau;
    Scalar c;
};

/// sets[v] is S_v for v = 0 ... d; sets[0] holds the single distinguished
/// vertex. One witness per basis element outside its S_v.
struct ConeAssignment {
    std::vector<std::vector<Cell>> sets;
    std::vector<ConeWitness> witnesses;
};

struct ConeViolation {
    std::string condition;  // "structure", "1a", "1b", "2" or "3"
    std::optional<Cell> element;
    std::string detail;
};

/// Empty when the assignment makes the complex a cone.
///
/// Support independence is checked on supports for v < d. At the top degree
/// S_d is all of the top basis and the check is ker d_d = 0 instead.
std::optional<ConeViolation> verify_cone(const ChainComplex& c, const ConeAssignment& assign);

/// A valid assignment, or empty when none exists. Throws
/// SearchBudgetExceeded.
std::optional<ConeAssignment> search_cone(const ChainComplex& c, const SearchOptions& options = {});

}  // namespace ccs
