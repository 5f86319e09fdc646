#pragma once

#include "ccshell/document.hpp"
#include "ccshell/homology.hpp"

#include <string>
#include <vector>

namespace ccs {

/// Status strings used in reports: "holds", "fails" or "budget-exceeded".
/// Every "holds" carries a certificate; "fails" is only emitted after an
/// exhaustive search.
Json analyze(const ChainComplex& c, const SearchOptions& options = {});

/// Report section for one degree: free rank, torsion and text.
Json homology_to_json(const ChainComplex& c, const std::vector<FGModule>& h);

struct CertificateCheck {
    bool agrees = true;
    std::vector<std::string> notes;  // one line per claim checked
};

/// Rebuilds the complex embedded in a report and re-checks every claim:
/// certificates are verified, "fails" claims are re-searched and homology is
/// recomputed.
CertificateCheck check_certificate(const Json& report, const SearchOptions& options = {});

}  // namespace ccs
