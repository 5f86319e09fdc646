#pragma once

#include "ccshell/document.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ccs {

struct EmbeddedFile {
    std::string name;
    std::string text;
};

/// Bundled .ccx files, sorted by file name.
const std::vector<EmbeddedFile>& embedded_fixture_files();
/// Expected properties of the bundled fixtures.
const char* embedded_manifest();

/// Fixture text by name, with or without the .ccx suffix.
std::optional<std::string> fixture_text(const std::string& name);
ChainComplex load_fixture(const std::string& name);

/// Reads a file; a bare name that matches a bundled fixture and is not a
/// file on disk is served from the bundled copy. Throws InvalidInput.
std::string read_source(const std::string& path);

struct ExampleOutcome {
    std::string name;
    std::vector<std::string> checked;     // expectation keys compared
    std::vector<std::string> mismatches;  // empty when everything matched
    bool passed() const { return mismatches.empty(); }
};

/// Recomputes every manifest entry and diffs it against the expectations.
std::vector<ExampleOutcome> run_examples(const SearchOptions& options = {});

}  // namespace ccs
