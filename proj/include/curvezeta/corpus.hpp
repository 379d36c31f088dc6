#pragma once

#include <string>
#include <vector>

#include "curvezeta/graph.hpp"

namespace curvezeta {

// One check inside a corpus entry; `origin` records whether the expected
// value comes from the reference worked example or from an independent
// oracle computed here.
struct CorpusCheck {
    std::string what;
    std::string origin; // "reference" or "derived"
    bool pass = false;
    std::string expected, got;
};

struct CorpusOutcome {
    std::string id;
    bool pass = true;
    std::string error; // nonempty when the entry threw
    std::vector<CorpusCheck> checks;
};

struct CorpusReport {
    std::vector<CorpusOutcome> entries;
    int passed = 0, failed = 0;
    bool all_pass() const { return failed == 0; }
    std::string table() const;
};

// Directory holding the figure graph files; CURVEZETA_CORPUS env var
// overrides the compiled-in default.
std::string corpus_dir();
ResolutionGraph corpus_graph(const std::string& figure); // e.g. "fig1"

std::vector<std::string> corpus_entry_ids();
CorpusReport run_corpus(const std::string& filter = "");

} // namespace curvezeta
