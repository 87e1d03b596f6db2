#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nullify/diagram.hpp"
#include "nullify/laurent.hpp"

namespace nullify {

struct FixtureRecord {
    std::string name;
    std::string pd_code;
    int crossing_number = 0;
    int components = 1;
    std::optional<bool> alternating;
    std::optional<int> signature;
    std::optional<int> unknotting_number;
    std::optional<LaurentPoly1> jones;

    LinkDiagram diagram() const;
};

// Directory holding fixtures.csv: $NULLIFY_DATA_DIR, else the source tree's data/.
std::string data_dir();
std::vector<FixtureRecord> load_fixtures(const std::string &path = "");
// names compare with '_' and case ignored, so 11a263 finds 11a_263
const FixtureRecord *find_fixture(const std::vector<FixtureRecord> &all, const std::string &name);
const std::vector<FixtureRecord> &default_fixtures();

// hand-picked diagrams from curated_diagrams.json in the data directory
LinkDiagram curated_diagram(const std::string &name);

} // namespace nullify
