#include "nullify/fixtures.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifndef NULLIFY_SOURCE_DATA_DIR
#define NULLIFY_SOURCE_DATA_DIR "data"
#endif

namespace nullify {

namespace {

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string fold(const std::string &s) {
    std::string out;
    for (char ch : s)
        if (ch != '_') out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return out;
}

} // namespace

LinkDiagram FixtureRecord::diagram() const { return parse_pd(pd_code, components); }

std::string data_dir() {
    if (const char *env = std::getenv("NULLIFY_DATA_DIR"); env && *env) return env;
    return NULLIFY_SOURCE_DATA_DIR;
}

std::vector<FixtureRecord> load_fixtures(const std::string &path_in) {
    const std::string path = path_in.empty() ? data_dir() + "/fixtures.csv" : path_in;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture table " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty fixture table " + path);
    const auto header = split_csv_line(line);
    const std::vector<std::string> expected{"name", "pd_code", "crossing_number", "components", "alternating", "signature", "unknotting_number", "jones"};
    if (header != expected) throw std::runtime_error("unexpected fixture header in " + path);
    std::vector<FixtureRecord> out;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto f = split_csv_line(line);
        if (f.size() != expected.size()) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": wrong field count");
        FixtureRecord r;
        r.name = f[0];
        r.pd_code = f[1];
        r.crossing_number = std::stoi(f[2]);
        r.components = std::stoi(f[3]);
        if (!f[4].empty()) r.alternating = (f[4] == "Y");
        if (!f[5].empty()) r.signature = std::stoi(f[5]);
        if (!f[6].empty()) r.unknotting_number = std::stoi(f[6]);
        if (!f[7].empty()) r.jones = LaurentPoly1::parse(f[7]);
        out.push_back(std::move(r));
    }
    return out;
}

const FixtureRecord *find_fixture(const std::vector<FixtureRecord> &all, const std::string &name) {
    const std::string key = fold(name);
    for (const auto &r : all)
        if (fold(r.name) == key) return &r;
    return nullptr;
}

const std::vector<FixtureRecord> &default_fixtures() {
    static const std::vector<FixtureRecord> all = load_fixtures();
    return all;
}

LinkDiagram curated_diagram(const std::string &name) {
    const std::string path = data_dir() + "/curated_diagrams.json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    const nlohmann::json j = nlohmann::json::parse(in);
    if (!j.contains(name)) throw std::invalid_argument("no curated diagram named " + name);
    return parse_pd(j.at(name).at("pd").get<std::string>());
}

} // namespace nullify
