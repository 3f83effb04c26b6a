#include "finpot/jsonl.hpp"

#include <fstream>
#include <string>

#include "finpot/errors.hpp"

namespace finpot {

std::vector<json> read_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open jsonl file: " + path.string());
    std::vector<json> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            rows.push_back(json::parse(line));
        } catch (const json::parse_error& e) {
            throw Error(path.string() + ":" + std::to_string(lineno) +
                        ": jsonl parse error: " + e.what());
        }
    }
    return rows;
}

void write_jsonl(const std::filesystem::path& path, const std::vector<json>& rows) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot write jsonl file: " + path.string());
    for (const auto& row : rows) {
        out << row.dump() << '\n';
    }
    if (!out) throw Error("write failed: " + path.string());
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open json file: " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(path.string() + ": json parse error: " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& value, int indent) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot write json file: " + path.string());
    out << value.dump(indent) << '\n';
}

}  // namespace finpot
