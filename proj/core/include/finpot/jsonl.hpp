#pragma once

#include <json.hpp>

#include <filesystem>
#include <vector>

namespace finpot {

using json = nlohmann::json;

// Line-delimited JSON. Parse failures throw Error naming the path and line.
std::vector<json> read_jsonl(const std::filesystem::path& path);
void write_jsonl(const std::filesystem::path& path, const std::vector<json>& rows);

json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& value, int indent = 2);

}  // namespace finpot
