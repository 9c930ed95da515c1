#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cvx/numeric.hpp"
#include "cvx/setops.hpp"

namespace cvx {

using Json = nlohmann::ordered_json;

enum class Format { Text, JsonFmt, Csv };

Format format_from_name(const std::string& name);

/// Simple rectangular table for csv/text rendering.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

Json qset_json(const QSet& s);
Json bracket_json(const Bracket& b, unsigned places = 6);
Json index_list_json(const std::vector<std::size_t>& v);

/// Renders a report deterministically. `config` is echoed into the header of
/// every format; `table`, when present, becomes the csv payload.
std::string render_report(const std::string& command, const Json& config, const Json& result,
                          const std::optional<Table>& table, Format fmt);

} // namespace cvx
