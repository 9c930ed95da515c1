#include "cvx/report.hpp"

#include <sstream>

#include "cvx/error.hpp"

namespace cvx {

Format format_from_name(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::JsonFmt;
    if (name == "csv") return Format::Csv;
    throw PreconditionError("unknown format '" + name + "'");
}

Json qset_json(const QSet& s) {
    Json a = Json::array();
    for (const auto& v : s) a.push_back(v.str());
    return a;
}

Json bracket_json(const Bracket& b, unsigned places) {
    Json j;
    j["lo"] = b.lo.str();
    j["hi"] = b.hi.str();
    j["lo_decimal"] = decimal_floor(b.lo, places);
    j["hi_decimal"] = decimal_ceil(b.hi, places);
    return j;
}

Json index_list_json(const std::vector<std::size_t>& v) {
    Json a = Json::array();
    for (std::size_t i : v) a.push_back(i);
    return a;
}

namespace {

void flatten_text(const std::string& prefix, const Json& j, std::string& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten_text(prefix.empty() ? k : prefix + "." + k, v, out);
    } else if (j.is_array()) {
        out += prefix + " = " + j.dump() + "\n";
    } else if (j.is_string()) {
        out += prefix + " = " + j.get<std::string>() + "\n";
    } else {
        out += prefix + " = " + j.dump() + "\n";
    }
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string render_report(const std::string& command, const Json& config, const Json& result,
                          const std::optional<Table>& table, Format fmt) {
    if (fmt == Format::JsonFmt) {
        Json doc;
        doc["command"] = command;
        doc["config"] = config;
        doc["result"] = result;
        if (table) {
            Json rows = Json::array();
            for (const auto& r : table->rows) {
                Json row;
                for (std::size_t i = 0; i < table->header.size(); ++i)
                    row[table->header[i]] = i < r.size() ? r[i] : "";
                rows.push_back(std::move(row));
            }
            doc["table"] = std::move(rows);
        }
        return doc.dump(2) + "\n";
    }

    std::string out;
    out += "# command = " + command + "\n";
    for (const auto& [k, v] : config.items()) {
        out += "# " + k + " = ";
        out += v.is_string() ? v.get<std::string>() : v.dump();
        out += "\n";
    }
    if (fmt == Format::Text) {
        flatten_text("", result, out);
        if (table) {
            std::string head;
            for (std::size_t i = 0; i < table->header.size(); ++i) {
                if (i) head += "  ";
                head += table->header[i];
            }
            out += head + "\n";
            for (const auto& r : table->rows) {
                std::string line;
                for (std::size_t i = 0; i < r.size(); ++i) {
                    if (i) line += "  ";
                    line += r[i];
                }
                out += line + "\n";
            }
        }
        return out;
    }

    // csv
    if (table) {
        std::string head;
        for (std::size_t i = 0; i < table->header.size(); ++i) {
            if (i) head += ",";
            head += csv_escape(table->header[i]);
        }
        out += head + "\n";
        for (const auto& r : table->rows) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) line += ",";
                line += csv_escape(i < r.size() ? r[i] : "");
            }
            out += line + "\n";
        }
    } else {
        out += "key,value\n";
        std::string flat;
        flatten_text("", result, flat);
        std::istringstream in(flat);
        std::string line;
        while (std::getline(in, line)) {
            std::size_t eq = line.find(" = ");
            if (eq == std::string::npos) continue;
            out += csv_escape(line.substr(0, eq)) + "," + csv_escape(line.substr(eq + 3)) + "\n";
        }
    }
    return out;
}

} // namespace cvx
