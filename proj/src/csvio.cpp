#include "beurling/csvio.hpp"

#include <cstdio>
#include <sstream>

#include "beurling/errors.hpp"

namespace beurling {

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& columns)
    : out_(path), ncols_(columns.size()) {
    if (!out_) throw resource_error("cannot open CSV output file: " + path);
    out_ << "# beurling-lab v1\n";
    for (size_t i = 0; i < columns.size(); ++i)
        out_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
}

std::string CsvWriter::format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != ncols_) throw usage_error("CSV row width mismatch");
    for (size_t i = 0; i < values.size(); ++i)
        out_ << format(values[i]) << (i + 1 < values.size() ? "," : "\n");
}

void CsvWriter::row_mixed(const std::vector<std::string>& cells) {
    if (cells.size() != ncols_) throw usage_error("CSV row width mismatch");
    for (size_t i = 0; i < cells.size(); ++i)
        out_ << cells[i] << (i + 1 < cells.size() ? "," : "\n");
}

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

Config Config::from_string(const std::string& text) {
    Config c;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw domain_error("config line without '=': " + line);
        std::string key = strip(line.substr(0, eq));
        std::string val = strip(line.substr(eq + 1));
        if (val.size() >= 2 && val.front() == '"' && val.back() == '"')
            val = val.substr(1, val.size() - 2);
        c.kv_[key] = val;
    }
    return c;
}

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_string(ss.str());
}

std::string Config::get_str(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw domain_error("missing config key: " + key);
    return it->second;
}

std::string Config::get_str(const std::string& key, const std::string& dflt) const {
    auto it = kv_.find(key);
    return it == kv_.end() ? dflt : it->second;
}

double Config::get_num(const std::string& key) const {
    const std::string s = get_str(key);
    try {
        return std::stod(s);
    } catch (...) {
        throw domain_error("config key '" + key + "' is not a number: " + s);
    }
}

double Config::get_num(const std::string& key, double dflt) const {
    return has(key) ? get_num(key) : dflt;
}

long Config::get_int(const std::string& key, long dflt) const {
    return has(key) ? static_cast<long>(get_num(key)) : dflt;
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        if (cur.empty()) continue;
        out.push_back(std::stod(cur));
    }
    return out;
}

} // namespace beurling
