// beurling-lab: CSV output and flat key/value config files.
//
// CSV files are the only experiment output format. Every file starts with
// the schema comment "# beurling-lab v1"; numbers are printed with %.17g so
// identical runs are byte-identical.

#ifndef BEURLING_CSVIO_HPP
#define BEURLING_CSVIO_HPP

#include <fstream>
#include <map>
#include <string>
#include <vector>

namespace beurling {

class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns);

    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& cells);

    static std::string format(double v);

  private:
    std::ofstream out_;
    size_t ncols_;
};

// TOML-like flat config: `key = value` lines, '#' comments, quoted or bare
// strings, numbers, booleans. No tables, no nesting.
class Config {
  public:
    Config() = default;
    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text);

    bool has(const std::string& key) const { return kv_.count(key) != 0; }
    std::string get_str(const std::string& key) const;
    std::string get_str(const std::string& key, const std::string& dflt) const;
    double get_num(const std::string& key) const;
    double get_num(const std::string& key, double dflt) const;
    long get_int(const std::string& key, long dflt) const;

  private:
    std::map<std::string, std::string> kv_;
};

// Comma-separated list of numbers ("0.8,0.9").
std::vector<double> parse_number_list(const std::string& text);

} // namespace beurling

#endif
