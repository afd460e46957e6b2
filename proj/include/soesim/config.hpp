#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace soesim {

// Error raised for grammar, type, or missing-key problems in configuration
// files. The message carries file:line where available.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Key = value configuration with [section] headers, '#' comments, repeatable
// sections and repeatable keys. The grammar is documented in docs/formats.md.
class Config {
public:
    struct Entry {
        std::string key;
        std::string value;
        int line = 0;
    };

    struct Section {
        std::string name;
        int line = 0;
        std::vector<Entry> entries;

        const Entry* find(const std::string& key) const;
        std::vector<const Entry*> find_all(const std::string& key) const;

        bool has(const std::string& key) const { return find(key) != nullptr; }

        std::string get_string(const std::string& key) const;
        std::string get_string(const std::string& key, const std::string& fallback) const;
        double get_double(const std::string& key) const;
        double get_double(const std::string& key, double fallback) const;
        int get_int(const std::string& key) const;
        int get_int(const std::string& key, int fallback) const;
        bool get_bool(const std::string& key) const;
        bool get_bool(const std::string& key, bool fallback) const;

        [[noreturn]] void missing(const std::string& key) const;

        std::string origin; // owning file, for error messages
    };

    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text, const std::string& origin = "<string>");

    const std::vector<Section>& sections() const { return sections_; }

    // First section with the given name, or nullptr.
    const Section* find(const std::string& name) const;
    // All sections with the given name, in file order.
    std::vector<const Section*> find_all(const std::string& name) const;
    // Like find(), but throws ConfigError when the section is absent.
    const Section& require(const std::string& name) const;

    const std::string& origin() const { return origin_; }

private:
    std::vector<Section> sections_;
    std::string origin_;
};

// Parses the number part of an entry value, rejecting trailing junk.
double parse_double(const std::string& text, const std::string& context);
int parse_int(const std::string& text, const std::string& context);

} // namespace soesim
