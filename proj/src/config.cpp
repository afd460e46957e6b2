#include "soesim/config.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace soesim {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    std::ostringstream os;
    os << origin << ":" << line << ": " << msg;
    throw ConfigError(os.str());
}

} // namespace

const Config::Entry* Config::Section::find(const std::string& key) const {
    for (const auto& e : entries)
        if (e.key == key) return &e;
    return nullptr;
}

std::vector<const Config::Entry*> Config::Section::find_all(const std::string& key) const {
    std::vector<const Entry*> out;
    for (const auto& e : entries)
        if (e.key == key) out.push_back(&e);
    return out;
}

void Config::Section::missing(const std::string& key) const {
    throw ConfigError(origin + ": missing key '" + key + "' in section [" + name + "]");
}

std::string Config::Section::get_string(const std::string& key) const {
    const Entry* e = find(key);
    if (!e) missing(key);
    return e->value;
}

std::string Config::Section::get_string(const std::string& key, const std::string& fallback) const {
    const Entry* e = find(key);
    return e ? e->value : fallback;
}

double Config::Section::get_double(const std::string& key) const {
    const Entry* e = find(key);
    if (!e) missing(key);
    return parse_double(e->value, origin + ":" + std::to_string(e->line) + " key '" + key + "'");
}

double Config::Section::get_double(const std::string& key, double fallback) const {
    const Entry* e = find(key);
    if (!e) return fallback;
    return parse_double(e->value, origin + ":" + std::to_string(e->line) + " key '" + key + "'");
}

int Config::Section::get_int(const std::string& key) const {
    const Entry* e = find(key);
    if (!e) missing(key);
    return parse_int(e->value, origin + ":" + std::to_string(e->line) + " key '" + key + "'");
}

int Config::Section::get_int(const std::string& key, int fallback) const {
    const Entry* e = find(key);
    if (!e) return fallback;
    return parse_int(e->value, origin + ":" + std::to_string(e->line) + " key '" + key + "'");
}

bool Config::Section::get_bool(const std::string& key) const {
    const Entry* e = find(key);
    if (!e) missing(key);
    const std::string v = e->value;
    if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "off" || v == "no" || v == "0") return false;
    throw ConfigError(origin + ":" + std::to_string(e->line) + ": expected boolean for key '" +
                      key + "', got '" + v + "'");
}

bool Config::Section::get_bool(const std::string& key, bool fallback) const {
    return find(key) ? get_bool(key) : fallback;
}

Config Config::parse_string(const std::string& text, const std::string& origin) {
    Config cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    Section* current = nullptr;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                fail(origin, lineno, "unterminated section header '" + line + "'");
            std::string name = trim(line.substr(1, line.size() - 2));
            if (name.empty()) fail(origin, lineno, "empty section name");
            cfg.sections_.push_back(Section{name, lineno, {}, origin});
            current = &cfg.sections_.back();
            continue;
        }

        auto eq = line.find('=');
        if (eq == std::string::npos)
            fail(origin, lineno, "expected 'key = value', got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(origin, lineno, "empty key");
        if (!current)
            fail(origin, lineno, "key '" + key + "' appears before any [section]");
        current->entries.push_back(Entry{key, value, lineno});
    }
    return cfg;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

const Config::Section* Config::find(const std::string& name) const {
    for (const auto& s : sections_)
        if (s.name == name) return &s;
    return nullptr;
}

std::vector<const Config::Section*> Config::find_all(const std::string& name) const {
    std::vector<const Section*> out;
    for (const auto& s : sections_)
        if (s.name == name) out.push_back(&s);
    return out;
}

const Config::Section& Config::require(const std::string& name) const {
    const Section* s = find(name);
    if (!s) throw ConfigError(origin_ + ": missing required section [" + name + "]");
    return *s;
}

double parse_double(const std::string& text, const std::string& context) {
    const std::string t = trim(text);
    if (t.empty()) throw ConfigError(context + ": expected number, got empty value");
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (errno == ERANGE || end != t.c_str() + t.size())
        throw ConfigError(context + ": expected number, got '" + t + "'");
    return v;
}

int parse_int(const std::string& text, const std::string& context) {
    const std::string t = trim(text);
    if (t.empty()) throw ConfigError(context + ": expected integer, got empty value");
    errno = 0;
    char* end = nullptr;
    long v = std::strtol(t.c_str(), &end, 10);
    if (errno == ERANGE || end != t.c_str() + t.size())
        throw ConfigError(context + ": expected integer, got '" + t + "'");
    return static_cast<int>(v);
}

} // namespace soesim
