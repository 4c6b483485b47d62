// Flat key/value configuration documents ("key = value" lines, '#' comments).
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace gcq {

class config {
public:
    config() = default;

    static config from_file(const std::string& path);
    static config from_string(std::string_view text);

    bool has(const std::string& key) const { return values_.count(key) > 0; }

    int64_t get_int(const std::string& key, int64_t fallback) const;
    double get_double(const std::string& key, double fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;

    void set(const std::string& key, const std::string& value) { values_[key] = value; }

    const std::map<std::string, std::string>& values() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

} // namespace gcq
