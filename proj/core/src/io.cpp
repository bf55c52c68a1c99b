#include "unisplit/io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace unisplit {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> fields_of(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

bool parse_double(std::string_view s, double& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

bool parse_int(std::string_view s, int& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec == std::errc() && ptr == s.data() + s.size() && !s.empty()) return true;
    // Accept integral floating-point spellings such as "1.0".
    double d;
    if (parse_double(s, d) && d == std::floor(d) && std::abs(d) < 2e9) {
        out = static_cast<int>(d);
        return true;
    }
    return false;
}

// Calls fn(line_number, fields) for every data line; the first data line is
// skipped as a header when is_header says so.
template <class IsHeader, class Fn>
void for_each_record(const std::string& text, IsHeader is_header, Fn fn) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    bool first = true;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto f = fields_of(line);
        if (first) {
            first = false;
            if (is_header(f)) continue;
        }
        fn(line_no, f);
    }
}

std::string at_line(std::size_t n) { return "line " + std::to_string(n) + ": "; }

}  // namespace

SampleFile parse_samples(const std::string& text) {
    SampleFile out;
    bool labelled = false;
    bool decided = false;
    for_each_record(
        text, [](const auto& f) { double v; return !parse_double(f[0], v); },
        [&](std::size_t line, const std::vector<std::string_view>& f) {
            double v;
            if (!parse_double(f[0], v) || !std::isfinite(v)) throw Error(at_line(line) + "bad value '" + std::string(f[0]) + "'");
            const bool has_label = f.size() >= 2 && !f[1].empty();
            if (!decided) {
                labelled = has_label;
                decided = true;
            } else if (has_label != labelled) {
                throw Error(at_line(line) + "label column present on some lines only");
            }
            out.values.push_back(v);
            if (labelled) {
                int l;
                if (!parse_int(f[1], l)) throw Error(at_line(line) + "bad label '" + std::string(f[1]) + "'");
                out.labels.push_back(l);
            }
        });
    if (out.values.empty()) throw Error("empty dataset");
    return out;
}

SampleFile read_samples(const std::string& path) { return parse_samples(read_text(path)); }

Table parse_table(const std::string& text) {
    Table t;
    std::size_t width = 0;
    for_each_record(
        text,
        [](const auto& f) {
            for (const auto& s : f) {
                double v;
                if (!parse_double(s, v)) return true;
            }
            return false;
        },
        [&](std::size_t line, const std::vector<std::string_view>& f) {
            if (f.size() < 2) throw Error(at_line(line) + "need at least one feature and a label");
            if (width == 0) width = f.size();
            if (f.size() != width) throw Error(at_line(line) + "expected " + std::to_string(width) + " columns");
            std::vector<double> row(f.size() - 1);
            for (std::size_t i = 0; i + 1 < f.size(); ++i) {
                if (!parse_double(f[i], row[i]) || !std::isfinite(row[i])) {
                    throw Error(at_line(line) + "bad value '" + std::string(f[i]) + "'");
                }
            }
            int label;
            if (!parse_int(f.back(), label)) throw Error(at_line(line) + "bad label '" + std::string(f.back()) + "'");
            t.rows.push_back(std::move(row));
            t.labels.push_back(label);
        });
    if (t.rows.empty()) throw Error("empty table");
    return t;
}

Table read_table(const std::string& path) { return parse_table(read_text(path)); }

std::string format_double(double x) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

std::string format_values(std::span<const double> values) {
    std::string out;
    out.reserve(values.size() * 20);
    for (double v : values) {
        out += format_double(v);
        out += '\n';
    }
    return out;
}

std::string format_labels(std::span<const int> labels) {
    std::string out;
    for (int l : labels) {
        out += std::to_string(l);
        out += '\n';
    }
    return out;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw Error("cannot write '" + path + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error("cannot write '" + path + "'");
    }
}

}  // namespace unisplit
