#include "common.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace wcli {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) return "nan";
    return {buf, ptr};
}

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    return format_double(v);
}

std::vector<double> parse_value_list(const std::string& text) {
    auto parse_one = [](const std::string& s) {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters in number: " + s);
        return v;
    };

    if (text.find(':') != std::string::npos) {
        size_t c1 = text.find(':');
        size_t c2 = text.find(':', c1 + 1);
        if (c2 == std::string::npos)
            throw std::invalid_argument("range must be start:step:stop: " + text);
        double start = parse_one(text.substr(0, c1));
        double step = parse_one(text.substr(c1 + 1, c2 - c1 - 1));
        double stop = parse_one(text.substr(c2 + 1));
        if (!(step > 0.0) && !(step < 0.0))
            throw std::invalid_argument("range step must be nonzero: " + text);
        if ((stop - start) / step < 0.0)
            throw std::invalid_argument("range step points away from stop: " + text);
        std::vector<double> out;
        // stop inclusive within half a step
        long count = static_cast<long>(std::floor((stop - start) / step + 0.5)) + 1;
        for (long i = 0; i < count; ++i) out.push_back(start + step * static_cast<double>(i));
        return out;
    }

    std::vector<double> out;
    size_t begin = 0;
    while (begin <= text.size()) {
        size_t comma = text.find(',', begin);
        std::string tok = text.substr(begin, comma == std::string::npos ? comma : comma - begin);
        if (tok.empty()) throw std::invalid_argument("empty entry in value list: " + text);
        out.push_back(parse_one(tok));
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty value list");
    return out;
}

TableWriter::TableWriter(std::vector<std::string> columns, const OutputOptions& opts)
    : columns_(std::move(columns)), opts_(opts) {}

void TableWriter::add_row(const std::vector<double>& values) {
    rows_.push_back(values);
}

void TableWriter::write_to(std::ostream& os) const {
    if (opts_.format == "json") {
        os << "[";
        for (size_t r = 0; r < rows_.size(); ++r) {
            os << (r == 0 ? "\n" : ",\n") << "  {";
            for (size_t c = 0; c < columns_.size(); ++c) {
                if (c > 0) os << ", ";
                os << '"' << columns_[c] << "\": " << json_number(rows_[r][c]);
            }
            os << "}";
        }
        os << "\n]\n";
        return;
    }
    for (size_t c = 0; c < columns_.size(); ++c) os << (c == 0 ? "" : ",") << columns_[c];
    os << "\n";
    for (const auto& row : rows_) {
        for (size_t c = 0; c < row.size(); ++c) os << (c == 0 ? "" : ",") << format_double(row[c]);
        os << "\n";
    }
}

bool TableWriter::finish() {
    if (opts_.out_path.empty()) {
        write_to(std::cout);
        return true;
    }
    std::ofstream file(opts_.out_path, std::ios::binary);
    if (!file) {
        std::cerr << "cannot open output file: " << opts_.out_path << "\n";
        return false;
    }
    write_to(file);
    return true;
}

}  // namespace wcli
