// SPDX-License-Identifier: Apache-2.0
#include "gravbec/io.hpp"

#include <cstdio>
#include <stdexcept>

namespace gravbec::io {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.14e", v);
    return buf;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path,
                     const std::vector<std::string>& comments,
                     const std::vector<std::string>& columns)
    : out_(path), n_columns_(columns.size()) {
    if (!out_) throw std::runtime_error("cannot open output file: " + path.string());
    for (const auto& c : comments) out_ << "# " << c << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        out_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != n_columns_) throw std::runtime_error("CSV row arity mismatch");
    for (std::size_t i = 0; i < values.size(); ++i)
        out_ << format_value(values[i]) << (i + 1 < values.size() ? "," : "\n");
}

void CsvWriter::row_strings(const std::vector<std::string>& values) {
    if (values.size() != n_columns_) throw std::runtime_error("CSV row arity mismatch");
    for (std::size_t i = 0; i < values.size(); ++i)
        out_ << values[i] << (i + 1 < values.size() ? "," : "\n");
}

ReportWriter::ReportWriter(const std::filesystem::path& path,
                           const std::vector<std::string>& comments)
    : out_(path) {
    if (!out_) throw std::runtime_error("cannot open output file: " + path.string());
    for (const auto& c : comments) out_ << "# " << c << "\n";
}

void ReportWriter::kv(const std::string& key, double value) {
    out_ << key << " = " << format_value(value) << "\n";
}

void ReportWriter::kv(const std::string& key, const std::string& value) {
    out_ << key << " = " << value << "\n";
}

}  // namespace gravbec::io
