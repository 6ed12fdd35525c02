// SPDX-License-Identifier: Apache-2.0
#ifndef GRAVBEC_IO_HPP
#define GRAVBEC_IO_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace gravbec::io {

/// Scientific notation with 15 significant digits; bit-identical across runs.
std::string format_value(double v);

/// FNV-1a 64-bit over raw bytes.
std::uint64_t fnv1a64(const std::string& bytes);

std::string hex64(std::uint64_t v);

/// CSV with leading '#' comment lines, one header row, %.*e data rows.
class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path& path,
              const std::vector<std::string>& comments,
              const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    /// Mixed row: pre-formatted strings (e.g. region labels) pass through.
    void row_strings(const std::vector<std::string>& values);

  private:
    std::ofstream out_;
    std::size_t n_columns_;
};

/// Flat `key = value` report block.
class ReportWriter {
  public:
    ReportWriter(const std::filesystem::path& path,
                 const std::vector<std::string>& comments);
    void kv(const std::string& key, double value);
    void kv(const std::string& key, const std::string& value);

  private:
    std::ofstream out_;
};

}  // namespace gravbec::io

#endif  // GRAVBEC_IO_HPP
