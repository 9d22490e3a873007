#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lt/batch.hpp"
#include "lt/stats.hpp"

namespace lt::io {

// Errors carry the offending path; format errors also carry a byte offset.
struct IoError : std::runtime_error {
    IoError(std::string path_, const std::string& msg);
    std::string path;
};

struct FormatError : IoError {  // bad magic / malformed header
    FormatError(std::string path_, std::uint64_t offset_, const std::string& msg);
    std::uint64_t offset;
};

struct LengthError : IoError {  // truncated or oversized payload
    LengthError(std::string path_, std::uint64_t offset_, const std::string& msg);
    std::uint64_t offset;
};

struct DataError : IoError {  // non-finite values
    DataError(std::string path_, std::uint64_t offset_, const std::string& msg);
    std::uint64_t offset;
};

// LVF1 latent vector file: magic "LVF1", then n and d as little-endian
// uint32, then n*d little-endian float32 values, row-major. Values are
// stored in single precision regardless of host endianness.

// Writes atomically (temp file in the same directory, then rename).
void write_batch(const std::string& path, const LatentBatch& batch);

// Validates magic, header and payload length; rejects non-finite values.
LatentBatch read_batch(const std::string& path);

// RFC-4180-style CSV: header line, LF endings, '.' decimal separator,
// numbers at 9 significant digits. All rows must match the header width.
void write_csv_report(const std::string& path, std::span<const std::string> header,
                      const std::vector<std::vector<double>>& rows);

// "%.9g" rendering used for all CSV numbers.
std::string format_number(double v);

// JSON object {statistic, n, threshold, pass} for a KS report.
std::string ks_report_json(const stats::KSReport& report);

}  // namespace lt::io
