#include "lt/io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace lt::io {

namespace {

constexpr char kMagic[4] = {'L', 'V', 'F', '1'};
constexpr std::uint64_t kHeaderSize = 12;

void put_u32_le(std::string& buf, std::uint32_t v) {
    buf.push_back(static_cast<char>(v & 0xFF));
    buf.push_back(static_cast<char>((v >> 8) & 0xFF));
    buf.push_back(static_cast<char>((v >> 16) & 0xFF));
    buf.push_back(static_cast<char>((v >> 24) & 0xFF));
}

std::uint32_t get_u32_le(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) |
           (static_cast<std::uint32_t>(p[3]) << 24);
}

}  // namespace

IoError::IoError(std::string path_, const std::string& msg)
    : std::runtime_error(msg + " (" + path_ + ")"), path(std::move(path_)) {}

FormatError::FormatError(std::string path_, std::uint64_t offset_, const std::string& msg)
    : IoError(std::move(path_), msg + " at byte " + std::to_string(offset_)),
      offset(offset_) {}

LengthError::LengthError(std::string path_, std::uint64_t offset_, const std::string& msg)
    : IoError(std::move(path_), msg + " at byte " + std::to_string(offset_)),
      offset(offset_) {}

DataError::DataError(std::string path_, std::uint64_t offset_, const std::string& msg)
    : IoError(std::move(path_), msg + " at byte " + std::to_string(offset_)),
      offset(offset_) {}

void write_batch(const std::string& path, const LatentBatch& batch) {
    if (batch.rows() > 0xFFFFFFFFull || batch.dim() > 0xFFFFFFFFull)
        throw std::invalid_argument("write_batch: dimensions exceed the 32-bit header");

    std::string buf;
    buf.reserve(kHeaderSize + batch.rows() * batch.dim() * 4);
    buf.append(kMagic, 4);
    put_u32_le(buf, static_cast<std::uint32_t>(batch.rows()));
    put_u32_le(buf, static_cast<std::uint32_t>(batch.dim()));
    for (const double v : batch.data()) {
        // Stored as float32; computation stays in double, files stay compact.
        const auto bits = std::bit_cast<std::uint32_t>(static_cast<float>(v));
        put_u32_le(buf, bits);
    }

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError(path, "cannot open temp file for writing");
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError(path, "short write to temp file");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError(path, "rename into place failed");
    }
}

LatentBatch read_batch(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path, "cannot open for reading");

    unsigned char header[kHeaderSize];
    in.read(reinterpret_cast<char*>(header), kHeaderSize);
    if (in.gcount() != static_cast<std::streamsize>(kHeaderSize))
        throw LengthError(path, static_cast<std::uint64_t>(in.gcount()),
                          "file shorter than the 12-byte header");
    if (std::memcmp(header, kMagic, 4) != 0)
        throw FormatError(path, 0, "bad magic, expected \"LVF1\"");

    const std::uint32_t n = get_u32_le(header + 4);
    const std::uint32_t d = get_u32_le(header + 8);
    if (n == 0 || d == 0)
        throw FormatError(path, 4, "header declares an empty batch");

    const std::uint64_t count = static_cast<std::uint64_t>(n) * d;
    std::vector<unsigned char> payload(count * 4);
    in.read(reinterpret_cast<char*>(payload.data()),
            static_cast<std::streamsize>(payload.size()));
    const std::uint64_t got = static_cast<std::uint64_t>(in.gcount());
    if (got != payload.size())
        throw LengthError(path, kHeaderSize + got, "payload truncated");
    if (in.peek() != std::char_traits<char>::eof())
        throw LengthError(path, kHeaderSize + payload.size(),
                          "trailing bytes after payload");

    LatentBatch batch(n, d);
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto bits = get_u32_le(payload.data() + i * 4);
        const float f = std::bit_cast<float>(bits);
        if (!std::isfinite(f))
            throw DataError(path, kHeaderSize + i * 4, "non-finite value");
        batch.data()[i] = static_cast<double>(f);
    }
    return batch;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void write_csv_report(const std::string& path, std::span<const std::string> header,
                      const std::vector<std::vector<double>>& rows) {
    for (const auto& row : rows)
        if (row.size() != header.size())
            throw std::invalid_argument("write_csv_report: row width differs from header");

    std::string buf;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i > 0) buf.push_back(',');
        buf += header[i];
    }
    buf.push_back('\n');
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) buf.push_back(',');
            buf += format_number(row[i]);
        }
        buf.push_back('\n');
    }

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError(path, "cannot open temp file for writing");
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError(path, "short write to temp file");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError(path, "rename into place failed");
    }
}

std::string ks_report_json(const stats::KSReport& report) {
    nlohmann::json j;
    j["statistic"] = report.statistic;
    j["n"] = report.n;
    j["threshold"] = report.threshold;
    j["pass"] = report.pass;
    return j.dump();
}

}  // namespace lt::io
