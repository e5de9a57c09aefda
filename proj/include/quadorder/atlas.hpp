#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "quadorder/classify.hpp"

namespace quadorder {

enum class OutputFormat { Csv, Jsonl };

struct ScanConfig {
    std::int64_t d_min = 2;
    std::int64_t d_max = 999;
    std::int64_t n_min = 2;
    std::int64_t n_max = 10000;
    std::filesystem::path out;
    OutputFormat format = OutputFormat::Csv;
    bool resume = false;
    int jobs = 1;
    /// Cross-check cells with n <= verify_n_max against the brute-force oracle.
    bool verify = false;
    std::int64_t verify_n_max = 12;
};

struct Checkpoint {
    std::int64_t last_d = 0;
    std::int64_t rows = 0;
    std::int64_t hfd = 0;
};

struct ScanSummary {
    std::int64_t rows = 0;
    std::int64_t hfd = 0;
    double elapsed_seconds = 0.0;
};

struct HfdReport {
    std::int64_t total = 0;
    std::map<std::int64_t, std::int64_t> per_d;
};

class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kCsvHeader =
    "d,n,D,m,L,ideal_preserving,locally_associated,associated,h_maximal,h_order,hfd";

std::string to_csv_row(const ClassificationRecord& r);
std::string to_json_row(const ClassificationRecord& r);
ClassificationRecord parse_json_row(const std::string& line);

std::filesystem::path checkpoint_path(const std::filesystem::path& out);
std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& file);
void write_checkpoint(const std::filesystem::path& file, const Checkpoint& c);

/// Cross-checks the closed-form flags of `r` against the brute-force oracle.
/// Returns a description of the first disagreement, or nothing.
std::optional<std::string> oracle_mismatch(const FieldData& fd, const ClassificationRecord& r);

/// Classifies every order (d, n) in the window. One row per squarefree d and
/// n, ordered by d then n, written to cfg.out; checkpointed after each d.
ScanSummary scan(const ScanConfig& cfg);

/// Counts hfd rows with n > 1 in a scan output file (CSV or JSONL).
HfdReport report_hfd(const std::filesystem::path& input);

}  // namespace quadorder
