#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <symdiff/rational.hpp>

namespace symdiff::cli {

struct SweepRow {
    std::int64_t m = 0;
    std::int64_t hsum = 0;
    Rational mu;
    Rational chi_orb;
    Rational h1;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepStats {
    std::size_t from_cache = 0;
    std::size_t computed = 0;
    std::size_t rejected_lines = 0;
};

SweepRow compute_row(int n, std::int64_t m);

/// Rows for m_from..m_to in increasing m. m_from == m_to + 1 gives an empty table.
/// With a cache path, valid rows are reused and newly computed rows are appended
/// by the calling thread only.
std::vector<SweepRow> sweep(int n, std::int64_t m_from, std::int64_t m_to, unsigned parallel,
                            const std::optional<std::filesystem::path>& cache = std::nullopt,
                            SweepStats* stats = nullptr);

std::uint64_t fnv1a(std::string_view bytes);

std::string cache_line(int n, const SweepRow& row);

/// nullopt for malformed lines and checksum mismatches.
struct CachedRow {
    int n;
    SweepRow row;
};
std::optional<CachedRow> parse_cache_line(std::string_view line);

} // namespace symdiff::cli
