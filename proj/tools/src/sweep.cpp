#include "symdiff_cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <cstdio>
#include <fstream>
#include <map>
#include <thread>

#include <symdiff/error.hpp>
#include <symdiff/invariants.hpp>
#include <symdiff/latticesum.hpp>

#include "symdiff_cli/json.hpp"

namespace symdiff::cli {

namespace {

std::string row_digest_input(int n, const SweepRow& row) {
    return std::to_string(n) + "|" + std::to_string(row.m) + "|" + std::to_string(row.hsum) + "|" + row.mu.str() +
           "|" + row.chi_orb.str() + "|" + row.h1.str();
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::map<std::int64_t, SweepRow> load_cache(const std::filesystem::path& path, int n, SweepStats& stats) {
    std::map<std::int64_t, SweepRow> rows;
    std::ifstream in(path);
    if (!in) return rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto parsed = parse_cache_line(line);
        if (!parsed) {
            ++stats.rejected_lines;
            continue;
        }
        if (parsed->n == n) rows[parsed->row.m] = parsed->row;
    }
    return rows;
}

} // namespace

SweepRow compute_row(int n, std::int64_t m) {
    SweepRow row;
    row.m = m;
    row.hsum = hsum(n, m);
    row.mu = mu(n, m);
    row.chi_orb = chi_orb(n, m);
    row.h1 = row.mu - row.chi_orb - Rational(row.hsum);
    return row;
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string cache_line(int n, const SweepRow& row) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["m"] = row.m;
    j["hsum"] = row.hsum;
    j["mu"] = row.mu.str();
    j["chi_orb"] = row.chi_orb.str();
    j["h1"] = row.h1.str();
    j["checksum"] = hex64(fnv1a(row_digest_input(n, row)));
    return j.dump();
}

std::optional<CachedRow> parse_cache_line(std::string_view line) {
    try {
        const auto j = nlohmann::json::parse(line);
        CachedRow out;
        out.n = j.at("n").get<int>();
        out.row.m = j.at("m").get<std::int64_t>();
        out.row.hsum = j.at("hsum").get<std::int64_t>();
        out.row.mu = Rational::parse(j.at("mu").get<std::string>());
        out.row.chi_orb = Rational::parse(j.at("chi_orb").get<std::string>());
        out.row.h1 = Rational::parse(j.at("h1").get<std::string>());
        if (j.at("checksum").get<std::string>() != hex64(fnv1a(row_digest_input(out.n, out.row))))
            return std::nullopt;
        return out;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::vector<SweepRow> sweep(int n, std::int64_t m_from, std::int64_t m_to, unsigned parallel,
                            const std::optional<std::filesystem::path>& cache, SweepStats* stats) {
    if (m_from < 0) throw DomainError("m_from must be nonnegative");
    if (m_from > m_to + 1) throw DomainError("m_from must not exceed m_to + 1");
    SweepStats local;
    SweepStats& st = stats ? *stats : local;
    st = {};

    const auto count = static_cast<std::size_t>(m_to + 1 - m_from);
    std::vector<std::optional<SweepRow>> slots(count);
    if (cache) {
        const auto cached = load_cache(*cache, n, st);
        for (std::size_t k = 0; k < count; ++k) {
            auto it = cached.find(m_from + static_cast<std::int64_t>(k));
            if (it != cached.end()) {
                slots[k] = it->second;
                ++st.from_cache;
            }
        }
    }

    std::vector<std::size_t> todo;
    for (std::size_t k = 0; k < count; ++k)
        if (!slots[k]) todo.push_back(k);

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(todo.size());
    auto worker = [&] {
        for (std::size_t t = next++; t < todo.size(); t = next++) {
            try {
                slots[todo[t]] = compute_row(n, m_from + static_cast<std::int64_t>(todo[t]));
            } catch (...) {
                failures[t] = std::current_exception();
            }
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(parallel, static_cast<unsigned>(todo.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (auto& f : failures)
        if (f) std::rethrow_exception(f);
    st.computed = todo.size();

    if (cache && !todo.empty()) {
        std::ofstream app(*cache, std::ios::app);
        if (!app) throw DomainError("cannot write cache file " + cache->string());
        for (std::size_t k : todo) app << cache_line(n, *slots[k]) << '\n';
    }

    std::vector<SweepRow> rows;
    rows.reserve(count);
    for (auto& s : slots) rows.push_back(std::move(*s));
    return rows;
}

} // namespace symdiff::cli
