#pragma once

#include <algorithm>
#include <ctime>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "taumap/numeric.hpp"
#include "taumap/partition.hpp"

namespace taumap {

inline constexpr const char* cache_format_version = "1";

enum class CacheOutcome { Inserted, Matched, Mismatch };

struct CacheEntry {
    Rat value;
    std::string method;
    std::string version;
    std::string timestamp;
};

// Canonical cache keys.  Exponent lists are sorted ascending (the order
// ⟨τ_{k_1}...τ_{k_n}⟩ is symmetric in) and partitions print descending, so
// equal inputs always map to equal keys.
struct ParsedKey {
    std::string kind;  // "tau", "hurwitz", or "hodge"
    int g = 0;
    int j = 0;             // hodge only
    std::vector<int> ks;   // tau/hodge exponents or hurwitz parts
};

namespace detail {

inline std::string bracket_list(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

inline std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace detail

// Line-delimited JSON cache of exact results.  Records are append-only: a
// mismatch between a new computation and a stored value is reported, never
// papered over by rewriting the file.
class ResultCache {
public:
    explicit ResultCache(std::string path) : path_(std::move(path)) {
        std::ifstream in(path_);
        if (!in.is_open()) return;
        std::string line;
        long lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
            if (rec.is_discarded() || !rec.is_object())
                throw std::runtime_error(location(lineno) + ": malformed JSON record");
            for (const char* field : {"key", "num", "den", "method", "version", "timestamp"})
                if (!rec.contains(field) || !rec[field].is_string())
                    throw std::runtime_error(location(lineno) + ": missing field '" +
                                             field + "'");
            CacheEntry entry;
            try {
                Int num(rec["num"].get<std::string>());
                Int den(rec["den"].get<std::string>());
                if (den == 0) throw std::runtime_error("zero denominator");
                entry.value = Rat(num, den);
            } catch (const std::runtime_error&) {
                throw std::runtime_error(location(lineno) + ": malformed rational");
            }
            entry.method = rec["method"].get<std::string>();
            entry.version = rec["version"].get<std::string>();
            entry.timestamp = rec["timestamp"].get<std::string>();
            std::string key = rec["key"].get<std::string>();
            auto it = entries_.find(key);
            if (it == entries_.end())
                entries_.emplace(key, std::move(entry));
            else if (it->second.value != entry.value)
                throw std::runtime_error(location(lineno) + ": conflicting duplicate for key '" +
                                         key + "'");
        }
    }

    const std::string& path() const { return path_; }
    std::size_t size() const { return entries_.size(); }
    bool contains(const std::string& key) const { return entries_.count(key) != 0; }

    std::optional<CacheEntry> get(const std::string& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    // Compares against the stored value when present, appends a new record
    // otherwise.  Mismatch leaves both the file and the in-memory table
    // untouched so the conflict stays visible.
    CacheOutcome check_or_insert(const std::string& key, const Rat& value,
                                 const std::string& method) {
        auto it = entries_.find(key);
        if (it != entries_.end())
            return it->second.value == value ? CacheOutcome::Matched : CacheOutcome::Mismatch;
        CacheEntry entry;
        entry.value = value;
        entry.method = method;
        entry.version = cache_format_version;
        entry.timestamp = detail::utc_timestamp();
        append_record(key, entry);
        entries_.emplace(key, std::move(entry));
        return CacheOutcome::Inserted;
    }

    // Key-sorted view, for deterministic reports.
    std::vector<std::pair<std::string, CacheEntry>> entries() const {
        return {entries_.begin(), entries_.end()};
    }

    static std::string tau_key(int g, std::vector<int> k) {
        std::sort(k.begin(), k.end());
        return "tau;g=" + std::to_string(g) + ";k=" + detail::bracket_list(k);
    }

    static std::string hurwitz_key(int g, const Partition& mu) {
        return "hurwitz;g=" + std::to_string(g) + ";mu=" + detail::bracket_list(mu.parts());
    }

    static std::string hodge_key(int g, int j, std::vector<int> k) {
        std::sort(k.begin(), k.end());
        return "hodge;g=" + std::to_string(g) + ";j=" + std::to_string(j) +
               ";k=" + detail::bracket_list(k);
    }

    // Inverse of the key builders; nullopt for anything that does not parse.
    static std::optional<ParsedKey> parse_key(const std::string& key) {
        ParsedKey out;
        std::vector<std::string> parts;
        std::stringstream ss(key);
        std::string item;
        while (std::getline(ss, item, ';')) parts.push_back(item);
        auto field = [&](std::size_t i, const std::string& name) -> std::optional<std::string> {
            if (i >= parts.size() || parts[i].rfind(name + "=", 0) != 0) return std::nullopt;
            return parts[i].substr(name.size() + 1);
        };
        auto to_int = [](const std::string& s, int& dst) {
            if (s.empty()) return false;
            std::size_t pos = 0;
            try {
                dst = std::stoi(s, &pos);
            } catch (...) {
                return false;
            }
            return pos == s.size();
        };
        auto to_list = [&](const std::string& s, std::vector<int>& dst) {
            if (s.size() < 2 || s.front() != '[' || s.back() != ']') return false;
            std::string body = s.substr(1, s.size() - 2);
            if (body.empty()) return true;
            if (body.back() == ',') return false;  // getline would drop the empty tail
            std::stringstream bs(body);
            std::string num;
            while (std::getline(bs, num, ',')) {
                int v = 0;
                if (!to_int(num, v)) return false;
                dst.push_back(v);
            }
            return true;
        };
        if (parts.empty()) return std::nullopt;
        out.kind = parts[0];
        if (out.kind == "tau") {
            auto gs = field(1, "g"), ks = field(2, "k");
            if (parts.size() != 3 || !gs || !ks) return std::nullopt;
            if (!to_int(*gs, out.g) || !to_list(*ks, out.ks)) return std::nullopt;
            return out;
        }
        if (out.kind == "hurwitz") {
            auto gs = field(1, "g"), mus = field(2, "mu");
            if (parts.size() != 3 || !gs || !mus) return std::nullopt;
            if (!to_int(*gs, out.g) || !to_list(*mus, out.ks)) return std::nullopt;
            return out;
        }
        if (out.kind == "hodge") {
            auto gs = field(1, "g"), js = field(2, "j"), ks = field(3, "k");
            if (parts.size() != 4 || !gs || !js || !ks) return std::nullopt;
            if (!to_int(*gs, out.g) || !to_int(*js, out.j) || !to_list(*ks, out.ks))
                return std::nullopt;
            return out;
        }
        return std::nullopt;
    }

private:
    std::string location(long lineno) const {
        return path_ + ":" + std::to_string(lineno);
    }

    // One whole line per record, written in a single buffered append and
    // flushed before close, so concurrent appenders interleave at line
    // granularity rather than mid-record.
    void append_record(const std::string& key, const CacheEntry& entry) {
        nlohmann::json rec{{"key", key},
                           {"num", numerator(entry.value).str()},
                           {"den", denominator(entry.value).str()},
                           {"method", entry.method},
                           {"version", entry.version},
                           {"timestamp", entry.timestamp}};
        std::ofstream out(path_, std::ios::app);
        if (!out.is_open())
            throw std::runtime_error("ResultCache: cannot open '" + path_ + "' for append");
        out << rec.dump() << '\n';
        out.flush();
        if (!out) throw std::runtime_error("ResultCache: write to '" + path_ + "' failed");
    }

    std::string path_;
    std::map<std::string, CacheEntry> entries_;
};

}  // namespace taumap
