#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sheafloc/formulas.hpp"
#include "sheafloc/invariants.hpp"

namespace sheafloc {

/// Append-only JSON-lines store of reports. Keys combine the canonical class
/// with the truncation settings, so proportional classes share an entry.
class ResultCache {
public:
    /// Loads existing lines; a missing file is an empty cache. Malformed
    /// lines raise UsageError with the line number.
    explicit ResultCache(std::string path);

    static std::string key(const ExtensionBundle& e, const TruncationPolicy& policy);

    std::optional<InvariantReport> lookup(const std::string& key) const;
    /// Appends one line {"key", "claim", "report"} and flushes it.
    void store(const std::string& key, const InvariantReport& r, const std::string& claim);

    const std::string& path() const { return path_; }
    std::size_t size() const { return entries_.size(); }
    long hits() const { return hits_; }

private:
    std::string path_;
    std::map<std::string, InvariantReport> entries_;
    mutable long hits_ = 0;
};

/// report(e), read from or written to the cache when one is given. The class
/// field always reflects e itself.
InvariantReport cached_report(const ExtensionBundle& e, const TruncationPolicy& policy = {},
                              ResultCache* cache = nullptr, const std::string& claim = "");

/// Seeds base, base + 1, ..., base + samples - 1.
std::vector<std::uint64_t> seed_schedule(std::uint64_t base, int samples);

/// Reports for random_class at every seed of the schedule, in seed order.
std::vector<InvariantReport> sample_reports(const SpaceDescriptor& space, int j, int samples,
                                            std::uint64_t seedBase = 0,
                                            const TruncationPolicy& policy = {},
                                            ResultCache* cache = nullptr);

/// Componentwise minimum of w, h, chi, h1End (each minimized separately);
/// class is "min over N samples". Throws UsageError on an empty list.
InvariantReport componentwise_min(const std::vector<InvariantReport>& reports);

enum class Verdict { Pass, Fail, Inconclusive };
const char* to_string(Verdict v);

struct WitnessRecord {
    std::string claim;
    std::string space;
    int j = 0;
    std::string cls;  // canonical class text
    std::optional<std::uint64_t> seed;
    InvariantReport report;
    long target = 0;  // the chi the claim asks for
    Verdict verdict = Verdict::Inconclusive;
};

nlohmann::ordered_json to_json(const WitnessRecord& w);

/// A bundle on Z_k with chi = n. On k >= 2: the split j = 1 bundle for n = 0,
/// otherwise generic classes with j = n + 1 tried seed by seed. On k = 1,
/// where generic chi equals j: j = n, the trivial bundle for n = 0. No hit in
/// the schedule gives Inconclusive.
WitnessRecord witness_nonempty(int n, int k, int samples = 20, std::uint64_t seedBase = 0,
                               const TruncationPolicy& policy = {}, ResultCache* cache = nullptr);

struct ChargeSpectrum {
    int k = 0;
    int jMax = 0;
    int samples = 0;
    std::map<int, std::set<long>> achieved;  // j (multiple of k) -> chi values seen
    std::optional<long> minChi;
    bool boundCertified = false;  // j - 1 >= k - 1 for every swept j
    Verdict verdict = Verdict::Inconclusive;
};

nlohmann::ordered_json to_json(const ChargeSpectrum& c);

/// Sweeps j in {k, 2k, ...} up to jMax over the split bundle and the sampled
/// classes. Pass iff the minimum is k - 1, nothing below k - 1 was seen and
/// the bound certifies the gap. k < 2 is a UsageError (no gap claim).
ChargeSpectrum instanton_gap(int k, int jMax, int samples, std::uint64_t seedBase = 0,
                             const TruncationPolicy& policy = {}, ResultCache* cache = nullptr);

struct ScanResult {
    int k = 0;
    int j = 0;
    int samples = 0;
    BoundsResult bounds;
    std::set<long> achieved;     // includes the split bundle
    std::vector<long> notObserved;  // values in [lower, upper] not seen
};

nlohmann::ordered_json to_json(const ScanResult& s);

ScanResult intermediate_value_scan(int k, int j, int samples, std::uint64_t seedBase = 0,
                                   const TruncationPolicy& policy = {}, ResultCache* cache = nullptr);

struct PairCount {
    long w = 0;
    long h = 0;
    int count = 0;
    bool split = false;  // the split bundle lands here
};

/// Distinct (w, h) over the split bundle and the samples, sorted by (w, h).
/// Requires j to be a multiple of k.
std::vector<PairCount> stratification_pairs(int k, int j, int samples, std::uint64_t seedBase = 0,
                                            const TruncationPolicy& policy = {},
                                            ResultCache* cache = nullptr);

struct Table1Row {
    std::string space;
    std::string kind;  // "split" or "generic"
    long w = 0;
    long h = 0;
    long h1End = 0;
    std::string status;  // "match", "mismatch" or "unconverged"; empty for expected rows

    friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

/// The reference rows for j = 3, in the order Z1, Z2, Z3, W1 x split, generic.
std::vector<Table1Row> table1_expected();

/// Computes the eight rows; generic rows are componentwise minima over the
/// seed schedule. A generic row above its reference value with fewer than 20
/// samples is "unconverged" rather than a mismatch.
std::vector<Table1Row> table1_rows(int samples, std::uint64_t seedBase = 0, int j = 3,
                                   const TruncationPolicy& policy = {}, ResultCache* cache = nullptr);

}  // namespace sheafloc
