#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace moralens {

inline constexpr const char* kToolVersion = "0.1.0";

// Run manifest: one entry per completed stage with the config hash, seed,
// and input/output digests. Downstream stages use it to refuse running on
// artifacts produced under a different configuration or edited on disk.
// Timings are informational and not part of any reproducibility contract.
class RunManifest {
public:
    struct StageEntry {
        std::string config_hash;
        std::uint64_t seed = 0;
        std::map<std::string, std::string> inputs;   // path -> sha256
        std::map<std::string, std::string> outputs;  // path -> sha256
        double elapsed_ms = 0.0;
    };

    static RunManifest load_or_empty(const std::string& path);
    void save(const std::string& path) const;

    void record_stage(const std::string& name, StageEntry entry);
    const StageEntry* stage(const std::string& name) const;

    // Verifies that `upstream` ran under the same config hash and that each
    // of its recorded outputs still matches the bytes on disk.
    void require_fresh(const std::string& upstream,
                       const std::string& config_hash,
                       const std::string& out_dir) const;

private:
    std::map<std::string, StageEntry> stages_;
};

}  // namespace moralens
