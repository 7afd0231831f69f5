#pragma once

#include <cinttypes>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include "zetaline/errors.hpp"
#include "zetaline/quad.hpp"

namespace zetaline {

// Append-only checkpoint CSV.  One row per saved frontier; resume uses the
// last row whose cfg_hash matches the current configuration.  Doubles are
// written with 17 significant digits so a resumed run reproduces the saved
// state bit for bit.
class CheckpointFile {
  public:
    static constexpr const char* kHeader =
        "frontier,i2,i4,est_error_i2,est_error_i4,cfg_hash";

    explicit CheckpointFile(std::string path) : path_(std::move(path)) {}

    const std::string& path() const { return path_; }

    void append(const SweepCheckpoint& c) const {
        FILE* fp = std::fopen(path_.c_str(), "a");
        if (!fp) throw checkpoint_error("cannot open checkpoint file: " + path_);
        flock(fileno(fp), LOCK_EX);
        long pos = 0;
        std::fseek(fp, 0, SEEK_END);
        pos = std::ftell(fp);
        if (pos == 0) std::fprintf(fp, "%s\n", kHeader);
        std::fprintf(fp, "%.17g,%.17g,%.17g,%.17g,%.17g,%016" PRIx64 "\n", c.frontier,
                     c.i2, c.i4, c.est_error_i2, c.est_error_i4, c.cfg_hash);
        std::fflush(fp);
        flock(fileno(fp), LOCK_UN);
        std::fclose(fp);
    }

    std::vector<SweepCheckpoint> load() const {
        std::vector<SweepCheckpoint> rows;
        FILE* fp = std::fopen(path_.c_str(), "r");
        if (!fp) return rows;
        char line[512];
        bool first = true;
        while (std::fgets(line, sizeof(line), fp)) {
            if (first) {
                first = false;
                if (std::string(line).rfind("frontier,", 0) == 0) continue;
            }
            SweepCheckpoint c;
            if (std::sscanf(line, "%lg,%lg,%lg,%lg,%lg,%" SCNx64, &c.frontier, &c.i2,
                            &c.i4, &c.est_error_i2, &c.est_error_i4, &c.cfg_hash) == 6)
                rows.push_back(c);
        }
        std::fclose(fp);
        return rows;
    }

    // Last saved state matching `hash`, if any.
    std::optional<SweepCheckpoint> last_matching(std::uint64_t hash) const {
        const auto rows = load();
        for (auto it = rows.rbegin(); it != rows.rend(); ++it)
            if (it->cfg_hash == hash) return *it;
        return std::nullopt;
    }

    // Number of saved rows matching `hash` (used by sweep resume).
    std::size_t count_matching(std::uint64_t hash) const {
        std::size_t n = 0;
        for (const auto& r : load())
            if (r.cfg_hash == hash) ++n;
        return n;
    }

  private:
    std::string path_;
};

}  // namespace zetaline
