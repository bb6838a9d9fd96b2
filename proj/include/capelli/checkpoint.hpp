#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "capelli/det.hpp"
#include "capelli/weyl.hpp"

namespace capelli {

// On-disk resume state for long determinant runs: a manifest plus one binary
// file for the last completed DP layer. The format is versioned; a mismatch
// of version or configuration fingerprint refuses to resume.
inline constexpr std::uint32_t kCheckpointVersion = 1;

struct CheckpointConfig {
    std::string dir;
    std::uint64_t fingerprint = 0;  // hash of table + mode + det order
    std::string description;
};

std::uint64_t fingerprint_bytes(const std::string& bytes);

class CheckpointWriter {
public:
    CheckpointWriter(CheckpointConfig cfg, bool symbolic);

    template <class C>
    void write_layer(int layer,
                     const std::vector<std::pair<std::uint32_t, const WeylElement<C>*>>& states,
                     int n);

private:
    void write_manifest(int layer) const;
    CheckpointConfig cfg_;
    bool symbolic_;
};

template <class C>
std::optional<DetResume<C>> load_checkpoint(const CheckpointConfig& cfg, bool symbolic, int n);

} // namespace capelli
