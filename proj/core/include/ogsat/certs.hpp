#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ogsat/saturate.hpp"

namespace ogsat {

inline constexpr const char* kToolVersion = "0.1.0";

// A certificate is persisted as <base>.og (the witness) plus a JSON
// sidecar <base>.json: {pattern, anchor, matching_mode, verified, tool_version}
// where pattern holds the .og text of the forbidden graph.
void save_certificate(const std::filesystem::path& base, const OrderedCertificate& cert);
void save_certificate(const std::filesystem::path& base, const CyclicCertificate& cert);

// Loads <base>.og + <base>.json and re-verifies through is_witness.
// Throws on malformed files or failed verification.
std::variant<OrderedCertificate, CyclicCertificate> load_certificate(const std::filesystem::path& og_path);

// Read-only set of verified certificates, loaded once at startup.
// Unverifiable entries are skipped. Cyclic patterns match up to rotation.
class CertificateStore {
public:
    CertificateStore() = default;

    // loads every *.og with a sidecar in the directory; returns the number
    // of certificates accepted
    int load_directory(const std::filesystem::path& dir);

    void add(OrderedCertificate cert);
    void add(CyclicCertificate cert);

    const OrderedCertificate* find_ordered(const OrderedGraph& pattern) const;
    const CyclicCertificate* find_cyclic(const CyclicGraph& pattern) const;

    int size() const { return static_cast<int>(ordered_.size() + cyclic_.size()); }

private:
    std::vector<OrderedCertificate> ordered_;
    std::vector<CyclicCertificate> cyclic_;
};

}  // namespace ogsat
