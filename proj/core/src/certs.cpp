#include "ogsat/certs.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ogsat/embed.hpp"

namespace ogsat {

namespace {

void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << text;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <typename C>
void save_impl(const std::filesystem::path& base, const C& cert) {
    std::filesystem::path og = base;
    og += ".og";
    std::filesystem::path side = base;
    side += ".json";
    write_file(og, serialize(cert.witness));
    nlohmann::json j;
    j["pattern"] = serialize(cert.pattern);
    j["anchor"] = cert.isolated_anchor;
    j["matching_mode"] = cert.matching_mode;
    j["verified"] = true;
    j["tool_version"] = kToolVersion;
    write_file(side, j.dump(2) + "\n");
}

}  // namespace

void save_certificate(const std::filesystem::path& base, const OrderedCertificate& cert) {
    save_impl(base, cert);
}
void save_certificate(const std::filesystem::path& base, const CyclicCertificate& cert) {
    save_impl(base, cert);
}

std::variant<OrderedCertificate, CyclicCertificate> load_certificate(const std::filesystem::path& og_path) {
    std::filesystem::path side = og_path;
    side.replace_extension(".json");
    const auto witness = parse_graph(read_file(og_path));
    const auto j = nlohmann::json::parse(read_file(side));
    const auto pattern = parse_graph(j.at("pattern").get<std::string>());
    const bool matching_mode = j.at("matching_mode").get<bool>();

    if (std::holds_alternative<OrderedGraph>(witness)) {
        if (!std::holds_alternative<OrderedGraph>(pattern))
            throw std::runtime_error("certificate kind mismatch: " + og_path.string());
        auto cert = is_witness(std::get<OrderedGraph>(witness), std::get<OrderedGraph>(pattern), matching_mode);
        if (!cert) throw std::runtime_error("certificate failed verification: " + og_path.string());
        return *cert;
    }
    if (!std::holds_alternative<CyclicGraph>(pattern))
        throw std::runtime_error("certificate kind mismatch: " + og_path.string());
    auto cert = is_witness(std::get<CyclicGraph>(witness), std::get<CyclicGraph>(pattern), matching_mode);
    if (!cert) throw std::runtime_error("certificate failed verification: " + og_path.string());
    return *cert;
}

int CertificateStore::load_directory(const std::filesystem::path& dir) {
    int accepted = 0;
    if (!std::filesystem::is_directory(dir)) return 0;
    std::vector<std::filesystem::path> ogs;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".og") ogs.push_back(entry.path());
    std::sort(ogs.begin(), ogs.end());
    for (const auto& p : ogs) {
        std::filesystem::path side = p;
        side.replace_extension(".json");
        if (!std::filesystem::exists(side)) continue;
        try {
            auto cert = load_certificate(p);
            if (std::holds_alternative<OrderedCertificate>(cert))
                add(std::get<OrderedCertificate>(cert));
            else
                add(std::get<CyclicCertificate>(cert));
            accepted++;
        } catch (const std::exception&) {
            // unverifiable entries are ignored
        }
    }
    return accepted;
}

void CertificateStore::add(OrderedCertificate cert) { ordered_.push_back(std::move(cert)); }
void CertificateStore::add(CyclicCertificate cert) { cyclic_.push_back(std::move(cert)); }

const OrderedCertificate* CertificateStore::find_ordered(const OrderedGraph& pattern) const {
    for (const auto& c : ordered_)
        if (c.pattern == pattern) return &c;
    return nullptr;
}

const CyclicCertificate* CertificateStore::find_cyclic(const CyclicGraph& pattern) const {
    for (const auto& c : cyclic_) {
        if (c.pattern.n != pattern.n || c.pattern.edges.size() != pattern.edges.size()) continue;
        for (int r = 0; r < pattern.n; r++)
            if (rotate(c.pattern, r) == pattern) return &c;
    }
    return nullptr;
}

}  // namespace ogsat
