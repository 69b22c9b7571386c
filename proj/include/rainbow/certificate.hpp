#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace rainbow {

inline constexpr const char* kCertificateSchemaVersion = "1";

struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One named pass/fail verdict; failed checks must explain themselves.
struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
    bool operator==(const CheckItem&) const = default;
};

// Machine-readable record of one command run: what was asked, what came out,
// and which checks passed. Serializes to versioned JSON that reads back
// bit-identically (unknown fields are rejected on read).
struct CertificateDocument {
    std::string schema_version = kCertificateSchemaVersion;
    std::string command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    nlohmann::ordered_json result = nlohmann::ordered_json::object();
    std::vector<CheckItem> checks;

    // Throws CertificateError when a failed check has no detail.
    void add_check(const std::string& name, bool pass, const std::string& detail = "");
    bool all_pass() const;

    bool operator==(const CertificateDocument&) const = default;
};

nlohmann::ordered_json certificate_to_json(const CertificateDocument& doc);
CertificateDocument certificate_from_json(const nlohmann::ordered_json& j);

// Pretty-printed JSON with a trailing newline / its inverse.
std::string certificate_to_string(const CertificateDocument& doc);
CertificateDocument certificate_from_string(const std::string& text);

}  // namespace rainbow
