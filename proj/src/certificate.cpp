#include "rainbow/certificate.hpp"

#include <array>

namespace rainbow {

using nlohmann::ordered_json;

void CertificateDocument::add_check(const std::string& name, bool pass,
                                    const std::string& detail) {
    if (!pass && detail.empty())
        throw CertificateError("failed check '" + name + "' needs a detail message");
    checks.push_back(CheckItem{name, pass, detail});
}

bool CertificateDocument::all_pass() const {
    for (const CheckItem& c : checks)
        if (!c.pass) return false;
    return true;
}

ordered_json certificate_to_json(const CertificateDocument& doc) {
    ordered_json j;
    j["schema_version"] = doc.schema_version;
    j["command"] = doc.command;
    j["inputs"] = doc.inputs;
    j["result"] = doc.result;
    j["checks"] = ordered_json::array();
    for (const CheckItem& c : doc.checks) {
        ordered_json item;
        item["name"] = c.name;
        item["pass"] = c.pass;
        item["detail"] = c.detail;
        j["checks"].push_back(std::move(item));
    }
    return j;
}

CertificateDocument certificate_from_json(const ordered_json& j) {
    if (!j.is_object()) throw CertificateError("certificate must be a JSON object");
    static constexpr std::array<const char*, 5> kTopKeys = {
        "schema_version", "command", "inputs", "result", "checks"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool known = false;
        for (const char* k : kTopKeys) known = known || key == k;
        if (!known) throw CertificateError("unknown field '" + key + "'");
    }
    for (const char* k : kTopKeys)
        if (!j.contains(k)) throw CertificateError(std::string("missing field '") + k + "'");

    CertificateDocument doc;
    if (!j["schema_version"].is_string())
        throw CertificateError("schema_version must be a string");
    doc.schema_version = j["schema_version"].get<std::string>();
    if (doc.schema_version != kCertificateSchemaVersion)
        throw CertificateError("unsupported schema_version '" + doc.schema_version + "'");
    if (!j["command"].is_string()) throw CertificateError("command must be a string");
    doc.command = j["command"].get<std::string>();
    if (!j["inputs"].is_object()) throw CertificateError("inputs must be an object");
    doc.inputs = j["inputs"];
    doc.result = j["result"];
    if (!j["checks"].is_array()) throw CertificateError("checks must be an array");
    doc.checks.clear();
    for (const auto& item : j["checks"]) {
        if (!item.is_object()) throw CertificateError("each check must be an object");
        for (const auto& [key, value] : item.items()) {
            (void)value;
            if (key != "name" && key != "pass" && key != "detail")
                throw CertificateError("unknown check field '" + key + "'");
        }
        if (!item.contains("name") || !item["name"].is_string())
            throw CertificateError("check needs a string 'name'");
        if (!item.contains("pass") || !item["pass"].is_boolean())
            throw CertificateError("check needs a boolean 'pass'");
        CheckItem c;
        c.name = item["name"].get<std::string>();
        c.pass = item["pass"].get<bool>();
        if (item.contains("detail")) {
            if (!item["detail"].is_string())
                throw CertificateError("check 'detail' must be a string");
            c.detail = item["detail"].get<std::string>();
        }
        if (!c.pass && c.detail.empty())
            throw CertificateError("failed check '" + c.name + "' lacks a detail");
        doc.checks.push_back(std::move(c));
    }
    return doc;
}

std::string certificate_to_string(const CertificateDocument& doc) {
    return certificate_to_json(doc).dump(2) + "\n";
}

CertificateDocument certificate_from_string(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw CertificateError("certificate is not valid JSON");
    return certificate_from_json(j);
}

}  // namespace rainbow
