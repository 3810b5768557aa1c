#include "stabwall/report.hpp"

#include <sstream>

#include "json.hpp"

namespace stabwall {

std::string Report::to_records() const {
    std::ostringstream os;
    os << "stabwall-report version=" << kToolVersion << "\n";
    os << "command=" << command_ << "\n";
    os << "input-hash=" << input_hash_ << "\n";
    for (const Record& rec : records_) {
        os << "record " << rec.type;
        for (const auto& [k, v] : rec.fields) os << " " << k << "=" << v;
        os << "\n";
    }
    os << "status=ok\n";
    return os.str();
}

std::string Report::to_json() const {
    nlohmann::ordered_json doc;
    doc["tool"] = "stabwall";
    doc["version"] = kToolVersion;
    doc["command"] = command_;
    doc["input_hash"] = input_hash_;
    doc["records"] = nlohmann::ordered_json::array();
    for (const Record& rec : records_) {
        nlohmann::ordered_json j;
        j["type"] = rec.type;
        for (const auto& [k, v] : rec.fields) j[k] = v;
        doc["records"].push_back(std::move(j));
    }
    doc["status"] = "ok";
    return doc.dump(2) + "\n";
}

}  // namespace stabwall
