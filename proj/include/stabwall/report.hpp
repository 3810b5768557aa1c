#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stabwall/numeric.hpp"

namespace stabwall {

inline constexpr const char* kToolVersion = "0.1.0";

// Machine-readable result document. Two byte-exact encodings:
//
// records mode: one line per record,
//   stabwall-report version=<v>
//   command=<cmd>
//   input-hash=<16 hex>
//   record <type> k1=v1 k2=v2 ...
//   status=ok
//
// json mode: {"tool":"stabwall","version":...,"command":...,
//   "input_hash":..., "records":[{"type":..., k:v...}...], "status":"ok"}
// with keys kept in insertion order and a trailing newline.
//
// Every numeric value is an exact rational "p/q" (or "p"), or a QuadExt
// triple "(x,y,c)" meaning x + y sqrt(c). Record order is deterministic.
class Report {
public:
    Report(std::string command, std::string input_hash)
        : command_(std::move(command)), input_hash_(std::move(input_hash)) {}

    void add(const std::string& type,
             std::vector<std::pair<std::string, std::string>> fields) {
        records_.push_back({type, std::move(fields)});
    }

    const std::string& command() const { return command_; }
    std::string to_records() const;
    std::string to_json() const;

private:
    struct Record {
        std::string type;
        std::vector<std::pair<std::string, std::string>> fields;
    };
    std::string command_;
    std::string input_hash_;
    std::vector<Record> records_;
};

}  // namespace stabwall
