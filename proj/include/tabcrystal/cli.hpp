#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tabcrystal/partition.hpp"
#include "tabcrystal/sieving.hpp"

namespace tabcrystal::cli {

/// Bad flags or parameters; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { json, csv, dot, text };

/// Inclusive ranges per sweep key, e.g. "a<=3,m<=4,k=2..4".
struct Sweep {
    std::map<char, std::pair<int, int>> ranges;

    bool has(char key) const { return ranges.count(key) != 0; }
    std::pair<int, int> range(char key) const { return ranges.at(key); }
};

Sweep parse_sweep(const std::string& text);

struct RunConfig {
    std::string command;
    std::optional<Partition> shape;          // --shape 2,1
    std::optional<std::pair<int, int>> rect;  // --rect AxM
    std::optional<int> k;
    CspMode mode = CspMode::ssyt;
    std::string action = "promotion";  // orbit-report only
    Format format = Format::json;
    std::string output;  // empty: write to the given stream
    int threads = 0;     // 0: hardware concurrency
    std::uint64_t seed = 0;
    std::optional<Sweep> sweep;
};

Partition parse_shape(const std::string& text);
std::pair<int, int> parse_rect(const std::string& text);

/// Executes a parsed configuration. Returns 0 when every requested
/// verification passes, 1 on a verification failure, 2 on a usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and calls run().
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tabcrystal::cli
