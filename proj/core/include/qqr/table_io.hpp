#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

#include "qqr/weight_distribution.hpp"

namespace qqr {

/// Plain-text weight table: `#` header lines carrying key=value pairs
/// (p, k, d required; source and symmetric optional) followed by `j A_j`
/// records. Counts must be plain decimal integers; scientific notation and
/// any other float spelling are rejected so ingested tables can never round.
/// With symmetric=true, missing mirrors A_{p-j} are filled from A_j.
struct WeightTableFile {
    int p = -1;
    int k = -1;
    int d = -1;
    std::string source;
    bool symmetric = false;
    std::map<int, mpz_class> records;

    bool complete() const;  // every j in 0..p present
    WeightDistribution to_distribution() const;
};

WeightTableFile parse_weight_table(std::istream& in, const std::string& name = "<stream>");
WeightTableFile parse_weight_table(const std::filesystem::path& path);

void write_weight_table(std::ostream& out, const WeightTableFile& t);

/// Lenient `j value` reader for --known inputs; `#` lines are ignored.
std::map<int, mpz_class> parse_known_counts(std::istream& in, const std::string& name = "<stream>");
std::map<int, mpz_class> parse_known_counts(const std::filesystem::path& path);

}  // namespace qqr
