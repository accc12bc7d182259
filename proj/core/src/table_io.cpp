#include "qqr/table_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qqr/errors.hpp"

namespace qqr {

namespace {

[[noreturn]] void fail(const std::string& name, int line, const std::string& why) {
    throw ParseError(name + ":" + std::to_string(line) + ": " + why);
}

bool decimal_digits_only(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

int parse_int(const std::string& name, int line, const std::string& s) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) fail(name, line, "trailing characters in integer '" + s + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        fail(name, line, "expected an integer, got '" + s + "'");
    }
}

}  // namespace

bool WeightTableFile::complete() const {
    for (int j = 0; j <= p; ++j)
        if (!records.count(j)) return false;
    return true;
}

WeightDistribution WeightTableFile::to_distribution() const {
    if (!complete()) throw IncompleteTable("weight table is missing entries in 0..p");
    WeightDistribution w;
    w.n = static_cast<std::size_t>(p);
    w.k = static_cast<std::size_t>(k);
    w.counts.resize(w.n + 1);
    for (const auto& [j, v] : records) w.counts[static_cast<std::size_t>(j)] = v;
    w.provenance = WeightDistribution::Provenance::ingested;
    return w;
}

WeightTableFile parse_weight_table(std::istream& in, const std::string& name) {
    WeightTableFile t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank
        if (tok[0] == '#') {
            // header: '#' then key=value tokens
            std::string rest = line.substr(line.find('#') + 1);
            std::istringstream hs(rest);
            std::string kv;
            while (hs >> kv) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) fail(name, lineno, "header token '" + kv + "' is not key=value");
                const std::string key = kv.substr(0, eq);
                const std::string val = kv.substr(eq + 1);
                if (key == "p")
                    t.p = parse_int(name, lineno, val);
                else if (key == "k")
                    t.k = parse_int(name, lineno, val);
                else if (key == "d")
                    t.d = parse_int(name, lineno, val);
                else if (key == "source")
                    t.source = val;
                else if (key == "symmetric")
                    t.symmetric = (val == "true" || val == "1");
                else
                    fail(name, lineno, "unknown header key '" + key + "'");
            }
            continue;
        }
        // record: j A_j
        if (t.p < 0 || t.k < 0 || t.d < 0)
            throw MissingMetadata(name + ":" + std::to_string(lineno) +
                                  ": record before p/k/d header");
        const int j = parse_int(name, lineno, tok);
        std::string count;
        if (!(ls >> count)) fail(name, lineno, "missing count after index");
        std::string extra;
        if (ls >> extra) fail(name, lineno, "trailing token '" + extra + "'");
        if (!decimal_digits_only(count))
            fail(name, lineno,
                 "count '" + count + "' must be a plain decimal integer (no signs, no exponents)");
        if (j < 0 || j > t.p) fail(name, lineno, "index " + std::to_string(j) + " outside 0..p");
        auto [it, inserted] = t.records.emplace(j, mpz_class(count));
        if (!inserted)
            throw DuplicateIndex(name + ":" + std::to_string(lineno) + ": duplicate index " +
                                 std::to_string(j));
    }
    if (t.p < 0 || t.k < 0 || t.d < 0)
        throw MissingMetadata(name + ": header must define p, k and d");
    if (t.symmetric) {
        for (const auto& [j, v] : std::map<int, mpz_class>(t.records)) {
            const int mirror = t.p - j;
            auto [it, inserted] = t.records.emplace(mirror, v);
            if (!inserted && it->second != v)
                throw ParseError(name + ": symmetric completion clashes at index " +
                                 std::to_string(mirror));
        }
    }
    return t;
}

WeightTableFile parse_weight_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return parse_weight_table(in, path.string());
}

void write_weight_table(std::ostream& out, const WeightTableFile& t) {
    out << "# p=" << t.p << " k=" << t.k << " d=" << t.d;
    if (!t.source.empty()) out << " source=" << t.source;
    out << "\n";
    for (const auto& [j, v] : t.records) out << j << ' ' << v << "\n";
}

std::map<int, mpz_class> parse_known_counts(std::istream& in, const std::string& name) {
    std::map<int, mpz_class> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        const int j = parse_int(name, lineno, tok);
        std::string count;
        if (!(ls >> count)) fail(name, lineno, "missing count after index");
        if (!decimal_digits_only(count))
            fail(name, lineno, "count '" + count + "' must be a plain decimal integer");
        auto [it, inserted] = out.emplace(j, mpz_class(count));
        if (!inserted)
            throw DuplicateIndex(name + ":" + std::to_string(lineno) + ": duplicate index " +
                                 std::to_string(j));
    }
    return out;
}

std::map<int, mpz_class> parse_known_counts(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return parse_known_counts(in, path.string());
}

}  // namespace qqr
