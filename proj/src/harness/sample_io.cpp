#include "symsector/harness.hpp"

#include "symsector/errors.hpp"

#include <charconv>
#include <cmath>
#include <istream>

#include <fmt/format.h>

namespace symsector {

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        out.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_double(std::string_view field, std::size_t line) {
    const std::string tmp(field);
    if (tmp == "inf") return kInfiniteOrder;
    char* end = nullptr;
    const double v = std::strtod(tmp.c_str(), &end);
    if (tmp.empty() || end != tmp.c_str() + tmp.size()) throw ParseError(line, fmt::format("'{}' is not a number", tmp));
    return v;
}

} // namespace

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

SampleRecord make_record(std::uint64_t index, const EntanglementRecord& rec) {
    SampleRecord r;
    r.sample_index = index;
    r.e1_nats = rec.e1;
    r.eq_nats = rec.eq;
    r.q = rec.q;
    r.s = rec.s;
    for (std::size_t i = 0; i < r.lam.size(); ++i) r.lam[i] = i < rec.spectrum_head.size() ? rec.spectrum_head[i] : 0.0;
    return r;
}

std::string format_row(const SampleRecord& r) {
    return fmt::format("{},{:.17g},{:.17g},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", r.sample_index, r.e1_nats, r.eq_nats,
                       format_order(r.q), r.s, r.lam[0], r.lam[1], r.lam[2], r.lam[3]);
}

std::vector<SampleRecord> parse_samples(std::istream& in) {
    std::vector<SampleRecord> rows;
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw ParseError(1, "empty file (missing header)");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kSampleHeader) throw ParseError(lineno, fmt::format("unexpected header '{}'", line));
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_commas(line);
        if (fields.size() != 9) throw ParseError(lineno, fmt::format("expected 9 fields, found {}", fields.size()));
        SampleRecord r;
        const auto [ptr, ec] = std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), r.sample_index);
        if (ec != std::errc{} || ptr != fields[0].data() + fields[0].size())
            throw ParseError(lineno, fmt::format("bad sample_index '{}'", fields[0]));
        r.e1_nats = parse_double(fields[1], lineno);
        r.eq_nats = parse_double(fields[2], lineno);
        r.q = parse_double(fields[3], lineno);
        r.s = parse_double(fields[4], lineno);
        for (std::size_t i = 0; i < 4; ++i) r.lam[i] = parse_double(fields[5 + i], lineno);
        rows.push_back(r);
    }
    return rows;
}

std::vector<double> sample_column(const std::vector<SampleRecord>& rows, const std::string& column) {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const SampleRecord& r : rows) {
        if (column == "s") out.push_back(r.s);
        else if (column == "E1_nats") out.push_back(r.e1_nats);
        else if (column == "Eq_nats") out.push_back(r.eq_nats);
        else if (column == "lam1") out.push_back(r.lam[0]);
        else throw ConfigError(fmt::format("column '{}' cannot be analyzed (use s, E1_nats, Eq_nats, lam1)", column));
    }
    return out;
}

} // namespace symsector
