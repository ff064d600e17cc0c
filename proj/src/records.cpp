#include <charconv>
#include <string>

#include "shc/errors.hpp"
#include "shc/io.hpp"

namespace shc {

namespace {

constexpr std::size_t kColumns = 19;

std::string quote(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string flag(bool b) { return b ? "true" : "false"; }

/// Splits RFC 4180 text into rows of fields; quoted fields may hold newlines.
std::vector<std::vector<std::string>> csv_rows(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool row_open = false;
    std::size_t line = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (ch == '\n')
                    ++line;
                field += ch;
            }
            continue;
        }
        row_open = true;
        if (ch == '"') {
            if (!field.empty())
                throw ParseError(line, "quote inside unquoted field");
            quoted = true;
        } else if (ch == ',') {
            row.push_back(std::move(field));
            field.clear();
        } else if (ch == '\r') {
            // tolerated before \n
        } else if (ch == '\n') {
            row.push_back(std::move(field));
            field.clear();
            rows.push_back(std::move(row));
            row.clear();
            row_open = false;
            ++line;
        } else {
            field += ch;
        }
    }
    if (quoted)
        throw ParseError(line, "unterminated quoted field");
    if (row_open) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename T>
T parse_number(const std::string& s, std::size_t line, const char* column) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(line, std::string("bad ") + column + " '" + s + "'");
    return v;
}

bool parse_flag(const std::string& s, std::size_t line, const char* column) {
    if (s == "true")
        return true;
    if (s == "false")
        return false;
    throw ParseError(line, std::string("bad ") + column + " '" + s + "'");
}

Bucket parse_bucket(const std::string& s, std::size_t line) {
    for (Bucket b : {Bucket::BelowMu, Bucket::MuToXiTilde, Bucket::AboveXiTilde})
        if (bucket_name(b) == s)
            return b;
    throw ParseError(line, "bad bucket '" + s + "'");
}

} // namespace

std::string record_row(const ExperimentRecord& r) {
    std::string out = quote(r.instance_id);
    auto next = [&](std::string_view field) {
        out += ',';
        out += quote(field);
    };
    next(std::to_string(r.n));
    next(std::to_string(r.k));
    next(r.params ? format_double(r.params->p) : "");
    next(r.params ? format_double(r.params->q) : "");
    next(r.params ? std::to_string(r.params->pcc) : "");
    next(format_double(r.rho));
    next(r.params ? std::to_string(r.params->seed) : "");
    next(r.thresholds ? format_double(r.thresholds->mu) : "");
    next(r.thresholds ? format_double(r.thresholds->xi) : "");
    next(r.thresholds ? format_double(r.thresholds->xi_tilde) : "");
    next(r.bucket ? bucket_name(*r.bucket) : "");
    next(r.algorithm);
    next(format_double(r.alpha));
    next(format_double(r.acd));
    next(std::to_string(r.happy_count));
    next(flag(r.complete));
    next(r.reverted ? flag(*r.reverted) : "");
    next(r.elapsed_ms ? format_double(*r.elapsed_ms) : "");
    return out;
}

std::string write_records(std::span<const ExperimentRecord> records) {
    std::string out(kRecordHeader);
    out += '\n';
    for (const ExperimentRecord& r : records) {
        out += record_row(r);
        out += '\n';
    }
    return out;
}

std::vector<ExperimentRecord> parse_records(std::string_view text) {
    const auto rows = csv_rows(text);
    if (rows.empty())
        throw ParseError(1, "missing CSV header");
    std::string header;
    for (std::size_t i = 0; i < rows[0].size(); ++i)
        header += (i ? "," : "") + rows[0][i];
    if (header != kRecordHeader)
        throw ParseError(1, "unexpected CSV header");

    std::vector<ExperimentRecord> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& f = rows[i];
        const std::size_t line = i + 1;
        if (f.size() != kColumns)
            throw ParseError(line, "expected " + std::to_string(kColumns) + " fields, got " + std::to_string(f.size()));
        ExperimentRecord r;
        r.instance_id = f[0];
        r.n = parse_number<std::size_t>(f[1], line, "n");
        r.k = parse_number<Colour>(f[2], line, "k");
        if (!f[3].empty() || !f[4].empty() || !f[5].empty() || !f[7].empty()) {
            SbmParams p;
            p.n = r.n;
            p.k = r.k;
            p.p = parse_number<double>(f[3], line, "p");
            p.q = parse_number<double>(f[4], line, "q");
            p.pcc = parse_number<std::size_t>(f[5], line, "pcc");
            p.seed = parse_number<std::uint64_t>(f[7], line, "seed");
            r.params = p;
        }
        r.rho = parse_number<double>(f[6], line, "rho");
        if (!f[8].empty() || !f[9].empty() || !f[10].empty()) {
            Thresholds t;
            t.mu = parse_number<double>(f[8], line, "mu");
            t.xi = parse_number<double>(f[9], line, "xi");
            t.xi_tilde = parse_number<double>(f[10], line, "xi_tilde");
            // epsilon is not a CSV column
            t.epsilon = kDefaultEpsilon;
            r.thresholds = t;
        }
        if (!f[11].empty())
            r.bucket = parse_bucket(f[11], line);
        r.algorithm = f[12];
        r.alpha = parse_number<double>(f[13], line, "alpha");
        r.acd = parse_number<double>(f[14], line, "acd");
        r.happy_count = parse_number<std::size_t>(f[15], line, "happy_count");
        r.complete = parse_flag(f[16], line, "complete");
        if (!f[17].empty())
            r.reverted = parse_flag(f[17], line, "reverted");
        if (!f[18].empty())
            r.elapsed_ms = parse_number<double>(f[18], line, "elapsed_ms");
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace shc
