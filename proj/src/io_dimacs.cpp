#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include "shc/errors.hpp"
#include "shc/io.hpp"

namespace shc {

std::string format_double(double x) {
    char buf[512];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed);
    if (res.ec != std::errc{})
        res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t to_uint(std::string_view tok, std::size_t line, std::string_view what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "bad " + std::string(what) + " '" + std::string(tok) + "'");
    return v;
}

double to_double(std::string_view tok, std::size_t line, std::string_view what) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "bad " + std::string(what) + " '" + std::string(tok) + "'");
    return v;
}

/// 1-indexed vertex token -> 0-indexed vertex.
Vertex to_vertex(std::string_view tok, std::size_t n, std::size_t line) {
    const std::uint64_t v = to_uint(tok, line, "vertex");
    if (v < 1 || v > n)
        throw ParseError(line, "vertex " + std::string(tok) + " outside 1.." + std::to_string(n));
    return static_cast<Vertex>(v - 1);
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        ++lineno;
        f(text.substr(pos, nl - pos), lineno);
        pos = nl + 1;
    }
}

void expect_arity(const std::vector<std::string_view>& t, std::size_t count, std::size_t line) {
    if (t.size() != count)
        throw ParseError(line, "expected " + std::to_string(count) + " fields, got " + std::to_string(t.size()));
}

} // namespace

std::string write_instance(const Instance& inst) {
    std::string out;
    const std::size_t n = inst.num_vertices();
    out += "c shc k " + std::to_string(inst.k) + "\n";
    out += "c shc rho " + format_double(inst.rho) + "\n";
    if (inst.params) {
        const SbmParams& p = *inst.params;
        out += "c shc params " + std::to_string(p.n) + " " + std::to_string(p.k) + " " + format_double(p.p) + " " +
               format_double(p.q) + " " + std::to_string(p.pcc) + " " + std::to_string(p.seed) + "\n";
    }
    out += "p edge " + std::to_string(n) + " " + std::to_string(inst.graph.num_edges()) + "\n";
    for (auto [u, v] : inst.graph.edges())
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    for (Vertex v = 0; v < n; ++v)
        out += "x " + std::to_string(v + 1) + " " + std::to_string(inst.communities[v]) + "\n";
    for (auto [v, c] : inst.precoloured)
        out += "f " + std::to_string(v + 1) + " " + std::to_string(c) + "\n";
    return out;
}

Instance parse_instance(std::string_view text) {
    std::optional<std::uint64_t> k;
    std::optional<double> rho;
    std::optional<SbmParams> params;
    std::optional<std::size_t> n;
    std::size_t declared_edges = 0;
    std::vector<Edge> edges;
    std::vector<Colour> communities;
    std::vector<bool> assigned;
    std::vector<Precolour> precoloured;

    for_each_line(text, [&](std::string_view raw, std::size_t line) {
        const auto t = split_ws(raw);
        if (t.empty())
            return;
        const std::string_view kind = t[0];
        if (kind == "c") {
            if (t.size() < 3 || t[1] != "shc")
                return;
            if (t[2] == "k") {
                expect_arity(t, 4, line);
                k = to_uint(t[3], line, "k");
            } else if (t[2] == "rho") {
                expect_arity(t, 4, line);
                rho = to_double(t[3], line, "rho");
            } else if (t[2] == "params") {
                expect_arity(t, 9, line);
                SbmParams sp;
                sp.n = to_uint(t[3], line, "params n");
                sp.k = static_cast<Colour>(to_uint(t[4], line, "params k"));
                sp.p = to_double(t[5], line, "params p");
                sp.q = to_double(t[6], line, "params q");
                sp.pcc = to_uint(t[7], line, "params pcc");
                sp.seed = to_uint(t[8], line, "params seed");
                params = sp;
            }
            return;
        }
        if (kind == "p") {
            expect_arity(t, 4, line);
            if (n)
                throw ParseError(line, "duplicate problem line");
            if (t[1] != "edge")
                throw ParseError(line, "unsupported problem type '" + std::string(t[1]) + "'");
            n = to_uint(t[2], line, "vertex count");
            declared_edges = to_uint(t[3], line, "edge count");
            communities.assign(*n, kUncoloured);
            assigned.assign(*n, false);
            return;
        }
        if (!n)
            throw ParseError(line, "'" + std::string(kind) + "' line before the problem line");
        if (kind == "e") {
            expect_arity(t, 3, line);
            const Vertex u = to_vertex(t[1], *n, line);
            const Vertex v = to_vertex(t[2], *n, line);
            if (u == v)
                throw ParseError(line, "self-loop at vertex " + std::string(t[1]));
            edges.emplace_back(u, v);
        } else if (kind == "x") {
            expect_arity(t, 3, line);
            const Vertex v = to_vertex(t[1], *n, line);
            if (assigned[v])
                throw ParseError(line, "duplicate community for vertex " + std::string(t[1]));
            const std::uint64_t c = to_uint(t[2], line, "community");
            if (c < 1 || c > UINT32_MAX)
                throw ParseError(line, "community must be positive");
            communities[v] = static_cast<Colour>(c);
            assigned[v] = true;
        } else if (kind == "f") {
            expect_arity(t, 3, line);
            const Vertex v = to_vertex(t[1], *n, line);
            const std::uint64_t c = to_uint(t[2], line, "colour");
            if (c < 1 || c > UINT32_MAX)
                throw ParseError(line, "precolour must be positive");
            precoloured.emplace_back(v, static_cast<Colour>(c));
        } else {
            throw ParseError(line, "unknown line type '" + std::string(kind) + "'");
        }
    });

    if (!n)
        throw ParseError(0, "missing problem line");
    if (!k)
        throw ParseError(0, "missing 'c shc k' header");
    if (!rho)
        throw ParseError(0, "missing 'c shc rho' header");
    if (*k < 1 || *k > UINT32_MAX)
        throw ParseError(0, "k out of range");
    if (edges.size() != declared_edges)
        throw ParseError(0, "problem line declares " + std::to_string(declared_edges) + " edges, found " +
                                std::to_string(edges.size()));
    for (std::size_t v = 0; v < *n; ++v)
        if (!assigned[v])
            throw InstanceError("community assignment incomplete: vertex " + std::to_string(v + 1) +
                                " has no x line");
    std::sort(precoloured.begin(), precoloured.end());
    for (std::size_t i = 1; i < precoloured.size(); ++i)
        if (precoloured[i].first == precoloured[i - 1].first)
            throw ParseError(0, "vertex " + std::to_string(precoloured[i].first + 1) + " precoloured twice");

    Instance inst;
    inst.graph = Graph::from_edges(*n, edges);
    inst.k = static_cast<Colour>(*k);
    inst.rho = *rho;
    inst.communities = std::move(communities);
    inst.precoloured = std::move(precoloured);
    inst.params = params;
    inst.validate();
    return inst;
}

std::string write_colouring(const Colouring& c) {
    std::string out = "c shc colouring " + std::to_string(c.size()) + " " + std::to_string(c.k()) + "\n";
    for (Vertex v = 0; v < c.size(); ++v)
        out += "v " + std::to_string(v + 1) + " " + std::to_string(c[v]) + "\n";
    return out;
}

Colouring parse_colouring(std::string_view text) {
    std::optional<std::size_t> n;
    Colour k = 0;
    std::vector<Colour> values;
    std::vector<bool> seen;
    for_each_line(text, [&](std::string_view raw, std::size_t line) {
        const auto t = split_ws(raw);
        if (t.empty())
            return;
        if (t[0] == "c") {
            if (t.size() >= 3 && t[1] == "shc" && t[2] == "colouring") {
                expect_arity(t, 5, line);
                n = to_uint(t[3], line, "vertex count");
                k = static_cast<Colour>(to_uint(t[4], line, "k"));
                values.assign(*n, kUncoloured);
                seen.assign(*n, false);
            }
            return;
        }
        if (t[0] != "v")
            throw ParseError(line, "unknown line type '" + std::string(t[0]) + "'");
        if (!n)
            throw ParseError(line, "'v' line before the colouring header");
        expect_arity(t, 3, line);
        const Vertex v = to_vertex(t[1], *n, line);
        if (seen[v])
            throw ParseError(line, "vertex " + std::string(t[1]) + " listed twice");
        const std::uint64_t c = to_uint(t[2], line, "colour");
        if (c > k)
            throw ParseError(line, "colour " + std::string(t[2]) + " exceeds k = " + std::to_string(k));
        values[v] = static_cast<Colour>(c);
        seen[v] = true;
    });
    if (!n)
        throw ParseError(0, "missing 'c shc colouring' header");
    return Colouring(std::move(values), k);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string() + " for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out)
        throw IoError("write failed for " + path.string());
}

void append_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out)
        throw IoError("cannot open " + path.string() + " for appending");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out)
        throw IoError("append failed for " + path.string());
}

} // namespace shc
