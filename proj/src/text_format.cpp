#include "hgirth/text_format.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <fcntl.h>
#include <unistd.h>

#include "hgirth/error.hpp"

namespace hgirth {

namespace {

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    // Next line without its LF; every line must be LF-terminated.
    std::string_view next(std::string_view expect_what) {
        ++line_;
        if (pos_ >= text_.size()) throw ParseError(line_, "unexpected end of input, expected " +
                                                              std::string(expect_what));
        const auto nl = text_.find('\n', pos_);
        if (nl == std::string_view::npos) throw ParseError(line_, "missing final newline");
        std::string_view s = text_.substr(pos_, nl - pos_);
        pos_ = nl + 1;
        return s;
    }

    bool at_end() const { return pos_ >= text_.size(); }

    void expect_end() {
        if (pos_ != text_.size()) throw ParseError(line_ + 1, "trailing content after last record");
    }

    std::size_t line() const { return line_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
};

std::vector<std::string_view> split_fields(std::string_view s, std::size_t line) {
    std::vector<std::string_view> out;
    if (s.empty()) throw ParseError(line, "empty line");
    std::size_t start = 0;
    while (true) {
        const auto sp = s.find(' ', start);
        const auto field = s.substr(start, sp == std::string_view::npos ? sp : sp - start);
        if (field.empty()) throw ParseError(line, "fields must be separated by single spaces");
        out.push_back(field);
        if (sp == std::string_view::npos) break;
        start = sp + 1;
    }
    return out;
}

std::uint64_t parse_number(std::string_view s, std::size_t line) {
    if (s.empty() || (s.size() > 1 && s[0] == '0'))
        throw ParseError(line, "malformed number '" + std::string(s) + "'");
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ParseError(line, "malformed number '" + std::string(s) + "'");
    return v;
}

std::uint64_t keyed_number(LineReader& in, std::string_view key) {
    const auto s = in.next(key);
    const auto f = split_fields(s, in.line());
    if (f.size() != 2 || f[0] != key)
        throw ParseError(in.line(), "expected '" + std::string(key) + " <n>'");
    return parse_number(f[1], in.line());
}

VertexId checked_id(std::uint64_t v, std::uint64_t bound, std::size_t line) {
    if (v >= bound) throw ParseError(line, "id " + std::to_string(v) + " out of range");
    return static_cast<VertexId>(v);
}

}  // namespace

std::string to_hgt(const Hypergraph& h) {
    std::ostringstream os;
    os << "hgt 1\nvertices " << h.num_vertices() << "\nedges " << h.num_edges() << '\n';
    for (const auto& e : h.edges()) {
        os << 'e';
        for (VertexId v : e) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

std::string to_bgt(const BipartiteGraph& g) {
    std::ostringstream os;
    os << "bgt 1\nleft " << g.n_left() << "\nright " << g.n_right() << '\n';
    for (const auto& [u, v] : g.incidences()) os << "a " << u << ' ' << v << '\n';
    return os.str();
}

Hypergraph parse_hgt(std::string_view text) {
    LineReader in(text);
    if (in.next("header") != "hgt 1") throw ParseError(1, "expected header 'hgt 1'");
    const auto n = keyed_number(in, "vertices");
    const auto m = keyed_number(in, "edges");
    std::vector<Edge> edges;
    for (std::uint64_t i = 0; i < m; ++i) {
        const auto line = in.next("edge line");
        const auto f = split_fields(line, in.line());
        if (f[0] != "e" || f.size() < 2) throw ParseError(in.line(), "expected 'e <v1> ... <vk>'");
        Edge e;
        for (std::size_t k = 1; k < f.size(); ++k) {
            const VertexId v = checked_id(parse_number(f[k], in.line()), n, in.line());
            if (!e.empty() && v <= e.back())
                throw ParseError(in.line(), "edge vertices must be strictly increasing");
            e.push_back(v);
        }
        if (!edges.empty() && !(edges.back() < e))
            throw ParseError(in.line(), "edges must be distinct and in lexicographic order");
        edges.push_back(std::move(e));
    }
    in.expect_end();
    return Hypergraph::from_edges(n, std::move(edges));
}

BipartiteGraph parse_bgt(std::string_view text) {
    LineReader in(text);
    if (in.next("header") != "bgt 1") throw ParseError(1, "expected header 'bgt 1'");
    const auto nl = keyed_number(in, "left");
    const auto nr = keyed_number(in, "right");
    std::vector<BipartiteGraph::Incidence> inc;
    // Incidence count is implicit: read until end of input.
    while (!in.at_end()) {
        const auto line = in.next("incidence");
        const auto f = split_fields(line, in.line());
        if (f.size() != 3 || f[0] != "a") throw ParseError(in.line(), "expected 'a <u> <v>'");
        BipartiteGraph::Incidence p{checked_id(parse_number(f[1], in.line()), nl, in.line()),
                                    checked_id(parse_number(f[2], in.line()), nr, in.line())};
        if (!inc.empty() && !(inc.back() < p))
            throw ParseError(in.line(), "incidences must be distinct and sorted");
        inc.push_back(p);
    }
    return BipartiteGraph::from_incidences(nl, nr, std::move(inc));
}

FileKind sniff(std::string_view text) {
    const auto first = text.substr(0, text.find('\n'));
    if (first == "hgt 1") return FileKind::hypergraph;
    if (first == "bgt 1") return FileKind::bipartite;
    if (first == "cert 1") return FileKind::certificate;
    return FileKind::unknown;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    const auto tmp = path.string() + ".tmp." + std::to_string(::getpid());
    const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_EXCL, 0644);
    if (fd < 0) throw PreconditionError("cannot create " + tmp);
    std::size_t off = 0;
    while (off < contents.size()) {
        const auto n = ::write(fd, contents.data() + off, contents.size() - off);
        if (n <= 0) {
            ::close(fd);
            std::remove(tmp.c_str());
            throw PreconditionError("write failed: " + tmp);
        }
        off += static_cast<std::size_t>(n);
    }
    ::close(fd);
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::remove(tmp.c_str());
        throw PreconditionError("cannot rename onto " + path.string() + ": " + ec.message());
    }
}

}  // namespace hgirth
