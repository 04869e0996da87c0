#include "hbf/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hbf {

namespace {

unsigned hex_width(unsigned k) { return (k + 3) / 4; }

unsigned parse_field(const std::string& token, const std::string& key) {
    if (token.rfind(key + "=", 0) != 0)
        throw std::runtime_error("truth table header: expected " + key + "=..., got '" + token + "'");
    return static_cast<unsigned>(std::stoul(token.substr(key.size() + 1), nullptr, 0));
}

} // namespace

void write_truth_table(std::ostream& os, const VectorialFunction& F) {
    require_function(F);
    const Field& f = *F.ctx;
    os << "HBF v1 n=" << f.degree() << " k=" << F.k << " modulus=0x" << std::hex << std::uppercase
       << f.modulus() << std::dec << std::nouppercase << "\n";
    const unsigned w = hex_width(F.k);
    unsigned col = 0;
    std::ostringstream word;
    for (std::uint32_t v : F.table) {
        word.str("");
        word << std::hex << std::uppercase << std::setw(static_cast<int>(w)) << std::setfill('0') << v;
        for (char c : word.str()) {
            os << c;
            if (++col == 64) {
                os << "\n";
                col = 0;
            }
        }
    }
    if (col != 0)
        os << "\n";
}

void write_truth_table_file(const std::string& path, const VectorialFunction& F) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write_truth_table(os, F);
}

TruthTableFile read_truth_table(std::istream& is) {
    std::string magic, version;
    TruthTableFile tt;
    std::string header;
    if (!std::getline(is, header))
        throw std::runtime_error("truth table: empty input");
    std::istringstream hs(header);
    std::string tok_n, tok_k, tok_mod;
    hs >> magic >> version >> tok_n >> tok_k >> tok_mod;
    if (magic != "HBF" || version != "v1")
        throw std::runtime_error("truth table: bad magic (want 'HBF v1')");
    tt.n = parse_field(tok_n, "n");
    tt.k = parse_field(tok_k, "k");
    if (tok_mod.rfind("modulus=", 0) != 0)
        throw std::runtime_error("truth table header: expected modulus=...");
    tt.modulus = std::stoull(tok_mod.substr(8), nullptr, 0);
    if (tt.n < Field::kMinDegree || tt.n > Field::kMaxDegree)
        throw std::runtime_error("truth table: n out of range");
    if (tt.k == 0 || tt.k > tt.n)
        throw std::runtime_error("truth table: k out of range");
    if (tt.modulus != Field::shipped_modulus(tt.n))
        throw std::runtime_error("truth table: modulus does not match the shipped table for this n");

    std::string payload, line;
    while (std::getline(is, line)) {
        for (char c : line) {
            if (c == '\r')
                continue;
            payload.push_back(c);
        }
    }
    const unsigned w = hex_width(tt.k);
    const std::size_t expect = (std::size_t{1} << tt.n) * w;
    if (payload.size() != expect)
        throw std::runtime_error("truth table: payload has " + std::to_string(payload.size()) +
                                 " hex digits, expected " + std::to_string(expect));
    tt.words.reserve(std::size_t{1} << tt.n);
    for (std::size_t i = 0; i < payload.size(); i += w) {
        std::uint32_t v = 0;
        for (unsigned j = 0; j < w; ++j) {
            const char c = payload[i + j];
            v <<= 4;
            if (c >= '0' && c <= '9')
                v |= static_cast<std::uint32_t>(c - '0');
            else if (c >= 'A' && c <= 'F')
                v |= static_cast<std::uint32_t>(c - 'A' + 10);
            else if (c >= 'a' && c <= 'f')
                v |= static_cast<std::uint32_t>(c - 'a' + 10);
            else
                throw std::runtime_error("truth table: non-hex payload character");
        }
        if (v >> tt.k)
            throw std::runtime_error("truth table: word wider than k bits");
        tt.words.push_back(v);
    }
    return tt;
}

TruthTableFile read_truth_table_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        throw std::runtime_error("cannot open '" + path + "'");
    return read_truth_table(is);
}

VectorialFunction to_vectorial(const TruthTableFile& tt, const Field& f) {
    if (f.degree() != tt.n || f.modulus() != tt.modulus)
        throw std::invalid_argument("truth table does not belong to this field");
    return VectorialFunction{&f, tt.k, tt.words};
}

std::vector<std::uint32_t> read_h_table(std::istream& is, unsigned& m, unsigned& k) {
    std::string magic, version, tok_m, tok_k;
    is >> magic >> version >> tok_m >> tok_k;
    if (magic != "HTBL" || version != "v1")
        throw std::runtime_error("h table: bad magic (want 'HTBL v1')");
    m = parse_field(tok_m, "m");
    k = parse_field(tok_k, "k");
    if (m == 0 || m > 24 || k == 0 || k > m)
        throw std::runtime_error("h table: bad dimensions");
    std::vector<std::uint32_t> h;
    h.reserve(std::size_t{1} << m);
    std::uint64_t v;
    while (is >> v)
        h.push_back(static_cast<std::uint32_t>(v));
    if (h.size() != (std::size_t{1} << m))
        throw std::runtime_error("h table: expected 2^m entries");
    for (std::uint32_t w : h)
        if (w >> k)
            throw std::runtime_error("h table: entry wider than k bits");
    return h;
}

TraceForm read_trace_form(std::istream& is, const Field& f) {
    std::string magic, version, tok_n, tok_k;
    is >> magic >> version >> tok_n >> tok_k;
    if (magic != "TFORM" || version != "v1")
        throw std::runtime_error("trace form: bad magic (want 'TFORM v1')");
    const unsigned n = parse_field(tok_n, "n");
    const unsigned k = parse_field(tok_k, "k");
    if (n != f.degree())
        throw std::runtime_error("trace form: n does not match the field");
    if (k == 0 || k > n)
        throw std::runtime_error("trace form: k out of range");
    const std::size_t cols = (std::size_t{1} << (n / 2)) + 1;
    TraceForm tf;
    tf.ctx = &f;
    tf.k = k;
    tf.rows.assign(k, std::vector<Field::Elt>(cols, 0));
    for (unsigned i = 0; i < k; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::string tok;
            if (!(is >> tok))
                throw std::runtime_error("trace form: expected k rows of 2^m + 1 coefficients");
            const std::uint64_t v = std::stoull(tok, nullptr, 16);
            if (v >= f.size())
                throw std::runtime_error("trace form: coefficient out of field range");
            tf.rows[i][j] = static_cast<Field::Elt>(v);
        }
    return tf;
}

} // namespace hbf
