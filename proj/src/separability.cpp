#include "padeval/separability.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "padeval/error.hpp"
#include "padeval/manifest.hpp"

namespace padeval {

namespace {

void check_entries(const EmbeddingSet& emb) {
    if (emb.dim == 0) throw ValidationError("embedding dim must be positive");
    for (const auto& e : emb.entries) {
        if (e.vec.size() != emb.dim)
            throw DimensionMismatchError("sample '" + e.sample_id + "' has " + std::to_string(e.vec.size()) +
                                         " components, set dim is " + std::to_string(emb.dim));
        for (const double v : e.vec)
            if (!std::isfinite(v)) throw ValidationError("non-finite component in sample '" + e.sample_id + "'");
    }
}

// Mean and RMS distance to the mean for one class; summation is in entry
// order so results are reproducible.
void class_stats(const EmbeddingSet& emb, bool attack, std::vector<double>& mu, double& sigma) {
    mu.assign(emb.dim, 0.0);
    std::size_t n = 0;
    for (const auto& e : emb.entries) {
        if (e.is_attack != attack) continue;
        ++n;
        for (std::size_t k = 0; k < emb.dim; ++k) mu[k] += e.vec[k];
    }
    if (n == 0)
        throw OneClassError(std::string("embedding set has no ") + (attack ? "attack" : "bonafide") + " entries");
    for (auto& m : mu) m /= static_cast<double>(n);

    double sq = 0.0;
    for (const auto& e : emb.entries) {
        if (e.is_attack != attack) continue;
        for (std::size_t k = 0; k < emb.dim; ++k) {
            const double d = e.vec[k] - mu[k];
            sq += d * d;
        }
    }
    sigma = std::sqrt(sq / static_cast<double>(n));
}

}  // namespace

ClassGeometry class_geometry(const EmbeddingSet& emb) {
    check_entries(emb);
    ClassGeometry g;
    class_stats(emb, false, g.mu_bf, g.sigma_bf);
    class_stats(emb, true, g.mu_at, g.sigma_at);

    double gap_sq = 0.0;
    for (std::size_t k = 0; k < emb.dim; ++k) {
        const double d = g.mu_bf[k] - g.mu_at[k];
        gap_sq += d * d;
    }
    g.mean_gap = std::sqrt(gap_sq);

    const double denom = g.sigma_bf + g.sigma_at;
    if (denom > 0.0) {
        g.ratio = {g.mean_gap / denom, false};
    } else if (g.mean_gap > 0.0) {
        g.ratio = {0.0, true};
    } else {
        throw DegenerateDispersionError("both classes collapse onto a single shared point");
    }
    return g;
}

ShiftReport shift_report(const EmbeddingSet& in_domain, const EmbeddingSet& shifted) {
    if (in_domain.dim != shifted.dim)
        throw DimensionMismatchError("in-domain dim " + std::to_string(in_domain.dim) + " vs shifted dim " +
                                     std::to_string(shifted.dim));
    const ClassGeometry gin = class_geometry(in_domain);
    const ClassGeometry gsh = class_geometry(shifted);

    if (gin.ratio.is_infinite)
        throw ZeroBaselineError("in-domain dispersion is zero, SRD/DDP baseline undefined");
    if (gin.ratio.value == 0.0) throw ZeroBaselineError("in-domain separability ratio is zero");
    if (gsh.ratio.is_infinite)
        throw DegenerateDispersionError("shifted dispersion is zero, ratio drop undefined");

    ShiftReport rep;
    rep.r_in = gin.ratio.value;
    rep.r_shift = gsh.ratio.value;
    rep.srd = (rep.r_in - rep.r_shift) / rep.r_in * 100.0;
    const double disp_in = gin.sigma_bf + gin.sigma_at;
    const double disp_sh = gsh.sigma_bf + gsh.sigma_at;
    rep.ddp = (disp_in - disp_sh) / disp_in * 100.0;
    return rep;
}

EmbeddingSet parse_embeddings_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("embeddings file is empty, expected header line");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("sample_id,label,d0", 0) != 0)
        throw ParseError("bad embeddings header, expected 'sample_id,label,d0,...', got '" + line + "'");
    std::size_t dim = 0;
    for (const char c : line) dim += c == ',';
    dim -= 1;  // the two leading columns

    EmbeddingSet set;
    set.dim = dim;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        EmbeddingEntry e;
        std::size_t start = 0;
        std::size_t field = 0;
        const char* data = line.data();
        while (start <= line.size()) {
            std::size_t pos = line.find(',', start);
            if (pos == std::string::npos) pos = line.size();
            if (field == 0) {
                e.sample_id = line.substr(start, pos - start);
                if (e.sample_id.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty sample_id");
            } else if (field == 1) {
                e.is_attack = label_from_string(line.substr(start, pos - start)) == Label::attack;
            } else {
                double v = 0.0;
                auto [ptr, ec] = std::from_chars(data + start, data + pos, v);
                if (ec != std::errc() || ptr != data + pos)
                    throw ParseError("line " + std::to_string(line_no) + ": bad component '" +
                                     line.substr(start, pos - start) + "'");
                e.vec.push_back(v);
            }
            ++field;
            start = pos + 1;
            if (pos == line.size()) break;
        }
        if (e.vec.size() != dim)
            throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                             " components, got " + std::to_string(e.vec.size()));
        set.entries.push_back(std::move(e));
    }
    return set;
}

void write_embeddings_csv(std::ostream& out, const EmbeddingSet& emb) {
    out << "sample_id,label";
    for (std::size_t k = 0; k < emb.dim; ++k) out << ",d" << k;
    out << '\n';
    char buf[64];
    for (const auto& e : emb.entries) {
        out << e.sample_id << ',' << (e.is_attack ? "attack" : "bonafide");
        for (const double v : e.vec) {
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
            out << ',' << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
        }
        out << '\n';
    }
}

namespace {

constexpr char kMagic[4] = {'E', 'M', 'B', '1'};

std::uint32_t read_u32(std::istream& in) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4)) throw ParseError("truncated embeddings binary");
    return static_cast<std::uint32_t>(b[0]) | static_cast<std::uint32_t>(b[1]) << 8 |
           static_cast<std::uint32_t>(b[2]) << 16 | static_cast<std::uint32_t>(b[3]) << 24;
}

void write_u32(std::ostream& out, std::uint32_t v) {
    const unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                                static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

}  // namespace

EmbeddingSet parse_embeddings_binary(std::istream& in) {
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
        throw ParseError("bad embeddings magic, expected 'EMB1'");
    EmbeddingSet set;
    set.dim = read_u32(in);
    if (set.dim == 0) throw ParseError("embeddings binary declares dim 0");

    while (true) {
        in.peek();
        if (in.eof()) break;
        const std::uint32_t id_len = read_u32(in);
        if (id_len > (1u << 20)) throw ParseError("implausible sample_id length in embeddings binary");
        EmbeddingEntry e;
        e.sample_id.resize(id_len);
        if (!in.read(e.sample_id.data(), id_len)) throw ParseError("truncated embeddings binary");
        char label = 0;
        if (!in.read(&label, 1)) throw ParseError("truncated embeddings binary");
        if (label != 0 && label != 1) throw ParseError("bad label byte in embeddings binary");
        e.is_attack = label == 1;
        e.vec.reserve(set.dim);
        for (std::size_t k = 0; k < set.dim; ++k) {
            const std::uint32_t bits = read_u32(in);
            float f;
            std::memcpy(&f, &bits, 4);
            e.vec.push_back(static_cast<double>(f));
        }
        set.entries.push_back(std::move(e));
    }
    return set;
}

void write_embeddings_binary(std::ostream& out, const EmbeddingSet& emb) {
    out.write(kMagic, 4);
    write_u32(out, static_cast<std::uint32_t>(emb.dim));
    for (const auto& e : emb.entries) {
        write_u32(out, static_cast<std::uint32_t>(e.sample_id.size()));
        out.write(e.sample_id.data(), static_cast<std::streamsize>(e.sample_id.size()));
        const char label = e.is_attack ? 1 : 0;
        out.write(&label, 1);
        for (const double v : e.vec) {
            const auto f = static_cast<float>(v);
            std::uint32_t bits;
            std::memcpy(&bits, &f, 4);
            write_u32(out, bits);
        }
    }
}

EmbeddingSet load_embeddings(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open embeddings '" + path + "'");
    char magic[4] = {};
    in.read(magic, 4);
    in.clear();
    in.seekg(0);
    if (std::memcmp(magic, kMagic, 4) == 0) return parse_embeddings_binary(in);
    return parse_embeddings_csv(in);
}

void save_embeddings_csv(const std::string& path, const EmbeddingSet& emb) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write embeddings '" + path + "'");
    write_embeddings_csv(out, emb);
    if (!out) throw IoError("write to '" + path + "' failed");
}

void save_embeddings_binary(const std::string& path, const EmbeddingSet& emb) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write embeddings '" + path + "'");
    write_embeddings_binary(out, emb);
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace padeval
