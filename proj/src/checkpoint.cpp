#include "capelli/checkpoint.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace capelli {

namespace fs = std::filesystem;

std::uint64_t fingerprint_bytes(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

constexpr char kLayerMagic[8] = {'C', 'P', 'L', 'Y', 'L', '0', '0', '1'};

void put_u32(std::ostream& os, std::uint32_t v) { os.write(reinterpret_cast<const char*>(&v), 4); }
void put_u64(std::ostream& os, std::uint64_t v) { os.write(reinterpret_cast<const char*>(&v), 8); }
void put_i8(std::ostream& os, std::int8_t v) { os.write(reinterpret_cast<const char*>(&v), 1); }

std::uint32_t get_u32(std::istream& is) {
    std::uint32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), 4);
    return v;
}
std::uint64_t get_u64(std::istream& is) {
    std::uint64_t v = 0;
    is.read(reinterpret_cast<char*>(&v), 8);
    return v;
}
std::int8_t get_i8(std::istream& is) {
    std::int8_t v = 0;
    is.read(reinterpret_cast<char*>(&v), 1);
    return v;
}

void put_int(std::ostream& os, const Int& v) {
    const bool negative = v < 0;
    std::vector<std::uint8_t> bytes;
    export_bits(negative ? Int(-v) : v, std::back_inserter(bytes), 8);
    put_i8(os, negative ? -1 : 1);
    put_u32(os, static_cast<std::uint32_t>(bytes.size()));
    os.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
}

Int get_int(std::istream& is) {
    const int sign = get_i8(is);
    const std::uint32_t len = get_u32(is);
    std::vector<std::uint8_t> bytes(len);
    is.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(len));
    Int v;
    import_bits(v, bytes.begin(), bytes.end(), 8);
    return sign < 0 ? Int(-v) : v;
}

void put_coeff(std::ostream& os, const Int& c) { put_int(os, c); }
void put_coeff(std::ostream& os, const DiagPoly& c) {
    put_u32(os, static_cast<std::uint32_t>(c.terms().size()));
    for (const auto& t : c.terms()) {
        put_u32(os, t.key);
        put_int(os, t.coeff);
    }
}

void get_coeff(std::istream& is, Int& c) { c = get_int(is); }
void get_coeff(std::istream& is, DiagPoly& c) {
    const std::uint32_t k = get_u32(is);
    c = DiagPoly();
    for (std::uint32_t t = 0; t < k; ++t) {
        const DiagKey key = get_u32(is);
        c.add_term(key, get_int(is));
    }
}

} // namespace

CheckpointWriter::CheckpointWriter(CheckpointConfig cfg, bool symbolic)
    : cfg_(std::move(cfg)), symbolic_(symbolic) {
    fs::create_directories(cfg_.dir);
}

void CheckpointWriter::write_manifest(int layer) const {
    nlohmann::json j;
    j["version"] = kCheckpointVersion;
    j["fingerprint"] = cfg_.fingerprint;
    j["symbolic"] = symbolic_;
    j["layer"] = layer;
    j["description"] = cfg_.description;
    const fs::path tmp = fs::path(cfg_.dir) / "manifest.json.tmp";
    const fs::path dst = fs::path(cfg_.dir) / "manifest.json";
    {
        std::ofstream os(tmp);
        os << j.dump(2) << "\n";
    }
    fs::rename(tmp, dst);
}

template <class C>
void CheckpointWriter::write_layer(
    int layer, const std::vector<std::pair<std::uint32_t, const WeylElement<C>*>>& states,
    int n) {
    const fs::path tmp = fs::path(cfg_.dir) / "layer.bin.tmp";
    const fs::path dst = fs::path(cfg_.dir) / "layer.bin";
    {
        std::ofstream os(tmp, std::ios::binary);
        os.write(kLayerMagic, 8);
        put_u32(os, kCheckpointVersion);
        put_u64(os, cfg_.fingerprint);
        put_i8(os, symbolic_ ? 1 : 0);
        put_i8(os, static_cast<std::int8_t>(n));
        put_u32(os, static_cast<std::uint32_t>(layer));
        put_u64(os, states.size());
        for (const auto& [mask, st] : states) {
            put_u32(os, mask);
            put_u64(os, st->term_count());
            for (const auto& [m, c] : sorted_view(*st)) {
                put_u64(os, m.xw);
                put_u64(os, m.dw);
                put_coeff(os, *c);
            }
        }
        if (!os) throw std::runtime_error("checkpoint: write failed");
    }
    fs::rename(tmp, dst);
    write_manifest(layer);
}

template void CheckpointWriter::write_layer<Int>(
    int, const std::vector<std::pair<std::uint32_t, const WeylElement<Int>*>>&, int);
template void CheckpointWriter::write_layer<DiagPoly>(
    int, const std::vector<std::pair<std::uint32_t, const WeylElement<DiagPoly>*>>&, int);

template <class C>
std::optional<DetResume<C>> load_checkpoint(const CheckpointConfig& cfg, bool symbolic, int n) {
    const fs::path manifest = fs::path(cfg.dir) / "manifest.json";
    const fs::path layerfile = fs::path(cfg.dir) / "layer.bin";
    if (!fs::exists(manifest) || !fs::exists(layerfile)) return std::nullopt;

    nlohmann::json j;
    {
        std::ifstream is(manifest);
        is >> j;
    }
    if (j.value("version", 0u) != kCheckpointVersion)
        throw std::runtime_error("checkpoint: version mismatch, refusing to resume");
    if (j.value("fingerprint", std::uint64_t(0)) != cfg.fingerprint)
        throw std::runtime_error("checkpoint: configuration mismatch, refusing to resume");
    if (j.value("symbolic", false) != symbolic)
        throw std::runtime_error("checkpoint: mode mismatch, refusing to resume");

    std::ifstream is(layerfile, std::ios::binary);
    char magic[8];
    is.read(magic, 8);
    if (!is || std::memcmp(magic, kLayerMagic, 8) != 0)
        throw std::runtime_error("checkpoint: bad layer file");
    if (get_u32(is) != kCheckpointVersion)
        throw std::runtime_error("checkpoint: layer version mismatch");
    if (get_u64(is) != cfg.fingerprint)
        throw std::runtime_error("checkpoint: layer fingerprint mismatch");
    if ((get_i8(is) != 0) != symbolic) throw std::runtime_error("checkpoint: layer mode mismatch");
    if (get_i8(is) != n) throw std::runtime_error("checkpoint: dimension mismatch");

    DetResume<C> r;
    r.layer = static_cast<int>(get_u32(is));
    const std::uint64_t count = get_u64(is);
    r.states.reserve(count);
    for (std::uint64_t s = 0; s < count; ++s) {
        const std::uint32_t mask = get_u32(is);
        const std::uint64_t terms = get_u64(is);
        WeylElement<C> el(n);
        el.reserve(terms);
        for (std::uint64_t t = 0; t < terms; ++t) {
            Monomial m;
            m.xw = get_u64(is);
            m.dw = get_u64(is);
            C c;
            get_coeff(is, c);
            el.add_term(m, std::move(c));
        }
        r.states.emplace_back(mask, std::move(el));
    }
    if (!is) throw std::runtime_error("checkpoint: truncated layer file");
    return r;
}

template std::optional<DetResume<Int>> load_checkpoint<Int>(const CheckpointConfig&, bool, int);
template std::optional<DetResume<DiagPoly>> load_checkpoint<DiagPoly>(const CheckpointConfig&,
                                                                      bool, int);

} // namespace capelli
