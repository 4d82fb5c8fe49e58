#include "vww/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "vww/spectral.hpp"

namespace vww {

namespace {

constexpr char kMagic[4] = {'V', 'W', 'A', 'V'};
constexpr std::uint32_t kVersion = 1;
constexpr std::size_t kHeaderSize = 68;

void put_u32(std::vector<std::uint8_t>& buf, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& buf, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_f64(std::vector<std::uint8_t>& buf, double v) {
    put_u64(buf, std::bit_cast<std::uint64_t>(v));
}

class Reader {
public:
    Reader(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

    std::uint64_t offset() const { return offset_; }

    void expect(std::size_t n, const char* what) const {
        if (offset_ + n > bytes_.size())
            throw FormatError(std::string("truncated file while reading ") + what, offset_);
    }

    std::uint8_t u8(const char* what) {
        expect(1, what);
        return bytes_[offset_++];
    }

    std::uint32_t u32(const char* what) {
        expect(4, what);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= std::uint32_t(bytes_[offset_ + i]) << (8 * i);
        offset_ += 4;
        return v;
    }

    std::uint64_t u64(const char* what) {
        expect(8, what);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= std::uint64_t(bytes_[offset_ + i]) << (8 * i);
        offset_ += 8;
        return v;
    }

    double f64(const char* what) { return std::bit_cast<double>(u64(what)); }

    bool done() const { return offset_ == bytes_.size(); }

private:
    std::vector<std::uint8_t> bytes_;
    std::uint64_t offset_ = 0;
};

} // namespace

void write_snapshot(const WaveState& s, const ModelParams& p,
                    const std::filesystem::path& path) {
    const int n = s.grid().size();
    std::vector<std::uint8_t> buf;
    buf.reserve(kHeaderSize + 16 * static_cast<std::size_t>(n));

    buf.insert(buf.end(), kMagic, kMagic + 4);
    put_u32(buf, kVersion);
    put_u64(buf, static_cast<std::uint64_t>(n));
    put_f64(buf, s.t);
    put_f64(buf, p.delta);
    put_f64(buf, p.beta);
    put_f64(buf, p.epsilon);
    put_f64(buf, p.alpha1);
    put_f64(buf, p.alpha2);
    buf.push_back(static_cast<std::uint8_t>(p.variant));
    buf.insert(buf.end(), 3, 0);

    const Eigen::ArrayXd fs = inverse_transform(s.f);
    const Eigen::ArrayXd fts = inverse_transform(s.ft);
    for (int j = 0; j < n; ++j) put_f64(buf, fs[j]);
    for (int j = 0; j < n; ++j) put_f64(buf, fts[j]);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!out) throw Error("write failed for '" + path.string() + "'");
}

std::pair<WaveState, ModelParams> read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "' for reading");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    Reader r(std::move(bytes));

    r.expect(4, "magic");
    char magic[4];
    for (char& c : magic) c = static_cast<char>(r.u8("magic"));
    if (std::memcmp(magic, kMagic, 4) != 0) throw FormatError("bad magic, expected VWAV", 0);

    const std::uint32_t version = r.u32("version");
    if (version != kVersion)
        throw FormatError("unsupported version " + std::to_string(version), 4);

    const std::uint64_t n64 = r.u64("grid_n");
    if (n64 < 8 || n64 % 2 != 0 || n64 > (1u << 24))
        throw FormatError("invalid grid_n " + std::to_string(n64), 8);
    const int n = static_cast<int>(n64);

    const double t = r.f64("t");
    ModelParams p;
    p.delta = r.f64("delta");
    p.beta = r.f64("beta");
    p.epsilon = r.f64("epsilon");
    p.alpha1 = r.f64("alpha1");
    p.alpha2 = r.f64("alpha2");

    const std::uint8_t variant = r.u8("variant");
    if (variant > 2)
        throw FormatError("invalid variant code " + std::to_string(int(variant)), 64);
    p.variant = static_cast<ModelVariant>(variant);
    for (int i = 0; i < 3; ++i) r.u8("padding");

    const Grid grid(n);
    Eigen::ArrayXd fs(n), fts(n);
    for (int j = 0; j < n; ++j) fs[j] = r.f64("f samples");
    for (int j = 0; j < n; ++j) fts[j] = r.f64("f_t samples");
    if (!r.done())
        throw FormatError("trailing bytes after payload", r.offset());

    WaveState s{project_mean_zero(forward_transform(fs, grid)),
                project_mean_zero(forward_transform(fts, grid)), t};
    return {std::move(s), p};
}

} // namespace vww
