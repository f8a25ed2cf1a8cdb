#include "ttkit/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "ttkit/errors.hpp"

namespace ttkit {

namespace {

void append_u32(std::vector<unsigned char>& out, std::uint32_t v) {
    for (unsigned k = 0; k < 4; ++k) out.push_back(static_cast<unsigned char>(v >> (8 * k)));
}

void append_u64(std::vector<unsigned char>& out, std::uint64_t v) {
    for (unsigned k = 0; k < 8; ++k) out.push_back(static_cast<unsigned char>(v >> (8 * k)));
}

void append_f64(std::vector<unsigned char>& out, double v) {
    append_u64(out, std::bit_cast<std::uint64_t>(v));
}

void write_file(const std::string& path, const std::vector<unsigned char>& buf) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw io_error(path + ": cannot open for writing");
    f.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(buf.size()));
    f.flush();
    if (!f) throw io_error(path + ": write failed");
}

class Reader {
public:
    explicit Reader(std::string path) : path_(std::move(path)) {
        std::ifstream f(path_, std::ios::binary);
        if (!f) throw io_error(path_ + ": cannot open for reading");
        f.seekg(0, std::ios::end);
        const std::streamoff size = f.tellg();
        if (size < 0) throw io_error(path_ + ": cannot determine file size");
        f.seekg(0, std::ios::beg);
        buf_.resize(static_cast<std::size_t>(size));
        if (size > 0) {
            f.read(reinterpret_cast<char*>(buf_.data()), size);
            if (!f) throw io_error(path_ + ": read failed");
        }
    }

    const std::string& path() const { return path_; }

    void expect_magic(const char (&magic)[5]) {
        need(4);
        if (std::memcmp(buf_.data() + pos_, magic, 4) != 0) {
            throw io_error(path_ + ": bad magic, expected " + magic);
        }
        pos_ += 4;
    }

    std::uint32_t get_u32() {
        need(4);
        std::uint32_t v = 0;
        for (unsigned k = 0; k < 4; ++k) v |= std::uint32_t(buf_[pos_ + k]) << (8 * k);
        pos_ += 4;
        return v;
    }

    std::uint64_t get_u64() {
        need(8);
        std::uint64_t v = 0;
        for (unsigned k = 0; k < 8; ++k) v |= std::uint64_t(buf_[pos_ + k]) << (8 * k);
        pos_ += 8;
        return v;
    }

    unsigned char get_u8() {
        need(1);
        return buf_[pos_++];
    }

    double get_f64() { return std::bit_cast<double>(get_u64()); }

    /// Reads `count` doubles, refusing before allocation if the remainder of
    /// the file cannot hold them.
    std::vector<double> get_payload(std::uint64_t count) {
        if (count > remaining() / 8) throw io_error(path_ + ": unexpected end of file");
        std::vector<double> vals(static_cast<std::size_t>(count));
        for (double& v : vals) v = get_f64();
        return vals;
    }

    std::size_t remaining() const { return buf_.size() - pos_; }

    void need(std::size_t n) {
        if (remaining() < n) throw io_error(path_ + ": unexpected end of file");
    }

    void finish() const {
        if (remaining() != 0) {
            throw io_error(path_ + ": " + std::to_string(remaining()) + " trailing bytes");
        }
    }

private:
    std::string path_;
    std::vector<unsigned char> buf_;
    std::size_t pos_ = 0;
};

// Product of header sizes; any overflow already exceeds what a file can hold.
std::uint64_t header_count(const Reader& r, std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > UINT64_MAX / b) throw io_error(r.path() + ": unexpected end of file");
    return a * b;
}

} // namespace

void write_dense(const std::string& path, const DenseTensor& x) {
    std::vector<unsigned char> buf;
    buf.reserve(8 + 8 * x.order() + 8 * x.count());
    buf.insert(buf.end(), {'D', 'N', 'S', '1'});
    append_u32(buf, static_cast<std::uint32_t>(x.order()));
    for (std::size_t d : x.shape().dims()) append_u64(buf, d);
    for (double v : x.values()) append_f64(buf, v);
    write_file(path, buf);
}

DenseTensor read_dense(const std::string& path) {
    Reader r(path);
    r.expect_magic("DNS1");
    const std::uint32_t order = r.get_u32();
    std::vector<std::size_t> dims(order);
    std::uint64_t count = 1;
    for (std::uint32_t k = 0; k < order; ++k) {
        const std::uint64_t d = r.get_u64();
        if (d == 0) throw io_error(path + ": zero mode size");
        count = header_count(r, count, d);
        dims[k] = static_cast<std::size_t>(d);
    }
    std::vector<double> vals = r.get_payload(count);
    r.finish();
    try {
        return DenseTensor(Shape(std::move(dims)), std::move(vals));
    } catch (const std::exception& e) {
        throw io_error(path + ": " + e.what());
    }
}

void write_tt(const std::string& path, const TTTensor& x) {
    std::vector<unsigned char> buf;
    buf.insert(buf.end(), {'T', 'T', 'V', '1'});
    append_u32(buf, static_cast<std::uint32_t>(x.order()));
    for (const TTCore& c : x.cores()) {
        append_u64(buf, c.r_left());
        append_u64(buf, c.dim());
        append_u64(buf, c.r_right());
        for (double v : c.data().values()) append_f64(buf, v);
        buf.push_back(static_cast<unsigned char>(c.orth()));
    }
    write_file(path, buf);
}

TTTensor read_tt(const std::string& path) {
    Reader r(path);
    r.expect_magic("TTV1");
    const std::uint32_t n = r.get_u32();
    if (n == 0) throw io_error(path + ": empty tensor train");
    std::vector<TTCore> cores;
    cores.reserve(n);
    for (std::uint32_t k = 0; k < n; ++k) {
        const std::uint64_t rl = r.get_u64();
        const std::uint64_t dim = r.get_u64();
        const std::uint64_t rr = r.get_u64();
        if (rl == 0 || dim == 0 || rr == 0) {
            throw io_error(path + ": zero size in core " + std::to_string(k + 1));
        }
        std::vector<double> vals =
            r.get_payload(header_count(r, header_count(r, rl, dim), rr));
        const unsigned char flag = r.get_u8();
        if (flag > 2) {
            throw io_error(path + ": invalid orthogonality flag " +
                           std::to_string(int(flag)) + " in core " + std::to_string(k + 1));
        }
        cores.emplace_back(static_cast<std::size_t>(rl), static_cast<std::size_t>(dim),
                           static_cast<std::size_t>(rr), std::move(vals),
                           static_cast<OrthFlag>(flag));
    }
    r.finish();
    try {
        return TTTensor(std::move(cores));
    } catch (const std::exception& e) {
        throw io_error(path + ": " + e.what());
    }
}

void write_ttm(const std::string& path, const TTMatrix& a) {
    std::vector<unsigned char> buf;
    buf.insert(buf.end(), {'T', 'T', 'M', '1'});
    append_u32(buf, static_cast<std::uint32_t>(a.order()));
    for (const MTTCore& c : a.cores()) {
        append_u64(buf, c.r_left());
        append_u64(buf, c.row_dim());
        append_u64(buf, c.col_dim());
        append_u64(buf, c.r_right());
        for (double v : c.data().values()) append_f64(buf, v);
    }
    write_file(path, buf);
}

TTMatrix read_ttm(const std::string& path) {
    Reader r(path);
    r.expect_magic("TTM1");
    const std::uint32_t n = r.get_u32();
    if (n == 0) throw io_error(path + ": empty matrix train");
    std::vector<MTTCore> cores;
    cores.reserve(n);
    for (std::uint32_t k = 0; k < n; ++k) {
        const std::uint64_t rl = r.get_u64();
        const std::uint64_t rows = r.get_u64();
        const std::uint64_t cols = r.get_u64();
        const std::uint64_t rr = r.get_u64();
        if (rl == 0 || rows == 0 || cols == 0 || rr == 0) {
            throw io_error(path + ": zero size in core " + std::to_string(k + 1));
        }
        const std::uint64_t count =
            header_count(r, header_count(r, header_count(r, rl, rows), cols), rr);
        std::vector<double> vals = r.get_payload(count);
        cores.emplace_back(static_cast<std::size_t>(rl), static_cast<std::size_t>(rows),
                           static_cast<std::size_t>(cols), static_cast<std::size_t>(rr),
                           std::move(vals));
    }
    r.finish();
    try {
        return TTMatrix(std::move(cores));
    } catch (const std::exception& e) {
        throw io_error(path + ": " + e.what());
    }
}

} // namespace ttkit
