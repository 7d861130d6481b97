#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fdd {

using Bytes = std::vector<uint8_t>;
using Digest32 = std::array<uint8_t, 32>;

std::string to_hex(std::span<const uint8_t> data);
std::string to_hex(const Digest32& d);
std::optional<Bytes> from_hex(const std::string& hex);
std::optional<Digest32> digest_from_hex(const std::string& hex);

Bytes to_bytes(const std::string& s);

/// SHA-256 over a single buffer.
Digest32 sha256(std::span<const uint8_t> data);
Digest32 sha256(const std::string& data);

/// Incremental SHA-256 (OpenSSL EVP behind the scenes).
class Sha256 {
public:
    Sha256();
    ~Sha256();
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;

    Sha256& update(std::span<const uint8_t> data);
    Sha256& update(const std::string& data);
    Digest32 finish();

private:
    void* ctx_;
};

/// AES-256-GCM, 12-byte nonce, 16-byte tag appended to the ciphertext.
Bytes aead_seal(const Digest32& key, std::span<const uint8_t> nonce12,
                std::span<const uint8_t> aad, std::span<const uint8_t> plaintext);
std::optional<Bytes> aead_open(const Digest32& key, std::span<const uint8_t> nonce12,
                               std::span<const uint8_t> aad, std::span<const uint8_t> sealed);

/// Little-endian, length-prefixed binary writer. All on-disk and on-wire
/// encodings in this project go through this pair so they stay byte-stable.
class ByteWriter {
public:
    void u8(uint8_t v) { buf_.push_back(v); }
    void u32(uint32_t v);
    void u64(uint64_t v);
    void i64(int64_t v) { u64(static_cast<uint64_t>(v)); }
    void f64(double v);
    void raw(std::span<const uint8_t> data) { buf_.insert(buf_.end(), data.begin(), data.end()); }
    void blob(std::span<const uint8_t> data);  // u32 length + bytes
    void str(const std::string& s);
    void digest(const Digest32& d) { raw(std::span<const uint8_t>(d.data(), d.size())); }
    void tag(const char (&t)[5]) { raw(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(t), 4)); }

    const Bytes& bytes() const { return buf_; }
    Bytes take() { return std::move(buf_); }

private:
    Bytes buf_;
};

/// Matching reader; any failed read latches ok()==false and subsequent
/// reads return zero values instead of touching out-of-range memory.
class ByteReader {
public:
    explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

    uint8_t u8();
    uint32_t u32();
    uint64_t u64();
    int64_t i64() { return static_cast<int64_t>(u64()); }
    double f64();
    Bytes blob();
    std::string str();
    Digest32 digest();
    bool expect_tag(const char (&t)[5]);

    bool ok() const { return ok_; }
    bool at_end() const { return ok_ && pos_ == data_.size(); }
    size_t remaining() const { return ok_ ? data_.size() - pos_ : 0; }

private:
    bool take(void* out, size_t n);
    std::span<const uint8_t> data_;
    size_t pos_ = 0;
    bool ok_ = true;
};

}  // namespace fdd
