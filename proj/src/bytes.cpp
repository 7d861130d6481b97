#include "fdd/bytes.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace fdd {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}
}  // namespace

std::string to_hex(std::span<const uint8_t> data) {
    std::string out;
    out.reserve(data.size() * 2);
    for (uint8_t b : data) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 0xf]);
    }
    return out;
}

std::string to_hex(const Digest32& d) {
    return to_hex(std::span<const uint8_t>(d.data(), d.size()));
}

std::optional<Bytes> from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) return std::nullopt;
    Bytes out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_nibble(hex[i]);
        int lo = hex_nibble(hex[i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        out.push_back(static_cast<uint8_t>(hi << 4 | lo));
    }
    return out;
}

std::optional<Digest32> digest_from_hex(const std::string& hex) {
    auto bytes = from_hex(hex);
    if (!bytes || bytes->size() != 32) return std::nullopt;
    Digest32 d;
    std::memcpy(d.data(), bytes->data(), 32);
    return d;
}

Bytes to_bytes(const std::string& s) {
    return Bytes(s.begin(), s.end());
}

Digest32 sha256(std::span<const uint8_t> data) {
    Sha256 h;
    h.update(data);
    return h.finish();
}

Digest32 sha256(const std::string& data) {
    return sha256(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(data.data()), data.size()));
}

Sha256::Sha256() {
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
        EVP_MD_CTX_free(ctx);
        throw std::runtime_error("sha256 init failed");
    }
    ctx_ = ctx;
}

Sha256::~Sha256() {
    EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_));
}

Sha256& Sha256::update(std::span<const uint8_t> data) {
    if (EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), data.data(), data.size()) != 1)
        throw std::runtime_error("sha256 update failed");
    return *this;
}

Sha256& Sha256::update(const std::string& data) {
    return update(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(data.data()), data.size()));
}

Digest32 Sha256::finish() {
    Digest32 out;
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(static_cast<EVP_MD_CTX*>(ctx_), out.data(), &len) != 1 || len != 32)
        throw std::runtime_error("sha256 final failed");
    return out;
}

Bytes aead_seal(const Digest32& key, std::span<const uint8_t> nonce12,
                std::span<const uint8_t> aad, std::span<const uint8_t> plaintext) {
    if (nonce12.size() != 12) throw std::invalid_argument("aead: nonce must be 12 bytes");
    EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
    if (!ctx) throw std::runtime_error("aead: ctx alloc failed");
    Bytes out(plaintext.size() + 16);
    int len = 0;
    int total = 0;
    bool ok = EVP_EncryptInit_ex(ctx, EVP_aes_256_gcm(), nullptr, key.data(), nonce12.data()) == 1;
    if (ok && !aad.empty()) ok = EVP_EncryptUpdate(ctx, nullptr, &len, aad.data(), static_cast<int>(aad.size())) == 1;
    if (ok && !plaintext.empty()) {
        ok = EVP_EncryptUpdate(ctx, out.data(), &len, plaintext.data(), static_cast<int>(plaintext.size())) == 1;
        total = len;
    }
    if (ok) ok = EVP_EncryptFinal_ex(ctx, out.data() + total, &len) == 1;
    total += len;
    if (ok) ok = EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_GCM_GET_TAG, 16, out.data() + total) == 1;
    EVP_CIPHER_CTX_free(ctx);
    if (!ok) throw std::runtime_error("aead: encrypt failed");
    out.resize(static_cast<size_t>(total) + 16);
    return out;
}

std::optional<Bytes> aead_open(const Digest32& key, std::span<const uint8_t> nonce12,
                               std::span<const uint8_t> aad, std::span<const uint8_t> sealed) {
    if (nonce12.size() != 12 || sealed.size() < 16) return std::nullopt;
    EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
    if (!ctx) return std::nullopt;
    size_t ct_len = sealed.size() - 16;
    Bytes out(ct_len);
    int len = 0;
    int total = 0;
    bool ok = EVP_DecryptInit_ex(ctx, EVP_aes_256_gcm(), nullptr, key.data(), nonce12.data()) == 1;
    if (ok && !aad.empty()) ok = EVP_DecryptUpdate(ctx, nullptr, &len, aad.data(), static_cast<int>(aad.size())) == 1;
    if (ok && ct_len > 0) {
        ok = EVP_DecryptUpdate(ctx, out.data(), &len, sealed.data(), static_cast<int>(ct_len)) == 1;
        total = len;
    }
    uint8_t tag[16];
    std::memcpy(tag, sealed.data() + ct_len, 16);
    if (ok) ok = EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_GCM_SET_TAG, 16, tag) == 1;
    if (ok) ok = EVP_DecryptFinal_ex(ctx, out.data() + total, &len) == 1;
    EVP_CIPHER_CTX_free(ctx);
    if (!ok) return std::nullopt;
    out.resize(static_cast<size_t>(total) + len);
    return out;
}

void ByteWriter::u32(uint32_t v) {
    for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void ByteWriter::u64(uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void ByteWriter::f64(double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    u64(bits);
}

void ByteWriter::blob(std::span<const uint8_t> data) {
    u32(static_cast<uint32_t>(data.size()));
    raw(data);
}

void ByteWriter::str(const std::string& s) {
    blob(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
}

bool ByteReader::take(void* out, size_t n) {
    if (!ok_ || data_.size() - pos_ < n) {
        ok_ = false;
        return false;
    }
    std::memcpy(out, data_.data() + pos_, n);
    pos_ += n;
    return true;
}

uint8_t ByteReader::u8() {
    uint8_t v = 0;
    take(&v, 1);
    return v;
}

uint32_t ByteReader::u32() {
    uint8_t b[4] = {};
    if (!take(b, 4)) return 0;
    return static_cast<uint32_t>(b[0]) | static_cast<uint32_t>(b[1]) << 8 |
           static_cast<uint32_t>(b[2]) << 16 | static_cast<uint32_t>(b[3]) << 24;
}

uint64_t ByteReader::u64() {
    uint64_t v = 0;
    uint8_t b[8] = {};
    if (!take(b, 8)) return 0;
    for (int i = 7; i >= 0; --i) v = v << 8 | b[i];
    return v;
}

double ByteReader::f64() {
    uint64_t bits = u64();
    double v = 0;
    std::memcpy(&v, &bits, 8);
    return v;
}

Bytes ByteReader::blob() {
    uint32_t n = u32();
    if (!ok_ || data_.size() - pos_ < n) {
        ok_ = false;
        return {};
    }
    Bytes out(data_.begin() + static_cast<ptrdiff_t>(pos_), data_.begin() + static_cast<ptrdiff_t>(pos_ + n));
    pos_ += n;
    return out;
}

std::string ByteReader::str() {
    Bytes b = blob();
    return std::string(b.begin(), b.end());
}

Digest32 ByteReader::digest() {
    Digest32 d{};
    take(d.data(), d.size());
    return d;
}

bool ByteReader::expect_tag(const char (&t)[5]) {
    uint8_t b[4] = {};
    if (!take(b, 4)) return false;
    if (std::memcmp(b, t, 4) != 0) {
        ok_ = false;
        return false;
    }
    return true;
}

}  // namespace fdd
