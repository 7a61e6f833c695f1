#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

#include "melpress/errors.hpp"

namespace melpress {

// Little-endian byte packing, independent of host endianness. Readers track
// their offset so parse errors can say where the file went wrong.

class ByteWriter {
 public:
  void u8(uint8_t v) { buf_.push_back(v); }
  void u32(uint32_t v) {
    for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }
  void u64(uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }
  void i64(int64_t v) { u64(static_cast<uint64_t>(v)); }
  void f32(float v) {
    uint32_t bits;
    std::memcpy(&bits, &v, 4);
    u32(bits);
  }
  void f64(double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    u64(bits);
  }
  void bytes(const void* p, size_t n) {
    const auto* b = static_cast<const uint8_t*>(p);
    buf_.insert(buf_.end(), b, b + n);
  }
  const std::vector<uint8_t>& data() const { return buf_; }

 private:
  std::vector<uint8_t> buf_;
};

class ByteReader {
 public:
  ByteReader(std::vector<uint8_t> data, std::string what)
      : buf_(std::move(data)), what_(std::move(what)) {}

  size_t offset() const { return pos_; }
  size_t remaining() const { return buf_.size() - pos_; }
  bool done() const { return pos_ == buf_.size(); }

  uint8_t u8() {
    need(1);
    return buf_[pos_++];
  }
  uint32_t u32() {
    need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(buf_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
  }
  uint64_t u64() {
    need(8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(buf_[pos_ + i]) << (8 * i);
    pos_ += 8;
    return v;
  }
  int64_t i64() { return static_cast<int64_t>(u64()); }
  float f32() {
    const uint32_t bits = u32();
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
  }
  double f64() {
    const uint64_t bits = u64();
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
  }
  std::string str(size_t n) {
    need(n);
    std::string s(reinterpret_cast<const char*>(buf_.data() + pos_), n);
    pos_ += n;
    return s;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw IoError(what_ + ": " + msg + " at byte " + std::to_string(pos_));
  }

 private:
  void need(size_t n) {
    if (buf_.size() - pos_ < n) {
      throw IoError(what_ + ": truncated at byte " + std::to_string(buf_.size()) + " (needed " +
                    std::to_string(n) + " more at offset " + std::to_string(pos_) + ")");
    }
  }

  std::vector<uint8_t> buf_;
  std::string what_;
  size_t pos_ = 0;
};

std::vector<uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, const std::vector<uint8_t>& bytes);

// FNV-1a, 64-bit. Used as the checkpoint checksum and identity hash. The
// seeded overload continues a running hash across buffers.
uint64_t fnv1a64(const uint8_t* data, size_t n);
uint64_t fnv1a64(const uint8_t* data, size_t n, uint64_t seed);

}  // namespace melpress
