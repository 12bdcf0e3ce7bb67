#pragma once
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace vcs {

// Little-endian byte sink for sketch state. Serialized form doubles as the
// space meter (bits = 8 * bytes) and as the witness for merge-vs-concat
// equality, so layout must be deterministic.
class ByteWriter {
 public:
  void u8(uint8_t v) { buf_.push_back(v); }

  void u32(uint32_t v) {
    for (int i = 0; i < 4; i++) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }

  void u64(uint64_t v) {
    for (int i = 0; i < 8; i++) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }

  void i64(int64_t v) { u64(static_cast<uint64_t>(v)); }

  const std::vector<uint8_t>& bytes() const { return buf_; }
  size_t size() const { return buf_.size(); }

 private:
  std::vector<uint8_t> buf_;
};

class ByteReader {
 public:
  explicit ByteReader(const std::vector<uint8_t>& buf) : buf_(buf) {}

  uint8_t u8() {
    need(1);
    return buf_[pos_++];
  }

  uint32_t u32() {
    need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; i++) v |= static_cast<uint32_t>(buf_[pos_++]) << (8 * i);
    return v;
  }

  uint64_t u64() {
    need(8);
    uint64_t v = 0;
    for (int i = 0; i < 8; i++) v |= static_cast<uint64_t>(buf_[pos_++]) << (8 * i);
    return v;
  }

  int64_t i64() { return static_cast<int64_t>(u64()); }

  bool done() const { return pos_ == buf_.size(); }

 private:
  void need(size_t k) {
    if (pos_ + k > buf_.size()) throw std::runtime_error("byte reader underflow");
  }

  const std::vector<uint8_t>& buf_;
  size_t pos_ = 0;
};

// Appends values bit-packed at a fixed width; used for counter banks and
// permutation arrays where whole bytes would overstate the space account.
class BitWriter {
 public:
  explicit BitWriter(ByteWriter& out) : out_(out) {}

  void append(uint64_t value, uint32_t bits) {
    for (uint32_t i = 0; i < bits; i++) {
      cur_ |= ((value >> i) & 1) << fill_;
      if (++fill_ == 8) flush_byte();
    }
  }

  ~BitWriter() {
    if (fill_ > 0) flush_byte();
  }

 private:
  void flush_byte() {
    out_.u8(cur_);
    cur_ = 0;
    fill_ = 0;
  }

  ByteWriter& out_;
  uint8_t cur_ = 0;
  uint32_t fill_ = 0;
};

}  // namespace vcs
