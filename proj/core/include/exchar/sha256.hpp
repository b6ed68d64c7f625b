#ifndef EXCHAR_SHA256_HPP
#define EXCHAR_SHA256_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace exchar {

// Incremental SHA-256. Used for content hashes that key the in-process table
// memo and the on-disk result store; verified against the standard vectors.
class Sha256 {
public:
  Sha256();
  void update(const void* data, std::size_t len);
  void update(const std::string& s) { update(s.data(), s.size()); }
  // Finalizes and returns the digest as 64 lowercase hex characters.
  std::string hex_digest();

private:
  void process_block(const std::uint8_t* block);

  std::uint32_t state_[8];
  std::uint64_t bit_count_;
  std::uint8_t buffer_[64];
  std::size_t buffer_len_;
};

std::string sha256_hex(const std::string& data);

} // namespace exchar

#endif
