#ifndef EXCHAR_STORE_HPP
#define EXCHAR_STORE_HPP

#include <filesystem>
#include <optional>
#include <string>

namespace exchar {

// Append-only result cache: one JSON payload per (group hash, prime, check,
// engine version), stored as
//   root/<hash[0:2]>/<hash>/<prime>-<check>-v<version>.json
// Writes go through a temporary file plus rename, so concurrent writers
// leave either the old or the new complete payload, never a torn one.
// Re-reading an existing key returns the stored bytes unchanged.
class ResultStore {
 public:
  explicit ResultStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  // The stored payload for the key, or nullopt when absent.
  std::optional<std::string> fetch(const std::string& group_hash, long p,
                                   const std::string& check) const;

  // Stores the payload under the key and returns its canonical path.
  std::filesystem::path put(const std::string& group_hash, long p,
                            const std::string& check,
                            const std::string& payload);

 private:
  std::filesystem::path record_path(const std::string& group_hash, long p,
                                    const std::string& check) const;

  std::filesystem::path root_;
};

} // namespace exchar

#endif
