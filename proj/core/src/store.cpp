#include "exchar/store.hpp"

#include <unistd.h>

#include <atomic>
#include <fstream>
#include <sstream>

#include "exchar/error.hpp"
#include "exchar/version.hpp"

namespace exchar {

namespace fs = std::filesystem;

ResultStore::ResultStore(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  fs::create_directories(root_, ec);
  if (ec) {
    fail(ErrorCode::StoreError,
         "cannot create result store at " + root_.string() + ": " +
             ec.message());
  }
}

fs::path ResultStore::record_path(const std::string& group_hash, long p,
                                  const std::string& check) const {
  if (group_hash.size() < 3) {
    fail(ErrorCode::StoreError, "group hash too short: " + group_hash);
  }
  std::ostringstream leaf;
  leaf << p << "-" << check << "-v" << kEngineVersion << ".json";
  return root_ / group_hash.substr(0, 2) / group_hash / leaf.str();
}

std::optional<std::string> ResultStore::fetch(const std::string& group_hash,
                                              long p,
                                              const std::string& check) const {
  fs::path path = record_path(group_hash, p, check);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) {
    fail(ErrorCode::StoreError, "cannot read record " + path.string());
  }
  return buf.str();
}

fs::path ResultStore::put(const std::string& group_hash, long p,
                          const std::string& check,
                          const std::string& payload) {
  static std::atomic<unsigned long> counter{0};
  fs::path path = record_path(group_hash, p, check);
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) {
    fail(ErrorCode::StoreError,
         "cannot create " + path.parent_path().string() + ": " + ec.message());
  }
  std::ostringstream tmp_name;
  tmp_name << path.filename().string() << ".tmp." << ::getpid() << "."
           << counter.fetch_add(1);
  fs::path tmp = path.parent_path() / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(payload.data(),
              static_cast<std::streamsize>(payload.size()));
    if (!out.good()) {
      fail(ErrorCode::StoreError, "cannot write " + tmp.string());
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    fail(ErrorCode::StoreError,
         "cannot publish record " + path.string() + ": " + ec.message());
  }
  return path;
}

} // namespace exchar
