#include "wikirank/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <random>
#include <sstream>

#include "wikirank/errors.hpp"

namespace wikirank {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string() + ": " +
                  std::strerror(errno));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw IoError("read failed for " + path.string());
  }
  return buf.str();
}

void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content) {
  const auto dir = path.parent_path();
  if (!dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
      throw IoError("cannot create " + dir.string() + ": " + ec.message());
    }
  }

  // Unique temp name in the target directory so the rename stays on one
  // filesystem.
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::ostringstream tmp_name;
  tmp_name << path.filename().string() << ".tmp." << std::hex << rng();
  const auto tmp = (dir.empty() ? std::filesystem::path(".") : dir) /
                   tmp_name.str();

  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot create " + tmp.string() + ": " +
                    std::strerror(errno));
    }
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw IoError("write failed for " + tmp.string());
    }
  }

  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ec2;
    std::filesystem::remove(tmp, ec2);
    throw IoError("rename to " + path.string() + " failed: " + ec.message());
  }
}

}  // namespace wikirank
