#pragma once

#include <string>
#include <string_view>

namespace seir {

/// Lowercase hex SHA-256 digest of `bytes`.
std::string sha256_hex(std::string_view bytes);

/// Incremental SHA-256 for fingerprints assembled from many pieces.
class Sha256 {
  public:
    Sha256();
    ~Sha256();
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;

    Sha256& update(std::string_view bytes);
    /// Feeds a length-prefixed field so concatenations cannot collide.
    Sha256& field(std::string_view bytes);
    std::string hex_digest();

  private:
    void* m_ctx;
};

}  // namespace seir
