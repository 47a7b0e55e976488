#pragma once

#include <string>

#include "trix/index.hpp"

namespace trix {

/// Versioned flat binary serialization of an Index. All integers are
/// little-endian with fixed widths, so rebuilding from the same input
/// yields byte-identical files.
struct IndexBundle {
    static constexpr std::uint32_t kVersion = 1;

    Index index;
    std::uint32_t charset_ascii = 0;                  // 1 when built with --charset ascii
    std::string byte_map;                             // rank i-1 -> byte, when ascii

    std::string serialize() const;
    static IndexBundle deserialize(const std::string& bytes);
};

}  // namespace trix
