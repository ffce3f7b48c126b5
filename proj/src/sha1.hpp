#pragma once

#include <string>
#include <string_view>

namespace sllg {

/// SHA-1 digest as a lowercase hex string.
std::string sha1_hex(std::string_view data);

/// Git-style content hash: sha1 of "blob <len>\0<content>".
std::string git_blob_hash(std::string_view content);

}  // namespace sllg
