#pragma once

#include <string>
#include <string_view>

namespace streamtag {

// Porter's 1980 suffix-stripping algorithm. Input is expected to be a
// lowercase ASCII-alphabetic word; anything else is returned unchanged.
// Deterministic; words of length <= 2 are never altered.
std::string porter_stem(std::string_view word);

}  // namespace streamtag
