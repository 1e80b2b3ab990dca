#pragma once

#include <string>
#include <string_view>

namespace lps::utf8 {

/// Decodes UTF-8 into Unicode scalar values. Rejects overlong forms,
/// surrogates, values above U+10FFFF and truncated sequences with DecodeError.
std::u32string decode(std::string_view bytes);

std::string encode(std::u32string_view text);

}  // namespace lps::utf8
