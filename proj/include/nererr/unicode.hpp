#pragma once

#include <cstdint>
#include <string>
#include <string_view>

// Minimal, locale-free UTF-8 helpers. Case mapping covers Latin (including
// the Vietnamese letters in Latin Extended Additional), Greek and Cyrillic.
namespace nererr {

namespace detail {

inline constexpr char32_t kInvalidCodePoint = 0xFFFFFFFF;

/// Decodes the code point at s[i] and advances i. Returns kInvalidCodePoint
/// on malformed input.
inline char32_t next_code_point(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  std::size_t len;
  char32_t cp;
  if (b0 < 0x80) {
    ++i;
    return b0;
  } else if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return kInvalidCodePoint;
  }
  if (i + len > s.size()) {
    i = s.size();
    return kInvalidCodePoint;
  }
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) {
      i += k;
      return kInvalidCodePoint;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += len;
  static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return kInvalidCodePoint;
  return cp;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Latin Extended-A pairs upper/lower as even/odd except in these two runs,
// where the uppercase letter sits on the odd code point.
inline bool odd_upper_run(char32_t cp) {
  return (cp >= 0x0139 && cp <= 0x0148) || (cp >= 0x0179 && cp <= 0x017E);
}

}  // namespace detail

inline bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    if (detail::next_code_point(s, i) == detail::kInvalidCodePoint) return false;
  }
  return true;
}

inline bool is_upper(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return true;
  if (cp >= 0xC0 && cp <= 0xDE) return cp != 0xD7;
  if (cp >= 0x0100 && cp <= 0x017F) {
    if (cp == 0x0138 || cp == 0x0149 || cp == 0x017F) return false;
    return detail::odd_upper_run(cp) ? (cp % 2 == 1) : (cp % 2 == 0);
  }
  if (cp == 0x01A0 || cp == 0x01AF) return true;  // Ơ Ư
  if (cp >= 0x1E00 && cp <= 0x1EFF) return cp % 2 == 0 && !(cp >= 0x1E96 && cp <= 0x1E9F);
  if (cp >= 0x0391 && cp <= 0x03A9) return cp != 0x03A2;
  if (cp >= 0x0400 && cp <= 0x042F) return true;
  return false;
}

inline char32_t to_lower(char32_t cp) {
  if (!is_upper(cp)) return cp;
  if (cp < 0x80 || (cp >= 0xC0 && cp <= 0xDE)) return cp + 0x20;
  if (cp >= 0x0391 && cp <= 0x03A9) return cp + 0x20;
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
  if (cp == 0x0178) return 0xFF;  // Ÿ
  return cp + 1;  // Latin Extended pairs, Ơ Ư, Latin Extended Additional
}

/// True when the first code point is an uppercase letter.
inline bool starts_upper(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  return is_upper(detail::next_code_point(s, i));
}

/// Code-point-wise lowercase; malformed bytes are copied through.
inline std::string fold_case(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t begin = i;
    const char32_t cp = detail::next_code_point(s, i);
    if (cp == detail::kInvalidCodePoint)
      out.append(s.substr(begin, i - begin));
    else
      detail::append_utf8(out, to_lower(cp));
  }
  return out;
}

}  // namespace nererr
