#ifndef GEEZ_LABELS_HPP
#define GEEZ_LABELS_HPP

#include <cstdint>
#include <string>

#include "geez/errors.hpp"

namespace geez {

inline constexpr int kNumClasses = 20;

// Fixed bijection over the 20 Geez numeral symbols: class ids 0..19 map to
// Unicode Ethiopic numerals U+1369..U+137C with values 1..9, 10..90 by tens,
// 100 and 10000.
struct ClassInfo {
    int id;                 // 0..19
    long value;             // 1..9, 10..90, 100, 10000
    char32_t codepoint;     // U+1369 + id
    std::string folder;     // two-digit dataset folder name, "00".."19"
};

ClassInfo class_info(int id);

// Reverse lookups; throw LabelError when there is no match.
int class_id_from_folder(const std::string& folder);
int class_id_from_value(long value);

// UTF-8 encoding of the class glyph, for display.
std::string class_glyph_utf8(int id);

} // namespace geez

#endif
