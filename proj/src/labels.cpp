#include "geez/labels.hpp"

namespace geez {

namespace {

long value_for_id(int id) {
    if (id < 9) return id + 1;          // 1..9
    if (id < 18) return (id - 8) * 10L; // 10..90
    if (id == 18) return 100;
    return 10000;
}

} // namespace

ClassInfo class_info(int id) {
    if (id < 0 || id >= kNumClasses)
        throw LabelError("class_info: id out of range: " + std::to_string(id));
    ClassInfo info;
    info.id = id;
    info.value = value_for_id(id);
    info.codepoint = static_cast<char32_t>(0x1369 + id);
    info.folder = std::string(1, static_cast<char>('0' + id / 10)) +
                  static_cast<char>('0' + id % 10);
    return info;
}

int class_id_from_folder(const std::string& folder) {
    if (folder.size() != 2 || folder[0] < '0' || folder[0] > '9' || folder[1] < '0' ||
        folder[1] > '9')
        throw LabelError("unknown class folder: '" + folder + "'");
    const int id = (folder[0] - '0') * 10 + (folder[1] - '0');
    if (id >= kNumClasses) throw LabelError("unknown class folder: '" + folder + "'");
    return id;
}

int class_id_from_value(long value) {
    for (int id = 0; id < kNumClasses; ++id)
        if (value_for_id(id) == value) return id;
    throw LabelError("no Geez numeral has value " + std::to_string(value));
}

std::string class_glyph_utf8(int id) {
    const char32_t cp = class_info(id).codepoint;
    // All 20 codepoints sit in the three-byte UTF-8 range.
    std::string s(3, '\0');
    s[0] = static_cast<char>(0xE0 | (cp >> 12));
    s[1] = static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    s[2] = static_cast<char>(0x80 | (cp & 0x3F));
    return s;
}

} // namespace geez
