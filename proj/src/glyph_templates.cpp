#include "geez/synthgen.hpp"

namespace geez {

namespace {

// Stylized glyph rasters, one per class, hand-drawn on a 40x32 grid. Every
// glyph carries the top and bottom dashes characteristic of the numeral set;
// the centers differ per class. '#' is ink.
constexpr int kGlyphRowCount = 40;

constexpr const char* kGlyphRows[kNumClasses][kGlyphRowCount] = {
    { // 00: one
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "................................",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "................................",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 01: two
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "................................",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "........####........####........",
        "................................",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 02: three
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "................................",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "................................",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 03: four
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "..............####..............",
        ".............######.............",
        "............########............",
        "...........##########...........",
        "..........############..........",
        "..........#####..#####..........",
        ".........#####....#####.........",
        "........#####......#####........",
        ".......#####........#####.......",
        "......######.........#####......",
        ".....#####............#####.....",
        "....######............######....",
        "....#####..............#####....",
        "...#####................#####...",
        "...####..................####...",
        "...#####................#####...",
        "....#####..............#####....",
        "....######............######....",
        ".....#####............#####.....",
        "......######.........#####......",
        ".......#####........#####.......",
        "........#####......#####........",
        ".........#####....#####.........",
        "..........#####..#####..........",
        "..........############..........",
        "...........##########...........",
        "............########............",
        ".............######.............",
        "..............####..............",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 04: five
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "................................",
        "................................",
        "...........#####................",
        ".........#########..............",
        ".......#############............",
        ".......####.....####............",
        "......####.......####...........",
        "......###.........###...........",
        ".....###...........###..........",
        ".....###...........###..........",
        ".....###...........######.......",
        ".....###...........######.......",
        ".....###...........######.......",
        "......###.........#######.......",
        "......####.......########.......",
        ".......####.....####.####.......",
        ".......#############.####.......",
        ".........#########...####.......",
        "...........#####.....####.......",
        ".....................####.......",
        ".....................####.......",
        ".....................####.......",
        ".....................####.......",
        ".....................####.......",
        ".....................####.......",
        ".....................####.......",
        ".....................####.......",
        ".....................####.......",
        "................................",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 05: six
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "................................",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        ".............#####..............",
        "...........#########............",
        ".........#############..........",
        ".........####.########..........",
        "........####..####.####.........",
        "........###.........###.........",
        ".......###...........###........",
        ".......###...........###........",
        ".......###...........###........",
        ".......###...........###........",
        ".......###...........###........",
        "........###.........###.........",
        "........####.......####.........",
        ".........####.....####..........",
        ".........#############..........",
        "...........#########............",
        ".............#####..............",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 06: seven
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "................................",
        "....########################....",
        "....########################....",
        "....########################....",
        "......................####......",
        ".....................#####......",
        ".....................#####......",
        "....................#####.......",
        "....................####........",
        "...................#####........",
        "..................#####.........",
        "..................####..........",
        ".................#####..........",
        "................#####...........",
        "................####............",
        "...............#####............",
        "..............#####.............",
        "..............####..............",
        ".............#####..............",
        "............#####...............",
        "............####................",
        "...........#####................",
        "..........#####.................",
        "..........####..................",
        ".........#####..................",
        "........#####...................",
        "........####....................",
        "........####....................",
        "........###.....................",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 07: eight
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        ".............#####..............",
        "...........#########............",
        "..........###########...........",
        ".........####.....####..........",
        ".........###.......###..........",
        "........###.........###.........",
        "........###.........###.........",
        "........###.........###.........",
        "........###.........###.........",
        "........###.........###.........",
        ".........###.......###..........",
        ".........####.....####..........",
        "..........###########...........",
        "...........#########............",
        ".............#####..............",
        "...........#########............",
        "..........###########...........",
        ".........####.....####..........",
        ".........###.......###..........",
        "........###.........###.........",
        "........###.........###.........",
        "........###.........###.........",
        "........###.........###.........",
        "........###.........###.........",
        ".........###.......###..........",
        ".........####.....####..........",
        "..........###########...........",
        "...........#########............",
        ".............#####..............",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 08: nine
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "............#####...............",
        "..........#########.............",
        "........#############...........",
        "........####.....####...........",
        ".......####.......####..........",
        ".......###.........###..........",
        "......###...........###.........",
        "......###...........###.........",
        "......###..........####.........",
        "......###..........####.........",
        "......###..........####.........",
        ".......###.........####.........",
        ".......####.......#####.........",
        "........####.....######.........",
        "........###############.........",
        "..........#############.........",
        "............#####..####.........",
        "...................####.........",
        "...................####.........",
        "...................####.........",
        "...................####.........",
        "...................####.........",
        "...................####.........",
        "...................####.........",
        "...................####.........",
        "...................####.........",
        "...................####.........",
        "...................####.........",
        "................................",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 09: ten
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "................................",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "........################........",
        "........################........",
        "........################........",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "................................",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 10: twenty
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "................................",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....######################.....",
        ".....######################.....",
        ".....######################.....",
        ".....######################.....",
        "................................",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 11: thirty
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "................................",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....####......####......####....",
        "....########################....",
        "....########################....",
        "....########################....",
        "....########################....",
        "................................",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 12: forty
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "....###..................###....",
        "....####................####....",
        "....#####..............#####....",
        ".....#####............#####.....",
        ".....#####............#####.....",
        "......#####..........#####......",
        ".......#####........#####.......",
        "........#####......#####........",
        ".........#####....#####.........",
        ".........#####....#####.........",
        "..........#####..#####..........",
        "...........##########...........",
        "............########............",
        ".............######.............",
        ".............######.............",
        ".............######.............",
        "............########............",
        "...........##########...........",
        "..........#####..#####..........",
        ".........#####....#####.........",
        ".........#####....#####.........",
        "........#####......#####........",
        ".......#####........#####.......",
        "......#####..........#####......",
        ".....#####............#####.....",
        ".....#####............#####.....",
        "....#####..............#####....",
        "....####................####....",
        "....###..................###....",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 13: fifty
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "................................",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....######################.....",
        ".....######################.....",
        ".....######################.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        ".....####..............####.....",
        "................................",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 14: sixty
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "................................",
        ".....######################.....",
        ".....######################.....",
        ".....######################.....",
        "......................####......",
        ".....................#####......",
        "....................#####.......",
        "...................######.......",
        "...................#####........",
        "..................#####.........",
        ".................#####..........",
        "................#####...........",
        "...............#####............",
        "..............######............",
        ".............######.............",
        "............######..............",
        "............#####...............",
        "...........#####................",
        "..........#####.................",
        ".........#####..................",
        "........#####...................",
        ".......######...................",
        ".......#####....................",
        "......#####.....................",
        "......####......................",
        ".....######################.....",
        ".....######################.....",
        ".....######################.....",
        "................................",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 15: seventy
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "................................",
        "....########################....",
        "....########################....",
        "....########################....",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "................................",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 16: eighty
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "................................",
        "................................",
        "................................",
        "................................",
        "................................",
        "................................",
        "................................",
        ".......#####........#####.......",
        ".....#########....#########.....",
        "....###########..###########....",
        "...####.....########.....####...",
        "...###.......######.......###...",
        "..###.........####.........###..",
        "..###.........####.........###..",
        "..###.........####.........###..",
        "..###.........####.........###..",
        "..###.........####.........###..",
        "...###.......######.......###...",
        "...####.....########.....####...",
        "....###########..###########....",
        ".....#########....#########.....",
        ".......#####........#####.......",
        "................................",
        "................................",
        "................................",
        "................................",
        "................................",
        "................................",
        "................................",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 17: ninety
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "....###...................###...",
        "....###...................###...",
        "....####.................####...",
        "....####.................####...",
        "....####.................####...",
        ".....###.................###....",
        ".....###.......###.......###....",
        ".....####......###......####....",
        ".....####.....#####.....####....",
        "......###.....#####.....###.....",
        "......###.....#####.....###.....",
        "......####....#####....####.....",
        "......####...#######...####.....",
        "......####...#######...####.....",
        ".......###...#######...###......",
        ".......####..###.###..####......",
        ".......####.####.####.####......",
        ".......####.####.####.####......",
        "........###.####.####.###.......",
        "........###.###...###.###.......",
        "........#######...#######.......",
        "........#######...#######.......",
        ".........######...######........",
        ".........#####.....#####........",
        ".........#####.....#####........",
        ".........#####.....#####........",
        ".........#####.....#####........",
        "..........###.......###.........",
        "..........###.......###.........",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 18: hundred
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "................................",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        ".....######################.....",
        ".....######################.....",
        ".....######################.....",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        ".....######################.....",
        ".....######################.....",
        ".....######################.....",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "..............####..............",
        "................................",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
    { // 19: ten thousand
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
        "................................",
        "................................",
        "................................",
        "............#######.............",
        "..........###########...........",
        "........###############.........",
        ".......#####.......#####........",
        "......####...........####.......",
        ".....####.............####......",
        ".....###......####.....###......",
        "....###.......####......###.....",
        "....###.......####......###.....",
        "...###........####.......###....",
        "...###........####.......###....",
        "...###...##############..###....",
        "...###...##############..###....",
        "...###...##############..###....",
        "...###........####.......###....",
        "...###........####.......###....",
        "....###.......####......###.....",
        "....###.......####......###.....",
        ".....###......####.....###......",
        ".....####.............####......",
        "......####...........####.......",
        ".......#####.......#####........",
        "........###############.........",
        "..........###########...........",
        "............#######.............",
        "................................",
        "................................",
        "................................",
        "...##########################...",
        "...##########################...",
        "...##########################...",
        "................................",
    },
};

} // namespace

const std::vector<GlyphTemplate>& glyph_templates() {
    static const std::vector<GlyphTemplate> templates = [] {
        std::vector<GlyphTemplate> out;
        out.reserve(kNumClasses);
        for (int id = 0; id < kNumClasses; ++id) {
            const int cols = static_cast<int>(std::string(kGlyphRows[id][0]).size());
            BinaryImage raster(kGlyphRowCount, cols, Polarity::InkIsOne);
            for (int r = 0; r < kGlyphRowCount; ++r)
                for (int c = 0; c < cols; ++c)
                    raster.at(r, c) = kGlyphRows[id][r][c] == '#' ? 1 : 0;
            out.push_back({id, std::move(raster)});
        }
        return out;
    }();
    return templates;
}

} // namespace geez
