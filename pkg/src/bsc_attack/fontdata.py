"""Embedded 8x16 serif-style bitmap glyphs covering printable ASCII.

Each glyph is 16 rows of 8 columns, ``#`` = text pixel. Column 7 is left
blank as inter-glyph spacing, so bitmap width equals the advance width and a
single rasterized character reproduces its atlas bitmap exactly. Baseline is
row 11; rows 12-14 hold descenders.
"""

GLYPH_HEIGHT = 16
GLYPH_WIDTH = 8

_GLYPHS = {
    " ": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
    ),
    "!": (
        "........",
        "........",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "........",
        "...#....",
        "........",
        "........",
        "........",
        "........",
    ),
    '"': (
        "........",
        "........",
        "..#.#...",
        "..#.#...",
        "..#.#...",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
    ),
    "#": (
        "........",
        "........",
        "........",
        "..#.#...",
        "..#.#...",
        "#######.",
        "..#.#...",
        "..#.#...",
        "#######.",
        "..#.#...",
        "..#.#...",
        "........",
        "........",
        "........",
        "........",
        "........",
    ),
    "$": (
        "........",
        "........",
        "...#....",
        ".#####..",
        "#..#..#.",
        "#..#....",
        ".#####..",
        "...#..#.",
        "...#..#.",
        "#..#..#.",
        ".#####..",
        "...#....",
        "........",
        "........",
        "........",
        "........",
    ),
    "%": (
        "........",
        "........",
        ".##...#.",
        "#..#.#..",
        ".##.#...",
        "....#...",
        "...#....",
        "...#....",
        "..#.....",
        "..#.##..",
        ".#.#..#.",
        "#...##..",
        "........",
        "........",
        "........",
        "........",
    ),
    "&": (
        "........",
        "........",
        "..##....",
        ".#..#...",
        ".#..#...",
        "..##....",
        ".##.....",
        "#..#..#.",
        "#...##..",
        "#...##..",
        ".#..#.#.",
        "..##..#.",
        "........",
        "........",
        "........",
        "........",
    ),
    "'": (
        "........",
        "........",
        "...#....",
        "...#....",
        "...#....",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
    ),
    "(": (
        "........",
        "........",
        "....#...",
        "...#....",
        "..#.....",
        "..#.....",
        "..#.....",
        "..#.....",
        "..#.....",
        "..#.....",
        "...#....",
        "....#...",
        "........",
        "........",
        "........",
        "........",
    ),
    ")": (
        "........",
        "........",
        "..#.....",
        "...#....",
        "....#...",
        "....#...",
        "....#...",
        "....#...",
        "....#...",
        "....#...",
        "...#....",
        "..#.....",
        "........",
        "........",
        "........",
        "........",
    ),
    "*": (
        "........",
        "........",
        "........",
        "........",
        "...#....",
        ".#.#.#..",
        "..###...",
        ".#.#.#..",
        "...#....",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
    ),
    "+": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "...#....",
        "...#....",
        ".#####..",
        "...#....",
        "...#....",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
    ),
    ",": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "..##....",
        "..##....",
        "...#....",
        "..#.....",
        "........",
        "........",
    ),
    "-": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        ".#####..",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
    ),
    ".": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "..##....",
        "..##....",
        "........",
        "........",
        "........",
        "........",
    ),
    "/": (
        "........",
        "........",
        ".....#..",
        ".....#..",
        "....#...",
        "....#...",
        "...#....",
        "...#....",
        "..#.....",
        "..#.....",
        ".#......",
        ".#......",
        "........",
        "........",
        "........",
        "........",
    ),
    "0": (
        "........",
        "........",
        "..###...",
        ".#...#..",
        "#.....#.",
        "#....##.",
        "#...#.#.",
        "#.#...#.",
        "##....#.",
        "#.....#.",
        ".#...#..",
        "..###...",
        "........",
        "........",
        "........",
        "........",
    ),
    "1": (
        "........",
        "........",
        "...#....",
        "..##....",
        ".#.#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "..###...",
        "........",
        "........",
        "........",
        "........",
    ),
    "2": (
        "........",
        "........",
        ".#####..",
        "#.....#.",
        "......#.",
        "......#.",
        ".....#..",
        "....#...",
        "...#....",
        "..#.....",
        ".#....#.",
        "#######.",
        "........",
        "........",
        "........",
        "........",
    ),
    "3": (
        "........",
        "........",
        ".#####..",
        "#.....#.",
        "......#.",
        "......#.",
        "..####..",
        "......#.",
        "......#.",
        "......#.",
        "#.....#.",
        ".#####..",
        "........",
        "........",
        "........",
        "........",
    ),
    "4": (
        "........",
        "........",
        "....##..",
        "...#.#..",
        "..#..#..",
        ".#...#..",
        "#....#..",
        "#######.",
        ".....#..",
        ".....#..",
        ".....#..",
        "....###.",
        "........",
        "........",
        "........",
        "........",
    ),
    "5": (
        "........",
        "........",
        "######..",
        "#.......",
        "#.......",
        "#####...",
        ".....#..",
        "......#.",
        "......#.",
        "......#.",
        "#.....#.",
        ".#####..",
        "........",
        "........",
        "........",
        "........",
    ),
    "6": (
        "........",
        "........",
        "..####..",
        ".#......",
        "#.......",
        "#.......",
        "#####...",
        "##....#.",
        "#.....#.",
        "#.....#.",
        ".#....#.",
        "..####..",
        "........",
        "........",
        "........",
        "........",
    ),
    "7": (
        "........",
        "........",
        "#######.",
        "#.....#.",
        ".....#..",
        ".....#..",
        "....#...",
        "....#...",
        "...#....",
        "...#....",
        "..#.....",
        "..#.....",
        "........",
        "........",
        "........",
        "........",
    ),
    "8": (
        "........",
        "........",
        ".#####..",
        "#.....#.",
        "#.....#.",
        "#.....#.",
        ".#####..",
        "#.....#.",
        "#.....#.",
        "#.....#.",
        "#.....#.",
        ".#####..",
        "........",
        "........",
        "........",
        "........",
    ),
    "9": (
        "........",
        "........",
        ".####...",
        "#....#..",
        "#.....#.",
        "#.....#.",
        ".######.",
        "......#.",
        "......#.",
        "......#.",
        ".....#..",
        ".####...",
        "........",
        "........",
        "........",
        "........",
    ),
    ":": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "..##....",
        "..##....",
        "........",
        "........",
        "........",
        "..##....",
        "..##....",
        "........",
        "........",
        "........",
        "........",
    ),
    ";": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "..##....",
        "..##....",
        "........",
        "........",
        "........",
        "..##....",
        "..##....",
        "...#....",
        "..#.....",
        "........",
        "........",
    ),
    "<": (
        "........",
        "........",
        "........",
        "........",
        ".....#..",
        "....#...",
        "...#....",
        "..#.....",
        "...#....",
        "....#...",
        ".....#..",
        "........",
        "........",
        "........",
        "........",
        "........",
    ),
    "=": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        ".#####..",
        "........",
        ".#####..",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
    ),
    ">": (
        "........",
        "........",
        "........",
        "........",
        ".#......",
        "..#.....",
        "...#....",
        "....#...",
        "...#....",
        "..#.....",
        ".#......",
        "........",
        "........",
        "........",
        "........",
        "........",
    ),
    "?": (
        "........",
        "........",
        ".####...",
        "#....#..",
        "#....#..",
        "....#...",
        "...#....",
        "...#....",
        "...#....",
        "........",
        "...#....",
        "...#....",
        "........",
        "........",
        "........",
        "........",
    ),
    "@": (
        "........",
        "........",
        "..####..",
        ".#....#.",
        "#..##.#.",
        "#.#.#.#.",
        "#.#.#.#.",
        "#.#.#.#.",
        "#..###..",
        ".#......",
        "..####..",
        "........",
        "........",
        "........",
        "........",
        "........",
    ),
    "A": (
        "........",
        "........",
        "...#....",
        "..#.#...",
        "..#.#...",
        ".#...#..",
        ".#...#..",
        ".#####..",
        "#.....#.",
        "#.....#.",
        "#.....#.",
        "###.###.",
        "........",
        "........",
        "........",
        "........",
    ),
    "B": (
        "........",
        "........",
        "######..",
        ".#...#..",
        ".#...#..",
        ".#...#..",
        ".####...",
        ".#...#..",
        ".#....#.",
        ".#....#.",
        ".#...#..",
        "######..",
        "........",
        "........",
        "........",
        "........",
    ),
    "C": (
        "........",
        "........",
        "..####..",
        ".#....#.",
        "#.......",
        "#.......",
        "#.......",
        "#.......",
        "#.......",
        "#.......",
        ".#....#.",
        "..####..",
        "........",
        "........",
        "........",
        "........",
    ),
    "D": (
        "........",
        "........",
        "#####...",
        ".#...#..",
        ".#....#.",
        ".#....#.",
        ".#....#.",
        ".#....#.",
        ".#....#.",
        ".#....#.",
        ".#...#..",
        "#####...",
        "........",
        "........",
        "........",
        "........",
    ),
    "E": (
        "........",
        "........",
        "#######.",
        ".#....#.",
        ".#......",
        ".#..#...",
        ".####...",
        ".#..#...",
        ".#......",
        ".#......",
        ".#....#.",
        "#######.",
        "........",
        "........",
        "........",
        "........",
    ),
    "F": (
        "........",
        "........",
        "#######.",
        ".#....#.",
        ".#......",
        ".#..#...",
        ".####...",
        ".#..#...",
        ".#......",
        ".#......",
        ".#......",
        "###.....",
        "........",
        "........",
        "........",
        "........",
    ),
    "G": (
        "........",
        "........",
        "..####..",
        ".#....#.",
        "#.......",
        "#.......",
        "#.......",
        "#...###.",
        "#.....#.",
        "#.....#.",
        ".#....#.",
        "..####..",
        "........",
        "........",
        "........",
        "........",
    ),
    "H": (
        "........",
        "........",
        "###.###.",
        ".#...#..",
        ".#...#..",
        ".#...#..",
        ".#####..",
        ".#...#..",
        ".#...#..",
        ".#...#..",
        ".#...#..",
        "###.###.",
        "........",
        "........",
        "........",
        "........",
    ),
    "I": (
        "........",
        "........",
        "..###...",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "..###...",
        "........",
        "........",
        "........",
        "........",
    ),
    "J": (
        "........",
        "........",
        "...####.",
        ".....#..",
        ".....#..",
        ".....#..",
        ".....#..",
        ".....#..",
        ".....#..",
        "#....#..",
        "#....#..",
        ".####...",
        "........",
        "........",
        "........",
        "........",
    ),
    "K": (
        "........",
        "........",
        "###.###.",
        ".#...#..",
        ".#..#...",
        ".#.#....",
        ".##.....",
        ".#.#....",
        ".#..#...",
        ".#...#..",
        ".#...#..",
        "###..##.",
        "........",
        "........",
        "........",
        "........",
    ),
    "L": (
        "........",
        "........",
        "###.....",
        ".#......",
        ".#......",
        ".#......",
        ".#......",
        ".#......",
        ".#......",
        ".#......",
        ".#....#.",
        "#######.",
        "........",
        "........",
        "........",
        "........",
    ),
    "M": (
        "........",
        "........",
        "##...##.",
        ".##.##..",
        ".##.##..",
        ".#.#.#..",
        ".#.#.#..",
        ".#...#..",
        ".#...#..",
        ".#...#..",
        ".#...#..",
        "###.###.",
        "........",
        "........",
        "........",
        "........",
    ),
    "N": (
        "........",
        "........",
        "##..###.",
        ".##..#..",
        ".##..#..",
        ".#.#.#..",
        ".#.#.#..",
        ".#.#.#..",
        ".#..##..",
        ".#..##..",
        ".#...#..",
        "###..#..",
        "........",
        "........",
        "........",
        "........",
    ),
    "O": (
        "........",
        "........",
        "..###...",
        ".#...#..",
        "#.....#.",
        "#.....#.",
        "#.....#.",
        "#.....#.",
        "#.....#.",
        "#.....#.",
        ".#...#..",
        "..###...",
        "........",
        "........",
        "........",
        "........",
    ),
    "P": (
        "........",
        "........",
        "######..",
        ".#....#.",
        ".#....#.",
        ".#....#.",
        ".#####..",
        ".#......",
        ".#......",
        ".#......",
        ".#......",
        "###.....",
        "........",
        "........",
        "........",
        "........",
    ),
    "Q": (
        "........",
        "........",
        "..###...",
        ".#...#..",
        "#.....#.",
        "#.....#.",
        "#.....#.",
        "#.....#.",
        "#..#..#.",
        "#...#.#.",
        ".#...#..",
        "..###.#.",
        "........",
        "........",
        "........",
        "........",
    ),
    "R": (
        "........",
        "........",
        "######..",
        ".#....#.",
        ".#....#.",
        ".#....#.",
        ".#####..",
        ".#..#...",
        ".#...#..",
        ".#...#..",
        ".#...#..",
        "###..##.",
        "........",
        "........",
        "........",
        "........",
    ),
    "S": (
        "........",
        "........",
        ".#####..",
        "#.....#.",
        "#.......",
        ".#......",
        "..###...",
        ".....#..",
        "......#.",
        "......#.",
        "#.....#.",
        ".#####..",
        "........",
        "........",
        "........",
        "........",
    ),
    "T": (
        "........",
        "........",
        "#######.",
        "#..#..#.",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "..###...",
        "........",
        "........",
        "........",
        "........",
    ),
    "U": (
        "........",
        "........",
        "###.###.",
        ".#...#..",
        ".#...#..",
        ".#...#..",
        ".#...#..",
        ".#...#..",
        ".#...#..",
        ".#...#..",
        ".#...#..",
        "..###...",
        "........",
        "........",
        "........",
        "........",
    ),
    "V": (
        "........",
        "........",
        "###.###.",
        ".#...#..",
        ".#...#..",
        ".#...#..",
        "..#.#...",
        "..#.#...",
        "..#.#...",
        "...#....",
        "...#....",
        "...#....",
        "........",
        "........",
        "........",
        "........",
    ),
    "W": (
        "........",
        "........",
        "###.###.",
        ".#...#..",
        ".#...#..",
        ".#.#.#..",
        ".#.#.#..",
        ".#.#.#..",
        ".#.#.#..",
        "..#.#...",
        "..#.#...",
        "..#.#...",
        "........",
        "........",
        "........",
        "........",
    ),
    "X": (
        "........",
        "........",
        "###.###.",
        ".#...#..",
        "..#.#...",
        "..#.#...",
        "...#....",
        "...#....",
        "..#.#...",
        "..#.#...",
        ".#...#..",
        "###.###.",
        "........",
        "........",
        "........",
        "........",
    ),
    "Y": (
        "........",
        "........",
        "###.###.",
        ".#...#..",
        "..#.#...",
        "..#.#...",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "..###...",
        "........",
        "........",
        "........",
        "........",
    ),
    "Z": (
        "........",
        "........",
        "#######.",
        "#....#..",
        "....#...",
        "....#...",
        "...#....",
        "...#....",
        "..#.....",
        "..#.....",
        ".#....#.",
        "#######.",
        "........",
        "........",
        "........",
        "........",
    ),
    "[": (
        "........",
        "........",
        "..###...",
        "..#.....",
        "..#.....",
        "..#.....",
        "..#.....",
        "..#.....",
        "..#.....",
        "..#.....",
        "..#.....",
        "..###...",
        "........",
        "........",
        "........",
        "........",
    ),
    "\\": (
        "........",
        "........",
        ".#......",
        ".#......",
        "..#.....",
        "..#.....",
        "...#....",
        "...#....",
        "....#...",
        "....#...",
        ".....#..",
        ".....#..",
        "........",
        "........",
        "........",
        "........",
    ),
    "]": (
        "........",
        "........",
        "..###...",
        "....#...",
        "....#...",
        "....#...",
        "....#...",
        "....#...",
        "....#...",
        "....#...",
        "....#...",
        "..###...",
        "........",
        "........",
        "........",
        "........",
    ),
    "^": (
        "........",
        "........",
        "...#....",
        "..#.#...",
        ".#...#..",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
    ),
    "_": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "#######.",
        "........",
        "........",
    ),
    "`": (
        "........",
        "........",
        "..#.....",
        "...#....",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
    ),
    "a": (
        "........",
        "........",
        "........",
        "........",
        "........",
        ".####...",
        ".....#..",
        ".#####..",
        "#....#..",
        "#....#..",
        "#...##..",
        ".###.##.",
        "........",
        "........",
        "........",
        "........",
    ),
    "b": (
        "........",
        "........",
        "##......",
        ".#......",
        ".#......",
        ".#.###..",
        ".##...#.",
        ".#....#.",
        ".#....#.",
        ".#....#.",
        ".##...#.",
        "##.###..",
        "........",
        "........",
        "........",
        "........",
    ),
    "c": (
        "........",
        "........",
        "........",
        "........",
        "........",
        ".####...",
        "#....#..",
        "#.......",
        "#.......",
        "#.......",
        "#....#..",
        ".####...",
        "........",
        "........",
        "........",
        "........",
    ),
    "d": (
        "........",
        "........",
        "....##..",
        ".....#..",
        ".....#..",
        ".###.#..",
        "#...##..",
        "#....#..",
        "#....#..",
        "#....#..",
        "#...##..",
        ".###.##.",
        "........",
        "........",
        "........",
        "........",
    ),
    "e": (
        "........",
        "........",
        "........",
        "........",
        "........",
        ".####...",
        "#....#..",
        "#....#..",
        "######..",
        "#.......",
        "#....#..",
        ".####...",
        "........",
        "........",
        "........",
        "........",
    ),
    "f": (
        "........",
        "........",
        "..###...",
        ".#...#..",
        ".#......",
        ".#......",
        "####....",
        ".#......",
        ".#......",
        ".#......",
        ".#......",
        "###.....",
        "........",
        "........",
        "........",
        "........",
    ),
    "g": (
        "........",
        "........",
        "........",
        "........",
        "........",
        ".###.#..",
        "#...##..",
        "#....#..",
        "#....#..",
        "#....#..",
        "#...##..",
        ".###.#..",
        ".....#..",
        "#....#..",
        ".####...",
        "........",
    ),
    "h": (
        "........",
        "........",
        "##......",
        ".#......",
        ".#......",
        ".#.###..",
        ".##...#.",
        ".#....#.",
        ".#....#.",
        ".#....#.",
        ".#....#.",
        "###.###.",
        "........",
        "........",
        "........",
        "........",
    ),
    "i": (
        "........",
        "........",
        "........",
        "...#....",
        "........",
        "..##....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "..###...",
        "........",
        "........",
        "........",
        "........",
    ),
    "j": (
        "........",
        "........",
        "........",
        "....#...",
        "........",
        "...##...",
        "....#...",
        "....#...",
        "....#...",
        "....#...",
        "....#...",
        "....#...",
        "....#...",
        "#...#...",
        ".###....",
        "........",
    ),
    "k": (
        "........",
        "........",
        "##......",
        ".#......",
        ".#......",
        ".#..##..",
        ".#.#....",
        ".##.....",
        ".##.....",
        ".#.#....",
        ".#..#...",
        "###..##.",
        "........",
        "........",
        "........",
        "........",
    ),
    "l": (
        "........",
        "........",
        "..##....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "..###...",
        "........",
        "........",
        "........",
        "........",
    ),
    "m": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "######..",
        "#..#..#.",
        "#..#..#.",
        "#..#..#.",
        "#..#..#.",
        "#..#..#.",
        "#..#..#.",
        "........",
        "........",
        "........",
        "........",
    ),
    "n": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "#.###...",
        "##...#..",
        "#....#..",
        "#....#..",
        "#....#..",
        "#....#..",
        "##..###.",
        "........",
        "........",
        "........",
        "........",
    ),
    "o": (
        "........",
        "........",
        "........",
        "........",
        "........",
        ".####...",
        "#....#..",
        "#....#..",
        "#....#..",
        "#....#..",
        "#....#..",
        ".####...",
        "........",
        "........",
        "........",
        "........",
    ),
    "p": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "##.###..",
        ".##...#.",
        ".#....#.",
        ".#....#.",
        ".#....#.",
        ".##...#.",
        ".#.###..",
        ".#......",
        ".#......",
        "###.....",
        "........",
    ),
    "q": (
        "........",
        "........",
        "........",
        "........",
        "........",
        ".###.##.",
        "#...##..",
        "#....#..",
        "#....#..",
        "#....#..",
        "#...##..",
        ".###.#..",
        ".....#..",
        ".....#..",
        "....###.",
        "........",
    ),
    "r": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "##.###..",
        ".##...#.",
        ".#......",
        ".#......",
        ".#......",
        ".#......",
        "####....",
        "........",
        "........",
        "........",
        "........",
    ),
    "s": (
        "........",
        "........",
        "........",
        "........",
        "........",
        ".####...",
        "#....#..",
        ".#......",
        "..###...",
        ".....#..",
        "#....#..",
        ".####...",
        "........",
        "........",
        "........",
        "........",
    ),
    "t": (
        "........",
        "........",
        "........",
        "..#.....",
        "..#.....",
        "#####...",
        "..#.....",
        "..#.....",
        "..#.....",
        "..#.....",
        "..#...#.",
        "...###..",
        "........",
        "........",
        "........",
        "........",
    ),
    "u": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "#....#..",
        "#....#..",
        "#....#..",
        "#....#..",
        "#....#..",
        "#...##..",
        ".###.##.",
        "........",
        "........",
        "........",
        "........",
    ),
    "v": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "##...##.",
        ".#...#..",
        ".#...#..",
        "..#.#...",
        "..#.#...",
        "...#....",
        "...#....",
        "........",
        "........",
        "........",
        "........",
    ),
    "w": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "#..#..#.",
        "#..#..#.",
        "#..#..#.",
        "#..#..#.",
        "#..#..#.",
        "#..#..#.",
        ".##.##..",
        "........",
        "........",
        "........",
        "........",
    ),
    "x": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "##...##.",
        ".#...#..",
        "..#.#...",
        "...#....",
        "..#.#...",
        ".#...#..",
        "##...##.",
        "........",
        "........",
        "........",
        "........",
    ),
    "y": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "##...##.",
        ".#...#..",
        ".#...#..",
        "..#.#...",
        "..#.#...",
        "...#....",
        "...#....",
        "..#.....",
        ".#......",
        "##......",
        "........",
    ),
    "z": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "######..",
        "#...#...",
        "....#...",
        "...#....",
        "..#.....",
        ".#....#.",
        "######..",
        "........",
        "........",
        "........",
        "........",
    ),
    "{": (
        "........",
        "........",
        "....##..",
        "...#....",
        "...#....",
        "...#....",
        "..#.....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "....##..",
        "........",
        "........",
        "........",
        "........",
    ),
    "|": (
        "........",
        "........",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "...#....",
        "........",
        "........",
        "........",
    ),
    "}": (
        "........",
        "........",
        "..##....",
        "....#...",
        "....#...",
        "....#...",
        ".....#..",
        "....#...",
        "....#...",
        "....#...",
        "....#...",
        "..##....",
        "........",
        "........",
        "........",
        "........",
    ),
    "~": (
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        ".##...#.",
        "#..#..#.",
        "#...##..",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
        "........",
    ),
}


def glyph_rows(char: str) -> tuple[str, ...]:
    return _GLYPHS[char]


def charset() -> tuple[str, ...]:
    return tuple(sorted(_GLYPHS))
