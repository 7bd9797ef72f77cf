#pragma once

// Generated by scripts/gen_unicode_fold.py. Do not edit.

#include <cstdint>

namespace ncdkit::unicode {

struct FoldEntry { std::uint32_t cp; char base; };

inline constexpr FoldEntry kFoldTable[] = {
    {0x00C0, 'A'},
    {0x00C1, 'A'},
    {0x00C2, 'A'},
    {0x00C3, 'A'},
    {0x00C4, 'A'},
    {0x00C5, 'A'},
    {0x00C7, 'C'},
    {0x00C8, 'E'},
    {0x00C9, 'E'},
    {0x00CA, 'E'},
    {0x00CB, 'E'},
    {0x00CC, 'I'},
    {0x00CD, 'I'},
    {0x00CE, 'I'},
    {0x00CF, 'I'},
    {0x00D1, 'N'},
    {0x00D2, 'O'},
    {0x00D3, 'O'},
    {0x00D4, 'O'},
    {0x00D5, 'O'},
    {0x00D6, 'O'},
    {0x00D9, 'U'},
    {0x00DA, 'U'},
    {0x00DB, 'U'},
    {0x00DC, 'U'},
    {0x00DD, 'Y'},
    {0x00E0, 'a'},
    {0x00E1, 'a'},
    {0x00E2, 'a'},
    {0x00E3, 'a'},
    {0x00E4, 'a'},
    {0x00E5, 'a'},
    {0x00E7, 'c'},
    {0x00E8, 'e'},
    {0x00E9, 'e'},
    {0x00EA, 'e'},
    {0x00EB, 'e'},
    {0x00EC, 'i'},
    {0x00ED, 'i'},
    {0x00EE, 'i'},
    {0x00EF, 'i'},
    {0x00F1, 'n'},
    {0x00F2, 'o'},
    {0x00F3, 'o'},
    {0x00F4, 'o'},
    {0x00F5, 'o'},
    {0x00F6, 'o'},
    {0x00F9, 'u'},
    {0x00FA, 'u'},
    {0x00FB, 'u'},
    {0x00FC, 'u'},
    {0x00FD, 'y'},
    {0x00FF, 'y'},
    {0x0100, 'A'},
    {0x0101, 'a'},
    {0x0102, 'A'},
    {0x0103, 'a'},
    {0x0104, 'A'},
    {0x0105, 'a'},
    {0x0106, 'C'},
    {0x0107, 'c'},
    {0x0108, 'C'},
    {0x0109, 'c'},
    {0x010A, 'C'},
    {0x010B, 'c'},
    {0x010C, 'C'},
    {0x010D, 'c'},
    {0x010E, 'D'},
    {0x010F, 'd'},
    {0x0112, 'E'},
    {0x0113, 'e'},
    {0x0114, 'E'},
    {0x0115, 'e'},
    {0x0116, 'E'},
    {0x0117, 'e'},
    {0x0118, 'E'},
    {0x0119, 'e'},
    {0x011A, 'E'},
    {0x011B, 'e'},
    {0x011C, 'G'},
    {0x011D, 'g'},
    {0x011E, 'G'},
    {0x011F, 'g'},
    {0x0120, 'G'},
    {0x0121, 'g'},
    {0x0122, 'G'},
    {0x0123, 'g'},
    {0x0124, 'H'},
    {0x0125, 'h'},
    {0x0128, 'I'},
    {0x0129, 'i'},
    {0x012A, 'I'},
    {0x012B, 'i'},
    {0x012C, 'I'},
    {0x012D, 'i'},
    {0x012E, 'I'},
    {0x012F, 'i'},
    {0x0130, 'I'},
    {0x0134, 'J'},
    {0x0135, 'j'},
    {0x0136, 'K'},
    {0x0137, 'k'},
    {0x0139, 'L'},
    {0x013A, 'l'},
    {0x013B, 'L'},
    {0x013C, 'l'},
    {0x013D, 'L'},
    {0x013E, 'l'},
    {0x0143, 'N'},
    {0x0144, 'n'},
    {0x0145, 'N'},
    {0x0146, 'n'},
    {0x0147, 'N'},
    {0x0148, 'n'},
    {0x014C, 'O'},
    {0x014D, 'o'},
    {0x014E, 'O'},
    {0x014F, 'o'},
    {0x0150, 'O'},
    {0x0151, 'o'},
    {0x0154, 'R'},
    {0x0155, 'r'},
    {0x0156, 'R'},
    {0x0157, 'r'},
    {0x0158, 'R'},
    {0x0159, 'r'},
    {0x015A, 'S'},
    {0x015B, 's'},
    {0x015C, 'S'},
    {0x015D, 's'},
    {0x015E, 'S'},
    {0x015F, 's'},
    {0x0160, 'S'},
    {0x0161, 's'},
    {0x0162, 'T'},
    {0x0163, 't'},
    {0x0164, 'T'},
    {0x0165, 't'},
    {0x0168, 'U'},
    {0x0169, 'u'},
    {0x016A, 'U'},
    {0x016B, 'u'},
    {0x016C, 'U'},
    {0x016D, 'u'},
    {0x016E, 'U'},
    {0x016F, 'u'},
    {0x0170, 'U'},
    {0x0171, 'u'},
    {0x0172, 'U'},
    {0x0173, 'u'},
    {0x0174, 'W'},
    {0x0175, 'w'},
    {0x0176, 'Y'},
    {0x0177, 'y'},
    {0x0178, 'Y'},
    {0x0179, 'Z'},
    {0x017A, 'z'},
    {0x017B, 'Z'},
    {0x017C, 'z'},
    {0x017D, 'Z'},
    {0x017E, 'z'},
    {0x01A0, 'O'},
    {0x01A1, 'o'},
    {0x01AF, 'U'},
    {0x01B0, 'u'},
    {0x01CD, 'A'},
    {0x01CE, 'a'},
    {0x01CF, 'I'},
    {0x01D0, 'i'},
    {0x01D1, 'O'},
    {0x01D2, 'o'},
    {0x01D3, 'U'},
    {0x01D4, 'u'},
    {0x01D5, 'U'},
    {0x01D6, 'u'},
    {0x01D7, 'U'},
    {0x01D8, 'u'},
    {0x01D9, 'U'},
    {0x01DA, 'u'},
    {0x01DB, 'U'},
    {0x01DC, 'u'},
    {0x01DE, 'A'},
    {0x01DF, 'a'},
    {0x01E0, 'A'},
    {0x01E1, 'a'},
    {0x01E6, 'G'},
    {0x01E7, 'g'},
    {0x01E8, 'K'},
    {0x01E9, 'k'},
    {0x01EA, 'O'},
    {0x01EB, 'o'},
    {0x01EC, 'O'},
    {0x01ED, 'o'},
    {0x01F0, 'j'},
    {0x01F4, 'G'},
    {0x01F5, 'g'},
    {0x01F8, 'N'},
    {0x01F9, 'n'},
    {0x01FA, 'A'},
    {0x01FB, 'a'},
    {0x0200, 'A'},
    {0x0201, 'a'},
    {0x0202, 'A'},
    {0x0203, 'a'},
    {0x0204, 'E'},
    {0x0205, 'e'},
    {0x0206, 'E'},
    {0x0207, 'e'},
    {0x0208, 'I'},
    {0x0209, 'i'},
    {0x020A, 'I'},
    {0x020B, 'i'},
    {0x020C, 'O'},
    {0x020D, 'o'},
    {0x020E, 'O'},
    {0x020F, 'o'},
    {0x0210, 'R'},
    {0x0211, 'r'},
    {0x0212, 'R'},
    {0x0213, 'r'},
    {0x0214, 'U'},
    {0x0215, 'u'},
    {0x0216, 'U'},
    {0x0217, 'u'},
    {0x0218, 'S'},
    {0x0219, 's'},
    {0x021A, 'T'},
    {0x021B, 't'},
    {0x021E, 'H'},
    {0x021F, 'h'},
    {0x0226, 'A'},
    {0x0227, 'a'},
    {0x0228, 'E'},
    {0x0229, 'e'},
    {0x022A, 'O'},
    {0x022B, 'o'},
    {0x022C, 'O'},
    {0x022D, 'o'},
    {0x022E, 'O'},
    {0x022F, 'o'},
    {0x0230, 'O'},
    {0x0231, 'o'},
    {0x0232, 'Y'},
    {0x0233, 'y'},
    {0x1E00, 'A'},
    {0x1E01, 'a'},
    {0x1E02, 'B'},
    {0x1E03, 'b'},
    {0x1E04, 'B'},
    {0x1E05, 'b'},
    {0x1E06, 'B'},
    {0x1E07, 'b'},
    {0x1E08, 'C'},
    {0x1E09, 'c'},
    {0x1E0A, 'D'},
    {0x1E0B, 'd'},
    {0x1E0C, 'D'},
    {0x1E0D, 'd'},
    {0x1E0E, 'D'},
    {0x1E0F, 'd'},
    {0x1E10, 'D'},
    {0x1E11, 'd'},
    {0x1E12, 'D'},
    {0x1E13, 'd'},
    {0x1E14, 'E'},
    {0x1E15, 'e'},
    {0x1E16, 'E'},
    {0x1E17, 'e'},
    {0x1E18, 'E'},
    {0x1E19, 'e'},
    {0x1E1A, 'E'},
    {0x1E1B, 'e'},
    {0x1E1C, 'E'},
    {0x1E1D, 'e'},
    {0x1E1E, 'F'},
    {0x1E1F, 'f'},
    {0x1E20, 'G'},
    {0x1E21, 'g'},
    {0x1E22, 'H'},
    {0x1E23, 'h'},
    {0x1E24, 'H'},
    {0x1E25, 'h'},
    {0x1E26, 'H'},
    {0x1E27, 'h'},
    {0x1E28, 'H'},
    {0x1E29, 'h'},
    {0x1E2A, 'H'},
    {0x1E2B, 'h'},
    {0x1E2C, 'I'},
    {0x1E2D, 'i'},
    {0x1E2E, 'I'},
    {0x1E2F, 'i'},
    {0x1E30, 'K'},
    {0x1E31, 'k'},
    {0x1E32, 'K'},
    {0x1E33, 'k'},
    {0x1E34, 'K'},
    {0x1E35, 'k'},
    {0x1E36, 'L'},
    {0x1E37, 'l'},
    {0x1E38, 'L'},
    {0x1E39, 'l'},
    {0x1E3A, 'L'},
    {0x1E3B, 'l'},
    {0x1E3C, 'L'},
    {0x1E3D, 'l'},
    {0x1E3E, 'M'},
    {0x1E3F, 'm'},
    {0x1E40, 'M'},
    {0x1E41, 'm'},
    {0x1E42, 'M'},
    {0x1E43, 'm'},
    {0x1E44, 'N'},
    {0x1E45, 'n'},
    {0x1E46, 'N'},
    {0x1E47, 'n'},
    {0x1E48, 'N'},
    {0x1E49, 'n'},
    {0x1E4A, 'N'},
    {0x1E4B, 'n'},
    {0x1E4C, 'O'},
    {0x1E4D, 'o'},
    {0x1E4E, 'O'},
    {0x1E4F, 'o'},
    {0x1E50, 'O'},
    {0x1E51, 'o'},
    {0x1E52, 'O'},
    {0x1E53, 'o'},
    {0x1E54, 'P'},
    {0x1E55, 'p'},
    {0x1E56, 'P'},
    {0x1E57, 'p'},
    {0x1E58, 'R'},
    {0x1E59, 'r'},
    {0x1E5A, 'R'},
    {0x1E5B, 'r'},
    {0x1E5C, 'R'},
    {0x1E5D, 'r'},
    {0x1E5E, 'R'},
    {0x1E5F, 'r'},
    {0x1E60, 'S'},
    {0x1E61, 's'},
    {0x1E62, 'S'},
    {0x1E63, 's'},
    {0x1E64, 'S'},
    {0x1E65, 's'},
    {0x1E66, 'S'},
    {0x1E67, 's'},
    {0x1E68, 'S'},
    {0x1E69, 's'},
    {0x1E6A, 'T'},
    {0x1E6B, 't'},
    {0x1E6C, 'T'},
    {0x1E6D, 't'},
    {0x1E6E, 'T'},
    {0x1E6F, 't'},
    {0x1E70, 'T'},
    {0x1E71, 't'},
    {0x1E72, 'U'},
    {0x1E73, 'u'},
    {0x1E74, 'U'},
    {0x1E75, 'u'},
    {0x1E76, 'U'},
    {0x1E77, 'u'},
    {0x1E78, 'U'},
    {0x1E79, 'u'},
    {0x1E7A, 'U'},
    {0x1E7B, 'u'},
    {0x1E7C, 'V'},
    {0x1E7D, 'v'},
    {0x1E7E, 'V'},
    {0x1E7F, 'v'},
    {0x1E80, 'W'},
    {0x1E81, 'w'},
    {0x1E82, 'W'},
    {0x1E83, 'w'},
    {0x1E84, 'W'},
    {0x1E85, 'w'},
    {0x1E86, 'W'},
    {0x1E87, 'w'},
    {0x1E88, 'W'},
    {0x1E89, 'w'},
    {0x1E8A, 'X'},
    {0x1E8B, 'x'},
    {0x1E8C, 'X'},
    {0x1E8D, 'x'},
    {0x1E8E, 'Y'},
    {0x1E8F, 'y'},
    {0x1E90, 'Z'},
    {0x1E91, 'z'},
    {0x1E92, 'Z'},
    {0x1E93, 'z'},
    {0x1E94, 'Z'},
    {0x1E95, 'z'},
    {0x1E96, 'h'},
    {0x1E97, 't'},
    {0x1E98, 'w'},
    {0x1E99, 'y'},
    {0x1EA0, 'A'},
    {0x1EA1, 'a'},
    {0x1EA2, 'A'},
    {0x1EA3, 'a'},
    {0x1EA4, 'A'},
    {0x1EA5, 'a'},
    {0x1EA6, 'A'},
    {0x1EA7, 'a'},
    {0x1EA8, 'A'},
    {0x1EA9, 'a'},
    {0x1EAA, 'A'},
    {0x1EAB, 'a'},
    {0x1EAC, 'A'},
    {0x1EAD, 'a'},
    {0x1EAE, 'A'},
    {0x1EAF, 'a'},
    {0x1EB0, 'A'},
    {0x1EB1, 'a'},
    {0x1EB2, 'A'},
    {0x1EB3, 'a'},
    {0x1EB4, 'A'},
    {0x1EB5, 'a'},
    {0x1EB6, 'A'},
    {0x1EB7, 'a'},
    {0x1EB8, 'E'},
    {0x1EB9, 'e'},
    {0x1EBA, 'E'},
    {0x1EBB, 'e'},
    {0x1EBC, 'E'},
    {0x1EBD, 'e'},
    {0x1EBE, 'E'},
    {0x1EBF, 'e'},
    {0x1EC0, 'E'},
    {0x1EC1, 'e'},
    {0x1EC2, 'E'},
    {0x1EC3, 'e'},
    {0x1EC4, 'E'},
    {0x1EC5, 'e'},
    {0x1EC6, 'E'},
    {0x1EC7, 'e'},
    {0x1EC8, 'I'},
    {0x1EC9, 'i'},
    {0x1ECA, 'I'},
    {0x1ECB, 'i'},
    {0x1ECC, 'O'},
    {0x1ECD, 'o'},
    {0x1ECE, 'O'},
    {0x1ECF, 'o'},
    {0x1ED0, 'O'},
    {0x1ED1, 'o'},
    {0x1ED2, 'O'},
    {0x1ED3, 'o'},
    {0x1ED4, 'O'},
    {0x1ED5, 'o'},
    {0x1ED6, 'O'},
    {0x1ED7, 'o'},
    {0x1ED8, 'O'},
    {0x1ED9, 'o'},
    {0x1EDA, 'O'},
    {0x1EDB, 'o'},
    {0x1EDC, 'O'},
    {0x1EDD, 'o'},
    {0x1EDE, 'O'},
    {0x1EDF, 'o'},
    {0x1EE0, 'O'},
    {0x1EE1, 'o'},
    {0x1EE2, 'O'},
    {0x1EE3, 'o'},
    {0x1EE4, 'U'},
    {0x1EE5, 'u'},
    {0x1EE6, 'U'},
    {0x1EE7, 'u'},
    {0x1EE8, 'U'},
    {0x1EE9, 'u'},
    {0x1EEA, 'U'},
    {0x1EEB, 'u'},
    {0x1EEC, 'U'},
    {0x1EED, 'u'},
    {0x1EEE, 'U'},
    {0x1EEF, 'u'},
    {0x1EF0, 'U'},
    {0x1EF1, 'u'},
    {0x1EF2, 'Y'},
    {0x1EF3, 'y'},
    {0x1EF4, 'Y'},
    {0x1EF5, 'y'},
    {0x1EF6, 'Y'},
    {0x1EF7, 'y'},
    {0x1EF8, 'Y'},
    {0x1EF9, 'y'},
    {0x212B, 'A'},
    {0x2260, '='},
    {0x226E, '<'},
    {0x226F, '>'},
};

struct MarkRange { std::uint32_t lo; std::uint32_t hi; };

inline constexpr MarkRange kCombiningMarks[] = {
    {0x0300, 0x036F},
    {0x0483, 0x0487},
    {0x0591, 0x05BD},
    {0x05BF, 0x05BF},
    {0x05C1, 0x05C2},
    {0x05C4, 0x05C5},
    {0x05C7, 0x05C7},
    {0x0610, 0x061A},
    {0x064B, 0x065F},
    {0x0670, 0x0670},
    {0x06D6, 0x06DC},
    {0x06DF, 0x06E4},
    {0x06E7, 0x06E8},
    {0x06EA, 0x06ED},
    {0x0711, 0x0711},
    {0x0730, 0x074A},
    {0x07A6, 0x07B0},
    {0x07EB, 0x07F3},
    {0x07FD, 0x07FD},
    {0x0816, 0x0819},
    {0x081B, 0x0823},
    {0x0825, 0x0827},
    {0x0829, 0x082D},
    {0x0859, 0x085B},
    {0x08D3, 0x08E1},
    {0x08E3, 0x0902},
    {0x093A, 0x093A},
    {0x093C, 0x093C},
    {0x0941, 0x0948},
    {0x094D, 0x094D},
    {0x0951, 0x0957},
    {0x0962, 0x0963},
    {0x0981, 0x0981},
    {0x09BC, 0x09BC},
    {0x09C1, 0x09C4},
    {0x09CD, 0x09CD},
    {0x09E2, 0x09E3},
    {0x09FE, 0x09FE},
    {0x0A01, 0x0A02},
    {0x0A3C, 0x0A3C},
    {0x0A41, 0x0A42},
    {0x0A47, 0x0A48},
    {0x0A4B, 0x0A4D},
    {0x0A51, 0x0A51},
    {0x0A70, 0x0A71},
    {0x0A75, 0x0A75},
    {0x0A81, 0x0A82},
    {0x0ABC, 0x0ABC},
    {0x0AC1, 0x0AC5},
    {0x0AC7, 0x0AC8},
    {0x0ACD, 0x0ACD},
    {0x0AE2, 0x0AE3},
    {0x0AFA, 0x0AFF},
    {0x0B01, 0x0B01},
    {0x0B3C, 0x0B3C},
    {0x0B3F, 0x0B3F},
    {0x0B41, 0x0B44},
    {0x0B4D, 0x0B4D},
    {0x0B55, 0x0B56},
    {0x0B62, 0x0B63},
    {0x0B82, 0x0B82},
    {0x0BC0, 0x0BC0},
    {0x0BCD, 0x0BCD},
    {0x0C00, 0x0C00},
    {0x0C04, 0x0C04},
    {0x0C3E, 0x0C40},
    {0x0C46, 0x0C48},
    {0x0C4A, 0x0C4D},
    {0x0C55, 0x0C56},
    {0x0C62, 0x0C63},
    {0x0C81, 0x0C81},
    {0x0CBC, 0x0CBC},
    {0x0CBF, 0x0CBF},
    {0x0CC6, 0x0CC6},
    {0x0CCC, 0x0CCD},
    {0x0CE2, 0x0CE3},
    {0x0D00, 0x0D01},
    {0x0D3B, 0x0D3C},
    {0x0D41, 0x0D44},
    {0x0D4D, 0x0D4D},
    {0x0D62, 0x0D63},
    {0x0D81, 0x0D81},
    {0x0DCA, 0x0DCA},
    {0x0DD2, 0x0DD4},
    {0x0DD6, 0x0DD6},
    {0x0E31, 0x0E31},
    {0x0E34, 0x0E3A},
    {0x0E47, 0x0E4E},
    {0x0EB1, 0x0EB1},
    {0x0EB4, 0x0EBC},
    {0x0EC8, 0x0ECD},
    {0x0F18, 0x0F19},
    {0x0F35, 0x0F35},
    {0x0F37, 0x0F37},
    {0x0F39, 0x0F39},
    {0x0F71, 0x0F7E},
    {0x0F80, 0x0F84},
    {0x0F86, 0x0F87},
    {0x0F8D, 0x0F97},
    {0x0F99, 0x0FBC},
    {0x0FC6, 0x0FC6},
    {0x102D, 0x1030},
    {0x1032, 0x1037},
    {0x1039, 0x103A},
    {0x103D, 0x103E},
    {0x1058, 0x1059},
    {0x105E, 0x1060},
    {0x1071, 0x1074},
    {0x1082, 0x1082},
    {0x1085, 0x1086},
    {0x108D, 0x108D},
    {0x109D, 0x109D},
    {0x135D, 0x135F},
    {0x1712, 0x1714},
    {0x1732, 0x1734},
    {0x1752, 0x1753},
    {0x1772, 0x1773},
    {0x17B4, 0x17B5},
    {0x17B7, 0x17BD},
    {0x17C6, 0x17C6},
    {0x17C9, 0x17D3},
    {0x17DD, 0x17DD},
    {0x180B, 0x180D},
    {0x1885, 0x1886},
    {0x18A9, 0x18A9},
    {0x1920, 0x1922},
    {0x1927, 0x1928},
    {0x1932, 0x1932},
    {0x1939, 0x193B},
    {0x1A17, 0x1A18},
    {0x1A1B, 0x1A1B},
    {0x1A56, 0x1A56},
    {0x1A58, 0x1A5E},
    {0x1A60, 0x1A60},
    {0x1A62, 0x1A62},
    {0x1A65, 0x1A6C},
    {0x1A73, 0x1A7C},
    {0x1A7F, 0x1A7F},
    {0x1AB0, 0x1ABD},
    {0x1ABF, 0x1AC0},
    {0x1B00, 0x1B03},
    {0x1B34, 0x1B34},
    {0x1B36, 0x1B3A},
    {0x1B3C, 0x1B3C},
    {0x1B42, 0x1B42},
    {0x1B6B, 0x1B73},
    {0x1B80, 0x1B81},
    {0x1BA2, 0x1BA5},
    {0x1BA8, 0x1BA9},
    {0x1BAB, 0x1BAD},
    {0x1BE6, 0x1BE6},
    {0x1BE8, 0x1BE9},
    {0x1BED, 0x1BED},
    {0x1BEF, 0x1BF1},
    {0x1C2C, 0x1C33},
    {0x1C36, 0x1C37},
    {0x1CD0, 0x1CD2},
    {0x1CD4, 0x1CE0},
    {0x1CE2, 0x1CE8},
    {0x1CED, 0x1CED},
    {0x1CF4, 0x1CF4},
    {0x1CF8, 0x1CF9},
    {0x1DC0, 0x1DF9},
    {0x1DFB, 0x1DFF},
    {0x20D0, 0x20DC},
    {0x20E1, 0x20E1},
    {0x20E5, 0x20F0},
    {0x2CEF, 0x2CF1},
    {0x2D7F, 0x2D7F},
    {0x2DE0, 0x2DFF},
};

}  // namespace ncdkit::unicode
