#pragma once

#include <array>
#include <cstddef>
#include <string_view>

// Published reference values used by `tables` to diff fresh computations.

namespace dnacodes::published {

struct BoundRow {
  std::size_t n;
  std::size_t ell;
  /// Entry for d_H = 1..10; -1 where no value is listed.
  std::array<int, 10> size;
};

inline constexpr std::array<BoundRow, 25> kBoundTable{{
    {2, 1, {8, 4, -1, -1, -1, -1, -1, -1, -1, -1}},
    {3, 1, {16, 6, 2, -1, -1, -1, -1, -1, -1, -1}},
    {4, 2, {48, 32, 12, 4, -1, -1, -1, -1, -1, -1}},
    {4, 1, {56, 32, 12, 4, -1, -1, -1, -1, -1, -1}},
    {5, 2, {108, 48, 14, 4, 2, -1, -1, -1, -1, -1}},
    {5, 1, {128, 52, 14, 4, 2, -1, -1, -1, -1, -1}},
    {6, 3, {320, 88, 32, 20, 0, 4, -1, -1, -1, -1}},
    {6, 2, {320, 88, 32, 20, 0, 4, -1, -1, -1, -1}},
    {6, 1, {424, 100, 32, 20, 0, 4, -1, -1, -1, -1}},
    {7, 3, {704, 136, 48, 28, 10, 4, 2, -1, -1, -1}},
    {7, 2, {740, 142, 50, 28, 10, 4, 2, -1, -1, -1}},
    {7, 1, {1040, 146, 50, 28, 10, 4, 2, -1, -1, -1}},
    {8, 4, {2024, 236, 76, 48, 20, 12, 0, 4, -1, -1}},
    {8, 3, {2064, 238, 86, 48, 20, 12, 0, 4, -1, -1}},
    {8, 2, {2192, 248, 88, 48, 20, 12, 0, 4, -1, -1}},
    {8, 1, {3352, 252, 92, 48, 20, 12, 0, 4, -1, -1}},
    {9, 4, {4568, 336, 112, 60, 24, 16, 6, 4, 2, -1}},
    {9, 3, {4660, 344, 116, 60, 24, 16, 6, 4, 2, -1}},
    {9, 2, {5144, 346, 116, 60, 24, 16, 6, 4, 2, -1}},
    {9, 1, {8576, 386, 120, 64, 28, 16, 6, 4, 2, -1}},
    {10, 5, {13008, 564, 184, 92, 48, 28, 16, 8, 0, 4}},
    {10, 4, {13008, 564, 184, 92, 48, 28, 16, 8, 0, 4}},
    {10, 3, {13424, 568, 192, 92, 48, 28, 16, 8, 0, 4}},
    {10, 2, {15104, 596, 196, 100, 48, 28, 16, 8, 0, 4}},
    {10, 1, {27208, 660, 208, 104, 48, 28, 16, 8, 0, 4}},
}};

struct PairRow {
  std::string_view x;
  std::string_view y;
};

inline constexpr std::array<PairRow, 8> kPairsEll3{{
    {"ATA", "CGC"}, {"ATA", "GCG"}, {"CGC", "ATA"}, {"CGC", "TAT"}, {"GCG", "ATA"}, {"GCG", "TAT"},
    {"TAT", "CGC"}, {"TAT", "GCG"},
}};

inline constexpr std::array<PairRow, 32> kPairsEll4{{
    {"ACTA", "CAGC"}, {"ACTG", "TAGC"}, {"AGTA", "GACG"}, {"AGTC", "TACG"}, {"ATCA", "CGAC"},
    {"ATCG", "TGAC"}, {"ATGA", "GCAG"}, {"ATGC", "TCAG"}, {"CAGC", "ACTA"}, {"CAGT", "GCTA"},
    {"CGAC", "ATCA"}, {"CGAT", "GTCA"}, {"CGTA", "GACT"}, {"CGTC", "TACT"}, {"CTGA", "GCAT"},
    {"CTGC", "TCAT"}, {"GACG", "AGTA"}, {"GACT", "CGTA"}, {"GCAG", "ATGA"}, {"GCAT", "CTGA"},
    {"GCTA", "CAGT"}, {"GCTG", "TAGT"}, {"GTCA", "CGAT"}, {"GTCG", "TGAT"}, {"TACG", "AGTC"},
    {"TACT", "CGTC"}, {"TAGC", "ACTG"}, {"TAGT", "GCTG"}, {"TCAG", "ATGC"}, {"TCAT", "CTGC"},
    {"TGAC", "ATCG"}, {"TGAT", "GTCG"},
}};

inline constexpr std::array<PairRow, 112> kPairsEll5{{
    {"ACGCA", "CTATC"}, {"ACGCA", "GATAG"}, {"ACGTC", "TACAG"}, {"ACTAG", "TGAGC"}, {"ACTCG", "TAGTC"},
    {"ACTCG", "TGATC"}, {"AGCGA", "CATAC"}, {"AGCGA", "GTATG"}, {"AGCTG", "TAGAC"}, {"AGTAC", "TCACG"},
    {"AGTGC", "TACTG"}, {"AGTGC", "TCATG"}, {"ATCTA", "CAGCG"}, {"ATCTA", "CGAGC"}, {"ATCTA", "CGTGC"},
    {"ATCTA", "GCACG"}, {"ATCTA", "GCGAC"}, {"ATCTA", "GCTCG"}, {"ATCTG", "TCAGC"}, {"ATCTG", "TCGAC"},
    {"ATGTA", "CGAGC"}, {"ATGTA", "CGCAG"}, {"ATGTA", "CGTGC"}, {"ATGTA", "GACGC"}, {"ATGTA", "GCACG"},
    {"ATGTA", "GCTCG"}, {"ATGTC", "TGACG"}, {"ATGTC", "TGCAG"}, {"CAGAT", "GCTGA"}, {"CAGAT", "GTCGA"},
    {"CAGCT", "GTCTA"}, {"CATAC", "AGCGA"}, {"CATAC", "TCGCT"}, {"CATGA", "GCACT"}, {"CGAGC", "ACTAT"},
    {"CGAGC", "ATCTA"}, {"CGAGC", "ATGTA"}, {"CGAGC", "TACAT"}, {"CGAGC", "TAGAT"}, {"CGAGC", "TATCA"},
    {"CGAGT", "GACTA"}, {"CGAGT", "GATCA"}, {"CGTGA", "GTACT"}, {"CGTGA", "GTCAT"}, {"CGTGC", "ATACT"},
    {"CGTGC", "ATCTA"}, {"CGTGC", "ATGTA"}, {"CGTGC", "TACAT"}, {"CGTGC", "TAGAT"}, {"CGTGC", "TCATA"},
    {"CTAGT", "GCTCA"}, {"CTATC", "ACGCA"}, {"CTATC", "TGCGT"}, {"CTGCA", "GACAT"}, {"CTGTA", "GACGT"},
    {"CTGTA", "GCAGT"}, {"GACAT", "CGTCA"}, {"GACAT", "CTGCA"}, {"GACGT", "CTGTA"}, {"GATAG", "ACGCA"},
    {"GATAG", "TGCGT"}, {"GATCA", "CGAGT"}, {"GCACG", "AGTAT"}, {"GCACG", "ATCTA"}, {"GCACG", "ATGTA"},
    {"GCACG", "TACAT"}, {"GCACG", "TAGAT"}, {"GCACG", "TATGA"}, {"GCACT", "CAGTA"}, {"GCACT", "CATGA"},
    {"GCTCA", "CTAGT"}, {"GCTCA", "CTGAT"}, {"GCTCG", "ATAGT"}, {"GCTCG", "ATCTA"}, {"GCTCG", "ATGTA"},
    {"GCTCG", "TACAT"}, {"GCTCG", "TAGAT"}, {"GCTCG", "TGATA"}, {"GTACT", "CGTGA"}, {"GTATG", "AGCGA"},
    {"GTATG", "TCGCT"}, {"GTCGA", "CAGAT"}, {"GTCTA", "CAGCT"}, {"GTCTA", "CGACT"}, {"TACAG", "ACGTC"},
    {"TACAG", "ACTGC"}, {"TACAT", "CGAGC"}, {"TACAT", "CGTGC"}, {"TACAT", "CTGCG"}, {"TACAT", "GCACG"},
    {"TACAT", "GCGTC"}, {"TACAT", "GCTCG"}, {"TAGAC", "AGCTG"}, {"TAGAC", "AGTCG"}, {"TAGAT", "CGAGC"},
    {"TAGAT", "CGCTG"}, {"TAGAT", "CGTGC"}, {"TAGAT", "GCACG"}, {"TAGAT", "GCTCG"}, {"TAGAT", "GTCGC"},
    {"TCACG", "AGTAC"}, {"TCACG", "ATGAC"}, {"TCATG", "AGTGC"}, {"TCGAC", "ATCTG"}, {"TCGCT", "CATAC"},
    {"TCGCT", "GTATG"}, {"TGAGC", "ACTAG"}, {"TGAGC", "ATCAG"}, {"TGATC", "ACTCG"}, {"TGCAG", "ATGTC"},
    {"TGCGT", "CTATC"}, {"TGCGT", "GATAG"},
}};

}  // namespace dnacodes::published
