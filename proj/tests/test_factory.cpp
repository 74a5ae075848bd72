#include <gtest/gtest.h>

#include "dnacodes/factory.hpp"
#include "dnacodes/io.hpp"

using namespace dnacodes;

namespace {

const BlockPair kAtaCgc = BlockPair::parse("ATA", "CGC");

bool check_passes(const DnaCodeBuildReport& r, const std::string& name) {
  const auto* c = r.find(name);
  return c != nullptr && c->pass;
}

}  // namespace

TEST(DefaultPair, FirstTabulatedPair) {
  EXPECT_EQ(default_pair(3), kAtaCgc);
  EXPECT_THROW(default_pair(2), std::invalid_argument);
  for (std::size_t ell : {1, 3, 4, 5}) {
    const auto p = default_pair(ell);
    EXPECT_EQ(p, enumerate_valid_pairs(ell).front());
    EXPECT_TRUE(validate_pair(p).fully_valid);
  }
}

TEST(BuildDnaCode, HammingWithPublishedPairDistance) {
  for (auto h0 : {BlockRole::X, BlockRole::Xc}) {
    const auto b = build_dna_code(hamming_7_4(), kAtaCgc, h0);
    EXPECT_EQ(b.code.size(), 16u);
    EXPECT_EQ(b.code.length(), 21u);
    EXPECT_EQ(b.report.measured.min_hamming, 6u);
    EXPECT_EQ(b.report.predicted_distance, 6u);
    EXPECT_TRUE(b.report.pass());
    EXPECT_GE(b.report.measured.conflict_free_level, 5u);
  }
}

TEST(BuildDnaCode, RepetitionCode) {
  const auto b = build_dna_code(repetition_code(5), kAtaCgc);
  EXPECT_EQ(b.code.size(), 2u);
  EXPECT_EQ(b.report.measured.min_hamming, 9u);
  EXPECT_TRUE(b.report.pass());
}

TEST(BuildDnaCode, FullSpaceOfLengthOne) {
  const auto c = BinaryCode::from_words({parse_binary("0"), parse_binary("1")});
  const auto b = build_dna_code(c, kAtaCgc);
  ASSERT_EQ(b.code.size(), 2u);
  EXPECT_EQ(b.code.words()[0].str(), "ATA");
  EXPECT_EQ(b.code.words()[1].str(), "TAT");
  EXPECT_TRUE(b.report.find("complement_e1") != nullptr);
  EXPECT_TRUE(check_passes(b.report, "complement_e1"));
}

TEST(BuildDnaCode, MeasuredDistanceEqualsBinaryDistanceForAllValidPairs) {
  for (const auto& pair : enumerate_valid_pairs(3)) {
    for (auto h0 : {BlockRole::X, BlockRole::Xc, BlockRole::Y, BlockRole::Yc}) {
      for (const auto& code : {hamming_7_4(), repetition_code(5), reed_muller_code(1, 3), reed_muller_code(1, 2)}) {
        const auto b = build_dna_code(code, pair, h0, std::nullopt, 2);
        const auto words = enumerate_codewords(code);
        EXPECT_EQ(b.report.measured.min_hamming, min_binary_distance(words, 3));
        EXPECT_TRUE(b.report.pass()) << code.name() << " " << pair.x() << pair.y() << " " << role_name(h0);
        // Gating checks agree with an independent re-measurement.
        const auto again = verify_code(b.code, b.report.predicted_distance, 1);
        EXPECT_EQ(again.min_hamming, b.report.measured.min_hamming);
        EXPECT_EQ(again.conflict_free_level, b.report.measured.conflict_free_level);
      }
    }
  }
}

TEST(BuildDnaCode, RefusesUnsupportedClaims) {
  BuildClaims claims;
  claims.hairpin = true;
  try {
    build_dna_code(hamming_7_4(), kAtaCgc, BlockRole::X, claims);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("hairpin_safe"), std::string::npos);
  }
  BuildClaims rev;
  rev.reverse = true;
  EXPECT_THROW(build_dna_code(hamming_7_4(), BlockPair::parse("ATCA", "CGAC"), BlockRole::X, rev), std::invalid_argument);
  BuildClaims conflict;
  conflict.conflict = true;
  EXPECT_THROW(build_dna_code(hamming_7_4(), BlockPair::parse("ACT", "CTG"), BlockRole::X, conflict), std::invalid_argument);
}

TEST(BuildDnaCode, UnclaimedHairpinIsRecordedNotGating) {
  const auto b = build_dna_code(hamming_7_4(), kAtaCgc);
  const auto* h = b.report.find("hairpin_free");
  ASSERT_NE(h, nullptr);
  EXPECT_FALSE(h->gating);
  EXPECT_FALSE(h->pass);
  EXPECT_FALSE(b.report.measured.hairpin_free);
}

// Small distance alone does not give the complement constraint: the Hamming
// build has d = 6 <= 21/2 yet a word sits at distance < 6 from a complement.
TEST(BuildDnaCode, ComplementFromSmallDistanceFails) {
  const auto b = build_dna_code(hamming_7_4(), kAtaCgc);
  const auto* c = b.report.find("complement_small_distance");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->gating);
  EXPECT_FALSE(c->pass);
  EXPECT_LT(b.report.measured.min_complement, 6u);
}

TEST(BuildDnaCode, GcHalfLengthNeedsBalancedX) {
  // n = 7 odd and gc(ATA) = 0 != 1: the floor form does not apply.
  const auto odd = build_dna_code(hamming_7_4(), kAtaCgc);
  const auto* g = odd.report.find("gc_half_length");
  ASSERT_NE(g, nullptr);
  EXPECT_FALSE(g->gating);
  EXPECT_EQ(odd.report.measured.gc_constant, std::optional<std::size_t>(9));
  // n = 8 even: gating and satisfied.
  const auto even = build_dna_code(reed_muller_code(1, 3), kAtaCgc);
  EXPECT_TRUE(even.report.find("gc_half_length")->gating);
  EXPECT_TRUE(check_passes(even.report, "gc_half_length"));
}

TEST(BuildDnaCode, RespectsCodewordLimit) {
  EXPECT_THROW(build_dna_code(golay_23_12(), kAtaCgc, BlockRole::X, std::nullopt, 1, 100), RefusedError);
}

TEST(BuildDnaCode, WorkerCountDoesNotChangeResult) {
  const auto a = build_dna_code(reed_muller_code(2, 4), kAtaCgc, BlockRole::X, std::nullopt, 1);
  const auto b = build_dna_code(reed_muller_code(2, 4), kAtaCgc, BlockRole::X, std::nullopt, 4);
  EXPECT_EQ(a.code.words(), b.code.words());
  EXPECT_EQ(a.report.measured.min_hamming, b.report.measured.min_hamming);
}

TEST(ReedMullerDna, OneThree) {
  const auto b = reed_muller_dna(1, 3, kAtaCgc);
  const auto& m = b.report.measured;
  EXPECT_EQ(m.length, 24u);
  EXPECT_EQ(m.size, 16u);
  EXPECT_EQ(m.min_hamming, 6u);
  EXPECT_EQ(m.gc_constant, std::optional<std::size_t>(12));
  EXPECT_GE(m.conflict_free_level, 5u);
  EXPECT_TRUE(m.reverse_ok);
  EXPECT_TRUE(m.reverse_complement_ok);
  EXPECT_TRUE(b.report.pass());
  for (const char* name : {"rm_length", "rm_dimension", "rm_size", "rm_distance", "rm_gc_content"}) {
    EXPECT_TRUE(check_passes(b.report, name)) << name;
  }
  // The size formulas that start the sum at i = 1 or use r*C(m, r) give 2^3,
  // not the 2^4 codewords R(1,3) has; recorded, not gating.
  EXPECT_FALSE(check_passes(b.report, "rm_size_sum_from_one"));
  EXPECT_FALSE(check_passes(b.report, "rm_size_theorem_exponent"));
  EXPECT_FALSE(b.report.find("rm_size_sum_from_one")->gating);
}

// Every fully valid ell = 3 pair fails the hairpin condition, so no valid
// pair delivers rc-substring-free Reed-Muller codewords.
TEST(ReedMullerDna, NoValidPairIsHairpinFree) {
  for (const auto& pair : enumerate_valid_pairs(3)) {
    const auto b = reed_muller_dna(1, 3, pair);
    EXPECT_FALSE(b.report.measured.hairpin_free) << pair.x() << pair.y();
    EXPECT_FALSE(b.report.find("rm_reverse_complement")->gating);
  }
}

TEST(ReedMullerDna, Refusals) {
  EXPECT_THROW(reed_muller_dna(3, 3, kAtaCgc), std::invalid_argument);
  EXPECT_THROW(reed_muller_dna(1, 5, kAtaCgc), RefusedError);
  const auto b = reed_muller_dna(0, 2, kAtaCgc);
  EXPECT_EQ(b.code.size(), 2u);
  EXPECT_EQ(b.report.measured.min_hamming, 6u);
}

TEST(GolayDna, SampledAndExhaustiveDistance) {
  const auto b = build_dna_code(golay_23_12(), kAtaCgc);
  EXPECT_EQ(b.code.size(), 4096u);
  EXPECT_EQ(b.report.measured.min_hamming, 12u);
  EXPECT_EQ(b.report.predicted_distance, 12u);
}

// The published Hamming DNA listing uses blocks ATA, TAT, CGC, GCG but no
// (pair, initializer) choice of the encoder reproduces it.
TEST(PublishedHammingDna, MeasuredPropertiesOnly) {
  const auto rows = io::read_pairs(std::string(DNACODES_FIXTURES) + "/hamming74_published_dna.tsv");
  ASSERT_EQ(rows.size(), 16u);
  std::vector<DnaString> ws;
  for (const auto& [bin, dna] : rows) ws.push_back(DnaString::parse(dna));
  const auto r = verify_code(ws);
  EXPECT_EQ(r.min_hamming, 6u);
  EXPECT_EQ(r.conflict_free_level, 5u);
  std::size_t matches = 0;
  for (const auto& pair : {kAtaCgc, BlockPair::parse("CGC", "ATA")}) {
    for (auto h0 : {BlockRole::X, BlockRole::Xc, BlockRole::Y, BlockRole::Yc}) {
      for (const auto& [bin, dna] : rows) matches += encode(parse_binary(bin), TransitionMap{pair, h0}).str() == dna;
    }
  }
  EXPECT_EQ(matches, 0u);
}
