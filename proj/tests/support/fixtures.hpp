#pragma once

// Hand-built corpora reproducing the worked examples of the error taxonomy
// and of the annotator-inconsistency patterns.

namespace fixtures {

// One sentence per error type:
//   0 no extraction, 1 no annotation, 2 wrong range, 3 wrong tag,
//   4 wrong range and tag
inline constexpr const char* kTaxonomyGold =
    "Việt_Nam B-LOC\n"
    "\n"
    "Châu O\n"
    "Âu O\n"
    "\n"
    "Ca_sĩ O\n"
    "Nguyễn B-PER\n"
    "Văn I-PER\n"
    "A I-PER\n"
    "\n"
    "Khám O\n"
    "phá O\n"
    "Yangsuri B-LOC\n"
    "\n"
    "gian_hàng O\n"
    "Apple B-ORG\n";

inline constexpr const char* kTaxonomyPred =
    "Việt_Nam O\n"
    "\n"
    "Châu B-PER\n"
    "Âu I-PER\n"
    "\n"
    "Ca_sĩ B-PER\n"
    "Nguyễn I-PER\n"
    "Văn I-PER\n"
    "A I-PER\n"
    "\n"
    "Khám O\n"
    "phá O\n"
    "Yangsuri B-PER\n"
    "\n"
    "gian_hàng B-LOC\n"
    "Apple I-LOC\n";

// The four inconsistency patterns between a train and a test split.
inline constexpr const char* kLintTrain =
    "Giám_đốc O\n"
    "Sở B-ORG\n"
    "Y_tế I-ORG\n"
    "\n"
    "người O\n"
    "Việt B-MISC\n"
    "\n"
    "làng B-LOC\n"
    "Atâu I-LOC\n"
    "\n"
    "Công_ty B-ORG\n"
    "Inmasco I-ORG\n"
    "\n"
    "công_ty O\n"
    "con O\n";

inline constexpr const char* kLintTest =
    "Sở O\n"
    "Y_tế O\n"
    "\n"
    "dân O\n"
    "Việt B-LOC\n"
    "\n"
    "làng O\n"
    "Hàn_Quốc B-LOC\n"
    "\n"
    "công_ty O\n"
    "Yeon B-ORG\n"
    "Young I-ORG\n"
    "Entertainment I-ORG\n";

}  // namespace fixtures
