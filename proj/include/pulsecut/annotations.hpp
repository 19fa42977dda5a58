#pragma once

#include <string>

#include "pulsecut/types.hpp"

namespace pulsecut {

// Beat annotation CSV. Layout:
//
//   # rate=4096
//   sample,label
//   1203,S1
//   2431,S2
//
// Positions are 0-based sample indices at the rate given in the comment
// line. This is both the ground-truth format and the segmenter output.
AnnotationSet parse_annotations(const std::string& path, int fallback_rate = 0);
void write_annotations(const std::string& path, const AnnotationSet& set);

// Parses from an in-memory string (used by the file loader and tests).
AnnotationSet parse_annotations_text(const std::string& text, int fallback_rate,
                                     const std::string& origin);
std::string format_annotations(const AnnotationSet& set);

}  // namespace pulsecut
