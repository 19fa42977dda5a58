#include "pulsecut/annotations.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "pulsecut/error.hpp"

namespace pulsecut {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

AnnotationSet parse_annotations_text(const std::string& text, int fallback_rate,
                                     const std::string& origin) {
  AnnotationSet set;
  set.sample_rate = fallback_rate;

  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = strip(line.substr(1));
      if (body.rfind("rate=", 0) == 0) {
        int rate = 0;
        const char* first = body.data() + 5;
        const char* last = body.data() + body.size();
        auto [p, ec] = std::from_chars(first, last, rate);
        if (ec != std::errc() || p != last || rate <= 0)
          throw FormatError(origin + ":" + std::to_string(lineno) + ": bad rate comment");
        set.sample_rate = rate;
      }
      continue;
    }
    if (!header_seen) {
      if (line != "sample,label")
        throw FormatError(origin + ":" + std::to_string(lineno) +
                          ": expected header 'sample,label', got '" + line + "'");
      header_seen = true;
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw FormatError(origin + ":" + std::to_string(lineno) + ": missing comma");
    const std::string pos_str = strip(line.substr(0, comma));
    const std::string label_str = strip(line.substr(comma + 1));

    std::int64_t pos = 0;
    const char* first = pos_str.data();
    const char* last = pos_str.data() + pos_str.size();
    auto [p, ec] = std::from_chars(first, last, pos);
    if (ec != std::errc() || p != last || pos_str.empty())
      throw FormatError(origin + ":" + std::to_string(lineno) + ": non-numeric position '" +
                        pos_str + "'");
    BeatLabel label;
    if (label_str == "S1") {
      label = BeatLabel::S1;
    } else if (label_str == "S2") {
      label = BeatLabel::S2;
    } else {
      throw FormatError(origin + ":" + std::to_string(lineno) + ": unknown label '" + label_str +
                        "'");
    }
    if (!set.beats.empty() && pos <= set.beats.back().position)
      throw OrderError(origin + ":" + std::to_string(lineno) +
                       ": positions must be strictly increasing");
    set.beats.push_back({pos, label});
  }
  if (!header_seen) throw FormatError(origin + ": missing 'sample,label' header");

  for (std::size_t i = 1; i < set.beats.size(); ++i) {
    if (set.beats[i].label == set.beats[i - 1].label) {
      set.alternating = false;
      break;
    }
  }
  return set;
}

AnnotationSet parse_annotations(const std::string& path, int fallback_rate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open annotation file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_annotations_text(buf.str(), fallback_rate, path);
}

std::string format_annotations(const AnnotationSet& set) {
  std::ostringstream out;
  out << "# rate=" << set.sample_rate << "\n";
  out << "sample,label\n";
  for (const Beat& b : set.beats) out << b.position << "," << to_string(b.label) << "\n";
  return out.str();
}

void write_annotations(const std::string& path, const AnnotationSet& set) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for write: " + path);
  const std::string text = format_annotations(set);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failure: " + path);
}

}  // namespace pulsecut
