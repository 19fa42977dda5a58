#include "pulsecut/wav.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "pulsecut/error.hpp"

namespace pulsecut {

namespace {

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 16) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 24) & 0xff));
}

void put_u16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
}

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;

}  // namespace

PcgSignal load_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open WAV file: " + path);
  std::vector<unsigned char> raw((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failure: " + path);

  if (raw.size() < 12 || std::memcmp(raw.data(), "RIFF", 4) != 0 ||
      std::memcmp(raw.data() + 8, "WAVE", 4) != 0) {
    throw FormatError("not a RIFF/WAVE file: " + path);
  }

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* data = nullptr;
  std::uint32_t data_len = 0;
  bool have_fmt = false;

  std::size_t pos = 12;
  while (pos + 8 <= raw.size()) {
    const unsigned char* hdr = raw.data() + pos;
    std::uint32_t chunk_len = read_u32(hdr + 4);
    const unsigned char* body = hdr + 8;
    if (pos + 8 + chunk_len > raw.size()) {
      // Tolerate a final data chunk whose declared size overruns the file.
      chunk_len = static_cast<std::uint32_t>(raw.size() - pos - 8);
    }
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_len < 16) throw FormatError("truncated fmt chunk: " + path);
      format = read_u16(body);
      channels = read_u16(body + 2);
      rate = read_u32(body + 4);
      bits = read_u16(body + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data = body;
      data_len = chunk_len;
    }
    pos += 8 + chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }

  if (!have_fmt) throw FormatError("missing fmt chunk: " + path);
  if (format != kFormatPcm && format != kFormatFloat)
    throw FormatError("unsupported WAV format tag " + std::to_string(format) + ": " + path);
  if (channels != 1)
    throw FormatError("expected mono, got " + std::to_string(channels) + " channels: " + path);
  if (rate == 0) throw FormatError("zero sample rate: " + path);
  if (data == nullptr || data_len == 0) throw FormatError("empty data chunk: " + path);

  PcgSignal sig;
  sig.sample_rate = static_cast<int>(rate);
  sig.source_id = path;

  if (format == kFormatFloat) {
    if (bits != 32) throw FormatError("float WAV must be 32-bit: " + path);
    const std::size_t n = data_len / 4;
    sig.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      float v;
      std::memcpy(&v, data + 4 * i, 4);
      sig.samples[i] = static_cast<double>(v);
    }
  } else if (bits == 16) {
    const std::size_t n = data_len / 2;
    sig.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::int16_t v;
      std::memcpy(&v, data + 2 * i, 2);
      sig.samples[i] = static_cast<double>(v) / 32768.0;
    }
  } else if (bits == 24) {
    const std::size_t n = data_len / 3;
    sig.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned char* p = data + 3 * i;
      std::int32_t v = static_cast<std::int32_t>(
          (static_cast<std::uint32_t>(p[0]) << 8) | (static_cast<std::uint32_t>(p[1]) << 16) |
          (static_cast<std::uint32_t>(p[2]) << 24));
      v >>= 8;  // sign-extend from 24 bits
      sig.samples[i] = static_cast<double>(v) / 8388608.0;
    }
  } else if (bits == 32) {
    const std::size_t n = data_len / 4;
    sig.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::int32_t v;
      std::memcpy(&v, data + 4 * i, 4);
      sig.samples[i] = static_cast<double>(v) / 2147483648.0;
    }
  } else {
    throw FormatError("unsupported PCM bit depth " + std::to_string(bits) + ": " + path);
  }

  if (sig.samples.empty()) throw FormatError("zero-length audio: " + path);
  return sig;
}

void save_wav(const std::string& path, const PcgSignal& sig) {
  if (sig.sample_rate <= 0) throw ParamError("save_wav: sample_rate must be positive");
  const std::uint32_t n = static_cast<std::uint32_t>(sig.samples.size());
  const std::uint32_t data_bytes = n * 4;

  std::vector<unsigned char> out;
  out.reserve(58 + data_bytes);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  put_u32(out, 4 + 26 + 12 + 8 + data_bytes);
  out.insert(out.end(), {'W', 'A', 'V', 'E'});

  out.insert(out.end(), {'f', 'm', 't', ' '});
  put_u32(out, 18);
  put_u16(out, kFormatFloat);
  put_u16(out, 1);  // channels
  put_u32(out, static_cast<std::uint32_t>(sig.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(sig.sample_rate) * 4);
  put_u16(out, 4);   // block align
  put_u16(out, 32);  // bits per sample
  put_u16(out, 0);   // cbSize

  // fact chunk is mandatory for non-PCM formats.
  out.insert(out.end(), {'f', 'a', 'c', 't'});
  put_u32(out, 4);
  put_u32(out, n);

  out.insert(out.end(), {'d', 'a', 't', 'a'});
  put_u32(out, data_bytes);
  for (double s : sig.samples) {
    float v = static_cast<float>(s);
    unsigned char b[4];
    std::memcpy(b, &v, 4);
    out.insert(out.end(), b, b + 4);
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for write: " + path);
  f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("write failure: " + path);
}

}  // namespace pulsecut
