// Copyright 2026 The uxrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uxrank/core/image.hpp"

#include <cstdint>

namespace uxrank {
namespace {

std::uint32_t be32(std::string_view b, std::size_t at) {
  auto u = [&](std::size_t i) { return static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + i])); };
  return (u(0) << 24) | (u(1) << 16) | (u(2) << 8) | u(3);
}

std::uint32_t be16(std::string_view b, std::size_t at) {
  auto u = [&](std::size_t i) { return static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + i])); };
  return (u(0) << 8) | u(1);
}

std::uint32_t le16(std::string_view b, std::size_t at) {
  auto u = [&](std::size_t i) { return static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + i])); };
  return u(0) | (u(1) << 8);
}

std::uint32_t le24(std::string_view b, std::size_t at) {
  return le16(b, at) | (static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 2])) << 16);
}

std::uint32_t le32(std::string_view b, std::size_t at) {
  return le16(b, at) | (le16(b, at + 2) << 16);
}

std::optional<ImageInfo> inspect_png(std::string_view b) {
  static constexpr std::string_view kSig("\x89PNG\r\n\x1a\n", 8);
  // signature + IHDR chunk (length, type, 13 data bytes, crc)
  if (b.size() < 8 + 8 + 13 + 4 || b.substr(0, 8) != kSig) return std::nullopt;
  if (be32(b, 8) != 13 || b.substr(12, 4) != "IHDR") return std::nullopt;
  const auto w = be32(b, 16);
  const auto h = be32(b, 20);
  if (w == 0 || h == 0) return std::nullopt;
  if (b.find("IEND") == std::string_view::npos) return std::nullopt;
  return ImageInfo{MediaType::Png, w, h};
}

std::optional<ImageInfo> inspect_jpeg(std::string_view b) {
  if (b.size() < 4 || static_cast<unsigned char>(b[0]) != 0xFF ||
      static_cast<unsigned char>(b[1]) != 0xD8) {
    return std::nullopt;
  }
  std::size_t pos = 2;
  while (pos + 4 <= b.size()) {
    if (static_cast<unsigned char>(b[pos]) != 0xFF) return std::nullopt;
    const auto marker = static_cast<unsigned char>(b[pos + 1]);
    if (marker == 0xFF) {  // fill byte
      ++pos;
      continue;
    }
    if (marker == 0xD9 || marker == 0xDA) return std::nullopt;  // no frame header before scan
    const auto len = be16(b, pos + 2);
    if (len < 2) return std::nullopt;
    const bool sof = marker >= 0xC0 && marker <= 0xCF && marker != 0xC4 &&
                     marker != 0xC8 && marker != 0xCC;
    if (sof) {
      if (pos + 9 > b.size()) return std::nullopt;
      const auto h = be16(b, pos + 5);
      const auto w = be16(b, pos + 7);
      if (w == 0 || h == 0) return std::nullopt;
      return ImageInfo{MediaType::Jpeg, w, h};
    }
    pos += 2 + len;
  }
  return std::nullopt;
}

std::optional<ImageInfo> inspect_webp(std::string_view b) {
  if (b.size() < 30 || b.substr(0, 4) != "RIFF" || b.substr(8, 4) != "WEBP") {
    return std::nullopt;
  }
  if (static_cast<std::size_t>(le32(b, 4)) + 8 > b.size()) return std::nullopt;
  const auto chunk = b.substr(12, 4);
  if (chunk == "VP8X") {
    return ImageInfo{MediaType::Webp, le24(b, 24) + 1, le24(b, 27) + 1};
  }
  if (chunk == "VP8L") {
    if (static_cast<unsigned char>(b[20]) != 0x2F) return std::nullopt;
    const auto bits = le32(b, 21);
    return ImageInfo{MediaType::Webp, (bits & 0x3FFF) + 1, ((bits >> 14) & 0x3FFF) + 1};
  }
  if (chunk == "VP8 ") {
    if (static_cast<unsigned char>(b[23]) != 0x9D || static_cast<unsigned char>(b[24]) != 0x01 ||
        static_cast<unsigned char>(b[25]) != 0x2A) {
      return std::nullopt;
    }
    const auto w = le16(b, 26) & 0x3FFF;
    const auto h = le16(b, 28) & 0x3FFF;
    if (w == 0 || h == 0) return std::nullopt;
    return ImageInfo{MediaType::Webp, w, h};
  }
  return std::nullopt;
}

}  // namespace

std::optional<ImageInfo> inspect_image(std::string_view bytes) {
  if (auto png = inspect_png(bytes)) return png;
  if (auto jpeg = inspect_jpeg(bytes)) return jpeg;
  return inspect_webp(bytes);
}

}  // namespace uxrank
