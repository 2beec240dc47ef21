#pragma once

// Deterministic bitmap fonts, line rendering, preprocessing (height and
// intensity normalization) and slicing into fixed-width frames.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ocrlm::render {

inline constexpr int kMinSize = 8;
inline constexpr int kMaxSize = 16;
inline constexpr int kNormHeight = 30;
inline constexpr int kFrameWidth = 2;
inline constexpr int kFrameDim = kNormHeight * kFrameWidth;  // 60
inline constexpr int kMaxTimeSteps = 700;

struct Bitmap {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> data;  // row-major

  std::uint8_t at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
  bool operator==(const Bitmap&) const = default;
};

struct StyleParams {
  double shear = 0.0;         // horizontal offset per unit of height (italic)
  double stroke_scale = 1.0;  // stroke thickening (bold)
  double width_scale = 1.0;   // horizontal compression / expansion
  bool operator==(const StyleParams&) const = default;
};

class GlyphFont {
 public:
  GlyphFont() = default;
  GlyphFont(std::string name, int gap, StyleParams style)
      : name_(std::move(name)), gap_(gap), style_(style) {}

  const std::string& name() const { return name_; }
  int gap() const { return gap_; }
  const StyleParams& style() const { return style_; }

  /// Raster height shared by every glyph at `size`.
  int raster_height(int size) const;
  bool has_size(int size) const { return glyphs_.contains(size); }
  bool has_glyph(char c, int size) const;
  /// Throws ValidationError naming the character when missing.
  const Bitmap& glyph(char c, int size) const;
  std::vector<int> sizes() const;

  void set_glyph(int size, char c, Bitmap bmp);
  void set_gap(int gap);

  bool operator==(const GlyphFont&) const = default;

 private:
  std::string name_;
  int gap_ = 1;
  StyleParams style_;
  std::map<int, std::map<char, Bitmap>> glyphs_;
};

/// Builds a font from the internal stroke skeletons for sizes 8..16.
GlyphFont make_procedural_font(std::string name, int gap, StyleParams style);

struct FontCatalog {
  std::vector<GlyphFont> fonts;
  std::vector<std::string> training;  // names
  std::vector<std::string> test;      // held-out names

  const GlyphFont& find(std::string_view name) const;
  const GlyphFont* try_find(std::string_view name) const;
};

/// The nine shipped fonts: six training styles and three held-out styles.
const FontCatalog& builtin_fonts();

/// Glyph atlas text format: `ATLAS <name> <size>` starts a block, optional
/// `GAP <pixels>`, then per glyph `GLYPH <char> <rows> <cols>` followed by
/// `rows` lines of hex intensity bytes.
void write_atlas(std::ostream& os, const GlyphFont& font);
GlyphFont read_atlas(std::istream& is);

struct LineImage {
  int height = 0;
  int width = 0;
  std::vector<double> pixels;  // row-major
  std::string transcript;
  std::string font_name;
  int font_size = 0;

  double at(int r, int c) const {
    return pixels[static_cast<std::size_t>(r) * width + c];
  }
};

/// Glyphs left to right separated by the font gap; background 0, ink 255.
LineImage render_line(std::string_view text, const GlyphFont& font, int size);

/// Bilinear rescale to height 30 keeping aspect ratio, then zero mean and
/// unit standard deviation (all zeros when the image is constant).
LineImage normalize(const LineImage& img);

struct FrameSequence {
  int steps = 0;
  std::vector<double> frames;  // steps x 60, row-major
  std::string transcript;
  double frames_per_char_estimate = 0.0;

  const double* frame(int t) const { return frames.data() + static_cast<std::size_t>(t) * kFrameDim; }
};

/// Non-overlapping 2-column windows, each flattened column by column.
/// Throws ValidationError when more than 700 steps would result.
FrameSequence frame_slices(const LineImage& normalized);

/// Inverse of frame_slices on the padded image, used by tests.
LineImage frames_to_image(const FrameSequence& fs);

/// Mean over the 26 letters of (glyph width + gap) / 2, measured after the
/// height normalization the network input goes through.
double frames_per_char(const GlyphFont& font, int size);

/// Binary PGM (P5, maxval 255). Values are clamped and rounded to bytes.
void write_pgm(std::ostream& os, const LineImage& img);
LineImage read_pgm(std::istream& is);

}  // namespace ocrlm::render
