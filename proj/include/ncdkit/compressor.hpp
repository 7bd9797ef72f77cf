#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncdkit {

struct Document;

class CompressorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sizes are measured in bits of the complete output stream, container
// header included. Concatenation is raw byte concatenation, no separator.
struct CompressorSpec {
  enum class Kind { BuiltinLz, ExternalCommand };

  Kind kind = Kind::BuiltinLz;
  std::size_t window_size = 64 * 1024;  // builtin-lz, [1 KiB, 1 GiB]
  int level = 1;                        // builtin-lz match-search depth knob
  std::string command;                  // external: reads stdin, writes stdout

  static CompressorSpec builtin(std::size_t window = 64 * 1024, int level = 1);
  static CompressorSpec external(std::string command);

  void validate() const;
  std::string describe() const;
};

struct CompressedSize {
  std::uint64_t bits = 0;
  std::uint64_t input_length = 0;
};

// Bit size of the builtin container header (magic + original length);
// the compressed size of the empty input equals exactly this.
constexpr std::uint64_t kBuiltinHeaderBits = 96;

CompressedSize compressed_size(const CompressorSpec& spec,
                               std::span<const std::uint8_t> x);
CompressedSize compressed_size(const CompressorSpec& spec,
                               const std::string& x);

CompressedSize concat_size(const CompressorSpec& spec,
                           std::span<const std::uint8_t> x,
                           std::span<const std::uint8_t> y);
CompressedSize concat_size(const CompressorSpec& spec, const std::string& x,
                           const std::string& y);

// Raw builtin compressed stream, exposed for inspection and tests.
std::vector<std::uint8_t> builtin_lz_compress(const CompressorSpec& spec,
                                              std::span<const std::uint8_t> x);

// True if `command`'s executable resolves on PATH (adapter presets are
// skipped when the tool is absent).
bool external_command_available(const std::string& command);

struct NormalityReport {
  struct FileEntry {
    std::string id;
    double idempotency = 0;  // |C(xx) - C(x)| / C(x)
  };
  struct PairEntry {
    std::string a, b;
    double symmetry_gap = 0;  // |C(xy) - C(yx)| / max(C(xy), C(yx))
    bool monotonicity_violation = false;  // C(xy) < C(x) in either order
  };

  std::vector<FileEntry> files;
  std::vector<PairEntry> pairs;
  std::size_t monotonicity_violations = 0;
  double median_idempotency = 0;
  double max_idempotency = 0;
  double median_symmetry_gap = 0;
  double max_symmetry_gap = 0;
};

NormalityReport normality_audit(const CompressorSpec& spec,
                                const std::vector<Document>& corpus);

}  // namespace ncdkit
