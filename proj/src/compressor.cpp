#include "ncdkit/compressor.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ncdkit/corpus.hpp"
#include "ncdkit/kernels.hpp"

namespace ncdkit {

CompressorSpec CompressorSpec::builtin(std::size_t window, int level) {
  CompressorSpec s;
  s.kind = Kind::BuiltinLz;
  s.window_size = window;
  s.level = level;
  return s;
}

CompressorSpec CompressorSpec::external(std::string command) {
  CompressorSpec s;
  s.kind = Kind::ExternalCommand;
  s.command = std::move(command);
  return s;
}

void CompressorSpec::validate() const {
  if (kind == Kind::BuiltinLz) {
    if (window_size < 1024 || window_size > (1ull << 30)) {
      throw CompressorError("builtin-lz window-size out of range [1KiB,1GiB]: " +
                            std::to_string(window_size));
    }
    if (level < 1 || level > 9) {
      throw CompressorError("builtin-lz level out of range [1,9]");
    }
  } else {
    if (command.empty()) {
      throw CompressorError("external compressor: empty command template");
    }
  }
}

std::string CompressorSpec::describe() const {
  if (kind == Kind::BuiltinLz) {
    return "builtin-lz(window=" + std::to_string(window_size) +
           ",level=" + std::to_string(level) + ")";
  }
  return "external(" + command + ")";
}

namespace {

// ---------------------------------------------------------------------------
// Builtin LZ77 stream.
//
// Layout: 4-byte magic "NLZ1", 8-byte LE original length, then an MSB-first
// bit stream of tokens. Token = 0 + 8-bit literal, or 1 + gamma(distance) +
// gamma(length - kMinMatch + 1). Matches may overlap their source.
// Greedy parse over a hash-chain matcher; fully deterministic.
// ---------------------------------------------------------------------------

constexpr std::size_t kMinMatch = 4;
constexpr std::size_t kMaxMatch = 1u << 24;
constexpr std::array<char, 4> kMagic{'N', 'L', 'Z', '1'};

class BitWriter {
 public:
  void put(unsigned bit) {
    cur_ = (cur_ << 1) | (bit & 1u);
    if (++fill_ == 8) {
      out_.push_back(cur_);
      cur_ = 0;
      fill_ = 0;
    }
  }

  void put_bits(std::uint64_t value, unsigned width) {
    for (unsigned i = width; i-- > 0;) put((value >> i) & 1u);
  }

  // Elias gamma for v >= 1: unary length prefix then the value bits.
  void put_gamma(std::uint64_t v) {
    unsigned width = 0;
    for (std::uint64_t t = v; t > 1; t >>= 1) ++width;
    for (unsigned i = 0; i < width; ++i) put(0);
    put_bits(v, width + 1);
  }

  std::vector<std::uint8_t> finish() {
    if (fill_ > 0) {
      out_.push_back(static_cast<std::uint8_t>(cur_ << (8 - fill_)));
      cur_ = 0;
      fill_ = 0;
    }
    return std::move(out_);
  }

 private:
  std::vector<std::uint8_t> out_;
  unsigned cur_ = 0;
  unsigned fill_ = 0;
};

// Two chained hash tables: 4-byte anchors catch short nearby matches, 8-byte
// anchors keep chains sparse on low-entropy alphabets (DNA) so long matches
// far back in the window are still reachable within the search budget.
struct HashChains {
  static constexpr std::size_t kBits = 16;
  std::vector<std::int64_t> head4, prev4;
  std::vector<std::int64_t> head8, prev8;

  explicit HashChains(std::size_t n)
      : head4(std::size_t{1} << kBits, -1),
        prev4(n, -1),
        head8(std::size_t{1} << kBits, -1),
        prev8(n, -1) {}

  static std::uint32_t hash4(const std::uint8_t* p) {
    std::uint32_t v;
    std::memcpy(&v, p, 4);
    return (v * 2654435761u) >> (32 - kBits);
  }

  static std::uint32_t hash8(const std::uint8_t* p) {
    std::uint64_t v;
    std::memcpy(&v, p, 8);
    return static_cast<std::uint32_t>((v * 0x9e3779b97f4a7c15ull) >>
                                      (64 - kBits));
  }

  void insert(const std::uint8_t* base, std::size_t pos, std::size_t n) {
    std::uint32_t h = hash4(base + pos);
    prev4[pos] = head4[h];
    head4[h] = static_cast<std::int64_t>(pos);
    if (pos + 8 <= n) {
      std::uint32_t h8 = hash8(base + pos);
      prev8[pos] = head8[h8];
      head8[h8] = static_cast<std::int64_t>(pos);
    }
  }
};

}  // namespace

std::vector<std::uint8_t> builtin_lz_compress(const CompressorSpec& spec,
                                              std::span<const std::uint8_t> x) {
  spec.validate();
  const std::size_t n = x.size();
  const std::size_t window = spec.window_size;
  const int chain_depth = 32 * spec.level;

  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  for (int i = 0; i < 8; ++i)
    out.push_back(static_cast<std::uint8_t>((static_cast<std::uint64_t>(n) >>
                                             (8 * i)) &
                                            0xff));

  BitWriter bw;
  HashChains chains(n);
  const std::uint8_t* base = x.data();
  std::size_t pos = 0;
  while (pos < n) {
    std::size_t best_len = 0;
    std::size_t best_dist = 0;
    if (pos + kMinMatch <= n) {
      const std::size_t limit = std::min(n - pos, kMaxMatch);
      auto walk = [&](std::int64_t cand, const std::vector<std::int64_t>& prev) {
        int steps = 0;
        while (cand >= 0 && steps < chain_depth) {
          const std::size_t cpos = static_cast<std::size_t>(cand);
          if (pos - cpos > window) break;  // chains are position-ordered
          std::size_t len = kern::match_length(base + pos, base + cpos, limit);
          if (len > best_len || (len == best_len && best_len >= kMinMatch &&
                                 pos - cpos < best_dist)) {
            best_len = len;
            best_dist = pos - cpos;
          }
          cand = prev[cpos];
          ++steps;
        }
      };
      if (pos + 8 <= n) {
        walk(chains.head8[HashChains::hash8(base + pos)], chains.prev8);
      }
      walk(chains.head4[HashChains::hash4(base + pos)], chains.prev4);
    }
    if (best_len >= kMinMatch) {
      bw.put(1);
      bw.put_gamma(best_dist);
      bw.put_gamma(best_len - kMinMatch + 1);
      const std::size_t end = pos + best_len;
      // index every covered position so later matches can start inside
      while (pos < end) {
        if (pos + 4 <= n) chains.insert(base, pos, n);
        ++pos;
      }
    } else {
      bw.put(0);
      bw.put_bits(base[pos], 8);
      if (pos + 4 <= n) chains.insert(base, pos, n);
      ++pos;
    }
  }
  auto bits = bw.finish();
  out.insert(out.end(), bits.begin(), bits.end());
  return out;
}

namespace {

std::uint64_t external_compressed_bits(const CompressorSpec& spec,
                                       std::span<const std::uint8_t> x) {
  namespace fs = std::filesystem;
  const fs::path tmp =
      fs::temp_directory_path() /
      ("ncdkit-ext-" + std::to_string(::getpid()) + "-" +
       std::to_string(reinterpret_cast<std::uintptr_t>(&spec)) + ".bin");
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f.write(reinterpret_cast<const char*>(x.data()),
            static_cast<std::streamsize>(x.size()));
    if (!f) {
      fs::remove(tmp);
      throw CompressorError("failed to stage input for: " + spec.command);
    }
  }
  const std::string shell = spec.command + " < '" + tmp.string() + "'";
  FILE* pipe = ::popen(shell.c_str(), "r");
  if (!pipe) {
    fs::remove(tmp);
    throw CompressorError("failed to spawn external compressor: " +
                          spec.command);
  }
  std::uint64_t bytes = 0;
  char buf[1 << 16];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) bytes += got;
  int status = ::pclose(pipe);
  fs::remove(tmp);
  if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw CompressorError("external compressor failed (exit " +
                          std::to_string(WIFEXITED(status)
                                             ? WEXITSTATUS(status)
                                             : -1) +
                          "): " + spec.command);
  }
  return bytes * 8;
}

}  // namespace

bool external_command_available(const std::string& command) {
  std::istringstream iss(command);
  std::string exe;
  iss >> exe;
  if (exe.empty()) return false;
  std::string probe = "command -v '" + exe + "' >/dev/null 2>&1";
  int rc = std::system(probe.c_str());
  return rc == 0;
}

CompressedSize compressed_size(const CompressorSpec& spec,
                               std::span<const std::uint8_t> x) {
  spec.validate();
  CompressedSize cs;
  cs.input_length = x.size();
  if (spec.kind == CompressorSpec::Kind::BuiltinLz) {
    cs.bits = builtin_lz_compress(spec, x).size() * 8;
  } else {
    cs.bits = external_compressed_bits(spec, x);
  }
  return cs;
}

CompressedSize compressed_size(const CompressorSpec& spec,
                               const std::string& x) {
  return compressed_size(
      spec, std::span<const std::uint8_t>(
                reinterpret_cast<const std::uint8_t*>(x.data()), x.size()));
}

CompressedSize concat_size(const CompressorSpec& spec,
                           std::span<const std::uint8_t> x,
                           std::span<const std::uint8_t> y) {
  std::vector<std::uint8_t> joined;
  joined.reserve(x.size() + y.size());
  joined.insert(joined.end(), x.begin(), x.end());
  joined.insert(joined.end(), y.begin(), y.end());
  return compressed_size(spec, std::span<const std::uint8_t>(joined));
}

CompressedSize concat_size(const CompressorSpec& spec, const std::string& x,
                           const std::string& y) {
  return compressed_size(spec, x + y);
}

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

NormalityReport normality_audit(const CompressorSpec& spec,
                                const std::vector<Document>& corpus) {
  if (corpus.empty()) {
    throw std::invalid_argument("normality_audit: empty corpus");
  }
  NormalityReport rep;
  std::vector<std::uint64_t> singles(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    singles[i] = compressed_size(spec, corpus[i].bytes).bits;
  }

  std::vector<double> idem, sym;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    std::uint64_t cxx =
        concat_size(spec, corpus[i].bytes, corpus[i].bytes).bits;
    double dev = singles[i] == 0
                     ? 0.0
                     : static_cast<double>(cxx > singles[i] ? cxx - singles[i]
                                                            : singles[i] - cxx) /
                           static_cast<double>(singles[i]);
    rep.files.push_back({corpus[i].id, dev});
    idem.push_back(dev);
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      std::uint64_t cxy = concat_size(spec, corpus[i].bytes, corpus[j].bytes).bits;
      std::uint64_t cyx = concat_size(spec, corpus[j].bytes, corpus[i].bytes).bits;
      NormalityReport::PairEntry e;
      e.a = corpus[i].id;
      e.b = corpus[j].id;
      std::uint64_t mx = std::max(cxy, cyx);
      e.symmetry_gap =
          mx == 0 ? 0.0
                  : static_cast<double>(mx - std::min(cxy, cyx)) /
                        static_cast<double>(mx);
      e.monotonicity_violation = cxy < singles[i] || cyx < singles[j];
      if (e.monotonicity_violation) ++rep.monotonicity_violations;
      sym.push_back(e.symmetry_gap);
      rep.pairs.push_back(std::move(e));
    }
  }
  rep.median_idempotency = median(idem);
  rep.max_idempotency = idem.empty() ? 0 : *std::max_element(idem.begin(), idem.end());
  rep.median_symmetry_gap = median(sym);
  rep.max_symmetry_gap = sym.empty() ? 0 : *std::max_element(sym.begin(), sym.end());
  return rep;
}

}  // namespace ncdkit
