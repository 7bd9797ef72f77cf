#include "ncdkit/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ncdkit/unicode_fold_table.hpp"

namespace ncdkit {

DocKind parse_kind(const std::string& s) {
  if (s == "dna") return DocKind::Dna;
  if (s == "text") return DocKind::Text;
  if (s == "binary") return DocKind::Binary;
  throw std::invalid_argument("unknown document kind: " + s);
}

std::string kind_name(DocKind k) {
  switch (k) {
    case DocKind::Dna: return "dna";
    case DocKind::Text: return "text";
    case DocKind::Binary: return "binary";
  }
  return "binary";
}

std::string clean_dna(const std::string& raw, std::size_t* dropped) {
  std::string out;
  out.reserve(raw.size());
  std::size_t drop = 0;
  for (unsigned char c : raw) {
    if (std::isspace(c)) continue;
    unsigned char u = static_cast<unsigned char>(std::toupper(c));
    if (u == 'A' || u == 'C' || u == 'G' || u == 'T') {
      out.push_back(static_cast<char>(u));
    } else {
      ++drop;
    }
  }
  if (dropped) *dropped = drop;
  return out;
}

std::vector<FastaRecord> parse_fasta(const std::string& bytes) {
  std::vector<FastaRecord> records;
  std::istringstream in(bytes);
  std::string line;
  FastaRecord* cur = nullptr;
  std::string seq;
  auto flush = [&]() {
    if (cur) {
      cur->doc.bytes = clean_dna(seq, &cur->dropped_chars);
      seq.clear();
      cur = nullptr;
    }
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '>') {
      flush();
      FastaRecord rec;
      std::istringstream hdr(line.substr(1));
      hdr >> rec.doc.id;
      rec.doc.kind = DocKind::Dna;
      rec.doc.source = "fasta";
      records.push_back(std::move(rec));
      cur = &records.back();
    } else if (cur) {
      seq += line;
    } else if (!line.empty() &&
               line.find_first_not_of(" \t") != std::string::npos) {
      throw std::runtime_error("FASTA parse: sequence data before first '>'");
    }
  }
  flush();
  if (records.empty()) {
    throw std::runtime_error("FASTA parse: no '>' records found");
  }
  return records;
}

std::string write_fasta(const std::vector<Document>& docs) {
  std::string out;
  for (const auto& d : docs) {
    out += ">" + d.id + "\n";
    for (std::size_t i = 0; i < d.bytes.size(); i += 70) {
      out += d.bytes.substr(i, 70);
      out += "\n";
    }
  }
  return out;
}

namespace {

const char* fold_lookup(std::uint32_t cp) {
  auto it = std::lower_bound(
      std::begin(unicode::kFoldTable), std::end(unicode::kFoldTable), cp,
      [](const unicode::FoldEntry& e, std::uint32_t v) { return e.cp < v; });
  if (it != std::end(unicode::kFoldTable) && it->cp == cp) return &it->base;
  return nullptr;
}

bool is_combining_mark(std::uint32_t cp) {
  auto it = std::upper_bound(
      std::begin(unicode::kCombiningMarks), std::end(unicode::kCombiningMarks),
      cp, [](std::uint32_t v, const unicode::MarkRange& r) { return v < r.lo; });
  if (it == std::begin(unicode::kCombiningMarks)) return false;
  --it;
  return cp >= it->lo && cp <= it->hi;
}

// Decodes one UTF-8 codepoint; returns consumed byte count, 0 on malformed.
std::size_t decode_utf8(const std::string& s, std::size_t i,
                        std::uint32_t* cp) {
  unsigned char c0 = static_cast<unsigned char>(s[i]);
  if (c0 < 0x80) {
    *cp = c0;
    return 1;
  }
  std::size_t len;
  std::uint32_t v;
  if ((c0 & 0xe0) == 0xc0) {
    len = 2;
    v = c0 & 0x1f;
  } else if ((c0 & 0xf0) == 0xe0) {
    len = 3;
    v = c0 & 0x0f;
  } else if ((c0 & 0xf8) == 0xf0) {
    len = 4;
    v = c0 & 0x07;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    unsigned char c = static_cast<unsigned char>(s[i + k]);
    if ((c & 0xc0) != 0x80) return 0;
    v = (v << 6) | (c & 0x3f);
  }
  *cp = v;
  return len;
}

}  // namespace

std::string normalize_text(const std::string& utf8, NormalizeStats* stats) {
  NormalizeStats st;
  std::string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  while (i < utf8.size()) {
    unsigned char c = static_cast<unsigned char>(utf8[i]);
    if (c < 0x80) {
      if (c == '\r') {
        out.push_back('\n');
        if (i + 1 < utf8.size() && utf8[i + 1] == '\n') ++i;
      } else {
        out.push_back(static_cast<char>(c));
      }
      ++i;
      continue;
    }
    std::uint32_t cp = 0;
    std::size_t len = decode_utf8(utf8, i, &cp);
    if (len == 0) {
      out.push_back('?');
      ++st.invalid_sequences;
      ++i;
      continue;
    }
    if (const char* base = fold_lookup(cp)) {
      out.push_back(*base);
      ++st.marks_stripped;
    } else if (is_combining_mark(cp)) {
      ++st.marks_stripped;
    } else {
      out.append(utf8, i, len);
      ++st.passed_through;
    }
    i += len;
  }
  if (stats) *stats = st;
  return out;
}

bool ManifestEntry::remote() const {
  return source.rfind("http://", 0) == 0 || source.rfind("https://", 0) == 0 ||
         source.rfind("genbank:", 0) == 0;
}

Manifest Manifest::parse(const std::string& text) {
  Manifest m;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    ManifestEntry e;
    std::string kind;
    if (!std::getline(fields, e.id, '\t') || !std::getline(fields, kind, '\t') ||
        !std::getline(fields, e.source, '\t')) {
      throw std::runtime_error("manifest line " + std::to_string(lineno) +
                               ": expected id<TAB>kind<TAB>source");
    }
    e.kind = parse_kind(kind);
    for (const auto& prev : m.entries) {
      if (prev.id == e.id) {
        throw std::runtime_error("manifest: duplicate id " + e.id);
      }
    }
    m.entries.push_back(std::move(e));
  }
  return m;
}

Manifest Manifest::load(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open manifest: " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool fasta_extension(const std::filesystem::path& p) {
  auto e = p.extension().string();
  return e == ".fa" || e == ".fasta" || e == ".fna";
}

}  // namespace

std::vector<Document> load_directory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Document> docs;
  for (const auto& p : files) {
    if (fasta_extension(p)) {
      for (auto& rec : parse_fasta(slurp(p))) {
        rec.doc.source = p.string();
        docs.push_back(std::move(rec.doc));
      }
    } else {
      Document d;
      d.id = p.filename().string();
      d.bytes = slurp(p);
      d.kind = DocKind::Text;
      d.source = p.string();
      docs.push_back(std::move(d));
    }
  }
  return docs;
}

std::vector<Document> load_manifest(const Manifest& m,
                                    const std::filesystem::path& base_dir) {
  std::vector<Document> docs;
  for (const auto& e : m.entries) {
    std::filesystem::path p =
        e.remote() ? base_dir / e.id : base_dir / e.source;
    if (e.remote() && !std::filesystem::exists(p)) {
      throw std::runtime_error("manifest entry '" + e.id +
                               "' not fetched yet: " + p.string());
    }
    std::string raw = slurp(p);
    Document d;
    d.id = e.id;
    d.kind = e.kind;
    d.source = e.source;
    if (e.kind == DocKind::Dna) {
      if (!raw.empty() && raw[0] == '>') {
        auto recs = parse_fasta(raw);
        d.bytes = recs.front().doc.bytes;
      } else {
        d.bytes = clean_dna(raw);
      }
    } else if (e.kind == DocKind::Text) {
      d.bytes = normalize_text(raw);
    } else {
      d.bytes = std::move(raw);
    }
    docs.push_back(std::move(d));
  }
  return docs;
}

}  // namespace ncdkit
