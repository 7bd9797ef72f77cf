#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace ncdkit {

enum class DocKind { Dna, Text, Binary };

struct Document {
  std::string id;
  std::string bytes;
  DocKind kind = DocKind::Binary;
  std::string source;
};

DocKind parse_kind(const std::string& s);
std::string kind_name(DocKind k);

// Uppercases and keeps only {A,C,G,T}; returns the number of dropped
// characters (whitespace not counted as dropped).
std::string clean_dna(const std::string& raw, std::size_t* dropped = nullptr);

struct FastaRecord {
  Document doc;
  std::size_t dropped_chars = 0;
};

// One Document per ">" record; id = first whitespace-delimited header token.
std::vector<FastaRecord> parse_fasta(const std::string& bytes);

std::string write_fasta(const std::vector<Document>& docs);

struct NormalizeStats {
  std::size_t invalid_sequences = 0;   // malformed UTF-8, replaced
  std::size_t passed_through = 0;      // non-ASCII kept as raw bytes
  std::size_t marks_stripped = 0;      // combining marks / diacritics removed
};

// Canonical-decomposes Latin letters to their ASCII base, strips combining
// marks, normalizes line endings to '\n'. Idempotent; never fails.
std::string normalize_text(const std::string& utf8,
                           NormalizeStats* stats = nullptr);

struct ManifestEntry {
  std::string id;
  DocKind kind = DocKind::Text;
  std::string source;  // local path, URL, or genbank:ACCESSION
  bool remote() const;
};

struct Manifest {
  std::vector<ManifestEntry> entries;
  static Manifest parse(const std::string& text);
  static Manifest load(const std::filesystem::path& file);
};

// Loads every regular file in a directory (sorted by filename) as one
// document; kind inferred from extension (.fa/.fasta/.fna -> dna via FASTA
// parse, else text).
std::vector<Document> load_directory(const std::filesystem::path& dir);

// Loads the local entries of a manifest, applying FASTA parsing/cleaning to
// dna entries and normalize_text to text entries.
std::vector<Document> load_manifest(const Manifest& m,
                                    const std::filesystem::path& base_dir);

}  // namespace ncdkit
