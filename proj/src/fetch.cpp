#include "ncdkit/fetch.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#ifdef NCDKIT_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <openssl/evp.h>
#endif
#include "httplib.h"

namespace ncdkit {

std::string resolve_source_url(const std::string& source) {
  const std::string prefix = "genbank:";
  if (source.rfind(prefix, 0) == 0) {
    return "https://eutils.ncbi.nlm.nih.gov/entrez/eutils/efetch.fcgi"
           "?db=nuccore&id=" +
           source.substr(prefix.size()) + "&rettype=fasta&retmode=text";
  }
  return source;
}

std::string sha256_hex(const std::string& bytes) {
#ifdef NCDKIT_HAVE_OPENSSL
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
#else
  throw std::runtime_error("built without OpenSSL; hashing unavailable");
#endif
}

namespace {

std::map<std::string, std::string> read_lock(const std::filesystem::path& p) {
  std::map<std::string, std::string> lock;
  std::ifstream in(p);
  std::string line;
  while (std::getline(in, line)) {
    auto tab = line.find('\t');
    if (tab != std::string::npos) {
      lock[line.substr(0, tab)] = line.substr(tab + 1);
    }
  }
  return lock;
}

void write_lock(const std::filesystem::path& p,
                const std::map<std::string, std::string>& lock) {
  std::ofstream out(p, std::ios::trunc);
  for (const auto& [id, hash] : lock) {
    out << id << "\t" << hash << "\n";
  }
}

struct UrlParts {
  std::string origin;  // scheme://host[:port]
  std::string path;    // path + query
};

UrlParts split_url(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw std::runtime_error("unsupported URL: " + url);
  }
  auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    return {url, "/"};
  }
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

FetchReport fetch_dataset(const Manifest& m,
                          const std::filesystem::path& dest) {
  std::filesystem::create_directories(dest);
  const std::filesystem::path lock_path = dest / "ncdkit.lock";
  auto lock = read_lock(lock_path);

  FetchReport report;
  for (const auto& e : m.entries) {
    if (!e.remote()) continue;
    FetchResult r;
    r.id = e.id;
    r.url = resolve_source_url(e.source);
    const std::filesystem::path target = dest / e.id;

    auto locked = lock.find(e.id);
    if (locked != lock.end() && std::filesystem::exists(target)) {
      std::ifstream in(target, std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      if (sha256_hex(ss.str()) == locked->second) {
        r.ok = true;
        r.skipped = true;
        r.sha256 = locked->second;
        report.entries.push_back(std::move(r));
        continue;
      }
    }

    try {
      const UrlParts parts = split_url(r.url);
      httplib::Client cli(parts.origin);
      cli.set_follow_location(true);
      cli.set_connection_timeout(30);
      cli.set_read_timeout(120);
      auto res = cli.Get(parts.path);
      if (!res) {
        r.error = "connection failed: " + httplib::to_string(res.error());
      } else if (res->status != 200) {
        r.error = "HTTP " + std::to_string(res->status);
      } else if (res->body.empty()) {
        r.error = "empty payload";
      } else {
        std::ofstream out(target, std::ios::binary | std::ios::trunc);
        out.write(res->body.data(),
                  static_cast<std::streamsize>(res->body.size()));
        if (!out) {
          r.error = "write failed: " + target.string();
        } else {
          r.ok = true;
          r.sha256 = sha256_hex(res->body);
          lock[e.id] = r.sha256;
        }
      }
    } catch (const std::exception& ex) {
      r.error = ex.what();
    }
    if (!r.ok) ++report.failures;
    report.entries.push_back(std::move(r));
  }
  write_lock(lock_path, lock);
  return report;
}

}  // namespace ncdkit
