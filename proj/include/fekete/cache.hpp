#pragma once

#include "fekete/groebner.hpp"
#include "fekete/parse.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fekete {

inline std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  std::ostringstream out;
  for (unsigned int k = 0; k < len; ++k) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[k]);
  return out.str();
}

inline std::string order_tag(const MonomialOrder& order) {
  if (order.kind == MonomialOrder::Kind::grevlex) return "grevlex";
  std::ostringstream s;
  s << "elim-" << std::hex << order.front;
  return s.str();
}

/// Groebner bases on disk, one file per (generator set, order), keyed by a
/// SHA-256 of the canonical generator texts.
class BasisCache {
 public:
  explicit BasisCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// --cache-dir if given, else FEKETE_CACHE_DIR, else no cache.
  static std::optional<BasisCache> resolve(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return BasisCache(*flag);
    if (const char* env = std::getenv("FEKETE_CACHE_DIR"); env && *env) return BasisCache(env);
    return std::nullopt;
  }

  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path path_for(const std::vector<MultiPoly>& gens, const VariableTable& vars,
                                 const MonomialOrder& order) const {
    std::string key = order_tag(order) + "\n";
    for (const auto& name : vars.names()) key += name + " ";
    key += "\n";
    for (const auto& g : gens) key += to_string(g, vars) + "\n";
    return dir_ / ("gb-" + order_tag(order) + "-" + sha256_hex(key).substr(0, 24) + ".txt");
  }

  std::optional<GroebnerBasis> load(const std::vector<MultiPoly>& gens, const VariableTable& vars,
                                    const MonomialOrder& order) const {
    std::ifstream in(path_for(gens, vars, order));
    if (!in) return std::nullopt;
    GroebnerBasis gb;
    gb.order = order;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      gb.basis.push_back(parse_polynomial(line, vars, order));
    }
    gb.stats.basis_size = gb.basis.size();
    return gb;
  }

  void store(const std::vector<MultiPoly>& gens, const VariableTable& vars, const GroebnerBasis& gb) const {
    std::filesystem::create_directories(dir_);
    const auto path = path_for(gens, vars, gb.order);
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << "# order " << order_tag(gb.order) << ", " << gb.basis.size() << " polynomials\n";
      for (const auto& p : gb.basis) out << to_string(p, vars) << "\n";
      if (!out) throw std::runtime_error("cannot write " + tmp);
    }
    std::filesystem::rename(tmp, path);
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace fekete
