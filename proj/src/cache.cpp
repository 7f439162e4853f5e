#include "misere/cache.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>

namespace misere {

namespace {

constexpr char kMagic[8] = {'M', 'S', 'R', 'G', 'C', '0', '0', '1'};

template <typename T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
bool get(std::istream& is, T& v) {
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  return bool(is);
}

}  // namespace

std::string cache_file_in(const std::string& dir) { return dir + "/engine-cache.bin"; }

bool save_cache(Engine& eng, const std::string& path) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) return false;
    os.write(kMagic, sizeof kMagic);
    std::uint64_t count = eng.size();
    put(os, count);
    for (std::uint64_t i = 0; i < count; ++i) {
      const FormNode& n = eng.node(AugId{static_cast<std::uint32_t>(i)});
      std::uint8_t flags = (n.left_tomb ? 1 : 0) | (n.right_tomb ? 2 : 0) | n.outcome_memo.load() << 2;
      put(os, flags);
      put(os, static_cast<std::uint32_t>(n.lefts.size()));
      for (AugId l : n.lefts) put(os, l.raw);
      put(os, static_cast<std::uint32_t>(n.rights.size()));
      for (AugId r : n.rights) put(os, r.raw);
    }
    if (!os) return false;
  }
  return std::rename(tmp.c_str(), path.c_str()) == 0;
}

bool load_cache(Engine& eng, const std::string& path) {
  if (eng.size() != 1) return false;
  std::ifstream is(path, std::ios::binary);
  if (!is) return false;
  char magic[8];
  is.read(magic, sizeof magic);
  if (!is || std::memcmp(magic, kMagic, sizeof magic) != 0) return false;
  std::uint64_t count = 0;
  if (!get(is, count) || count == 0 || count > (std::uint64_t(1) << 31)) return false;

  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint8_t flags;
    std::uint32_t nl, nr;
    if (!get(is, flags) || !get(is, nl)) return false;
    std::vector<AugId> lefts(nl), rights;
    for (auto& l : lefts)
      if (!get(is, l.raw) || l.raw >= i) return false;  // children precede parents
    if (!get(is, nr)) return false;
    rights.resize(nr);
    for (auto& r : rights)
      if (!get(is, r.raw) || r.raw >= i) return false;
    if (i == 0) {
      if (nl || nr || (flags & 3)) return false;
      continue;  // the empty form is interned by the constructor
    }
    AugId got = eng.intern(std::move(lefts), std::move(rights), flags & 1, flags & 2);
    if (got.raw != i) return false;  // deterministic re-interning must agree
    if (flags >> 2 & 1) eng.node(got).outcome_memo.store(flags >> 2);
  }
  eng.mark_preloaded();
  return true;
}

}  // namespace misere
