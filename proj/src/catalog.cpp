#include "kspace/catalog.hpp"

#include "kspace/errors.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace kspace {

KglDatum stoimenow(std::size_t n) {
  if (n < 1) throw UnknownName("stoimenow" + std::to_string(n));
  std::vector<int> letters;
  for (std::size_t i = 1; i <= n; ++i) letters.push_back(static_cast<int>(i));
  return KglDatum{"stoimenow" + std::to_string(n), n, static_cast<long long>(n),
                  SignedPerm::cycle(n, letters, false), std::nullopt};
}

KglDatum sakuma(std::size_t n) {
  if (n < 1 || n % 2 == 0) throw UnknownName("sakuma" + std::to_string(n));
  std::vector<int> letters;
  std::vector<std::size_t> reversal;
  for (std::size_t i = 1; i <= n; ++i) {
    letters.push_back(static_cast<int>(i));
    reversal.push_back(n - i);
  }
  return KglDatum{"sakuma" + std::to_string(n), n, static_cast<long long>(2 * n),
                  SignedPerm::cycle(n, letters, true),
                  SignedPerm(std::move(reversal), std::vector<bool>(n, false))};
}

namespace {

struct Tables {
  std::map<std::string, KglDatum, std::less<>> kgls;
  std::map<std::string, KnotTree, std::less<>> knots;
};

const Tables& tables() {
  static const Tables t = [] {
    Tables t;
    t.kgls.emplace("borromean", KglDatum{"borromean", 2, 4, SignedPerm::cycle(2, {1, 2}, true),
                                         SignedPerm::cycle(2, {1}, true)});
    t.kgls.emplace("whitehead", KglDatum{"whitehead", 1, 2, SignedPerm::cycle(1, {1}, true),
                                         SignedPerm::cycle(1, {1}, true)});
    t.kgls.emplace("link6_3_2", KglDatum{"link6_3_2", 1, 2, SignedPerm::identity(1),
                                         SignedPerm::cycle(1, {1}, true)});
    t.knots.emplace("fig8", HypKnot{"fig8", true, Orientation::Plus});
    t.knots.emplace("trefoil", Torus{2, 3});
    t.knots.emplace("knot8_17", HypKnot{"knot8_17", false, Orientation::Plus});
    return t;
  }();
  return t;
}

// "stoimenow7" or "stoimenow(7)" -> 7
std::optional<std::size_t> family_index(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::string_view rest = name.substr(prefix.size());
  if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
  if (rest.empty() || rest.size() > 4) return std::nullopt;
  std::size_t v = 0;
  for (char c : rest) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

// Family members are generated on demand and kept for the process lifetime
// so that pointers handed out stay valid.
const KglDatum* family_kgl(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<KglDatum>, std::less<>> cache;
  std::optional<KglDatum> made;
  if (auto n = family_index(name, "stoimenow"); n && *n >= 1) made = stoimenow(*n);
  else if (auto m = family_index(name, "sakuma"); m && *m >= 1 && *m % 2 == 1) made = sakuma(*m);
  if (!made) return nullptr;
  std::lock_guard lock(mu);
  auto& slot = cache[made->name];
  if (!slot) slot = std::make_unique<KglDatum>(*made);
  return slot.get();
}

}  // namespace

const KglDatum* catalog_find_kgl(std::string_view name) {
  const auto& t = tables();
  if (auto it = t.kgls.find(name); it != t.kgls.end()) return &it->second;
  return family_kgl(name);
}

const KnotTree* catalog_find_knot(std::string_view name) {
  const auto& t = tables();
  if (auto it = t.knots.find(name); it != t.knots.end()) return &it->second;
  return nullptr;
}

CatalogEntry catalog_get(std::string_view name) {
  if (const auto* k = catalog_find_kgl(name)) return *k;
  if (const auto* k = catalog_find_knot(name)) return *k;
  throw UnknownName(std::string(name));
}

std::vector<std::string> catalog_names() {
  return {"borromean", "whitehead", "link6_3_2", "stoimenow2", "stoimenow3", "stoimenow4",
          "sakuma1",   "sakuma3",   "sakuma5",   "fig8",       "trefoil",    "knot8_17"};
}

}  // namespace kspace
