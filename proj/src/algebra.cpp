#include "novdef/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace novdef {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

std::vector<std::string> power_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(k == 0 ? "1" : (k == 1 ? "t" : "t^" + std::to_string(k)));
  return out;
}

const std::array<Identity, 9>& all_identities() {
  static const std::array<Identity, 9> ids{Identity::NovLeftSym, Identity::NovRightComm, Identity::Nctpa,
                                           Identity::Tpa,        Identity::Np1,          Identity::Np2,
                                           Identity::Lie,        Identity::CommAssoc,    Identity::S5};
  return ids;
}

std::string identity_name(Identity id) {
  switch (id) {
    case Identity::NovLeftSym: return "NOV_LEFTSYM";
    case Identity::NovRightComm: return "NOV_RIGHTCOMM";
    case Identity::Nctpa: return "NCTPA";
    case Identity::Tpa: return "TPA";
    case Identity::Np1: return "NP1";
    case Identity::Np2: return "NP2";
    case Identity::Lie: return "LIE";
    case Identity::CommAssoc: return "COMM_ASSOC";
    case Identity::S5: return "S5";
  }
  return "?";
}

std::optional<Identity> parse_identity(std::string_view name) {
  std::string key;
  for (char c : name) key += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (auto id : all_identities())
    if (identity_name(id) == key) return id;
  return std::nullopt;
}

std::vector<std::string> required_ops(Identity id) {
  switch (id) {
    case Identity::NovLeftSym:
    case Identity::NovRightComm:
    case Identity::Nctpa: return {"circ"};
    case Identity::Tpa: return {"dot", "bracket"};
    case Identity::Np1:
    case Identity::Np2: return {"dot", "circ"};
    case Identity::Lie:
    case Identity::S5: return {"bracket"};
    case Identity::CommAssoc: return {"dot"};
  }
  return {};
}

std::size_t arity(Identity id) { return id == Identity::S5 ? 5 : 3; }

std::size_t check_threads() {
  std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TPA_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return std::min<std::size_t>(static_cast<std::size_t>(v), hw);
  }
  return hw;
}

}  // namespace novdef
