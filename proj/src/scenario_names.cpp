#include <array>
#include <string>
#include <utility>

#include "fdnoma/errors.hpp"
#include "fdnoma/scenarios.hpp"

namespace fdnoma {

namespace {

constexpr std::array<std::pair<UldlMode, std::string_view>, 3> kUldlModes{
    {{UldlMode::kFdZf, "fd_zf"}, {UldlMode::kFdMrc, "fd_mrc"}, {UldlMode::kHd, "hd"}}};
constexpr std::array<std::pair<CoopVariant, std::string_view>, 4> kCoopVariants{
    {{CoopVariant::kFdRelay, "fd_relay"},
     {CoopVariant::kHdRelay, "hd_relay"},
     {CoopVariant::kFdUser, "fd_user"},
     {CoopVariant::kHdUser, "hd_user"}}};
constexpr std::array<std::pair<CognitiveScheme, std::string_view>, 3> kCognitiveSchemes{
    {{CognitiveScheme::kOptimum, "optimum"},
     {CognitiveScheme::kSuboptimum, "suboptimum"},
     {CognitiveScheme::kHd, "hd"}}};
constexpr std::array<std::pair<ScbfDecoding, std::string_view>, 4> kScbfDecodings{
    {{ScbfDecoding::kAuto, "auto"},
     {ScbfDecoding::kSic, "sic"},
     {ScbfDecoding::kTin, "tin"},
     {ScbfDecoding::kReverseSic, "reverse_sic"}}};

template <typename Enum, std::size_t N>
std::string_view name_of(const std::array<std::pair<Enum, std::string_view>, N>& table, Enum e) {
  for (const auto& [value, name] : table) {
    if (value == e) return name;
  }
  return "unknown";
}

template <typename Enum, std::size_t N>
Enum parse(const std::array<std::pair<Enum, std::string_view>, N>& table, std::string_view name,
           const char* what) {
  for (const auto& [value, known] : table) {
    if (known == name) return value;
  }
  std::string choices;
  for (const auto& [value, known] : table) {
    if (!choices.empty()) choices += ", ";
    choices += known;
  }
  throw ValidationError("unknown " + std::string(what) + " '" + std::string(name) +
                        "' (expected one of: " + choices + ")");
}

}  // namespace

std::string_view to_string(UldlMode mode) { return name_of(kUldlModes, mode); }
std::string_view to_string(CoopVariant variant) { return name_of(kCoopVariants, variant); }
std::string_view to_string(CognitiveScheme scheme) { return name_of(kCognitiveSchemes, scheme); }
std::string_view to_string(ScbfDecoding decoding) { return name_of(kScbfDecodings, decoding); }

UldlMode parse_uldl_mode(std::string_view name) { return parse(kUldlModes, name, "uldl mode"); }
CoopVariant parse_coop_variant(std::string_view name) {
  return parse(kCoopVariants, name, "coop mode");
}
CognitiveScheme parse_cognitive_scheme(std::string_view name) {
  return parse(kCognitiveSchemes, name, "cognitive scheme");
}

}  // namespace fdnoma
