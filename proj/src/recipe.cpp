#include "zshadow/recipe.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "zshadow/error.hpp"

namespace zshadow {

std::string_view to_string(TypeClaim c) {
  switch (c) {
    case TypeClaim::TypeI:
      return "TypeI";
    case TypeClaim::TypeII:
      return "TypeII";
    case TypeClaim::SelfDualOnly:
      return "SelfDualOnly";
  }
  return "?";
}

namespace {

// Vector entries and index ranges are written with four symbols:
//   even m:  a = 2^{m/2-1},  A = 2^{m/2}
//   odd m:   b = 2^{(m-1)/2}, B = 2^{(m+1)/2}
// A factor "i+2j+2k1@a^2" stands for X_{(i+2j+2k1) a}^2; "0" stands for X_0.
struct Branch {
  std::vector<const char*> v1;
  std::vector<const char*> v2;
  std::vector<std::vector<const char*>> w;
  std::vector<const char*> ranges;  // i, j, k1, ...
  std::vector<const char*> factors;
};

enum class Family { Shadow, GenZero, GenHalf };

struct CaseSpec {
  const char* id;
  Family family;
  int n_mod4;
  Variant variant;
  int type_ii_mod8;  // n mod 8 giving Type II; -1 for self-dual-only
  std::optional<Branch> even;
  std::optional<Branch> odd;
};

using V = std::vector<const char*>;

// Type I shadows, n = 2 (mod 4), k = 2.
const Branch kShadowN2AEven{{"a", "a"}, {"A", "0"}, {}, {"2A", "A"}, {"i+2j@a", "i@a"}};
const Branch kShadowN2AOdd{{"b", "0"}, {"b", "b"}, {}, {"B", "B"}, {"i+j@b", "j@b"}};

// n = 2 (mod 4), k = 6.
const Branch kShadowN2BEven{
    V(6, "a"),
    {"A", "0", "0", "0", "0", "0"},
    {{"A", "0", "A", "0", "0", "0"},
     {"0", "A", "0", "A", "0", "0"},
     {"0", "0", "A", "0", "A", "0"},
     {"0", "0", "0", "A", "0", "A"}},
    {"2A", "A", "A", "A", "A", "A"},
    {"i+2j+2k1@a", "i+2k2@a", "i+2k1+2k3@a", "i+2k2+2k4@a", "i+2k3@a", "i+2k4@a"}};
const Branch kShadowN2BOdd{
    {"b", "0", "b", "0", "b", "0"},
    {"b", "b", "0", "0", "0", "0"},
    {{"b", "b", "b", "b", "0", "0"},
     {"B", "0", "0", "0", "0", "0"},
     {"0", "0", "b", "b", "b", "b"},
     {"0", "B", "0", "0", "0", "0"}},
    {"B", "B", "B", "b", "B", "b"},
    {"i+j+k1+2k2@b", "j+k1+2k4@b", "i+k1+k3@b", "k1+k3@b", "i+k3@b", "k3@b"}};

// n = 0 (mod 4), k = 4.
const Branch kShadowN0AEven{{"a", "a", "a", "a"},
                            {"A", "0", "0", "0"},
                            {{"A", "A", "0", "0"}, {"0", "0", "A", "A"}},
                            {"2A", "A", "A", "A"},
                            {"i+2j+2k1@a", "i+2k1@a", "i+2k2@a^2"}};
const Branch kShadowN0AOdd{{"b", "0", "b", "0"},
                           {"b", "b", "0", "0"},
                           {{"b", "b", "b", "b"}, {"B", "0", "0", "0"}},
                           {"B", "B", "B", "b"},
                           {"i+j+k1+2k2@b", "j+k1@b", "i+k1@b", "k1@b"}};

// n = 0 (mod 4), k = 8.
const Branch kShadowN0BEven{
    V(8, "a"),
    {"A", "0", "0", "0", "0", "0", "0", "0"},
    {{"A", "0", "A", "0", "0", "0", "0", "0"},
     {"0", "A", "0", "A", "0", "0", "0", "0"},
     {"0", "0", "A", "0", "A", "0", "0", "0"},
     {"0", "0", "0", "A", "0", "A", "0", "0"},
     {"0", "0", "0", "0", "A", "0", "A", "0"},
     {"0", "0", "0", "0", "0", "A", "0", "A"}},
    {"2A", "A", "A", "A", "A", "A", "A", "A"},
    {"i+2j+2k1@a", "i+2k2@a", "i+2k1+2k3@a", "i+2k2+2k4@a", "i+2k3+2k5@a", "i+2k4+2k6@a", "i+2k5@a",
     "i+2k6@a"}};
const Branch kShadowN0BOdd{
    {"b", "0", "b", "0", "b", "0", "b", "0"},
    {"b", "b", "0", "0", "0", "0", "0", "0"},
    {{"b", "b", "b", "b", "0", "0", "0", "0"},
     {"0", "0", "b", "b", "b", "b", "0", "0"},
     {"0", "0", "0", "0", "b", "b", "b", "b"},
     {"B", "0", "0", "0", "0", "0", "0", "0"},
     {"0", "B", "0", "0", "0", "0", "0", "0"},
     {"0", "0", "B", "0", "0", "0", "0", "0"}},
    {"B", "B", "B", "B", "B", "b", "b", "b"},
    {"i+j+k1+2k4@b", "j+k1+2k5@b", "i+k1+k2+2k6@b", "k1+k2@b", "i+k2+k3@b", "k2+k3@b", "i+k3@b", "k3@b"}};

// Odd n (m even), Type I shadows.
const Branch kShadowN3A{V(5, "a"),
                        {"A", "0", "0", "0", "0"},
                        {{"A", "A", "0", "0", "0"}, {"0", "A", "A", "0", "0"}, {"0", "0", "A", "A", "0"}},
                        {"2A", "A", "A", "A", "A"},
                        {"i+2j+2k1@a", "i+2k1+2k2@a", "i+2k2+2k3@a", "i+2k3@a", "i@a"}};
const Branch kShadowN3B{V(9, "a"),
                        {"A", "0", "0", "0", "0", "0", "0", "0", "0"},
                        {{"0", "A", "A", "0", "0", "0", "0", "0", "0"},
                         {"0", "0", "A", "A", "0", "0", "0", "0", "0"},
                         {"0", "0", "0", "A", "A", "0", "0", "0", "0"},
                         {"0", "0", "0", "0", "A", "A", "0", "0", "0"},
                         {"0", "0", "0", "0", "0", "A", "A", "0", "0"},
                         {"0", "0", "0", "0", "0", "0", "A", "A", "0"},
                         {"0", "0", "0", "0", "0", "0", "0", "A", "A"}},
                        {"2A", "A", "A", "A", "A", "A", "A", "A", "A"},
                        {"i+2j@a", "i+2k1@a", "i+2k1+2k2@a", "i+2k2+2k3@a", "i+2k3+2k4@a", "i+2k7@a",
                         "i+2k4+2k5@a", "i+2k5+2k6@a", "i+2k6+2k7@a"}};
const Branch kShadowN1A{{"a", "a", "a"},
                        {"A", "0", "0"},
                        {{"A", "A", "0"}},
                        {"2A", "A", "A"},
                        {"i+2j+2k1@a", "i+2k1@a", "i@a"}};
const Branch kShadowN1B{V(7, "a"),
                        {"A", "0", "0", "0", "0", "0", "0"},
                        {{"A", "A", "0", "0", "0", "0", "0"},
                         {"0", "A", "A", "0", "0", "0", "0"},
                         {"0", "0", "A", "A", "0", "0", "0"},
                         {"0", "0", "0", "A", "A", "0", "0"},
                         {"0", "0", "0", "0", "A", "A", "0"}},
                        {"2A", "A", "A", "A", "A", "A", "A"},
                        {"i+2j+2k1@a", "i+2k1+2k2@a", "i+2k2+2k3@a", "i+2k3+2k4@a", "i+2k4+2k5@a", "i+2k5@a",
                         "i@a"}};

// Generalized shadows with s.s = 0: n = 2 (mod 4).
const Branch kGenZeroN2AEven{{"a", "a", "a", "a", "0", "0"},
                             {"A", "0", "0", "0", "0", "0"},
                             {{"A", "A", "0", "0", "0", "0"},
                              {"0", "A", "A", "0", "0", "0"},
                              {"0", "0", "A", "A", "0", "0"},
                              {"0", "0", "0", "0", "A", "0"}},
                             {"2A", "A", "A", "A", "A", "A"},
                             {"0", "i+2j+2k1@a", "i+2k1+2k2@a", "i+2k2+2k3@a", "i+2k3@a", "k4@A"}};
const Branch kGenZeroN2AOdd{{"b", "0", "b", "0", "0", "0"},
                            {"b", "b", "0", "0", "0", "0"},
                            {{"b", "b", "b", "b", "0", "0"},
                             {"0", "0", "0", "0", "b", "b"},
                             {"B", "0", "0", "0", "0", "0"},
                             {"0", "B", "0", "0", "0", "0"}},
                            {"B", "B", "B", "B", "b", "b"},
                            {"i+j+k1+2k3@b", "j+k1+2k4@b", "i+k1@b", "k1@b", "k2@b^2"}};
const Branch kGenZeroN2BEven{
    {"a", "a", "a", "a", "0", "0", "0", "0", "0", "0"},
    {"A", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {{"A", "A", "0", "0", "0", "0", "0", "0", "0", "0"},
     {"0", "A", "A", "0", "0", "0", "0", "0", "0", "0"},
     {"0", "0", "A", "A", "0", "0", "0", "0", "0", "0"},
     {"0", "0", "0", "0", "A", "0", "0", "0", "0", "0"},
     {"0", "0", "0", "0", "0", "A", "0", "0", "0", "0"},
     {"0", "0", "0", "0", "0", "0", "A", "0", "0", "0"},
     {"0", "0", "0", "0", "0", "0", "0", "A", "0", "0"},
     {"0", "0", "0", "0", "0", "0", "0", "0", "A", "0"}},
    {"2A", "A", "A", "A", "A", "A", "A", "A", "A", "A"},
    {"0", "i+2j+2k1@a", "i+2k1+2k2@a", "i+2k2+2k3@a", "i+2k3@a", "k4@A", "k5@A", "k6@A", "k7@A", "k8@A"}};
// The printed ranges for this branch omit i and j; they are taken as B like every other odd-m sum.
const Branch kGenZeroN2BOdd{
    {"b", "0", "b", "0", "0", "0", "0", "0", "0", "0"},
    {"b", "b", "0", "0", "0", "0", "0", "0", "0", "0"},
    {{"b", "b", "b", "b", "0", "0", "0", "0", "0", "0"},
     {"0", "0", "0", "0", "b", "b", "0", "0", "0", "0"},
     {"0", "0", "0", "0", "0", "0", "b", "b", "0", "0"},
     {"0", "0", "0", "0", "0", "0", "0", "0", "b", "b"},
     {"B", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
     {"0", "B", "0", "0", "0", "0", "0", "0", "0", "0"},
     {"0", "0", "B", "0", "0", "0", "0", "0", "0", "0"},
     {"0", "0", "0", "B", "0", "0", "0", "0", "0", "0"}},
    {"B", "B", "B", "B", "B", "B", "b", "b", "b", "b"},
    {"i+j+k1+2k5@b", "j+k1+2k6@b", "i+k1+2k7@b", "k1+2k8@b", "k2@b^2", "k3@b^2", "k4@b^2"}};

// s.s = 0, odd n (m even).
const Branch kGenZeroN3A{{"a", "a", "a", "a", "0"},
                         {"A", "0", "0", "0", "0"},
                         {{"A", "A", "0", "0", "0"}, {"0", "A", "A", "0", "0"}, {"0", "0", "A", "A", "0"}},
                         {"2A", "A", "A", "A", "A"},
                         {"0", "i+2j+2k1@a", "i+2k1+2k2@a", "i+2k2+2k3@a", "i+2k3@a"}};
const Branch kGenZeroN3B{{"a", "a", "a", "a", "0", "0", "0", "0", "0"},
                         {"A", "0", "0", "0", "0", "0", "0", "0", "0"},
                         {{"A", "A", "0", "0", "0", "0", "0", "0", "0"},
                          {"0", "A", "A", "0", "0", "0", "0", "0", "0"},
                          {"0", "0", "A", "A", "0", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "A", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "0", "A", "0", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "A", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "0", "A", "0"}},
                         {"2A", "A", "A", "A", "A", "A", "A", "A", "A"},
                         {"0", "i+2j+2k1@a", "i+2k1+2k2@a", "i+2k2+2k3@a", "i+2k3@a", "k4@A", "k5@A", "k6@A",
                          "k7@A"}};
const Branch kGenZeroN1A{{"a", "a", "a", "a", "0", "0", "0"},
                         {"A", "0", "0", "0", "0", "0", "0"},
                         {{"A", "A", "0", "0", "0", "0", "0"},
                          {"0", "A", "A", "0", "0", "0", "0"},
                          {"0", "0", "A", "A", "0", "0", "0"},
                          {"0", "0", "0", "0", "A", "0", "0"},
                          {"0", "0", "0", "0", "0", "A", "0"}},
                         {"2A", "A", "A", "A", "A", "A", "A"},
                         {"0", "i+2j+2k1@a", "i+2k1+2k2@a", "i+2k2+2k3@a", "i+2k3@a", "k4@A", "k5@A"}};
const Branch kGenZeroN1B{{"a", "a", "a", "a", "0", "0", "0", "0", "0", "0", "0"},
                         {"A", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
                         {{"A", "A", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
                          {"0", "A", "A", "0", "0", "0", "0", "0", "0", "0", "0"},
                          {"0", "0", "A", "A", "0", "0", "0", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "A", "0", "0", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "0", "A", "0", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "A", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "0", "A", "0", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "0", "0", "A", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "0", "0", "0", "A", "0"}},
                         {"2A", "A", "A", "A", "A", "A", "A", "A", "A", "A", "A"},
                         {"0", "i+2j+2k1@a", "i+2k1+2k2@a", "i+2k2+2k3@a", "i+2k3@a", "k4@A", "k5@A", "k6@A",
                          "k7@A", "k8@A", "k9@A"}};

// Generalized shadows with s.s = 2^{m-1}: n = 0 (mod 4).
const Branch kGenHalfN0AEven{{"a", "a", "0", "0"},
                             {"A", "0", "0", "0"},
                             {{"A", "A", "0", "0"}, {"0", "0", "A", "0"}},
                             {"2A", "A", "A", "A"},
                             {"0", "i+2j+2k1@a", "i+2k1@a", "k2@A"}};
const Branch kGenHalfN0AOdd{{"b", "0", "0", "0"},
                            {"b", "b", "0", "0"},
                            {{"0", "0", "b", "b"}, {"B", "0", "0", "0"}},
                            {"B", "B", "B", "b"},
                            {"i+j+2k2@b", "j@b", "k1@b^2"}};
const Branch kGenHalfN0BEven{{"a", "a", "0", "0", "0", "0", "0", "0"},
                             {"A", "0", "0", "0", "0", "0", "0", "0"},
                             {{"A", "A", "0", "0", "0", "0", "0", "0"},
                              {"0", "0", "A", "0", "0", "0", "0", "0"},
                              {"0", "0", "0", "A", "0", "0", "0", "0"},
                              {"0", "0", "0", "0", "A", "0", "0", "0"},
                              {"0", "0", "0", "0", "0", "A", "0", "0"},
                              {"0", "0", "0", "0", "0", "0", "A", "0"}},
                             {"2A", "A", "A", "A", "A", "A", "A", "A"},
                             {"0", "i+2j+2k1@a", "i+2k1@a", "k2@A", "k3@A", "k4@A", "k5@A", "k6@A"}};
// v1 is printed with seven entries; the eighth is taken as 0.
const Branch kGenHalfN0BOdd{{"b", "0", "0", "0", "0", "0", "0", "0"},
                            {"b", "b", "0", "0", "0", "0", "0", "0"},
                            {{"0", "0", "b", "b", "0", "0", "0", "0"},
                             {"0", "0", "0", "0", "b", "b", "0", "0"},
                             {"0", "0", "0", "0", "0", "0", "b", "b"},
                             {"B", "0", "0", "0", "0", "0", "0", "0"},
                             {"0", "B", "0", "0", "0", "0", "0", "0"},
                             {"0", "0", "B", "0", "0", "0", "0", "0"}},
                            {"B", "B", "B", "B", "B", "b", "b", "b"},
                            {"i+j+2k4@b", "j+2k5@b", "k1+2k6@b", "k1@b", "k2@b^2", "k3@b^2"}};

// s.s = 2^{m-1}, odd n (m even).
const Branch kGenHalfN3A{{"a", "a", "0", "0", "0"},
                         {"A", "0", "0", "0", "0"},
                         {{"A", "A", "0", "0", "0"}, {"0", "0", "A", "0", "0"}, {"0", "0", "0", "A", "0"}},
                         {"2A", "A", "A", "A", "A"},
                         {"0", "i+2j+2k1@a", "i+2k1@a", "k2@a", "k3@a"}};
const Branch kGenHalfN3B{{"a", "a", "0", "0", "0", "0", "0", "0", "0"},
                         {"A", "0", "0", "0", "0", "0", "0", "0", "0"},
                         {{"A", "A", "0", "0", "0", "0", "0", "0", "0"},
                          {"0", "0", "A", "0", "0", "0", "0", "0", "0"},
                          {"0", "0", "0", "A", "0", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "A", "0", "0", "0", "0"},
                          {"0", "0", "0", "0", "0", "A", "0", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "A", "0", "0"},
                          {"0", "0", "0", "0", "0", "0", "0", "A", "0"}},
                         {"2A", "A", "A", "A", "A", "A", "A", "A", "A"},
                         {"0", "i+2j+2k1@a", "i+2k1@a", "k2@A", "k3@A", "k4@A", "k5@A", "k6@A", "k7@A"}};
const Branch kGenHalfN1A{{"a", "a", "0", "0", "0", "0", "0"},
                         {"A", "0", "0", "0", "0", "0", "0"},
                         {{"A", "A", "0", "0", "0", "0", "0"},
                          {"0", "0", "A", "0", "0", "0", "0"},
                          {"0", "0", "0", "A", "0", "0", "0"},
                          {"0", "0", "0", "0", "A", "0", "0"},
                          {"0", "0", "0", "0", "0", "A", "0"}},
                         {"2A", "A", "A", "A", "A", "A", "A"},
                         {"0", "i+2j+2k1@a", "i+2k1@a", "k2@A", "k3@A", "k4@A", "k5@A"}};
const Branch kGenHalfN1B{{"a", "a", "0"},
                         {"A", "0", "0"},
                         {{"A", "A", "0"}},
                         {"2A", "A", "A"},
                         {"0", "i+2j+2k1@a", "i+2k1@a"}};

const std::vector<CaseSpec>& case_table() {
  static const std::vector<CaseSpec> table = {
      {"shadow/n2/a", Family::Shadow, 2, Variant::A, 6, kShadowN2AEven, kShadowN2AOdd},
      {"shadow/n2/b", Family::Shadow, 2, Variant::B, 2, kShadowN2BEven, kShadowN2BOdd},
      {"shadow/n0/a", Family::Shadow, 0, Variant::A, 4, kShadowN0AEven, kShadowN0AOdd},
      {"shadow/n0/b", Family::Shadow, 0, Variant::B, 0, kShadowN0BEven, kShadowN0BOdd},
      {"shadow/n3/a", Family::Shadow, 3, Variant::A, 3, kShadowN3A, std::nullopt},
      {"shadow/n3/b", Family::Shadow, 3, Variant::B, 7, kShadowN3B, std::nullopt},
      {"shadow/n1/a", Family::Shadow, 1, Variant::A, 5, kShadowN1A, std::nullopt},
      {"shadow/n1/b", Family::Shadow, 1, Variant::B, 1, kShadowN1B, std::nullopt},
      {"gen0/n0/a", Family::GenZero, 0, Variant::A, -1, kShadowN0AEven, kShadowN0AOdd},
      {"gen0/n0/b", Family::GenZero, 0, Variant::B, -1, kShadowN0BEven, kShadowN0BOdd},
      {"gen0/n2/a", Family::GenZero, 2, Variant::A, -1, kGenZeroN2AEven, kGenZeroN2AOdd},
      {"gen0/n2/b", Family::GenZero, 2, Variant::B, -1, kGenZeroN2BEven, kGenZeroN2BOdd},
      {"gen0/n3/a", Family::GenZero, 3, Variant::A, -1, kGenZeroN3A, std::nullopt},
      {"gen0/n3/b", Family::GenZero, 3, Variant::B, -1, kGenZeroN3B, std::nullopt},
      {"gen0/n1/a", Family::GenZero, 1, Variant::A, -1, kGenZeroN1A, std::nullopt},
      {"gen0/n1/b", Family::GenZero, 1, Variant::B, -1, kGenZeroN1B, std::nullopt},
      {"genh/n2/a", Family::GenHalf, 2, Variant::A, -1, kShadowN2AEven, kShadowN2AOdd},
      {"genh/n2/b", Family::GenHalf, 2, Variant::B, -1, kShadowN2BEven, kShadowN2BOdd},
      {"genh/n0/a", Family::GenHalf, 0, Variant::A, -1, kGenHalfN0AEven, kGenHalfN0AOdd},
      {"genh/n0/b", Family::GenHalf, 0, Variant::B, -1, kGenHalfN0BEven, kGenHalfN0BOdd},
      {"genh/n3/a", Family::GenHalf, 3, Variant::A, -1, kGenHalfN3A, std::nullopt},
      {"genh/n3/b", Family::GenHalf, 3, Variant::B, -1, kGenHalfN3B, std::nullopt},
      {"genh/n1/a", Family::GenHalf, 1, Variant::A, -1, kGenHalfN1A, std::nullopt},
      {"genh/n1/b", Family::GenHalf, 1, Variant::B, -1, kGenHalfN1B, std::nullopt},
  };
  return table;
}

std::uint64_t symbol_value(std::string_view sym, int m) {
  const bool even = m % 2 == 0;
  std::uint64_t factor = 1;
  if (sym.size() == 2 && sym[0] == '2') {
    factor = 2;
    sym.remove_prefix(1);
  }
  if (sym == "0") return 0;
  int e = -1;
  if (sym == "a" && even) e = m / 2 - 1;
  if (sym == "A" && even) e = m / 2;
  if (sym == "b" && !even) e = (m - 1) / 2;
  if (sym == "B" && !even) e = (m + 1) / 2;
  if (e < 0) throw DomainError("recipe symbol '" + std::string(sym) + "' is not defined for m=" + std::to_string(m));
  return factor << e;
}

RingVector make_vector(const RingParams& p, const std::vector<const char*>& syms, std::size_t total_len) {
  std::vector<std::int64_t> comps(total_len, 0);
  for (std::size_t i = 0; i < syms.size(); ++i) {
    comps[i] = static_cast<std::int64_t>(symbol_value(syms[i], p.exponent()) & p.mask());
  }
  return RingVector(p, comps);
}

std::vector<std::string> index_names(std::size_t count) {
  std::vector<std::string> out{"i", "j"};
  for (std::size_t p = 1; out.size() < count; ++p) out.push_back("k" + std::to_string(p));
  return out;
}

FormulaFactor parse_factor(std::string_view text, const std::vector<std::string>& names, int m) {
  FormulaFactor f{std::vector<std::int64_t>(names.size(), 0), 1, 1};
  if (auto caret = text.find('^'); caret != std::string_view::npos) {
    f.power = std::stoi(std::string(text.substr(caret + 1)));
    text = text.substr(0, caret);
  }
  if (text == "0") {
    f.scale = 0;
    return f;
  }
  const auto at = text.find('@');
  f.scale = symbol_value(text.substr(at + 1), m);
  auto expr = text.substr(0, at);
  while (!expr.empty()) {
    auto plus = expr.find('+');
    auto term = expr.substr(0, plus);
    std::int64_t coeff = 1;
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
    if (digits) coeff = std::stoll(std::string(term.substr(0, digits)));
    const auto name = term.substr(digits);
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw DomainError("unknown summation index '" + std::string(name) + "'");
    f.coefficients[static_cast<std::size_t>(it - names.begin())] += coeff;
    expr = plus == std::string_view::npos ? std::string_view{} : expr.substr(plus + 1);
  }
  return f;
}

const CaseSpec& find_case(const std::string& id) {
  for (const auto& c : case_table()) {
    if (id == c.id) return c;
  }
  throw DomainError("unknown construction case '" + id + "'");
}

}  // namespace

std::vector<std::string> all_case_ids() {
  std::vector<std::string> out;
  for (const auto& c : case_table()) out.emplace_back(c.id);
  return out;
}

ConstructionRecipe recipe_by_id(const std::string& case_id, const RingParams& p, std::size_t n) {
  const auto& spec = find_case(case_id);
  const int m = p.exponent();
  if (n % 2 == 1 && m % 2 == 1) {
    throw ImpossibleCaseError("no self-dual code of odd length " + std::to_string(n) + " exists over Z_{2^" +
                              std::to_string(m) + "}");
  }
  const auto& branch = m % 2 == 0 ? spec.even : spec.odd;
  if (!branch) throw ImpossibleCaseError(case_id + " has no printed branch for m=" + std::to_string(m));

  const std::size_t k = branch->v1.size();
  ConstructionRecipe r{case_id,
                       k,
                       make_vector(p, branch->v1, k),
                       make_vector(p, branch->v2, k),
                       {},
                       n + k,
                       TypeClaim::SelfDualOnly,
                       {}};
  for (const auto& w : branch->w) r.w.push_back(make_vector(p, w, n + k));
  if (spec.type_ii_mod8 >= 0) {
    r.claim = static_cast<int>(n % 8) == spec.type_ii_mod8 ? TypeClaim::TypeII : TypeClaim::TypeI;
  }
  r.formula.index_names = index_names(branch->ranges.size());
  for (const auto* range : branch->ranges) r.formula.ranges.push_back(symbol_value(range, m));
  for (const auto* f : branch->factors) r.formula.factors.push_back(parse_factor(f, r.formula.index_names, m));
  return r;
}

std::string case_id_for(const CosetDecomposition& dec, Variant variant) {
  const auto n = dec.length();
  const int m = dec.params().exponent();
  if (n % 2 == 1 && m % 2 == 1) {
    throw ImpossibleCaseError("no self-dual code of odd length exists over Z_{2^m} with m odd");
  }
  std::string family;
  if (dec.mode == ShadowMode::TypeIShadow) {
    family = "shadow";
  } else {
    const Element ss = dot(dec.s, dec.s);
    if (ss == 0) {
      family = "gen0";
    } else if (ss == dec.params().half()) {
      family = "genh";
    } else {
      throw DomainError("no printed construction for s.s = " + std::to_string(ss) + " (needs 0 or 2^{m-1})");
    }
  }
  return family + "/n" + std::to_string(n % 4) + (variant == Variant::A ? "/a" : "/b");
}

ConstructionRecipe recipe_for(const CosetDecomposition& dec, Variant variant) {
  return recipe_by_id(case_id_for(dec, variant), dec.params(), dec.length());
}

}  // namespace zshadow
