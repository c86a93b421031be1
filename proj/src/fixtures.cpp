#include "gcmforge/fixtures.hpp"

#include "gcmforge/error.hpp"

namespace gcmforge {

namespace {

BaseType base_for(int k) {
  return k == 0 ? BaseType::Finite : k == 1 ? BaseType::Affine : BaseType::Indefinite;
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;
  auto add = [&out](const char* name, Rows rows, int k, std::optional<bool> compact,
                    const char* source) {
    Gcm m = validate_gcm(rows);
    const int n = m.dim();
    out.push_back({name, std::move(m), TypeLabel{k, n, compact.value_or(k == 0), base_for(k)},
                   compact, source});
  };
  add("H_1_2_3", {
      {2, -1, 0},
      {-3, 2, -3},
      {0, -1, 2}},
      2, std::nullopt, "hyperbolic example paired with B_2");
  add("B_2", {
      {2, -1},
      {-3, 2}},
      0, true, "finite principal submatrix of H_1_2_3");
  add("A2_example35", {
      {2, -2, 0, -1},
      {-1, 2, -1, 0},
      {0, -1, 2, -1},
      {-1, 0, -2, 2}},
      2, true, "worked symmetrization example; also H_1_4_4 of the compact case");
  add("B_3", {
      {2, -1, 0},
      {-1, 2, -1},
      {0, -2, 2}},
      0, true, "compact case, principal submatrix paired with H_1_4_4");
  add("B_4", {
      {2, -1, 0, 0},
      {-1, 2, -1, 0},
      {0, -1, 2, -1},
      {0, 0, -2, 2}},
      0, true, "compact case, one-vertex extension of B_3");
  add("A1_compact_5x5", {
      {2, -2, 0, -1, 0},
      {-1, 2, -1, 0, 0},
      {0, -1, 2, -1, -1},
      {-1, 0, -2, 2, 0},
      {0, 0, -1, 0, 2}},
      3, true, "compact case, constructed 5x5 matrix claimed compact N_3");
  add("H_2_79_10", {
      {2, -1, 0, 0, 0, 0, 0, 0, 0, 0},
      {-1, 2, -1, 0, 0, 0, 0, 0, 0, 0},
      {0, -1, 2, -1, -1, 0, 0, 0, 0, 0},
      {0, 0, -1, 2, 0, 0, 0, 0, 0, 0},
      {0, 0, -1, 0, 2, -1, 0, 0, 0, 0},
      {0, 0, 0, 0, -1, 2, -1, 0, 0, 0},
      {0, 0, 0, 0, 0, -1, 2, -1, 0, 0},
      {0, 0, 0, 0, 0, 0, -1, 2, -1, 0},
      {0, 0, 0, 0, 0, 0, 0, -1, 2, -2},
      {0, 0, 0, 0, 0, 0, 0, 0, -1, 2}},
      2, false, "non-compact case, seed paired with B1_9");
  add("B1_9", {
      {2, -1, 0, 0, 0, 0, 0, 0, 0},
      {-1, 2, -1, 0, 0, 0, 0, 0, 0},
      {0, -1, 2, -1, 0, 0, 0, 0, 0},
      {0, 0, -1, 2, -1, 0, 0, 0, 0},
      {0, 0, 0, -1, 2, -1, 0, 0, 0},
      {0, 0, 0, 0, -1, 2, -1, 0, 0},
      {0, 0, 0, 0, 0, -1, 2, -1, 0},
      {0, 0, 0, 0, 0, 0, -1, 2, -2},
      {0, 0, 0, 0, 0, 0, 0, -1, 2}},
      1, false, "non-compact case, affine submatrix of H_2_79_10; row 3 printed with eight entries, trailing 0 restored");
  add("H_2_78_10", {
      {2, -1, 0, 0, 0, 0, 0, 0, 0, 0},
      {-1, 2, -1, 0, 0, 0, 0, 0, 0, 0},
      {0, -1, 2, -1, -1, 0, 0, 0, 0, 0},
      {0, 0, -1, 2, 0, 0, 0, 0, 0, 0},
      {0, 0, -1, 0, 2, -1, 0, 0, 0, 0},
      {0, 0, 0, 0, -1, 2, -1, 0, 0, 0},
      {0, 0, 0, 0, 0, -1, 2, 0, -1, 0},
      {0, 0, 0, 0, 0, 0, 0, 2, -1, 0},
      {0, 0, 0, 0, 0, 0, -1, -1, 2, -1},
      {0, 0, 0, 0, 0, 0, 0, 0, -1, 2}},
      2, false, "non-compact case, seed paired with D1_9");
  add("D1_9", {
      {2, -1, 0, 0, 0, 0, 0, 0, 0},
      {-1, 2, -1, 0, 0, 0, 0, 0, 0},
      {0, -1, 2, -1, 0, 0, 0, 0, 0},
      {0, 0, -1, 2, -1, 0, 0, 0, 0},
      {0, 0, 0, -1, 2, -1, 0, 0, 0},
      {0, 0, 0, 0, -1, 2, 0, -1, 0},
      {0, 0, 0, 0, 0, 0, 2, -1, 0},
      {0, 0, 0, 0, 0, -1, -1, 2, -1},
      {0, 0, 0, 0, 0, 0, 0, -1, 2}},
      1, false, "non-compact case, affine submatrix of H_2_78_10; row 3 printed with eight entries, trailing 0 restored");
  add("H_2_77_10", {
      {2, -1, 0, 0, 0, 0, 0, 0, 0, 0},
      {-1, 2, -1, 0, 0, 0, 0, 0, 0, 0},
      {0, -1, 2, -1, 0, 0, 0, 0, 0, 0},
      {0, 0, -1, 2, -1, 0, 0, 0, 0, 0},
      {0, 0, 0, -1, 2, -1, 0, 0, 0, 0},
      {0, 0, 0, 0, -1, 2, -1, 0, 0, 0},
      {0, 0, 0, 0, 0, -1, 2, -1, -1, 0},
      {0, 0, 0, 0, 0, 0, -1, 2, 0, 0},
      {0, 0, 0, 0, 0, 0, -1, 0, 2, -1},
      {0, 0, 0, 0, 0, 0, 0, 0, -1, 2}},
      2, false, "non-compact case, seed paired with E1_9 (displayed twice)");
  add("E1_9", {
      {2, -1, 0, 0, 0, 0, 0, 0, 0},
      {-1, 2, -1, 0, 0, 0, 0, 0, 0},
      {0, -1, 2, -1, 0, 0, 0, 0, 0},
      {0, 0, -1, 2, -1, 0, 0, 0, 0},
      {0, 0, 0, -1, 2, -1, 0, 0, 0},
      {0, 0, 0, 0, -1, 2, -1, -1, 0},
      {0, 0, 0, 0, 0, -1, 2, 0, 0},
      {0, 0, 0, 0, 0, -1, 0, 2, -1},
      {0, 0, 0, 0, 0, 0, 0, -1, 2}},
      1, false, "non-compact case, affine submatrix of H_2_77_10 (displayed twice)");
  add("H_2_74_9", {
      {2, -1, 0, 0, 0, 0, 0, 0, 0},
      {-1, 2, -1, 0, 0, 0, 0, 0, 0},
      {0, -1, 2, -1, 0, 0, 0, 0, 0},
      {0, 0, -1, 2, -1, -1, 0, 0, 0},
      {0, 0, 0, -1, 2, 0, 0, 0, 0},
      {0, 0, 0, -1, 0, 2, -1, 0, 0},
      {0, 0, 0, 0, 0, -1, 2, -1, 0},
      {0, 0, 0, 0, 0, 0, -1, 2, -1},
      {0, 0, 0, 0, 0, 0, 0, -1, 2}},
      2, false, "supremum construction, seed paired with E1_7");
  add("E1_7", {
      {2, -1, 0, 0, 0, 0, 0, 0},
      {-1, 2, -1, 0, 0, 0, 0, 0},
      {0, -1, 2, -1, -1, 0, 0, 0},
      {0, 0, -1, 2, 0, 0, 0, 0},
      {0, 0, -1, 0, 2, -1, 0, 0},
      {0, 0, 0, 0, -1, 2, -1, 0},
      {0, 0, 0, 0, 0, -1, 2, -1},
      {0, 0, 0, 0, 0, 0, -1, 2}},
      1, false, "supremum construction, affine submatrix of H_2_74_9");
  add("final_10x10", {
      {2, -1, 0, 0, 0, 0, 0, 0, 0, 0},
      {-1, 2, -1, 0, 0, 0, 0, 0, 0, 0},
      {0, -1, 2, -1, 0, 0, 0, 0, 0, 0},
      {0, 0, -1, 2, -1, -1, 0, 0, 0, 0},
      {0, 0, 0, -1, 2, 0, 0, 0, 0, 0},
      {0, 0, 0, -1, 0, 2, -1, 0, 0, 0},
      {0, 0, 0, 0, 0, -1, 2, -1, 0, 0},
      {0, 0, 0, 0, 0, 0, -1, 2, -1, 0},
      {0, 0, 0, 0, 0, 0, 0, -1, 2, -1},
      {0, 0, 0, 0, 0, 0, 0, 0, -1, 2}},
      3, false, "supremum construction, H_2_74_9 extended by a(9,10) = a(10,9) = -1");
  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> corpus = build();
  return corpus;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw Error(Errc::IndexOutOfRange, "no fixture named " + name);
}

FixtureCheck check_fixture(const Fixture& f) {
  FixtureCheck check{&f, nk_type(f.matrix), false};
  check.pass = check.actual.k == f.expected.k && check.actual.n == f.expected.n &&
               check.actual.base == f.expected.base &&
               (!f.expected_compact || check.actual.compact == *f.expected_compact);
  return check;
}

}  // namespace gcmforge
