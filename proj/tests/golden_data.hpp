// Copyright 2026 The mvrmf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Values transcribed from published tables. Maps are flattened row-major with
// x1 as the row index, so position i holds f(assignment_of(i)).
#pragma once

#include <array>
#include <string_view>

namespace mvrmf::golden {

// Basic matrices for p = 3..7, rows separated by newlines.
inline constexpr std::array<std::string_view, 5> kBasicMatrices = {
    "1 0 0\n1 2 0\n1 1 1",
    "1 0 0 0\n1 3 0 0\n1 2 1 0\n1 1 3 3",
    "1 0 0 0 0\n1 4 0 0 0\n1 3 1 0 0\n1 2 3 4 0\n1 1 1 1 1",
    "1 0 0 0 0 0\n1 5 0 0 0 0\n1 4 1 0 0 0\n1 3 3 5 0 0\n1 2 0 2 1 0\n1 1 4 2 5 5",
    "1 0 0 0 0 0 0\n1 6 0 0 0 0 0\n1 5 1 0 0 0 0\n1 4 3 6 0 0 0\n1 3 6 3 1 0 0\n1 2 3 4 5 6 0\n1 1 1 1 1 1 1",
};

// Rank of the representative of every assignment, p = 3, n = 3.
inline constexpr std::array<int, 27> kRankMapP3N3 = {0, 1, 2, 1, 3, 4, 2, 5, 6, 1, 3, 5, 3, 7, 8, 4, 8, 9, 2, 4, 6, 5, 8, 9, 6, 9, 10};

// Ternary function with free parameters alpha (a) and beta (b).
inline constexpr std::string_view kParamFunctionP3N3 = "01210a2b110b021a102a1b10101";

// Compact spectra of the elementary functions, p = 3, n = 3; entry k is column k.
inline constexpr std::array<std::string_view, 11> kBasisP3N3 = {
    "11111111111",
    "02110020210",
    "00101120120",
    "00012210220",
    "00002010200",
    "00000210200",
    "00000010010",
    "00000002121",
    "00000000110",
    "00000000020",
    "00000000001",
};

struct OrbitRow {
  std::string_view representative;
  int rank;
  std::string_view cycle;
};

// Cyclic orbits, p = 4, n = 3.
inline constexpr std::array<OrbitRow, 24> kOrbitsP4N3 = {{
    {"000", 0, "000"},
    {"001", 1, "001-010-100"},
    {"002", 2, "002-020-200"},
    {"003", 3, "003-030-300"},
    {"011", 4, "011-110-101"},
    {"012", 5, "012-120-201"},
    {"013", 6, "013-130-301"},
    {"021", 7, "021-210-102"},
    {"022", 8, "022-220-202"},
    {"023", 9, "023-230-302"},
    {"031", 10, "031-310-103"},
    {"032", 11, "032-320-203"},
    {"033", 12, "033-330-303"},
    {"111", 13, "111"},
    {"112", 14, "112-121-211"},
    {"113", 15, "113-131-311"},
    {"122", 16, "122-221-212"},
    {"123", 17, "123-231-312"},
    {"132", 18, "132-321-213"},
    {"133", 19, "133-331-313"},
    {"222", 20, "222"},
    {"223", 21, "223-232-322"},
    {"233", 22, "233-332-323"},
    {"333", 23, "333"},
}};

// Compact spectra of the elementary functions, p = 4, n = 3, columns 1..23
// (column 0 is not tabulated). Entry k-1 is column k.
inline constexpr std::array<std::string_view, 23> kBasisP4N3 = {
    "032121010303210332212103",
    "001301312030201320023131",
    "000300300333200303320321",
    "000012320232131303330013",
    "000003102201303111202121",
    "000000100200300102100211",
    "000000032112303112102121",
    "000000001303100013313333",
    "000000000300100003010303",
    "000000000012300101200211",
    "000000000003100000310303",
    "000000000000100000010013",
    "000000000000032102230021",
    "000000000000001301120011",
    "000000000000000302220001",
    "000000000000000031132103",
    "000000000000000001030213",
    "000000000000000000130213",
    "000000000000000000030023",
    "000000000000000000001313",
    "000000000000000000000321",
    "000000000000000000000011",
    "000000000000000000000003",
};

namespace ternary {

inline constexpr std::string_view kFunction = "012101201100021110211010101";
inline constexpr std::string_view kSpectrum = "020211022212110102012202220";
inline constexpr std::string_view kCompactFunction = "01201012101";
inline constexpr std::string_view kCompactSpectrum = "02011221020";

struct ScaledColumn {
  int coefficient;
  int rank;
  std::string_view values;
};

inline constexpr std::array<ScaledColumn, 7> kForwardColumns = {{
    {1, 1, "02110020210"},
    {2, 2, "00202210210"},
    {1, 4, "00002010200"},
    {1, 6, "00000010010"},
    {2, 7, "00000001212"},
    {1, 8, "00000000110"},
    {1, 10, "00000000001"},
}};
inline constexpr std::string_view kForwardColumnsSum = "02011221020";

inline constexpr std::array<ScaledColumn, 7> kInverseColumns = {{
    {2, 1, "01220010120"},
    {1, 3, "00012210220"},
    {1, 4, "00002010200"},
    {2, 5, "00000120100"},
    {2, 6, "00000020020"},
    {1, 7, "00000002121"},
    {2, 9, "00000000010"},
}};
inline constexpr std::string_view kInverseColumnsSum = "01201012101";

}  // namespace ternary

struct QuaternaryExample {
  std::string_view function;
  std::string_view spectrum;
  std::string_view compact_function;
  std::string_view compact_spectrum;
};

// Four quaternary rotation symmetric functions, p = 4, n = 3.
inline constexpr std::array<QuaternaryExample, 4> kQuaternaryExamples = {{
    {"0123101222013120102101211202211021022201002112103210112021100003",
     "0300322201230211321220322320220002211320220130100231220010101000",
     "012301220112012102102103",
     "030022212321103220000100"},
    {"0323313022103121312111213203011023122201102103103001113021101003",
     "0102130101332123131131230232130100321230333332302133132120303103",
     "032313021012112103102103",
     "010230113312312332013303"},
    {"0123101222013120102101211213211021022211012113103210113021100003",
     "0300322201230211321220322312221202211311212032010231222211011212",
     "012301220112012113102103",
     "030022212321103212122012"},
    {"0222221222212122222121221222221221222221222212222212122221222223",
     "0222223122012133222123133113133323032113010213202113133333203300",
     "022221222112212222122223",
     "022223120113331313330200"},
}};

// Restricted compact rows over cycles c11, c12, c13, c21, c22, p = 3, n = 4.
inline constexpr std::array<std::string_view, 5> kSumCycles = {"0012", "0102", "0021", "0022", "0202"};
inline constexpr std::array<std::string_view, 6> kSumFunctions = {"11122", "00011", "21021", "20121", "12021", "02120"};
inline constexpr std::array<std::string_view, 5> kSumRows = {"11100", "02110", "02112", "00012", "11111"};
}  // namespace mvrmf::golden
