// SPDX-License-Identifier: Apache-2.0
//
// Four-decimal reference values on the -10..10 dB grid and the
// exhaustive quick-look-in term-count listings.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace sstkf::reference {

// Exact coefficients of eps^0, eps^1, ... for the main-decoder error probabilities.
inline const std::vector<std::int64_t> kC1Joint{0, 4, -22, 58, -80, 56, -16};
inline const std::vector<std::int64_t> kC1Alpha1{0, 5, -20, 40, -40, 16};
inline const std::vector<std::int64_t> kC1Alpha2{0, 6, -30, 80, -120, 96, -32};
inline const std::vector<std::int64_t> kC2Joint{0, 9, -123, 942, -4700, 16464, -42128, 80224, -114048, 119680, -90112, 46080, -14336, 2048};
inline const std::vector<std::int64_t> kC2Alpha1{0, 12, -132, 880, -3960, 12672, -29568, 50688, -63360, 56320, -33792, 12288, -2048};
inline const std::vector<std::int64_t> kC2Alpha2{0, 13, -156, 1144, -5720, 20592, -54912, 109824, -164736, 183040, -146432, 79872, -26624, 4096};

// dB, alpha1, 4 alpha1 (1 - alpha1), alpha2, 4 alpha2 (1 - alpha2), theta12, tr(Sigma_x)/2
inline constexpr std::array<std::array<double, 7>, 21> kC1SigmaX{{
    {{-10, 0.4995, 1.0000, 0.4999, 1.0000, 0.0038, 1.0000}},
    {{-9, 0.4992, 1.0000, 0.4998, 1.0000, 0.0053, 1.0000}},
    {{-8, 0.4986, 1.0000, 0.4996, 1.0000, 0.0074, 1.0000}},
    {{-7, 0.4976, 1.0000, 0.4992, 1.0000, 0.0102, 1.0000}},
    {{-6, 0.4958, 0.9999, 0.4984, 1.0000, 0.0142, 1.0000}},
    {{-5, 0.4930, 0.9998, 0.4970, 1.0000, 0.0193, 0.9999}},
    {{-4, 0.4883, 0.9995, 0.4945, 0.9999, 0.0262, 0.9997}},
    {{-3, 0.4808, 0.9985, 0.4900, 0.9996, 0.0352, 0.9991}},
    {{-2, 0.4691, 0.9962, 0.4823, 0.9987, 0.0465, 0.9975}},
    {{-1, 0.4515, 0.9906, 0.4696, 0.9963, 0.0602, 0.9935}},
    {{0, 0.4259, 0.9780, 0.4494, 0.9898, 0.0758, 0.9839}},
    {{1, 0.3904, 0.9520, 0.4191, 0.9738, 0.0917, 0.9629}},
    {{2, 0.3442, 0.9029, 0.3766, 0.9391, 0.1050, 0.9210}},
    {{3, 0.2879, 0.8201, 0.3213, 0.8723, 0.1116, 0.8462}},
    {{4, 0.2255, 0.6986, 0.2565, 0.7628, 0.1076, 0.7307}},
    {{5, 0.1621, 0.5433, 0.1876, 0.6096, 0.0921, 0.5765}},
    {{6, 0.1049, 0.3756, 0.1231, 0.4318, 0.0681, 0.4037}},
    {{7, 0.0599, 0.2252, 0.0710, 0.2638, 0.0427, 0.2445}},
    {{8, 0.0293, 0.1138, 0.0349, 0.1347, 0.0222, 0.1243}},
    {{9, 0.0120, 0.0474, 0.0143, 0.0564, 0.0094, 0.0519}},
    {{10, 0.0039, 0.0155, 0.0047, 0.0187, 0.0031, 0.0171}},
}};

// same columns
inline constexpr std::array<std::array<double, 7>, 21> kC2SigmaX{{
    {{-10, 0.5000, 1.0000, 0.5000, 1.0000, 0.0000, 1.0000}},
    {{-9, 0.5000, 1.0000, 0.5000, 1.0000, 0.0000, 1.0000}},
    {{-8, 0.5000, 1.0000, 0.5000, 1.0000, 0.0001, 1.0000}},
    {{-7, 0.5000, 1.0000, 0.5000, 1.0000, 0.0001, 1.0000}},
    {{-6, 0.5000, 1.0000, 0.5000, 1.0000, 0.0003, 1.0000}},
    {{-5, 0.5000, 1.0000, 0.5000, 1.0000, 0.0006, 1.0000}},
    {{-4, 0.4999, 1.0000, 0.5000, 1.0000, 0.0014, 1.0000}},
    {{-3, 0.4998, 1.0000, 0.4999, 1.0000, 0.0026, 1.0000}},
    {{-2, 0.4994, 1.0000, 0.4996, 1.0000, 0.0051, 1.0000}},
    {{-1, 0.4981, 1.0000, 0.4988, 1.0000, 0.0095, 1.0000}},
    {{0, 0.4949, 0.9999, 0.4965, 1.0000, 0.0173, 1.0000}},
    {{1, 0.4869, 0.9993, 0.4903, 0.9996, 0.0298, 0.9995}},
    {{2, 0.4695, 0.9963, 0.4759, 0.9977, 0.0482, 0.9970}},
    {{3, 0.4362, 0.9837, 0.4462, 0.9884, 0.0718, 0.9861}},
    {{4, 0.3814, 0.9437, 0.3948, 0.9557, 0.0955, 0.9497}},
    {{5, 0.3048, 0.8476, 0.3195, 0.8697, 0.1092, 0.8587}},
    {{6, 0.2159, 0.6771, 0.2289, 0.7060, 0.1028, 0.6916}},
    {{7, 0.1319, 0.4580, 0.1412, 0.4851, 0.0770, 0.4716}},
    {{8, 0.0674, 0.2514, 0.0726, 0.2693, 0.0449, 0.2604}},
    {{9, 0.0283, 0.1100, 0.0306, 0.1187, 0.0202, 0.1144}},
    {{10, 0.0093, 0.0369, 0.0100, 0.0396, 0.0069, 0.0383}},
}};

// dB, rho, lambda~1, lambda~2, rho lambda~1, rho lambda~max
inline constexpr std::array<std::array<double, 6>, 21> kC1Eigen{{
    {{-10, 0.1000, 0.8965, 0.9217, 0.0897, 0.0922}},
    {{-9, 0.1259, 0.8715, 0.9049, 0.1097, 0.1139}},
    {{-8, 0.1585, 0.8410, 0.8852, 0.1333, 0.1403}},
    {{-7, 0.1995, 0.8051, 0.8619, 0.1606, 0.1719}},
    {{-6, 0.2512, 0.7625, 0.8351, 0.1915, 0.2098}},
    {{-5, 0.3162, 0.7143, 0.8035, 0.2259, 0.2541}},
    {{-4, 0.3981, 0.6598, 0.7672, 0.2627, 0.3054}},
    {{-3, 0.5012, 0.6001, 0.7255, 0.3008, 0.3636}},
    {{-2, 0.6310, 0.5367, 0.6775, 0.3387, 0.4275}},
    {{-1, 0.7943, 0.4711, 0.6233, 0.3742, 0.4951}},
    {{0, 1.0000, 0.4050, 0.5628, 0.4050, 0.5628}},
    {{1, 1.2589, 0.3405, 0.4973, 0.4287, 0.6261}},
    {{2, 1.5849, 0.2792, 0.4290, 0.4425, 0.6799}},
    {{3, 1.9953, 0.2223, 0.3611, 0.4436, 0.7205}},
    {{4, 2.5119, 0.1710, 0.2964, 0.4295, 0.7445}},
    {{5, 3.1623, 0.1252, 0.2368, 0.3959, 0.7488}},
    {{6, 3.9811, 0.0858, 0.1830, 0.3416, 0.7285}},
    {{7, 5.0119, 0.0534, 0.1346, 0.2676, 0.6746}},
    {{8, 6.3096, 0.0288, 0.0908, 0.1817, 0.5729}},
    {{9, 7.9433, 0.0128, 0.0522, 0.1017, 0.4146}},
    {{10, 10.0000, 0.0045, 0.0227, 0.0450, 0.2270}},
}};

// same columns
inline constexpr std::array<std::array<double, 6>, 21> kC2Eigen{{
    {{-10, 0.1000, 0.9091, 0.9091, 0.0909, 0.0909}},
    {{-9, 0.1259, 0.8881, 0.8881, 0.1118, 0.1118}},
    {{-8, 0.1585, 0.8629, 0.8635, 0.1368, 0.1369}},
    {{-7, 0.1995, 0.8334, 0.8340, 0.1663, 0.1664}},
    {{-6, 0.2512, 0.7984, 0.8000, 0.2006, 0.2010}},
    {{-5, 0.3162, 0.7584, 0.7612, 0.2398, 0.2407}},
    {{-4, 0.3981, 0.7124, 0.7182, 0.2836, 0.2859}},
    {{-3, 0.5012, 0.6615, 0.6707, 0.3315, 0.3362}},
    {{-2, 0.6310, 0.6054, 0.6208, 0.3820, 0.3917}},
    {{-1, 0.7943, 0.5453, 0.5689, 0.4331, 0.4519}},
    {{0, 1.0000, 0.4821, 0.5167, 0.4821, 0.5167}},
    {{1, 1.2589, 0.4175, 0.4645, 0.5256, 0.5848}},
    {{2, 1.5849, 0.3535, 0.4123, 0.5603, 0.6535}},
    {{3, 1.9953, 0.2919, 0.3597, 0.5824, 0.7177}},
    {{4, 2.5119, 0.2340, 0.3064, 0.5878, 0.7696}},
    {{5, 3.1623, 0.1808, 0.2542, 0.5717, 0.8039}},
    {{6, 3.9811, 0.1324, 0.2046, 0.5271, 0.8145}},
    {{7, 5.0119, 0.0898, 0.1588, 0.4501, 0.7959}},
    {{8, 6.3096, 0.0534, 0.1164, 0.3369, 0.7344}},
    {{9, 7.9433, 0.0265, 0.0765, 0.2105, 0.6077}},
    {{10, 10.0000, 0.0097, 0.0397, 0.0970, 0.3970}},
}};

// dB, rho tr(Sigma_c)/2, tr(Sigma_c)/2, 1/(1+rho), log|I+rho Sigma_x|/(2 rho), log(1+rho)/rho, tr(Sigma_x)/2
inline constexpr std::array<std::array<double, 7>, 21> kC1Bounds{{
    {{-10, 0.0909, 0.9091, 0.9091, 0.9531, 0.9531, 1.0000}},
    {{-9, 0.1118, 0.8882, 0.8882, 0.9419, 0.9419, 1.0000}},
    {{-8, 0.1368, 0.8631, 0.8632, 0.9282, 0.9282, 1.0000}},
    {{-7, 0.1663, 0.8335, 0.8337, 0.9117, 0.9118, 1.0000}},
    {{-6, 0.2007, 0.7988, 0.7992, 0.8918, 0.8921, 1.0000}},
    {{-5, 0.2400, 0.7589, 0.7597, 0.8683, 0.8689, 0.9999}},
    {{-4, 0.2840, 0.7135, 0.7153, 0.8404, 0.8418, 0.9997}},
    {{-3, 0.3322, 0.6628, 0.6661, 0.8077, 0.8106, 0.9991}},
    {{-2, 0.3831, 0.6071, 0.6131, 0.7696, 0.7753, 0.9975}},
    {{-1, 0.4346, 0.5472, 0.5573, 0.7251, 0.7360, 0.9935}},
    {{0, 0.4839, 0.4839, 0.5000, 0.6732, 0.6931, 0.9839}},
    {{1, 0.5274, 0.4189, 0.4427, 0.6130, 0.6473, 0.9629}},
    {{2, 0.5612, 0.3541, 0.3869, 0.5438, 0.5992, 0.9210}},
    {{3, 0.5820, 0.2917, 0.3339, 0.4664, 0.5498, 0.8462}},
    {{4, 0.5870, 0.2337, 0.2847, 0.3834, 0.5001, 0.7307}},
    {{5, 0.5724, 0.1810, 0.2403, 0.2984, 0.4510, 0.5765}},
    {{6, 0.5351, 0.1344, 0.2008, 0.2166, 0.4033, 0.4037}},
    {{7, 0.4711, 0.0940, 0.1663, 0.1434, 0.3579, 0.2445}},
    {{8, 0.3773, 0.0598, 0.1368, 0.0834, 0.3153, 0.1243}},
    {{9, 0.2582, 0.0325, 0.1118, 0.0405, 0.2758, 0.0519}},
    {{10, 0.1360, 0.0136, 0.0909, 0.0152, 0.2398, 0.0171}},
}};

// same columns
inline constexpr std::array<std::array<double, 7>, 21> kC2Bounds{{
    {{-10, 0.0909, 0.9091, 0.9091, 0.9531, 0.9531, 1.0000}},
    {{-9, 0.1118, 0.8881, 0.8882, 0.9419, 0.9419, 1.0000}},
    {{-8, 0.1368, 0.8632, 0.8632, 0.9282, 0.9282, 1.0000}},
    {{-7, 0.1663, 0.8337, 0.8337, 0.9118, 0.9118, 1.0000}},
    {{-6, 0.2008, 0.7992, 0.7992, 0.8921, 0.8921, 1.0000}},
    {{-5, 0.2403, 0.7598, 0.7597, 0.8689, 0.8689, 1.0000}},
    {{-4, 0.2848, 0.7153, 0.7153, 0.8418, 0.8418, 1.0000}},
    {{-3, 0.3339, 0.6661, 0.6661, 0.8106, 0.8106, 1.0000}},
    {{-2, 0.3869, 0.6131, 0.6131, 0.7752, 0.7753, 1.0000}},
    {{-1, 0.4425, 0.5571, 0.5573, 0.7358, 0.7360, 1.0000}},
    {{0, 0.4994, 0.4994, 0.5000, 0.6925, 0.6931, 1.0000}},
    {{1, 0.5552, 0.4410, 0.4427, 0.6453, 0.6473, 0.9995}},
    {{2, 0.6069, 0.3829, 0.3869, 0.5936, 0.5992, 0.9970}},
    {{3, 0.6501, 0.3258, 0.3339, 0.5356, 0.5498, 0.9861}},
    {{4, 0.6787, 0.2702, 0.2847, 0.4688, 0.5001, 0.9497}},
    {{5, 0.6878, 0.2175, 0.2403, 0.3915, 0.4510, 0.8587}},
    {{6, 0.6708, 0.1685, 0.2008, 0.3057, 0.4033, 0.6916}},
    {{7, 0.6230, 0.1243, 0.1663, 0.2184, 0.3579, 0.4716}},
    {{8, 0.5357, 0.0849, 0.1368, 0.1378, 0.3153, 0.2604}},
    {{9, 0.4091, 0.0515, 0.1118, 0.0737, 0.2758, 0.1144}},
    {{10, 0.2470, 0.0247, 0.0909, 0.0304, 0.2398, 0.0383}},
}};

// dB, beta1, 4 beta1 (1 - beta1), beta2, 4 beta2 (1 - beta2), tr(Sigma_x')/2
inline constexpr std::array<std::array<double, 6>, 21> kC1Qli{{
    {{-10, 0.4999, 1.0000, 0.4981, 1.0000, 1.0000}},
    {{-9, 0.4998, 1.0000, 0.4970, 1.0000, 1.0000}},
    {{-8, 0.4996, 1.0000, 0.4954, 0.9999, 1.0000}},
    {{-7, 0.4992, 1.0000, 0.4929, 0.9998, 0.9999}},
    {{-6, 0.4984, 1.0000, 0.4892, 0.9995, 0.9998}},
    {{-5, 0.4970, 1.0000, 0.4835, 0.9989, 0.9995}},
    {{-4, 0.4945, 0.9999, 0.4752, 0.9975, 0.9987}},
    {{-3, 0.4900, 0.9996, 0.4632, 0.9946, 0.9971}},
    {{-2, 0.4823, 0.9987, 0.4461, 0.9884, 0.9936}},
    {{-1, 0.4696, 0.9963, 0.4226, 0.9760, 0.9862}},
    {{0, 0.4494, 0.9898, 0.3914, 0.9528, 0.9713}},
    {{1, 0.4191, 0.9738, 0.3515, 0.9118, 0.9428}},
    {{2, 0.3766, 0.9391, 0.3033, 0.8452, 0.8922}},
    {{3, 0.3213, 0.8723, 0.2482, 0.7464, 0.8094}},
    {{4, 0.2565, 0.7628, 0.1905, 0.6168, 0.6898}},
    {{5, 0.1876, 0.6096, 0.1346, 0.4659, 0.5378}},
    {{6, 0.1231, 0.4318, 0.0858, 0.3138, 0.3728}},
    {{7, 0.0710, 0.2638, 0.0485, 0.1846, 0.2242}},
    {{8, 0.0349, 0.1347, 0.0236, 0.0922, 0.1135}},
    {{9, 0.0143, 0.0564, 0.0096, 0.0380, 0.0472}},
    {{10, 0.0047, 0.0187, 0.0031, 0.0124, 0.0156}},
}};

// same columns
inline constexpr std::array<std::array<double, 6>, 21> kC2Qli{{
    {{-10, 0.5000, 1.0000, 0.5000, 1.0000, 1.0000}},
    {{-9, 0.5000, 1.0000, 0.5000, 1.0000, 1.0000}},
    {{-8, 0.5000, 1.0000, 0.5000, 1.0000, 1.0000}},
    {{-7, 0.4999, 1.0000, 0.5000, 1.0000, 1.0000}},
    {{-6, 0.4998, 1.0000, 0.5000, 1.0000, 1.0000}},
    {{-5, 0.4995, 1.0000, 0.4999, 1.0000, 1.0000}},
    {{-4, 0.4988, 1.0000, 0.4997, 1.0000, 1.0000}},
    {{-3, 0.4973, 1.0000, 0.4993, 1.0000, 1.0000}},
    {{-2, 0.4942, 0.9999, 0.4981, 1.0000, 1.0000}},
    {{-1, 0.4880, 0.9994, 0.4953, 0.9999, 0.9997}},
    {{0, 0.4764, 0.9978, 0.4890, 0.9995, 0.9987}},
    {{1, 0.4559, 0.9922, 0.4760, 0.9977, 0.9950}},
    {{2, 0.4226, 0.9760, 0.4515, 0.9906, 0.9833}},
    {{3, 0.3732, 0.9357, 0.4100, 0.9676, 0.9517}},
    {{4, 0.3084, 0.8532, 0.3493, 0.9092, 0.8812}},
    {{5, 0.2329, 0.7146, 0.2717, 0.7915, 0.7531}},
    {{6, 0.1570, 0.5294, 0.1878, 0.6101, 0.5698}},
    {{7, 0.0923, 0.3351, 0.1126, 0.3997, 0.3674}},
    {{8, 0.0460, 0.1755, 0.0569, 0.2146, 0.1951}},
    {{9, 0.0190, 0.0746, 0.0237, 0.0926, 0.0836}},
    {{10, 0.0062, 0.0246, 0.0078, 0.0310, 0.0278}},
}};

struct TermCountRow {
    unsigned c_bits;  // c1 is the most significant bit
    int m1a, m2a, m1b, m2b;
    bool bold;
};

inline constexpr std::array<TermCountRow, 8> kQliNu5{{
    {0, 6, 7, 4, 6, false},
    {1, 9, 10, 6, 8, false},
    {2, 9, 10, 6, 8, false},
    {3, 10, 11, 8, 10, false},
    {4, 11, 10, 6, 8, false},
    {5, 10, 9, 8, 10, false},
    {6, 10, 9, 8, 10, false},
    {7, 11, 10, 10, 12, true},
}};

inline constexpr std::array<TermCountRow, 16> kQliNu6{{
    {0, 6, 7, 4, 6, false},
    {1, 9, 10, 6, 8, false},
    {2, 11, 12, 6, 8, false},
    {3, 12, 13, 8, 10, false},
    {4, 7, 8, 6, 8, false},
    {5, 12, 13, 8, 10, false},
    {6, 10, 11, 8, 10, false},
    {7, 13, 14, 10, 12, false},
    {8, 11, 10, 6, 8, false},
    {9, 14, 13, 8, 10, false},
    {10, 12, 11, 8, 10, false},
    {11, 13, 12, 10, 12, false},
    {12, 8, 7, 8, 10, true},
    {13, 13, 12, 10, 12, false},
    {14, 11, 10, 10, 12, true},
    {15, 14, 13, 12, 14, false},
}};

}  // namespace sstkf::reference
