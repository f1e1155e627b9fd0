// Generated by tools/gen_df_tables.py --reps 200000 --seed 20080101. Do not edit.
#include "unit_root_tables.hpp"

namespace tsecon::detail {

const std::array<int, kDfSizes> kDfSampleSizes = {25, 50, 100, 250, 500, 1000, 2500};

const std::array<double, kDfProbs> kDfProbabilities = {
    0.0010, 0.0025, 0.0050, 0.0075, 0.0100, 0.0200, 0.0300, 0.0400,
    0.0500, 0.0600, 0.0700, 0.0800, 0.0900, 0.1000, 0.1100, 0.1200,
    0.1300, 0.1400, 0.1500, 0.1600, 0.1700, 0.1800, 0.1900, 0.2000,
    0.2100, 0.2200, 0.2300, 0.2400, 0.2500, 0.2600, 0.2700, 0.2800,
    0.2900, 0.3000, 0.3100, 0.3200, 0.3300, 0.3400, 0.3500, 0.3600,
    0.3700, 0.3800, 0.3900, 0.4000, 0.4100, 0.4200, 0.4300, 0.4400,
    0.4500, 0.4600, 0.4700, 0.4800, 0.4900, 0.5000, 0.5100, 0.5200,
    0.5300, 0.5400, 0.5500, 0.5600, 0.5700, 0.5800, 0.5900, 0.6000,
    0.6100, 0.6200, 0.6300, 0.6400, 0.6500, 0.6600, 0.6700, 0.6800,
    0.6900, 0.7000, 0.7100, 0.7200, 0.7300, 0.7400, 0.7500, 0.7600,
    0.7700, 0.7800, 0.7900, 0.8000, 0.8100, 0.8200, 0.8300, 0.8400,
    0.8500, 0.8600, 0.8700, 0.8800, 0.8900, 0.9000, 0.9100, 0.9200,
    0.9300, 0.9400, 0.9500, 0.9600, 0.9700, 0.9800, 0.9900, 0.9925,
    0.9950, 0.9975, 0.9990,
};

const std::array<DfQuantileTable, 3> kDfQuantiles = {{
    // none
    {{
        {  // n = 25
            -3.53219, -3.20824, -2.92596, -2.76957, -2.65536, -2.36175,
            -2.18628, -2.05518, -1.95237, -1.86324, -1.78967, -1.72444,
            -1.66283, -1.60735, -1.55580, -1.51120, -1.46537, -1.42253,
            -1.38406, -1.34626, -1.31110, -1.27692, -1.24466, -1.21345,
            -1.18297, -1.15317, -1.12333, -1.09484, -1.06761, -1.04048,
            -1.01437, -0.98870, -0.96256, -0.93818, -0.91415, -0.89055,
            -0.86646, -0.84212, -0.81965, -0.79641, -0.77319, -0.75041,
            -0.72818, -0.70579, -0.68367, -0.66119, -0.63880, -0.61618,
            -0.59321, -0.56987, -0.54701, -0.52382, -0.49934, -0.47489,
            -0.45042, -0.42434, -0.39836, -0.37264, -0.34634, -0.31963,
            -0.29278, -0.26591, -0.23841, -0.21089, -0.18281, -0.15397,
            -0.12598, -0.09849, -0.06873, -0.03924, -0.00874, 0.02070,
            0.05087, 0.08264, 0.11440, 0.14797, 0.18077, 0.21492,
            0.24921, 0.28436, 0.31997, 0.35730, 0.39417, 0.43337,
            0.47432, 0.51577, 0.56036, 0.60511, 0.65207, 0.70147,
            0.75585, 0.81130, 0.86768, 0.92967, 0.99669, 1.06778,
            1.14635, 1.23236, 1.33262, 1.45574, 1.60510, 1.80662,
            2.13997, 2.26023, 2.44153, 2.72378, 3.12408,
        },
        {  // n = 50
            -3.44257, -3.10833, -2.85965, -2.70637, -2.59661, -2.33676,
            -2.16390, -2.04045, -1.94042, -1.85752, -1.78389, -1.72043,
            -1.66257, -1.60863, -1.55819, -1.51176, -1.46706, -1.42647,
            -1.38865, -1.35219, -1.31822, -1.28401, -1.25104, -1.21962,
            -1.18881, -1.15923, -1.13070, -1.10350, -1.07675, -1.04999,
            -1.02423, -0.99819, -0.97237, -0.94770, -0.92371, -0.90065,
            -0.87655, -0.85297, -0.83024, -0.80769, -0.78426, -0.76247,
            -0.73984, -0.71749, -0.69509, -0.67274, -0.65016, -0.62737,
            -0.60469, -0.58122, -0.55819, -0.53329, -0.51005, -0.48641,
            -0.46234, -0.43760, -0.41161, -0.38551, -0.35953, -0.33432,
            -0.30733, -0.27964, -0.25227, -0.22526, -0.19658, -0.16969,
            -0.14129, -0.11152, -0.08274, -0.05260, -0.02303, 0.00770,
            0.03910, 0.07101, 0.10285, 0.13622, 0.16940, 0.20359,
            0.23740, 0.27228, 0.30795, 0.34467, 0.38131, 0.42036,
            0.45908, 0.50063, 0.54355, 0.58678, 0.63524, 0.68161,
            0.73483, 0.78740, 0.84680, 0.90825, 0.97376, 1.04542,
            1.12478, 1.20959, 1.30838, 1.42522, 1.56699, 1.76585,
            2.07752, 2.18471, 2.35456, 2.62061, 2.91153,
        },
        {  // n = 100
            -3.37485, -3.08181, -2.84469, -2.69546, -2.59275, -2.32697,
            -2.16246, -2.04109, -1.94074, -1.85791, -1.78396, -1.72215,
            -1.66558, -1.61163, -1.56378, -1.51864, -1.47479, -1.43352,
            -1.39561, -1.35741, -1.32280, -1.28914, -1.25644, -1.22516,
            -1.19643, -1.16680, -1.13872, -1.11179, -1.08519, -1.05888,
            -1.03258, -1.00682, -0.98192, -0.95799, -0.93317, -0.90884,
            -0.88459, -0.86167, -0.83912, -0.81625, -0.79273, -0.77015,
            -0.74776, -0.72602, -0.70357, -0.68141, -0.65828, -0.63638,
            -0.61406, -0.58958, -0.56566, -0.54220, -0.51782, -0.49369,
            -0.47004, -0.44459, -0.42030, -0.39401, -0.36837, -0.34202,
            -0.31561, -0.28929, -0.26164, -0.23463, -0.20710, -0.17826,
            -0.15005, -0.12048, -0.09165, -0.06236, -0.03197, -0.00168,
            0.02867, 0.05983, 0.09368, 0.12586, 0.15862, 0.19291,
            0.22660, 0.26244, 0.29831, 0.33631, 0.37409, 0.41321,
            0.45251, 0.49498, 0.53835, 0.58211, 0.62768, 0.67645,
            0.72770, 0.78195, 0.83893, 0.89908, 0.96234, 1.03330,
            1.10985, 1.19726, 1.29426, 1.40927, 1.54729, 1.73267,
            2.04498, 2.16459, 2.33231, 2.60492, 2.92245,
        },
        {  // n = 250
            -3.31010, -3.02994, -2.81082, -2.67018, -2.57154, -2.32193,
            -2.15674, -2.03453, -1.94049, -1.85492, -1.78386, -1.72093,
            -1.66506, -1.61430, -1.56564, -1.52100, -1.47732, -1.43745,
            -1.40021, -1.36434, -1.33055, -1.29731, -1.26519, -1.23363,
            -1.20336, -1.17341, -1.14542, -1.11809, -1.09089, -1.06448,
            -1.03909, -1.01339, -0.98766, -0.96254, -0.93824, -0.91525,
            -0.89082, -0.86749, -0.84480, -0.82205, -0.79871, -0.77583,
            -0.75271, -0.73002, -0.70700, -0.68336, -0.66036, -0.63878,
            -0.61557, -0.59262, -0.56916, -0.54513, -0.52176, -0.49694,
            -0.47246, -0.44866, -0.42456, -0.39950, -0.37339, -0.34725,
            -0.31988, -0.29293, -0.26534, -0.23799, -0.20998, -0.18211,
            -0.15236, -0.12350, -0.09411, -0.06462, -0.03561, -0.00486,
            0.02569, 0.05709, 0.08790, 0.11964, 0.15329, 0.18590,
            0.21901, 0.25486, 0.29008, 0.32632, 0.36352, 0.40392,
            0.44326, 0.48444, 0.52761, 0.57105, 0.61777, 0.66644,
            0.71906, 0.77249, 0.82908, 0.89165, 0.95499, 1.02496,
            1.10339, 1.19051, 1.28857, 1.40190, 1.54086, 1.72572,
            2.02502, 2.13683, 2.28301, 2.52813, 2.82856,
        },
        {  // n = 500
            -3.31184, -3.03356, -2.80446, -2.66875, -2.56674, -2.32076,
            -2.15730, -2.03755, -1.94181, -1.86060, -1.78887, -1.72567,
            -1.66765, -1.61716, -1.57022, -1.52410, -1.48036, -1.44028,
            -1.40264, -1.36487, -1.33028, -1.29649, -1.26455, -1.23437,
            -1.20429, -1.17487, -1.14653, -1.11920, -1.09038, -1.06409,
            -1.03783, -1.01162, -0.98682, -0.96102, -0.93640, -0.91180,
            -0.88817, -0.86603, -0.84276, -0.81897, -0.79690, -0.77495,
            -0.75259, -0.73021, -0.70687, -0.68420, -0.66142, -0.63868,
            -0.61546, -0.59222, -0.56842, -0.54522, -0.52152, -0.49723,
            -0.47330, -0.44819, -0.42285, -0.39731, -0.37041, -0.34470,
            -0.31796, -0.29234, -0.26497, -0.23652, -0.20953, -0.18121,
            -0.15285, -0.12358, -0.09532, -0.06742, -0.03768, -0.00841,
            0.02225, 0.05356, 0.08587, 0.11843, 0.14975, 0.18321,
            0.21794, 0.25151, 0.28790, 0.32438, 0.36283, 0.40336,
            0.44316, 0.48738, 0.53096, 0.57548, 0.62385, 0.66992,
            0.71917, 0.77206, 0.82886, 0.88874, 0.95328, 1.02535,
            1.10102, 1.18557, 1.28172, 1.39842, 1.53397, 1.71806,
            2.01495, 2.13161, 2.29269, 2.52992, 2.79610,
        },
        {  // n = 1000
            -3.27559, -3.01604, -2.80105, -2.67307, -2.57313, -2.31344,
            -2.15117, -2.03442, -1.93675, -1.85724, -1.78604, -1.72295,
            -1.66556, -1.61247, -1.56583, -1.52167, -1.47886, -1.43698,
            -1.40018, -1.36326, -1.32848, -1.29449, -1.26315, -1.23245,
            -1.20202, -1.17290, -1.14418, -1.11700, -1.08916, -1.06291,
            -1.03629, -1.01109, -0.98573, -0.96230, -0.93822, -0.91355,
            -0.88958, -0.86663, -0.84328, -0.82085, -0.79767, -0.77422,
            -0.75137, -0.72913, -0.70730, -0.68385, -0.66148, -0.63833,
            -0.61452, -0.59191, -0.56827, -0.54507, -0.52158, -0.49677,
            -0.47198, -0.44682, -0.42170, -0.39683, -0.37107, -0.34406,
            -0.31809, -0.29136, -0.26397, -0.23611, -0.20789, -0.18011,
            -0.15272, -0.12431, -0.09574, -0.06560, -0.03608, -0.00604,
            0.02648, 0.05920, 0.09065, 0.12305, 0.15625, 0.18920,
            0.22383, 0.25774, 0.29269, 0.32977, 0.36705, 0.40729,
            0.44969, 0.49013, 0.53381, 0.57978, 0.62635, 0.67446,
            0.72315, 0.77638, 0.83196, 0.89084, 0.95431, 1.02291,
            1.09611, 1.18291, 1.28246, 1.39956, 1.53407, 1.71132,
            2.00598, 2.11776, 2.26827, 2.51366, 2.81038,
        },
        {  // n = 2500
            -3.29225, -3.01894, -2.79447, -2.66391, -2.56755, -2.32197,
            -2.16032, -2.04379, -1.95166, -1.86560, -1.79290, -1.73015,
            -1.67058, -1.61861, -1.56870, -1.52504, -1.48389, -1.44247,
            -1.40441, -1.36707, -1.33247, -1.29900, -1.26797, -1.23639,
            -1.20576, -1.17647, -1.14720, -1.11877, -1.09214, -1.06540,
            -1.03948, -1.01387, -0.98835, -0.96476, -0.94059, -0.91697,
            -0.89298, -0.86835, -0.84516, -0.82194, -0.79932, -0.77732,
            -0.75453, -0.73261, -0.70944, -0.68683, -0.66336, -0.64135,
            -0.61913, -0.59567, -0.57252, -0.54851, -0.52495, -0.50064,
            -0.47610, -0.45177, -0.42652, -0.40065, -0.37381, -0.34751,
            -0.32133, -0.29462, -0.26684, -0.24000, -0.21257, -0.18376,
            -0.15541, -0.12704, -0.09697, -0.06724, -0.03708, -0.00649,
            0.02307, 0.05400, 0.08699, 0.11939, 0.15244, 0.18625,
            0.22025, 0.25464, 0.28949, 0.32601, 0.36368, 0.40125,
            0.44106, 0.48118, 0.52367, 0.56750, 0.61517, 0.66263,
            0.71505, 0.76822, 0.82285, 0.88700, 0.95296, 1.02265,
            1.09754, 1.18489, 1.28138, 1.39763, 1.53623, 1.71499,
            2.00202, 2.11123, 2.26878, 2.52442, 2.81880,
        },
    }},
    // constant
    {{
        {  // n = 25
            -4.70399, -4.31782, -4.01423, -3.83780, -3.71952, -3.40451,
            -3.22407, -3.08255, -2.97657, -2.88559, -2.81011, -2.74140,
            -2.67960, -2.62409, -2.57262, -2.52630, -2.48174, -2.44061,
            -2.40087, -2.36414, -2.32939, -2.29629, -2.26443, -2.23327,
            -2.20235, -2.17236, -2.14341, -2.11473, -2.08706, -2.06056,
            -2.03598, -2.01064, -1.98612, -1.96121, -1.93692, -1.91326,
            -1.89022, -1.86735, -1.84527, -1.82351, -1.80192, -1.78018,
            -1.75860, -1.73798, -1.71718, -1.69666, -1.67570, -1.65459,
            -1.63385, -1.61372, -1.59347, -1.57234, -1.55221, -1.53269,
            -1.51254, -1.49290, -1.47273, -1.45229, -1.43143, -1.41086,
            -1.39000, -1.36977, -1.34925, -1.32800, -1.30652, -1.28526,
            -1.26345, -1.24145, -1.21792, -1.19430, -1.17099, -1.14727,
            -1.12255, -1.09844, -1.07299, -1.04666, -1.01983, -0.99271,
            -0.96458, -0.93629, -0.90578, -0.87365, -0.84047, -0.80610,
            -0.77077, -0.73355, -0.69650, -0.65754, -0.61585, -0.57246,
            -0.52597, -0.47720, -0.42812, -0.37340, -0.31380, -0.24800,
            -0.17456, -0.09551, -0.00699, 0.10561, 0.23485, 0.41584,
            0.69829, 0.80985, 0.95996, 1.21065, 1.50201,
        },
        {  // n = 50
            -4.37133, -4.04149, -3.80793, -3.66242, -3.55882, -3.30163,
            -3.13709, -3.01249, -2.91821, -2.83698, -2.76798, -2.70478,
            -2.64840, -2.59701, -2.54814, -2.50537, -2.46421, -2.42587,
            -2.38751, -2.35241, -2.31749, -2.28553, -2.25499, -2.22565,
            -2.19630, -2.16842, -2.14073, -2.11403, -2.08846, -2.06230,
            -2.03775, -2.01370, -1.98942, -1.96662, -1.94404, -1.92199,
            -1.89871, -1.87695, -1.85538, -1.83443, -1.81344, -1.79198,
            -1.77139, -1.75053, -1.72992, -1.70944, -1.68953, -1.66907,
            -1.64901, -1.62819, -1.60806, -1.58765, -1.56749, -1.54772,
            -1.52767, -1.50723, -1.48796, -1.46815, -1.44720, -1.42758,
            -1.40642, -1.38526, -1.36449, -1.34448, -1.32359, -1.30163,
            -1.27957, -1.25772, -1.23543, -1.21274, -1.19021, -1.16744,
            -1.14350, -1.11918, -1.09438, -1.06858, -1.04200, -1.01520,
            -0.98758, -0.95863, -0.92869, -0.89700, -0.86388, -0.83053,
            -0.79582, -0.76023, -0.72232, -0.68341, -0.64248, -0.60025,
            -0.55513, -0.50700, -0.45516, -0.40074, -0.34004, -0.27479,
            -0.20375, -0.12295, -0.02878, 0.07876, 0.21292, 0.39052,
            0.66783, 0.77663, 0.92870, 1.17186, 1.45454,
        },
        {  // n = 100
            -4.24127, -3.94488, -3.72529, -3.59207, -3.49466, -3.24892,
            -3.09603, -2.98380, -2.88837, -2.81427, -2.74692, -2.68560,
            -2.63393, -2.58311, -2.53723, -2.49430, -2.45285, -2.41485,
            -2.37945, -2.34451, -2.31084, -2.28011, -2.25036, -2.22107,
            -2.19339, -2.16595, -2.14103, -2.11461, -2.08957, -2.06549,
            -2.04074, -2.01578, -1.99286, -1.97069, -1.94934, -1.92737,
            -1.90563, -1.88400, -1.86242, -1.84098, -1.81929, -1.79794,
            -1.77723, -1.75732, -1.73791, -1.71725, -1.69800, -1.67808,
            -1.65830, -1.63893, -1.61975, -1.60093, -1.58084, -1.56159,
            -1.54160, -1.52266, -1.50319, -1.48395, -1.46365, -1.44362,
            -1.42304, -1.40150, -1.38136, -1.36010, -1.33913, -1.31753,
            -1.29626, -1.27481, -1.25316, -1.23113, -1.20839, -1.18607,
            -1.16192, -1.13737, -1.11227, -1.08707, -1.06029, -1.03309,
            -1.00540, -0.97695, -0.94762, -0.91680, -0.88511, -0.85224,
            -0.81915, -0.78323, -0.74460, -0.70706, -0.66526, -0.62158,
            -0.57612, -0.52751, -0.47536, -0.42117, -0.36197, -0.29700,
            -0.22731, -0.14671, -0.05608, 0.05673, 0.18664, 0.35963,
            0.63634, 0.74287, 0.90041, 1.13094, 1.39665,
        },
        {  // n = 250
            -4.14105, -3.88174, -3.66644, -3.54545, -3.45636, -3.21868,
            -3.07699, -2.96465, -2.87658, -2.80016, -2.73568, -2.67982,
            -2.62671, -2.57782, -2.53423, -2.49131, -2.45118, -2.41350,
            -2.37690, -2.34296, -2.30951, -2.27879, -2.24863, -2.21991,
            -2.19171, -2.16355, -2.13729, -2.11282, -2.08742, -2.06414,
            -2.03932, -2.01604, -1.99325, -1.97120, -1.94913, -1.92717,
            -1.90577, -1.88428, -1.86359, -1.84354, -1.82174, -1.80026,
            -1.78060, -1.76049, -1.74096, -1.72125, -1.70136, -1.68152,
            -1.66144, -1.64176, -1.62190, -1.60185, -1.58226, -1.56259,
            -1.54305, -1.52409, -1.50471, -1.48529, -1.46545, -1.44537,
            -1.42550, -1.40477, -1.38343, -1.36302, -1.34256, -1.32198,
            -1.30085, -1.27889, -1.25740, -1.23523, -1.21301, -1.19067,
            -1.16733, -1.14348, -1.11871, -1.09266, -1.06768, -1.04111,
            -1.01392, -0.98472, -0.95471, -0.92476, -0.89382, -0.86271,
            -0.82828, -0.79348, -0.75637, -0.71823, -0.67780, -0.63569,
            -0.59048, -0.54230, -0.49165, -0.43926, -0.38108, -0.31624,
            -0.24464, -0.16437, -0.07337, 0.03213, 0.16771, 0.34463,
            0.61306, 0.72519, 0.86402, 1.10777, 1.39359,
        },
        {  // n = 500
            -4.07801, -3.85056, -3.66203, -3.53735, -3.44746, -3.21697,
            -3.07162, -2.96090, -2.87354, -2.80243, -2.73574, -2.67587,
            -2.62418, -2.57452, -2.53030, -2.48935, -2.44979, -2.41259,
            -2.37707, -2.34226, -2.31059, -2.27973, -2.25003, -2.22119,
            -2.19492, -2.16808, -2.14187, -2.11683, -2.09210, -2.06732,
            -2.04325, -2.02011, -1.99715, -1.97467, -1.95247, -1.93034,
            -1.90834, -1.88719, -1.86579, -1.84541, -1.82493, -1.80445,
            -1.78406, -1.76456, -1.74572, -1.72522, -1.70599, -1.68561,
            -1.66624, -1.64583, -1.62592, -1.60606, -1.58624, -1.56627,
            -1.54709, -1.52808, -1.50868, -1.48871, -1.46928, -1.44896,
            -1.42899, -1.40879, -1.38801, -1.36740, -1.34779, -1.32664,
            -1.30429, -1.28226, -1.25968, -1.23777, -1.21576, -1.19359,
            -1.17051, -1.14666, -1.12175, -1.09695, -1.07026, -1.04341,
            -1.01540, -0.98735, -0.95755, -0.92735, -0.89562, -0.86296,
            -0.82955, -0.79522, -0.75759, -0.71944, -0.68000, -0.63517,
            -0.58934, -0.54386, -0.49315, -0.43812, -0.37765, -0.31225,
            -0.24128, -0.16201, -0.07161, 0.03518, 0.16949, 0.33753,
            0.61699, 0.72360, 0.86129, 1.10238, 1.38396,
        },
        {  // n = 1000
            -4.09724, -3.85889, -3.65114, -3.52340, -3.42722, -3.20378,
            -3.05402, -2.94486, -2.86020, -2.78879, -2.72505, -2.66705,
            -2.61524, -2.56886, -2.52242, -2.48049, -2.44282, -2.40613,
            -2.37112, -2.33709, -2.30424, -2.27283, -2.24332, -2.21577,
            -2.18807, -2.16044, -2.13373, -2.10867, -2.08364, -2.05985,
            -2.03750, -2.01369, -1.99182, -1.96920, -1.94743, -1.92578,
            -1.90436, -1.88334, -1.86288, -1.84245, -1.82176, -1.80103,
            -1.78124, -1.76153, -1.74094, -1.72116, -1.70150, -1.68244,
            -1.66250, -1.64308, -1.62320, -1.60356, -1.58484, -1.56500,
            -1.54529, -1.52535, -1.50602, -1.48561, -1.46586, -1.44633,
            -1.42650, -1.40679, -1.38643, -1.36581, -1.34591, -1.32478,
            -1.30337, -1.28159, -1.25927, -1.23690, -1.21348, -1.19117,
            -1.16851, -1.14511, -1.12030, -1.09524, -1.06928, -1.04253,
            -1.01509, -0.98603, -0.95695, -0.92664, -0.89603, -0.86454,
            -0.83119, -0.79671, -0.75948, -0.72061, -0.68076, -0.63815,
            -0.59223, -0.54497, -0.49412, -0.44041, -0.38234, -0.31734,
            -0.24699, -0.16993, -0.08004, 0.02773, 0.15932, 0.32964,
            0.60063, 0.70343, 0.84449, 1.08291, 1.38188,
        },
        {  // n = 2500
            -4.08829, -3.84289, -3.63853, -3.51057, -3.42566, -3.20101,
            -3.05552, -2.94598, -2.85948, -2.78455, -2.72092, -2.66482,
            -2.61139, -2.56478, -2.52148, -2.47961, -2.44076, -2.40470,
            -2.37017, -2.33636, -2.30555, -2.27446, -2.24458, -2.21627,
            -2.18985, -2.16250, -2.13666, -2.11169, -2.08772, -2.06364,
            -2.04021, -2.01708, -1.99470, -1.97186, -1.95040, -1.92881,
            -1.90782, -1.88665, -1.86599, -1.84542, -1.82530, -1.80588,
            -1.78627, -1.76553, -1.74567, -1.72622, -1.70663, -1.68637,
            -1.66707, -1.64689, -1.62730, -1.60773, -1.58747, -1.56805,
            -1.54857, -1.52914, -1.50927, -1.48906, -1.46958, -1.44920,
            -1.43021, -1.40963, -1.39021, -1.36971, -1.34924, -1.32878,
            -1.30787, -1.28639, -1.26517, -1.24246, -1.21911, -1.19531,
            -1.17168, -1.14822, -1.12287, -1.09689, -1.07110, -1.04388,
            -1.01597, -0.98817, -0.95954, -0.92953, -0.89849, -0.86677,
            -0.83341, -0.79792, -0.76154, -0.72379, -0.68328, -0.64159,
            -0.59779, -0.54857, -0.49869, -0.44516, -0.38875, -0.32459,
            -0.25393, -0.17196, -0.07996, 0.02640, 0.16037, 0.33640,
            0.61379, 0.72179, 0.85749, 1.07278, 1.36549,
        },
    }},
    // constant_trend
    {{
        {  // n = 25
            -5.42007, -4.99288, -4.66361, -4.49878, -4.36972, -4.04639,
            -3.85110, -3.71054, -3.59990, -3.50935, -3.42715, -3.35427,
            -3.29177, -3.23318, -3.17950, -3.13182, -3.08592, -3.04283,
            -3.00207, -2.96565, -2.92930, -2.89505, -2.86169, -2.82940,
            -2.79883, -2.76966, -2.74081, -2.71177, -2.68365, -2.65752,
            -2.63296, -2.60708, -2.58233, -2.55749, -2.53305, -2.50889,
            -2.48604, -2.46385, -2.44198, -2.41946, -2.39876, -2.37767,
            -2.35706, -2.33574, -2.31566, -2.29524, -2.27564, -2.25519,
            -2.23400, -2.21343, -2.19407, -2.17419, -2.15527, -2.13515,
            -2.11610, -2.09710, -2.07795, -2.05799, -2.03882, -2.02093,
            -2.00067, -1.98147, -1.96194, -1.94351, -1.92345, -1.90351,
            -1.88344, -1.86381, -1.84419, -1.82371, -1.80378, -1.78339,
            -1.76264, -1.74138, -1.72076, -1.69832, -1.67635, -1.65370,
            -1.63139, -1.60770, -1.58402, -1.55884, -1.53269, -1.50543,
            -1.47687, -1.44757, -1.41668, -1.38600, -1.35260, -1.31809,
            -1.28097, -1.23849, -1.19367, -1.14533, -1.09386, -1.03571,
            -0.97345, -0.90246, -0.82043, -0.72414, -0.60445, -0.44031,
            -0.17220, -0.07086, 0.05763, 0.28797, 0.57737,
        },
        {  // n = 50
            -4.96992, -4.66578, -4.42008, -4.26858, -4.15989, -3.89029,
            -3.72182, -3.59919, -3.50669, -3.42873, -3.35757, -3.29456,
            -3.23715, -3.18608, -3.13837, -3.09435, -3.05454, -3.01361,
            -2.97505, -2.94081, -2.90690, -2.87412, -2.84325, -2.81377,
            -2.78461, -2.75779, -2.73109, -2.70530, -2.67972, -2.65432,
            -2.62967, -2.60643, -2.58332, -2.55986, -2.53817, -2.51680,
            -2.49595, -2.47453, -2.45415, -2.43333, -2.41262, -2.39215,
            -2.37285, -2.35361, -2.33421, -2.31488, -2.29583, -2.27698,
            -2.25792, -2.23827, -2.21979, -2.20129, -2.18294, -2.16430,
            -2.14584, -2.12719, -2.10851, -2.09071, -2.07155, -2.05306,
            -2.03411, -2.01525, -1.99493, -1.97635, -1.95739, -1.93915,
            -1.91924, -1.90040, -1.88060, -1.86106, -1.84039, -1.82037,
            -1.80070, -1.77959, -1.75806, -1.73598, -1.71469, -1.69243,
            -1.66874, -1.64512, -1.62148, -1.59724, -1.57231, -1.54681,
            -1.51932, -1.49101, -1.46257, -1.43084, -1.39829, -1.36294,
            -1.32617, -1.28678, -1.24513, -1.19862, -1.14867, -1.09255,
            -1.03004, -0.96001, -0.87873, -0.78134, -0.65482, -0.50008,
            -0.24834, -0.14627, -0.01371, 0.20046, 0.47529,
        },
        {  // n = 100
            -4.75913, -4.51550, -4.29446, -4.16185, -4.06312, -3.81224,
            -3.66162, -3.54864, -3.45686, -3.38061, -3.31539, -3.25577,
            -3.20240, -3.15412, -3.10989, -3.06755, -3.02908, -2.99230,
            -2.95720, -2.92393, -2.89276, -2.86224, -2.83236, -2.80373,
            -2.77587, -2.74846, -2.72277, -2.69816, -2.67342, -2.64986,
            -2.62713, -2.60402, -2.58172, -2.55915, -2.53770, -2.51672,
            -2.49598, -2.47489, -2.45405, -2.43425, -2.41526, -2.39586,
            -2.37614, -2.35658, -2.33786, -2.31872, -2.30012, -2.28232,
            -2.26390, -2.24568, -2.22805, -2.20952, -2.19163, -2.17262,
            -2.15459, -2.13665, -2.11801, -2.09949, -2.08079, -2.06300,
            -2.04424, -2.02589, -2.00799, -1.99005, -1.97195, -1.95267,
            -1.93431, -1.91555, -1.89630, -1.87765, -1.85850, -1.83909,
            -1.81940, -1.79913, -1.77803, -1.75654, -1.73565, -1.71367,
            -1.69119, -1.66806, -1.64360, -1.61902, -1.59291, -1.56685,
            -1.53998, -1.51164, -1.48223, -1.45133, -1.42089, -1.38711,
            -1.35128, -1.31146, -1.26903, -1.22347, -1.17471, -1.12131,
            -1.06079, -0.99348, -0.91582, -0.82411, -0.70843, -0.55128,
            -0.29805, -0.20366, -0.07449, 0.12922, 0.39619,
        },
        {  // n = 250
            -4.61852, -4.38673, -4.19671, -4.07586, -3.98649, -3.75739,
            -3.61192, -3.50923, -3.42611, -3.35139, -3.28575, -3.22987,
            -3.18063, -3.13341, -3.09005, -3.04947, -3.01113, -2.97348,
            -2.93858, -2.90550, -2.87421, -2.84457, -2.81636, -2.79007,
            -2.76424, -2.73857, -2.71372, -2.68892, -2.66510, -2.64183,
            -2.61999, -2.59839, -2.57621, -2.55454, -2.53356, -2.51344,
            -2.49323, -2.47308, -2.45302, -2.43376, -2.41441, -2.39547,
            -2.37675, -2.35793, -2.33900, -2.32088, -2.30270, -2.28425,
            -2.26577, -2.24753, -2.22924, -2.21122, -2.19339, -2.17534,
            -2.15726, -2.13968, -2.12167, -2.10409, -2.08623, -2.06763,
            -2.04985, -2.03163, -2.01359, -1.99493, -1.97672, -1.95832,
            -1.93968, -1.92048, -1.90167, -1.88210, -1.86248, -1.84208,
            -1.82226, -1.80225, -1.78245, -1.76258, -1.74082, -1.71979,
            -1.69828, -1.67614, -1.65275, -1.62810, -1.60277, -1.57683,
            -1.54952, -1.52257, -1.49413, -1.46195, -1.43166, -1.39915,
            -1.36345, -1.32422, -1.28418, -1.24022, -1.19069, -1.13848,
            -1.07775, -1.00781, -0.92780, -0.83278, -0.71615, -0.55968,
            -0.31207, -0.22003, -0.08742, 0.12100, 0.39295,
        },
        {  // n = 500
            -4.62630, -4.39132, -4.20090, -4.07272, -3.98143, -3.75323,
            -3.61115, -3.50526, -3.42004, -3.34753, -3.28741, -3.23397,
            -3.18335, -3.13737, -3.09525, -3.05575, -3.01841, -2.98092,
            -2.94777, -2.91464, -2.88278, -2.85313, -2.82450, -2.79718,
            -2.77029, -2.74568, -2.71983, -2.69584, -2.67239, -2.64901,
            -2.62569, -2.60371, -2.58123, -2.55977, -2.53921, -2.51862,
            -2.49831, -2.47787, -2.45741, -2.43794, -2.41832, -2.39954,
            -2.38090, -2.36263, -2.34405, -2.32585, -2.30741, -2.28875,
            -2.27081, -2.25243, -2.23385, -2.21562, -2.19797, -2.17995,
            -2.16253, -2.14460, -2.12646, -2.10842, -2.09096, -2.07343,
            -2.05531, -2.03713, -2.01797, -1.99920, -1.98100, -1.96243,
            -1.94326, -1.92423, -1.90497, -1.88544, -1.86599, -1.84637,
            -1.82665, -1.80668, -1.78705, -1.76598, -1.74471, -1.72235,
            -1.70031, -1.67765, -1.65429, -1.63036, -1.60544, -1.57989,
            -1.55353, -1.52553, -1.49679, -1.46589, -1.43296, -1.39905,
            -1.36419, -1.32642, -1.28666, -1.24251, -1.19341, -1.13797,
            -1.07879, -1.01054, -0.93492, -0.84492, -0.72623, -0.57198,
            -0.32615, -0.23082, -0.08832, 0.12350, 0.40056,
        },
        {  // n = 1000
            -4.63412, -4.37498, -4.17786, -4.05701, -3.97437, -3.75632,
            -3.61655, -3.51011, -3.42457, -3.34890, -3.28410, -3.23245,
            -3.17952, -3.13320, -3.09042, -3.04901, -3.01001, -2.97527,
            -2.94171, -2.90972, -2.87975, -2.85024, -2.82133, -2.79430,
            -2.76791, -2.74238, -2.71745, -2.69380, -2.66972, -2.64717,
            -2.62414, -2.60279, -2.58080, -2.56038, -2.53863, -2.51814,
            -2.49727, -2.47827, -2.45838, -2.43838, -2.41875, -2.39920,
            -2.38038, -2.36192, -2.34351, -2.32493, -2.30582, -2.28730,
            -2.26870, -2.24999, -2.23223, -2.21444, -2.19630, -2.17782,
            -2.15965, -2.14200, -2.12400, -2.10650, -2.08833, -2.07013,
            -2.05216, -2.03482, -2.01615, -1.99808, -1.97908, -1.96071,
            -1.94276, -1.92353, -1.90518, -1.88589, -1.86679, -1.84703,
            -1.82751, -1.80802, -1.78923, -1.76752, -1.74580, -1.72381,
            -1.70071, -1.67722, -1.65294, -1.62904, -1.60442, -1.57923,
            -1.55265, -1.52442, -1.49605, -1.46609, -1.43410, -1.40093,
            -1.36558, -1.32780, -1.28630, -1.24331, -1.19470, -1.14051,
            -1.08273, -1.01489, -0.93783, -0.84619, -0.73197, -0.57716,
            -0.32813, -0.22588, -0.08952, 0.13678, 0.38076,
        },
        {  // n = 2500
            -4.63575, -4.37909, -4.17697, -4.05163, -3.96335, -3.74438,
            -3.60328, -3.49783, -3.41081, -3.33898, -3.27753, -3.22185,
            -3.17095, -3.12624, -3.08467, -3.04474, -3.00801, -2.97412,
            -2.94156, -2.90975, -2.87889, -2.84923, -2.82142, -2.79404,
            -2.76682, -2.74069, -2.71537, -2.69114, -2.66773, -2.64491,
            -2.62211, -2.60037, -2.57905, -2.55843, -2.53756, -2.51649,
            -2.49554, -2.47560, -2.45462, -2.43573, -2.41655, -2.39754,
            -2.37865, -2.35961, -2.34082, -2.32319, -2.30500, -2.28635,
            -2.26768, -2.24982, -2.23153, -2.21280, -2.19491, -2.17694,
            -2.15913, -2.14215, -2.12414, -2.10584, -2.08808, -2.07029,
            -2.05237, -2.03384, -2.01619, -1.99799, -1.97940, -1.96161,
            -1.94319, -1.92480, -1.90639, -1.88722, -1.86848, -1.84924,
            -1.82961, -1.81040, -1.79025, -1.76906, -1.74731, -1.72562,
            -1.70424, -1.68192, -1.65812, -1.63432, -1.60951, -1.58417,
            -1.55635, -1.52900, -1.49926, -1.46881, -1.43636, -1.40249,
            -1.36699, -1.32879, -1.28848, -1.24582, -1.19626, -1.14544,
            -1.08680, -1.01921, -0.94261, -0.84655, -0.72826, -0.57463,
            -0.32450, -0.22343, -0.07817, 0.14203, 0.40240,
        },
    }},
}};

}  // namespace tsecon::detail
