#include "entb/table1.hpp"

namespace entb {

const std::vector<std::vector<long long>>& shifted_chebyshev_reference() {
    static const std::vector<std::vector<long long>> table = {
        /* n=2  */ {8},
        /* n=3  */ {-48, 32},
        /* n=4  */ {160, -256, 128},
        /* n=5  */ {-400, 1120, -1280, 512},
        /* n=6  */ {840, -3584, 6912, -6144, 2048},
        /* n=7  */ {-1568, 9408, -26880, 39424, -28672, 8192},
        /* n=8  */ {2688, -21504, 84480, -180224, 212992, -131072, 32768},
        /* n=9  */ {-4320, 44352, -228096, 658944, -1118208, 1105920, -589824, 131072},
        /* n=10 */ {6600, -84480, 549120, -2050048, 4659200, -6553600, 5570560, -2621440, 524288},
        /* n=11 */
        {-9680, 151008, -1208064, 5637632, -16400384, 30638080, -36765696, 27394048, -11534336,
         2097152},
        /* n=12 */
        {13728, -256256, 2471040, -14057472, 50692096, -120324096, 190513152, -199229440,
         132120576, -50331648, 8388608},
        /* n=13 */
        {-18928, 416416, -4759040, 32361472, -141213696, 412778496, -825556992, 1133117440,
         -1049624576, 627048448, -218103808, 33554432},
        /* n=14 */
        {25480, -652288, 8712704, -69701632, 361181184, -1270087680, 3111714816, -5369233408,
         6499598336, -5402263552, 2936012800, -939524096, 134217728},
        /* n=15 */
        {-33600, 990080, -15275520, 141892608, -859955200, 3572121600, -10478223360, 22052208640,
         -33426505728, 36175872000, -27262976000, 13589544960, -4026531840, 536870912},
    };
    return table;
}

}  // namespace entb
