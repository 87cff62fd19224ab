//! Exact integer coefficient tables for the piecewise closed forms.
//!
//! Each branch is `scale * prod(factor^power)`; negative powers are denominators.
//! Univariate factors list coefficients from the highest degree down.
//! Bivariate factors list `(deg_r, deg_eps, deg_sqrt3, coeff)` terms.
//! Generated from symbolic sources; do not edit by hand.

use super::poly::{Branch, Branch2, Factor, Factor2};

#[rustfmt::skip]
pub(crate) static MU_AND: [Branch; 4] = [
    Branch {
        scale: (-1, 54),
        factors: &[
            Factor { coeffs: &[1, -1], power: 1 },
            Factor { coeffs: &[5, -148, 245, -178, -232, 128], power: 1 },
            Factor { coeffs: &[1, 1], power: -1 },
            Factor { coeffs: &[1, 2], power: -1 },
            Factor { coeffs: &[1, 0], power: -2 },
        ],
    },
    Branch {
        scale: (-1, 216),
        factors: &[
            Factor { coeffs: &[101, -801, 1302, -732, -536, 672], power: 1 },
            Factor { coeffs: &[1, 0], power: -1 },
            Factor { coeffs: &[1, 1], power: -1 },
            Factor { coeffs: &[1, 2], power: -1 },
        ],
    },
    Branch {
        scale: (1, 8),
        factors: &[
            Factor { coeffs: &[1, -13, 30, 148, -448, 264, 288, -368, 96], power: 1 },
            Factor { coeffs: &[1, 1], power: -1 },
            Factor { coeffs: &[1, 2], power: -1 },
            Factor { coeffs: &[1, 0], power: -4 },
        ],
    },
    Branch {
        scale: (1, 1),
        factors: &[
            Factor { coeffs: &[1, -1], power: 2 },
            Factor { coeffs: &[1, 3, 2, -2], power: 1 },
            Factor { coeffs: &[1, 1], power: -1 },
            Factor { coeffs: &[1, 0], power: -4 },
        ],
    },
];

#[rustfmt::skip]
pub(crate) static VAR_AND: [Branch; 4] = [
    Branch {
        scale: (-1, 2916),
        factors: &[
            Factor { coeffs: &[1, -1], power: 1 },
            Factor { coeffs: &[5, -148, 245, -178, -232, 128], power: 1 },
            Factor { coeffs: &[5, -153, 447, -261, 54, 360, -128], power: 1 },
            Factor { coeffs: &[1, 1], power: -2 },
            Factor { coeffs: &[1, 2], power: -2 },
            Factor { coeffs: &[1, 0], power: -4 },
        ],
    },
    Branch {
        scale: (-1, 46656),
        factors: &[
            Factor { coeffs: &[101, -801, 1302, -732, -536, 672], power: 1 },
            Factor { coeffs: &[101, -801, 1518, -84, -104, 672], power: 1 },
            Factor { coeffs: &[1, 0], power: -2 },
            Factor { coeffs: &[1, 1], power: -2 },
            Factor { coeffs: &[1, 2], power: -2 },
        ],
    },
    Branch {
        scale: (-1, 64),
        factors: &[
            Factor { coeffs: &[1, -13, 22, 124, -464, 264, 288, -368, 96], power: 1 },
            Factor { coeffs: &[1, -13, 30, 148, -448, 264, 288, -368, 96], power: 1 },
            Factor { coeffs: &[1, 1], power: -2 },
            Factor { coeffs: &[1, 2], power: -2 },
            Factor { coeffs: &[1, 0], power: -8 },
        ],
    },
    Branch {
        scale: (1, 1),
        factors: &[
            Factor { coeffs: &[1, -1], power: 2 },
            Factor { coeffs: &[1, 3, 2, -2], power: 1 },
            Factor { coeffs: &[3, 3, -6, 2], power: 1 },
            Factor { coeffs: &[1, 1], power: -2 },
            Factor { coeffs: &[1, 0], power: -8 },
        ],
    },
];

#[rustfmt::skip]
pub(crate) static NU_AND: [Branch; 11] = [
    Branch {
        scale: (-1, 58320),
        factors: &[
            Factor { coeffs: &[1, -1], power: 2 },
            Factor { coeffs: &[972, 8748, 44456, 140328, 121371, -412117, -27145, -4503501, 1336147, 10640999, -982009, -6677105, -2274458, -1150162, 249126, 1232530, 1234372, 226776, -184944, -81920], power: 1 },
            Factor { coeffs: &[1, 2], power: -2 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 0], power: -6 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (-1, 116640),
        factors: &[
            Factor { coeffs: &[486, 3402, -269, -45155, -118850, 443518, 3251855, -13836295, 13434672, 11140788, -27667544, 13293088, 7159710, -13013598, 4185440, 3262952, 586636, -1616444, -680120, -55952, 219936, 49152], power: 1 },
            Factor { coeffs: &[1, 2], power: -2 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 0], power: -6 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (-1, 116640),
        factors: &[
            Factor { coeffs: &[486, 3402, -269, -45155, -118850, 443518, 2751855, -13736295, 18084672, 8770788, -43009544, 24604048, 27137438, -30889822, -2832544, 11101160, -4168820, 2364868, 2305864, -3041936, 219936, 49152], power: 1 },
            Factor { coeffs: &[1, 2], power: -2 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 0], power: -6 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (-1, 58320),
        factors: &[
            Factor { coeffs: &[3632, 25632, -60328, -441888, 1353430, -297666, -4791125, 12849927, -10894618, -26295324, 62283823, -2280753, -81700012, 32551926, 39974410, -11284026, -5806580, -9167580, -2004944, 4646688, 1931776, -489024, -98304], power: 1 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 2], power: -3 },
            Factor { coeffs: &[1, 0], power: -6 },
            Factor { coeffs: &[1, 0, -2], power: -1 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (-1, 58320),
        factors: &[
            Factor { coeffs: &[3632, 25632, -49432, -364992, 958940, -1167012, 1200518, 5424126, -23566328, 23837088, 11797395, -41623065, 39261953, -8239197, -30178496, 27901506, -4936170, 61038, 4719720, -5513952, 340736, 23328, 65536], power: 1 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 2], power: -3 },
            Factor { coeffs: &[1, 0], power: -6 },
            Factor { coeffs: &[1, 0, 1], power: -1 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (1, 466560),
        factors: &[
            Factor { coeffs: &[1562, -11142, -103099, 2105697, -9774118, 10220280, 27825711, -69243129, 81624200, -76052574, -65530400, 262451196, -178092280, -69106464, 158439568, -97568688, 12246288, 17591952, -21111616, 15628032, -2545664, 993024], power: 1 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 2], power: -3 },
            Factor { coeffs: &[1, 0], power: -5 },
            Factor { coeffs: &[1, 0, 1], power: -1 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (1, 466560),
        factors: &[
            Factor { coeffs: &[1562, -11142, -103099, 2105697, -9774118, 10220280, 27825711, -69243129, 81624200, -76052574, -65530400, 262451196, -178092280, -69106464, 158439568, -97568688, 12246288, 17591952, -21111616, 15628032, -2545664, 993024], power: 1 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 2], power: -3 },
            Factor { coeffs: &[1, 0], power: -5 },
            Factor { coeffs: &[1, 0, 1], power: -1 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (-1, 1920),
        factors: &[
            Factor { coeffs: &[2, -30, 281, -2395, 8770, 29528, -268053, 245667, 2066216, -5313494, -1589216, 18512684, -18946136, -2665248, 22789584, -32987760, 20482512, 13109584, -28084416, 17326976, -3864576, -4579328, 6666240, -3576320, 635904, -116736, 61440], power: 1 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 2], power: -3 },
            Factor { coeffs: &[1, 0], power: -10 },
            Factor { coeffs: &[1, 0, 1], power: -1 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (-1, 1920),
        factors: &[
            Factor { coeffs: &[2, -30, 281, -2395, 8258, 31064, -262677, 225443, 2052136, -5219030, -1608928, 18337836, -18837080, -2598688, 22736336, -32858736, 20384720, 12930896, -27988416, 17416832, -3862784, -4575488, 6638848, -3603200, 640512, -107520, 63488], power: 1 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 2], power: -3 },
            Factor { coeffs: &[1, 0], power: -10 },
            Factor { coeffs: &[1, 0, 1], power: -1 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (-1, 1920),
        factors: &[
            Factor { coeffs: &[2, -32, 307, -2612, 11572, 21934, -328867, 524994, 2446870, -8676180, -437020, 36944680, -40677696, -44860384, 106256352, -15515040, -98636848, 66358080, 27142272, -42614272, 7781120, 7327232, -3388672, 430592, -171008, 63488], power: 1 },
            Factor { coeffs: &[1, -1], power: -1 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 2], power: -3 },
            Factor { coeffs: &[1, 0], power: -10 },
            Factor { coeffs: &[2, 0, -1], power: -1 },
        ],
    },
    Branch {
        scale: (1, 15),
        factors: &[
            Factor { coeffs: &[30, 90, -127, -621, 320, 1568, -858, -1370, 909, 295, -292, 44, 6, -2], power: 1 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 0], power: -10 },
            Factor { coeffs: &[2, 0, -1], power: -1 },
        ],
    },
];

#[rustfmt::skip]
pub(crate) static MU_OR: [Branch; 4] = [
    Branch {
        scale: (1, 108),
        factors: &[
            Factor { coeffs: &[47, -195, 860, -846, -108, 720, -256], power: 1 },
            Factor { coeffs: &[1, 1], power: -1 },
            Factor { coeffs: &[1, 2], power: -1 },
            Factor { coeffs: &[1, 0], power: -2 },
        ],
    },
    Branch {
        scale: (1, 216),
        factors: &[
            Factor { coeffs: &[175, -579, 1450, -732, -536, 672], power: 1 },
            Factor { coeffs: &[1, 0], power: -1 },
            Factor { coeffs: &[1, 1], power: -1 },
            Factor { coeffs: &[1, 2], power: -1 },
        ],
    },
    Branch {
        scale: (-1, 8),
        factors: &[
            Factor { coeffs: &[3, -7, -30, 84, -264, 304, 144, -368, 96], power: 1 },
            Factor { coeffs: &[1, 1], power: -1 },
            Factor { coeffs: &[1, 2], power: -1 },
            Factor { coeffs: &[1, 0], power: -4 },
        ],
    },
    Branch {
        scale: (1, 1),
        factors: &[
            Factor { coeffs: &[1, 1, 0, 0, -6, 2], power: 1 },
            Factor { coeffs: &[1, 1], power: -1 },
            Factor { coeffs: &[1, 0], power: -4 },
        ],
    },
];

#[rustfmt::skip]
pub(crate) static VAR_OR: [Branch; 4] = [
    Branch {
        scale: (-1, 11664),
        factors: &[
            Factor { coeffs: &[47, -195, 752, -1170, -324, 720, -256], power: 1 },
            Factor { coeffs: &[47, -195, 860, -846, -108, 720, -256], power: 1 },
            Factor { coeffs: &[1, 1], power: -2 },
            Factor { coeffs: &[1, 2], power: -2 },
            Factor { coeffs: &[1, 0], power: -4 },
        ],
    },
    Branch {
        scale: (-1, 46656),
        factors: &[
            Factor { coeffs: &[175, -579, 1234, -1380, -968, 672], power: 1 },
            Factor { coeffs: &[175, -579, 1450, -732, -536, 672], power: 1 },
            Factor { coeffs: &[1, 0], power: -2 },
            Factor { coeffs: &[1, 1], power: -2 },
            Factor { coeffs: &[1, 2], power: -2 },
        ],
    },
    Branch {
        scale: (-1, 64),
        factors: &[
            Factor { coeffs: &[3, -7, -30, 84, -264, 304, 144, -368, 96], power: 1 },
            Factor { coeffs: &[3, -7, -22, 108, -248, 304, 144, -368, 96], power: 1 },
            Factor { coeffs: &[1, 1], power: -2 },
            Factor { coeffs: &[1, 2], power: -2 },
            Factor { coeffs: &[1, 0], power: -8 },
        ],
    },
    Branch {
        scale: (2, 1),
        factors: &[
            Factor { coeffs: &[3, -1], power: 1 },
            Factor { coeffs: &[1, 1, 0, 0, -6, 2], power: 1 },
            Factor { coeffs: &[1, 1], power: -2 },
            Factor { coeffs: &[1, 0], power: -8 },
        ],
    },
];

#[rustfmt::skip]
pub(crate) static NU_OR: [Branch; 11] = [
    Branch {
        scale: (-1, 58320),
        factors: &[
            Factor { coeffs: &[1458, 13122, 50731, -84225, -19193, -1823223, 5576151, 2978697, -33432692, 37427862, 15883834, -60944766, 49876417, -1754523, -36606859, 32338215, -10290256, -2234754, 7085471, -5608569, 1645826, -132876, 30824], power: 1 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 2], power: -3 },
            Factor { coeffs: &[1, 0], power: -6 },
            Factor { coeffs: &[1, 0, 1], power: -1 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (-1, 116640),
        factors: &[
            Factor { coeffs: &[1458, 13122, 62825, -175011, 156014, -3300900, 11053023, 5055135, -67685050, 75243552, 33155180, -120628524, 99831906, -4883958, -74801558, 64360782, -19812000, -3667716, 14541630, -11254002, 3070468, -413208, 28880], power: 1 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 2], power: -3 },
            Factor { coeffs: &[1, 0], power: -6 },
            Factor { coeffs: &[1, 0, 1], power: -1 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (-1, 116640),
        factors: &[
            Factor { coeffs: &[1458, 13122, 62825, -175011, 156014, -3300900, 11053023, 5055135, -67685050, 75243552, 33155180, -120628524, 99831906, -4883958, -74801558, 64360782, -19812000, -3667716, 14541630, -11254002, 3070468, -413208, 28880], power: 1 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 2], power: -3 },
            Factor { coeffs: &[1, 0], power: -6 },
            Factor { coeffs: &[1, 0, 1], power: -1 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (-1, 58320),
        factors: &[
            Factor { coeffs: &[972, 8748, 29590, -149106, -36820, -986280, 5942884, 2883672, -47189711, 43450125, 85975304, -156173934, 27378901, 123606417, -152209261, 64653597, 56621894, -88962768, 43754559, -5940597, -13006396, 17019366, -7037340, 413208, -28880], power: 1 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 2], power: -3 },
            Factor { coeffs: &[1, 0], power: -6 },
            Factor { coeffs: &[1, 0, -2], power: -1 },
            Factor { coeffs: &[1, 0, 1], power: -1 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (-1, 58320),
        factors: &[
            Factor { coeffs: &[972, 8748, 31534, -131610, 261546, -1552026, 3745643, 4573731, -29416804, 26163354, 19600850, -43126062, 31497249, -7381467, -22237963, 26778663, -9107024, -115074, 3136927, -5055609, 2292994, 14580, -1944], power: 1 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 2], power: -3 },
            Factor { coeffs: &[1, 0], power: -6 },
            Factor { coeffs: &[1, 0, 1], power: -1 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (1, 233280),
        factors: &[
            Factor { coeffs: &[486, -7290, -181459, 1024401, -2691213, 3921057, 1844321, -33347697, 80028903, -29292735, -98093906, 125034492, -46658244, -57216612, 88057996, -26383068, -12851392, 14179848, -8656508, 1593828, 134136, -58320, 7776], power: 1 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 2], power: -3 },
            Factor { coeffs: &[1, 0], power: -6 },
            Factor { coeffs: &[1, 0, 1], power: -1 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (1, 233280),
        factors: &[
            Factor { coeffs: &[486, -7776, -174169, 1205860, -4656806, 8763566, 7460036, -63559490, 91134324, 18516450, -122708655, 18577230, 80410332, -19357704, -39129236, 75311048, -77449360, 4053376, 48283912, -40690240, 17736336, -4315680, 544320, -31104], power: 1 },
            Factor { coeffs: &[1, -1], power: -1 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 2], power: -3 },
            Factor { coeffs: &[1, 0], power: -6 },
            Factor { coeffs: &[1, 0, 1], power: -1 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (1, 960),
        factors: &[
            Factor { coeffs: &[2, -30, -161, 107, 4137, -10685, 8367, 78713, -450859, 697707, 517846, -3723120, 6565124, -1468692, -8695792, 9535720, -6773160, 526744, 10691376, -7797264, 1137696, 523712, -2687872, 1701888, -245760], power: 1 },
            Factor { coeffs: &[1, 1], power: -3 },
            Factor { coeffs: &[1, 2], power: -3 },
            Factor { coeffs: &[1, 0], power: -8 },
            Factor { coeffs: &[1, 0, 1], power: -1 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (1, 960),
        factors: &[
            Factor { coeffs: &[2, -32, -129, 236, 4157, -15610, 21289, 67536, -511355, 1161830, -634128, -3001568, 9512164, -11014136, 2344968, 7126240, -13850504, 14466592, -3823216, -4018976, 5155776, -4633984, 1959808, -244480, -3584, -1024], power: 1 },
            Factor { coeffs: &[1, 1], power: -2 },
            Factor { coeffs: &[1, 2], power: -3 },
            Factor { coeffs: &[1, 0], power: -10 },
            Factor { coeffs: &[1, 0, 1], power: -1 },
            Factor { coeffs: &[2, 0, 1], power: -1 },
        ],
    },
    Branch {
        scale: (1, 960),
        factors: &[
            Factor { coeffs: &[2, -34, -101, 433, 5400, -26982, 23049, 166787, -717366, 1196092, 89468, -5130844, 12748688, -11274744, -12243496, 33980568, -14886656, -19910592, 20667776, -1262208, -5402752, 2217088, -235776, -2560, -1024], power: 1 },
            Factor { coeffs: &[1, -1], power: -1 },
            Factor { coeffs: &[1, 1], power: -2 },
            Factor { coeffs: &[1, 2], power: -3 },
            Factor { coeffs: &[1, 0], power: -10 },
            Factor { coeffs: &[2, 0, -1], power: -1 },
        ],
    },
    Branch {
        scale: (2, 15),
        factors: &[
            Factor { coeffs: &[180, -48, -648, 396, 214, -190, 39, -4, 1], power: 1 },
            Factor { coeffs: &[1, 1], power: -2 },
            Factor { coeffs: &[1, 0], power: -10 },
            Factor { coeffs: &[2, 0, -1], power: -1 },
        ],
    },
];

#[rustfmt::skip]
pub(crate) static ALT_SEG_AND: [Branch2; 4] = [
    Branch2 {
        scale: (-1, 54),
        factors: &[
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, -1)], power: 1 },
            Factor2 { terms: &[(5, 4, 0, 288), (5, 0, 0, 5), (4, 4, 0, 1152), (4, 0, 0, -148), (3, 4, 0, 1440), (3, 0, 0, 245), (2, 4, 0, 576), (2, 0, 0, -178), (1, 0, 0, -232), (0, 0, 0, 128)], power: 1 },
            Factor2 { terms: &[(0, 1, 0, 2), (0, 0, 0, -1)], power: -2 },
            Factor2 { terms: &[(0, 1, 0, 2), (0, 0, 0, 1)], power: -2 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 2)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1)], power: -2 },
        ],
    },
    Branch2 {
        scale: (-1, 216),
        factors: &[
            Factor2 { terms: &[(5, 4, 0, 1152), (5, 0, 0, 101), (4, 4, 0, 3456), (4, 0, 0, -801), (3, 4, 0, 1152), (3, 0, 0, 1302), (2, 4, 0, -3456), (2, 0, 0, -732), (1, 4, 0, -2304), (1, 0, 0, -536), (0, 0, 0, 672)], power: 1 },
            Factor2 { terms: &[(0, 1, 0, 2), (0, 0, 0, -1)], power: -2 },
            Factor2 { terms: &[(0, 1, 0, 2), (0, 0, 0, 1)], power: -2 },
            Factor2 { terms: &[(1, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 2)], power: -1 },
        ],
    },
    Branch2 {
        scale: (-1, 24),
        factors: &[
            Factor2 { terms: &[(8, 4, 0, 128), (8, 0, 0, -3), (7, 4, 0, 384), (7, 0, 0, 39), (6, 4, 0, 128), (6, 0, 0, -90), (5, 4, 0, -384), (5, 0, 0, -444), (4, 4, 0, -256), (4, 0, 0, 1344), (3, 0, 0, -792), (2, 0, 0, -864), (1, 0, 0, 1104), (0, 0, 0, -288)], power: 1 },
            Factor2 { terms: &[(0, 1, 0, 2), (0, 0, 0, -1)], power: -2 },
            Factor2 { terms: &[(0, 1, 0, 2), (0, 0, 0, 1)], power: -2 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 2)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1)], power: -4 },
        ],
    },
    Branch2 {
        scale: (-1, 3),
        factors: &[
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, -1)], power: 1 },
            Factor2 { terms: &[(6, 4, 0, 16), (5, 4, 0, 32), (4, 4, 0, 16), (4, 0, 0, -3), (3, 0, 0, -6), (2, 0, 0, 3), (1, 0, 0, 12), (0, 0, 0, -6)], power: 1 },
            Factor2 { terms: &[(0, 1, 0, 2), (0, 0, 0, -1)], power: -2 },
            Factor2 { terms: &[(0, 1, 0, 2), (0, 0, 0, 1)], power: -2 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1)], power: -4 },
        ],
    },
];

#[rustfmt::skip]
pub(crate) static ALT_ASSOC_AND: [Branch2; 4] = [
    Branch2 {
        scale: (1, 6),
        factors: &[
            Factor2 { terms: &[(6, 4, 0, 864), (6, 3, 1, -768), (6, 2, 0, 576), (6, 0, 0, -5), (5, 4, 0, 2592), (5, 2, 0, -1728), (5, 0, 0, 153), (4, 4, 0, 7776), (4, 3, 1, 4608), (4, 2, 0, -6912), (4, 0, 0, -393), (3, 4, 0, 18144), (3, 2, 0, 3456), (3, 0, 0, 423), (2, 4, 0, 7776), (2, 3, 1, -6912), (2, 2, 0, 12096), (2, 0, 0, 54), (1, 4, 0, -12960), (1, 2, 0, -1728), (1, 0, 0, -360), (0, 4, 0, -8640), (0, 3, 1, 3072), (0, 2, 0, -5760), (0, 0, 0, 128)], power: 1 },
            Factor2 { terms: &[(0, 1, 0, 6), (0, 0, 1, -1)], power: -2 },
            Factor2 { terms: &[(0, 1, 0, 6), (0, 0, 1, 1)], power: -2 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 2)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1)], power: -2 },
        ],
    },
    Branch2 {
        scale: (1, 216),
        factors: &[
            Factor2 { terms: &[(6, 4, 0, 3456), (6, 3, 1, -3072), (6, 2, 0, 2304), (6, 0, 0, -101), (5, 4, 0, 10368), (5, 2, 0, -6912), (5, 0, 0, 801), (4, 4, 0, 31104), (4, 3, 1, 18432), (4, 2, 0, -17280), (4, 0, 0, -1302), (3, 4, 0, 72576), (3, 3, 1, 4608), (3, 2, 0, 17280), (3, 0, 0, 732), (2, 4, 0, 58752), (2, 3, 1, -19968), (2, 2, 0, 4608), (2, 0, 0, 536), (1, 4, 0, 31104), (1, 3, 1, -9216), (1, 2, 0, -6912), (1, 0, 0, -672), (0, 4, 0, 20736), (0, 2, 0, 13824)], power: 1 },
            Factor2 { terms: &[(0, 2, 0, 12), (0, 0, 0, -1)], power: -2 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 2)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1)], power: -2 },
        ],
    },
    Branch2 {
        scale: (9, 8),
        factors: &[
            Factor2 { terms: &[(8, 0, 0, 1), (7, 0, 0, -13), (6, 4, 0, 1152), (6, 2, 0, -192), (6, 0, 0, 30), (5, 4, 0, 3456), (5, 2, 0, -576), (5, 0, 0, 148), (4, 4, 0, 2688), (4, 2, 0, -128), (4, 0, 0, -448), (3, 4, 0, 1152), (3, 2, 0, 768), (3, 0, 0, 264), (2, 4, 0, 768), (2, 2, 0, 512), (2, 0, 0, 288), (1, 0, 0, -368), (0, 0, 0, 96)], power: 1 },
            Factor2 { terms: &[(0, 1, 0, 6), (0, 0, 1, -1)], power: -2 },
            Factor2 { terms: &[(0, 1, 0, 6), (0, 0, 1, 1)], power: -2 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 2)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1)], power: -4 },
        ],
    },
    Branch2 {
        scale: (9, 1),
        factors: &[
            Factor2 { terms: &[(5, 4, 0, 144), (5, 2, 0, -24), (5, 0, 0, 1), (4, 4, 0, 144), (4, 2, 0, -24), (4, 0, 0, 1), (3, 4, 0, 48), (3, 2, 0, 32), (3, 0, 0, -3), (2, 4, 0, 48), (2, 2, 0, 32), (2, 0, 0, -3), (1, 0, 0, 6), (0, 0, 0, -2)], power: 1 },
            Factor2 { terms: &[(0, 1, 0, 6), (0, 0, 1, -1)], power: -2 },
            Factor2 { terms: &[(0, 1, 0, 6), (0, 0, 1, 1)], power: -2 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1)], power: -4 },
        ],
    },
];

#[rustfmt::skip]
pub(crate) static ALT_SEG_OR: [Branch2; 4] = [
    Branch2 {
        scale: (1, 108),
        factors: &[
            Factor2 { terms: &[(6, 0, 0, 47), (5, 0, 0, -195), (4, 4, 0, 576), (4, 2, 0, -288), (4, 0, 0, 860), (3, 4, 0, 1728), (3, 2, 0, -864), (3, 0, 0, -846), (2, 4, 0, 1152), (2, 2, 0, -576), (2, 0, 0, -108), (1, 0, 0, 720), (0, 0, 0, -256)], power: 1 },
            Factor2 { terms: &[(0, 1, 0, 2), (0, 0, 0, -1)], power: -2 },
            Factor2 { terms: &[(0, 1, 0, 2), (0, 0, 0, 1)], power: -2 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 2)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1)], power: -2 },
        ],
    },
    Branch2 {
        scale: (1, 216),
        factors: &[
            Factor2 { terms: &[(5, 0, 0, 175), (4, 0, 0, -579), (3, 4, 0, 1152), (3, 2, 0, -576), (3, 0, 0, 1450), (2, 4, 0, 3456), (2, 2, 0, -1728), (2, 0, 0, -732), (1, 4, 0, 2304), (1, 2, 0, -1152), (1, 0, 0, -536), (0, 0, 0, 672)], power: 1 },
            Factor2 { terms: &[(0, 1, 0, 2), (0, 0, 0, -1)], power: -2 },
            Factor2 { terms: &[(0, 1, 0, 2), (0, 0, 0, 1)], power: -2 },
            Factor2 { terms: &[(1, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 2)], power: -1 },
        ],
    },
    Branch2 {
        scale: (-1, 72),
        factors: &[
            Factor2 { terms: &[(8, 0, 0, 27), (7, 0, 0, -63), (6, 4, 0, -384), (6, 2, 0, 1728), (6, 0, 0, -270), (5, 4, 0, -1152), (5, 3, 1, 1024), (5, 2, 0, 576), (5, 0, 0, 756), (4, 3, 1, 1536), (4, 2, 0, -6912), (4, 0, 0, -2376), (3, 4, 0, 2304), (3, 3, 1, -2560), (3, 2, 0, 1152), (3, 0, 0, 2736), (2, 4, 0, 1536), (2, 3, 1, -3072), (2, 2, 0, 6912), (2, 0, 0, 1296), (1, 0, 0, -3312), (0, 0, 0, 864)], power: 1 },
            Factor2 { terms: &[(0, 1, 0, 2), (0, 0, 0, -1)], power: -2 },
            Factor2 { terms: &[(0, 1, 0, 2), (0, 0, 0, 1)], power: -2 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 2)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1)], power: -4 },
        ],
    },
    Branch2 {
        scale: (1, 9),
        factors: &[
            Factor2 { terms: &[(5, 4, 0, 48), (5, 2, 0, -72), (5, 0, 0, 9), (4, 4, 0, 48), (4, 2, 0, -72), (4, 0, 0, 9), (3, 4, 0, 32), (3, 3, 1, -64), (3, 2, 0, 144), (2, 4, 0, 32), (2, 3, 1, -64), (2, 2, 0, 144), (1, 0, 0, -54), (0, 0, 0, 18)], power: 1 },
            Factor2 { terms: &[(0, 1, 0, 2), (0, 0, 0, -1)], power: -2 },
            Factor2 { terms: &[(0, 1, 0, 2), (0, 0, 0, 1)], power: -2 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1)], power: -4 },
        ],
    },
];

#[rustfmt::skip]
pub(crate) static ALT_ASSOC_OR: [Branch2; 4] = [
    Branch2 {
        scale: (-1, 12),
        factors: &[
            Factor2 { terms: &[(6, 4, 0, 3456), (6, 3, 1, -3072), (6, 2, 0, 2304), (6, 0, 0, -47), (5, 4, 0, 10368), (5, 3, 1, -4608), (5, 0, 0, 195), (4, 4, 0, -12096), (4, 3, 1, 6144), (4, 2, 0, -1152), (4, 0, 0, -860), (3, 4, 0, -57024), (3, 2, 0, 17280), (3, 0, 0, 846), (2, 4, 0, -31104), (2, 3, 1, -13824), (2, 2, 0, -6912), (2, 0, 0, 108), (1, 4, 0, 20736), (1, 2, 0, -13824), (1, 0, 0, -720), (0, 4, 0, 13824), (0, 3, 1, 6144), (0, 2, 0, 9216), (0, 0, 0, 256)], power: 1 },
            Factor2 { terms: &[(0, 1, 0, 6), (0, 0, 1, -1)], power: -2 },
            Factor2 { terms: &[(0, 1, 0, 6), (0, 0, 1, 1)], power: -2 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 2)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1)], power: -2 },
        ],
    },
    Branch2 {
        scale: (-1, 216),
        factors: &[
            Factor2 { terms: &[(5, 4, 0, 6912), (5, 3, 1, -6144), (5, 2, 0, 4608), (5, 0, 0, -175), (4, 4, 0, 20736), (4, 3, 1, -9216), (4, 0, 0, 579), (3, 4, 0, -24192), (3, 3, 1, 12288), (3, 2, 0, -7488), (3, 0, 0, -1450), (2, 4, 0, -114048), (2, 3, 1, 4608), (2, 2, 0, 32832), (2, 0, 0, 732), (1, 4, 0, -76032), (1, 3, 1, -19968), (1, 2, 0, 8064), (1, 0, 0, 536), (0, 3, 1, -9216), (0, 2, 0, -27648), (0, 0, 0, -672)], power: 1 },
            Factor2 { terms: &[(0, 2, 0, 12), (0, 0, 0, -1)], power: -2 },
            Factor2 { terms: &[(1, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 2)], power: -1 },
        ],
    },
    Branch2 {
        scale: (-9, 8),
        factors: &[
            Factor2 { terms: &[(8, 0, 0, 3), (7, 0, 0, -7), (6, 4, 0, -1152), (6, 2, 0, 192), (6, 0, 0, -30), (5, 4, 0, -3456), (5, 2, 0, 576), (5, 0, 0, 84), (4, 4, 0, -2304), (4, 2, 0, 384), (4, 0, 0, -264), (3, 0, 0, 304), (2, 0, 0, 144), (1, 0, 0, -368), (0, 0, 0, 96)], power: 1 },
            Factor2 { terms: &[(0, 1, 0, 6), (0, 0, 1, -1)], power: -2 },
            Factor2 { terms: &[(0, 1, 0, 6), (0, 0, 1, 1)], power: -2 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 2)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1)], power: -4 },
        ],
    },
    Branch2 {
        scale: (9, 1),
        factors: &[
            Factor2 { terms: &[(5, 4, 0, 144), (5, 2, 0, -24), (5, 0, 0, 1), (4, 4, 0, 144), (4, 2, 0, -24), (4, 0, 0, 1), (1, 0, 0, -6), (0, 0, 0, 2)], power: 1 },
            Factor2 { terms: &[(0, 1, 0, 6), (0, 0, 1, -1)], power: -2 },
            Factor2 { terms: &[(0, 1, 0, 6), (0, 0, 1, 1)], power: -2 },
            Factor2 { terms: &[(1, 0, 0, 1), (0, 0, 0, 1)], power: -1 },
            Factor2 { terms: &[(1, 0, 0, 1)], power: -4 },
        ],
    },
];
