//! High-precision reference values; regenerate with generate.py.

#![allow(dead_code)]

/// `(x, erf hi, erf lo, erfc hi, erfc lo)`.
pub const ERF: &[(f64, f64, f64, f64, f64)] = &[
    (1e-08, 1.1283791670955126e-08, -5.879607832080608e-25, 0.9999999887162083, 7.851539405310018e-18),
    (0.001, 0.0011283787909692365, -7.88735357945236e-20, 0.9988716212090307, 3.911015174527268e-17),
    (0.05, 0.05637197779701663, -3.0187592103739513e-18, 0.9436280222029834, 9.95765311428118e-18),
    (0.1, 0.1124629160182849, 9.255497413884101e-19, 0.887537083981715, 5.4585601489869416e-17),
    (0.25, 0.27632639016823696, -2.4227076221184163e-17, 0.7236736098317631, -3.128407501007366e-17),
    (0.4999, 0.5204119951613866, 3.404274921334817e-18, 0.4795880048386134, -3.404274921334817e-18),
    (0.5, 0.5204998778130465, 1.900077467916287e-17, 0.4795001221869535, -1.900077467916287e-17),
    (0.75, 0.7111556336535151, 4.69744077164289e-17, 0.28884436634648486, 8.536743514828927e-18),
    (0.8, 0.7421009647076605, -2.7617187363617345e-18, 0.2578990352923395, 2.7617187363617345e-18),
    (1.0, 0.8427007929497149, -2.4801011789118602e-17, 0.15729920705028513, -2.954563826510312e-18),
    (1.25, 0.9229001282564583, -5.51775442986392e-17, 0.07709987174354177, -3.3360693261863044e-19),
    (1.5, 0.9661051464753108, -3.3867031441680696e-17, 0.033894853524689274, -8.274380778554473e-19),
    (1.9, 0.9927904292352575, -4.272839049231346e-17, 0.0072095707647425325, 2.2766533088168416e-19),
    (2.0, 0.9953222650189527, 2.20719858329765e-17, 0.004677734981047266, -3.8794238326641256e-19),
    (2.2, 0.9981371537020182, -5.4872057312796384e-17, 0.0018628462979818898, 1.142738502985864e-20),
    (2.5, 0.999593047982555, 4.6925151097042234e-17, 0.0004069520174449589, 2.080297158010754e-20),
    (3.0, 0.9999779095030014, 5.363397058636269e-17, 2.209049699858544e-05, 1.5563377960343457e-22),
    (3.5, 0.9999992569016276, 4.9647279187212204e-17, 7.430983723414128e-07, -3.117067749063089e-23),
    (4.0, 0.9999999845827421, 1.44826531920025e-17, 1.541725790028002e-08, -1.1417872168371026e-24),
    (4.5, 0.9999999998033839, 1.2614727975054947e-17, 1.9661604415428876e-10, -1.0512550512761318e-26),
    (5.0, 0.9999999999984626, -2.294992711807301e-17, 1.537459794428035e-12, -8.569418222079096e-29),
    (6.0, 1.0, -2.1519736712498913e-17, 2.1519736712498913e-17, 3.1898197253599377e-34),
    (-0.3, -0.3286267594591274, -2.2908254446982777e-17, 1.3286267594591274, -3.2602896784275053e-17),
    (-1.7, -0.9837904585907745, -4.16538078253101e-17, 1.9837904585907746, -6.936849463720555e-17),
];

/// One-dimensional border integrals `½∫ k(a − x) dx` on [-1, 1]: `(family, a, θ, hi, lo)`.
pub const BORDER: &[(&str, f64, f64, f64, f64)] = &[
    ("exp-p1", 0.5, 1.3, 0.5137231352509501, -1.0162322907813653e-17),
    ("exp-p1", -0.9, 80.0, 0.01249790335857561, -3.2245757103981477e-19),
    ("gauss-p2", 0.0, 1.0, 0.746824132812427, 3.6962485080352814e-17),
    ("gauss-p2", 0.6, 0.02, 0.9863407218891893, 6.296254450106702e-18),
    ("matern-3-2", 0.3, 2.0, 0.636173134955345, 3.152953511441261e-17),
    ("matern-3-2", 1.0, 5.0, 0.257654739656208, 6.2681309046386674e-18),
    ("matern-5-2", 0.0, 5.0, 0.5072799382702029, -4.0847272747799156e-17),
    ("matern-5-2", 0.42, 10.0, 0.35927648712773735, 1.2844499699452346e-17),
    ("matern-5-2", -1.0, 0.01, 0.9891632434474016, -1.2001342803158948e-17),
];

/// Pair integrals `½∫ k(a − x) k(b − x) dx` on [-1, 1]: `(family, a, b, θ, hi, lo)`.
pub const PAIR: &[(&str, f64, f64, f64, f64, f64)] = &[
    ("exp-p1", 0.1, 0.6, 1.0, 0.3699636683410345, -2.1014544419571698e-17),
    ("exp-p1", -0.2, 0.5, 3.0, 0.06267711026449364, -3.460641083512543e-18),
    ("exp-p1", 0.2, 0.2, 1.0, 0.426846382178983, 2.1556275469183767e-18),
    ("gauss-p2", -0.3, 0.8, 1.7, 0.16740935313134195, -4.7665965321544696e-18),
    ("gauss-p2", 0.1, 0.5, 1.0, 0.529065090857601, 1.1401303383176623e-17),
    ("matern-3-2", 0.3, 0.3, 2.0, 0.4714171167542526, -4.829209830119344e-18),
    ("matern-3-2", 0.1, -0.3, 1.0, 0.5902824339545423, 7.604846636660129e-18),
    ("matern-3-2", 0.2, 0.2, 4.0, 0.3550462107004528, 1.1609097054686347e-17),
    ("matern-5-2", -0.2, 0.7, 2.5, 0.2734100999676872, 2.1114808149681766e-17),
    ("matern-5-2", -0.95, 0.9, 60.0, 6.93574912898793e-11, 3.279373957266741e-27),
];

/// Unit-interval integrals `∫₀¹ e^{-θ|a-x|} dx` and pair products: `(a, b or NaN, θ, hi, lo)`.
pub const UNIT: &[(f64, f64, f64, f64, f64)] = &[
    (0.3, f64::NAN, 0.7, 0.8239847997791383, 3.827788294742166e-17),
    (0.5, f64::NAN, 1.0, 0.7869386805747332, 1.3186356830982827e-18),
    (0.2, 0.7, 2.0, 0.29885392952546225, -1.1727939781076321e-17),
    (0.9, 0.05, 15.0, 2.6340572665230315e-06, -1.7879317681746418e-22),
];

/// Correlations: `(family, θ, Δ, hi, lo)`.
pub const CORR: &[(&str, f64, f64, f64, f64)] = &[
    ("matern-5-2", 2.0, 0.4, 0.7898447716093571, -1.8876522933839873e-18),
    ("matern-3-2", 3.0, 0.25, 0.8266414672967758, -5.1794719086733616e-17),
    ("exp-p1", 1.0, 0.5, 0.6065306597126334, -6.593178415491414e-19),
    ("gauss-p2", 0.5, 0.3, 0.9559974818331, -4.999315238082102e-17),
    ("gauss-p2", 2.0, 0.6, 0.4867522559599717, -4.270313383921698e-18),
];

/// Expanded rational-exponential forms of the Matérn pair integrals on a
/// 5×5×5 grid (a, b, θ), evaluated with a ≤ b: `(a, b, θ, m32, m52)`.
pub const EXPANDED_PAIR_GRID: &[(f64, f64, f64, f64, f64)] = &[
    (-0.8, -0.8, 0.05, 0.9006993300999317, 0.9282734173739368),
    (-0.8, -0.8, 0.3, 0.6664387409857012, 0.711331284919804),
    (-0.8, -0.8, 1.0, 0.4514197245868511, 0.48347976400410136),
    (-0.8, -0.8, 3.0, 0.2996215543546566, 0.31981626340135794),
    (-0.8, -0.8, 10.0, 0.19256133432621103, 0.2066761485357095),
    (-0.8, -0.3, 0.05, 0.9250022955546215, 0.9471384956442217),
    (-0.8, -0.3, 0.3, 0.7246462708281284, 0.7691386651826567),
    (-0.8, -0.3, 1.0, 0.4991716618347617, 0.5394157804023261),
    (-0.8, -0.3, 3.0, 0.2929941479391749, 0.32062966821824634),
    (-0.8, -0.3, 10.0, 0.11499355576938967, 0.1258831459733514),
    (-0.8, 0.0, 0.05, 0.9284405942199511, 0.9499491851436698),
    (-0.8, 0.0, 0.3, 0.7247996484354319, 0.7718489309194594),
    (-0.8, 0.0, 1.0, 0.4719375079631608, 0.5159224285602064),
    (-0.8, 0.0, 3.0, 0.22776882513217678, 0.25082892819089553),
    (-0.8, 0.0, 10.0, 0.05210241272422092, 0.05390877160048225),
    (-0.8, 0.4, 0.05, 0.9195811718417987, 0.9435182161291842),
    (-0.8, 0.4, 0.3, 0.6861843710064461, 0.7377427300304004),
    (-0.8, 0.4, 1.0, 0.3932941687535796, 0.4349131893911969),
    (-0.8, 0.4, 3.0, 0.13698842661449917, 0.14775848837909936),
    (-0.8, 0.4, 10.0, 0.01379270671333087, 0.012082325339655156),
    (-0.8, 0.9, 0.05, 0.8885484028027513, 0.9198495623320773),
    (-0.8, 0.9, 0.3, 0.5902450282124061, 0.6462219874871239),
    (-0.8, 0.9, 1.0, 0.2687702587547541, 0.2990065536613879),
    (-0.8, 0.9, 3.0, 0.05850549855872165, 0.05907157820217227),
    (-0.8, 0.9, 10.0, 0.0019917020915709016, 0.0012766043154284134),
    (-0.3, -0.8, 0.05, 0.9250022955546215, 0.9471384956442217),
    (-0.3, -0.8, 0.3, 0.7246462708281284, 0.7691386651826567),
    (-0.3, -0.8, 1.0, 0.4991716618347617, 0.5394157804023261),
    (-0.3, -0.8, 3.0, 0.2929941479391749, 0.32062966821824634),
    (-0.3, -0.8, 10.0, 0.11499355576938967, 0.1258831459733514),
    (-0.3, -0.3, 0.05, 0.9508073958649254, 0.9668607793123651),
    (-0.3, -0.3, 0.3, 0.8004663896563552, 0.8414074930434858),
    (-0.3, -0.3, 1.0, 0.6016316135491121, 0.6470494308422066),
    (-0.3, -0.3, 3.0, 0.39915484370580784, 0.43314339303885724),
    (-0.3, -0.3, 10.0, 0.227603053532041, 0.24699644116910605),
    (-0.3, 0.0, 0.05, 0.9549007628813809, 0.9700250246588848),
    (-0.3, 0.0, 0.3, 0.8091023609718131, 0.850824409484069),
    (-0.3, 0.0, 1.0, 0.6008771870446923, 0.6495219525379625),
    (-0.3, 0.0, 3.0, 0.37456820252887957, 0.4092449647942045),
    (-0.3, 0.0, 10.0, 0.17719051248253365, 0.19418360289272252),
    (-0.3, 0.4, 0.05, 0.9465092815927799, 0.9638472664165019),
    (-0.3, 0.4, 0.3, 0.7759512668238355, 0.8213294794133499),
    (-0.3, 0.4, 1.0, 0.5327909929790094, 0.5817191264627708),
    (-0.3, 0.4, 3.0, 0.27146347359117323, 0.2989159369244781),
    (-0.3, 0.4, 10.0, 0.07132869287156333, 0.075334188784173),
    (-0.3, 0.9, 0.05, 0.915313604156532, 0.9401209170045338),
    (-0.3, 0.9, 0.3, 0.6755851536354949, 0.7272060997171141),
    (-0.3, 0.9, 1.0, 0.38353779845652036, 0.42438897446734397),
    (-0.3, 0.9, 3.0, 0.1334488640268152, 0.14429958546194696),
    (-0.3, 0.9, 10.0, 0.013585247122077126, 0.011957356396336796),
    (0.0, -0.8, 0.05, 0.9284405942199511, 0.9499491851436698),
    (0.0, -0.8, 0.3, 0.7247996484354319, 0.7718489309194594),
    (0.0, -0.8, 1.0, 0.4719375079631608, 0.5159224285602064),
    (0.0, -0.8, 3.0, 0.22776882513217678, 0.25082892819089553),
    (0.0, -0.8, 10.0, 0.05210241272422092, 0.05390877160048225),
    (0.0, -0.3, 0.05, 0.9549007628813809, 0.9700250246588848),
    (0.0, -0.3, 0.3, 0.8091023609718131, 0.850824409484069),
    (0.0, -0.3, 1.0, 0.6008771870446923, 0.6495219525379625),
    (0.0, -0.3, 3.0, 0.37456820252887957, 0.4092449647942045),
    (0.0, -0.3, 10.0, 0.17719051248253365, 0.19418360289272252),
    (0.0, 0.0, 0.05, 0.9593858771862538, 0.9733835602878024),
    (0.0, 0.0, 0.3, 0.8239438506482037, 0.8646772075787952),
    (0.0, 0.0, 1.0, 0.6250389746854162, 0.6743338948143963),
    (0.0, 0.0, 3.0, 0.4081975967297233, 0.44377987406089514),
    (0.0, 0.0, 10.0, 0.22813965193723376, 0.24744754156169335),
    (0.0, 0.4, 0.05, 0.9514424869180683, 0.9674273332899025),
    (0.0, 0.4, 0.3, 0.7977634275121409, 0.8402350066627858),
    (0.0, 0.4, 1.0, 0.5827302678399255, 0.6308188717688917),
    (0.0, 0.4, 3.0, 0.35087148121046957, 0.38438294422793473),
    (0.0, 0.4, 10.0, 0.14806801143051293, 0.16228671077978876),
    (0.0, 0.9, 0.05, 0.9205928446509185, 0.9438955972227101),
    (0.0, 0.9, 0.3, 0.7009608984937629, 0.7493306827567822),
    (0.0, 0.9, 1.0, 0.4379626695373984, 0.4805101081476967),
    (0.0, 0.9, 3.0, 0.19589002133227668, 0.21566483273961565),
    (0.0, 0.9, 10.0, 0.03739438819678984, 0.03763721372550539),
    (0.4, -0.8, 0.05, 0.9195811718417987, 0.9435182161291842),
    (0.4, -0.8, 0.3, 0.6861843710064461, 0.7377427300304004),
    (0.4, -0.8, 1.0, 0.3932941687535796, 0.4349131893911969),
    (0.4, -0.8, 3.0, 0.13698842661449917, 0.14775848837909936),
    (0.4, -0.8, 10.0, 0.01379270671333087, 0.012082325339655156),
    (0.4, -0.3, 0.05, 0.9465092815927799, 0.9638472664165019),
    (0.4, -0.3, 0.3, 0.7759512668238355, 0.8213294794133499),
    (0.4, -0.3, 1.0, 0.5327909929790094, 0.5817191264627708),
    (0.4, -0.3, 3.0, 0.27146347359117323, 0.2989159369244781),
    (0.4, -0.3, 10.0, 0.07132869287156333, 0.075334188784173),
    (0.4, 0.0, 0.05, 0.9514424869180683, 0.9674273332899025),
    (0.4, 0.0, 0.3, 0.7977634275121409, 0.8402350066627858),
    (0.4, 0.0, 1.0, 0.5827302678399255, 0.6308188717688917),
    (0.4, 0.0, 3.0, 0.35087148121046957, 0.38438294422793473),
    (0.4, 0.0, 10.0, 0.14806801143051293, 0.16228671077978876),
    (0.4, 0.4, 0.05, 0.9442089479462937, 0.961828825058047),
    (0.4, 0.4, 0.3, 0.7824818680470413, 0.8236980320011771),
    (0.4, 0.4, 1.0, 0.5830350627402829, 0.6257538063651489),
    (0.4, 0.4, 3.0, 0.3906876313119621, 0.42311647205409386),
    (0.4, 0.4, 10.0, 0.22673906060496313, 0.24615415849352867),
    (0.4, 0.9, 0.05, 0.9142739021690771, 0.9388077789041335),
    (0.4, 0.9, 0.3, 0.6965317104118591, 0.7417511582149661),
    (0.4, 0.9, 1.0, 0.4684413419328948, 0.5061978247548872),
    (0.4, 0.9, 3.0, 0.27367976243185277, 0.2991866868391487),
    (0.4, 0.9, 10.0, 0.10972555289217101, 0.12043010858915124),
    (0.9, -0.8, 0.05, 0.8885484028027513, 0.9198495623320773),
    (0.9, -0.8, 0.3, 0.5902450282124061, 0.6462219874871239),
    (0.9, -0.8, 1.0, 0.2687702587547541, 0.2990065536613879),
    (0.9, -0.8, 3.0, 0.05850549855872165, 0.05907157820217227),
    (0.9, -0.8, 10.0, 0.0019917020915709016, 0.0012766043154284134),
    (0.9, -0.3, 0.05, 0.915313604156532, 0.9401209170045338),
    (0.9, -0.3, 0.3, 0.6755851536354949, 0.7272060997171141),
    (0.9, -0.3, 1.0, 0.38353779845652036, 0.42438897446734397),
    (0.9, -0.3, 3.0, 0.1334488640268152, 0.14429958546194696),
    (0.9, -0.3, 10.0, 0.013585247122077126, 0.011957356396336796),
    (0.9, 0.0, 0.05, 0.9205928446509185, 0.9438955972227101),
    (0.9, 0.0, 0.3, 0.7009608984937629, 0.7493306827567822),
    (0.9, 0.0, 1.0, 0.4379626695373984, 0.4805101081476967),
    (0.9, 0.0, 3.0, 0.19589002133227668, 0.21566483273961565),
    (0.9, 0.0, 10.0, 0.03739438819678984, 0.03763721372550539),
    (0.9, 0.4, 0.05, 0.9142739021690771, 0.9388077789041335),
    (0.9, 0.4, 0.3, 0.6965317104118591, 0.7417511582149661),
    (0.9, 0.4, 1.0, 0.4684413419328948, 0.5061978247548872),
    (0.9, 0.4, 3.0, 0.27367976243185277, 0.2991866868391487),
    (0.9, 0.4, 10.0, 0.10972555289217101, 0.12043010858915124),
    (0.9, 0.9, 0.05, 0.8860161160666185, 0.9167750601288925),
    (0.9, 0.9, 0.3, 0.6287337290451936, 0.6752452272770293),
    (0.9, 0.9, 1.0, 0.40574730468100184, 0.43685556700929157),
    (0.9, 0.9, 3.0, 0.2570053514355331, 0.2750893767949509),
    (0.9, 0.9, 10.0, 0.1604026406232738, 0.17118034801108492),
];

/// IMSPE of small designs: `(family, θ, flattened points, d, hi, lo)`.
pub const IMSPE: &[(&str, &[f64], &[f64], usize, f64, f64)] = &[
    ("exp-p1", &[1.0], &[0.0], 1, 0.7357588823428847, -2.4857507345576725e-17),
    ("matern-5-2", &[4.0], &[0.25], 1, 0.9199446902806513, 4.226569640796157e-17),
    ("matern-3-2", &[1.0], &[0.5, -0.5], 1, 0.1277925319565868, -3.5652902796320734e-18),
    ("exp-p1", &[0.01], &[0.35, -0.35], 1, 0.00503249292288722, -6.658235969350667e-20),
    ("gauss-p2", &[1.0], &[-0.5, 0.5], 1, 0.1076652114432696, -4.72632185736775e-18),
    ("matern-5-2", &[0.3], &[0.9, -0.1, 0.4], 1, 0.02339651103226219, 6.236941191480141e-19),
    ("gauss-p2", &[0.064, 0.00016], &[0.767117, 0.0, -0.767117, 0.0, 0.3, 0.2, -0.3, -0.2], 2, 4.798394120749494e-05, -9.68386084244212e-22),
    ("exp-p1", &[2.0, 0.5], &[0.1, -0.4, -0.6, 0.3, 0.8, 0.8], 2, 0.7000211999120849, 5.011956304764474e-17),
];

/// Coefficients of the twin-limit series `c0 + c2·θδ²` of the Gaussian
/// pair, from the exact IMSPE at δ ≈ 1e-30: `(x_t, θ, c0 hi, c0 lo, c2 hi, c2 lo)`.
pub const GAUSS_SERIES: &[(f64, f64, f64, f64, f64, f64)] = &[
    (0.0, 0.1, 0.005503736868817926, 1.0256523932267244e-19, -0.19495275158288047, -1.2602575207094081e-17),
    (0.0, 1.0, 0.2749473726628002, 1.7609451812585126e-17, -1.4054219572117193, -1.428764761620119e-17),
    (0.0, 10.0, 1.3404220376023046, -1.0284016202564098e-16, -2.098992367783861, 2.161496470892581e-16),
    (0.2, 1.5, 0.484369115904448, 1.9276176030824843e-17, -1.7219713589481696, 3.606273162916897e-17),
    (0.5, 5.0, 1.1243681256234608, -6.911690213357732e-17, -1.967715310077056, -5.462646069656608e-17),
    (-0.7, 0.5, 0.3642246671856125, 1.1387618810546103e-18, -1.461422219305363, 4.5736814219958515e-17),
];

/// Second twin-limit coefficient at the centre: `(θ, hi, lo)`.
pub const CENTRE_C2: &[(f64, f64, f64)] = &[
    (1e-06, -1.9999995333329045e-06, -1.6768870905376726e-22),
    (0.01, -0.019952909823974296, 1.4608441026042743e-18),
    (0.1, -0.19495275158288047, -1.2530596907210697e-17),
    (1.0, -1.4054219572117193, -1.4287163169220864e-17),
    (10.0, -2.098992367783861, 2.1614964878843023e-16),
    (100.0, -2.0313328534328874, -1.1983346021120983e-16),
];
