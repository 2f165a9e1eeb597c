// max relative error vs 60-digit evaluation: 6.73e-16
pub(crate) const I0_SMALL: [f64; 32] = [
    0.67679527440947608,
    -0.30468267234319840,
    0.17162090152220878,
    -0.094901097048047644,
    0.049305284239670708,
    -0.023737414805899469,
    0.010546460394594998,
    -0.0043243099950505759,
    0.0016394756169413358,
    -0.00057637557453858237,
    0.00018850288509584166,
    -5.7541950100821037e-5,
    1.6448448070728897e-5,
    -4.4167383584587506e-6,
    1.1173875391201037e-6,
    -2.6707938539406117e-7,
    6.0469950225419189e-8,
    -1.3000250099862480e-8,
    2.6598237246823867e-9,
    -5.1897956016352629e-10,
    9.6758090353732369e-11,
    -1.7268262914415557e-11,
    2.9550526631296398e-12,
    -4.8564467831119295e-13,
    7.6761854986049356e-14,
    -1.1685332877993452e-14,
    1.7153912855551330e-15,
    -2.4312798465479547e-16,
    3.3307945188222381e-17,
    -4.4153416464793394e-18,
    5.6691780069214962e-19,
    -7.0571006924572934e-20,
];
// max relative error vs 60-digit evaluation: 1.39e-16
pub(crate) const I0_LARGE: [f64; 32] = [
    0.80449041101410883,
    0.0033691164782556941,
    6.8897583469168240e-5,
    2.8913705208347565e-6,
    2.0489185894690637e-7,
    2.2666689904981781e-8,
    3.3962320257083863e-9,
    4.9406023882249696e-10,
    1.1889147107846438e-11,
    -3.1499165279632414e-11,
    -1.3215811840447713e-11,
    -1.7941785315068061e-12,
    7.1801244513836662e-13,
    3.8527783827421427e-13,
    1.5400862175214098e-14,
    -4.1505693472872221e-14,
    -9.5548466988283065e-15,
    3.8116806693526212e-15,
    1.7725601330565245e-15,
    -3.4254856196771422e-16,
    -2.8276239805166456e-16,
    3.4612228676956578e-17,
    4.4656214203020775e-17,
    -4.8305044859640107e-18,
    -7.2331804880438443e-18,
    9.9214754156570380e-19,
    1.1936508909418693e-18,
    -2.4887098521860110e-19,
    -1.9384264345477928e-19,
    6.4446569908125755e-20,
    2.8860503705458255e-20,
    -1.6019542637035064e-20,
];
// max relative error vs 60-digit evaluation: 9.61e-16
pub(crate) const I1_SMALL: [f64; 31] = [
    0.25258718644363365,
    -0.17641651835783406,
    0.10264365868984710,
    -0.052945981208094991,
    0.024726449030626517,
    -0.010564084894626198,
    0.0041564229443128882,
    -0.0015135724506312531,
    0.00051228595616857577,
    -0.00016176081582589675,
    4.7815651075500542e-5,
    -1.3273163656039436e-5,
    3.4702513081376785e-6,
    -8.5687202646954547e-7,
    2.0032947535521353e-7,
    -4.4450591287963281e-8,
    9.3815373864957718e-9,
    -1.8872497517228293e-9,
    3.6255902815521170e-10,
    -6.6634897235020277e-11,
    1.1736186298890902e-11,
    -1.9839743977649437e-12,
    3.2237933659455747e-13,
    -5.0421855047279117e-14,
    7.6006842947354069e-15,
    -1.1055969477353863e-15,
    1.5536319577362005e-16,
    -2.1114212143581661e-17,
    2.7779141127610464e-18,
    -3.5415817725421362e-19,
    4.3793027566550710e-20,
];
// max relative error vs 60-digit evaluation: 1.44e-16
pub(crate) const I1_LARGE: [f64; 32] = [
    0.77857623501828012,
    -0.0097610974913614684,
    -0.00011058893876262372,
    -3.8825648088776904e-6,
    -2.5122362378702089e-7,
    -2.6314688468895195e-8,
    -3.8353803859642370e-9,
    -5.5897434621965838e-10,
    -1.8974958123505412e-11,
    3.2526035830154882e-11,
    1.4125807436613781e-11,
    2.0356285441470895e-12,
    -7.1985517762459085e-13,
    -4.0835511110921973e-13,
    -2.1015418427726643e-14,
    4.2724400167119514e-14,
    1.0420276984128802e-14,
    -3.8144030724370065e-15,
    -1.8803547755107806e-15,
    3.3082023109208502e-16,
    2.9626289976460158e-16,
    -3.2095259219916369e-17,
    -4.6503053684947829e-17,
    4.4143483230939370e-18,
    7.5172963110113977e-18,
    -9.3141788709072627e-19,
    -1.2421932752759928e-18,
    2.4142767346412148e-19,
    2.0269443636103563e-19,
    -6.3942674750083222e-20,
    -3.0498112029097513e-20,
    1.6128411449414144e-20,
];
// max relative error vs 60-digit evaluation: 1.85e-16
pub(crate) const K0_LARGE: [f64; 30] = [
    2.4403030820659555,
    -0.031448101311964501,
    0.0015698838857300534,
    -0.00012849549581627803,
    1.3949813718876499e-5,
    -1.8317555227191195e-6,
    2.7668136394450151e-7,
    -4.6604898976879477e-8,
    8.5740340174142261e-9,
    -1.6975345093890615e-9,
    3.5773972814003284e-10,
    -7.9574892444773970e-11,
    1.8559491149549266e-11,
    -4.5145978833745192e-12,
    1.1403405882073442e-12,
    -2.9800969231481784e-13,
    8.0328907750683744e-14,
    -2.2275133267462964e-14,
    6.3400764762766460e-15,
    -1.8485933779209072e-15,
    5.5120559994043333e-16,
    -1.6782311257549004e-16,
    5.2103917776435490e-17,
    -1.6475805939842516e-17,
    5.3004337711770655e-18,
    -1.7331712005814716e-18,
    5.7551092028680416e-19,
    -1.9390956052838416e-19,
    6.6246105337206253e-20,
    -2.2932197151180620e-20,
];
// max relative error vs 60-digit evaluation: 1.77e-16
pub(crate) const K1_LARGE: [f64; 30] = [
    2.7206261904844427,
    0.10392373657681724,
    -0.0028578168596227794,
    0.00019521551847135163,
    -1.9361979741660830e-5,
    2.4064849478372171e-6,
    -3.5019606030878125e-7,
    5.7410841254500493e-8,
    -1.0345762465678097e-8,
    2.0150497551970346e-9,
    -4.1903547593419256e-10,
    9.2183151876053141e-11,
    -2.1299678384277910e-11,
    5.1396396734823435e-12,
    -1.2891739609498229e-12,
    3.3484196660522431e-13,
    -8.9767051820101461e-14,
    2.4771544242195987e-14,
    -7.0198370892147688e-15,
    2.0387031662398609e-15,
    -6.0570472706430177e-16,
    1.8380935752430452e-16,
    -5.6894628491936431e-17,
    1.7940510478863451e-17,
    -5.7567444820730196e-18,
    1.8778651901616689e-18,
    -6.2216452873372239e-19,
    2.0919125269469384e-19,
    -7.1327129074857847e-20,
    2.4645751397016273e-20,
];
