// Chebyshev coefficient tables generated by tools/gen_reference.py.
// Convention: f(u) = c[0]/2 + sum_{k>=1} c[k] T_k(u), u in [-1,1].

/// exp(-x) I0(x) on [0,8], u = x/4 - 1
pub(super) const I0_SMALL: [f64; 32] = [
    0.6767952744094760849952,
    -0.3046826723431983986825,
    0.1716209015222087753486,
    -0.09490109704804764442096,
    0.04930528423967070848778,
    -0.02373741480589946881557,
    0.01054646039459499831832,
    -0.004324309995050575944305,
    0.001639475616941335798419,
    -0.0005763755745385823658849,
    0.0001885028850958416557285,
    -0.00005754195010082103703976,
    0.00001644844807072889708932,
    -0.000004416738358458750563591,
    0.000001117387539120103718153,
    -2.670793853940611733914e-7,
    6.046995022541918949319e-8,
    -1.300025009986248042122e-8,
    2.659823724682386650347e-9,
    -5.189795601635262906656e-10,
    9.675809035373236912244e-11,
    -1.726826291441555707232e-11,
    2.955052663129639834608e-12,
    -4.856446783111929460898e-13,
    7.676185498604935616881e-14,
    -1.16853328779934516808e-14,
    1.715391285555133030606e-15,
    -2.431279846547954693595e-16,
    3.330794518822238097829e-17,
    -4.415341646479339379497e-18,
    5.669178006921496157086e-19,
    -7.057100692457293367118e-20,
];

/// exp(-x) sqrt(x) I0(x) on [8,inf), u = 16/x - 1
pub(super) const I0_LARGE: [f64; 29] = [
    0.8044904110141088316079,
    0.003369116478255694089898,
    0.00006889758346916823984263,
    0.000002891370520834756482967,
    2.048918589469063741828e-7,
    2.266668990498178064593e-8,
    3.396232025708386345151e-9,
    4.940602388224969589105e-10,
    1.188914710784643834241e-11,
    -3.149916527963241364539e-11,
    -1.321581184044771311875e-11,
    -1.794178531506806117779e-12,
    7.180124451383666233671e-13,
    3.852778382742142701141e-13,
    1.540086217521409826913e-14,
    -4.150569347287222086627e-14,
    -9.554846698828307648702e-15,
    3.811680669352622420746e-15,
    1.772560133056526383605e-15,
    -3.425485619677219134619e-16,
    -2.827623980516583484943e-16,
    3.461222867697461093107e-17,
    4.465621420296759999006e-17,
    -4.830504485944182071467e-18,
    -7.233180487874753953994e-18,
    9.921475412173698594359e-19,
    1.193650890845982084593e-18,
    -2.488709837150807203495e-19,
    -1.938426454160905962615e-19,
];

/// exp(-x) I1(x)/x on [0,8], u = x/4 - 1
pub(super) const I1_SMALL: [f64; 31] = [
    0.2525871864436336548233,
    -0.1764165183578340551527,
    0.1026436586898470953841,
    -0.05294598120809499142692,
    0.02472644903062651682829,
    -0.01056408489462619815576,
    0.00415642294431288815669,
    -0.001513572450631253148987,
    0.0005122859561685757728954,
    -0.0001617608158258967455879,
    0.00004781565107550054226378,
    -0.00001327316365603943582791,
    0.000003470251308137678476736,
    -8.568720264695454740656e-7,
    2.003294753552135262286e-7,
    -4.445059128796328080654e-8,
    9.381537386495771783882e-9,
    -1.887249751722829287904e-9,
    3.625590281552117037008e-10,
    -6.663489723502027742231e-11,
    1.173618629889090163082e-11,
    -1.983974397764943715199e-12,
    3.223793365945574709813e-13,
    -5.042185504727911687107e-14,
    7.600684294735406934074e-15,
    -1.105596947735386308026e-15,
    1.553631957736200468917e-16,
    -2.111421214358166078239e-17,
    2.777914112761046370485e-18,
    -3.54158177254213620523e-19,
    4.379302756655070994573e-20,
];

/// exp(-x) sqrt(x) I1(x) on [8,inf), u = 16/x - 1
pub(super) const I1_LARGE: [f64; 29] = [
    0.7785762350182801204745,
    -0.009761097491361468407765,
    -0.0001105889387626237162913,
    -0.000003882564808877690393457,
    -2.512236237870208925295e-7,
    -2.631468846889519506837e-8,
    -3.835380385964237022045e-9,
    -5.589743462196583806868e-10,
    -1.897495812350541234499e-11,
    3.252603583015488238555e-11,
    1.412580743661378133163e-11,
    2.035628544147089507225e-12,
    -7.198551776245908512093e-13,
    -4.083551111092197318228e-13,
    -2.10154184277266431302e-14,
    4.272440016711951354298e-14,
    1.042027698412880276417e-14,
    -3.814403072437007804767e-15,
    -1.880354775510782448513e-15,
    3.308202310920928282732e-16,
    2.962628997645950139069e-16,
    -3.209525921993423958788e-17,
    -4.650305368489358325566e-17,
    4.414348323071707950156e-18,
    7.51729631084210480485e-18,
    -9.314178867326883370965e-19,
    -1.242193275194890955219e-18,
    2.414276719454848436439e-19,
    2.026944384053285213742e-19,
];

/// K0(x) + log(x/2) I0(x) on (0,2], u = x^2/2 - 1
pub(super) const K0_SMALL: [f64; 11] = [
    -0.5353273932339027687201,
    0.3442898999246284868863,
    0.03597993651536150162657,
    0.001264615411446925923385,
    0.00002286212103119451786083,
    2.534791079026149457308e-7,
    1.904516377220208858972e-9,
    1.03496952576336245851e-11,
    4.259816142791082576524e-14,
    1.374465435880750896942e-16,
    3.570896528508373590997e-19,
];

/// exp(x) sqrt(x) K0(x) on [2,inf), u = 4/x - 1
pub(super) const K0_LARGE: [f64; 27] = [
    2.440303082065955454677,
    -0.03144810131196450054272,
    0.001569883885730053374913,
    -0.0001284954958162780263836,
    0.00001394981371887649936408,
    -0.000001831755522719119484778,
    2.76681363944501507614e-7,
    -4.660489897687947665561e-8,
    8.574034017414226085822e-9,
    -1.697534509389061515644e-9,
    3.577397281400328447163e-10,
    -7.957489244477397037735e-11,
    1.855949114954926554973e-11,
    -4.514597883374519175066e-12,
    1.140340588207344234725e-12,
    -2.980096923148178354834e-13,
    8.032890775068374369446e-14,
    -2.227513326746296360447e-14,
    6.340076476276645966132e-15,
    -1.848593377920907169411e-15,
    5.51205599940433336489e-16,
    -1.678231125754900638322e-16,
    5.210391777643554112541e-17,
    -1.647580593984263281528e-17,
    5.300433771177335771039e-18,
    -1.733171200582100027821e-18,
    5.755109202882729379373e-19,
];

/// x K1(x) - 1 - x log(x/2) I1(x) on (0,2], u = x^2/2 - 1
pub(super) const K1_SMALL: [f64; 11] = [
    -0.4746997726610522294675,
    -0.3531559607765448756672,
    -0.1226111808226571482348,
    -0.006975723859639864350181,
    -0.0001730288957513052063018,
    -0.00000243340614156596823496,
    -2.213387630734725855832e-8,
    -1.411488392633527761096e-10,
    -6.666901694199329006085e-13,
    -2.427449850519365933926e-15,
    -7.023863479386287597178e-18,
];

/// exp(x) sqrt(x) K1(x) on [2,inf), u = 4/x - 1
pub(super) const K1_LARGE: [f64; 27] = [
    2.720626190484442669447,
    0.1039237365768172384374,
    -0.0028578168596227793868,
    0.0001952155184713516311077,
    -0.0000193619797416608296002,
    0.000002406484947837217117059,
    -3.501960603087812542096e-7,
    5.741084125450049292307e-8,
    -1.034576246567809702666e-8,
    2.015049755197034616148e-9,
    -4.190354759341925584241e-10,
    9.218315187605314125826e-11,
    -2.129967838427791021553e-11,
    5.139639673482343540396e-12,
    -1.289173960949822935197e-12,
    3.348419666052243120096e-13,
    -8.976705182010146069151e-14,
    2.477154424219598681335e-14,
    -7.019837089214768851312e-15,
    2.038703166239860879929e-15,
    -6.057047270643017822781e-16,
    1.838093575243045425562e-16,
    -5.689462849193648374251e-17,
    1.79405104788635729143e-17,
    -5.756744482073302450286e-18,
    1.877865190162326740113e-18,
    -6.221645287352609185183e-19,
];
