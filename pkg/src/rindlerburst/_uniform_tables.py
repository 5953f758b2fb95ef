"""Generated by scripts/generate_bessel_tables.py -- do not edit.

Coefficient tables for the uniform Airy-type expansion of the scaled
imaginary-order modified Bessel kernels (see specfun.py).
"""

# Debye coefficients w_k as {tau_power: rational_string}
DEBYE_W = [{"0": "1"}, {"3": "-5/24", "1": "-1/8"}, {"6": "385/1152", "4": "77/192", "2": "9/128"}, {"9": "-85085/82944", "7": "-17017/9216", "5": "-4563/5120", "3": "-75/1024"}, {"12": "37182145/7962624", "10": "7436429/663552", "8": "144001/16384", "6": "96833/40960", "4": "3675/32768"}, {"15": "-5391411025/191102976", "13": "-5391411025/63700992", "11": "-108313205/1179648", "9": "-250881631/5898240", "7": "-67608983/9175040", "5": "-59535/262144"}, {"18": "5849680962125/27518828544", "16": "1169936192425/1528823808", "14": "4445922195/4194304", "12": "33010308331/47185920", "10": "1441372804469/6606028800", "8": "388895895/14680064", "6": "2401245/4194304"}, {"21": "-1267709431363375/660451885056", "19": "-1774793203908725/220150628352", "17": "-36927006432745/2717908992", "15": "-10559432785187/905969664", "13": "-1602251736839/301989888", "11": "-1007390378503/838860800", "9": "-25388505925/234881024", "7": "-57972915/33554432"}, {"24": "2562040760785380875/126806761930752", "22": "512408152157076175/5283615080448", "20": "75358832548684685/391378894848", "18": "39803268297948155/195689447424", "16": "3542717254441859/28991029248", "14": "276439228010667/6710886400", "12": "667955999804539/93952409600", "10": "928090660435/1879048192", "8": "13043905875/2147483648"}, {"27": "-6653619855759634132375/27390260577042432", "25": "-1330723971151926826475/1014454095446016", "23": "-3128960418491082175/1043677052928", "21": "-35348759075759093965/9393093476352", "19": "-17618708259302571707/6262062317568", "17": "-817138105244771959/644245094400", "15": "-3739063570455884033/11274289152000", "13": "-1359491937582325/30064771072", "11": "-472414367256615/188978561024", "9": "-418854310875/17179869184"}]

# A_k/B_k closed forms as [(coeff, tau_power, h_power)], h = zeta^(1/2)
AB_MONOMIALS = {
    'A0': [(1.0, 0, 0)],
    'A1': [(-0.09874131944444445, 0, -6), (0.018229166666666668, 1, -3), (0.030381944444444444, 3, -3), (0.0703125, 2, 0), (0.4010416666666667, 4, 0), (0.3342013888888889, 6, 0)],
    'A2': [(-0.31722720267841353, 0, -12), (0.01791400673948688, 1, -9), (0.029856677899144805, 3, -9), (-0.0069427490234375, 2, -6), (-0.03959938331886574, 4, -6), (-0.03299948609905479, 6, -6), (0.01068115234375, 3, -3), (0.12996826171875, 5, -3), (0.26927580656828703, 7, -3), (0.14959767031571503, 9, -3), (0.112152099609375, 4, 0), (2.3640869140625, 6, 0), (8.78912353515625, 8, 0), (11.207002616222994, 10, 0), (4.669584423426247, 12, 0)],
    'A3': [(-3.5112030408263544, 0, -18), (0.11780364349464004, 1, -15), (0.19633940582440004, 3, -15), (-0.02230503768832595, 2, -12), (-0.12722132607415543, 4, -12), (-0.10601777172846286, 6, -12), (0.010496488323918095, 3, -9), (0.1277212699254354, 5, -9), (0.2646203582342433, 7, -9), (0.14701131013013516, 9, -9), (-0.01107404629389445, 4, -6), (-0.2334330611758762, 6, -6), (-0.8678496546215482, 8, -6), (-1.1065942253431993, 10, -6), (-0.46108092722633304, 12, -6), (0.033119916915893555, 5, -3), (1.0746158440907796, 7, -3), (6.20302065036915, 9, -3), (13.390160225055835, 11, -3), (12.342781744212607, 13, -3), (4.114260581404203, 15, -3), (0.5725014209747314, 6, 0), (26.491430486951554, 8, 0), (218.1905117442116, 10, 0), (699.5796273761325, 12, 0), (1059.9904525279999, 14, 0), (765.2524681411817, 16, 0), (212.57013003921713, 18, 0)],
    'A4': [(-82.28143909718594, 0, -24), (1.9659079525460057, 1, -21), (3.276513254243343, 3, -21), (-0.24688146380810302, 2, -18), (-1.4081387194980692, 4, -18), (-1.1734489329150577, 6, -18), (0.06902557236014065, 3, -15), (0.8399031644781914, 5, -15), (1.7401602442259456, 7, -15), (0.9667556912366365, 9, -15), (-0.035577696833592826, 4, -12), (-0.7499526786366899, 6, -12), (-2.7881490730526264, 8, -12), (-3.5551660903540827, 10, -12), (-1.4813192043142012, 12, -12), (0.03254731418564916, 5, -9), (1.0560370545408884, 7, -9), (6.095778033511639, 9, -9), (13.15866078250749, 11, -9), (12.12939019061981, 13, -9), (4.043130063539937, 15, -9), (-0.056529545690864325, 6, -6), (-2.615798800252378, 8, -6), (-21.544419019882003, 10, -6), (-69.07741546357211, 12, -6), (-104.66485588112846, 14, -6), (-75.56203841237796, 16, -6), (-20.989455114549433, 18, -6), (0.2519602607935667, 7, -3), (15.763259135807553, 9, -3), (175.1316748440514, 11, -3), (773.7401843811213, 13, -3), (1699.7448616260779, 15, -3), (1981.3718759383116, 17, -3), (1175.6678181700242, 19, -3), (279.92090908810104, 21, -3), (6.074042001273483, 8, 0), (493.915304773088, 10, 0), (7109.514302489364, 12, 0), (41192.65496889755, 14, 0), (122200.46498301746, 16, 0), (203400.17728041555, 18, 0), (192547.00123253153, 20, 0), (96980.59838863752, 22, 0), (20204.29133096615, 24, 0)],
    'B0': [(-0.10416666666666667, 0, -4), (0.125, 1, -1), (0.20833333333333334, 3, -1)],
    'B1': [(-0.12822657455632716, 0, -10), (0.010443793402777778, 1, -7), (0.01740632233796296, 3, -7), (-0.00732421875, 2, -4), (-0.04177517361111111, 4, -4), (-0.03481264467592592, 6, -4), (0.0732421875, 3, -1), (0.8912109375, 5, -1), (1.8464626736111112, 7, -1), (1.0258125964506173, 9, -1)],
    'B2': [(-0.8816272674437576, 0, -16), (0.03648112830801756, 1, -13), (0.0608018805133626, 3, -13), (-0.009015931023491753, 2, -10), (-0.05142419917102704, 4, -10), (-0.0428534993091892, 6, -10), (0.0061194101969401045, 3, -7), (0.07446098327636719, 5, -7), (0.15427259751308112, 7, -7), (0.0857069986183784, 9, -7), (-0.011682510375976562, 4, -4), (-0.2462590535481771, 6, -4), (-0.915533701578776, 8, -4), (-1.1673961058565618, 10, -4), (-0.4864150441069008, 12, -4), (0.22710800170898438, 5, -1), (7.368794359479632, 7, -1), (42.53499874538846, 9, -1), (91.81824154324002, 11, -1), (84.63621767460073, 13, -1), (28.212072558200244, 15, -1)],
    'B3': [(-14.995762986862555, 0, -22), (0.41517603523284596, 1, -19), (0.6919600587214099, 3, -19), (-0.06198941724213921, 2, -16), (-0.3535692687144236, 4, -16), (-0.2946410572620197, 6, -16), (0.021375661117979037, 3, -13), (0.2600990444835689, 5, -13), (0.5388883336957767, 7, -13), (0.29938240760876483, 9, -13), (-0.014380879562210154, 4, -10), (-0.30313876694367253, 6, -10), (-1.1269992042654826, 8, -10), (-1.4370355565220712, 10, -10), (-0.5987648152175297, 12, -10), (0.018974952399730682, 5, -7), (0.6156653273436759, 7, -7), (3.553813914273992, 9, -7), (7.671445962271573, 11, -7), (7.0713853742884725, 13, -7), (2.357128458096158, 15, -7), (-0.05963556468486786, 6, -4), (-2.7595240090574538, 8, -4), (-22.728178306688708, 10, -4), (-72.87287785168047, 12, -4), (-110.41567213833332, 14, -4), (-79.71379876470643, 16, -4), (-22.142721879085116, 18, -4), (1.7277275025844574, 7, -1), (108.09091978839466, 9, -1), (1200.9029132163525, 11, -1), (5305.646978613403, 13, -1), (11655.393336864534, 15, -1), (13586.550006434138, 17, -1), (8061.722181737309, 19, -1), (1919.457662318407, 21, -1)],
    'B4': [(-474.4515388682643, 0, -28), (9.865376626448315, 1, -25), (16.44229437741386, 3, -25), (-1.0543895850137734, 2, -22), (-6.013925781189671, 4, -22), (-5.011604817658059, 6, -22), (0.24326720814424568, 3, -19), (2.9600753886991815, 5, -19), (6.132856416282412, 7, -19), (3.4071424534902293, 9, -19), (-0.09887634911669341, 4, -16), (-2.084243486044467, 6, -16), (-7.748730965525424, 8, -16), (-9.880399092775722, 10, -16), (-4.1168329553232175, 12, -16), (0.06628124920098344, 5, -13), (2.15057546002858, 7, -13), (12.413797974495056, 9, -13), (26.797064406043898, 11, -13), (24.700997731939303, 13, -13), (8.233665910646435, 15, -13), (-0.07340989614021964, 6, -10), (-3.396905386438852, 8, -10), (-27.977821921652325, 10, -10), (-89.70469924783323, 12, -10), (-135.91894479007655, 14, -10), (-98.1257026605186, 16, -10), (-27.257139627921834, 18, -10), (0.14435223274631426, 7, -7), (9.031033879889744, 9, -7), (100.33585537940445, 11, -7), (443.2886473016841, 13, -7), (973.8121603066071, 15, -7), (1135.1609705896578, 17, -7), (673.5596874932431, 19, -7), (160.37135416505788, 21, -7), (-0.6327127084659878, 8, -4), (-51.449510913863335, 10, -4), (-740.5744065093087, 12, -4), (-4290.901559260162, 14, -4), (-12729.215102397651, 16, -4), (-21187.518466709953, 18, -4), (-20056.979295055367, 20, -4), (-10102.145665483074, 22, -4), (-2104.613680308974, 24, -4), (24.380529699556064, 9, -1), (2499.8304818112097, 11, -1), (45218.76898136273, 13, -1), (331645.1724845636, 15, -1), (1268365.2733216248, 17, -1), (2813563.226586534, 19, -1), (3763271.297656404, 21, -1), (2998015.9185381066, 23, -1), (1311763.6146629772, 25, -1), (242919.18790055133, 27, -1)],
}

# Taylor coefficients of A_k/B_k about zeta = 0
AB_TAYLOR = {
    'A0': [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    'A1': [0.0044444444444444444, -0.001463707463503145, -0.0007064172724196895, 0.0006728876062209396, -0.0001540027672092351, -5.766301847639425e-05, 4.988652219516832e-05, -1.0429604367829555e-05, -3.875233119897875e-06, 3.149058476155677e-06, -6.283287926118145e-07, -2.3288740817602857e-07, 1.8282849503530237e-07, -3.551662329903236e-08],
    'A2': [0.000693735541354589, -0.00036866079061430036, -0.0002698633097062688, 0.00035133514343855664, -0.00010447400839117945, -5.240810645254742e-05, 5.530219219546458e-05, -1.39301300186933e-05, -6.300269515351112e-06, 5.982906208067452e-06, -1.3836191775567954e-06, -5.934375076425787e-07, 5.299063850667288e-07, -1.1634435490271425e-07],
    'A3': [0.00035421197145774384, -0.0002478905546632297, -0.00023412119028737725, 0.0003769634577988866, -0.0001352584774946463, -8.29962966448374e-05, 0.00010223189316621075, -2.9785770300621436e-05, -1.5692340623662483e-05, 1.690616194689103e-05, -4.408130461471804e-06, -2.13651511424133e-06, 0.0075727038454027115, -0.00667841312424738],
    'A4': [0.0003781941992017729, -0.0003214041908081626, -0.0003648293707682717, 0.000690089505855048, -0.0002867322745502106, -0.00020513591169330641, 0.00028668640832097385, -9.413748372963242e-05, -5.6144471539415204e-05, 0.23812655027363588, -21.949833417452126, -96.80182070978593, -202.6159601183492, -269.7679687996448],
    'B0': [0.01799887214135533, -0.008888888888888889, 0.0016256871626835734, 0.0003642848652199096, -0.0003020604489992245, 5.844357254566871e-05, 1.676987092017009e-05, -1.301640251645854e-05, 2.446810161235558e-06, 7.726359892556074e-07, -5.790288733920437e-07, 1.0686924823038649e-07, 3.5246007722679215e-08, -2.5953663677903904e-08],
    'B1': [0.0014928295321342917, -0.0013940630797773656, 0.00038209541455316257, 0.00016909214802859955, -0.0001709853491354951, 4.105607390988507e-05, 1.706623532653438e-05, -1.5505462076725412e-05, 3.4226070875631647e-06, 1.3772001697435935e-06, -1.177585527022616e-06, 2.475276240814876e-07, 9.75225044185279e-08, -8.034135711311055e-08],
    'B2': [0.0005522130767212928, -0.0007110486511670867, 0.0002528601609445752, 0.00015149350089082805, -0.00018614830193107676, 5.3684001061355786e-05, 2.73771217485569e-05, -2.896876883978441e-05, 7.391268540511436e-06, 3.462160597161703e-06, -3.3580620423380642e-06, 7.959885276841314e-07, 3.539399027900928e-07, 0.0015934819001199652],
    'B3': [0.0004746177965599598, -0.0007585627165879864, 0.00032567548332630984, 0.00023883462252518139, -0.00034254908369517226, 0.00011422583074440973, 6.794157763223269e-05, -8.152159978433748e-05, 2.344029827994472e-05, 1.2422076374150894e-05, 0.038076083865043284, 0.38880379349105226, 2.037597747465009, 5.569368217563484],
    'B4': [0.0007364658105725784, -0.00138546904223724, 0.0006891731366198855, 0.0005890313899276609, -0.0009587743002762746, 0.00036032038325291895, 0.00024269364604130234, 1.5530129780839548, -180.9339396406393, -564.8623776293484, -608.1936236183473, 115.72745245186988, 1188.898989538399, 1814.1180808041202],
}

# zeta(z) Taylor coefficients in w = z - 1 (zeta = sum c_n w^n)
ZETA_OF_W = [0.0, 1.2599210498948732, -0.37797631496846196, 0.23038556340934824, -0.16590960364964868, 0.1293138708645101, -0.10568046188858134, 0.08916997952268187, -0.07700014900618803, 0.06767055661251062, -0.06029942513243309, 0.054334491580577286, -0.04941238704223535, 0.04528439148646549, -0.04177463831774603, 0.03875533942821943, -0.036131460014187496, 0.03383089245995493, -0.03179795967273854, 0.02998900387878216]

# inverse map: z - 1 = sum c_n zeta^n
W_OF_ZETA = [0.0, 0.7937005259840998, 0.18898815748423098, -0.0014285714285714286, -0.0030173218408443155, 0.0007881713902419042, -4.076613862328148e-05, -4.0644010406000286e-05, 1.4817234024774346e-05, -1.1969119026168114e-06, -8.77652040025891e-07, 3.748027412815243e-07, -3.712255349771166e-08, -2.3315995819105752e-08, 1.0942599772389046e-08, -1.2157703883178611e-09, -6.981613119552862e-10, 3.4857677788962545e-10, -4.167604862626609e-11, -2.2576217231284163e-11]
