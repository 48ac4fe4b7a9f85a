// Reference values computed with mpmath at 30 significant digits.

// (nu, x, K_nu(x))
pub const BESSEL_K: &[(f64, f64, f64)] = &[
    (0.0, 1e-5, 1.1628856980944362293e+1),
    (0.0, 0.01, 4.7212447301610949651),
    (0.0, 0.5, 9.2441907122766586178e-1),
    (0.0, 1.9, 1.2884597927604747986e-1),
    (0.0, 2.1, 1.0078374088996694581e-1),
    (0.0, 10.0, 1.7780062316167651811e-5),
    (0.0, 29.9, 2.3606580278508047989e-14),
    (0.0, 30.1, 1.9263633621590541027e-14),
    (0.0, 80.0, 2.5251198425054718152e-36),
    (0.25, 1e-5, 3.8220264538878944878e+1),
    (0.25, 0.01, 6.1657412641392401507),
    (0.25, 0.5, 9.6031632493188602295e-1),
    (0.25, 1.9, 1.3060056344708002012e-1),
    (0.25, 2.1, 1.0204331893431770863e-1),
    (0.25, 10.0, 1.783318443980639228e-5),
    (0.25, 29.9, 2.3630866672797736069e-14),
    (0.25, 30.1, 1.9283322328740182038e-14),
    (0.25, 80.0, 2.526100323973582288e-36),
    (0.5, 1e-5, 3.9632876645312006576e+2),
    (0.5, 0.01, 1.2408434532846930048e+1),
    (0.5, 0.5, 1.0750476034999202387),
    (0.5, 1.9, 1.3599521326566795789e-1),
    (0.5, 2.1, 1.0590875899695359003e-1),
    (0.5, 10.0, 1.7993478093705179608e-5),
    (0.5, 29.9, 2.3703874300055760046e-14),
    (0.5, 30.1, 1.934250801237164796e-14),
    (0.5, 80.0, 2.529044043944290843e-36),
    (1.0, 1e-5, 9.9999999939355715096e+4),
    (1.0, 0.01, 9.9973894118296247643e+1),
    (1.0, 0.5, 1.6564411200033008937),
    (1.0, 1.9, 1.5966015303266761038e-1),
    (1.0, 2.1, 1.2274641153350791061e-1),
    (1.0, 10.0, 1.8648773453825584597e-5),
    (1.0, 29.9, 2.3998143477721718147e-14),
    (1.0, 30.1, 1.9581053784899403646e-14),
    (1.0, 80.0, 2.5408531275211700109e-36),
    (1.25, 1e-5, 1.9168078645083962411e+6),
    (1.25, 0.01, 3.408305159923190408e+2),
    (1.25, 0.5, 2.2520661411497986988),
    (1.25, 1.9, 1.7980626572094584428e-1),
    (1.25, 2.1, 1.3694545796277314361e-1),
    (1.25, 10.0, 1.9155410658695632408e-5),
    (1.25, 29.9, 2.4221214985707587492e-14),
    (1.25, 30.1, 1.9761871526523362594e-14),
    (1.25, 80.0, 2.5497459649104709566e-36),
    (2.5, 1e-5, 1.1889981892619866675e+13),
    (2.5, 0.01, 3.7598797477979482738e+5),
    (2.5, 0.5, 2.0425904466498484536e+1),
    (2.5, 1.9, 4.6373991005550486473e-1),
    (2.5, 2.1, 3.2925376096331830368e-1),
    (2.5, 10.0, 2.3931325864627888879e-5),
    (2.5, 29.9, 2.6161731759832685311e-14),
    (2.5, 30.1, 2.1334380064064537392e-14),
    (2.5, 80.0, 2.6250686849878006359e-36),
    (7.3, 1e-5, 3.1679568145002567228e+41),
    (7.3, 0.01, 3.9882055110188783599e+19),
    (7.3, 0.5, 1.5631251977538285687e+7),
    (7.3, 1.9, 8.0254542854471986534e+2),
    (7.3, 2.1, 3.7477380288042696313e+2),
    (7.3, 10.0, 2.0859252060436216608e-4),
    (7.3, 29.9, 5.6504194649858557568e-14),
    (7.3, 30.1, 4.5848839808326519746e-14),
    (7.3, 80.0, 3.5151240248654424882e-36),
    (20.0, 1e-5, 6.3777066403061794423e+122),
    (20.0, 0.01, 6.3776982486011351698e+62),
    (20.0, 0.5, 6.6655498744171556352e+28),
    (20.0, 1.9, 1.618045201488967555e+17),
    (20.0, 2.1, 2.1633090694076422601e+16),
    (20.0, 10.0, 1.7874427820770548078e+2),
    (20.0, 29.9, 1.3892816443194860294e-11),
    (20.0, 30.1, 1.0899159641411351625e-11),
    (20.0, 80.0, 2.9920407657642264936e-35),
];
// (s, x, Gamma(s, x))
pub const UPPER_GAMMA: &[(f64, f64, f64)] = &[
    (-7.5, 0.01, 1.3180392578564087482e+14),
    (-7.5, 0.7, 8.6890492691381747082e-1),
    (-7.5, 2.3, 1.9326349847743899005e-5),
    (-7.5, 8.0, 3.5315344754444388847e-12),
    (-7.5, 40.0, 8.4830086645817476582e-32),
    (-3.0, 0.01, 3.2838235603577380088e+5),
    (-3.0, 0.7, 3.6962341134962555629e-1),
    (-3.0, 2.3, 1.4360777170443383582e-3),
    (-3.0, 8.0, 5.6000495526086244821e-8),
    (-3.0, 40.0, 1.5116496741077836983e-24),
    (-0.5, 0.01, 1.6654759630333674418e+1),
    (-0.5, 0.7, 3.4790271537865913256e-1),
    (-0.5, 2.3, 1.887981397600138969e-2),
    (-0.5, 8.0, 1.2664640824232534839e-5),
    (-0.5, 40.0, 1.6199610039846914983e-20),
    (0.25, 0.01, 2.3632216551848579358),
    (0.25, 0.7, 3.9363049491991298782e-1),
    (0.25, 2.3, 4.2844017336036139991e-2),
    (0.25, 8.0, 6.5010184292753072055e-5),
    (0.25, 40.0, 2.6229829487215606832e-19),
    (1.0, 0.01, 9.9004983374916805357e-1),
    (1.0, 0.7, 4.965853037914095147e-1),
    (1.0, 2.3, 1.0025884372280373373e-1),
    (1.0, 8.0, 3.3546262790251183882e-4),
    (1.0, 40.0, 4.2483542552915889953e-18),
    (4.0, 0.01, 5.9999999975199169042),
    (4.0, 0.7, 5.9654792544462025001),
    (4.0, 2.3, 4.7960823071677622104),
    (4.0, 8.0, 2.5428067195010397383e-1),
    (4.0, 40.0, 2.9333186791086305377e-13),
    (5.5, 0.01, 5.2342777784551717317e+1),
    (5.5, 0.7, 5.2328575459694091049e+1),
    (5.5, 2.3, 4.9672376565723552064e+1),
    (5.5, 8.0, 7.3871823043570542965),
    (5.5, 40.0, 7.7243796616446599495e-11),
    (30.0, 0.01, 8.8417619937397019545e+30),
    (30.0, 0.7, 8.8417619937397019545e+30),
    (30.0, 2.3, 8.8417619937397019545e+30),
    (30.0, 8.0, 8.8417619751491579198e+30),
    (30.0, 40.0, 3.8221771888866933534e+29),
];
// (kappa, mu, z, W)
pub const WHITTAKER_W: &[(f64, f64, f64, f64)] = &[
    (-3.5, -2.25, 0.05, 1.1325129470491330461e+1),
    (-3.5, -2.25, 0.8, 4.4543289524673500579e-2),
    (-3.5, -2.25, 3.0, 7.8693565402405229328e-4),
    (-3.5, -2.25, 12.0, 2.0733392898490970669e-7),
    (-3.5, -2.25, 55.0, 7.6826927129320298714e-19),
    (-3.5, 0.1, 0.05, 4.0342966354009311629e-2),
    (-3.5, 0.1, 0.8, 6.6369263244866930383e-3),
    (-3.5, 0.1, 3.0, 3.2337723060614306896e-4),
    (-3.5, 0.1, 12.0, 1.4992624479903780879e-7),
    (-3.5, 0.1, 55.0, 7.0542955254955608732e-19),
    (-3.5, 0.5, 0.05, 5.776592668361986232e-2),
    (-3.5, 0.5, 0.8, 7.3134773684066820739e-3),
    (-3.5, 0.5, 3.0, 3.3766309128497344225e-4),
    (-3.5, 0.5, 12.0, 1.522634206896357475e-7),
    (-3.5, 0.5, 55.0, 7.0829593129913120008e-19),
    (-3.5, 1.75, 0.05, 1.665614079716521995),
    (-3.5, 1.75, 0.8, 2.1631664964916202884e-2),
    (-3.5, 1.75, 3.0, 5.5619401928579229739e-4),
    (-3.5, 1.75, 12.0, 1.8242997970891730006e-7),
    (-3.5, 1.75, 55.0, 7.4275797553624182897e-19),
    (-3.5, 3.0, 0.05, 2.8790917898603735383e+2),
    (-3.5, 3.0, 0.8, 1.6894799013208403856e-1),
    (-3.5, 3.0, 3.0, 1.53195594265120681e-3),
    (-3.5, 3.0, 12.0, 2.6637506009429698766e-7),
    (-3.5, 3.0, 55.0, 8.2105659084214755948e-19),
    (-1.0, -2.25, 0.05, 4.9033244296369022804e+2),
    (-1.0, -2.25, 0.8, 3.0364031253760457042),
    (-1.0, -2.25, 3.0, 1.356487075226534393e-1),
    (-1.0, -2.25, 12.0, 2.5295002265199887297e-4),
    (-1.0, -2.25, 55.0, 2.1776059031977319844e-14),
    (-1.0, 0.1, 0.05, 5.1543418325034289502e-1),
    (-1.0, 0.1, 0.8, 2.6251784643540206438e-1),
    (-1.0, 0.1, 3.0, 4.5168935777656873546e-2),
    (-1.0, 0.1, 12.0, 1.755932427740109555e-4),
    (-1.0, 0.1, 55.0, 1.9927594761497935586e-14),
    (-1.0, 0.5, 0.05, 8.4879123021889966187e-1),
    (-1.0, 0.5, 0.8, 2.9963552853394505673e-1),
    (-1.0, 0.5, 3.0, 4.769379934202372402e-2),
    (-1.0, 0.5, 12.0, 1.7868432669089434353e-4),
    (-1.0, 0.5, 55.0, 2.0011778154194005988e-14),
    (-1.0, 1.75, 0.05, 5.4042189497217230966e+1),
    (-1.0, 1.75, 0.8, 1.2347853840140225384),
    (-1.0, 1.75, 3.0, 8.8715356253621605131e-2),
    (-1.0, 1.75, 12.0, 2.1904625831489506826e-4),
    (-1.0, 1.75, 55.0, 2.1024906899136548172e-14),
    (-1.0, 3.0, 0.05, 1.8270089030711852523e+4),
    (-1.0, 3.0, 0.8, 1.5119416967831353181e+1),
    (-1.0, 3.0, 3.0, 3.0257479999255569586e-1),
    (-1.0, 3.0, 12.0, 3.3507792211388561045e-4),
    (-1.0, 3.0, 55.0, 2.3333309590622734424e-14),
    (0.25, -2.25, 0.05, 1.6607652934438973594e+3),
    (0.25, -2.25, 0.8, 1.3263413427293519076e+1),
    (0.25, -2.25, 3.0, 1.0685808469812000724),
    (0.25, -2.25, 12.0, 6.8160928330499719326e-3),
    (0.25, -2.25, 55.0, 3.3957131413460163196e-12),
    (0.25, 0.1, 0.05, 3.8212079398242795269e-1),
    (0.25, 0.1, 0.8, 6.08507152888801427e-1),
    (0.25, 0.1, 3.0, 2.8942061385618450785e-1),
    (0.25, 0.1, 12.0, 4.5944474654256317237e-3),
    (0.25, 0.1, 55.0, 3.1015826128239245551e-12),
    (0.25, 0.5, 0.05, 8.3574665330329490728e-1),
    (0.25, 0.5, 0.8, 7.3182973867988059924e-1),
    (0.25, 0.5, 3.0, 3.0923322521586053689e-1),
    (0.25, 0.5, 12.0, 4.682059563625033561e-3),
    (0.25, 0.5, 55.0, 3.114966184261722387e-12),
    (0.25, 1.75, 0.05, 1.4123669783394369736e+2),
    (0.25, 1.75, 0.8, 4.5230827839464855447),
    (0.25, 1.75, 3.0, 6.4993209684279517069e-1),
    (0.25, 1.75, 12.0, 5.8354350934902318098e-3),
    (0.25, 1.75, 55.0, 3.2761241138720745757e-12),
    (0.25, 3.0, 0.05, 8.4410161370753601049e+4),
    (0.25, 3.0, 0.8, 8.3896862441954500374e+1),
    (0.25, 3.0, 3.0, 2.6856927183807696272),
    (0.25, 3.0, 12.0, 9.227520385906057905e-3),
    (0.25, 3.0, 55.0, 3.6439057872569004786e-12),
    (1.5, -2.25, 0.05, 2.4798035312698147178e+3),
    (1.5, -2.25, 0.8, 2.6356974187836190455e+1),
    (1.5, -2.25, 3.0, 4.6958694271082457484),
    (1.5, -2.25, 12.0, 1.4612891958451322514e-1),
    (1.5, -2.25, 55.0, 5.0095814759309465283e-10),
    (1.5, 0.1, 0.05, -2.1223828740921586705e-1),
    (1.5, 0.1, 0.8, -1.1680962651032013184e-1),
    (1.5, 0.1, 3.0, 7.7622731910186887843e-1),
    (1.5, 0.1, 12.0, 9.4535558418100571399e-2),
    (1.5, 0.1, 55.0, 4.5662170386303694756e-10),
    (1.5, 0.5, 0.05, -3.3137460459099601071e-1),
    (1.5, 0.5, 0.8, -2.8178802327294891781e-2),
    (1.5, 0.5, 3.0, 8.5828286411683346708e-1),
    (1.5, 0.5, 12.0, 9.653402434210841063e-2),
    (1.5, 0.5, 55.0, 4.586371711822929585e-10),
    (1.5, 1.75, 0.05, 1.1820893468219444124e+2),
    (1.5, 1.75, 0.8, 5.8183566765369538879),
    (1.5, 1.75, 3.0, 2.4511179535773317856),
    (1.5, 1.75, 12.0, 1.2313677955589133244e-1),
    (1.5, 1.75, 55.0, 4.8292104501175066263e-10),
    (1.5, 3.0, 0.05, 2.178957662190820432e+5),
    (1.5, 3.0, 0.8, 2.6270890610408008038e+2),
    (1.5, 3.0, 3.0, 1.4728906834308317407e+1),
    (1.5, 3.0, 12.0, 2.0381366467480433796e-1),
    (1.5, 3.0, 55.0, 5.384357647972115261e-10),
    (4.0, -2.25, 0.05, 5.9438996241405446027e+2),
    (4.0, -2.25, 0.8, 1.0896196038688447806e+1),
    (4.0, -2.25, 3.0, -1.2509446549068564768e+1),
    (4.0, -2.25, 12.0, 2.2268504738060362568e+1),
    (4.0, -2.25, 55.0, 9.0833856103124739503e-6),
    (4.0, 0.1, 0.05, -4.0166139671104625605e-2),
    (4.0, 0.1, 0.8, -1.7384495302508378876),
    (4.0, 0.1, 3.0, 2.3121814473049944934),
    (4.0, 0.1, 12.0, 1.1759199745109354302e+1),
    (4.0, 0.1, 55.0, 8.2400315912130999616e-6),
    (4.0, 0.5, 0.05, -1.0840508715325415841),
    (4.0, 0.5, 0.8, -1.2698542952099150913),
    (4.0, 0.5, 3.0, 2.0081714413358684604),
    (4.0, 0.5, 12.0, 1.2135970656958490839e+1),
    (4.0, 0.5, 55.0, 8.2782845392114604329e-6),
    (4.0, 1.75, 0.05, 5.5258231269321632926e+1),
    (4.0, 1.75, 0.8, 8.8733985673434659944),
    (4.0, 1.75, 3.0, -4.4737814022823408119),
    (4.0, 1.75, 12.0, 1.7398461023963354703e+1),
    (4.0, 1.75, 55.0, 8.7398266758372489049e-6),
    (4.0, 3.0, 0.05, -6.303430766459875105e+4),
    (4.0, 3.0, 0.8, -1.1736146984274118136e+2),
    (4.0, 3.0, 3.0, -2.6181162824694376863e+1),
    (4.0, 3.0, 12.0, 3.5521339957146447901e+1),
    (4.0, 3.0, 55.0, 9.799156293898465277e-6),
];
