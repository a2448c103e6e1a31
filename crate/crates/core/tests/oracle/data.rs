// Generated by tests/oracle/gen_oracle.py (mpmath, 50 digits). Do not edit.
#![allow(dead_code, clippy::excessive_precision)]

pub const LOG_GAMMA_QUARTER_PLUS_10I: (f64, f64) =
    (-1.5364592760295240141e+1, 1.2634193666938485786e+1);
/// (Im z, Re lnΓ(1/4 + i Im z), Im lnΓ(1/4 + i Im z))
pub const LOG_GAMMA_QUARTER_LINE: &[(f64, f64, f64)] = &[
    (0.5, 3.4025042040841978740e-1, -1.1951830098875903012),
    (1.0, -6.4236630365897417855e-1, -1.3811810329667325159),
    (3.0, -4.0672194091374119856, -9.3384313393169383050e-2),
    (7.5, -1.1365620394646528259e+1, 7.2204628218474324209),
    (20.0, -3.1245901532192641255e+1, 3.9522467241706900275e+1),
    (55.5, -8.7264350822651403311e+1, 1.6701674625863516685e+2),
    (200.0, -3.1456490597209839732e+2, 8.5927082631126093342e+2),
    (1234.5, -1.9400087322171651666e+3, 7.5527984150516370570e+3),
];
pub const THETA_100: f64 = 8.7972165231787219625e+1;
pub const THETA_FIRST_POSITIVE_ROOT: f64 = 1.7845599540410860817e+1;
/// (t, θ(t)) at 100 log-spaced t in [1, 1e5]
pub const THETA_TABLE: &[(f64, f64)] = &[
    (1.0, -1.7675479528122903883),
    (1.1233240329780274, -1.8869477870555591102),
    (1.2618568830660204, -2.0096671143498927896),
    (1.4174741629268053, -2.1356983261841516698),
    (1.5922827933410924, -2.2649085002803488058),
    (1.788649529057435, -2.3969648938195662434),
    (2.0092330025650473, -2.5312619734764386333),
    (2.25701971963392, -2.6668526175886171409),
    (2.535364493970112, -2.8023836112673707585),
    (2.8480358684358014, -2.9360326897902375373),
    (3.1992671377973836, -3.0654419636429290493),
    (3.5938136638046276, -3.1876413886216725793),
    (4.0370172585965545, -3.2989563135164072912),
    (4.534878508128582, -3.3948945588784447085),
    (5.094138014816379, -3.4700099947257501551),
    (5.722367659350217, -3.5177403929016273209),
    (6.42807311728432, -3.5302172144600414961),
    (7.220809018385464, -3.4980442431803811535),
    (8.11130830789687, -3.4100410052764634728),
    (9.111627561154892, -3.2529459622541682774),
    (10.235310218990262, -3.0110735601247292892),
    (11.497569953977356, -2.6659182981352340039),
    (12.91549665014884, -2.1956979755489834101),
    (14.508287784959395, -1.5748271418567047667),
    (16.297508346206442, -7.7331048582328917777e-1),
    (18.30738280295368, 2.4395557218947099342e-1),
    (20.565123083486515, 1.5179864976364197884),
    (23.101297000831593, 3.0966337945408130684),
    (25.95024211399736, 5.0356471994321531882),
    (29.150530628251772, 7.3998949071693515763),
    (32.74549162877728, 1.0264764650793253608e+1),
    (36.783797718286344, 1.3717771683295496894e+1),
    (41.32012400115337, 1.7860403383429867100e+1),
    (46.4158883361278, 2.2810234391995934591e+1),
    (52.14008287999685, 2.8703350949319628028e+1),
    (58.570208180566674, 3.5697128528365036681e+1),
    (65.79332246575679, 4.3973413031216892917e+1),
    (73.90722033525779, 5.3742162841980848748e+1),
    (83.02175681319744, 6.5245617022708638311e+1),
    (93.26033468832199, 7.8763064032748967006e+1),
    (104.76157527896652, 9.4616295695740982414e+1),
    (117.68119524349979, 1.1317584290232696021e+2),
    (132.19411484660287, 1.3486810291349099591e+2),
    (148.4968262254465, 1.6018348333815254792e+2),
    (166.81005372000593, 1.8968570514765918276e+2),
    (187.3817422860385, 2.2402242674090103286e+2),
    (210.49041445120199, 2.6393737340658841072e+2),
    (236.4489412645407, 3.1028418190635739079e+2),
    (265.6087782946687, 3.6404219873500598238e+2),
    (298.364724028334, 4.2633450336868392246e+2),
    (335.1602650938841, 4.9844846501703538441e+2),
    (376.49358067924675, 5.8185918365075357945e+2),
    (422.9242874389499, 6.7825621406151242471e+2),
    (475.0810162102798, 7.8957402619748565355e+2),
    (533.6699231206308, 9.1802671687817402410e+2),
    (599.4842503189409, 1.0661475582172964665e+3),
    (673.4150657750821, 1.2368340477942322640e+3),
    (756.463327554629, 1.4333992160848939495e+3),
    (849.7534359086446, 1.6596300493330817597e+3),
    (954.5484566618337, 1.9198540025465855214e+3),
    (1072.2672220103232, 2.2190147094888630015e+3),
    (1204.5035402587823, 2.5627581465034036106e+3),
    (1353.0477745798075, 2.9575306771289962520e+3),
    (1519.9110829529332, 3.4106905974300787666e+3),
    (1707.3526474706905, 3.9306350208248356569e+3),
    (1917.9102616724888, 4.5269441893958714414e+3),
    (2154.4346900318847, 5.2105455801236142751e+3),
    (2420.128264794381, 5.9939004936174261223e+3),
    (2718.58824273294, 6.8912161747473815183e+3),
    (3053.8555088334156, 7.9186869247765829386e+3),
    (3430.4692863149194, 9.0947681295878439932e+3),
    (3853.5285937105314, 1.0440487655665257337e+4),
    (4328.761281083057, 1.1979799662869997840e+4),
    (4862.601580065353, 1.3739986560066134995e+4),
    (5462.277217684343, 1.5752115596863285491e+4),
    (6135.907273413176, 1.8051557454099340451e+4),
    (6892.612104349695, 2.0678575180712052482e+4),
    (7742.63682681127, 2.3678992940652646961e+4),
    (8697.490026177835, 2.7104955297800395052e+4),
    (9770.099572992256, 3.1015789199052027273e+4),
    (10974.987654930568, 3.5478982438066364220e+4),
    (12328.467394420659, 4.0571294219649403341e+4),
    (13848.863713938717, 4.6380015525871540229e+4),
    (15556.761439304722, 5.3004399341853277689e+4),
    (17475.28400007683, 6.0557283468100252303e+4),
    (19630.406500402725, 6.9166931668446820428e+4),
    (22051.307399030455, 7.8979122324604292980e+4),
    (24770.76355991709, 9.0159517642661362191e+4),
    (27825.59402207126, 1.0289635084316387228e+5),
    (31257.15849688235, 1.1740347373198217006e+5),
    (35111.91734215135, 1.3392381267021027497e+5),
    (39442.06059437656, 1.5273328732397382381e+5),
    (44306.21457583878, 1.7414525377671078949e+5),
    (49770.23564332114, 1.9851554173735774622e+5),
    (55908.10182512223, 2.2624816480256839997e+5),
    (62802.914418342465, 2.5780179317046654783e+5),
    (70548.02310718645, 2.9369709001678767322e+5),
    (79248.2898353917, 3.3452502611175034101e+5),
    (89021.50854450393, 3.8095630238124690963e+5),
    (100000.0, 4.3375202722917078144e+5),
];
pub const ZETA_HALF: f64 = -1.4603545088095868129;
/// (t, Z(t))
pub const HARDY_Z_TABLE: &[(f64, f64)] = &[
    (100.0, 2.6926970566644634750),
    (1000.0, 9.9779463752158661399e-1),
    (3000.0, 3.5596854630161092963),
    (415.0, 3.1433371268010917125e-2),
    (25.132741228718345, 1.6964914214370497622e-1),
    (3058.783291, -3.3593088730796768849e-1),
    (3865.998107, 2.0059958817599117429),
    (1331.302481, -3.4859760449034002049),
    (791.70907, -1.6372649116366928810),
    (3605.304662, -4.9910810256273598848e-1),
    (4331.768722, 3.4233697842259503543e-1),
    (1706.550373, 1.1118215575717163767e-1),
    (1196.428184, -2.2620368224608081165),
    (3406.095785, -8.8141600186941872021e-1),
    (4511.331748, 3.0743789890276009749e-1),
    (665.103743, -6.3541085492160433375e-1),
    (297.189099, -3.5182972060953041240),
    (1822.726049, -2.4376017432031176175),
    (1532.258176, -3.7487503549502464806e-1),
    (3028.575656, 1.3236355147673516174),
    (949.299562, -3.8599981102258271121),
    (203.539126, 1.1257570938639734060),
    (1667.19042, -3.8513390251861801380e-1),
    (1212.818766, -3.2657143954590963778),
    (1540.438912, 2.9136506227851929399),
];
/// First ten ordinates of zeta zeros on the critical line.
pub const FIRST_ZEROS: [f64; 10] = [
    1.4134725141734693790e+1,
    2.1022039638771554993e+1,
    2.5010857580145688763e+1,
    3.0424876125859513210e+1,
    3.2935061587739189691e+1,
    3.7586178158825671257e+1,
    4.0918719012147495187e+1,
    4.3327073280914999519e+1,
    4.8005150881167159728e+1,
    4.9773832477672302182e+1,
];
