#pragma once

// Frozen high-precision values from tests/oracles/generate_reference_values.py
// (mpmath, 34 digits; complex Hankel at 200 digits). Regenerate with that script.

#include <array>
#include <complex>

namespace refvals {

using cplx = std::complex<double>;

struct JY {
  double nu, x, j, y;
};
struct K {
  double nu, x, k;
};
struct ComplexH {
  double nu, z_re, z_im, h_re, h_im;
};

inline constexpr JY bessel_jy[] = {
    {0, 0.5, 9.3846980724081290423e-1, -4.4451873350670655715e-1},
    {0, 3, -2.6005195490193343762e-1, 3.7685001001279038197e-1},
    {0, 10, -2.459357644513483352e-1, 5.5671167283599391424e-2},
    {0, 47.3, -9.4959345344983187457e-2, 6.6642052201334759831e-2},
    {0, 200, -1.5437439930565091592e-2, -5.4265775249817910694e-2},
    {0, 1234.5, -1.3550379618035721909e-2, 1.8222995047412551598e-2},
    {0, 5000, -6.6489842514483478936e-3, -9.1167407696439626281e-3},
    {0.3, 0.5, 7.0026048850705466357e-1, -8.0804750747749090089e-1},
    {0.3, 3, -6.7254992482073093566e-2, 4.5390957949997149886e-1},
    {0.3, 10, -1.9461921545691323505e-1, 1.6042192864791389354e-1},
    {0.3, 47.3, -5.4452542533585774792e-2, 1.0243842783084574905e-1},
    {0.3, 200, -3.8381724751194095969e-2, -4.1351368792599302295e-2},
    {0.3, 1234.5, -3.8012261774556577726e-3, 2.2388412875098663738e-2},
    {0.3, 5000, -1.0063156113424616731e-2, -5.104590395215310811e-3},
    {0.6, 0.5, 4.6834732600440327239e-1, -1.0748034723491141094},
    {0.6, 3, 1.2815643865002495177e-1, 4.4377341789382301685e-1},
    {0.6, 10, -1.0374392632581612674e-1, 2.3007328167113469809e-1},
    {0.6, 47.3, -2.3425468954866036439e-3, 1.159915296097143147e-1},
    {0.6, 200, -5.2958465113185577061e-2, -1.9455184689415452804e-2},
    {0.6, 1234.5, 6.7748395098733513485e-3, 2.1674684468637536922e-2},
    {0.6, 5000, -1.128377387138616452e-2, 2.0049265618513229104e-5},
    {1, 0.5, 2.4226845767487388638e-1, -1.4714723926702430692},
    {1, 3, 3.3905895852593645893e-1, 3.2467442479179997844e-1},
    {1, 10, 4.347274616886143667e-2, 2.4901542420695388392e-1},
    {1, 47.3, 6.5642086404151609116e-2, 9.5669029973376919698e-2},
    {1, 200, -5.4304538182378222711e-2, 1.530182458038998922e-2},
    {1, 1234.5, 1.821750833739249827e-2, 1.3557761447180334391e-2},
    {1, 5000, -9.1174057136461594787e-3, 6.6480726106254194163e-3},
    {2.5, 0.5, 9.2364078193797244999e-3, -1.4138547422284622228e+1},
    {2.5, 3, 4.1271003220971599344e-1, -3.6904073007379789735e-1},
    {2.5, 10, 1.9665848358181841265e-1, -1.6417847961494106397e-1},
    {2.5, 47.3, 2.754285753036454108e-2, -1.1277701246959999302e-1},
    {2.5, 200, 4.8854529236358557442e-2, 2.8223617508237008462e-2},
    {2.5, 1234.5, -3.2471577119369938072e-3, -2.2475483543839602e-2},
    {2.5, 5000, 1.1146958987534803753e-2, 1.7519346684764537015e-3},
    {7, 0.5, 1.2015867327763022876e-8, -3.7942958668891114349e+6},
    {7, 3, 2.5472944518046937591e-3, -1.9839935408986418005e+1},
    {7, 10, 2.1671091768505151406e-1, 2.0102002377958500051e-1},
    {7, 47.3, -1.0849101107023325617e-2, -1.1614844054388712831e-1},
    {7, 200, 5.5762660213175076655e-2, -8.6928700922873389678e-3},
    {7, 1234.5, -1.7950645671818060828e-2, -1.3909455301936892805e-2},
    {7, 5000, 9.1492157035509845891e-3, -6.6042358092698393724e-3},
    {10, 0.5, 2.6131773608228030862e-13, -1.2196362334956963053e+11},
    {10, 3, 1.2928351645715883778e-5, -2.5826071294842996691e+3},
    {10, 10, 2.074861066333588577e-1, -3.5981415218340272205e-1},
    {10, 47.3, 1.0571881596254660448e-1, 5.0921031178383818121e-2},
    {10, 200, 1.5301688136801641061e-3, 5.6433444517996071742e-2},
    {10, 1234.5, 1.4277374899769533907e-2, -1.7659666535869581257e-2},
    {10, 5000, 6.5574924456410861864e-3, 9.1827828739936141452e-3},
};

inline constexpr K bessel_k[] = {
    {0, 1e-8, 1.8536612259610778409e+1},
    {0, 1e-3, 7.0236888005623813436},
    {0, 0.5, 9.2441907122766586178e-1},
    {0, 2, 1.1389387274953343565e-1},
    {0, 5, 3.6910983340425942747e-3},
    {0, 50, 3.4101677497894955139e-23},
    {0.3, 1e-8, 4.625636031890664381e+2},
    {0.3, 1e-3, 1.4406547529041027961e+1},
    {0.3, 0.5, 9.7647412438178792102e-1},
    {0.3, 2, 1.1603697434811925852e-1},
    {0.3, 5, 3.7216693288734254993e-3},
    {0.3, 50, 3.4132081995368530188e-23},
    {1, 1e-8, 9.9999999999999904817e+7},
    {1, 1e-3, 9.9999623815608557428e+2},
    {1, 0.5, 1.6564411200033008937},
    {1, 2, 1.3986588181652242728e-1},
    {1, 5, 4.0446134454521642084e-3},
    {1, 50, 3.4441022267175556126e-23},
    {2.5, 1e-8, 3.759942411946500691e+20},
    {2.5, 1e-3, 1.1889979911154879389e+8},
    {2.5, 0.5, 2.0425904466498484536e+1},
    {2.5, 2, 3.8979775889619970395e-1},
    {2.5, 5, 6.4957750043857580024e-3},
    {2.5, 50, 3.6278396452990476033e-23},
    {9.5, 1e-8, 4.3188484516263182117e+83},
    {9.5, 1e-3, 1.365739757454253253e+36},
    {9.5, 0.5, 3.1042818448146258491e+10},
    {9.5, 2, 5.3073894681752754818e+4},
    {9.5, 5, 4.8927065350795989303},
    {9.5, 50, 8.3135814766776429496e-23},
};

inline constexpr ComplexH hankel_complex[] = {
    {0, 2.0e+1, 0.0, 1.6702466434058315473e-1, 6.2640596809383831162e-2},
    {0, 2.5e+1, 3.0, 4.3885345240113002571e-3, -6.5822618721111312089e-3},
    {0, 5.0e+1, 5.0, 3.4176326285926486242e-4, -6.7680617707151063142e-4},
    {0, 1.0e+2, 4.0e+1, 2.0589283169740742995e-20, -3.2583075735497116658e-19},
    {0, 3.0e+1, 1.0e+2, -2.7717946632388238376e-45, -8.5819794701757995188e-46},
    {0, 1.0, 0.0, 7.6519768655796655145e-1, 8.8256964215676957983e-2},
    {0, 2.0, 1.0, 1.1221517779606792438e-1, 1.5428168525601326279e-1},
    {0, 5.0, 5.0e-1, -1.1622886689603916845e-1, -1.8074028884858600739e-1},
    {0, 1.0e+1, 1.0e+1, -7.852572202546007414e-6, 5.4746322347767424968e-6},
    {0.3, 2.0e+1, 0.0, 1.7731275838228064675e-1, -1.9617176049764751038e-2},
    {0.3, 2.5e+1, 3.0, 9.3602359862977315926e-4, -7.8574911485679263309e-3},
    {0.3, 5.0e+1, 5.0, -2.0763326443812163002e-6, -7.5827228142220716622e-4},
    {0.3, 1.0e+2, 4.0e+1, -1.2948329725080152797e-19, -2.9976166733866797024e-19},
    {0.3, 3.0e+1, 1.0e+2, -2.8605372389483772719e-45, 4.9356041844404207651e-46},
    {0.3, 1.0, 0.0, 7.4022247928102045053e-1, -2.4570419535649945302e-1},
    {0.3, 2.0, 1.0, 1.7047259710229411848e-1, 8.9929225240658683655e-2},
    {0.3, 5.0, 5.0e-1, -1.8498689569421840815e-1, -1.1004795894411238036e-1},
    {0.3, 1.0e+1, 1.0e+1, -4.5395276298723903508e-6, 8.4521898844492851978e-6},
    {1, 2.0e+1, 0.0, 6.6833124175850045579e-2, -1.6551161436252129586e-1},
    {1, 2.5e+1, 3.0, -6.5127862640662732499e-3, -4.5291671568909109949e-3},
    {1, 5.0e+1, 5.0, -6.7412878184619756272e-4, -3.48811905801118575e-4},
    {1, 1.0e+2, 4.0e+1, -3.2630645432174734525e-19, -2.2026949089417516961e-20},
    {1, 3.0e+1, 1.0e+2, -8.6592360684273008088e-46, 2.7833073137764414291e-45},
    {1, 1.0, 0.0, 4.4005058574493351596e-1, -7.8121282130028871655e-1},
    {1, 2.0, 1.0, 1.9121655078657474232e-1, -9.6248131988248557508e-2},
    {1, 5.0, 5.0e-1, -1.9462455803769212813e-1, 1.0030606038527643326e-1},
    {1, 1.0e+1, 1.0e+1, 5.4197022575531028829e-6, 8.1822886570561894959e-6},
    {3, 2.0e+1, 0.0, -9.8901394560449675613e-2, 1.4967326271339410371e-1},
    {3, 2.5e+1, 3.0, 5.851805331335121985e-3, 5.6143580263349417085e-3},
    {3, 5.0e+1, 5.0, 6.5010686504500918437e-4, 4.0446703037134163342e-4},
    {3, 1.0e+2, 4.0e+1, 3.2991726060348846664e-19, 3.3690681445153902253e-20},
    {3, 3.0e+1, 1.0e+2, 9.2958734270799773603e-46, -2.8769321118265782126e-45},
    {3, 1.0, 0.0, 1.9563353982668405919e-2, -5.8215176059647288478},
    {3, 2.0, 1.0, -4.3381590365494043254e-1, -3.9798581390005260883e-1},
    {3, 5.0, 5.0e-1, 2.4685401364918337707e-1, 7.7009685707190383141e-2},
    {3, 1.0e+1, 1.0e+1, -4.6168227177170023196e-6, -1.1064517634822863593e-5},
};

inline constexpr double k03_2_integral = 1.1603697434811925852e-1;
inline constexpr double gamma_07 = 1.2980553326475577857;
inline constexpr double abs_h0_100 = 7.9787957484986286469e-2;
inline constexpr double j06_10 = -1.0374392632581612674e-1;
inline constexpr double y03_25 = -1.5703929852029818978e-1;

// M(0..12), alpha=-0.2 beta=-0.3 nu=0.3 k=5 omega=10
inline const std::array<cplx, 13> moments_a = {{
    {1.5040099000603032614e-1, -1.7350053688972820514e-1},
    {-1.1584938752755068904e-1, 1.0432710012859857778e-1},
    {1.366365490359524293e-1, -1.9130117262288106952e-1},
    {-4.2169651499562076998e-2, 1.5343576979049010571e-1},
    {6.7549538662686264078e-2, -2.0131715104965001761e-1},
    {1.0742437468197661973e-1, 2.0518257472661307209e-1},
    {-9.9508462403087171069e-2, -7.4882738922527748643e-2},
    {1.7051663840387648333e-1, 1.0373495591194349274e-1},
    {-2.1102119559213093999e-1, 1.6845448250852454695e-1},
    {-1.2896983048339517761e-1, -1.9435275621072947492e-1},
    {1.3712033697373618175e-1, -8.4594904896470918311e-2},
    {4.4534675612284987258e-2, 9.1551483429479025349e-2},
    {-5.3408083040861639734e-2, 1.8321221237134286693e-2},
}};

// M(0..12), alpha=-0.6 beta=-0.3 nu=0 k=10 omega=10
inline const std::array<cplx, 13> moments_b = {{
    {8.2797732835413378685e-1, -1.1698261447050235367},
    {-8.7291632149812546112e-1, 1.1911919030645480125},
    {7.6679233949815733934e-1, -1.2168987176386041119},
    {-7.476335809239770619e-1, 1.2543112428216377108},
    {5.6813843218026247477e-1, -1.3228390579959348723},
    {-4.5617303540414555165e-1, 1.3050957294337164055},
    {2.2749332490692658628e-1, -1.358880882540124352},
    {-8.5530040721966113679e-3, 1.1930408076776082829},
    {-1.3139967928387958184e-1, -1.1078503208105811602},
    {3.4413344666819915139e-1, 8.1635620490252533879e-1},
    {-2.0350352763001977207e-1, -5.2763542176135928271e-1},
    {1.367400037629141693e-1, 4.2834010709268452886e-1},
    {9.0842098434418211966e-2, -2.4456554030620101895e-1},
}};
inline const cplx moments_b_20{2.8276174548021717482e-2, -3.9584988264234306086e-1};
inline const cplx moments_b_40{2.1037683326542324011e-2, -2.4964063816700721545e-1};

// int x^j x^alpha (1-x)^beta e^(2ikx) H_nu(omega x), j=0..4
// alpha=0 beta=-0.3 nu=0.6 k=5 omega=10
inline const std::array<cplx, 5> integrals_a = {{
    {7.0052845796424769919e-2, -1.4150145892406711081e-1},
    {-1.2097989352192661969e-3, -3.84998435481200288e-2},
    {-2.0602396620521470363e-3, -4.0055270109668543481e-2},
    {-5.4458760065505721883e-4, -4.0186331346982075486e-2},
    {8.7843225779390523118e-4, -4.0016158737927596458e-2},
}};
// alpha=-0.6 beta=-0.3 nu=0 k=10 omega=50
inline const std::array<cplx, 5> integrals_b = {{
    {5.1928361390985050639e-1, -7.1455972212667083509e-1},
    {5.7222103337639512026e-3, -5.0651511140067680729e-3},
    {4.066770006219653171e-3, -6.2472108399210680289e-3},
    {4.1464608200147654557e-3, -6.2306503657403087415e-3},
    {4.2083410035350354395e-3, -6.1870061543439828061e-3},
}};

// ln(x)-weighted M(0..8), alpha=-0.2 beta=-0.3 nu=0.3 k=3 omega=7
inline const std::array<cplx, 9> log_moments = {{
    {-6.07556446936859435e-1, 1.1872854654724340684},
    {5.6309166915129276437e-1, -1.2042974115180310942},
    {-3.9974855235321255871e-1, 1.2303075395798142372},
    {1.5093329107047192127e-1, -1.2039310040882079358},
    {1.6426198000010512722e-1, 1.0821644348230348715},
    {-4.402221961008735049e-1, -7.2978270028639878163e-1},
    {3.6697749828021226951e-1, 2.8390779053076139701e-1},
    {-7.9051079710330455726e-2, -1.5679858097854585836e-1},
    {-2.1003423334241016976e-2, 2.5566943792073130841e-1},
}};

}  // namespace refvals
