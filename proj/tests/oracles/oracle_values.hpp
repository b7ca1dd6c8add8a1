#pragma once

// Generated by generate_oracles.py (mpmath, 40+ digits). Do not edit.

namespace msd::oracle {

inline constexpr struct { double x; double value; } kGamma[] = {
    {0.050000000000000002776, 19.470085311255511756},
    {0.10000000000000000555, 9.5135076986687312858},
    {0.25, 3.6256099082219083119},
    {0.33333333333333331483, 2.6789385347077477889},
    {0.5, 1.7724538509055160273},
    {0.75, 1.2254167024651776451},
    {1.0, 1.0},
    {1.25, 0.90640247705547707798},
    {1.5, 0.88622692545275801365},
    {1.75, 0.91906252684888323385},
    {2.0, 1.0},
    {2.25, 1.1330030963193463475},
    {2.5, 1.3293403881791370205},
    {2.75, 1.6083594219855456592},
    {3.25, 2.5492569667185292818},
    {3.5, 3.3233509704478425512},
    {4.5, 11.631728396567448929},
    {5.5, 52.342777784553520181},
    {7.25, 1155.3810139199896872},
    {10.0, 362880.0},
    {12.5, 136843365.46556585726},
    {17.75, 174210076354396.30104},
    {25.5, 3.0867705405286967828e+24},
    {40.25, 5.1177621318451415184e+46},
    {95.5, 1.058439836445077841e+147},
    {150.75, 1.6315459640751202293e+262},
    {170.5, 5.5620924145599996107e+305},
    {-0.25, -4.9016668098607105805},
    {-0.5, -3.5449077018110320546},
    {-0.75, -4.8341465442958777492},
    {-1.5, 2.3632718012073547031},
    {-2.25, -1.7428148657282526509},
    {-3.5, 0.27008820585226910892},
    {-7.5, 0.00022384932885968949716},
};

inline constexpr struct { double x; double value; } kErfcScaled[] = {
    {0.0, 1.0},
    {0.10000000000000000555, 0.89645697996912663666},
    {0.5, 0.61569034419292587487},
    {1.0, 0.42758357615580700441},
    {2.0, 0.25539567631050574387},
    {3.5, 0.1552936556088942974},
    {5.0, 0.11070463773306862637},
    {8.0, 0.069985166200880927723},
    {12.0, 0.04685422101489376262},
    {20.0, 0.028174348741051319319},
};

inline constexpr struct { double alpha; double beta; double x; double value; } kMittagLeffler[] = {
    {0.5, 1.0, -0.5, 0.61569034419292587487},
    {0.5, 1.0, -3.0, 0.17900115118138995042},
    {0.5, 1.0, -15.0, 0.037529606388505765746},
    {0.5, 1.0, 2.0, 108.94090438997797241},
    {0.25, 1.0, -1.0, 0.46385276080171328694},
    {0.25, 1.0, -0.2000000000000000111, 0.81713697085675724563},
    {0.25, 1.0, -4.0, 0.17291766990277474255},
    {0.75, 1.0, -1.0, 0.39310830281575406177},
    {0.75, 1.0, -9.0, 0.034453627956929501396},
    {0.75, 1.0, 1.0, 3.4858662200517438713},
    {0.75, 1.0, 3.0, 100.86180177510028035},
    {0.9000000000000000222, 1.0, -30.0, 0.003713707698459852111},
    {1.25, 1.0, -9.8696044010893579923, -0.034231749129244232849},
    {1.75, 1.0, -9.8696044010893579923, -0.46307409030712323881},
    {1.5, 1.0, -9.8696044010893579923, -0.11527434844270770233},
    {1.5, 2.0, -9.8696044010893579923, 0.047280700116898284526},
    {1.5, 1.0, -2.0, 0.029430685602826471728},
    {1.5, 2.0, -40.0, 0.014029829672879105386},
    {1.25, 1.0, -50.0, -0.0042572794085854681873},
    {0.5, 0.5, -2.0, 0.053398230926744799218},
    {0.2999999999999999889, 1.3000000000000000444, -6.0, 0.14725647806156685938},
    {0.80000000000000004441, 0.80000000000000004441, 5.0, 3301.8834166355013745},
    {1.0, 1.0, -3.0, 0.049787068367863942979},
    {1.0, 2.0, -2.0, 0.43233235838169365405},
    {0.5999999999999999778, 1.0, -60.0, 0.0075606196266684588901},
};

inline constexpr struct { double alpha; double index; double value; } kCqWeights[] = {
    {0.5, 0.0, 0.7071067811865475244},
    {0.5, 1.0, 0.7071067811865475244},
    {0.5, 2.0, 0.3535533905932737622},
    {0.5, 3.0, 0.3535533905932737622},
    {0.5, 4.0, 0.26516504294495532165},
    {0.5, 5.0, 0.26516504294495532165},
    {0.5, 6.0, 0.22097086912079610138},
    {0.5, 7.0, 0.22097086912079610138},
    {0.5, 8.0, 0.1933495104806965887},
    {0.5, 9.0, 0.1933495104806965887},
    {0.5, 10.0, 0.17401455943262692983},
    {0.5, 11.0, 0.17401455943262692983},
    {0.5, 12.0, 0.15951334614657468568},
    {0.5, 13.0, 0.15951334614657468568},
    {0.5, 14.0, 0.1481195357075336367},
    {0.5, 15.0, 0.1481195357075336367},
    {0.5, 16.0, 0.13886206472581278441},
    {0.5, 17.0, 0.13886206472581278441},
    {0.5, 18.0, 0.13114750557437874083},
    {0.5, 19.0, 0.13114750557437874083},
    {0.5, 20.0, 0.12459013029565980379},
    {0.25, 0.0, 0.84089641525371454303},
    {0.25, 1.0, 0.42044820762685727152},
    {0.25, 2.0, 0.10511205190671431788},
    {0.25, 3.0, 0.15766807786007147682},
    {0.25, 4.0, 0.072264535685866093542},
    {0.25, 5.0, 0.10182730028462949545},
    {0.25, 6.0, 0.056661965480963186982},
    {0.25, 7.0, 0.076781069166232724388},
    {0.25, 8.0, 0.04729529093361193551},
    {0.25, 9.0, 0.062346125514492782052},
    {0.25, 10.0, 0.040953539022614187511},
    {0.25, 11.0, 0.052871990831067466566},
    {0.25, 12.0, 0.036330948803472967366},
    {0.25, 13.0, 0.046135182580267585839},
    {0.25, 14.0, 0.032788498352272100094},
    {0.25, 15.0, 0.041076774847974311064},
    {0.25, 16.0, 0.029973585272237284803},
    {0.25, 17.0, 0.037125789138572547551},
    {0.25, 18.0, 0.027674458829171268368},
    {0.25, 19.0, 0.033946086566858891713},
    {0.25, 20.0, 0.025755665110425613824},
    {0.25, 21.0, 0.031326356063120559498},
    {0.25, 22.0, 0.024126203647276025283},
    {0.25, 23.0, 0.029126807789094337482},
    {0.25, 24.0, 0.022722495172275821874},
    {0.25, 25.0, 0.027251113069412306921},
    {0.25, 26.0, 0.021498670794974072247},
    {0.25, 27.0, 0.025630635634547952191},
    {0.25, 28.0, 0.020420741374521423376},
    {0.25, 29.0, 0.024215087338622600719},
    {0.25, 30.0, 0.019462943405197038496},
    {0.25, 31.0, 0.022966742081375933551},
    {0.25, 32.0, 0.018605364787393722552},
    {0.25, 33.0, 0.021856717785343963678},
    {0.25, 34.0, 0.017832353884978561868},
    {0.25, 35.0, 0.020862510395966859494},
    {0.25, 36.0, 0.017131424646868181479},
    {0.25, 37.0, 0.019966312869791193866},
    {0.25, 38.0, 0.016492485361109213952},
    {0.25, 39.0, 0.019153841509303302052},
    {0.25, 40.0, 0.01590728411192004453},
    {0.25, 41.0, 0.018413499046799726885},
    {0.25, 42.0, 0.015369002714290515349},
    {0.25, 43.0, 0.017735766564556606046},
    {0.25, 44.0, 0.014871954483692726083},
    {0.25, 45.0, 0.017112754211506231622},
    {0.25, 46.0, 0.014411355964961588336},
    {0.25, 47.0, 0.016537864202133217387},
    {0.25, 48.0, 0.013983152218527076504},
    {0.25, 49.0, 0.016005534563459688886},
    {0.25, 50.0, 0.013583881475420590332},
    {0.25, 51.0, 0.015511041849945785306},
    {0.25, 52.0, 0.013210569128769277101},
    {0.25, 53.0, 0.015050347526634333757},
    {0.25, 54.0, 0.012860643860357769929},
    {0.25, 55.0, 0.014619977106214519529},
    {0.25, 56.0, 0.012531870660936193498},
    {0.25, 57.0, 0.014216924143373099489},
    {0.25, 58.0, 0.012222296880760575615},
    {0.25, 59.0, 0.013838573298519439977},
    {0.25, 60.0, 0.011930208428889551761},
    {0.25, 61.0, 0.013482638177493307124},
    {0.25, 62.0, 0.011654093948743867084},
    {0.25, 63.0, 0.013147110727007359811},
    {0.25, 64.0, 0.011392615315400366236},
    {0.75, 0.0, 0.59460355750136053336},
    {0.75, 1.0, 0.89190533625204080004},
    {0.75, 2.0, 0.66892900218903060003},
    {0.75, 3.0, 0.63176627984519556669},
    {0.75, 4.0, 0.57137685603646363752},
    {0.75, 5.0, 0.55047282471805643127},
    {0.75, 6.0, 0.5185361102038231995},
    {0.75, 7.0, 0.5043097555565738508},
    {0.75, 8.0, 0.48346016181972499665},
    {0.75, 9.0, 0.47281761462506716118},
    {0.75, 10.0, 0.4576907716495400715},
    {0.75, 11.0, 0.44926315355453768708},
    {0.75, 12.0, 0.43756687056893393713},
    {0.75, 13.0, 0.43063423038102426643},
    {0.75, 14.0, 0.42119669945705311752},
    {0.75, 15.0, 0.41533600294259300932},
    {0.75, 16.0, 0.40748486230078957245},
    {0.75, 17.0, 0.40242749044647526462},
    {0.75, 18.0, 0.39574439069346366979},
    {0.75, 19.0, 0.39130968019106710543},
    {0.75, 20.0, 0.38551817763844733571},
    {0.75, 21.0, 0.3815791042899021908},
    {0.75, 22.0, 0.3764878276910818182},
    {0.75, 23.0, 0.37295186659237255365},
    {0.75, 24.0, 0.36842333371218161796},
    {0.75, 25.0, 0.36522111728771364644},
    {0.75, 26.0, 0.36115352634707420387},
    {0.75, 27.0, 0.3582317859893871284},
    {0.75, 28.0, 0.35454783442885749976},
    {0.75, 29.0, 0.35186482666747374884},
    {0.75, 30.0, 0.34850455346697402055},
    {0.75, 31.0, 0.34602699366313547572},
    {0.75, 32.0, 0.34294303420324761969},
    {0.75, 33.0, 0.34064398045036579324},
    {0.75, 34.0, 0.33779832544645507412},
    {0.75, 35.0, 0.33565568122947867966},
    {0.75, 36.0, 0.33301740519510251498},
    {0.75, 37.0, 0.3310128365087677719},
    {0.75, 38.0, 0.32855646952070637361},
    {0.75, 39.0, 0.32667460654116582361},
    {0.75, 40.0, 0.32437894378996477332},
};

inline constexpr struct { double alpha; double k; double t_star; double a; double b; double value; } kSingularMoment[] = {
    {0.10000000000000000555, 1.0, 8.2340657348875634369, 0.45809768751076235249, 3.0975565281912991189, 3.9170089044249913363},
    {0.9000000000000000222, 1.0, 9.8134095927934108516, 1.6901590276551194947, 3.4495392020840616176, 0.77366228216564033682},
    {0.5, 4.0, 26.730292856682766001, 26.224129742539616927, 26.730292856682766001, 708392.94807126935453},
    {0.25, 1.0, 18.645718933757862601, 15.623907252221123088, 18.645718933757862601, 53.021889763833606622},
    {0.25, 4.0, 31.826689086766045023, 8.9616408682036254874, 31.826689086766045023, 5127115.1728607479201},
    {0.75, 0.0, 17.627923994637235694, 16.316126464337308732, 17.627923994637235694, 4.2808173047570721671},
    {0.10000000000000000555, 1.0, 33.226179795800362626, 17.489378031962306892, 33.226179795800362626, 342.08091379253666412},
    {0.5, 0.0, 38.061795527114746562, 35.331102029854790203, 38.061795527114746562, 3.3049620253551818137},
    {0.10000000000000000555, 3.0, 24.234742858436604251, 1.5149928046785106073, 3.0409128497330972785, 14.745481002336143612},
    {0.9000000000000000222, 0.0, 11.910323824335176113, 7.1948349196295033892, 11.813198823503917367, 3.757430731081962528},
    {0.25, 2.0, 12.902858372949626897, 10.16218725058040917, 12.202974910116276774, 230.46640017440057737},
    {0.25, 1.0, 34.377900128462115958, 10.366600663918916325, 34.377900128462115958, 348.36890673947418722},
    {0.75, 4.0, 10.038049503970228216, 0.2581705799111538302, 7.1852802243356634904, 1389.7324842357835595},
    {0.5, 0.0, 9.3473853848749079987, 0.096374616376342994717, 0.26458541071504765307, 0.055558058089331569147},
    {0.9000000000000000222, 1.0, 23.426353436570110489, 21.265128245505490412, 22.624756166274078595, 22.482503731155828348},
    {0.25, 2.0, 11.878194987069147004, 0.060338889163352761591, 0.11612052690146505707, 0.00024217307623878089279},
    {0.9000000000000000222, 1.0, 31.426225325161041724, 1.8901328414227265284, 31.426225325161041724, 403.21723080285696656},
    {0.10000000000000000555, 2.0, 14.88587522600746027, 0.26647346159646789765, 1.0251048691733954943, 0.27073742898232442003},
    {0.10000000000000000555, 1.0, 3.3477945736449306047, 1.7182224790417981453, 2.2207628284752050085, 0.95983658337264136182},
    {0.75, 3.0, 36.618788940421104883, 35.390733046908394499, 36.618788940421104883, 202681.17867880516784},
    {0.10000000000000000555, 3.0, 3.091442487078216228, 0.61461656306753564838, 0.75533350628249629199, 0.041872313401582200553},
    {0.75, 2.0, 13.378870880259192688, 0.66045964993116568209, 7.4412019588098834433, 30.027693754319460126},
    {0.75, 2.0, 22.418956326730061335, 2.6145957640253225662, 13.133534180382657297, 115.30987510141277318},
    {0.75, 0.0, 37.420409399587946098, 0.92617680985705219676, 8.1890590401835368084, 0.53057468239526894927},
};

} // namespace msd::oracle
