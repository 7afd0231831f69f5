// Generated by tools/gen_rs_coeffs.py -- do not edit by hand.
//
// Chebyshev fits (argument x = 2p - 1, p in [0, 1]) of the
// Riemann-Siegel remainder coefficients C0..C3.
#pragma once

#include <array>
#include <cstddef>

namespace zetaline::detail {

// max |fit - exact| on [0,1]: 1.55e-15
inline constexpr std::array<double, 57> kRsC0 = {
    +6.42667286239768543e-01, +7.29833676975562507e-17, +2.71972999997855125e-01, +1.32697032177375010e-17,
    +1.07386058193402658e-02, +1.49284161199546894e-16, -1.37438152963364406e-03, +4.64439612620812549e-17,
    -1.24682218803209773e-04, +3.31742580443437447e-17, -5.76459970786303079e-07, +5.30788128709499915e-17,
    +2.72806742949182056e-07, +6.63485160886874894e-17, +8.07795292599096559e-09, -1.06157625741899958e-16,
    -2.08846227613667416e-10, -1.32697032177374948e-17, -1.31156253762505401e-11, -1.99045548266062394e-16,
    -1.42649309590678026e-14, -1.12792477350768670e-16, +1.01774476897791025e-14, +1.06157625741899921e-16,
    +1.44308022492895231e-16, +1.22744754764071800e-16, -5.30788128709499607e-17, -6.63485160886874740e-18,
    +3.31742580443437324e-17, -7.29833676975562260e-17, -5.30788128709499915e-17, -1.55919012808415582e-16,
    -1.85775845048325020e-16, -3.31742580443437385e-17, -4.64439612620812549e-17, -2.52953717588121107e-16,
    -1.19427328959637481e-16, +7.46420805997734471e-17, -1.02840199937465652e-16, +1.09475051546334401e-16,
    +1.16109903155203162e-16, +1.02840199937465701e-16, +5.88843080287102162e-17, +7.29833676975562876e-17,
    +1.32697032177375127e-16, +8.87411402686195926e-17, -7.29833676975563123e-17, +2.65394064354750173e-17,
    +0.00000000000000000e+00, -2.65394064354750235e-17, +3.98091096532125121e-17, +5.83659602467673515e-17,
    -6.63485160886875433e-18, -1.31038319275157881e-16, +8.62530709152938471e-17, -1.11133764448551646e-16,
    -1.06986982193008692e-16,
};

// max |fit - exact| on [0,1]: 2.78e-16
inline constexpr std::array<double, 57> kRsC1 = {
    +2.63899606769846286e-18, +1.06979139210030168e-02, -1.86605201499433602e-18, +1.71706512433779171e-02,
    +1.65871290221718762e-18, +2.79321114978847620e-03, -8.29356451108593617e-19, -3.63756537192661209e-05,
    -9.12292096219453133e-18, -2.71089552311508675e-05, +5.80549515776015532e-18, -1.04837498666494235e-06,
    -8.29356451108593617e-18, +5.88646716761488369e-08, -6.22017338331445059e-18, +4.32296727496522447e-09,
    +7.87888628553163859e-18, -1.13695775076275894e-11, -8.29356451108593425e-19, -6.69982411893548776e-12,
    +1.30882814940574851e-17, -1.00792181933620161e-13, +9.01925140580595193e-18, +5.16087785613599752e-15,
    +6.84219072164589465e-18, +1.55089656357306934e-16, +1.53430943455089719e-17, +4.97613870665156093e-18,
    +1.74164854732804583e-17, +1.11963120899660115e-17, +1.72868985277947483e-17, +9.33026007497167627e-18,
    +8.29356451108593771e-18, +7.46420805997734102e-18, +1.05742947516345705e-17, +1.95417113792462428e-17,
    +9.95227741330312341e-18, +1.90751983754976578e-17, +8.69528404209166460e-18, +1.39953901124575240e-18,
    +1.14036512027431680e-18, +1.40990596688461023e-17, -3.11008669165722953e-18, +1.36843814432918032e-17,
    -5.80549515776016148e-18, +1.32697032177375087e-17, -5.39081693220586468e-18, +2.19779459543777486e-17,
    -4.14678225554297348e-18, +2.48806935332578355e-18, -7.04952983442304960e-18, +1.03669556388574337e-18,
    -1.57577725710632926e-17, -2.90274757888007959e-18, +4.97613870665156787e-18, -4.97613870665156633e-18,
    -6.22017338331445906e-18,
};

// max |fit - exact| on [0,1]: 1.41e-17
inline constexpr std::array<double, 57> kRsC2 = {
    +3.14611585398891311e-03, +6.80331463800018382e-20, -2.30878388453075118e-03, +5.18347781942871131e-20,
    +5.76982076668988906e-05, -8.81191229302881007e-19, +3.52388620236659099e-04, +2.33256501874292003e-19,
    +2.52466674586835873e-05, -4.14678225554296809e-19, -3.44282119719283342e-06, -1.03669556388574202e-19,
    -3.53507455662318063e-07, -9.33026007497167819e-19, +3.73083018373152879e-09, +9.33026007497167627e-19,
    +1.27769518755432215e-09, +2.07339112777148356e-19, +2.18746166414732207e-11, +1.01077817478859813e-18,
    -1.91414017542073833e-12, +3.11008669165722414e-19, -6.56282718456778443e-14, -5.70182560137157727e-19,
    +1.25900844821376451e-15, -1.29586945485717705e-19, +8.22164375634135782e-17, -5.18347781942870915e-19,
    -1.03669556388574154e-19, +1.14036512027431603e-18, +2.59173890971435505e-19, +9.84860785691454824e-19,
    +1.34770423305146501e-18, +7.25686894720019319e-19, +5.70182560137158208e-19, +2.12522590596577182e-18,
    +7.25686894720019415e-19, +7.77521672914306637e-20, +7.51604283817163303e-19, -3.11008669165722751e-19,
    -5.18347781942871203e-19, -4.92430392845727894e-19, -5.92961515398320047e-19, -6.22017338331445598e-19,
    -7.25686894720020186e-19, -7.38645589268591840e-19, +8.03439062011450982e-19, -4.66513003748584295e-19,
    +7.25686894720020378e-19, +1.29586945485717897e-18, +2.33256501874292051e-19, -4.14678225554297338e-19,
    +4.14678225554297146e-19, +1.01077817478859910e-18, -5.70182560137158882e-19, +1.36066292760003763e-18,
    +1.29424961803860744e-18,
};

// max |fit - exact| on [0,1]: 1.71e-18
inline constexpr std::array<double, 57> kRsC3 = {
    -4.58159039531100831e-21, +7.12325622120387630e-05, +2.59173890971435566e-20, +2.32343052981648238e-04,
    -3.23967363714294442e-20, -1.29299120454724872e-04, +1.94380418228576629e-20, +1.80744964136714540e-05,
    -3.07768995528579753e-20, +6.52618518722043866e-06, +9.07108618400024269e-20, -1.16963653784969824e-07,
    -1.61983681857147191e-21, -7.34947612650821543e-08, +4.21157572828582636e-20, -1.77509100779319263e-09,
    +1.03707521314009448e-19, +2.55555296086440858e-10, +6.47934727428588613e-21, +1.13766365588628290e-11,
    +7.04629016078589874e-20, -3.34986431639735283e-13, +1.61983681857147131e-20, -2.55373931977116723e-14,
    +0.00000000000000000e+00, +6.76379061962703587e-17, +6.47934727428588387e-21, +2.97499230098836462e-17,
    +1.66843192312861549e-19, +3.59603773722866698e-19, -3.23967363714294382e-20, +1.49024987308575380e-19,
    +7.77521672914306637e-20, +5.50744518314300389e-20, -2.91570627342865004e-20, +1.49024987308575452e-19,
    +3.88760836457153258e-20, +1.03669556388574226e-19, -6.47934727428589064e-21, +1.94380418228576725e-19,
    +1.03669556388574250e-19, +1.03669556388574286e-19, -5.18347781942871552e-20, +2.10578786414291487e-19,
    -8.09918409285736857e-20, +1.55504334582861448e-19, -2.02479602321434214e-20, +1.36066292760003749e-19,
    -1.10148903662860222e-19, +1.49024987308575572e-19, -7.77521672914306877e-20, +3.64463284178581646e-20,
    +0.00000000000000000e+00, +7.12728200171448121e-20, -3.88760836457153740e-20, +1.29586945485717858e-20,
    +1.49024987308575572e-19,
};

template <std::size_t N>
inline double chebyshev_eval(const std::array<double, N>& c, double x) {
    // Clenshaw recurrence on [-1, 1].
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t i = N; i-- > 1;) {
        const double b0 = 2.0 * x * b1 - b2 + c[i];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + c[0];
}

// C_j(p) for the remainder series; p is the fractional part of sqrt(t/2pi).
inline double rs_coefficient(int j, double p) {
    const double x = 2.0 * p - 1.0;
    switch (j) {
        case 0: return chebyshev_eval(kRsC0, x);
        case 1: return chebyshev_eval(kRsC1, x);
        case 2: return chebyshev_eval(kRsC2, x);
        case 3: return chebyshev_eval(kRsC3, x);
        default: return 0.0;
    }
}

}  // namespace zetaline::detail
