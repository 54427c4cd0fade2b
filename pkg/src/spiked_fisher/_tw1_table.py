"""Grid of the Tracy-Widom beta=1 cumulative distribution.

400 points of (x, F1(x)) on [-9.98, 5.98], step 0.04, computed offline from
the Painleve II representation (Hastings-McLeod solution with Airy boundary
data, integrated at rtol 1e-12).  Values agree with published tables to
better than 1e-4; the test suite re-derives a subset independently.
"""
import numpy as np

_X = np.array([
    -9.980000000000e+00, -9.940000000000e+00, -9.900000000000e+00, -9.860000000000e+00,
    -9.820000000000e+00, -9.780000000000e+00, -9.740000000000e+00, -9.700000000000e+00,
    -9.660000000000e+00, -9.620000000000e+00, -9.580000000000e+00, -9.540000000000e+00,
    -9.500000000000e+00, -9.460000000000e+00, -9.420000000000e+00, -9.380000000000e+00,
    -9.340000000000e+00, -9.300000000000e+00, -9.260000000000e+00, -9.220000000000e+00,
    -9.180000000000e+00, -9.140000000000e+00, -9.100000000000e+00, -9.060000000000e+00,
    -9.020000000000e+00, -8.980000000000e+00, -8.940000000000e+00, -8.900000000000e+00,
    -8.860000000000e+00, -8.820000000000e+00, -8.780000000000e+00, -8.740000000000e+00,
    -8.700000000000e+00, -8.660000000000e+00, -8.620000000000e+00, -8.580000000000e+00,
    -8.540000000000e+00, -8.500000000000e+00, -8.460000000000e+00, -8.420000000000e+00,
    -8.380000000000e+00, -8.340000000000e+00, -8.300000000000e+00, -8.260000000000e+00,
    -8.220000000000e+00, -8.180000000000e+00, -8.140000000000e+00, -8.100000000000e+00,
    -8.060000000000e+00, -8.020000000000e+00, -7.980000000000e+00, -7.940000000000e+00,
    -7.900000000000e+00, -7.860000000000e+00, -7.820000000000e+00, -7.780000000000e+00,
    -7.740000000000e+00, -7.700000000000e+00, -7.660000000000e+00, -7.620000000000e+00,
    -7.580000000000e+00, -7.540000000000e+00, -7.500000000000e+00, -7.460000000000e+00,
    -7.420000000000e+00, -7.380000000000e+00, -7.340000000000e+00, -7.300000000000e+00,
    -7.260000000000e+00, -7.220000000000e+00, -7.180000000000e+00, -7.140000000000e+00,
    -7.100000000000e+00, -7.060000000000e+00, -7.020000000000e+00, -6.980000000000e+00,
    -6.940000000000e+00, -6.900000000000e+00, -6.860000000000e+00, -6.820000000000e+00,
    -6.780000000000e+00, -6.740000000000e+00, -6.700000000000e+00, -6.660000000000e+00,
    -6.620000000000e+00, -6.580000000000e+00, -6.540000000000e+00, -6.500000000000e+00,
    -6.460000000000e+00, -6.420000000000e+00, -6.380000000000e+00, -6.340000000000e+00,
    -6.300000000000e+00, -6.260000000000e+00, -6.220000000000e+00, -6.180000000000e+00,
    -6.140000000000e+00, -6.100000000000e+00, -6.060000000000e+00, -6.020000000000e+00,
    -5.980000000000e+00, -5.940000000000e+00, -5.900000000000e+00, -5.860000000000e+00,
    -5.820000000000e+00, -5.780000000000e+00, -5.740000000000e+00, -5.700000000000e+00,
    -5.660000000000e+00, -5.620000000000e+00, -5.580000000000e+00, -5.540000000000e+00,
    -5.500000000000e+00, -5.460000000000e+00, -5.420000000000e+00, -5.380000000000e+00,
    -5.340000000000e+00, -5.300000000000e+00, -5.260000000000e+00, -5.220000000000e+00,
    -5.180000000000e+00, -5.140000000000e+00, -5.100000000000e+00, -5.060000000000e+00,
    -5.020000000000e+00, -4.980000000000e+00, -4.940000000000e+00, -4.900000000000e+00,
    -4.860000000000e+00, -4.820000000000e+00, -4.780000000000e+00, -4.740000000000e+00,
    -4.700000000000e+00, -4.660000000000e+00, -4.620000000000e+00, -4.580000000000e+00,
    -4.540000000000e+00, -4.500000000000e+00, -4.460000000000e+00, -4.420000000000e+00,
    -4.380000000000e+00, -4.340000000000e+00, -4.300000000000e+00, -4.260000000000e+00,
    -4.220000000000e+00, -4.180000000000e+00, -4.140000000000e+00, -4.100000000000e+00,
    -4.060000000000e+00, -4.020000000000e+00, -3.980000000000e+00, -3.940000000000e+00,
    -3.900000000000e+00, -3.860000000000e+00, -3.820000000000e+00, -3.780000000000e+00,
    -3.740000000000e+00, -3.700000000000e+00, -3.660000000000e+00, -3.620000000000e+00,
    -3.580000000000e+00, -3.540000000000e+00, -3.500000000000e+00, -3.460000000000e+00,
    -3.420000000000e+00, -3.380000000000e+00, -3.340000000000e+00, -3.300000000000e+00,
    -3.260000000000e+00, -3.220000000000e+00, -3.180000000000e+00, -3.140000000000e+00,
    -3.100000000000e+00, -3.060000000000e+00, -3.020000000000e+00, -2.980000000000e+00,
    -2.940000000000e+00, -2.900000000000e+00, -2.860000000000e+00, -2.820000000000e+00,
    -2.780000000000e+00, -2.740000000000e+00, -2.700000000000e+00, -2.660000000000e+00,
    -2.620000000000e+00, -2.580000000000e+00, -2.540000000000e+00, -2.500000000000e+00,
    -2.460000000000e+00, -2.420000000000e+00, -2.380000000000e+00, -2.340000000000e+00,
    -2.300000000000e+00, -2.260000000000e+00, -2.220000000000e+00, -2.180000000000e+00,
    -2.140000000000e+00, -2.100000000000e+00, -2.060000000000e+00, -2.020000000000e+00,
    -1.980000000000e+00, -1.940000000000e+00, -1.900000000000e+00, -1.860000000000e+00,
    -1.820000000000e+00, -1.780000000000e+00, -1.740000000000e+00, -1.700000000000e+00,
    -1.660000000000e+00, -1.620000000000e+00, -1.580000000000e+00, -1.540000000000e+00,
    -1.500000000000e+00, -1.460000000000e+00, -1.420000000000e+00, -1.380000000000e+00,
    -1.340000000000e+00, -1.300000000000e+00, -1.260000000000e+00, -1.220000000000e+00,
    -1.180000000000e+00, -1.140000000000e+00, -1.100000000000e+00, -1.060000000000e+00,
    -1.020000000000e+00, -9.800000000003e-01, -9.400000000003e-01, -9.000000000003e-01,
    -8.600000000003e-01, -8.200000000003e-01, -7.800000000003e-01, -7.400000000003e-01,
    -7.000000000003e-01, -6.600000000003e-01, -6.200000000003e-01, -5.800000000003e-01,
    -5.400000000003e-01, -5.000000000003e-01, -4.600000000003e-01, -4.200000000003e-01,
    -3.800000000003e-01, -3.400000000003e-01, -3.000000000003e-01, -2.600000000003e-01,
    -2.200000000003e-01, -1.800000000003e-01, -1.400000000003e-01, -1.000000000003e-01,
    -6.000000000028e-02, -2.000000000028e-02, 1.999999999972e-02, 5.999999999972e-02,
    9.999999999972e-02, 1.399999999997e-01, 1.799999999997e-01, 2.199999999997e-01,
    2.599999999997e-01, 2.999999999997e-01, 3.399999999997e-01, 3.799999999997e-01,
    4.199999999997e-01, 4.599999999997e-01, 4.999999999997e-01, 5.399999999997e-01,
    5.799999999997e-01, 6.199999999997e-01, 6.599999999997e-01, 6.999999999997e-01,
    7.399999999997e-01, 7.799999999997e-01, 8.199999999997e-01, 8.599999999997e-01,
    8.999999999997e-01, 9.399999999997e-01, 9.799999999997e-01, 1.020000000000e+00,
    1.060000000000e+00, 1.100000000000e+00, 1.140000000000e+00, 1.180000000000e+00,
    1.220000000000e+00, 1.260000000000e+00, 1.300000000000e+00, 1.340000000000e+00,
    1.380000000000e+00, 1.420000000000e+00, 1.460000000000e+00, 1.500000000000e+00,
    1.540000000000e+00, 1.580000000000e+00, 1.620000000000e+00, 1.660000000000e+00,
    1.700000000000e+00, 1.740000000000e+00, 1.780000000000e+00, 1.820000000000e+00,
    1.860000000000e+00, 1.900000000000e+00, 1.940000000000e+00, 1.980000000000e+00,
    2.020000000000e+00, 2.060000000000e+00, 2.100000000000e+00, 2.140000000000e+00,
    2.180000000000e+00, 2.220000000000e+00, 2.260000000000e+00, 2.300000000000e+00,
    2.340000000000e+00, 2.380000000000e+00, 2.420000000000e+00, 2.460000000000e+00,
    2.500000000000e+00, 2.540000000000e+00, 2.580000000000e+00, 2.620000000000e+00,
    2.660000000000e+00, 2.700000000000e+00, 2.740000000000e+00, 2.780000000000e+00,
    2.820000000000e+00, 2.860000000000e+00, 2.900000000000e+00, 2.940000000000e+00,
    2.980000000000e+00, 3.020000000000e+00, 3.060000000000e+00, 3.100000000000e+00,
    3.140000000000e+00, 3.180000000000e+00, 3.220000000000e+00, 3.260000000000e+00,
    3.300000000000e+00, 3.340000000000e+00, 3.380000000000e+00, 3.420000000000e+00,
    3.460000000000e+00, 3.500000000000e+00, 3.540000000000e+00, 3.580000000000e+00,
    3.620000000000e+00, 3.660000000000e+00, 3.700000000000e+00, 3.740000000000e+00,
    3.780000000000e+00, 3.820000000000e+00, 3.860000000000e+00, 3.900000000000e+00,
    3.940000000000e+00, 3.980000000000e+00, 4.020000000000e+00, 4.060000000000e+00,
    4.100000000000e+00, 4.140000000000e+00, 4.180000000000e+00, 4.220000000000e+00,
    4.260000000000e+00, 4.300000000000e+00, 4.340000000000e+00, 4.380000000000e+00,
    4.420000000000e+00, 4.460000000000e+00, 4.500000000000e+00, 4.540000000000e+00,
    4.580000000000e+00, 4.620000000000e+00, 4.660000000000e+00, 4.700000000000e+00,
    4.740000000000e+00, 4.780000000000e+00, 4.820000000000e+00, 4.860000000000e+00,
    4.900000000000e+00, 4.940000000000e+00, 4.980000000000e+00, 5.020000000000e+00,
    5.060000000000e+00, 5.100000000000e+00, 5.140000000000e+00, 5.180000000000e+00,
    5.220000000000e+00, 5.260000000000e+00, 5.300000000000e+00, 5.340000000000e+00,
    5.380000000000e+00, 5.420000000000e+00, 5.460000000000e+00, 5.500000000000e+00,
    5.540000000000e+00, 5.580000000000e+00, 5.620000000000e+00, 5.660000000000e+00,
    5.700000000000e+00, 5.740000000000e+00, 5.780000000000e+00, 5.820000000000e+00,
    5.860000000000e+00, 5.900000000000e+00, 5.940000000000e+00, 5.980000000000e+00,
])

_F = np.array([
    3.737208556249e-14, 4.597562178985e-14, 5.642350755944e-14, 6.908538412704e-14,
    8.440242846513e-14, 1.029019141933e-13, 1.252152604438e-13, 1.521005617724e-13,
    1.844708919680e-13, 2.234300603056e-13, 2.703179924741e-13, 3.267685369418e-13,
    3.947832934825e-13, 4.768260631402e-13, 5.759437749296e-13, 6.959213096891e-13,
    8.414795813400e-13, 1.018528627185e-12, 1.234490391092e-12, 1.498709459425e-12,
    1.822974347228e-12, 2.222177165042e-12, 2.715145775216e-12, 3.325690037887e-12,
    4.083912635573e-12, 5.027845452692e-12, 6.205484788919e-12, 7.677313033479e-12,
    9.519411062236e-12, 1.182728478862e-11, 1.472055125296e-11, 1.834865461794e-11,
    2.289781068457e-11, 2.859941026714e-11, 3.574014715062e-11, 4.467417554544e-11,
    5.583764504565e-11, 6.976600812403e-11, 8.711454612814e-11, 1.086826144684e-10,
    1.354421660341e-10, 1.685711735868e-10, 2.094926366571e-10, 2.599199259830e-10,
    3.219092884615e-10, 3.979204077024e-10, 4.908859895194e-10, 6.042914183127e-10,
    7.422656099907e-10, 9.096842712611e-10, 1.112286866186e-09, 1.356808692550e-09,
    1.651129588416e-09, 2.004440931162e-09, 2.427432768293e-09, 2.932503146453e-09,
    3.533992002341e-09, 4.248442372919e-09, 5.094892206631e-09, 6.095200756169e-09,
    7.274414462184e-09, 8.661178466509e-09, 1.028820151023e-08, 1.219278408476e-08,
    1.441742244605e-08, 1.701050463654e-08, 2.002711918275e-08, 2.353000288959e-08,
    2.759066141795e-08, 3.229070545502e-08, 3.772345667169e-08, 4.399589177797e-08,
    5.123101041420e-08, 5.957073398261e-08, 6.917946861040e-08, 8.024849710374e-08,
    9.300140301014e-08, 1.077007759010e-07, 1.246565020035e-07, 1.442360098308e-07,
    1.668769180870e-07, 1.931026247051e-07, 2.235414833826e-07, 2.589503396198e-07,
    3.002433444103e-07, 3.485271329246e-07, 4.051436504997e-07, 4.717221318429e-07,
    5.502419945732e-07, 6.431086980698e-07, 7.532449461813e-07, 8.841999806767e-07,
    1.040280124294e-06, 1.226704190608e-06, 1.449787885041e-06, 1.717161879202e-06,
    2.038028850712e-06, 2.423465443547e-06, 2.886775819406e-06, 3.443904237683e-06,
    4.113914917663e-06, 4.919548297966e-06, 5.887863709494e-06, 7.050979412146e-06,
    8.446921903031e-06, 1.012059737411e-05, 1.212489916604e-05, 1.452196601695e-05,
    1.738460682216e-05, 2.079790848163e-05, 2.486104419385e-05, 2.968930023227e-05,
    3.541633978451e-05, 4.219672281662e-05, 5.020870111151e-05, 5.965730759063e-05,
    7.077775872487e-05, 8.383918824190e-05, 9.914872940606e-05, 1.170559618516e-04,
    1.379577372567e-04, 1.623033960265e-04, 1.906003845779e-04, 2.234202797732e-04,
    2.614052235036e-04, 3.052747663809e-04, 3.558331149421e-04, 4.139767717134e-04,
    4.807025519359e-04, 5.571159547382e-04, 6.444398600916e-04, 7.440235160423e-04,
    8.573517735331e-04, 9.860545186782e-04, 1.131916244703e-03, 1.296885698010e-03,
    1.483085525053e-03, 1.692821839053e-03, 1.928593618097e-03, 2.193101839062e-03,
    2.489258245114e-03, 2.820193638493e-03, 3.189265584896e-03, 3.600065411317e-03,
    4.056424375705e-03, 4.562418884361e-03, 5.122374631914e-03, 5.740869538821e-03,
    6.422735363003e-03, 7.173057865332e-03, 7.997175413396e-03, 8.900675914278e-03,
    9.889391975075e-03, 1.096939419946e-02, 1.214698253985e-02, 1.342867563745e-02,
    1.482119809697e-02, 1.633146565804e-02, 1.796656824293e-02, 1.973375087767e-02,
    2.164039250317e-02, 2.369398271240e-02, 2.590209647049e-02, 2.827236689471e-02,
    3.081245619291e-02, 3.353002487881e-02, 3.643269940353e-02, 3.952803836196e-02,
    4.282349745132e-02, 4.632639337705e-02, 5.004386691711e-02, 5.398284537033e-02,
    5.815000462745e-02, 6.255173111379e-02, 6.719408386135e-02, 7.208275697417e-02,
    7.722304275456e-02, 8.261979575909e-02, 8.827739805183e-02, 9.419972591840e-02,
    1.003901182979e-01, 1.068513471808e-01, 1.135855902086e-01, 1.205944056992e-01,
    1.278787103028e-01, 1.354387594776e-01, 1.432741309531e-01, 1.513837113285e-01,
    1.597656859277e-01, 1.684175320125e-01, 1.773360154257e-01, 1.865171907140e-01,
    1.959564047512e-01, 2.056483038583e-01, 2.155868443887e-01, 2.257653067234e-01,
    2.361763125930e-01, 2.468118456230e-01, 2.576632749714e-01, 2.687213819107e-01,
    2.799763891822e-01, 2.914179929351e-01, 3.030353970451e-01, 3.148173495925e-01,
    3.267521812697e-01, 3.388278454735e-01, 3.510319598350e-01, 3.633518489289e-01,
    3.757745879059e-01, 3.882870467843e-01, 4.008759351433e-01, 4.135278469617e-01,
    4.262293053484e-01, 4.389668069186e-01, 4.517268655825e-01, 4.644960555165e-01,
    4.772610531037e-01, 4.900086776393e-01, 5.027259306144e-01, 5.154000334043e-01,
    5.280184632028e-01, 5.405689870611e-01, 5.530396939082e-01, 5.654190244424e-01,
    5.776957988067e-01, 5.898592419718e-01, 6.018990067733e-01, 6.138051945610e-01,
    6.255683734385e-01, 6.371795940858e-01, 6.486304031715e-01, 6.599128543745e-01,
    6.710195170564e-01, 6.819434826237e-01, 6.926783686512e-01, 7.032183208165e-01,
    7.135580127532e-01, 7.236926438870e-01, 7.336179353605e-01, 7.433301241499e-01,
    7.528259554763e-01, 7.621026736310e-01, 7.711580113220e-01, 7.799901776647e-01,
    7.885978449351e-01, 7.969801342068e-01, 8.051365999888e-01, 8.130672139849e-01,
    8.207723480933e-01, 8.282527567594e-01, 8.355095587952e-01, 8.425442187707e-01,
    8.493585280887e-01, 8.559545858370e-01, 8.623347795163e-01, 8.685017657350e-01,
    8.744584509546e-01, 8.802079723681e-01, 8.857536789842e-01, 8.910991129857e-01,
    8.962479914282e-01, 9.012041883326e-01, 9.059717172267e-01, 9.105547141798e-01,
    9.149574213739e-01, 9.191841712430e-01, 9.232393712156e-01, 9.271274890813e-01,
    9.308530390071e-01, 9.344205682140e-01, 9.378346443305e-01, 9.410998434283e-01,
    9.442207387449e-01, 9.472018900927e-01, 9.500478339538e-01, 9.527630742514e-01,
    9.553520737924e-01, 9.578192463680e-01, 9.601689494989e-01, 9.624054778108e-01,
    9.645330570215e-01, 9.665558385221e-01, 9.684778945309e-01, 9.703032137997e-01,
    9.720356978495e-01, 9.736791577136e-01, 9.752373111632e-01, 9.767137803933e-01,
    9.781120901432e-01, 9.794356662286e-01, 9.806878344601e-01, 9.818718199247e-01,
    9.829907466069e-01, 9.840476373244e-01, 9.850454139578e-01, 9.859868979494e-01,
    9.868748110518e-01, 9.877117763026e-01, 9.885003192071e-01, 9.892428691073e-01,
    9.899417607200e-01, 9.905992358248e-01, 9.912174450844e-01, 9.917984499828e-01,
    9.923442248627e-01, 9.928566590508e-01, 9.933375590536e-01, 9.937886508141e-01,
    9.942115820140e-01, 9.946079244131e-01, 9.949791762120e-01, 9.953267644316e-01,
    9.956520472975e-01, 9.959563166233e-01, 9.962408001828e-01, 9.965066640669e-01,
    9.967550150160e-01, 9.969869027252e-01, 9.972033221143e-01, 9.974052155603e-01,
    9.975934750877e-01, 9.977689445124e-01, 9.979324215374e-01, 9.980846597969e-01,
    9.982263708471e-01, 9.983582261017e-01, 9.984808587108e-01, 9.985948653818e-01,
    9.987008081426e-01, 9.987992160448e-01, 9.988905868093e-01, 9.989753884110e-01,
    9.990540606060e-01, 9.991270163995e-01, 9.991946434570e-01, 9.992573054568e-01,
    9.993153433874e-01, 9.993690767900e-01, 9.994188049458e-01, 9.994648080115e-01,
    9.995073481029e-01, 9.995466703280e-01, 9.995830037721e-01, 9.996165624347e-01,
    9.996475461211e-01, 9.996761412897e-01, 9.997025218558e-01, 9.997268499555e-01,
    9.997492766680e-01, 9.997699427013e-01, 9.997889790402e-01, 9.998065075597e-01,
    9.998226416039e-01, 9.998374865333e-01, 9.998511402412e-01, 9.998636936398e-01,
    9.998752311194e-01, 9.998858309796e-01, 9.998955658360e-01, 9.999045030021e-01,
    9.999127048479e-01, 9.999202291374e-01, 9.999271293448e-01, 9.999334549511e-01,
    9.999392517219e-01, 9.999445619684e-01, 9.999494247906e-01, 9.999538763056e-01,
    9.999579498612e-01, 9.999616762344e-01, 9.999650838180e-01, 9.999681987943e-01,
    9.999710452967e-01, 9.999736455611e-01, 9.999760200665e-01, 9.999781876660e-01,
    9.999801657089e-01, 9.999819701538e-01, 9.999836156747e-01, 9.999851157584e-01,
    9.999864827959e-01, 9.999877281668e-01, 9.999888623178e-01, 9.999898948352e-01,
    9.999908345124e-01, 9.999916894127e-01, 9.999924669261e-01, 9.999931738241e-01,
    9.999938163081e-01, 9.999944000556e-01, 9.999949302629e-01, 9.999954116830e-01,
    9.999958486631e-01, 9.999962451766e-01, 9.999966048546e-01, 9.999969310138e-01,
    9.999972266829e-01, 9.999974946264e-01, 9.999977373664e-01, 9.999979572038e-01,
])
