// Piecewise-affine stage data for the bad_inv_nofd gallery map.
// Generated by tools/gen_counterexample.py; mirrors data/*.pwa2.

static const PwaPieceData kBadInv_b[] = {
  {{ -0.5, 0.5, 0, 0.5, 0, 1 }, 3, { 0.33333333333333331, -0.33333333333333331, 0, 1.2000000000000002 }, { 0.33333333333333331, 0.59999999999999987 }},
  {{ -0.5, 0.5, 0, 1, -0.5, 1 }, 3, { 0.33333333333333331, -0.33333333333333331, 1.2000000000000002, 0 }, { 0.33333333333333331, 1.8 }},
  {{ 0, 0.5, 0.5, 0.5, 0.5, 1 }, 3, { 0.66666666666666674, -0.5, 0, 0.60000000000000009 }, { 0.41666666666666663, 0.89999999999999991 }},
  {{ 0, 0.5, 0.5, 1, 0, 1 }, 3, { 0.5, -0.33333333333333331, -0.60000000000000009, 1.2000000000000002 }, { 0.33333333333333331, 0.59999999999999987 }},
  {{ 0, 1, 0, 1.5, -0.5, 1 }, 3, { 0.33333333333333331, -0.5, 1.2000000000000002, -0.60000000000000009 }, { 0.5, 2.4000000000000004 }},
  {{ 0, 1.5, -0.5, 1.5, -0.5, 1 }, 3, { 0.5, -0.66666666666666674, 0.60000000000000009, 0 }, { 0.75, 1.5 }},
  {{ 0.84999999999999998, 0.40000000000000002, 0.5, 0.5, 0, 0.5 }, 3, { 0.66666666666666674, -1.1666666666666665, 0, 8 }, { 0.74999999999999989, -2.8000000000000003 }},
  {{ -0.5, 0.5, -0.84999999999999998, 0.40000000000000002, 0.84999999999999998, 0.40000000000000002 }, 3, { 0.99999999999999989, 5.0000000000000018, -2.0506472337194069e-16, 8.0000000000000036 }, { -2.0000000000000009, -2.8000000000000016 }},
  {{ 0.84999999999999998, 0.40000000000000002, 0, 0.5, -0.5, 0.5 }, 3, { 0.33333333333333315, -4.0000000000000027, 8.8817841970012479e-17, 7.9999999999999982 }, { 2.1666666666666679, -2.7999999999999994 }},
  {{ 0.5, 0.5, 0.84999999999999998, 0.40000000000000002, 0.84999999999999998, 1 }, 3, { 0.99999999999999989, -4.8109664400423452e-17, -1.9999999999999998, 1 }, { 5.5511151231257827e-17, 1.6999999999999997 }},
  {{ 0.84999999999999998, 1, 0.5, 1, 0.5, 0.5 }, 3, { 1.7142857142857142, -0.5, -1.4285714285714286, 0.60000000000000009 }, { -0.1071428571428571, 1.6142857142857143 }},
  {{ -0.81111111111111112, 1, -0.84999999999999998, 1, -0.84999999999999998, 0.40000000000000002 }, 3, { 1.9285714285714288, 9.2518585385429383e-19, 5.400000000000003, 1 }, { 0.78928571428571448, 4.5900000000000025 }},
  {{ -0.84999999999999998, 0.40000000000000002, -0.77222222222222214, 1, -0.81111111111111112, 1 }, 3, { 1.4142857142857126, 0.033333333333333458, 2.3142857142857109, 1.2000000000000002 }, { 0.33880952380952223, 1.8871428571428543 }},
  {{ -0.84999999999999998, 0.40000000000000002, -0.69444444444444442, 1, -0.73333333333333328, 1 }, 3, { 2.5714285714285716, -0.11666666666666664, 5.0142857142857107, 1.0250000000000012 }, { 1.3823809523809523, 4.2521428571428537 }},
  {{ -0.73333333333333328, 1, -0.77222222222222214, 1, -0.84999999999999998, 0.40000000000000002 }, 3, { 2.571428571428573, -0.11666666666666713, 7.7142857142857206, 0.49999999999999861 }, { 1.3823809523809536, 6.7571428571428633 }},
  {{ -0.5, 0.5, -0.5, 1, -0.53888888888888886, 1 }, 3, { 9.0857142857142925, -0.33333333333333331, 1.2857142857142878, 0 }, { 4.7095238095238132, 1.8428571428571439 }},
  {{ -0.53888888888888886, 1, -0.57777777777777772, 1, -0.84999999999999998, 0.40000000000000002 }, 3, { 1.0285714285714302, 0.016666666666665744, -3.8571428571428634, 3.2500000000000036 }, { 0.017619047619049422, -4.1785714285714359 }},
  {{ -0.84999999999999998, 0.40000000000000002, -0.5, 0.5, -0.53888888888888886, 1 }, 3, { 2.6664596273291923, -0.83260869565217399, 2.2639751552795024, 0.076086956521739135 }, { 1.7495341614906827, 2.2939440993788813 }},
  {{ -0.6166666666666667, 1, -0.65555555555555556, 1, -0.66062801932367143, 0.94782608695652171 }, 3, { -1.8000000000000014, 1.899999999999997, -5.0142857142857142, 5.2312499999999913 }, { -3.4599999999999982, -6.7233928571428496 }},
  {{ -0.66062801932367143, 0.94782608695652171, -0.57777777777777772, 1, -0.6166666666666667, 1 }, 3, { -2.8285714285714225, 2.7666666666666555, -7.7142857142856966, 7.5062499999999712 }, { -4.9609523809523663, -10.663392857142819 }},
  {{ -0.84999999999999998, 0.40000000000000002, -0.57777777777777772, 1, -0.672463768115942, 0.89565217391304341 }, 3, { -1.4877551020408173, 1.1583333333333339, -8.5339285714285751, 5.371875000000002 }, { -2.5779251700680281, -9.00258928571429 }},
  {{ -0.672463768115942, 0.89565217391304341, -0.69444444444444442, 1, -0.84999999999999998, 0.40000000000000002 }, 3, { 0.76256157635467969, 0.35229885057471261, -0.09975369458127839, 2.3508620689655166 }, { -0.3427422003284073, -0.6251354679802934 }},
  {{ -0.66062801932367143, 0.94782608695652171, -0.69444444444444442, 1, -0.672463768115942, 0.89565217391304341 }, 3, { 2.6285714285714246, 0.74537037037036946, -5.4214285714285646, 1.229861111111112 }, { 0.5600264550264531, -3.1997420634920597 }},
  {{ -0.672463768115942, 0.89565217391304341, -0.57777777777777772, 1, -0.66062801932367143, 0.94782608695652171 }, 3, { -2.2530612244897976, 1.8527777777777783, -3.4852040816326522, 0.79062500000000091 }, { -3.7145464852607724, -1.5042984693877552 }},
  {{ -0.66062801932367143, 0.94782608695652171, -0.65555555555555556, 1, -0.69444444444444442, 1 }, 3, { 3.6000000000000032, 1.3750000000000038, -2.0681868915874445e-16, 4.7437499999999977 }, { 0.60499999999999821, -2.9487499999999982 }},
  {{ -0.84999999999999998, 1.55, -0.84999999999999998, 1, -0.81111111111111112, 1 }, 3, { 1.9285714285714288, 0, 5.4000000000000057, 1 }, { 0.78928571428571448, 4.5900000000000043 }},
  {{ -0.81111111111111112, 1, -0.77222222222222214, 1, -0.84999999999999998, 1.55 }, 3, { 1.4142857142857124, -0.03636363636363648, 2.3142857142857114, 0.78181818181818163 }, { 0.40850649350649204, 2.3053246753246732 }},
  {{ -0.77222222222222214, 1, -0.73333333333333328, 1, -0.84999999999999998, 1.55 }, 3, { 2.571428571428573, 0.12727272727272773, 7.7142857142857206, 1.5454545454545472 }, { 1.138441558441559, 5.7116883116883139 }},
  {{ -0.69444444444444442, 1, -0.65555555555555556, 1, -0.59999999999999998, 1.8999999999999999 }, 3, { 3.6000000000000028, -0.46666666666666695, 0, 0.11666666666666665 }, { 2.4466666666666685, 1.6783333333333332 }},
  {{ -0.59999999999999998, 1.8999999999999999, -0.73333333333333328, 1, -0.69444444444444442, 1 }, 3, { 2.5714285714285743, -0.35873015873015907, 5.0142857142857169, -0.4095238095238099 }, { 1.6244444444444466, 5.6866666666666692 }},
  {{ -0.84999999999999998, 1.8999999999999999, -0.84999999999999998, 1.55, -0.73333333333333328, 1 }, 3, { 1.9714285714285709, 0, 5.1428571428571423, 1 }, { 0.82571428571428529, 4.371428571428571 }},
  {{ -0.73333333333333328, 1, -0.59999999999999998, 1.8999999999999999, -0.84999999999999998, 1.8999999999999999 }, 3, { 1.0000000000000002, -0.12592592592592589, -4.4408920985006104e-17, 0.33333333333333315 }, { 0.23925925925925928, 1.2666666666666668 }},
  {{ 0.5, 1, 0.84999999999999998, 1, 0.84999999999999998, 1.8999999999999999 }, 3, { 1.7142857142857142, 4.1941758708061468e-17, -1.4285714285714286, 1 }, { -0.6071428571428571, 1.2142857142857144 }},
  {{ 0.84999999999999998, 1.8999999999999999, 0.40000000000000002, 1.8999999999999999, 0.5, 1 }, 3, { 1, 0.27777777777777779, 0, 0.44444444444444436 }, { -0.52777777777777779, 1.0555555555555558 }},
  {{ 0.40000000000000002, 1.8999999999999999, 0, 1, 0.5, 1 }, 3, { 0.50000000000000011, 0.22222222222222221, -0.6000000000000002, 0.37777777777777777 }, { -0.22222222222222221, 1.4222222222222223 }},
  {{ -0.20000000000000001, 1.8999999999999999, -0.5, 1.5, 0, 1.5 }, 3, { 0.5, 0.37500000000000006, 0.60000000000000009, 1.3 }, { -0.8125, -0.44999999999999973 }},
  {{ 0.40000000000000002, 1.8999999999999999, -0.20000000000000001, 1.8999999999999999, 0.11304347826086963, 1.7043478260869565 }, 3, { 1, 1.088888888888889, 0, 0.25555555555555465 }, { -2.068888888888889, 1.4144444444444462 }},
  {{ 0.11304347826086963, 1.7043478260869565, 0, 1, 0.40000000000000002, 1.8999999999999999 }, 3, { 2.0652173913043481, -0.47342995169082158, 0.14130434782608625, 0.048309178743961512 }, { 0.47342995169082158, 1.7516908212560385 }},
  {{ 0, 1.5, 0, 1, 0.11304347826086963, 1.7043478260869565 }, 3, { 2.2307692307692291, -0.5, 4.1807692307692292, -0.60000000000000009 }, { 0.5, 2.4000000000000004 }},
  {{ 0.11304347826086963, 1.7043478260869565, -0.20000000000000001, 1.8999999999999999, 0, 1.5 }, 3, { 0.57828282828282807, 0.41414141414141409, 0.67676767676767724, 1.3383838383838387 }, { -0.8712121212121211, -0.50757575757575779 }},
  {{ -0.53888888888888886, 1, -0.5, 1, -0.5, 1.5 }, 3, { 9.0857142857142943, -0.66666666666666674, 1.2857142857142878, 0 }, { 5.042857142857148, 1.8428571428571439 }},
  {{ -0.5, 1.5, -0.6166666666666667, 1, -0.57777777777777772, 1 }, 3, { -2.8285714285714234, 0.55999999999999905, -7.7142857142856984, 0.99999999999999645 }, { -2.75428571428571, -4.1571428571428433 }},
  {{ -0.57777777777777772, 1, -0.53888888888888886, 1, -0.5, 1.5 }, 3, { 1.0285714285714302, -0.040000000000000036, -3.8571428571428634, 0.40000000000000036 }, { 0.074285714285715176, -1.3285714285714325 }},
  {{ -0.59999999999999998, 1.8999999999999999, -0.65555555555555556, 1, -0.4772946859903382, 1.7434782608695651 }, 3, { 2.0529197080291972, -0.37116788321167893, -0.25866788321167888, 0.13263381995133819 }, { 1.336970802919708, 1.4927950121654501 }},
  {{ -0.4772946859903382, 1.7434782608695651, -0.20000000000000001, 1.8999999999999999, -0.59999999999999998, 1.8999999999999999 }, 3, { 1, -1.1966049382716051, 4.4408920985006301e-18, 0.33541666666666664 }, { 2.2735493827160491, 1.2627083333333333 }},
  {{ -0.5, 1.5, -0.20000000000000001, 1.8999999999999999, -0.4772946859903382, 1.7434782608695651 }, 3, { -0.1712990936555891, 0.87847432024169192, -1.3846676737160126, 2.7885007552870098 }, { -1.9033610271903323, -3.6750849697885206 }},
  {{ -0.4772946859903382, 1.7434782608695651, -0.65555555555555556, 1, -0.5, 1.5 }, 3, { -5.0606557377049173, 1.3344262295081963, -17.669262295081968, 4.3071038251366112 }, { -5.0319672131147533, -14.095286885245901 }},
  {{ -0.65555555555555556, 1, -0.6166666666666667, 1, -0.5, 1.5 }, 3, { -1.8000000000000014, 0.3200000000000004, -5.0142857142857142, 0.36999999999999988 }, { -1.8800000000000012, -1.8621428571428571 }},
  {{ -2, -2, 2, -2, 2, 0.40000000000000002, -2, 0.40000000000000002 }, 4, { 1, 0, 0, 1 }, { 0, 0 }},
  {{ -2, 1.8999999999999999, 2, 1.8999999999999999, 2, 2, -2, 2 }, 4, { 1, 0, 0, 1 }, { 0, 0 }},
  {{ -2, 0.40000000000000002, -0.84999999999999998, 0.40000000000000002, -0.84999999999999998, 1.8999999999999999, -2, 1.8999999999999999 }, 4, { 1, 0, 0, 1 }, { 0, 0 }},
  {{ 0.84999999999999998, 0.40000000000000002, 2, 0.40000000000000002, 2, 1.8999999999999999, 0.84999999999999998, 1.8999999999999999 }, 4, { 1, 0, 0, 1 }, { 0, 0 }},
};

static const PwaPieceData kBadInv_l[] = {
  {{ -0.5, 1.2, -0.16666666666666666, 1.2, -0.083333333333333329, 1.5 }, 3, { 0, -0.33333333333333331, 0, 1 }, { 0.39999999999999997, 0 }},
  {{ -0.5, 1.2, -0.083333333333333329, 1.5, -0.25, 1.5 }, 3, { 1.1999999999999997, -1.9999999999999996, 0, 1 }, { 2.9999999999999991, 0 }},
  {{ -0.25, 1.5, -0.083333333333333329, 1.5, 0, 1.8 }, 3, { 1.1999999999999997, 9.6219328800846903e-17, 0, 1 }, { -2.2204460492503131e-16, 0 }},
  {{ -0.16666666666666666, 1.2, 0, 1.2, -0.083333333333333329, 1.5 }, 3, { 0, -0.33333333333333331, 0, 1 }, { 0.39999999999999997, 0 }},
  {{ 0, 1.2, 0.16666666666666666, 1.2, 0.083333333333333329, 1.5 }, 3, { 0, 0.33333333333333331, 0, 1 }, { -0.39999999999999997, 0 }},
  {{ 0, 1.2, 0.083333333333333329, 1.5, -0.083333333333333329, 1.5 }, 3, { 1.2000000000000002, -3.1456319031046101e-17, 0, 1 }, { 3.7747582837255319e-17, 0 }},
  {{ -0.083333333333333329, 1.5, 0.083333333333333329, 1.5, 0, 1.8 }, 3, { 1.2000000000000002, 7.4014868308343753e-18, 0, 1 }, { -1.3877787807814457e-17, 0 }},
  {{ 0.16666666666666666, 1.2, 0.5, 1.2, 0.083333333333333329, 1.5 }, 3, { 0, 0.33333333333333331, 0, 1 }, { -0.39999999999999997, 0 }},
  {{ 0.5, 1.2, 0.25, 1.5, 0.083333333333333329, 1.5 }, 3, { 1.2, 1.9999999999999996, 2.6645352591003761e-16, 1 }, { -2.9999999999999996, -2.2204460492503131e-16 }},
  {{ 0.083333333333333329, 1.5, 0.25, 1.5, 0, 1.8 }, 3, { 1.1999999999999997, -1.1842378929335003e-16, 0, 1 }, { 2.0816681711721685e-16, 0 }},
  {{ -0.79000000000000004, 1.2, -0.5, 1.2, -0.25, 1.5 }, 3, { 0, -0.99999999999999989, 0, 1 }, { 1.1999999999999997, 0 }},
  {{ -0.79000000000000004, 1.2, -0.25, 1.5, -0.79000000000000004, 1.5 }, 3, { 6.8258156328805921e-17, -0.99999999999999989, -6.003428207232328e-17, 1 }, { 1.1999999999999997, 0 }},
  {{ -0.79000000000000004, 1.5, -0.25, 1.5, 0, 1.8 }, 3, { 0, 0.99999999999999989, 0, 1 }, { -1.7999999999999998, 0 }},
  {{ -0.79000000000000004, 1.5, 0, 1.8, -0.79000000000000004, 1.8 }, 3, { 2.5155686254164938e-17, 0.99999999999999989, 1.0399557445855903e-17, 1 }, { -1.7999999999999998, 0 }},
  {{ -0.80000000000000004, 1.2, -0.79000000000000004, 1.2, -0.79000000000000004, 1.5 }, 3, { 79.999999999999943, -1, 0, 1 }, { 64.399999999999963, 0 }},
  {{ -0.80000000000000004, 1.2, -0.79000000000000004, 1.5, -0.80000000000000004, 1.5 }, 3, { 49.999999999999957, -9.8686491077791662e-17, -1.7763568394002126e-16, 1 }, { 39.199999999999974, -2.2204460492503131e-16 }},
  {{ -0.80000000000000004, 1.5, -0.79000000000000004, 1.5, -0.79000000000000004, 1.8 }, 3, { 49.999999999999957, 1, 0, 1 }, { 37.699999999999974, 0 }},
  {{ -0.80000000000000004, 1.5, -0.79000000000000004, 1.8, -0.80000000000000004, 1.8 }, 3, { 79.999999999999943, -1.5789838572446666e-16, -1.7763568394002126e-16, 1 }, { 63.19999999999996, -2.2204460492503131e-16 }},
  {{ -0.80000000000000004, 1.8, -0.79000000000000004, 1.8, -0.80000000000000004, 1.8999999999999999 }, 3, { 79.999999999999943, 0, 0, 1 }, { 63.19999999999996, 0 }},
  {{ -0.79000000000000004, 1.8, 0, 1.8, -0.80000000000000004, 1.8999999999999999 }, 3, { 0, -8.0000000000000124, 0, 1 }, { 14.400000000000023, 0 }},
  {{ 0, 1.8, 0.80000000000000004, 1.8999999999999999, -0.80000000000000004, 1.8999999999999999 }, 3, { 1, 3.1086244689504352e-16, 0, 1.0000000000000002 }, { -5.5955240441107831e-16, -4.4408920985006262e-16 }},
  {{ 0.5, 1.2, 0.80000000000000004, 1.1000000000000001, 0.25, 1.5 }, 3, { 4.1538461538461506, 4.4615384615384581, -5.380311580875774e-17, 0.99999999999999989 }, { -7.4307692307692257, 2.2204460492503131e-16 }},
  {{ 0.25, 1.5, 0.80000000000000004, 1.1000000000000001, 0.80000000000000004, 1.8999999999999999 }, 3, { 0.90909090909090895, -1.1102230246251565e-16, -3.6334571715005111e-17, 1 }, { 0.072727272727272918, 0 }},
  {{ 0.25, 1.5, 0.80000000000000004, 1.8999999999999999, 0, 1.8 }, 3, { 1.0188679245283019, -0.15094339622641506, -1.1521182331015761e-17, 1 }, { 0.27169811320754711, 0 }},
  {{ -0.80000000000000004, 1.2, -0.80000000000000004, 1.1000000000000001, -0.79000000000000004, 1.1000000000000001 }, 3, { 1, 0, 2.3092638912203142e-15, 1 }, { 0, 1.7763568394002505e-15 }},
  {{ -0.80000000000000004, 1.2, -0.79000000000000004, 1.1000000000000001, -0.79000000000000004, 1.2 }, 3, { 79.999999999999943, 7.9000000000000119, 0, 1 }, { 53.719999999999949, 0 }},
  {{ -0.79000000000000004, 1.2, -0.79000000000000004, 1.1000000000000001, -0.5, 1.1000000000000001 }, 3, { 1.0000000000000004, 7.9000000000000119, 5.9722342014318737e-17, 1 }, { -8.6900000000000137, 0 }},
  {{ -0.79000000000000004, 1.2, -0.5, 1.1000000000000001, -0.5, 1.2 }, 3, { -1.1801895172590848e-16, 5.0000000000000062, -2.3603790345181665e-17, 0.99999999999999989 }, { -6.0000000000000071, 2.2204460492503131e-16 }},
  {{ -0.5, 1.2, -0.5, 1.1000000000000001, -0.16666666666666666, 1.1000000000000001 }, 3, { 0.99999999999999989, 5.0000000000000071, -1.1102230246251625e-17, 1 }, { -5.500000000000008, 0 }},
  {{ -0.5, 1.2, -0.16666666666666666, 1.1000000000000001, -0.16666666666666666, 1.2 }, 3, { -1.8503717077085944e-17, 1.666666666666669, -1.1102230246251554e-17, 1 }, { -2.0000000000000027, 0 }},
  {{ -0.16666666666666666, 1.2, -0.16666666666666666, 1.1000000000000001, 0, 1.1000000000000001 }, 3, { 1, 1.666666666666669, 1.1102230246251565e-16, 1 }, { -1.8333333333333359, 0 }},
  {{ -0.16666666666666666, 1.2, 0, 1.1000000000000001, 0, 1.2 }, 3, { 0, 0, 5.5511151231257753e-17, 1 }, { 0, 0 }},
  {{ 0, 1.2, 0, 1.1000000000000001, 0.16666666666666666, 1.1000000000000001 }, 3, { 1, 0, 1.1102230246251565e-16, 1 }, { 0, 0 }},
  {{ 0, 1.2, 0.16666666666666666, 1.1000000000000001, 0.16666666666666666, 1.2 }, 3, { -9.2518585385429703e-17, -1.666666666666669, 5.5511151231257753e-17, 1 }, { 2.0000000000000027, 0 }},
  {{ 0.16666666666666666, 1.2, 0.16666666666666666, 1.1000000000000001, 0.5, 1.1000000000000001 }, 3, { 0.99999999999999989, -1.666666666666669, -1.1102230246251625e-17, 1 }, { 1.8333333333333359, 0 }},
  {{ 0.16666666666666666, 1.2, 0.5, 1.1000000000000001, 0.5, 1.2 }, 3, { 5.5511151231257839e-17, -5.0000000000000071, -1.1102230246251554e-17, 1 }, { 6.000000000000008, 0 }},
  {{ 0.5, 1.2, 0.5, 1.1000000000000001, 0.80000000000000004, 1.1000000000000001 }, 3, { 0.99999999999999989, -5.0000000000000071, 6.6613381477509353e-17, 1 }, { 5.500000000000008, 0 }},
  {{ -2, -2, 2, -2, 2, 1.1000000000000001, -2, 1.1000000000000001 }, 4, { 1, 0, 0, 1 }, { 0, 0 }},
  {{ -2, 1.8999999999999999, 2, 1.8999999999999999, 2, 2, -2, 2 }, 4, { 1, 0, 0, 1 }, { 0, 0 }},
  {{ -2, 1.1000000000000001, -0.80000000000000004, 1.1000000000000001, -0.80000000000000004, 1.8999999999999999, -2, 1.8999999999999999 }, 4, { 1, 0, 0, 1 }, { 0, 0 }},
  {{ 0.80000000000000004, 1.1000000000000001, 2, 1.1000000000000001, 2, 1.8999999999999999, 0.80000000000000004, 1.8999999999999999 }, 4, { 1, 0, 0, 1 }, { 0, 0 }},
};

static const PwaPieceData kBadInv_r[] = {
  {{ -0.10000000000000001, 1.5, -0.29999999999999999, 1.5, 0, 1.2 }, 3, { 3, 1.9999999999999996, 0, 1 }, { -2.3999999999999995, 0 }},
  {{ -0.10000000000000001, 1.5, 0, 1.8, -0.29999999999999999, 1.5 }, 3, { 3, -1.9999999999999996, 0, 1 }, { 3.5999999999999992, 0 }},
  {{ 0.10000000000000001, 1.5, -0.10000000000000001, 1.5, 0, 1.2 }, 3, { -3, -4.8109664400423452e-17, 0, 1 }, { 5.7731597280508142e-17, 0 }},
  {{ 0.10000000000000001, 1.5, 0, 1.8, -0.10000000000000001, 1.5 }, 3, { -3, -1.4802973661668751e-17, 0, 1 }, { 0, 0 }},
  {{ 0.29999999999999999, 1.5, 0.10000000000000001, 1.5, 0, 1.2 }, 3, { 3, -2, 0, 1.0000000000000002 }, { 2.3999999999999999, -2.2204460492503131e-16 }},
  {{ 0.29999999999999999, 1.5, 0, 1.8, 0.10000000000000001, 1.5 }, 3, { 3, 1.9999999999999998, 0, 1 }, { -3.5999999999999992, 0 }},
  {{ 0, -2, 2, -2, 2, 1.5, 0.29999999999999999, 1.5, 0, 1.2 }, 5, { 1, 0, 0, 1 }, { 0, 0 }},
  {{ 0, 1.8, 0.29999999999999999, 1.5, 2, 1.5, 2, 2, 0, 2 }, 5, { 1, 0, 0, 1 }, { 0, 0 }},
  {{ 0, 1.8, 0, 2, -2, 2, -2, 1.5, -0.29999999999999999, 1.5 }, 5, { 1, 0, 0, 1 }, { 0, 0 }},
  {{ 0, 1.2, -0.29999999999999999, 1.5, -2, 1.5, -2, -2, 0, -2 }, 5, { 1, 0, 0, 1 }, { 0, 0 }},
};
