#pragma once

// Frozen reference values computed once with independent high-resolution
// quadrature / exact series and pinned here.  Tests compare against these,
// not against live re-derivations.

namespace refs {

struct profile_row { double nu; int m; int k; double rho; double value; };
inline constexpr profile_row profile_rows[] = {
    {1.0000000000000000, 0, 0, 0.20000000000000000, 0.85077784843464769},
    {1.0000000000000000, 0, 0, 0.50000000000000000, 0.66467019408956851},
    {1.0000000000000000, 0, 0, 0.80000000000000000, 0.31904169316299288},
    {1.0000000000000000, 0, 1, 0.20000000000000000, 0.24564957091383805},
    {1.0000000000000000, 0, 1, 0.50000000000000000, 0.54832493507553136},
    {1.0000000000000000, 0, 1, 0.80000000000000000, 0.68180289069963214},
    {1.0000000000000000, 0, 5, 0.20000000000000000, 0.00013430039284601448},
    {1.0000000000000000, 0, 5, 0.50000000000000000, 0.010740956122349286},
    {1.0000000000000000, 0, 5, 0.80000000000000000, 0.066390704546222881},
    {2.0000000000000000, 0, 0, 0.20000000000000000, 0.87786695637214283},
    {2.0000000000000000, 0, 0, 0.50000000000000000, 0.59960549293739560},
    {2.0000000000000000, 0, 0, 0.80000000000000000, 0.22531198124882605},
    {2.0000000000000000, 0, 1, 0.20000000000000000, 0.19270961099501728},
    {2.0000000000000000, 0, 1, 0.50000000000000000, 0.34976987088014743},
    {2.0000000000000000, 0, 1, 0.80000000000000000, 0.31441835900860812},
    {2.0000000000000000, 0, 5, 0.20000000000000000, 0.00022137720140641283},
    {2.0000000000000000, 0, 5, 0.50000000000000000, 0.011945399636009500},
    {2.0000000000000000, 0, 5, 0.80000000000000000, 0.028574847630812514},
    {2.0000000000000000, 1, 1, 0.20000000000000000, -0.26135895503912377},
    {2.0000000000000000, 1, 1, 0.50000000000000000, -0.12462566139179410},
    {2.0000000000000000, 1, 1, 0.80000000000000000, -0.013782601144641293},
    {2.0000000000000000, 1, 2, 0.20000000000000000, -0.064019607955286350},
    {2.0000000000000000, 1, 2, 0.50000000000000000, -0.076317319816692292},
    {2.0000000000000000, 1, 2, 0.80000000000000000, -0.013504136053068214},
    {2.0000000000000000, 1, 6, 0.20000000000000000, -0.00015646650635546494},
    {2.0000000000000000, 1, 6, 0.50000000000000000, -0.0072860394770030371},
    {2.0000000000000000, 1, 6, 0.80000000000000000, -0.0084491913431951069},
    {2.0000000000000000, 1, 0, 0.20000000000000000, 0.12038500060294485},
    {2.0000000000000000, 1, 0, 0.50000000000000000, 0.24152407854517453},
    {2.0000000000000000, 1, 0, 0.80000000000000000, 0.24892489852602256},
    {3.5000000000000000, 2, 2, 0.20000000000000000, 0.10219181290831563},
    {3.5000000000000000, 2, 2, 0.50000000000000000, 0.0037177164961873360},
    {3.5000000000000000, 2, 2, 0.80000000000000000, -0.0011367466981531081},
    {3.5000000000000000, 2, 3, 0.20000000000000000, 0.047494462741518066},
    {3.5000000000000000, 2, 3, 0.50000000000000000, 0.014398654075654142},
    {3.5000000000000000, 2, 3, 0.80000000000000000, -0.00093922155323802817},
    {3.5000000000000000, 2, 7, 0.20000000000000000, 0.00040050847602453872},
    {3.5000000000000000, 2, 7, 0.50000000000000000, 0.0073990380944891902},
    {3.5000000000000000, 2, 7, 0.80000000000000000, 1.3766266985740655e-44},
    {3.5000000000000000, 2, 1, 0.20000000000000000, -0.075443963686242729},
    {3.5000000000000000, 2, 1, 0.50000000000000000, -0.080112375390049121},
    {3.5000000000000000, 2, 1, 0.80000000000000000, -0.038131823841998138},
};

struct lambda_ref_row { double nu; int m; int k; double value; };
inline constexpr lambda_ref_row lambda_ref_rows[] = {
    {1.0000000000000000, 0, 0, 0.90689968211710893},
    {1.0000000000000000, 0, 1, 1.0634341403952365},
    {1.0000000000000000, 0, 2, 0.40557786759736119},
    {1.0000000000000000, 0, 3, 0.21903708274264110},
    {1.0000000000000000, 0, 4, 0.13817736683150516},
    {1.0000000000000000, 0, 5, 0.095424761005253898},
    {1.0000000000000000, 0, 6, 0.069968829515113082},
    {1.0000000000000000, 0, 7, 0.053548525556907373},
    {1.0000000000000000, 0, 8, 0.042324438827244428},
    {1.0000000000000000, 0, 9, 0.034306427095881181},
    {1.0000000000000000, 0, 10, 0.028376266144004140},
    {1.0000000000000000, 0, 11, 0.023865239239939613},
    {1.0000000000000000, 0, 12, 0.020353039489673008},
    {2.0000000000000000, 0, 0, 0.67357155194490335},
    {2.0000000000000000, 0, 1, 0.31121057292744348},
    {2.0000000000000000, 0, 2, 0.10265226731128584},
    {2.0000000000000000, 0, 3, 0.047861566943077547},
    {2.0000000000000000, 0, 4, 0.026166858619827950},
    {2.0000000000000000, 0, 5, 0.015754535145027234},
    {2.0000000000000000, 0, 6, 0.010137508178462857},
    {2.0000000000000000, 0, 7, 0.0068532815146096865},
    {2.0000000000000000, 0, 8, 0.0048148330416341572},
    {2.0000000000000000, 0, 9, 0.0034893598323963281},
    {2.0000000000000000, 0, 10, 0.0025945502344104207},
    {2.0000000000000000, 0, 11, 0.0019714442635183823},
    {2.0000000000000000, 0, 12, 0.0015260367750653401},
    {2.0000000000000000, 1, 1, 0.17453292519943296},
    {2.0000000000000000, 1, 2, 0.067596311266226865},
    {2.0000000000000000, 1, 3, 0.033282122953851727},
    {2.0000000000000000, 1, 4, 0.018605272340079639},
    {2.0000000000000000, 1, 5, 0.011305375040466902},
    {2.0000000000000000, 1, 6, 0.0072975882090595520},
    {2.0000000000000000, 1, 7, 0.0049340701793146686},
    {2.0000000000000000, 1, 8, 0.0034615500249925791},
    {2.0000000000000000, 1, 9, 0.0025030521056127363},
    {2.0000000000000000, 1, 10, 0.0018563131238766789},
    {2.0000000000000000, 1, 11, 0.0014065938526599436},
    {2.0000000000000000, 1, 12, 0.0010857531872827695},
    {2.0000000000000000, 1, 13, 0.00085173487521544663},
    {3.5000000000000000, 2, 2, 0.052764700543940888},
    {3.5000000000000000, 2, 3, 0.025887871691787118},
    {3.5000000000000000, 2, 4, 0.013988951257807677},
    {3.5000000000000000, 2, 5, 0.0080264997420366842},
    {3.5000000000000000, 2, 6, 0.0048233044619604542},
    {3.5000000000000000, 2, 7, 0.0030105331524863161},
    {3.5000000000000000, 2, 8, 0.0019403556149928256},
    {3.5000000000000000, 2, 9, 0.0012856775319914237},
    {3.5000000000000000, 2, 10, 0.00087272335767445289},
    {3.5000000000000000, 2, 11, 0.00060518173055936171},
    {3.5000000000000000, 2, 12, 0.00042770664727813584},
    {3.5000000000000000, 2, 13, 0.00030747418466494082},
    {3.5000000000000000, 2, 14, 0.00022446819150953428},
};

struct lambda_far_row { double nu; int m; int k; double value; };
inline constexpr lambda_far_row lambda_far_rows[] = {
    {1.0000000000000000, 0, 50, 0.0013407418345535402},
    {1.0000000000000000, 0, 200, 8.6769508881376578e-5},
    {2.0000000000000000, 1, 50, 8.5407422320427079e-6},
    {2.0000000000000000, 1, 200, 4.2624835902239949e-8},
};

struct norm_sq_ref_row { double nu; int m; int k; double value; };
inline constexpr norm_sq_ref_row norm_sq_ref_rows[] = {
    {1.0000000000000000, 0, 0, 3.1415926535897932},
    {1.0000000000000000, 0, 1, 1.5707963267948966},
    {1.0000000000000000, 0, 2, 1.0471975511965977},
    {1.0000000000000000, 0, 3, 0.78539816339744831},
    {2.0000000000000000, 0, 0, 1.0471975511965977},
    {2.0000000000000000, 0, 1, 0.26179938779914944},
    {2.0000000000000000, 0, 2, 0.10471975511965977},
    {2.0000000000000000, 0, 3, 0.052359877559829887},
    {2.0000000000000000, 1, 0, 1.5707963267948966},
    {2.0000000000000000, 1, 1, 3.1415926535897932},
    {2.0000000000000000, 1, 2, 2.0943951023931955},
    {2.0000000000000000, 1, 3, 1.5707963267948966},
    {2.0000000000000000, 1, 4, 1.2566370614359173},
    {3.5000000000000000, 2, 1, 0.78539816339744831},
    {3.5000000000000000, 2, 2, 1.5707963267948966},
    {3.5000000000000000, 2, 3, 0.94247779607693797},
    {3.5000000000000000, 2, 4, 0.62831853071795865},
    {3.5000000000000000, 2, 5, 0.44879895051282761},
};

struct alpha_ref_row { double nu; int m; double value; };
inline constexpr alpha_ref_row alpha_ref_rows[] = {
    {1.0000000000000000, 0, -2.0000000000000000},
    {2.0000000000000000, 0, -0.66666666666666667},
    {2.0000000000000000, 1, 2.0000000000000000},
    {3.5000000000000000, 2, -3.0000000000000000},
    {1.2500000000000000, 1, 2.0000000000000000},
    {3.0000000000000000, 2, -2.0000000000000000},
};

struct f21_row { double a; double b; double c; double x; double value; };
inline constexpr f21_row f21_rows[] = {
    {-3.0000000000000000, 2.5000000000000000, 1.5000000000000000, 0.69999999999999996, -0.099000000000000017},
    {0.29999999999999999, 1.7000000000000000, 2.8999999999999999, -0.40000000000000002, 0.93998704329545727},
    {1.0000000000000000, 6.0000000000000000, 5.0000000000000000, 0.62000000000000000, 3.4903047091412742},
    {1.0000000000000000, 14.000000000000000, 14.000000000000000, 0.99939999999999996, 1666.6666666665418},
    {-1.0000000000000000, 4.0000000000000000, 2.0000000000000000, 0.25000000000000000, 0.50000000000000000},
    {2.2000000000000002, -5.0000000000000000, 3.2999999999999998, 0.55000000000000004, 0.14793229362393576},
};

struct f32_row { double a1; double a2; double a3; double b1; double b2; double x; double value; };
inline constexpr f32_row f32_rows[] = {
    {-2.0000000000000000, 1.5000000000000000, 2.5000000000000000, 2.0000000000000000, 3.0000000000000000, 0.75000000000000000, 0.31884765625000000},
    {-4.0000000000000000, 3.0000000000000000, 1.0000000000000000, 2.0000000000000000, 5.0000000000000000, -0.29999999999999999, 1.4400614285714286},
    {-1.0000000000000000, 2.5000000000000000, 2.5000000000000000, 1.0000000000000000, 3.5000000000000000, 0.95999999999999996, -0.71428571428571422},
    {-5.0000000000000000, 6.0000000000000000, 2.5000000000000000, 4.0000000000000000, 4.5000000000000000, 0.35999999999999999, 0.19297123994800495},
};

struct jacobi_ref_row { int n; double alpha; double beta; double x; double value; };
inline constexpr jacobi_ref_row jacobi_ref_rows[] = {
    {3, -2.0000000000000000, 1.0000000000000000, 0.29999999999999999, 0.30625000000000000},
    {2, -1.0000000000000000, 3.0000000000000000, -0.50000000000000000, 4.6875000000000000},
    {4, 2.5000000000000000, 1.5000000000000000, 0.10000000000000001, 0.32278124999999997},
    {5, -4.0000000000000000, 2.0000000000000000, 0.77000000000000002, 0.0049951618499999985},
    {0, -1.0000000000000000, 1.0000000000000000, 0.50000000000000000, 1.0000000000000000},
    {6, 0.0, 0.0, -0.90000000000000002, -0.24116431249999988},
};

struct lemma_ref_row { int n; double rho; double r; double value; };
inline constexpr lemma_ref_row lemma_ref_rows[] = {
    {0, 0.30000000000000000, 0.60000000000000000, 0.51082562376599068},
    {0, 0.80000000000000000, 0.20000000000000000, 0.22314355131420976},
    {3, 0.50000000000000000, 0.25000000000000000, 0.020833333333333333},
    {3, 0.25000000000000000, 0.50000000000000000, 0.020833333333333333},
    {7, 0.90000000000000000, 0.70000000000000000, 0.012298741639345770},
    {1, 0.40000000000000000, 0.95000000000000000, 0.21052631578947368},
};

} // namespace refs
