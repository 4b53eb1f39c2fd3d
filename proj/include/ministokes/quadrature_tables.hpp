#pragma once

// Symmetric quadrature rules on the reference tetrahedron (vertices at the
// origin and the three unit points), degrees 1..10. Every rule has strictly
// positive weights summing to 1/6 and all nodes strictly inside the element;
// node sets are closed under the 24 barycentric permutations. Each row is
// {x, y, z, weight}. validate_rule() checks monomial exactness against the
// closed-form moments at test time.

namespace ministokes {

// degree 1: 1 points
inline constexpr double kTetRuleD1[1][4] = {
    {2.50000000000000000e-01, 2.50000000000000000e-01, 2.50000000000000000e-01, 1.66666666666666657e-01},
};

// degree 2: 4 points
inline constexpr double kTetRuleD2[4][4] = {
    {1.38196601125010504e-01, 1.38196601125010504e-01, 5.85410196624968515e-01, 4.16666666666666644e-02},
    {1.38196601125010504e-01, 5.85410196624968515e-01, 1.38196601125010504e-01, 4.16666666666666644e-02},
    {5.85410196624968515e-01, 1.38196601125010504e-01, 1.38196601125010504e-01, 4.16666666666666644e-02},
    {1.38196601125010504e-01, 1.38196601125010504e-01, 1.38196601125010504e-01, 4.16666666666666644e-02},
};

// degree 3: 12 points
inline constexpr double kTetRuleD3[12][4] = {
    {9.48472649145130076e-02, 9.48472649145130076e-02, 2.41276996823273859e-01, 1.38888888888888899e-02},
    {9.48472649145130076e-02, 9.48472649145130076e-02, 5.69028473347700126e-01, 1.38888888888888899e-02},
    {9.48472649145130076e-02, 2.41276996823273859e-01, 9.48472649145130076e-02, 1.38888888888888899e-02},
    {9.48472649145130076e-02, 2.41276996823273859e-01, 5.69028473347700126e-01, 1.38888888888888899e-02},
    {9.48472649145130076e-02, 5.69028473347700126e-01, 9.48472649145130076e-02, 1.38888888888888899e-02},
    {9.48472649145130076e-02, 5.69028473347700126e-01, 2.41276996823273859e-01, 1.38888888888888899e-02},
    {2.41276996823273859e-01, 9.48472649145130076e-02, 9.48472649145130076e-02, 1.38888888888888899e-02},
    {2.41276996823273859e-01, 9.48472649145130076e-02, 5.69028473347700126e-01, 1.38888888888888899e-02},
    {2.41276996823273859e-01, 5.69028473347700126e-01, 9.48472649145130076e-02, 1.38888888888888899e-02},
    {5.69028473347700126e-01, 9.48472649145130076e-02, 9.48472649145130076e-02, 1.38888888888888899e-02},
    {5.69028473347700126e-01, 9.48472649145130076e-02, 2.41276996823273859e-01, 1.38888888888888899e-02},
    {5.69028473347700126e-01, 2.41276996823273859e-01, 9.48472649145130076e-02, 1.38888888888888899e-02},
};

// degree 4: 24 points
inline constexpr double kTetRuleD4[24][4] = {
    {4.54861614149914134e-02, 4.54861614149914134e-02, 2.38588928821694135e-01, 6.71162183066270797e-03},
    {4.54861614149914134e-02, 4.54861614149914134e-02, 6.70438748348323066e-01, 6.71162183066270797e-03},
    {4.54861614149914134e-02, 2.38588928821694135e-01, 4.54861614149914134e-02, 6.71162183066270797e-03},
    {4.54861614149914134e-02, 2.38588928821694135e-01, 6.70438748348323066e-01, 6.71162183066270797e-03},
    {4.54861614149914134e-02, 6.70438748348323066e-01, 4.54861614149914134e-02, 6.71162183066270797e-03},
    {4.54861614149914134e-02, 6.70438748348323066e-01, 2.38588928821694135e-01, 6.71162183066270797e-03},
    {2.38588928821694135e-01, 4.54861614149914134e-02, 4.54861614149914134e-02, 6.71162183066270797e-03},
    {2.38588928821694135e-01, 4.54861614149914134e-02, 6.70438748348323066e-01, 6.71162183066270797e-03},
    {2.38588928821694135e-01, 6.70438748348323066e-01, 4.54861614149914134e-02, 6.71162183066270797e-03},
    {6.70438748348323066e-01, 4.54861614149914134e-02, 4.54861614149914134e-02, 6.71162183066270797e-03},
    {6.70438748348323066e-01, 4.54861614149914134e-02, 2.38588928821694135e-01, 6.71162183066270797e-03},
    {6.70438748348323066e-01, 2.38588928821694135e-01, 4.54861614149914134e-02, 6.71162183066270797e-03},
    {6.70097697387665864e-02, 2.74717424779769903e-01, 3.29136402740731748e-01, 7.17726705822618102e-03},
    {6.70097697387665864e-02, 3.29136402740731748e-01, 2.74717424779769903e-01, 7.17726705822618102e-03},
    {6.70097697387665864e-02, 3.29136402740731748e-01, 3.29136402740731748e-01, 7.17726705822618102e-03},
    {2.74717424779769903e-01, 6.70097697387665864e-02, 3.29136402740731748e-01, 7.17726705822618102e-03},
    {2.74717424779769903e-01, 3.29136402740731748e-01, 6.70097697387665864e-02, 7.17726705822618102e-03},
    {2.74717424779769903e-01, 3.29136402740731748e-01, 3.29136402740731748e-01, 7.17726705822618102e-03},
    {3.29136402740731748e-01, 6.70097697387665864e-02, 2.74717424779769903e-01, 7.17726705822618102e-03},
    {3.29136402740731748e-01, 6.70097697387665864e-02, 3.29136402740731748e-01, 7.17726705822618102e-03},
    {3.29136402740731748e-01, 2.74717424779769903e-01, 6.70097697387665864e-02, 7.17726705822618102e-03},
    {3.29136402740731748e-01, 2.74717424779769903e-01, 3.29136402740731748e-01, 7.17726705822618102e-03},
    {3.29136402740731748e-01, 3.29136402740731748e-01, 6.70097697387665864e-02, 7.17726705822618102e-03},
    {3.29136402740731748e-01, 3.29136402740731748e-01, 2.74717424779769903e-01, 7.17726705822618102e-03},
};

// degree 5: 72 points
inline constexpr double kTetRuleD5[72][4] = {
    {1.00000004713413811e-02, 1.00000004713413811e-02, 1.58421052891119157e-01, 4.62448519143559428e-04},
    {1.00000004713413811e-02, 1.00000004713413811e-02, 8.21578946166198087e-01, 4.62448519143559428e-04},
    {1.00000004713413811e-02, 1.58421052891119157e-01, 1.00000004713413811e-02, 4.62448519143559428e-04},
    {1.00000004713413811e-02, 1.58421052891119157e-01, 8.21578946166198087e-01, 4.62448519143559428e-04},
    {1.00000004713413811e-02, 8.21578946166198087e-01, 1.00000004713413811e-02, 4.62448519143559428e-04},
    {1.00000004713413811e-02, 8.21578946166198087e-01, 1.58421052891119157e-01, 4.62448519143559428e-04},
    {1.58421052891119157e-01, 1.00000004713413811e-02, 1.00000004713413811e-02, 4.62448519143559428e-04},
    {1.58421052891119157e-01, 1.00000004713413811e-02, 8.21578946166198087e-01, 4.62448519143559428e-04},
    {1.58421052891119157e-01, 8.21578946166198087e-01, 1.00000004713413811e-02, 4.62448519143559428e-04},
    {8.21578946166198087e-01, 1.00000004713413811e-02, 1.00000004713413811e-02, 4.62448519143559428e-04},
    {8.21578946166198087e-01, 1.00000004713413811e-02, 1.58421052891119157e-01, 4.62448519143559428e-04},
    {8.21578946166198087e-01, 1.58421052891119157e-01, 1.00000004713413811e-02, 4.62448519143559428e-04},
    {9.99999992568615867e-03, 9.99999992568615867e-03, 4.75263153066854405e-01, 1.73251128054663578e-03},
    {9.99999992568615867e-03, 9.99999992568615867e-03, 5.04736847081773243e-01, 1.73251128054663578e-03},
    {9.99999992568615867e-03, 4.75263153066854405e-01, 9.99999992568615867e-03, 1.73251128054663578e-03},
    {9.99999992568615867e-03, 4.75263153066854405e-01, 5.04736847081773243e-01, 1.73251128054663578e-03},
    {9.99999992568615867e-03, 5.04736847081773243e-01, 9.99999992568615867e-03, 1.73251128054663578e-03},
    {9.99999992568615867e-03, 5.04736847081773243e-01, 4.75263153066854405e-01, 1.73251128054663578e-03},
    {4.75263153066854405e-01, 9.99999992568615867e-03, 9.99999992568615867e-03, 1.73251128054663578e-03},
    {4.75263153066854405e-01, 9.99999992568615867e-03, 5.04736847081773243e-01, 1.73251128054663578e-03},
    {4.75263153066854405e-01, 5.04736847081773243e-01, 9.99999992568615867e-03, 1.73251128054663578e-03},
    {5.04736847081773243e-01, 9.99999992568615867e-03, 9.99999992568615867e-03, 1.73251128054663578e-03},
    {5.04736847081773243e-01, 9.99999992568615867e-03, 4.75263153066854405e-01, 1.73251128054663578e-03},
    {5.04736847081773243e-01, 4.75263153066854405e-01, 9.99999992568615867e-03, 1.73251128054663578e-03},
    {1.00000002944472342e-02, 1.00000002944472342e-02, 2.99999986399249741e-02, 1.96861120444849919e-04},
    {1.00000002944472342e-02, 1.00000002944472342e-02, 9.50000000771180519e-01, 1.96861120444849919e-04},
    {1.00000002944472342e-02, 2.99999986399249741e-02, 1.00000002944472342e-02, 1.96861120444849919e-04},
    {1.00000002944472342e-02, 2.99999986399249741e-02, 9.50000000771180519e-01, 1.96861120444849919e-04},
    {1.00000002944472342e-02, 9.50000000771180519e-01, 1.00000002944472342e-02, 1.96861120444849919e-04},
    {1.00000002944472342e-02, 9.50000000771180519e-01, 2.99999986399249741e-02, 1.96861120444849919e-04},
    {2.99999986399249741e-02, 1.00000002944472342e-02, 1.00000002944472342e-02, 1.96861120444849919e-04},
    {2.99999986399249741e-02, 1.00000002944472342e-02, 9.50000000771180519e-01, 1.96861120444849919e-04},
    {2.99999986399249741e-02, 9.50000000771180519e-01, 1.00000002944472342e-02, 1.96861120444849919e-04},
    {9.50000000771180519e-01, 1.00000002944472342e-02, 1.00000002944472342e-02, 1.96861120444849919e-04},
    {9.50000000771180519e-01, 1.00000002944472342e-02, 2.99999986399249741e-02, 1.96861120444849919e-04},
    {9.50000000771180519e-01, 2.99999986399249741e-02, 1.00000002944472342e-02, 1.96861120444849919e-04},
    {1.28421053643190841e-01, 1.28421053643190841e-01, 1.39473681929030091e-01, 6.48254491947329505e-03},
    {1.28421053643190841e-01, 1.28421053643190841e-01, 6.03684210784588227e-01, 6.48254491947329505e-03},
    {1.28421053643190841e-01, 1.39473681929030091e-01, 1.28421053643190841e-01, 6.48254491947329505e-03},
    {1.28421053643190841e-01, 1.39473681929030091e-01, 6.03684210784588227e-01, 6.48254491947329505e-03},
    {1.28421053643190841e-01, 6.03684210784588227e-01, 1.28421053643190841e-01, 6.48254491947329505e-03},
    {1.28421053643190841e-01, 6.03684210784588227e-01, 1.39473681929030091e-01, 6.48254491947329505e-03},
    {1.39473681929030091e-01, 1.28421053643190841e-01, 1.28421053643190841e-01, 6.48254491947329505e-03},
    {1.39473681929030091e-01, 1.28421053643190841e-01, 6.03684210784588227e-01, 6.48254491947329505e-03},
    {1.39473681929030091e-01, 6.03684210784588227e-01, 1.28421053643190841e-01, 6.48254491947329505e-03},
    {6.03684210784588227e-01, 1.28421053643190841e-01, 1.28421053643190841e-01, 6.48254491947329505e-03},
    {6.03684210784588227e-01, 1.28421053643190841e-01, 1.39473681929030091e-01, 6.48254491947329505e-03},
    {6.03684210784588227e-01, 1.39473681929030091e-01, 1.28421053643190841e-01, 6.48254491947329505e-03},
    {2.46842112973390204e-01, 2.46842112973390204e-01, 2.48947344249051794e-01, 1.60449181880135310e-03},
    {2.46842112973390204e-01, 2.46842112973390204e-01, 2.57368429804167798e-01, 1.60449181880135310e-03},
    {2.46842112973390204e-01, 2.48947344249051794e-01, 2.46842112973390204e-01, 1.60449181880135310e-03},
    {2.46842112973390204e-01, 2.48947344249051794e-01, 2.57368429804167798e-01, 1.60449181880135310e-03},
    {2.46842112973390204e-01, 2.57368429804167798e-01, 2.46842112973390204e-01, 1.60449181880135310e-03},
    {2.46842112973390204e-01, 2.57368429804167798e-01, 2.48947344249051794e-01, 1.60449181880135310e-03},
    {2.48947344249051794e-01, 2.46842112973390204e-01, 2.46842112973390204e-01, 1.60449181880135310e-03},
    {2.48947344249051794e-01, 2.46842112973390204e-01, 2.57368429804167798e-01, 1.60449181880135310e-03},
    {2.48947344249051794e-01, 2.57368429804167798e-01, 2.46842112973390204e-01, 1.60449181880135310e-03},
    {2.57368429804167798e-01, 2.46842112973390204e-01, 2.46842112973390204e-01, 1.60449181880135310e-03},
    {2.57368429804167798e-01, 2.46842112973390204e-01, 2.48947344249051794e-01, 1.60449181880135310e-03},
    {2.57368429804167798e-01, 2.48947344249051794e-01, 2.46842112973390204e-01, 1.60449181880135310e-03},
    {9.99999996592393359e-03, 3.06842105764183470e-01, 3.41578947134946298e-01, 3.41003123047919606e-03},
    {9.99999996592393359e-03, 3.41578947134946298e-01, 3.06842105764183470e-01, 3.41003123047919606e-03},
    {9.99999996592393359e-03, 3.41578947134946298e-01, 3.41578947134946298e-01, 3.41003123047919606e-03},
    {3.06842105764183470e-01, 9.99999996592393359e-03, 3.41578947134946298e-01, 3.41003123047919606e-03},
    {3.06842105764183470e-01, 3.41578947134946298e-01, 9.99999996592393359e-03, 3.41003123047919606e-03},
    {3.06842105764183470e-01, 3.41578947134946298e-01, 3.41578947134946298e-01, 3.41003123047919606e-03},
    {3.41578947134946298e-01, 9.99999996592393359e-03, 3.06842105764183470e-01, 3.41003123047919606e-03},
    {3.41578947134946298e-01, 9.99999996592393359e-03, 3.41578947134946298e-01, 3.41003123047919606e-03},
    {3.41578947134946298e-01, 3.06842105764183470e-01, 9.99999996592393359e-03, 3.41003123047919606e-03},
    {3.41578947134946298e-01, 3.06842105764183470e-01, 3.41578947134946298e-01, 3.41003123047919606e-03},
    {3.41578947134946298e-01, 3.41578947134946298e-01, 9.99999996592393359e-03, 3.41003123047919606e-03},
    {3.41578947134946298e-01, 3.41578947134946298e-01, 3.06842105764183470e-01, 3.41003123047919606e-03},
};

// degree 6: 108 points
inline constexpr double kTetRuleD6[108][4] = {
    {9.99999998770424899e-03, 9.99999998770424899e-03, 1.89047619168570519e-01, 8.93292053360182766e-04},
    {9.99999998770424899e-03, 9.99999998770424899e-03, 7.90952380856021042e-01, 8.93292053360182766e-04},
    {9.99999998770424899e-03, 1.89047619168570519e-01, 9.99999998770424899e-03, 8.93292053360182766e-04},
    {9.99999998770424899e-03, 1.89047619168570519e-01, 7.90952380856021042e-01, 8.93292053360182766e-04},
    {9.99999998770424899e-03, 7.90952380856021042e-01, 9.99999998770424899e-03, 8.93292053360182766e-04},
    {9.99999998770424899e-03, 7.90952380856021042e-01, 1.89047619168570519e-01, 8.93292053360182766e-04},
    {1.89047619168570519e-01, 9.99999998770424899e-03, 9.99999998770424899e-03, 8.93292053360182766e-04},
    {1.89047619168570519e-01, 9.99999998770424899e-03, 7.90952380856021042e-01, 8.93292053360182766e-04},
    {1.89047619168570519e-01, 7.90952380856021042e-01, 9.99999998770424899e-03, 8.93292053360182766e-04},
    {7.90952380856021042e-01, 9.99999998770424899e-03, 9.99999998770424899e-03, 8.93292053360182766e-04},
    {7.90952380856021042e-01, 9.99999998770424899e-03, 1.89047619168570519e-01, 8.93292053360182766e-04},
    {7.90952380856021042e-01, 1.89047619168570519e-01, 9.99999998770424899e-03, 8.93292053360182766e-04},
    {1.00000002786871326e-02, 1.00000002786871326e-02, 2.99999991361010743e-02, 8.02040011679921284e-05},
    {1.00000002786871326e-02, 1.00000002786871326e-02, 9.50000000306524650e-01, 8.02040011679921284e-05},
    {1.00000002786871326e-02, 2.99999991361010743e-02, 1.00000002786871326e-02, 8.02040011679921284e-05},
    {1.00000002786871326e-02, 2.99999991361010743e-02, 9.50000000306524650e-01, 8.02040011679921284e-05},
    {1.00000002786871326e-02, 9.50000000306524650e-01, 1.00000002786871326e-02, 8.02040011679921284e-05},
    {1.00000002786871326e-02, 9.50000000306524650e-01, 2.99999991361010743e-02, 8.02040011679921284e-05},
    {2.99999991361010743e-02, 1.00000002786871326e-02, 1.00000002786871326e-02, 8.02040011679921284e-05},
    {2.99999991361010743e-02, 1.00000002786871326e-02, 9.50000000306524650e-01, 8.02040011679921284e-05},
    {2.99999991361010743e-02, 9.50000000306524650e-01, 1.00000002786871326e-02, 8.02040011679921284e-05},
    {9.50000000306524650e-01, 1.00000002786871326e-02, 1.00000002786871326e-02, 8.02040011679921284e-05},
    {9.50000000306524650e-01, 1.00000002786871326e-02, 2.99999991361010743e-02, 8.02040011679921284e-05},
    {9.50000000306524650e-01, 2.99999991361010743e-02, 1.00000002786871326e-02, 8.02040011679921284e-05},
    {7.42857146133174967e-02, 7.42857146133174967e-02, 8.04761895626943113e-02, 1.40308454749965371e-04},
    {7.42857146133174967e-02, 7.42857146133174967e-02, 7.70952381210670667e-01, 1.40308454749965371e-04},
    {7.42857146133174967e-02, 8.04761895626943113e-02, 7.42857146133174967e-02, 1.40308454749965371e-04},
    {7.42857146133174967e-02, 8.04761895626943113e-02, 7.70952381210670667e-01, 1.40308454749965371e-04},
    {7.42857146133174967e-02, 7.70952381210670667e-01, 7.42857146133174967e-02, 1.40308454749965371e-04},
    {7.42857146133174967e-02, 7.70952381210670667e-01, 8.04761895626943113e-02, 1.40308454749965371e-04},
    {8.04761895626943113e-02, 7.42857146133174967e-02, 7.42857146133174967e-02, 1.40308454749965371e-04},
    {8.04761895626943113e-02, 7.42857146133174967e-02, 7.70952381210670667e-01, 1.40308454749965371e-04},
    {8.04761895626943113e-02, 7.70952381210670667e-01, 7.42857146133174967e-02, 1.40308454749965371e-04},
    {7.70952381210670667e-01, 7.42857146133174967e-02, 7.42857146133174967e-02, 1.40308454749965371e-04},
    {7.70952381210670667e-01, 7.42857146133174967e-02, 8.04761895626943113e-02, 1.40308454749965371e-04},
    {7.70952381210670667e-01, 8.04761895626943113e-02, 7.42857146133174967e-02, 1.40308454749965371e-04},
    {1.30952380542830760e-01, 1.38571428643086247e-01, 1.38571428643086247e-01, 2.92820838587632163e-03},
    {1.30952380542830760e-01, 1.38571428643086247e-01, 5.91904762170996745e-01, 2.92820838587632163e-03},
    {1.30952380542830760e-01, 5.91904762170996745e-01, 1.38571428643086247e-01, 2.92820838587632163e-03},
    {1.38571428643086247e-01, 1.30952380542830760e-01, 1.38571428643086247e-01, 2.92820838587632163e-03},
    {1.38571428643086247e-01, 1.30952380542830760e-01, 5.91904762170996745e-01, 2.92820838587632163e-03},
    {1.38571428643086247e-01, 1.38571428643086247e-01, 1.30952380542830760e-01, 2.92820838587632163e-03},
    {1.38571428643086247e-01, 1.38571428643086247e-01, 5.91904762170996745e-01, 2.92820838587632163e-03},
    {1.38571428643086247e-01, 5.91904762170996745e-01, 1.30952380542830760e-01, 2.92820838587632163e-03},
    {1.38571428643086247e-01, 5.91904762170996745e-01, 1.38571428643086247e-01, 2.92820838587632163e-03},
    {5.91904762170996745e-01, 1.30952380542830760e-01, 1.38571428643086247e-01, 2.92820838587632163e-03},
    {5.91904762170996745e-01, 1.38571428643086247e-01, 1.30952380542830760e-01, 2.92820838587632163e-03},
    {5.91904762170996745e-01, 1.38571428643086247e-01, 1.38571428643086247e-01, 2.92820838587632163e-03},
    {1.00000000506111127e-02, 1.60000000124383063e-01, 1.60000000124383063e-01, 1.82439186960016431e-03},
    {1.00000000506111127e-02, 1.60000000124383063e-01, 6.69999999700622739e-01, 1.82439186960016431e-03},
    {1.00000000506111127e-02, 6.69999999700622739e-01, 1.60000000124383063e-01, 1.82439186960016431e-03},
    {1.60000000124383063e-01, 1.00000000506111127e-02, 1.60000000124383063e-01, 1.82439186960016431e-03},
    {1.60000000124383063e-01, 1.00000000506111127e-02, 6.69999999700622739e-01, 1.82439186960016431e-03},
    {1.60000000124383063e-01, 1.60000000124383063e-01, 1.00000000506111127e-02, 1.82439186960016431e-03},
    {1.60000000124383063e-01, 1.60000000124383063e-01, 6.69999999700622739e-01, 1.82439186960016431e-03},
    {1.60000000124383063e-01, 6.69999999700622739e-01, 1.00000000506111127e-02, 1.82439186960016431e-03},
    {1.60000000124383063e-01, 6.69999999700622739e-01, 1.60000000124383063e-01, 1.82439186960016431e-03},
    {6.69999999700622739e-01, 1.00000000506111127e-02, 1.60000000124383063e-01, 1.82439186960016431e-03},
    {6.69999999700622739e-01, 1.60000000124383063e-01, 1.00000000506111127e-02, 1.82439186960016431e-03},
    {6.69999999700622739e-01, 1.60000000124383063e-01, 1.60000000124383063e-01, 1.82439186960016431e-03},
    {2.33809524201255226e-01, 2.45714286119862790e-01, 2.45714286119862790e-01, 1.59504252916138232e-03},
    {2.33809524201255226e-01, 2.45714286119862790e-01, 2.74761903559019194e-01, 1.59504252916138232e-03},
    {2.33809524201255226e-01, 2.74761903559019194e-01, 2.45714286119862790e-01, 1.59504252916138232e-03},
    {2.45714286119862790e-01, 2.33809524201255226e-01, 2.45714286119862790e-01, 1.59504252916138232e-03},
    {2.45714286119862790e-01, 2.33809524201255226e-01, 2.74761903559019194e-01, 1.59504252916138232e-03},
    {2.45714286119862790e-01, 2.45714286119862790e-01, 2.33809524201255226e-01, 1.59504252916138232e-03},
    {2.45714286119862790e-01, 2.45714286119862790e-01, 2.74761903559019194e-01, 1.59504252916138232e-03},
    {2.45714286119862790e-01, 2.74761903559019194e-01, 2.33809524201255226e-01, 1.59504252916138232e-03},
    {2.45714286119862790e-01, 2.74761903559019194e-01, 2.45714286119862790e-01, 1.59504252916138232e-03},
    {2.74761903559019194e-01, 2.33809524201255226e-01, 2.45714286119862790e-01, 1.59504252916138232e-03},
    {2.74761903559019194e-01, 2.45714286119862790e-01, 2.33809524201255226e-01, 1.59504252916138232e-03},
    {2.74761903559019194e-01, 2.45714286119862790e-01, 2.45714286119862790e-01, 1.59504252916138232e-03},
    {1.00000002068870511e-02, 3.27142856736132304e-01, 3.31428571528490312e-01, 1.82899317467170668e-03},
    {1.00000002068870511e-02, 3.31428571528490312e-01, 3.27142856736132304e-01, 1.82899317467170668e-03},
    {1.00000002068870511e-02, 3.31428571528490312e-01, 3.31428571528490312e-01, 1.82899317467170668e-03},
    {3.27142856736132304e-01, 1.00000002068870511e-02, 3.31428571528490312e-01, 1.82899317467170668e-03},
    {3.27142856736132304e-01, 3.31428571528490312e-01, 1.00000002068870511e-02, 1.82899317467170668e-03},
    {3.27142856736132304e-01, 3.31428571528490312e-01, 3.31428571528490312e-01, 1.82899317467170668e-03},
    {3.31428571528490312e-01, 1.00000002068870511e-02, 3.27142856736132304e-01, 1.82899317467170668e-03},
    {3.31428571528490312e-01, 1.00000002068870511e-02, 3.31428571528490312e-01, 1.82899317467170668e-03},
    {3.31428571528490312e-01, 3.27142856736132304e-01, 1.00000002068870511e-02, 1.82899317467170668e-03},
    {3.31428571528490312e-01, 3.27142856736132304e-01, 3.31428571528490312e-01, 1.82899317467170668e-03},
    {3.31428571528490312e-01, 3.31428571528490312e-01, 1.00000002068870511e-02, 1.82899317467170668e-03},
    {3.31428571528490312e-01, 3.31428571528490312e-01, 3.27142856736132304e-01, 1.82899317467170668e-03},
    {9.95238095805031364e-02, 1.09047618604574875e-01, 3.95714285907460994e-01, 1.68955057898118087e-03},
    {9.95238095805031364e-02, 3.95714285907460994e-01, 1.09047618604574875e-01, 1.68955057898118087e-03},
    {9.95238095805031364e-02, 3.95714285907460994e-01, 3.95714285907460994e-01, 1.68955057898118087e-03},
    {1.09047618604574875e-01, 9.95238095805031364e-02, 3.95714285907460994e-01, 1.68955057898118087e-03},
    {1.09047618604574875e-01, 3.95714285907460994e-01, 9.95238095805031364e-02, 1.68955057898118087e-03},
    {1.09047618604574875e-01, 3.95714285907460994e-01, 3.95714285907460994e-01, 1.68955057898118087e-03},
    {3.95714285907460994e-01, 9.95238095805031364e-02, 1.09047618604574875e-01, 1.68955057898118087e-03},
    {3.95714285907460994e-01, 9.95238095805031364e-02, 3.95714285907460994e-01, 1.68955057898118087e-03},
    {3.95714285907460994e-01, 1.09047618604574875e-01, 9.95238095805031364e-02, 1.68955057898118087e-03},
    {3.95714285907460994e-01, 1.09047618604574875e-01, 3.95714285907460994e-01, 1.68955057898118087e-03},
    {3.95714285907460994e-01, 3.95714285907460994e-01, 9.95238095805031364e-02, 1.68955057898118087e-03},
    {3.95714285907460994e-01, 3.95714285907460994e-01, 1.09047618604574875e-01, 1.68955057898118087e-03},
    {5.47619047857985375e-02, 6.80952381010902219e-02, 4.38571428556555620e-01, 2.90889784131999297e-03},
    {5.47619047857985375e-02, 4.38571428556555620e-01, 6.80952381010902219e-02, 2.90889784131999297e-03},
    {5.47619047857985375e-02, 4.38571428556555620e-01, 4.38571428556555620e-01, 2.90889784131999297e-03},
    {6.80952381010902219e-02, 5.47619047857985375e-02, 4.38571428556555620e-01, 2.90889784131999297e-03},
    {6.80952381010902219e-02, 4.38571428556555620e-01, 5.47619047857985375e-02, 2.90889784131999297e-03},
    {6.80952381010902219e-02, 4.38571428556555620e-01, 4.38571428556555620e-01, 2.90889784131999297e-03},
    {4.38571428556555620e-01, 5.47619047857985375e-02, 6.80952381010902219e-02, 2.90889784131999297e-03},
    {4.38571428556555620e-01, 5.47619047857985375e-02, 4.38571428556555620e-01, 2.90889784131999297e-03},
    {4.38571428556555620e-01, 6.80952381010902219e-02, 5.47619047857985375e-02, 2.90889784131999297e-03},
    {4.38571428556555620e-01, 6.80952381010902219e-02, 4.38571428556555620e-01, 2.90889784131999297e-03},
    {4.38571428556555620e-01, 4.38571428556555620e-01, 5.47619047857985375e-02, 2.90889784131999297e-03},
    {4.38571428556555620e-01, 4.38571428556555620e-01, 6.80952381010902219e-02, 2.90889784131999297e-03},
};

// degree 7: 252 points
inline constexpr double kTetRuleD7[252][4] = {
    {1.00000005286124908e-02, 1.00000005286124908e-02, 2.99999973174071011e-02, 2.96350385732385296e-05},
    {1.00000005286124908e-02, 1.00000005286124908e-02, 9.50000001625367907e-01, 2.96350385732385296e-05},
    {1.00000005286124908e-02, 2.99999973174071011e-02, 1.00000005286124908e-02, 2.96350385732385296e-05},
    {1.00000005286124908e-02, 2.99999973174071011e-02, 9.50000001625367907e-01, 2.96350385732385296e-05},
    {1.00000005286124908e-02, 9.50000001625367907e-01, 1.00000005286124908e-02, 2.96350385732385296e-05},
    {1.00000005286124908e-02, 9.50000001625367907e-01, 2.99999973174071011e-02, 2.96350385732385296e-05},
    {2.99999973174071011e-02, 1.00000005286124908e-02, 1.00000005286124908e-02, 2.96350385732385296e-05},
    {2.99999973174071011e-02, 1.00000005286124908e-02, 9.50000001625367907e-01, 2.96350385732385296e-05},
    {2.99999973174071011e-02, 9.50000001625367907e-01, 1.00000005286124908e-02, 2.96350385732385296e-05},
    {9.50000001625367907e-01, 1.00000005286124908e-02, 1.00000005286124908e-02, 2.96350385732385296e-05},
    {9.50000001625367907e-01, 1.00000005286124908e-02, 2.99999973174071011e-02, 2.96350385732385296e-05},
    {9.50000001625367907e-01, 2.99999973174071011e-02, 1.00000005286124908e-02, 2.96350385732385296e-05},
    {1.27136242540354764e-02, 1.87610239514343968e-01, 2.06582174689058290e-01, 1.20948348918590654e-03},
    {1.27136242540354764e-02, 1.87610239514343968e-01, 5.93093961542562331e-01, 1.20948348918590654e-03},
    {1.27136242540354764e-02, 2.06582174689058290e-01, 1.87610239514343968e-01, 1.20948348918590654e-03},
    {1.27136242540354764e-02, 2.06582174689058290e-01, 5.93093961542562331e-01, 1.20948348918590654e-03},
    {1.27136242540354764e-02, 5.93093961542562331e-01, 1.87610239514343968e-01, 1.20948348918590654e-03},
    {1.27136242540354764e-02, 5.93093961542562331e-01, 2.06582174689058290e-01, 1.20948348918590654e-03},
    {1.87610239514343968e-01, 1.27136242540354764e-02, 2.06582174689058290e-01, 1.20948348918590654e-03},
    {1.87610239514343968e-01, 1.27136242540354764e-02, 5.93093961542562331e-01, 1.20948348918590654e-03},
    {1.87610239514343968e-01, 2.06582174689058290e-01, 1.27136242540354764e-02, 1.20948348918590654e-03},
    {1.87610239514343968e-01, 2.06582174689058290e-01, 5.93093961542562331e-01, 1.20948348918590654e-03},
    {1.87610239514343968e-01, 5.93093961542562331e-01, 1.27136242540354764e-02, 1.20948348918590654e-03},
    {1.87610239514343968e-01, 5.93093961542562331e-01, 2.06582174689058290e-01, 1.20948348918590654e-03},
    {2.06582174689058290e-01, 1.27136242540354764e-02, 1.87610239514343968e-01, 1.20948348918590654e-03},
    {2.06582174689058290e-01, 1.27136242540354764e-02, 5.93093961542562331e-01, 1.20948348918590654e-03},
    {2.06582174689058290e-01, 1.87610239514343968e-01, 1.27136242540354764e-02, 1.20948348918590654e-03},
    {2.06582174689058290e-01, 1.87610239514343968e-01, 5.93093961542562331e-01, 1.20948348918590654e-03},
    {2.06582174689058290e-01, 5.93093961542562331e-01, 1.27136242540354764e-02, 1.20948348918590654e-03},
    {2.06582174689058290e-01, 5.93093961542562331e-01, 1.87610239514343968e-01, 1.20948348918590654e-03},
    {5.93093961542562331e-01, 1.27136242540354764e-02, 1.87610239514343968e-01, 1.20948348918590654e-03},
    {5.93093961542562331e-01, 1.27136242540354764e-02, 2.06582174689058290e-01, 1.20948348918590654e-03},
    {5.93093961542562331e-01, 1.87610239514343968e-01, 1.27136242540354764e-02, 1.20948348918590654e-03},
    {5.93093961542562331e-01, 1.87610239514343968e-01, 2.06582174689058290e-01, 1.20948348918590654e-03},
    {5.93093961542562331e-01, 2.06582174689058290e-01, 1.27136242540354764e-02, 1.20948348918590654e-03},
    {5.93093961542562331e-01, 2.06582174689058290e-01, 1.87610239514343968e-01, 1.20948348918590654e-03},
    {1.45902941900354965e-01, 1.58019622188895731e-01, 1.65690317621376815e-01, 6.32533103940592580e-04},
    {1.45902941900354965e-01, 1.58019622188895731e-01, 5.30387118289372461e-01, 6.32533103940592580e-04},
    {1.45902941900354965e-01, 1.65690317621376815e-01, 1.58019622188895731e-01, 6.32533103940592580e-04},
    {1.45902941900354965e-01, 1.65690317621376815e-01, 5.30387118289372461e-01, 6.32533103940592580e-04},
    {1.45902941900354965e-01, 5.30387118289372461e-01, 1.58019622188895731e-01, 6.32533103940592580e-04},
    {1.45902941900354965e-01, 5.30387118289372461e-01, 1.65690317621376815e-01, 6.32533103940592580e-04},
    {1.58019622188895731e-01, 1.45902941900354965e-01, 1.65690317621376815e-01, 6.32533103940592580e-04},
    {1.58019622188895731e-01, 1.45902941900354965e-01, 5.30387118289372461e-01, 6.32533103940592580e-04},
    {1.58019622188895731e-01, 1.65690317621376815e-01, 1.45902941900354965e-01, 6.32533103940592580e-04},
    {1.58019622188895731e-01, 1.65690317621376815e-01, 5.30387118289372461e-01, 6.32533103940592580e-04},
    {1.58019622188895731e-01, 5.30387118289372461e-01, 1.45902941900354965e-01, 6.32533103940592580e-04},
    {1.58019622188895731e-01, 5.30387118289372461e-01, 1.65690317621376815e-01, 6.32533103940592580e-04},
    {1.65690317621376815e-01, 1.45902941900354965e-01, 1.58019622188895731e-01, 6.32533103940592580e-04},
    {1.65690317621376815e-01, 1.45902941900354965e-01, 5.30387118289372461e-01, 6.32533103940592580e-04},
    {1.65690317621376815e-01, 1.58019622188895731e-01, 1.45902941900354965e-01, 6.32533103940592580e-04},
    {1.65690317621376815e-01, 1.58019622188895731e-01, 5.30387118289372461e-01, 6.32533103940592580e-04},
    {1.65690317621376815e-01, 5.30387118289372461e-01, 1.45902941900354965e-01, 6.32533103940592580e-04},
    {1.65690317621376815e-01, 5.30387118289372461e-01, 1.58019622188895731e-01, 6.32533103940592580e-04},
    {5.30387118289372461e-01, 1.45902941900354965e-01, 1.58019622188895731e-01, 6.32533103940592580e-04},
    {5.30387118289372461e-01, 1.45902941900354965e-01, 1.65690317621376815e-01, 6.32533103940592580e-04},
    {5.30387118289372461e-01, 1.58019622188895731e-01, 1.45902941900354965e-01, 6.32533103940592580e-04},
    {5.30387118289372461e-01, 1.58019622188895731e-01, 1.65690317621376815e-01, 6.32533103940592580e-04},
    {5.30387118289372461e-01, 1.65690317621376815e-01, 1.45902941900354965e-01, 6.32533103940592580e-04},
    {5.30387118289372461e-01, 1.65690317621376815e-01, 1.58019622188895731e-01, 6.32533103940592580e-04},
    {8.44827009728144618e-02, 8.70519726596572230e-02, 3.30722245755774469e-01, 1.95851340800755986e-03},
    {8.44827009728144618e-02, 8.70519726596572230e-02, 4.97743080611753763e-01, 1.95851340800755986e-03},
    {8.44827009728144618e-02, 3.30722245755774469e-01, 8.70519726596572230e-02, 1.95851340800755986e-03},
    {8.44827009728144618e-02, 3.30722245755774469e-01, 4.97743080611753763e-01, 1.95851340800755986e-03},
    {8.44827009728144618e-02, 4.97743080611753763e-01, 8.70519726596572230e-02, 1.95851340800755986e-03},
    {8.44827009728144618e-02, 4.97743080611753763e-01, 3.30722245755774469e-01, 1.95851340800755986e-03},
    {8.70519726596572230e-02, 8.44827009728144618e-02, 3.30722245755774469e-01, 1.95851340800755986e-03},
    {8.70519726596572230e-02, 8.44827009728144618e-02, 4.97743080611753763e-01, 1.95851340800755986e-03},
    {8.70519726596572230e-02, 3.30722245755774469e-01, 8.44827009728144618e-02, 1.95851340800755986e-03},
    {8.70519726596572230e-02, 3.30722245755774469e-01, 4.97743080611753763e-01, 1.95851340800755986e-03},
    {8.70519726596572230e-02, 4.97743080611753763e-01, 8.44827009728144618e-02, 1.95851340800755986e-03},
    {8.70519726596572230e-02, 4.97743080611753763e-01, 3.30722245755774469e-01, 1.95851340800755986e-03},
    {3.30722245755774469e-01, 8.44827009728144618e-02, 8.70519726596572230e-02, 1.95851340800755986e-03},
    {3.30722245755774469e-01, 8.44827009728144618e-02, 4.97743080611753763e-01, 1.95851340800755986e-03},
    {3.30722245755774469e-01, 8.70519726596572230e-02, 8.44827009728144618e-02, 1.95851340800755986e-03},
    {3.30722245755774469e-01, 8.70519726596572230e-02, 4.97743080611753763e-01, 1.95851340800755986e-03},
    {3.30722245755774469e-01, 4.97743080611753763e-01, 8.44827009728144618e-02, 1.95851340800755986e-03},
    {3.30722245755774469e-01, 4.97743080611753763e-01, 8.70519726596572230e-02, 1.95851340800755986e-03},
    {4.97743080611753763e-01, 8.44827009728144618e-02, 8.70519726596572230e-02, 1.95851340800755986e-03},
    {4.97743080611753763e-01, 8.44827009728144618e-02, 3.30722245755774469e-01, 1.95851340800755986e-03},
    {4.97743080611753763e-01, 8.70519726596572230e-02, 8.44827009728144618e-02, 1.95851340800755986e-03},
    {4.97743080611753763e-01, 8.70519726596572230e-02, 3.30722245755774469e-01, 1.95851340800755986e-03},
    {4.97743080611753763e-01, 3.30722245755774469e-01, 8.44827009728144618e-02, 1.95851340800755986e-03},
    {4.97743080611753763e-01, 3.30722245755774469e-01, 8.70519726596572230e-02, 1.95851340800755986e-03},
    {9.87189488124230741e-02, 1.00567472326297563e-01, 1.17432951348418357e-01, 3.93102194634531140e-04},
    {9.87189488124230741e-02, 1.00567472326297563e-01, 6.83280627512861005e-01, 3.93102194634531140e-04},
    {9.87189488124230741e-02, 1.17432951348418357e-01, 1.00567472326297563e-01, 3.93102194634531140e-04},
    {9.87189488124230741e-02, 1.17432951348418357e-01, 6.83280627512861005e-01, 3.93102194634531140e-04},
    {9.87189488124230741e-02, 6.83280627512861005e-01, 1.00567472326297563e-01, 3.93102194634531140e-04},
    {9.87189488124230741e-02, 6.83280627512861005e-01, 1.17432951348418357e-01, 3.93102194634531140e-04},
    {1.00567472326297563e-01, 9.87189488124230741e-02, 1.17432951348418357e-01, 3.93102194634531140e-04},
    {1.00567472326297563e-01, 9.87189488124230741e-02, 6.83280627512861005e-01, 3.93102194634531140e-04},
    {1.00567472326297563e-01, 1.17432951348418357e-01, 9.87189488124230741e-02, 3.93102194634531140e-04},
    {1.00567472326297563e-01, 1.17432951348418357e-01, 6.83280627512861005e-01, 3.93102194634531140e-04},
    {1.00567472326297563e-01, 6.83280627512861005e-01, 9.87189488124230741e-02, 3.93102194634531140e-04},
    {1.00567472326297563e-01, 6.83280627512861005e-01, 1.17432951348418357e-01, 3.93102194634531140e-04},
    {1.17432951348418357e-01, 9.87189488124230741e-02, 1.00567472326297563e-01, 3.93102194634531140e-04},
    {1.17432951348418357e-01, 9.87189488124230741e-02, 6.83280627512861005e-01, 3.93102194634531140e-04},
    {1.17432951348418357e-01, 1.00567472326297563e-01, 9.87189488124230741e-02, 3.93102194634531140e-04},
    {1.17432951348418357e-01, 1.00567472326297563e-01, 6.83280627512861005e-01, 3.93102194634531140e-04},
    {1.17432951348418357e-01, 6.83280627512861005e-01, 9.87189488124230741e-02, 3.93102194634531140e-04},
    {1.17432951348418357e-01, 6.83280627512861005e-01, 1.00567472326297563e-01, 3.93102194634531140e-04},
    {6.83280627512861005e-01, 9.87189488124230741e-02, 1.00567472326297563e-01, 3.93102194634531140e-04},
    {6.83280627512861005e-01, 9.87189488124230741e-02, 1.17432951348418357e-01, 3.93102194634531140e-04},
    {6.83280627512861005e-01, 1.00567472326297563e-01, 9.87189488124230741e-02, 3.93102194634531140e-04},
    {6.83280627512861005e-01, 1.00567472326297563e-01, 1.17432951348418357e-01, 3.93102194634531140e-04},
    {6.83280627512861005e-01, 1.17432951348418357e-01, 9.87189488124230741e-02, 3.93102194634531140e-04},
    {6.83280627512861005e-01, 1.17432951348418357e-01, 1.00567472326297563e-01, 3.93102194634531140e-04},
    {2.53365317872526023e-02, 2.69233995219949236e-02, 4.25927879090403583e-01, 3.83989843338459775e-04},
    {2.53365317872526023e-02, 2.69233995219949236e-02, 5.21812189600348919e-01, 3.83989843338459775e-04},
    {2.53365317872526023e-02, 4.25927879090403583e-01, 2.69233995219949236e-02, 3.83989843338459775e-04},
    {2.53365317872526023e-02, 4.25927879090403583e-01, 5.21812189600348919e-01, 3.83989843338459775e-04},
    {2.53365317872526023e-02, 5.21812189600348919e-01, 2.69233995219949236e-02, 3.83989843338459775e-04},
    {2.53365317872526023e-02, 5.21812189600348919e-01, 4.25927879090403583e-01, 3.83989843338459775e-04},
    {2.69233995219949236e-02, 2.53365317872526023e-02, 4.25927879090403583e-01, 3.83989843338459775e-04},
    {2.69233995219949236e-02, 2.53365317872526023e-02, 5.21812189600348919e-01, 3.83989843338459775e-04},
    {2.69233995219949236e-02, 4.25927879090403583e-01, 2.53365317872526023e-02, 3.83989843338459775e-04},
    {2.69233995219949236e-02, 4.25927879090403583e-01, 5.21812189600348919e-01, 3.83989843338459775e-04},
    {2.69233995219949236e-02, 5.21812189600348919e-01, 2.53365317872526023e-02, 3.83989843338459775e-04},
    {2.69233995219949236e-02, 5.21812189600348919e-01, 4.25927879090403583e-01, 3.83989843338459775e-04},
    {4.25927879090403583e-01, 2.53365317872526023e-02, 2.69233995219949236e-02, 3.83989843338459775e-04},
    {4.25927879090403583e-01, 2.53365317872526023e-02, 5.21812189600348919e-01, 3.83989843338459775e-04},
    {4.25927879090403583e-01, 2.69233995219949236e-02, 2.53365317872526023e-02, 3.83989843338459775e-04},
    {4.25927879090403583e-01, 2.69233995219949236e-02, 5.21812189600348919e-01, 3.83989843338459775e-04},
    {4.25927879090403583e-01, 5.21812189600348919e-01, 2.53365317872526023e-02, 3.83989843338459775e-04},
    {4.25927879090403583e-01, 5.21812189600348919e-01, 2.69233995219949236e-02, 3.83989843338459775e-04},
    {5.21812189600348919e-01, 2.53365317872526023e-02, 2.69233995219949236e-02, 3.83989843338459775e-04},
    {5.21812189600348919e-01, 2.53365317872526023e-02, 4.25927879090403583e-01, 3.83989843338459775e-04},
    {5.21812189600348919e-01, 2.69233995219949236e-02, 2.53365317872526023e-02, 3.83989843338459775e-04},
    {5.21812189600348919e-01, 2.69233995219949236e-02, 4.25927879090403583e-01, 3.83989843338459775e-04},
    {5.21812189600348919e-01, 4.25927879090403583e-01, 2.53365317872526023e-02, 3.83989843338459775e-04},
    {5.21812189600348919e-01, 4.25927879090403583e-01, 2.69233995219949236e-02, 3.83989843338459775e-04},
    {1.70150297774749534e-02, 2.13671893928312102e-02, 2.04337740930927908e-01, 3.70885207603576092e-04},
    {1.70150297774749534e-02, 2.13671893928312102e-02, 7.57280039898765911e-01, 3.70885207603576092e-04},
    {1.70150297774749534e-02, 2.04337740930927908e-01, 2.13671893928312102e-02, 3.70885207603576092e-04},
    {1.70150297774749534e-02, 2.04337740930927908e-01, 7.57280039898765911e-01, 3.70885207603576092e-04},
    {1.70150297774749534e-02, 7.57280039898765911e-01, 2.13671893928312102e-02, 3.70885207603576092e-04},
    {1.70150297774749534e-02, 7.57280039898765911e-01, 2.04337740930927908e-01, 3.70885207603576092e-04},
    {2.13671893928312102e-02, 1.70150297774749534e-02, 2.04337740930927908e-01, 3.70885207603576092e-04},
    {2.13671893928312102e-02, 1.70150297774749534e-02, 7.57280039898765911e-01, 3.70885207603576092e-04},
    {2.13671893928312102e-02, 2.04337740930927908e-01, 1.70150297774749534e-02, 3.70885207603576092e-04},
    {2.13671893928312102e-02, 2.04337740930927908e-01, 7.57280039898765911e-01, 3.70885207603576092e-04},
    {2.13671893928312102e-02, 7.57280039898765911e-01, 1.70150297774749534e-02, 3.70885207603576092e-04},
    {2.13671893928312102e-02, 7.57280039898765911e-01, 2.04337740930927908e-01, 3.70885207603576092e-04},
    {2.04337740930927908e-01, 1.70150297774749534e-02, 2.13671893928312102e-02, 3.70885207603576092e-04},
    {2.04337740930927908e-01, 1.70150297774749534e-02, 7.57280039898765911e-01, 3.70885207603576092e-04},
    {2.04337740930927908e-01, 2.13671893928312102e-02, 1.70150297774749534e-02, 3.70885207603576092e-04},
    {2.04337740930927908e-01, 2.13671893928312102e-02, 7.57280039898765911e-01, 3.70885207603576092e-04},
    {2.04337740930927908e-01, 7.57280039898765911e-01, 1.70150297774749534e-02, 3.70885207603576092e-04},
    {2.04337740930927908e-01, 7.57280039898765911e-01, 2.13671893928312102e-02, 3.70885207603576092e-04},
    {7.57280039898765911e-01, 1.70150297774749534e-02, 2.13671893928312102e-02, 3.70885207603576092e-04},
    {7.57280039898765911e-01, 1.70150297774749534e-02, 2.04337740930927908e-01, 3.70885207603576092e-04},
    {7.57280039898765911e-01, 2.13671893928312102e-02, 1.70150297774749534e-02, 3.70885207603576092e-04},
    {7.57280039898765911e-01, 2.13671893928312102e-02, 2.04337740930927908e-01, 3.70885207603576092e-04},
    {7.57280039898765911e-01, 2.04337740930927908e-01, 1.70150297774749534e-02, 3.70885207603576092e-04},
    {7.57280039898765911e-01, 2.04337740930927908e-01, 2.13671893928312102e-02, 3.70885207603576092e-04},
    {8.14625458832100163e-02, 2.92637715725151071e-01, 3.00293598354671287e-01, 5.55415625930532307e-04},
    {8.14625458832100163e-02, 2.92637715725151071e-01, 3.25606140036967640e-01, 5.55415625930532307e-04},
    {8.14625458832100163e-02, 3.00293598354671287e-01, 2.92637715725151071e-01, 5.55415625930532307e-04},
    {8.14625458832100163e-02, 3.00293598354671287e-01, 3.25606140036967640e-01, 5.55415625930532307e-04},
    {8.14625458832100163e-02, 3.25606140036967640e-01, 2.92637715725151071e-01, 5.55415625930532307e-04},
    {8.14625458832100163e-02, 3.25606140036967640e-01, 3.00293598354671287e-01, 5.55415625930532307e-04},
    {2.92637715725151071e-01, 8.14625458832100163e-02, 3.00293598354671287e-01, 5.55415625930532307e-04},
    {2.92637715725151071e-01, 8.14625458832100163e-02, 3.25606140036967640e-01, 5.55415625930532307e-04},
    {2.92637715725151071e-01, 3.00293598354671287e-01, 8.14625458832100163e-02, 5.55415625930532307e-04},
    {2.92637715725151071e-01, 3.00293598354671287e-01, 3.25606140036967640e-01, 5.55415625930532307e-04},
    {2.92637715725151071e-01, 3.25606140036967640e-01, 8.14625458832100163e-02, 5.55415625930532307e-04},
    {2.92637715725151071e-01, 3.25606140036967640e-01, 3.00293598354671287e-01, 5.55415625930532307e-04},
    {3.00293598354671287e-01, 8.14625458832100163e-02, 2.92637715725151071e-01, 5.55415625930532307e-04},
    {3.00293598354671287e-01, 8.14625458832100163e-02, 3.25606140036967640e-01, 5.55415625930532307e-04},
    {3.00293598354671287e-01, 2.92637715725151071e-01, 8.14625458832100163e-02, 5.55415625930532307e-04},
    {3.00293598354671287e-01, 2.92637715725151071e-01, 3.25606140036967640e-01, 5.55415625930532307e-04},
    {3.00293598354671287e-01, 3.25606140036967640e-01, 8.14625458832100163e-02, 5.55415625930532307e-04},
    {3.00293598354671287e-01, 3.25606140036967640e-01, 2.92637715725151071e-01, 5.55415625930532307e-04},
    {3.25606140036967640e-01, 8.14625458832100163e-02, 2.92637715725151071e-01, 5.55415625930532307e-04},
    {3.25606140036967640e-01, 8.14625458832100163e-02, 3.00293598354671287e-01, 5.55415625930532307e-04},
    {3.25606140036967640e-01, 2.92637715725151071e-01, 8.14625458832100163e-02, 5.55415625930532307e-04},
    {3.25606140036967640e-01, 2.92637715725151071e-01, 3.00293598354671287e-01, 5.55415625930532307e-04},
    {3.25606140036967640e-01, 3.00293598354671287e-01, 8.14625458832100163e-02, 5.55415625930532307e-04},
    {3.25606140036967640e-01, 3.00293598354671287e-01, 2.92637715725151071e-01, 5.55415625930532307e-04},
    {2.17880039684420490e-01, 2.32970619302074328e-01, 2.73356986988365969e-01, 5.17283996231652078e-04},
    {2.17880039684420490e-01, 2.32970619302074328e-01, 2.75792354025139241e-01, 5.17283996231652078e-04},
    {2.17880039684420490e-01, 2.73356986988365969e-01, 2.32970619302074328e-01, 5.17283996231652078e-04},
    {2.17880039684420490e-01, 2.73356986988365969e-01, 2.75792354025139241e-01, 5.17283996231652078e-04},
    {2.17880039684420490e-01, 2.75792354025139241e-01, 2.32970619302074328e-01, 5.17283996231652078e-04},
    {2.17880039684420490e-01, 2.75792354025139241e-01, 2.73356986988365969e-01, 5.17283996231652078e-04},
    {2.32970619302074328e-01, 2.17880039684420490e-01, 2.73356986988365969e-01, 5.17283996231652078e-04},
    {2.32970619302074328e-01, 2.17880039684420490e-01, 2.75792354025139241e-01, 5.17283996231652078e-04},
    {2.32970619302074328e-01, 2.73356986988365969e-01, 2.17880039684420490e-01, 5.17283996231652078e-04},
    {2.32970619302074328e-01, 2.73356986988365969e-01, 2.75792354025139241e-01, 5.17283996231652078e-04},
    {2.32970619302074328e-01, 2.75792354025139241e-01, 2.17880039684420490e-01, 5.17283996231652078e-04},
    {2.32970619302074328e-01, 2.75792354025139241e-01, 2.73356986988365969e-01, 5.17283996231652078e-04},
    {2.73356986988365969e-01, 2.17880039684420490e-01, 2.32970619302074328e-01, 5.17283996231652078e-04},
    {2.73356986988365969e-01, 2.17880039684420490e-01, 2.75792354025139241e-01, 5.17283996231652078e-04},
    {2.73356986988365969e-01, 2.32970619302074328e-01, 2.17880039684420490e-01, 5.17283996231652078e-04},
    {2.73356986988365969e-01, 2.32970619302074328e-01, 2.75792354025139241e-01, 5.17283996231652078e-04},
    {2.73356986988365969e-01, 2.75792354025139241e-01, 2.17880039684420490e-01, 5.17283996231652078e-04},
    {2.73356986988365969e-01, 2.75792354025139241e-01, 2.32970619302074328e-01, 5.17283996231652078e-04},
    {2.75792354025139241e-01, 2.17880039684420490e-01, 2.32970619302074328e-01, 5.17283996231652078e-04},
    {2.75792354025139241e-01, 2.17880039684420490e-01, 2.73356986988365969e-01, 5.17283996231652078e-04},
    {2.75792354025139241e-01, 2.32970619302074328e-01, 2.17880039684420490e-01, 5.17283996231652078e-04},
    {2.75792354025139241e-01, 2.32970619302074328e-01, 2.73356986988365969e-01, 5.17283996231652078e-04},
    {2.75792354025139241e-01, 2.73356986988365969e-01, 2.17880039684420490e-01, 5.17283996231652078e-04},
    {2.75792354025139241e-01, 2.73356986988365969e-01, 2.32970619302074328e-01, 5.17283996231652078e-04},
    {1.80770421090313410e-02, 5.28327292219514313e-02, 9.70121353727347868e-02, 2.89789988340473142e-04},
    {1.80770421090313410e-02, 5.28327292219514313e-02, 8.32078093296282462e-01, 2.89789988340473142e-04},
    {1.80770421090313410e-02, 9.70121353727347868e-02, 5.28327292219514313e-02, 2.89789988340473142e-04},
    {1.80770421090313410e-02, 9.70121353727347868e-02, 8.32078093296282462e-01, 2.89789988340473142e-04},
    {1.80770421090313410e-02, 8.32078093296282462e-01, 5.28327292219514313e-02, 2.89789988340473142e-04},
    {1.80770421090313410e-02, 8.32078093296282462e-01, 9.70121353727347868e-02, 2.89789988340473142e-04},
    {5.28327292219514313e-02, 1.80770421090313410e-02, 9.70121353727347868e-02, 2.89789988340473142e-04},
    {5.28327292219514313e-02, 1.80770421090313410e-02, 8.32078093296282462e-01, 2.89789988340473142e-04},
    {5.28327292219514313e-02, 9.70121353727347868e-02, 1.80770421090313410e-02, 2.89789988340473142e-04},
    {5.28327292219514313e-02, 9.70121353727347868e-02, 8.32078093296282462e-01, 2.89789988340473142e-04},
    {5.28327292219514313e-02, 8.32078093296282462e-01, 1.80770421090313410e-02, 2.89789988340473142e-04},
    {5.28327292219514313e-02, 8.32078093296282462e-01, 9.70121353727347868e-02, 2.89789988340473142e-04},
    {9.70121353727347868e-02, 1.80770421090313410e-02, 5.28327292219514313e-02, 2.89789988340473142e-04},
    {9.70121353727347868e-02, 1.80770421090313410e-02, 8.32078093296282462e-01, 2.89789988340473142e-04},
    {9.70121353727347868e-02, 5.28327292219514313e-02, 1.80770421090313410e-02, 2.89789988340473142e-04},
    {9.70121353727347868e-02, 5.28327292219514313e-02, 8.32078093296282462e-01, 2.89789988340473142e-04},
    {9.70121353727347868e-02, 8.32078093296282462e-01, 1.80770421090313410e-02, 2.89789988340473142e-04},
    {9.70121353727347868e-02, 8.32078093296282462e-01, 5.28327292219514313e-02, 2.89789988340473142e-04},
    {8.32078093296282462e-01, 1.80770421090313410e-02, 5.28327292219514313e-02, 2.89789988340473142e-04},
    {8.32078093296282462e-01, 1.80770421090313410e-02, 9.70121353727347868e-02, 2.89789988340473142e-04},
    {8.32078093296282462e-01, 5.28327292219514313e-02, 1.80770421090313410e-02, 2.89789988340473142e-04},
    {8.32078093296282462e-01, 5.28327292219514313e-02, 9.70121353727347868e-02, 2.89789988340473142e-04},
    {8.32078093296282462e-01, 9.70121353727347868e-02, 1.80770421090313410e-02, 2.89789988340473142e-04},
    {8.32078093296282462e-01, 9.70121353727347868e-02, 5.28327292219514313e-02, 2.89789988340473142e-04},
    {2.73858291282915722e-02, 2.95245695574193112e-01, 3.21758160001190507e-01, 6.18630067944542141e-04},
    {2.73858291282915722e-02, 2.95245695574193112e-01, 3.55610315296324808e-01, 6.18630067944542141e-04},
    {2.73858291282915722e-02, 3.21758160001190507e-01, 2.95245695574193112e-01, 6.18630067944542141e-04},
    {2.73858291282915722e-02, 3.21758160001190507e-01, 3.55610315296324808e-01, 6.18630067944542141e-04},
    {2.73858291282915722e-02, 3.55610315296324808e-01, 2.95245695574193112e-01, 6.18630067944542141e-04},
    {2.73858291282915722e-02, 3.55610315296324808e-01, 3.21758160001190507e-01, 6.18630067944542141e-04},
    {2.95245695574193112e-01, 2.73858291282915722e-02, 3.21758160001190507e-01, 6.18630067944542141e-04},
    {2.95245695574193112e-01, 2.73858291282915722e-02, 3.55610315296324808e-01, 6.18630067944542141e-04},
    {2.95245695574193112e-01, 3.21758160001190507e-01, 2.73858291282915722e-02, 6.18630067944542141e-04},
    {2.95245695574193112e-01, 3.21758160001190507e-01, 3.55610315296324808e-01, 6.18630067944542141e-04},
    {2.95245695574193112e-01, 3.55610315296324808e-01, 2.73858291282915722e-02, 6.18630067944542141e-04},
    {2.95245695574193112e-01, 3.55610315296324808e-01, 3.21758160001190507e-01, 6.18630067944542141e-04},
    {3.21758160001190507e-01, 2.73858291282915722e-02, 2.95245695574193112e-01, 6.18630067944542141e-04},
    {3.21758160001190507e-01, 2.73858291282915722e-02, 3.55610315296324808e-01, 6.18630067944542141e-04},
    {3.21758160001190507e-01, 2.95245695574193112e-01, 2.73858291282915722e-02, 6.18630067944542141e-04},
    {3.21758160001190507e-01, 2.95245695574193112e-01, 3.55610315296324808e-01, 6.18630067944542141e-04},
    {3.21758160001190507e-01, 3.55610315296324808e-01, 2.73858291282915722e-02, 6.18630067944542141e-04},
    {3.21758160001190507e-01, 3.55610315296324808e-01, 2.95245695574193112e-01, 6.18630067944542141e-04},
    {3.55610315296324808e-01, 2.73858291282915722e-02, 2.95245695574193112e-01, 6.18630067944542141e-04},
    {3.55610315296324808e-01, 2.73858291282915722e-02, 3.21758160001190507e-01, 6.18630067944542141e-04},
    {3.55610315296324808e-01, 2.95245695574193112e-01, 2.73858291282915722e-02, 6.18630067944542141e-04},
    {3.55610315296324808e-01, 2.95245695574193112e-01, 3.21758160001190507e-01, 6.18630067944542141e-04},
    {3.55610315296324808e-01, 3.21758160001190507e-01, 2.73858291282915722e-02, 6.18630067944542141e-04},
    {3.55610315296324808e-01, 3.21758160001190507e-01, 2.95245695574193112e-01, 6.18630067944542141e-04},
};

// degree 8: 328 points
inline constexpr double kTetRuleD8[328][4] = {
    {4.00000006344231485e-03, 4.00000006344231485e-03, 4.00000006344231485e-03, 7.84660181904761747e-05},
    {4.00000006344231485e-03, 4.00000006344231485e-03, 9.87999999809673013e-01, 7.84660181904761747e-05},
    {4.00000006344231485e-03, 9.87999999809673013e-01, 4.00000006344231485e-03, 7.84660181904761747e-05},
    {9.87999999809673013e-01, 4.00000006344231485e-03, 4.00000006344231485e-03, 7.84660181904761747e-05},
    {1.00000001231105948e-02, 1.00000001231105948e-02, 3.10800000090199868e-01, 1.65626258700728011e-04},
    {1.00000001231105948e-02, 1.00000001231105948e-02, 6.69199999663578904e-01, 1.65626258700728011e-04},
    {1.00000001231105948e-02, 3.10800000090199868e-01, 1.00000001231105948e-02, 1.65626258700728011e-04},
    {1.00000001231105948e-02, 3.10800000090199868e-01, 6.69199999663578904e-01, 1.65626258700728011e-04},
    {1.00000001231105948e-02, 6.69199999663578904e-01, 1.00000001231105948e-02, 1.65626258700728011e-04},
    {1.00000001231105948e-02, 6.69199999663578904e-01, 3.10800000090199868e-01, 1.65626258700728011e-04},
    {3.10800000090199868e-01, 1.00000001231105948e-02, 1.00000001231105948e-02, 1.65626258700728011e-04},
    {3.10800000090199868e-01, 1.00000001231105948e-02, 6.69199999663578904e-01, 1.65626258700728011e-04},
    {3.10800000090199868e-01, 6.69199999663578904e-01, 1.00000001231105948e-02, 1.65626258700728011e-04},
    {6.69199999663578904e-01, 1.00000001231105948e-02, 1.00000001231105948e-02, 1.65626258700728011e-04},
    {6.69199999663578904e-01, 1.00000001231105948e-02, 3.10800000090199868e-01, 1.65626258700728011e-04},
    {6.69199999663578904e-01, 3.10800000090199868e-01, 1.00000001231105948e-02, 1.65626258700728011e-04},
    {2.21583071286167790e-02, 1.84200788467033943e-01, 2.25731418139485246e-01, 1.38996006788917104e-03},
    {2.21583071286167790e-02, 1.84200788467033943e-01, 5.67909486264864038e-01, 1.38996006788917104e-03},
    {2.21583071286167790e-02, 2.25731418139485246e-01, 1.84200788467033943e-01, 1.38996006788917104e-03},
    {2.21583071286167790e-02, 2.25731418139485246e-01, 5.67909486264864038e-01, 1.38996006788917104e-03},
    {2.21583071286167790e-02, 5.67909486264864038e-01, 1.84200788467033943e-01, 1.38996006788917104e-03},
    {2.21583071286167790e-02, 5.67909486264864038e-01, 2.25731418139485246e-01, 1.38996006788917104e-03},
    {1.84200788467033943e-01, 2.21583071286167790e-02, 2.25731418139485246e-01, 1.38996006788917104e-03},
    {1.84200788467033943e-01, 2.21583071286167790e-02, 5.67909486264864038e-01, 1.38996006788917104e-03},
    {1.84200788467033943e-01, 2.25731418139485246e-01, 2.21583071286167790e-02, 1.38996006788917104e-03},
    {1.84200788467033943e-01, 2.25731418139485246e-01, 5.67909486264864038e-01, 1.38996006788917104e-03},
    {1.84200788467033943e-01, 5.67909486264864038e-01, 2.21583071286167790e-02, 1.38996006788917104e-03},
    {1.84200788467033943e-01, 5.67909486264864038e-01, 2.25731418139485246e-01, 1.38996006788917104e-03},
    {2.25731418139485246e-01, 2.21583071286167790e-02, 1.84200788467033943e-01, 1.38996006788917104e-03},
    {2.25731418139485246e-01, 2.21583071286167790e-02, 5.67909486264864038e-01, 1.38996006788917104e-03},
    {2.25731418139485246e-01, 1.84200788467033943e-01, 2.21583071286167790e-02, 1.38996006788917104e-03},
    {2.25731418139485246e-01, 1.84200788467033943e-01, 5.67909486264864038e-01, 1.38996006788917104e-03},
    {2.25731418139485246e-01, 5.67909486264864038e-01, 2.21583071286167790e-02, 1.38996006788917104e-03},
    {2.25731418139485246e-01, 5.67909486264864038e-01, 1.84200788467033943e-01, 1.38996006788917104e-03},
    {5.67909486264864038e-01, 2.21583071286167790e-02, 1.84200788467033943e-01, 1.38996006788917104e-03},
    {5.67909486264864038e-01, 2.21583071286167790e-02, 2.25731418139485246e-01, 1.38996006788917104e-03},
    {5.67909486264864038e-01, 1.84200788467033943e-01, 2.21583071286167790e-02, 1.38996006788917104e-03},
    {5.67909486264864038e-01, 1.84200788467033943e-01, 2.25731418139485246e-01, 1.38996006788917104e-03},
    {5.67909486264864038e-01, 2.25731418139485246e-01, 2.21583071286167790e-02, 1.38996006788917104e-03},
    {5.67909486264864038e-01, 2.25731418139485246e-01, 1.84200788467033943e-01, 1.38996006788917104e-03},
    {1.14970141618250237e-02, 4.69817714121743765e-02, 3.98026279004791872e-01, 2.06858490484551334e-04},
    {1.14970141618250237e-02, 4.69817714121743765e-02, 5.43494935421208747e-01, 2.06858490484551334e-04},
    {1.14970141618250237e-02, 3.98026279004791872e-01, 4.69817714121743765e-02, 2.06858490484551334e-04},
    {1.14970141618250237e-02, 3.98026279004791872e-01, 5.43494935421208747e-01, 2.06858490484551334e-04},
    {1.14970141618250237e-02, 5.43494935421208747e-01, 4.69817714121743765e-02, 2.06858490484551334e-04},
    {1.14970141618250237e-02, 5.43494935421208747e-01, 3.98026279004791872e-01, 2.06858490484551334e-04},
    {4.69817714121743765e-02, 1.14970141618250237e-02, 3.98026279004791872e-01, 2.06858490484551334e-04},
    {4.69817714121743765e-02, 1.14970141618250237e-02, 5.43494935421208747e-01, 2.06858490484551334e-04},
    {4.69817714121743765e-02, 3.98026279004791872e-01, 1.14970141618250237e-02, 2.06858490484551334e-04},
    {4.69817714121743765e-02, 3.98026279004791872e-01, 5.43494935421208747e-01, 2.06858490484551334e-04},
    {4.69817714121743765e-02, 5.43494935421208747e-01, 1.14970141618250237e-02, 2.06858490484551334e-04},
    {4.69817714121743765e-02, 5.43494935421208747e-01, 3.98026279004791872e-01, 2.06858490484551334e-04},
    {3.98026279004791872e-01, 1.14970141618250237e-02, 4.69817714121743765e-02, 2.06858490484551334e-04},
    {3.98026279004791872e-01, 1.14970141618250237e-02, 5.43494935421208747e-01, 2.06858490484551334e-04},
    {3.98026279004791872e-01, 4.69817714121743765e-02, 1.14970141618250237e-02, 2.06858490484551334e-04},
    {3.98026279004791872e-01, 4.69817714121743765e-02, 5.43494935421208747e-01, 2.06858490484551334e-04},
    {3.98026279004791872e-01, 5.43494935421208747e-01, 1.14970141618250237e-02, 2.06858490484551334e-04},
    {3.98026279004791872e-01, 5.43494935421208747e-01, 4.69817714121743765e-02, 2.06858490484551334e-04},
    {5.43494935421208747e-01, 1.14970141618250237e-02, 4.69817714121743765e-02, 2.06858490484551334e-04},
    {5.43494935421208747e-01, 1.14970141618250237e-02, 3.98026279004791872e-01, 2.06858490484551334e-04},
    {5.43494935421208747e-01, 4.69817714121743765e-02, 1.14970141618250237e-02, 2.06858490484551334e-04},
    {5.43494935421208747e-01, 4.69817714121743765e-02, 3.98026279004791872e-01, 2.06858490484551334e-04},
    {5.43494935421208747e-01, 3.98026279004791872e-01, 1.14970141618250237e-02, 2.06858490484551334e-04},
    {5.43494935421208747e-01, 3.98026279004791872e-01, 4.69817714121743765e-02, 2.06858490484551334e-04},
    {6.95928239174483237e-02, 2.68716860416047143e-01, 3.28166961045061933e-01, 8.22125532020337121e-04},
    {6.95928239174483237e-02, 2.68716860416047143e-01, 3.33523354621442614e-01, 8.22125532020337121e-04},
    {6.95928239174483237e-02, 3.28166961045061933e-01, 2.68716860416047143e-01, 8.22125532020337121e-04},
    {6.95928239174483237e-02, 3.28166961045061933e-01, 3.33523354621442614e-01, 8.22125532020337121e-04},
    {6.95928239174483237e-02, 3.33523354621442614e-01, 2.68716860416047143e-01, 8.22125532020337121e-04},
    {6.95928239174483237e-02, 3.33523354621442614e-01, 3.28166961045061933e-01, 8.22125532020337121e-04},
    {2.68716860416047143e-01, 6.95928239174483237e-02, 3.28166961045061933e-01, 8.22125532020337121e-04},
    {2.68716860416047143e-01, 6.95928239174483237e-02, 3.33523354621442614e-01, 8.22125532020337121e-04},
    {2.68716860416047143e-01, 3.28166961045061933e-01, 6.95928239174483237e-02, 8.22125532020337121e-04},
    {2.68716860416047143e-01, 3.28166961045061933e-01, 3.33523354621442614e-01, 8.22125532020337121e-04},
    {2.68716860416047143e-01, 3.33523354621442614e-01, 6.95928239174483237e-02, 8.22125532020337121e-04},
    {2.68716860416047143e-01, 3.33523354621442614e-01, 3.28166961045061933e-01, 8.22125532020337121e-04},
    {3.28166961045061933e-01, 6.95928239174483237e-02, 2.68716860416047143e-01, 8.22125532020337121e-04},
    {3.28166961045061933e-01, 6.95928239174483237e-02, 3.33523354621442614e-01, 8.22125532020337121e-04},
    {3.28166961045061933e-01, 2.68716860416047143e-01, 6.95928239174483237e-02, 8.22125532020337121e-04},
    {3.28166961045061933e-01, 2.68716860416047143e-01, 3.33523354621442614e-01, 8.22125532020337121e-04},
    {3.28166961045061933e-01, 3.33523354621442614e-01, 6.95928239174483237e-02, 8.22125532020337121e-04},
    {3.28166961045061933e-01, 3.33523354621442614e-01, 2.68716860416047143e-01, 8.22125532020337121e-04},
    {3.33523354621442614e-01, 6.95928239174483237e-02, 2.68716860416047143e-01, 8.22125532020337121e-04},
    {3.33523354621442614e-01, 6.95928239174483237e-02, 3.28166961045061933e-01, 8.22125532020337121e-04},
    {3.33523354621442614e-01, 2.68716860416047143e-01, 6.95928239174483237e-02, 8.22125532020337121e-04},
    {3.33523354621442614e-01, 2.68716860416047143e-01, 3.28166961045061933e-01, 8.22125532020337121e-04},
    {3.33523354621442614e-01, 3.28166961045061933e-01, 6.95928239174483237e-02, 8.22125532020337121e-04},
    {3.33523354621442614e-01, 3.28166961045061933e-01, 2.68716860416047143e-01, 8.22125532020337121e-04},
    {2.18906895348301989e-02, 2.95990288510862676e-01, 3.39551640724640336e-01, 2.43493534763441192e-04},
    {2.18906895348301989e-02, 2.95990288510862676e-01, 3.42567381229666734e-01, 2.43493534763441192e-04},
    {2.18906895348301989e-02, 3.39551640724640336e-01, 2.95990288510862676e-01, 2.43493534763441192e-04},
    {2.18906895348301989e-02, 3.39551640724640336e-01, 3.42567381229666734e-01, 2.43493534763441192e-04},
    {2.18906895348301989e-02, 3.42567381229666734e-01, 2.95990288510862676e-01, 2.43493534763441192e-04},
    {2.18906895348301989e-02, 3.42567381229666734e-01, 3.39551640724640336e-01, 2.43493534763441192e-04},
    {2.95990288510862676e-01, 2.18906895348301989e-02, 3.39551640724640336e-01, 2.43493534763441192e-04},
    {2.95990288510862676e-01, 2.18906895348301989e-02, 3.42567381229666734e-01, 2.43493534763441192e-04},
    {2.95990288510862676e-01, 3.39551640724640336e-01, 2.18906895348301989e-02, 2.43493534763441192e-04},
    {2.95990288510862676e-01, 3.39551640724640336e-01, 3.42567381229666734e-01, 2.43493534763441192e-04},
    {2.95990288510862676e-01, 3.42567381229666734e-01, 2.18906895348301989e-02, 2.43493534763441192e-04},
    {2.95990288510862676e-01, 3.42567381229666734e-01, 3.39551640724640336e-01, 2.43493534763441192e-04},
    {3.39551640724640336e-01, 2.18906895348301989e-02, 2.95990288510862676e-01, 2.43493534763441192e-04},
    {3.39551640724640336e-01, 2.18906895348301989e-02, 3.42567381229666734e-01, 2.43493534763441192e-04},
    {3.39551640724640336e-01, 2.95990288510862676e-01, 2.18906895348301989e-02, 2.43493534763441192e-04},
    {3.39551640724640336e-01, 2.95990288510862676e-01, 3.42567381229666734e-01, 2.43493534763441192e-04},
    {3.39551640724640336e-01, 3.42567381229666734e-01, 2.18906895348301989e-02, 2.43493534763441192e-04},
    {3.39551640724640336e-01, 3.42567381229666734e-01, 2.95990288510862676e-01, 2.43493534763441192e-04},
    {3.42567381229666734e-01, 2.18906895348301989e-02, 2.95990288510862676e-01, 2.43493534763441192e-04},
    {3.42567381229666734e-01, 2.18906895348301989e-02, 3.39551640724640336e-01, 2.43493534763441192e-04},
    {3.42567381229666734e-01, 2.95990288510862676e-01, 2.18906895348301989e-02, 2.43493534763441192e-04},
    {3.42567381229666734e-01, 2.95990288510862676e-01, 3.39551640724640336e-01, 2.43493534763441192e-04},
    {3.42567381229666734e-01, 3.39551640724640336e-01, 2.18906895348301989e-02, 2.43493534763441192e-04},
    {3.42567381229666734e-01, 3.39551640724640336e-01, 2.95990288510862676e-01, 2.43493534763441192e-04},
    {7.18243328515701801e-02, 8.18974930580352450e-02, 4.13998657512066826e-01, 9.40613675889478474e-04},
    {7.18243328515701801e-02, 8.18974930580352450e-02, 4.32279516578327805e-01, 9.40613675889478474e-04},
    {7.18243328515701801e-02, 4.13998657512066826e-01, 8.18974930580352450e-02, 9.40613675889478474e-04},
    {7.18243328515701801e-02, 4.13998657512066826e-01, 4.32279516578327805e-01, 9.40613675889478474e-04},
    {7.18243328515701801e-02, 4.32279516578327805e-01, 8.18974930580352450e-02, 9.40613675889478474e-04},
    {7.18243328515701801e-02, 4.32279516578327805e-01, 4.13998657512066826e-01, 9.40613675889478474e-04},
    {8.18974930580352450e-02, 7.18243328515701801e-02, 4.13998657512066826e-01, 9.40613675889478474e-04},
    {8.18974930580352450e-02, 7.18243328515701801e-02, 4.32279516578327805e-01, 9.40613675889478474e-04},
    {8.18974930580352450e-02, 4.13998657512066826e-01, 7.18243328515701801e-02, 9.40613675889478474e-04},
    {8.18974930580352450e-02, 4.13998657512066826e-01, 4.32279516578327805e-01, 9.40613675889478474e-04},
    {8.18974930580352450e-02, 4.32279516578327805e-01, 7.18243328515701801e-02, 9.40613675889478474e-04},
    {8.18974930580352450e-02, 4.32279516578327805e-01, 4.13998657512066826e-01, 9.40613675889478474e-04},
    {4.13998657512066826e-01, 7.18243328515701801e-02, 8.18974930580352450e-02, 9.40613675889478474e-04},
    {4.13998657512066826e-01, 7.18243328515701801e-02, 4.32279516578327805e-01, 9.40613675889478474e-04},
    {4.13998657512066826e-01, 8.18974930580352450e-02, 7.18243328515701801e-02, 9.40613675889478474e-04},
    {4.13998657512066826e-01, 8.18974930580352450e-02, 4.32279516578327805e-01, 9.40613675889478474e-04},
    {4.13998657512066826e-01, 4.32279516578327805e-01, 7.18243328515701801e-02, 9.40613675889478474e-04},
    {4.13998657512066826e-01, 4.32279516578327805e-01, 8.18974930580352450e-02, 9.40613675889478474e-04},
    {4.32279516578327805e-01, 7.18243328515701801e-02, 8.18974930580352450e-02, 9.40613675889478474e-04},
    {4.32279516578327805e-01, 7.18243328515701801e-02, 4.13998657512066826e-01, 9.40613675889478474e-04},
    {4.32279516578327805e-01, 8.18974930580352450e-02, 7.18243328515701801e-02, 9.40613675889478474e-04},
    {4.32279516578327805e-01, 8.18974930580352450e-02, 4.13998657512066826e-01, 9.40613675889478474e-04},
    {4.32279516578327805e-01, 4.13998657512066826e-01, 7.18243328515701801e-02, 9.40613675889478474e-04},
    {4.32279516578327805e-01, 4.13998657512066826e-01, 8.18974930580352450e-02, 9.40613675889478474e-04},
    {2.22348770643716019e-02, 8.87680504926072061e-02, 1.29998642777312323e-01, 8.01097707867658902e-05},
    {2.22348770643716019e-02, 8.87680504926072061e-02, 7.58998429665708962e-01, 8.01097707867658902e-05},
    {2.22348770643716019e-02, 1.29998642777312323e-01, 8.87680504926072061e-02, 8.01097707867658902e-05},
    {2.22348770643716019e-02, 1.29998642777312323e-01, 7.58998429665708962e-01, 8.01097707867658902e-05},
    {2.22348770643716019e-02, 7.58998429665708962e-01, 8.87680504926072061e-02, 8.01097707867658902e-05},
    {2.22348770643716019e-02, 7.58998429665708962e-01, 1.29998642777312323e-01, 8.01097707867658902e-05},
    {8.87680504926072061e-02, 2.22348770643716019e-02, 1.29998642777312323e-01, 8.01097707867658902e-05},
    {8.87680504926072061e-02, 2.22348770643716019e-02, 7.58998429665708962e-01, 8.01097707867658902e-05},
    {8.87680504926072061e-02, 1.29998642777312323e-01, 2.22348770643716019e-02, 8.01097707867658902e-05},
    {8.87680504926072061e-02, 1.29998642777312323e-01, 7.58998429665708962e-01, 8.01097707867658902e-05},
    {8.87680504926072061e-02, 7.58998429665708962e-01, 2.22348770643716019e-02, 8.01097707867658902e-05},
    {8.87680504926072061e-02, 7.58998429665708962e-01, 1.29998642777312323e-01, 8.01097707867658902e-05},
    {1.29998642777312323e-01, 2.22348770643716019e-02, 8.87680504926072061e-02, 8.01097707867658902e-05},
    {1.29998642777312323e-01, 2.22348770643716019e-02, 7.58998429665708962e-01, 8.01097707867658902e-05},
    {1.29998642777312323e-01, 8.87680504926072061e-02, 2.22348770643716019e-02, 8.01097707867658902e-05},
    {1.29998642777312323e-01, 8.87680504926072061e-02, 7.58998429665708962e-01, 8.01097707867658902e-05},
    {1.29998642777312323e-01, 7.58998429665708962e-01, 2.22348770643716019e-02, 8.01097707867658902e-05},
    {1.29998642777312323e-01, 7.58998429665708962e-01, 8.87680504926072061e-02, 8.01097707867658902e-05},
    {7.58998429665708962e-01, 2.22348770643716019e-02, 8.87680504926072061e-02, 8.01097707867658902e-05},
    {7.58998429665708962e-01, 2.22348770643716019e-02, 1.29998642777312323e-01, 8.01097707867658902e-05},
    {7.58998429665708962e-01, 8.87680504926072061e-02, 2.22348770643716019e-02, 8.01097707867658902e-05},
    {7.58998429665708962e-01, 8.87680504926072061e-02, 1.29998642777312323e-01, 8.01097707867658902e-05},
    {7.58998429665708962e-01, 1.29998642777312323e-01, 2.22348770643716019e-02, 8.01097707867658902e-05},
    {7.58998429665708962e-01, 1.29998642777312323e-01, 8.87680504926072061e-02, 8.01097707867658902e-05},
    {4.17661719072907611e-02, 4.40497457940175474e-02, 8.37906229563823018e-02, 2.59234809832464982e-04},
    {4.17661719072907611e-02, 4.40497457940175474e-02, 8.30393459342309348e-01, 2.59234809832464982e-04},
    {4.17661719072907611e-02, 8.37906229563823018e-02, 4.40497457940175474e-02, 2.59234809832464982e-04},
    {4.17661719072907611e-02, 8.37906229563823018e-02, 8.30393459342309348e-01, 2.59234809832464982e-04},
    {4.17661719072907611e-02, 8.30393459342309348e-01, 4.40497457940175474e-02, 2.59234809832464982e-04},
    {4.17661719072907611e-02, 8.30393459342309348e-01, 8.37906229563823018e-02, 2.59234809832464982e-04},
    {4.40497457940175474e-02, 4.17661719072907611e-02, 8.37906229563823018e-02, 2.59234809832464982e-04},
    {4.40497457940175474e-02, 4.17661719072907611e-02, 8.30393459342309348e-01, 2.59234809832464982e-04},
    {4.40497457940175474e-02, 8.37906229563823018e-02, 4.17661719072907611e-02, 2.59234809832464982e-04},
    {4.40497457940175474e-02, 8.37906229563823018e-02, 8.30393459342309348e-01, 2.59234809832464982e-04},
    {4.40497457940175474e-02, 8.30393459342309348e-01, 4.17661719072907611e-02, 2.59234809832464982e-04},
    {4.40497457940175474e-02, 8.30393459342309348e-01, 8.37906229563823018e-02, 2.59234809832464982e-04},
    {8.37906229563823018e-02, 4.17661719072907611e-02, 4.40497457940175474e-02, 2.59234809832464982e-04},
    {8.37906229563823018e-02, 4.17661719072907611e-02, 8.30393459342309348e-01, 2.59234809832464982e-04},
    {8.37906229563823018e-02, 4.40497457940175474e-02, 4.17661719072907611e-02, 2.59234809832464982e-04},
    {8.37906229563823018e-02, 4.40497457940175474e-02, 8.30393459342309348e-01, 2.59234809832464982e-04},
    {8.37906229563823018e-02, 8.30393459342309348e-01, 4.17661719072907611e-02, 2.59234809832464982e-04},
    {8.37906229563823018e-02, 8.30393459342309348e-01, 4.40497457940175474e-02, 2.59234809832464982e-04},
    {8.30393459342309348e-01, 4.17661719072907611e-02, 4.40497457940175474e-02, 2.59234809832464982e-04},
    {8.30393459342309348e-01, 4.17661719072907611e-02, 8.37906229563823018e-02, 2.59234809832464982e-04},
    {8.30393459342309348e-01, 4.40497457940175474e-02, 4.17661719072907611e-02, 2.59234809832464982e-04},
    {8.30393459342309348e-01, 4.40497457940175474e-02, 8.37906229563823018e-02, 2.59234809832464982e-04},
    {8.30393459342309348e-01, 8.37906229563823018e-02, 4.17661719072907611e-02, 2.59234809832464982e-04},
    {8.30393459342309348e-01, 8.37906229563823018e-02, 4.40497457940175474e-02, 2.59234809832464982e-04},
    {4.39946051924869352e-02, 6.21144905464453487e-02, 2.88154340955163069e-01, 3.02020592982427821e-04},
    {4.39946051924869352e-02, 6.21144905464453487e-02, 6.05736563305904641e-01, 3.02020592982427821e-04},
    {4.39946051924869352e-02, 2.88154340955163069e-01, 6.21144905464453487e-02, 3.02020592982427821e-04},
    {4.39946051924869352e-02, 2.88154340955163069e-01, 6.05736563305904641e-01, 3.02020592982427821e-04},
    {4.39946051924869352e-02, 6.05736563305904641e-01, 6.21144905464453487e-02, 3.02020592982427821e-04},
    {4.39946051924869352e-02, 6.05736563305904641e-01, 2.88154340955163069e-01, 3.02020592982427821e-04},
    {6.21144905464453487e-02, 4.39946051924869352e-02, 2.88154340955163069e-01, 3.02020592982427821e-04},
    {6.21144905464453487e-02, 4.39946051924869352e-02, 6.05736563305904641e-01, 3.02020592982427821e-04},
    {6.21144905464453487e-02, 2.88154340955163069e-01, 4.39946051924869352e-02, 3.02020592982427821e-04},
    {6.21144905464453487e-02, 2.88154340955163069e-01, 6.05736563305904641e-01, 3.02020592982427821e-04},
    {6.21144905464453487e-02, 6.05736563305904641e-01, 4.39946051924869352e-02, 3.02020592982427821e-04},
    {6.21144905464453487e-02, 6.05736563305904641e-01, 2.88154340955163069e-01, 3.02020592982427821e-04},
    {2.88154340955163069e-01, 4.39946051924869352e-02, 6.21144905464453487e-02, 3.02020592982427821e-04},
    {2.88154340955163069e-01, 4.39946051924869352e-02, 6.05736563305904641e-01, 3.02020592982427821e-04},
    {2.88154340955163069e-01, 6.21144905464453487e-02, 4.39946051924869352e-02, 3.02020592982427821e-04},
    {2.88154340955163069e-01, 6.21144905464453487e-02, 6.05736563305904641e-01, 3.02020592982427821e-04},
    {2.88154340955163069e-01, 6.05736563305904641e-01, 4.39946051924869352e-02, 3.02020592982427821e-04},
    {2.88154340955163069e-01, 6.05736563305904641e-01, 6.21144905464453487e-02, 3.02020592982427821e-04},
    {6.05736563305904641e-01, 4.39946051924869352e-02, 6.21144905464453487e-02, 3.02020592982427821e-04},
    {6.05736563305904641e-01, 4.39946051924869352e-02, 2.88154340955163069e-01, 3.02020592982427821e-04},
    {6.05736563305904641e-01, 6.21144905464453487e-02, 4.39946051924869352e-02, 3.02020592982427821e-04},
    {6.05736563305904641e-01, 6.21144905464453487e-02, 2.88154340955163069e-01, 3.02020592982427821e-04},
    {6.05736563305904641e-01, 2.88154340955163069e-01, 4.39946051924869352e-02, 3.02020592982427821e-04},
    {6.05736563305904641e-01, 2.88154340955163069e-01, 6.21144905464453487e-02, 3.02020592982427821e-04},
    {1.17202910643012248e-02, 4.66351683078016083e-02, 2.00382929442252972e-01, 4.66306909899962929e-04},
    {1.17202910643012248e-02, 4.66351683078016083e-02, 7.41261611185644265e-01, 4.66306909899962929e-04},
    {1.17202910643012248e-02, 2.00382929442252972e-01, 4.66351683078016083e-02, 4.66306909899962929e-04},
    {1.17202910643012248e-02, 2.00382929442252972e-01, 7.41261611185644265e-01, 4.66306909899962929e-04},
    {1.17202910643012248e-02, 7.41261611185644265e-01, 4.66351683078016083e-02, 4.66306909899962929e-04},
    {1.17202910643012248e-02, 7.41261611185644265e-01, 2.00382929442252972e-01, 4.66306909899962929e-04},
    {4.66351683078016083e-02, 1.17202910643012248e-02, 2.00382929442252972e-01, 4.66306909899962929e-04},
    {4.66351683078016083e-02, 1.17202910643012248e-02, 7.41261611185644265e-01, 4.66306909899962929e-04},
    {4.66351683078016083e-02, 2.00382929442252972e-01, 1.17202910643012248e-02, 4.66306909899962929e-04},
    {4.66351683078016083e-02, 2.00382929442252972e-01, 7.41261611185644265e-01, 4.66306909899962929e-04},
    {4.66351683078016083e-02, 7.41261611185644265e-01, 1.17202910643012248e-02, 4.66306909899962929e-04},
    {4.66351683078016083e-02, 7.41261611185644265e-01, 2.00382929442252972e-01, 4.66306909899962929e-04},
    {2.00382929442252972e-01, 1.17202910643012248e-02, 4.66351683078016083e-02, 4.66306909899962929e-04},
    {2.00382929442252972e-01, 1.17202910643012248e-02, 7.41261611185644265e-01, 4.66306909899962929e-04},
    {2.00382929442252972e-01, 4.66351683078016083e-02, 1.17202910643012248e-02, 4.66306909899962929e-04},
    {2.00382929442252972e-01, 4.66351683078016083e-02, 7.41261611185644265e-01, 4.66306909899962929e-04},
    {2.00382929442252972e-01, 7.41261611185644265e-01, 1.17202910643012248e-02, 4.66306909899962929e-04},
    {2.00382929442252972e-01, 7.41261611185644265e-01, 4.66351683078016083e-02, 4.66306909899962929e-04},
    {7.41261611185644265e-01, 1.17202910643012248e-02, 4.66351683078016083e-02, 4.66306909899962929e-04},
    {7.41261611185644265e-01, 1.17202910643012248e-02, 2.00382929442252972e-01, 4.66306909899962929e-04},
    {7.41261611185644265e-01, 4.66351683078016083e-02, 1.17202910643012248e-02, 4.66306909899962929e-04},
    {7.41261611185644265e-01, 4.66351683078016083e-02, 2.00382929442252972e-01, 4.66306909899962929e-04},
    {7.41261611185644265e-01, 2.00382929442252972e-01, 1.17202910643012248e-02, 4.66306909899962929e-04},
    {7.41261611185644265e-01, 2.00382929442252972e-01, 4.66351683078016083e-02, 4.66306909899962929e-04},
    {8.82105634341286970e-02, 1.06348764508838206e-01, 1.24490880792051700e-01, 2.83504442558185534e-04},
    {8.82105634341286970e-02, 1.06348764508838206e-01, 6.80949791264981341e-01, 2.83504442558185534e-04},
    {8.82105634341286970e-02, 1.24490880792051700e-01, 1.06348764508838206e-01, 2.83504442558185534e-04},
    {8.82105634341286970e-02, 1.24490880792051700e-01, 6.80949791264981341e-01, 2.83504442558185534e-04},
    {8.82105634341286970e-02, 6.80949791264981341e-01, 1.06348764508838206e-01, 2.83504442558185534e-04},
    {8.82105634341286970e-02, 6.80949791264981341e-01, 1.24490880792051700e-01, 2.83504442558185534e-04},
    {1.06348764508838206e-01, 8.82105634341286970e-02, 1.24490880792051700e-01, 2.83504442558185534e-04},
    {1.06348764508838206e-01, 8.82105634341286970e-02, 6.80949791264981341e-01, 2.83504442558185534e-04},
    {1.06348764508838206e-01, 1.24490880792051700e-01, 8.82105634341286970e-02, 2.83504442558185534e-04},
    {1.06348764508838206e-01, 1.24490880792051700e-01, 6.80949791264981341e-01, 2.83504442558185534e-04},
    {1.06348764508838206e-01, 6.80949791264981341e-01, 8.82105634341286970e-02, 2.83504442558185534e-04},
    {1.06348764508838206e-01, 6.80949791264981341e-01, 1.24490880792051700e-01, 2.83504442558185534e-04},
    {1.24490880792051700e-01, 8.82105634341286970e-02, 1.06348764508838206e-01, 2.83504442558185534e-04},
    {1.24490880792051700e-01, 8.82105634341286970e-02, 6.80949791264981341e-01, 2.83504442558185534e-04},
    {1.24490880792051700e-01, 1.06348764508838206e-01, 8.82105634341286970e-02, 2.83504442558185534e-04},
    {1.24490880792051700e-01, 1.06348764508838206e-01, 6.80949791264981341e-01, 2.83504442558185534e-04},
    {1.24490880792051700e-01, 6.80949791264981341e-01, 8.82105634341286970e-02, 2.83504442558185534e-04},
    {1.24490880792051700e-01, 6.80949791264981341e-01, 1.06348764508838206e-01, 2.83504442558185534e-04},
    {6.80949791264981341e-01, 8.82105634341286970e-02, 1.06348764508838206e-01, 2.83504442558185534e-04},
    {6.80949791264981341e-01, 8.82105634341286970e-02, 1.24490880792051700e-01, 2.83504442558185534e-04},
    {6.80949791264981341e-01, 1.06348764508838206e-01, 8.82105634341286970e-02, 2.83504442558185534e-04},
    {6.80949791264981341e-01, 1.06348764508838206e-01, 1.24490880792051700e-01, 2.83504442558185534e-04},
    {6.80949791264981341e-01, 1.24490880792051700e-01, 8.82105634341286970e-02, 2.83504442558185534e-04},
    {6.80949791264981341e-01, 1.24490880792051700e-01, 1.06348764508838206e-01, 2.83504442558185534e-04},
    {1.84442181085426704e-01, 1.98198573581585075e-01, 2.11897846042233884e-01, 9.32106308338862292e-04},
    {1.84442181085426704e-01, 1.98198573581585075e-01, 4.05461399290754254e-01, 9.32106308338862292e-04},
    {1.84442181085426704e-01, 2.11897846042233884e-01, 1.98198573581585075e-01, 9.32106308338862292e-04},
    {1.84442181085426704e-01, 2.11897846042233884e-01, 4.05461399290754254e-01, 9.32106308338862292e-04},
    {1.84442181085426704e-01, 4.05461399290754254e-01, 1.98198573581585075e-01, 9.32106308338862292e-04},
    {1.84442181085426704e-01, 4.05461399290754254e-01, 2.11897846042233884e-01, 9.32106308338862292e-04},
    {1.98198573581585075e-01, 1.84442181085426704e-01, 2.11897846042233884e-01, 9.32106308338862292e-04},
    {1.98198573581585075e-01, 1.84442181085426704e-01, 4.05461399290754254e-01, 9.32106308338862292e-04},
    {1.98198573581585075e-01, 2.11897846042233884e-01, 1.84442181085426704e-01, 9.32106308338862292e-04},
    {1.98198573581585075e-01, 2.11897846042233884e-01, 4.05461399290754254e-01, 9.32106308338862292e-04},
    {1.98198573581585075e-01, 4.05461399290754254e-01, 1.84442181085426704e-01, 9.32106308338862292e-04},
    {1.98198573581585075e-01, 4.05461399290754254e-01, 2.11897846042233884e-01, 9.32106308338862292e-04},
    {2.11897846042233884e-01, 1.84442181085426704e-01, 1.98198573581585075e-01, 9.32106308338862292e-04},
    {2.11897846042233884e-01, 1.84442181085426704e-01, 4.05461399290754254e-01, 9.32106308338862292e-04},
    {2.11897846042233884e-01, 1.98198573581585075e-01, 1.84442181085426704e-01, 9.32106308338862292e-04},
    {2.11897846042233884e-01, 1.98198573581585075e-01, 4.05461399290754254e-01, 9.32106308338862292e-04},
    {2.11897846042233884e-01, 4.05461399290754254e-01, 1.84442181085426704e-01, 9.32106308338862292e-04},
    {2.11897846042233884e-01, 4.05461399290754254e-01, 1.98198573581585075e-01, 9.32106308338862292e-04},
    {4.05461399290754254e-01, 1.84442181085426704e-01, 1.98198573581585075e-01, 9.32106308338862292e-04},
    {4.05461399290754254e-01, 1.84442181085426704e-01, 2.11897846042233884e-01, 9.32106308338862292e-04},
    {4.05461399290754254e-01, 1.98198573581585075e-01, 1.84442181085426704e-01, 9.32106308338862292e-04},
    {4.05461399290754254e-01, 1.98198573581585075e-01, 2.11897846042233884e-01, 9.32106308338862292e-04},
    {4.05461399290754254e-01, 2.11897846042233884e-01, 1.84442181085426704e-01, 9.32106308338862292e-04},
    {4.05461399290754254e-01, 2.11897846042233884e-01, 1.98198573581585075e-01, 9.32106308338862292e-04},
    {1.35417878908149936e-01, 1.51843087862508219e-01, 1.75431181825842331e-01, 5.78022743841609486e-04},
    {1.35417878908149936e-01, 1.51843087862508219e-01, 5.37307851403499570e-01, 5.78022743841609486e-04},
    {1.35417878908149936e-01, 1.75431181825842331e-01, 1.51843087862508219e-01, 5.78022743841609486e-04},
    {1.35417878908149936e-01, 1.75431181825842331e-01, 5.37307851403499570e-01, 5.78022743841609486e-04},
    {1.35417878908149936e-01, 5.37307851403499570e-01, 1.51843087862508219e-01, 5.78022743841609486e-04},
    {1.35417878908149936e-01, 5.37307851403499570e-01, 1.75431181825842331e-01, 5.78022743841609486e-04},
    {1.51843087862508219e-01, 1.35417878908149936e-01, 1.75431181825842331e-01, 5.78022743841609486e-04},
    {1.51843087862508219e-01, 1.35417878908149936e-01, 5.37307851403499570e-01, 5.78022743841609486e-04},
    {1.51843087862508219e-01, 1.75431181825842331e-01, 1.35417878908149936e-01, 5.78022743841609486e-04},
    {1.51843087862508219e-01, 1.75431181825842331e-01, 5.37307851403499570e-01, 5.78022743841609486e-04},
    {1.51843087862508219e-01, 5.37307851403499570e-01, 1.35417878908149936e-01, 5.78022743841609486e-04},
    {1.51843087862508219e-01, 5.37307851403499570e-01, 1.75431181825842331e-01, 5.78022743841609486e-04},
    {1.75431181825842331e-01, 1.35417878908149936e-01, 1.51843087862508219e-01, 5.78022743841609486e-04},
    {1.75431181825842331e-01, 1.35417878908149936e-01, 5.37307851403499570e-01, 5.78022743841609486e-04},
    {1.75431181825842331e-01, 1.51843087862508219e-01, 1.35417878908149936e-01, 5.78022743841609486e-04},
    {1.75431181825842331e-01, 1.51843087862508219e-01, 5.37307851403499570e-01, 5.78022743841609486e-04},
    {1.75431181825842331e-01, 5.37307851403499570e-01, 1.35417878908149936e-01, 5.78022743841609486e-04},
    {1.75431181825842331e-01, 5.37307851403499570e-01, 1.51843087862508219e-01, 5.78022743841609486e-04},
    {5.37307851403499570e-01, 1.35417878908149936e-01, 1.51843087862508219e-01, 5.78022743841609486e-04},
    {5.37307851403499570e-01, 1.35417878908149936e-01, 1.75431181825842331e-01, 5.78022743841609486e-04},
    {5.37307851403499570e-01, 1.51843087862508219e-01, 1.35417878908149936e-01, 5.78022743841609486e-04},
    {5.37307851403499570e-01, 1.51843087862508219e-01, 1.75431181825842331e-01, 5.78022743841609486e-04},
    {5.37307851403499570e-01, 1.75431181825842331e-01, 1.35417878908149936e-01, 5.78022743841609486e-04},
    {5.37307851403499570e-01, 1.75431181825842331e-01, 1.51843087862508219e-01, 5.78022743841609486e-04},
    {2.00551053481115328e-02, 1.20621640224959373e-01, 4.15493910453686555e-01, 3.44196766108409902e-04},
    {2.00551053481115328e-02, 1.20621640224959373e-01, 4.43829343973242585e-01, 3.44196766108409902e-04},
    {2.00551053481115328e-02, 4.15493910453686555e-01, 1.20621640224959373e-01, 3.44196766108409902e-04},
    {2.00551053481115328e-02, 4.15493910453686555e-01, 4.43829343973242585e-01, 3.44196766108409902e-04},
    {2.00551053481115328e-02, 4.43829343973242585e-01, 1.20621640224959373e-01, 3.44196766108409902e-04},
    {2.00551053481115328e-02, 4.43829343973242585e-01, 4.15493910453686555e-01, 3.44196766108409902e-04},
    {1.20621640224959373e-01, 2.00551053481115328e-02, 4.15493910453686555e-01, 3.44196766108409902e-04},
    {1.20621640224959373e-01, 2.00551053481115328e-02, 4.43829343973242585e-01, 3.44196766108409902e-04},
    {1.20621640224959373e-01, 4.15493910453686555e-01, 2.00551053481115328e-02, 3.44196766108409902e-04},
    {1.20621640224959373e-01, 4.15493910453686555e-01, 4.43829343973242585e-01, 3.44196766108409902e-04},
    {1.20621640224959373e-01, 4.43829343973242585e-01, 2.00551053481115328e-02, 3.44196766108409902e-04},
    {1.20621640224959373e-01, 4.43829343973242585e-01, 4.15493910453686555e-01, 3.44196766108409902e-04},
    {4.15493910453686555e-01, 2.00551053481115328e-02, 1.20621640224959373e-01, 3.44196766108409902e-04},
    {4.15493910453686555e-01, 2.00551053481115328e-02, 4.43829343973242585e-01, 3.44196766108409902e-04},
    {4.15493910453686555e-01, 1.20621640224959373e-01, 2.00551053481115328e-02, 3.44196766108409902e-04},
    {4.15493910453686555e-01, 1.20621640224959373e-01, 4.43829343973242585e-01, 3.44196766108409902e-04},
    {4.15493910453686555e-01, 4.43829343973242585e-01, 2.00551053481115328e-02, 3.44196766108409902e-04},
    {4.15493910453686555e-01, 4.43829343973242585e-01, 1.20621640224959373e-01, 3.44196766108409902e-04},
    {4.43829343973242585e-01, 2.00551053481115328e-02, 1.20621640224959373e-01, 3.44196766108409902e-04},
    {4.43829343973242585e-01, 2.00551053481115328e-02, 4.15493910453686555e-01, 3.44196766108409902e-04},
    {4.43829343973242585e-01, 1.20621640224959373e-01, 2.00551053481115328e-02, 3.44196766108409902e-04},
    {4.43829343973242585e-01, 1.20621640224959373e-01, 4.15493910453686555e-01, 3.44196766108409902e-04},
    {4.43829343973242585e-01, 4.15493910453686555e-01, 2.00551053481115328e-02, 3.44196766108409902e-04},
    {4.43829343973242585e-01, 4.15493910453686555e-01, 1.20621640224959373e-01, 3.44196766108409902e-04},
};

// degree 9: 396 points
inline constexpr double kTetRuleD9[396][4] = {
    {1.00000000003828762e-02, 1.00000000003828762e-02, 4.82592592590557146e-01, 1.99321783139697241e-04},
    {1.00000000003828762e-02, 1.00000000003828762e-02, 4.97407407408677116e-01, 1.99321783139697241e-04},
    {1.00000000003828762e-02, 4.82592592590557146e-01, 1.00000000003828762e-02, 1.99321783139697241e-04},
    {1.00000000003828762e-02, 4.82592592590557146e-01, 4.97407407408677116e-01, 1.99321783139697241e-04},
    {1.00000000003828762e-02, 4.97407407408677116e-01, 1.00000000003828762e-02, 1.99321783139697241e-04},
    {1.00000000003828762e-02, 4.97407407408677116e-01, 4.82592592590557146e-01, 1.99321783139697241e-04},
    {4.82592592590557146e-01, 1.00000000003828762e-02, 1.00000000003828762e-02, 1.99321783139697241e-04},
    {4.82592592590557146e-01, 1.00000000003828762e-02, 4.97407407408677116e-01, 1.99321783139697241e-04},
    {4.82592592590557146e-01, 4.97407407408677116e-01, 1.00000000003828762e-02, 1.99321783139697241e-04},
    {4.97407407408677116e-01, 1.00000000003828762e-02, 1.00000000003828762e-02, 1.99321783139697241e-04},
    {4.97407407408677116e-01, 1.00000000003828762e-02, 4.82592592590557146e-01, 1.99321783139697241e-04},
    {4.97407407408677116e-01, 4.82592592590557146e-01, 1.00000000003828762e-02, 1.99321783139697241e-04},
    {1.00000000040866687e-02, 1.00000000040866687e-02, 9.96296296188041719e-02, 8.07002906055682314e-06},
    {1.00000000040866687e-02, 1.00000000040866687e-02, 8.80370370373022459e-01, 8.07002906055682314e-06},
    {1.00000000040866687e-02, 9.96296296188041719e-02, 1.00000000040866687e-02, 8.07002906055682314e-06},
    {1.00000000040866687e-02, 9.96296296188041719e-02, 8.80370370373022459e-01, 8.07002906055682314e-06},
    {1.00000000040866687e-02, 8.80370370373022459e-01, 1.00000000040866687e-02, 8.07002906055682314e-06},
    {1.00000000040866687e-02, 8.80370370373022459e-01, 9.96296296188041719e-02, 8.07002906055682314e-06},
    {9.96296296188041719e-02, 1.00000000040866687e-02, 1.00000000040866687e-02, 8.07002906055682314e-06},
    {9.96296296188041719e-02, 1.00000000040866687e-02, 8.80370370373022459e-01, 8.07002906055682314e-06},
    {9.96296296188041719e-02, 8.80370370373022459e-01, 1.00000000040866687e-02, 8.07002906055682314e-06},
    {8.80370370373022459e-01, 1.00000000040866687e-02, 1.00000000040866687e-02, 8.07002906055682314e-06},
    {8.80370370373022459e-01, 1.00000000040866687e-02, 9.96296296188041719e-02, 8.07002906055682314e-06},
    {8.80370370373022459e-01, 9.96296296188041719e-02, 1.00000000040866687e-02, 8.07002906055682314e-06},
    {1.00000000033243965e-02, 1.00000000033243965e-02, 2.99999999906668258e-02, 2.72656781069799685e-05},
    {1.00000000033243965e-02, 1.00000000033243965e-02, 9.50000000002684364e-01, 2.72656781069799685e-05},
    {1.00000000033243965e-02, 2.99999999906668258e-02, 1.00000000033243965e-02, 2.72656781069799685e-05},
    {1.00000000033243965e-02, 2.99999999906668258e-02, 9.50000000002684364e-01, 2.72656781069799685e-05},
    {1.00000000033243965e-02, 9.50000000002684364e-01, 1.00000000033243965e-02, 2.72656781069799685e-05},
    {1.00000000033243965e-02, 9.50000000002684364e-01, 2.99999999906668258e-02, 2.72656781069799685e-05},
    {2.99999999906668258e-02, 1.00000000033243965e-02, 1.00000000033243965e-02, 2.72656781069799685e-05},
    {2.99999999906668258e-02, 1.00000000033243965e-02, 9.50000000002684364e-01, 2.72656781069799685e-05},
    {2.99999999906668258e-02, 9.50000000002684364e-01, 1.00000000033243965e-02, 2.72656781069799685e-05},
    {9.50000000002684364e-01, 1.00000000033243965e-02, 1.00000000033243965e-02, 2.72656781069799685e-05},
    {9.50000000002684364e-01, 1.00000000033243965e-02, 2.99999999906668258e-02, 2.72656781069799685e-05},
    {9.50000000002684364e-01, 2.99999999906668258e-02, 1.00000000033243965e-02, 2.72656781069799685e-05},
    {1.66013732690732108e-01, 1.70503822315041242e-01, 1.71043538117585742e-01, 7.13537165128474028e-04},
    {1.66013732690732108e-01, 1.70503822315041242e-01, 4.92438906876640936e-01, 7.13537165128474028e-04},
    {1.66013732690732108e-01, 1.71043538117585742e-01, 1.70503822315041242e-01, 7.13537165128474028e-04},
    {1.66013732690732108e-01, 1.71043538117585742e-01, 4.92438906876640936e-01, 7.13537165128474028e-04},
    {1.66013732690732108e-01, 4.92438906876640936e-01, 1.70503822315041242e-01, 7.13537165128474028e-04},
    {1.66013732690732108e-01, 4.92438906876640936e-01, 1.71043538117585742e-01, 7.13537165128474028e-04},
    {1.70503822315041242e-01, 1.66013732690732108e-01, 1.71043538117585742e-01, 7.13537165128474028e-04},
    {1.70503822315041242e-01, 1.66013732690732108e-01, 4.92438906876640936e-01, 7.13537165128474028e-04},
    {1.70503822315041242e-01, 1.71043538117585742e-01, 1.66013732690732108e-01, 7.13537165128474028e-04},
    {1.70503822315041242e-01, 1.71043538117585742e-01, 4.92438906876640936e-01, 7.13537165128474028e-04},
    {1.70503822315041242e-01, 4.92438906876640936e-01, 1.66013732690732108e-01, 7.13537165128474028e-04},
    {1.70503822315041242e-01, 4.92438906876640936e-01, 1.71043538117585742e-01, 7.13537165128474028e-04},
    {1.71043538117585742e-01, 1.66013732690732108e-01, 1.70503822315041242e-01, 7.13537165128474028e-04},
    {1.71043538117585742e-01, 1.66013732690732108e-01, 4.92438906876640936e-01, 7.13537165128474028e-04},
    {1.71043538117585742e-01, 1.70503822315041242e-01, 1.66013732690732108e-01, 7.13537165128474028e-04},
    {1.71043538117585742e-01, 1.70503822315041242e-01, 4.92438906876640936e-01, 7.13537165128474028e-04},
    {1.71043538117585742e-01, 4.92438906876640936e-01, 1.66013732690732108e-01, 7.13537165128474028e-04},
    {1.71043538117585742e-01, 4.92438906876640936e-01, 1.70503822315041242e-01, 7.13537165128474028e-04},
    {4.92438906876640936e-01, 1.66013732690732108e-01, 1.70503822315041242e-01, 7.13537165128474028e-04},
    {4.92438906876640936e-01, 1.66013732690732108e-01, 1.71043538117585742e-01, 7.13537165128474028e-04},
    {4.92438906876640936e-01, 1.70503822315041242e-01, 1.66013732690732108e-01, 7.13537165128474028e-04},
    {4.92438906876640936e-01, 1.70503822315041242e-01, 1.71043538117585742e-01, 7.13537165128474028e-04},
    {4.92438906876640936e-01, 1.71043538117585742e-01, 1.66013732690732108e-01, 7.13537165128474028e-04},
    {4.92438906876640936e-01, 1.71043538117585742e-01, 1.70503822315041242e-01, 7.13537165128474028e-04},
    {2.34338629710821172e-02, 1.81138543624151105e-01, 1.82647354504324844e-01, 9.15920580590786032e-04},
    {2.34338629710821172e-02, 1.81138543624151105e-01, 6.12780238900441976e-01, 9.15920580590786032e-04},
    {2.34338629710821172e-02, 1.82647354504324844e-01, 1.81138543624151105e-01, 9.15920580590786032e-04},
    {2.34338629710821172e-02, 1.82647354504324844e-01, 6.12780238900441976e-01, 9.15920580590786032e-04},
    {2.34338629710821172e-02, 6.12780238900441976e-01, 1.81138543624151105e-01, 9.15920580590786032e-04},
    {2.34338629710821172e-02, 6.12780238900441976e-01, 1.82647354504324844e-01, 9.15920580590786032e-04},
    {1.81138543624151105e-01, 2.34338629710821172e-02, 1.82647354504324844e-01, 9.15920580590786032e-04},
    {1.81138543624151105e-01, 2.34338629710821172e-02, 6.12780238900441976e-01, 9.15920580590786032e-04},
    {1.81138543624151105e-01, 1.82647354504324844e-01, 2.34338629710821172e-02, 9.15920580590786032e-04},
    {1.81138543624151105e-01, 1.82647354504324844e-01, 6.12780238900441976e-01, 9.15920580590786032e-04},
    {1.81138543624151105e-01, 6.12780238900441976e-01, 2.34338629710821172e-02, 9.15920580590786032e-04},
    {1.81138543624151105e-01, 6.12780238900441976e-01, 1.82647354504324844e-01, 9.15920580590786032e-04},
    {1.82647354504324844e-01, 2.34338629710821172e-02, 1.81138543624151105e-01, 9.15920580590786032e-04},
    {1.82647354504324844e-01, 2.34338629710821172e-02, 6.12780238900441976e-01, 9.15920580590786032e-04},
    {1.82647354504324844e-01, 1.81138543624151105e-01, 2.34338629710821172e-02, 9.15920580590786032e-04},
    {1.82647354504324844e-01, 1.81138543624151105e-01, 6.12780238900441976e-01, 9.15920580590786032e-04},
    {1.82647354504324844e-01, 6.12780238900441976e-01, 2.34338629710821172e-02, 9.15920580590786032e-04},
    {1.82647354504324844e-01, 6.12780238900441976e-01, 1.81138543624151105e-01, 9.15920580590786032e-04},
    {6.12780238900441976e-01, 2.34338629710821172e-02, 1.81138543624151105e-01, 9.15920580590786032e-04},
    {6.12780238900441976e-01, 2.34338629710821172e-02, 1.82647354504324844e-01, 9.15920580590786032e-04},
    {6.12780238900441976e-01, 1.81138543624151105e-01, 2.34338629710821172e-02, 9.15920580590786032e-04},
    {6.12780238900441976e-01, 1.81138543624151105e-01, 1.82647354504324844e-01, 9.15920580590786032e-04},
    {6.12780238900441976e-01, 1.82647354504324844e-01, 2.34338629710821172e-02, 9.15920580590786032e-04},
    {6.12780238900441976e-01, 1.82647354504324844e-01, 1.81138543624151105e-01, 9.15920580590786032e-04},
    {1.18822658646333928e-01, 1.20585383198155247e-01, 3.63776718569588542e-01, 9.85672907405513296e-04},
    {1.18822658646333928e-01, 1.20585383198155247e-01, 3.96815239585922241e-01, 9.85672907405513296e-04},
    {1.18822658646333928e-01, 3.63776718569588542e-01, 1.20585383198155247e-01, 9.85672907405513296e-04},
    {1.18822658646333928e-01, 3.63776718569588542e-01, 3.96815239585922241e-01, 9.85672907405513296e-04},
    {1.18822658646333928e-01, 3.96815239585922241e-01, 1.20585383198155247e-01, 9.85672907405513296e-04},
    {1.18822658646333928e-01, 3.96815239585922241e-01, 3.63776718569588542e-01, 9.85672907405513296e-04},
    {1.20585383198155247e-01, 1.18822658646333928e-01, 3.63776718569588542e-01, 9.85672907405513296e-04},
    {1.20585383198155247e-01, 1.18822658646333928e-01, 3.96815239585922241e-01, 9.85672907405513296e-04},
    {1.20585383198155247e-01, 3.63776718569588542e-01, 1.18822658646333928e-01, 9.85672907405513296e-04},
    {1.20585383198155247e-01, 3.63776718569588542e-01, 3.96815239585922241e-01, 9.85672907405513296e-04},
    {1.20585383198155247e-01, 3.96815239585922241e-01, 1.18822658646333928e-01, 9.85672907405513296e-04},
    {1.20585383198155247e-01, 3.96815239585922241e-01, 3.63776718569588542e-01, 9.85672907405513296e-04},
    {3.63776718569588542e-01, 1.18822658646333928e-01, 1.20585383198155247e-01, 9.85672907405513296e-04},
    {3.63776718569588542e-01, 1.18822658646333928e-01, 3.96815239585922241e-01, 9.85672907405513296e-04},
    {3.63776718569588542e-01, 1.20585383198155247e-01, 1.18822658646333928e-01, 9.85672907405513296e-04},
    {3.63776718569588542e-01, 1.20585383198155247e-01, 3.96815239585922241e-01, 9.85672907405513296e-04},
    {3.63776718569588542e-01, 3.96815239585922241e-01, 1.18822658646333928e-01, 9.85672907405513296e-04},
    {3.63776718569588542e-01, 3.96815239585922241e-01, 1.20585383198155247e-01, 9.85672907405513296e-04},
    {3.96815239585922241e-01, 1.18822658646333928e-01, 1.20585383198155247e-01, 9.85672907405513296e-04},
    {3.96815239585922241e-01, 1.18822658646333928e-01, 3.63776718569588542e-01, 9.85672907405513296e-04},
    {3.96815239585922241e-01, 1.20585383198155247e-01, 1.18822658646333928e-01, 9.85672907405513296e-04},
    {3.96815239585922241e-01, 1.20585383198155247e-01, 3.63776718569588542e-01, 9.85672907405513296e-04},
    {3.96815239585922241e-01, 3.63776718569588542e-01, 1.18822658646333928e-01, 9.85672907405513296e-04},
    {3.96815239585922241e-01, 3.63776718569588542e-01, 1.20585383198155247e-01, 9.85672907405513296e-04},
    {1.00359231174963932e-02, 2.90418589058936139e-01, 3.02034331513852783e-01, 1.22462716076803614e-04},
    {1.00359231174963932e-02, 2.90418589058936139e-01, 3.97511156309714730e-01, 1.22462716076803614e-04},
    {1.00359231174963932e-02, 3.02034331513852783e-01, 2.90418589058936139e-01, 1.22462716076803614e-04},
    {1.00359231174963932e-02, 3.02034331513852783e-01, 3.97511156309714730e-01, 1.22462716076803614e-04},
    {1.00359231174963932e-02, 3.97511156309714730e-01, 2.90418589058936139e-01, 1.22462716076803614e-04},
    {1.00359231174963932e-02, 3.97511156309714730e-01, 3.02034331513852783e-01, 1.22462716076803614e-04},
    {2.90418589058936139e-01, 1.00359231174963932e-02, 3.02034331513852783e-01, 1.22462716076803614e-04},
    {2.90418589058936139e-01, 1.00359231174963932e-02, 3.97511156309714730e-01, 1.22462716076803614e-04},
    {2.90418589058936139e-01, 3.02034331513852783e-01, 1.00359231174963932e-02, 1.22462716076803614e-04},
    {2.90418589058936139e-01, 3.02034331513852783e-01, 3.97511156309714730e-01, 1.22462716076803614e-04},
    {2.90418589058936139e-01, 3.97511156309714730e-01, 1.00359231174963932e-02, 1.22462716076803614e-04},
    {2.90418589058936139e-01, 3.97511156309714730e-01, 3.02034331513852783e-01, 1.22462716076803614e-04},
    {3.02034331513852783e-01, 1.00359231174963932e-02, 2.90418589058936139e-01, 1.22462716076803614e-04},
    {3.02034331513852783e-01, 1.00359231174963932e-02, 3.97511156309714730e-01, 1.22462716076803614e-04},
    {3.02034331513852783e-01, 2.90418589058936139e-01, 1.00359231174963932e-02, 1.22462716076803614e-04},
    {3.02034331513852783e-01, 2.90418589058936139e-01, 3.97511156309714730e-01, 1.22462716076803614e-04},
    {3.02034331513852783e-01, 3.97511156309714730e-01, 1.00359231174963932e-02, 1.22462716076803614e-04},
    {3.02034331513852783e-01, 3.97511156309714730e-01, 2.90418589058936139e-01, 1.22462716076803614e-04},
    {3.97511156309714730e-01, 1.00359231174963932e-02, 2.90418589058936139e-01, 1.22462716076803614e-04},
    {3.97511156309714730e-01, 1.00359231174963932e-02, 3.02034331513852783e-01, 1.22462716076803614e-04},
    {3.97511156309714730e-01, 2.90418589058936139e-01, 1.00359231174963932e-02, 1.22462716076803614e-04},
    {3.97511156309714730e-01, 2.90418589058936139e-01, 3.02034331513852783e-01, 1.22462716076803614e-04},
    {3.97511156309714730e-01, 3.02034331513852783e-01, 1.00359231174963932e-02, 1.22462716076803614e-04},
    {3.97511156309714730e-01, 3.02034331513852783e-01, 2.90418589058936139e-01, 1.22462716076803614e-04},
    {1.18092878829233222e-01, 1.29716971451151269e-01, 1.34229436614530545e-01, 2.94093866231982131e-04},
    {1.18092878829233222e-01, 1.29716971451151269e-01, 6.17960713105084936e-01, 2.94093866231982131e-04},
    {1.18092878829233222e-01, 1.34229436614530545e-01, 1.29716971451151269e-01, 2.94093866231982131e-04},
    {1.18092878829233222e-01, 1.34229436614530545e-01, 6.17960713105084936e-01, 2.94093866231982131e-04},
    {1.18092878829233222e-01, 6.17960713105084936e-01, 1.29716971451151269e-01, 2.94093866231982131e-04},
    {1.18092878829233222e-01, 6.17960713105084936e-01, 1.34229436614530545e-01, 2.94093866231982131e-04},
    {1.29716971451151269e-01, 1.18092878829233222e-01, 1.34229436614530545e-01, 2.94093866231982131e-04},
    {1.29716971451151269e-01, 1.18092878829233222e-01, 6.17960713105084936e-01, 2.94093866231982131e-04},
    {1.29716971451151269e-01, 1.34229436614530545e-01, 1.18092878829233222e-01, 2.94093866231982131e-04},
    {1.29716971451151269e-01, 1.34229436614530545e-01, 6.17960713105084936e-01, 2.94093866231982131e-04},
    {1.29716971451151269e-01, 6.17960713105084936e-01, 1.18092878829233222e-01, 2.94093866231982131e-04},
    {1.29716971451151269e-01, 6.17960713105084936e-01, 1.34229436614530545e-01, 2.94093866231982131e-04},
    {1.34229436614530545e-01, 1.18092878829233222e-01, 1.29716971451151269e-01, 2.94093866231982131e-04},
    {1.34229436614530545e-01, 1.18092878829233222e-01, 6.17960713105084936e-01, 2.94093866231982131e-04},
    {1.34229436614530545e-01, 1.29716971451151269e-01, 1.18092878829233222e-01, 2.94093866231982131e-04},
    {1.34229436614530545e-01, 1.29716971451151269e-01, 6.17960713105084936e-01, 2.94093866231982131e-04},
    {1.34229436614530545e-01, 6.17960713105084936e-01, 1.18092878829233222e-01, 2.94093866231982131e-04},
    {1.34229436614530545e-01, 6.17960713105084936e-01, 1.29716971451151269e-01, 2.94093866231982131e-04},
    {6.17960713105084936e-01, 1.18092878829233222e-01, 1.29716971451151269e-01, 2.94093866231982131e-04},
    {6.17960713105084936e-01, 1.18092878829233222e-01, 1.34229436614530545e-01, 2.94093866231982131e-04},
    {6.17960713105084936e-01, 1.29716971451151269e-01, 1.18092878829233222e-01, 2.94093866231982131e-04},
    {6.17960713105084936e-01, 1.29716971451151269e-01, 1.34229436614530545e-01, 2.94093866231982131e-04},
    {6.17960713105084936e-01, 1.34229436614530545e-01, 1.18092878829233222e-01, 2.94093866231982131e-04},
    {6.17960713105084936e-01, 1.34229436614530545e-01, 1.29716971451151269e-01, 2.94093866231982131e-04},
    {5.60194177606027632e-02, 5.90196744106426877e-02, 1.68376198653861775e-01, 2.56596543933964596e-04},
    {5.60194177606027632e-02, 5.90196744106426877e-02, 7.16584709174892698e-01, 2.56596543933964596e-04},
    {5.60194177606027632e-02, 1.68376198653861775e-01, 5.90196744106426877e-02, 2.56596543933964596e-04},
    {5.60194177606027632e-02, 1.68376198653861775e-01, 7.16584709174892698e-01, 2.56596543933964596e-04},
    {5.60194177606027632e-02, 7.16584709174892698e-01, 5.90196744106426877e-02, 2.56596543933964596e-04},
    {5.60194177606027632e-02, 7.16584709174892698e-01, 1.68376198653861775e-01, 2.56596543933964596e-04},
    {5.90196744106426877e-02, 5.60194177606027632e-02, 1.68376198653861775e-01, 2.56596543933964596e-04},
    {5.90196744106426877e-02, 5.60194177606027632e-02, 7.16584709174892698e-01, 2.56596543933964596e-04},
    {5.90196744106426877e-02, 1.68376198653861775e-01, 5.60194177606027632e-02, 2.56596543933964596e-04},
    {5.90196744106426877e-02, 1.68376198653861775e-01, 7.16584709174892698e-01, 2.56596543933964596e-04},
    {5.90196744106426877e-02, 7.16584709174892698e-01, 5.60194177606027632e-02, 2.56596543933964596e-04},
    {5.90196744106426877e-02, 7.16584709174892698e-01, 1.68376198653861775e-01, 2.56596543933964596e-04},
    {1.68376198653861775e-01, 5.60194177606027632e-02, 5.90196744106426877e-02, 2.56596543933964596e-04},
    {1.68376198653861775e-01, 5.60194177606027632e-02, 7.16584709174892698e-01, 2.56596543933964596e-04},
    {1.68376198653861775e-01, 5.90196744106426877e-02, 5.60194177606027632e-02, 2.56596543933964596e-04},
    {1.68376198653861775e-01, 5.90196744106426877e-02, 7.16584709174892698e-01, 2.56596543933964596e-04},
    {1.68376198653861775e-01, 7.16584709174892698e-01, 5.60194177606027632e-02, 2.56596543933964596e-04},
    {1.68376198653861775e-01, 7.16584709174892698e-01, 5.90196744106426877e-02, 2.56596543933964596e-04},
    {7.16584709174892698e-01, 5.60194177606027632e-02, 5.90196744106426877e-02, 2.56596543933964596e-04},
    {7.16584709174892698e-01, 5.60194177606027632e-02, 1.68376198653861775e-01, 2.56596543933964596e-04},
    {7.16584709174892698e-01, 5.90196744106426877e-02, 5.60194177606027632e-02, 2.56596543933964596e-04},
    {7.16584709174892698e-01, 5.90196744106426877e-02, 1.68376198653861775e-01, 2.56596543933964596e-04},
    {7.16584709174892698e-01, 1.68376198653861775e-01, 5.60194177606027632e-02, 2.56596543933964596e-04},
    {7.16584709174892698e-01, 1.68376198653861775e-01, 5.90196744106426877e-02, 2.56596543933964596e-04},
    {1.90199448504684461e-02, 5.67022481285553437e-02, 1.06250275357602716e-01, 2.29715103058173830e-04},
    {1.90199448504684461e-02, 5.67022481285553437e-02, 8.18027531663373608e-01, 2.29715103058173830e-04},
    {1.90199448504684461e-02, 1.06250275357602716e-01, 5.67022481285553437e-02, 2.29715103058173830e-04},
    {1.90199448504684461e-02, 1.06250275357602716e-01, 8.18027531663373608e-01, 2.29715103058173830e-04},
    {1.90199448504684461e-02, 8.18027531663373608e-01, 5.67022481285553437e-02, 2.29715103058173830e-04},
    {1.90199448504684461e-02, 8.18027531663373608e-01, 1.06250275357602716e-01, 2.29715103058173830e-04},
    {5.67022481285553437e-02, 1.90199448504684461e-02, 1.06250275357602716e-01, 2.29715103058173830e-04},
    {5.67022481285553437e-02, 1.90199448504684461e-02, 8.18027531663373608e-01, 2.29715103058173830e-04},
    {5.67022481285553437e-02, 1.06250275357602716e-01, 1.90199448504684461e-02, 2.29715103058173830e-04},
    {5.67022481285553437e-02, 1.06250275357602716e-01, 8.18027531663373608e-01, 2.29715103058173830e-04},
    {5.67022481285553437e-02, 8.18027531663373608e-01, 1.90199448504684461e-02, 2.29715103058173830e-04},
    {5.67022481285553437e-02, 8.18027531663373608e-01, 1.06250275357602716e-01, 2.29715103058173830e-04},
    {1.06250275357602716e-01, 1.90199448504684461e-02, 5.67022481285553437e-02, 2.29715103058173830e-04},
    {1.06250275357602716e-01, 1.90199448504684461e-02, 8.18027531663373608e-01, 2.29715103058173830e-04},
    {1.06250275357602716e-01, 5.67022481285553437e-02, 1.90199448504684461e-02, 2.29715103058173830e-04},
    {1.06250275357602716e-01, 5.67022481285553437e-02, 8.18027531663373608e-01, 2.29715103058173830e-04},
    {1.06250275357602716e-01, 8.18027531663373608e-01, 1.90199448504684461e-02, 2.29715103058173830e-04},
    {1.06250275357602716e-01, 8.18027531663373608e-01, 5.67022481285553437e-02, 2.29715103058173830e-04},
    {8.18027531663373608e-01, 1.90199448504684461e-02, 5.67022481285553437e-02, 2.29715103058173830e-04},
    {8.18027531663373608e-01, 1.90199448504684461e-02, 1.06250275357602716e-01, 2.29715103058173830e-04},
    {8.18027531663373608e-01, 5.67022481285553437e-02, 1.90199448504684461e-02, 2.29715103058173830e-04},
    {8.18027531663373608e-01, 5.67022481285553437e-02, 1.06250275357602716e-01, 2.29715103058173830e-04},
    {8.18027531663373608e-01, 1.06250275357602716e-01, 1.90199448504684461e-02, 2.29715103058173830e-04},
    {8.18027531663373608e-01, 1.06250275357602716e-01, 5.67022481285553437e-02, 2.29715103058173830e-04},
    {2.23945947002089557e-01, 2.37085390273870822e-01, 2.50223071773773398e-01, 2.93140066552052228e-04},
    {2.23945947002089557e-01, 2.37085390273870822e-01, 2.88745590950266140e-01, 2.93140066552052228e-04},
    {2.23945947002089557e-01, 2.50223071773773398e-01, 2.37085390273870822e-01, 2.93140066552052228e-04},
    {2.23945947002089557e-01, 2.50223071773773398e-01, 2.88745590950266140e-01, 2.93140066552052228e-04},
    {2.23945947002089557e-01, 2.88745590950266140e-01, 2.37085390273870822e-01, 2.93140066552052228e-04},
    {2.23945947002089557e-01, 2.88745590950266140e-01, 2.50223071773773398e-01, 2.93140066552052228e-04},
    {2.37085390273870822e-01, 2.23945947002089557e-01, 2.50223071773773398e-01, 2.93140066552052228e-04},
    {2.37085390273870822e-01, 2.23945947002089557e-01, 2.88745590950266140e-01, 2.93140066552052228e-04},
    {2.37085390273870822e-01, 2.50223071773773398e-01, 2.23945947002089557e-01, 2.93140066552052228e-04},
    {2.37085390273870822e-01, 2.50223071773773398e-01, 2.88745590950266140e-01, 2.93140066552052228e-04},
    {2.37085390273870822e-01, 2.88745590950266140e-01, 2.23945947002089557e-01, 2.93140066552052228e-04},
    {2.37085390273870822e-01, 2.88745590950266140e-01, 2.50223071773773398e-01, 2.93140066552052228e-04},
    {2.50223071773773398e-01, 2.23945947002089557e-01, 2.37085390273870822e-01, 2.93140066552052228e-04},
    {2.50223071773773398e-01, 2.23945947002089557e-01, 2.88745590950266140e-01, 2.93140066552052228e-04},
    {2.50223071773773398e-01, 2.37085390273870822e-01, 2.23945947002089557e-01, 2.93140066552052228e-04},
    {2.50223071773773398e-01, 2.37085390273870822e-01, 2.88745590950266140e-01, 2.93140066552052228e-04},
    {2.50223071773773398e-01, 2.88745590950266140e-01, 2.23945947002089557e-01, 2.93140066552052228e-04},
    {2.50223071773773398e-01, 2.88745590950266140e-01, 2.37085390273870822e-01, 2.93140066552052228e-04},
    {2.88745590950266140e-01, 2.23945947002089557e-01, 2.37085390273870822e-01, 2.93140066552052228e-04},
    {2.88745590950266140e-01, 2.23945947002089557e-01, 2.50223071773773398e-01, 2.93140066552052228e-04},
    {2.88745590950266140e-01, 2.37085390273870822e-01, 2.23945947002089557e-01, 2.93140066552052228e-04},
    {2.88745590950266140e-01, 2.37085390273870822e-01, 2.50223071773773398e-01, 2.93140066552052228e-04},
    {2.88745590950266140e-01, 2.50223071773773398e-01, 2.23945947002089557e-01, 2.93140066552052228e-04},
    {2.88745590950266140e-01, 2.50223071773773398e-01, 2.37085390273870822e-01, 2.93140066552052228e-04},
    {1.21504085976274420e-02, 3.24830058481890352e-02, 1.84753785234438084e-01, 1.79315430137689478e-04},
    {1.21504085976274420e-02, 3.24830058481890352e-02, 7.70612800319745439e-01, 1.79315430137689478e-04},
    {1.21504085976274420e-02, 1.84753785234438084e-01, 3.24830058481890352e-02, 1.79315430137689478e-04},
    {1.21504085976274420e-02, 1.84753785234438084e-01, 7.70612800319745439e-01, 1.79315430137689478e-04},
    {1.21504085976274420e-02, 7.70612800319745439e-01, 3.24830058481890352e-02, 1.79315430137689478e-04},
    {1.21504085976274420e-02, 7.70612800319745439e-01, 1.84753785234438084e-01, 1.79315430137689478e-04},
    {3.24830058481890352e-02, 1.21504085976274420e-02, 1.84753785234438084e-01, 1.79315430137689478e-04},
    {3.24830058481890352e-02, 1.21504085976274420e-02, 7.70612800319745439e-01, 1.79315430137689478e-04},
    {3.24830058481890352e-02, 1.84753785234438084e-01, 1.21504085976274420e-02, 1.79315430137689478e-04},
    {3.24830058481890352e-02, 1.84753785234438084e-01, 7.70612800319745439e-01, 1.79315430137689478e-04},
    {3.24830058481890352e-02, 7.70612800319745439e-01, 1.21504085976274420e-02, 1.79315430137689478e-04},
    {3.24830058481890352e-02, 7.70612800319745439e-01, 1.84753785234438084e-01, 1.79315430137689478e-04},
    {1.84753785234438084e-01, 1.21504085976274420e-02, 3.24830058481890352e-02, 1.79315430137689478e-04},
    {1.84753785234438084e-01, 1.21504085976274420e-02, 7.70612800319745439e-01, 1.79315430137689478e-04},
    {1.84753785234438084e-01, 3.24830058481890352e-02, 1.21504085976274420e-02, 1.79315430137689478e-04},
    {1.84753785234438084e-01, 3.24830058481890352e-02, 7.70612800319745439e-01, 1.79315430137689478e-04},
    {1.84753785234438084e-01, 7.70612800319745439e-01, 1.21504085976274420e-02, 1.79315430137689478e-04},
    {1.84753785234438084e-01, 7.70612800319745439e-01, 3.24830058481890352e-02, 1.79315430137689478e-04},
    {7.70612800319745439e-01, 1.21504085976274420e-02, 3.24830058481890352e-02, 1.79315430137689478e-04},
    {7.70612800319745439e-01, 1.21504085976274420e-02, 1.84753785234438084e-01, 1.79315430137689478e-04},
    {7.70612800319745439e-01, 3.24830058481890352e-02, 1.21504085976274420e-02, 1.79315430137689478e-04},
    {7.70612800319745439e-01, 3.24830058481890352e-02, 1.84753785234438084e-01, 1.79315430137689478e-04},
    {7.70612800319745439e-01, 1.84753785234438084e-01, 1.21504085976274420e-02, 1.79315430137689478e-04},
    {7.70612800319745439e-01, 1.84753785234438084e-01, 3.24830058481890352e-02, 1.79315430137689478e-04},
    {6.56730165701850527e-02, 2.97452105317722093e-01, 3.00145903111658119e-01, 6.97850807930829628e-04},
    {6.56730165701850527e-02, 2.97452105317722093e-01, 3.36728975000434694e-01, 6.97850807930829628e-04},
    {6.56730165701850527e-02, 3.00145903111658119e-01, 2.97452105317722093e-01, 6.97850807930829628e-04},
    {6.56730165701850527e-02, 3.00145903111658119e-01, 3.36728975000434694e-01, 6.97850807930829628e-04},
    {6.56730165701850527e-02, 3.36728975000434694e-01, 2.97452105317722093e-01, 6.97850807930829628e-04},
    {6.56730165701850527e-02, 3.36728975000434694e-01, 3.00145903111658119e-01, 6.97850807930829628e-04},
    {2.97452105317722093e-01, 6.56730165701850527e-02, 3.00145903111658119e-01, 6.97850807930829628e-04},
    {2.97452105317722093e-01, 6.56730165701850527e-02, 3.36728975000434694e-01, 6.97850807930829628e-04},
    {2.97452105317722093e-01, 3.00145903111658119e-01, 6.56730165701850527e-02, 6.97850807930829628e-04},
    {2.97452105317722093e-01, 3.00145903111658119e-01, 3.36728975000434694e-01, 6.97850807930829628e-04},
    {2.97452105317722093e-01, 3.36728975000434694e-01, 6.56730165701850527e-02, 6.97850807930829628e-04},
    {2.97452105317722093e-01, 3.36728975000434694e-01, 3.00145903111658119e-01, 6.97850807930829628e-04},
    {3.00145903111658119e-01, 6.56730165701850527e-02, 2.97452105317722093e-01, 6.97850807930829628e-04},
    {3.00145903111658119e-01, 6.56730165701850527e-02, 3.36728975000434694e-01, 6.97850807930829628e-04},
    {3.00145903111658119e-01, 2.97452105317722093e-01, 6.56730165701850527e-02, 6.97850807930829628e-04},
    {3.00145903111658119e-01, 2.97452105317722093e-01, 3.36728975000434694e-01, 6.97850807930829628e-04},
    {3.00145903111658119e-01, 3.36728975000434694e-01, 6.56730165701850527e-02, 6.97850807930829628e-04},
    {3.00145903111658119e-01, 3.36728975000434694e-01, 2.97452105317722093e-01, 6.97850807930829628e-04},
    {3.36728975000434694e-01, 6.56730165701850527e-02, 2.97452105317722093e-01, 6.97850807930829628e-04},
    {3.36728975000434694e-01, 6.56730165701850527e-02, 3.00145903111658119e-01, 6.97850807930829628e-04},
    {3.36728975000434694e-01, 2.97452105317722093e-01, 6.56730165701850527e-02, 6.97850807930829628e-04},
    {3.36728975000434694e-01, 2.97452105317722093e-01, 3.00145903111658119e-01, 6.97850807930829628e-04},
    {3.36728975000434694e-01, 3.00145903111658119e-01, 6.56730165701850527e-02, 6.97850807930829628e-04},
    {3.36728975000434694e-01, 3.00145903111658119e-01, 2.97452105317722093e-01, 6.97850807930829628e-04},
    {1.99664051286395187e-02, 4.95979161576456384e-02, 5.03899790339175507e-02, 6.06223506816999975e-05},
    {1.99664051286395187e-02, 4.95979161576456384e-02, 8.80045699679797289e-01, 6.06223506816999975e-05},
    {1.99664051286395187e-02, 5.03899790339175507e-02, 4.95979161576456384e-02, 6.06223506816999975e-05},
    {1.99664051286395187e-02, 5.03899790339175507e-02, 8.80045699679797289e-01, 6.06223506816999975e-05},
    {1.99664051286395187e-02, 8.80045699679797289e-01, 4.95979161576456384e-02, 6.06223506816999975e-05},
    {1.99664051286395187e-02, 8.80045699679797289e-01, 5.03899790339175507e-02, 6.06223506816999975e-05},
    {4.95979161576456384e-02, 1.99664051286395187e-02, 5.03899790339175507e-02, 6.06223506816999975e-05},
    {4.95979161576456384e-02, 1.99664051286395187e-02, 8.80045699679797289e-01, 6.06223506816999975e-05},
    {4.95979161576456384e-02, 5.03899790339175507e-02, 1.99664051286395187e-02, 6.06223506816999975e-05},
    {4.95979161576456384e-02, 5.03899790339175507e-02, 8.80045699679797289e-01, 6.06223506816999975e-05},
    {4.95979161576456384e-02, 8.80045699679797289e-01, 1.99664051286395187e-02, 6.06223506816999975e-05},
    {4.95979161576456384e-02, 8.80045699679797289e-01, 5.03899790339175507e-02, 6.06223506816999975e-05},
    {5.03899790339175507e-02, 1.99664051286395187e-02, 4.95979161576456384e-02, 6.06223506816999975e-05},
    {5.03899790339175507e-02, 1.99664051286395187e-02, 8.80045699679797289e-01, 6.06223506816999975e-05},
    {5.03899790339175507e-02, 4.95979161576456384e-02, 1.99664051286395187e-02, 6.06223506816999975e-05},
    {5.03899790339175507e-02, 4.95979161576456384e-02, 8.80045699679797289e-01, 6.06223506816999975e-05},
    {5.03899790339175507e-02, 8.80045699679797289e-01, 1.99664051286395187e-02, 6.06223506816999975e-05},
    {5.03899790339175507e-02, 8.80045699679797289e-01, 4.95979161576456384e-02, 6.06223506816999975e-05},
    {8.80045699679797289e-01, 1.99664051286395187e-02, 4.95979161576456384e-02, 6.06223506816999975e-05},
    {8.80045699679797289e-01, 1.99664051286395187e-02, 5.03899790339175507e-02, 6.06223506816999975e-05},
    {8.80045699679797289e-01, 4.95979161576456384e-02, 1.99664051286395187e-02, 6.06223506816999975e-05},
    {8.80045699679797289e-01, 4.95979161576456384e-02, 5.03899790339175507e-02, 6.06223506816999975e-05},
    {8.80045699679797289e-01, 5.03899790339175507e-02, 1.99664051286395187e-02, 6.06223506816999975e-05},
    {8.80045699679797289e-01, 5.03899790339175507e-02, 4.95979161576456384e-02, 6.06223506816999975e-05},
    {3.54034110006516342e-02, 2.34815203026769864e-01, 2.36195623476400135e-01, 3.50056890951421808e-04},
    {3.54034110006516342e-02, 2.34815203026769864e-01, 4.93585762496178304e-01, 3.50056890951421808e-04},
    {3.54034110006516342e-02, 2.36195623476400135e-01, 2.34815203026769864e-01, 3.50056890951421808e-04},
    {3.54034110006516342e-02, 2.36195623476400135e-01, 4.93585762496178304e-01, 3.50056890951421808e-04},
    {3.54034110006516342e-02, 4.93585762496178304e-01, 2.34815203026769864e-01, 3.50056890951421808e-04},
    {3.54034110006516342e-02, 4.93585762496178304e-01, 2.36195623476400135e-01, 3.50056890951421808e-04},
    {2.34815203026769864e-01, 3.54034110006516342e-02, 2.36195623476400135e-01, 3.50056890951421808e-04},
    {2.34815203026769864e-01, 3.54034110006516342e-02, 4.93585762496178304e-01, 3.50056890951421808e-04},
    {2.34815203026769864e-01, 2.36195623476400135e-01, 3.54034110006516342e-02, 3.50056890951421808e-04},
    {2.34815203026769864e-01, 2.36195623476400135e-01, 4.93585762496178304e-01, 3.50056890951421808e-04},
    {2.34815203026769864e-01, 4.93585762496178304e-01, 3.54034110006516342e-02, 3.50056890951421808e-04},
    {2.34815203026769864e-01, 4.93585762496178304e-01, 2.36195623476400135e-01, 3.50056890951421808e-04},
    {2.36195623476400135e-01, 3.54034110006516342e-02, 2.34815203026769864e-01, 3.50056890951421808e-04},
    {2.36195623476400135e-01, 3.54034110006516342e-02, 4.93585762496178304e-01, 3.50056890951421808e-04},
    {2.36195623476400135e-01, 2.34815203026769864e-01, 3.54034110006516342e-02, 3.50056890951421808e-04},
    {2.36195623476400135e-01, 2.34815203026769864e-01, 4.93585762496178304e-01, 3.50056890951421808e-04},
    {2.36195623476400135e-01, 4.93585762496178304e-01, 3.54034110006516342e-02, 3.50056890951421808e-04},
    {2.36195623476400135e-01, 4.93585762496178304e-01, 2.34815203026769864e-01, 3.50056890951421808e-04},
    {4.93585762496178304e-01, 3.54034110006516342e-02, 2.34815203026769864e-01, 3.50056890951421808e-04},
    {4.93585762496178304e-01, 3.54034110006516342e-02, 2.36195623476400135e-01, 3.50056890951421808e-04},
    {4.93585762496178304e-01, 2.34815203026769864e-01, 3.54034110006516342e-02, 3.50056890951421808e-04},
    {4.93585762496178304e-01, 2.34815203026769864e-01, 2.36195623476400135e-01, 3.50056890951421808e-04},
    {4.93585762496178304e-01, 2.36195623476400135e-01, 3.54034110006516342e-02, 3.50056890951421808e-04},
    {4.93585762496178304e-01, 2.36195623476400135e-01, 2.34815203026769864e-01, 3.50056890951421808e-04},
    {5.43434972486099496e-02, 8.15311405256594901e-02, 4.18478642931393252e-01, 2.17277618494425963e-04},
    {5.43434972486099496e-02, 8.15311405256594901e-02, 4.45646719294337301e-01, 2.17277618494425963e-04},
    {5.43434972486099496e-02, 4.18478642931393252e-01, 8.15311405256594901e-02, 2.17277618494425963e-04},
    {5.43434972486099496e-02, 4.18478642931393252e-01, 4.45646719294337301e-01, 2.17277618494425963e-04},
    {5.43434972486099496e-02, 4.45646719294337301e-01, 8.15311405256594901e-02, 2.17277618494425963e-04},
    {5.43434972486099496e-02, 4.45646719294337301e-01, 4.18478642931393252e-01, 2.17277618494425963e-04},
    {8.15311405256594901e-02, 5.43434972486099496e-02, 4.18478642931393252e-01, 2.17277618494425963e-04},
    {8.15311405256594901e-02, 5.43434972486099496e-02, 4.45646719294337301e-01, 2.17277618494425963e-04},
    {8.15311405256594901e-02, 4.18478642931393252e-01, 5.43434972486099496e-02, 2.17277618494425963e-04},
    {8.15311405256594901e-02, 4.18478642931393252e-01, 4.45646719294337301e-01, 2.17277618494425963e-04},
    {8.15311405256594901e-02, 4.45646719294337301e-01, 5.43434972486099496e-02, 2.17277618494425963e-04},
    {8.15311405256594901e-02, 4.45646719294337301e-01, 4.18478642931393252e-01, 2.17277618494425963e-04},
    {4.18478642931393252e-01, 5.43434972486099496e-02, 8.15311405256594901e-02, 2.17277618494425963e-04},
    {4.18478642931393252e-01, 5.43434972486099496e-02, 4.45646719294337301e-01, 2.17277618494425963e-04},
    {4.18478642931393252e-01, 8.15311405256594901e-02, 5.43434972486099496e-02, 2.17277618494425963e-04},
    {4.18478642931393252e-01, 8.15311405256594901e-02, 4.45646719294337301e-01, 2.17277618494425963e-04},
    {4.18478642931393252e-01, 4.45646719294337301e-01, 5.43434972486099496e-02, 2.17277618494425963e-04},
    {4.18478642931393252e-01, 4.45646719294337301e-01, 8.15311405256594901e-02, 2.17277618494425963e-04},
    {4.45646719294337301e-01, 5.43434972486099496e-02, 8.15311405256594901e-02, 2.17277618494425963e-04},
    {4.45646719294337301e-01, 5.43434972486099496e-02, 4.18478642931393252e-01, 2.17277618494425963e-04},
    {4.45646719294337301e-01, 8.15311405256594901e-02, 5.43434972486099496e-02, 2.17277618494425963e-04},
    {4.45646719294337301e-01, 8.15311405256594901e-02, 4.18478642931393252e-01, 2.17277618494425963e-04},
    {4.45646719294337301e-01, 4.18478642931393252e-01, 5.43434972486099496e-02, 2.17277618494425963e-04},
    {4.45646719294337301e-01, 4.18478642931393252e-01, 8.15311405256594901e-02, 2.17277618494425963e-04},
    {3.33033851532483632e-02, 5.06824028197784132e-02, 2.90463071006219598e-01, 7.41068453493529513e-04},
    {3.33033851532483632e-02, 5.06824028197784132e-02, 6.25551141020753598e-01, 7.41068453493529513e-04},
    {3.33033851532483632e-02, 2.90463071006219598e-01, 5.06824028197784132e-02, 7.41068453493529513e-04},
    {3.33033851532483632e-02, 2.90463071006219598e-01, 6.25551141020753598e-01, 7.41068453493529513e-04},
    {3.33033851532483632e-02, 6.25551141020753598e-01, 5.06824028197784132e-02, 7.41068453493529513e-04},
    {3.33033851532483632e-02, 6.25551141020753598e-01, 2.90463071006219598e-01, 7.41068453493529513e-04},
    {5.06824028197784132e-02, 3.33033851532483632e-02, 2.90463071006219598e-01, 7.41068453493529513e-04},
    {5.06824028197784132e-02, 3.33033851532483632e-02, 6.25551141020753598e-01, 7.41068453493529513e-04},
    {5.06824028197784132e-02, 2.90463071006219598e-01, 3.33033851532483632e-02, 7.41068453493529513e-04},
    {5.06824028197784132e-02, 2.90463071006219598e-01, 6.25551141020753598e-01, 7.41068453493529513e-04},
    {5.06824028197784132e-02, 6.25551141020753598e-01, 3.33033851532483632e-02, 7.41068453493529513e-04},
    {5.06824028197784132e-02, 6.25551141020753598e-01, 2.90463071006219598e-01, 7.41068453493529513e-04},
    {2.90463071006219598e-01, 3.33033851532483632e-02, 5.06824028197784132e-02, 7.41068453493529513e-04},
    {2.90463071006219598e-01, 3.33033851532483632e-02, 6.25551141020753598e-01, 7.41068453493529513e-04},
    {2.90463071006219598e-01, 5.06824028197784132e-02, 3.33033851532483632e-02, 7.41068453493529513e-04},
    {2.90463071006219598e-01, 5.06824028197784132e-02, 6.25551141020753598e-01, 7.41068453493529513e-04},
    {2.90463071006219598e-01, 6.25551141020753598e-01, 3.33033851532483632e-02, 7.41068453493529513e-04},
    {2.90463071006219598e-01, 6.25551141020753598e-01, 5.06824028197784132e-02, 7.41068453493529513e-04},
    {6.25551141020753598e-01, 3.33033851532483632e-02, 5.06824028197784132e-02, 7.41068453493529513e-04},
    {6.25551141020753598e-01, 3.33033851532483632e-02, 2.90463071006219598e-01, 7.41068453493529513e-04},
    {6.25551141020753598e-01, 5.06824028197784132e-02, 3.33033851532483632e-02, 7.41068453493529513e-04},
    {6.25551141020753598e-01, 5.06824028197784132e-02, 2.90463071006219598e-01, 7.41068453493529513e-04},
    {6.25551141020753598e-01, 2.90463071006219598e-01, 3.33033851532483632e-02, 7.41068453493529513e-04},
    {6.25551141020753598e-01, 2.90463071006219598e-01, 5.06824028197784132e-02, 7.41068453493529513e-04},
    {1.51297205038968506e-02, 1.39085794361143600e-01, 3.92019032595438854e-01, 7.69785198623481747e-04},
    {1.51297205038968506e-02, 1.39085794361143600e-01, 4.53765452539520719e-01, 7.69785198623481747e-04},
    {1.51297205038968506e-02, 3.92019032595438854e-01, 1.39085794361143600e-01, 7.69785198623481747e-04},
    {1.51297205038968506e-02, 3.92019032595438854e-01, 4.53765452539520719e-01, 7.69785198623481747e-04},
    {1.51297205038968506e-02, 4.53765452539520719e-01, 1.39085794361143600e-01, 7.69785198623481747e-04},
    {1.51297205038968506e-02, 4.53765452539520719e-01, 3.92019032595438854e-01, 7.69785198623481747e-04},
    {1.39085794361143600e-01, 1.51297205038968506e-02, 3.92019032595438854e-01, 7.69785198623481747e-04},
    {1.39085794361143600e-01, 1.51297205038968506e-02, 4.53765452539520719e-01, 7.69785198623481747e-04},
    {1.39085794361143600e-01, 3.92019032595438854e-01, 1.51297205038968506e-02, 7.69785198623481747e-04},
    {1.39085794361143600e-01, 3.92019032595438854e-01, 4.53765452539520719e-01, 7.69785198623481747e-04},
    {1.39085794361143600e-01, 4.53765452539520719e-01, 1.51297205038968506e-02, 7.69785198623481747e-04},
    {1.39085794361143600e-01, 4.53765452539520719e-01, 3.92019032595438854e-01, 7.69785198623481747e-04},
    {3.92019032595438854e-01, 1.51297205038968506e-02, 1.39085794361143600e-01, 7.69785198623481747e-04},
    {3.92019032595438854e-01, 1.51297205038968506e-02, 4.53765452539520719e-01, 7.69785198623481747e-04},
    {3.92019032595438854e-01, 1.39085794361143600e-01, 1.51297205038968506e-02, 7.69785198623481747e-04},
    {3.92019032595438854e-01, 1.39085794361143600e-01, 4.53765452539520719e-01, 7.69785198623481747e-04},
    {3.92019032595438854e-01, 4.53765452539520719e-01, 1.51297205038968506e-02, 7.69785198623481747e-04},
    {3.92019032595438854e-01, 4.53765452539520719e-01, 1.39085794361143600e-01, 7.69785198623481747e-04},
    {4.53765452539520719e-01, 1.51297205038968506e-02, 1.39085794361143600e-01, 7.69785198623481747e-04},
    {4.53765452539520719e-01, 1.51297205038968506e-02, 3.92019032595438854e-01, 7.69785198623481747e-04},
    {4.53765452539520719e-01, 1.39085794361143600e-01, 1.51297205038968506e-02, 7.69785198623481747e-04},
    {4.53765452539520719e-01, 1.39085794361143600e-01, 3.92019032595438854e-01, 7.69785198623481747e-04},
    {4.53765452539520719e-01, 3.92019032595438854e-01, 1.51297205038968506e-02, 7.69785198623481747e-04},
    {4.53765452539520719e-01, 3.92019032595438854e-01, 1.39085794361143600e-01, 7.69785198623481747e-04},
};

// degree 10: 508 points
inline constexpr double kTetRuleD10[508][4] = {
    {4.00000014720660463e-03, 4.00000014720660463e-03, 4.00000014720660463e-03, 3.06435691977328224e-05},
    {4.00000014720660463e-03, 4.00000014720660463e-03, 9.87999999558380138e-01, 3.06435691977328224e-05},
    {4.00000014720660463e-03, 9.87999999558380138e-01, 4.00000014720660463e-03, 3.06435691977328224e-05},
    {9.87999999558380138e-01, 4.00000014720660463e-03, 4.00000014720660463e-03, 3.06435691977328224e-05},
    {1.00000001223801357e-02, 1.00000001223801357e-02, 7.48275864245073058e-02, 1.53468050451162144e-05},
    {1.00000001223801357e-02, 1.00000001223801357e-02, 9.05172413330732506e-01, 1.53468050451162144e-05},
    {1.00000001223801357e-02, 7.48275864245073058e-02, 1.00000001223801357e-02, 1.53468050451162144e-05},
    {1.00000001223801357e-02, 7.48275864245073058e-02, 9.05172413330732506e-01, 1.53468050451162144e-05},
    {1.00000001223801357e-02, 9.05172413330732506e-01, 1.00000001223801357e-02, 1.53468050451162144e-05},
    {1.00000001223801357e-02, 9.05172413330732506e-01, 7.48275864245073058e-02, 1.53468050451162144e-05},
    {7.48275864245073058e-02, 1.00000001223801357e-02, 1.00000001223801357e-02, 1.53468050451162144e-05},
    {7.48275864245073058e-02, 1.00000001223801357e-02, 9.05172413330732506e-01, 1.53468050451162144e-05},
    {7.48275864245073058e-02, 9.05172413330732506e-01, 1.00000001223801357e-02, 1.53468050451162144e-05},
    {9.05172413330732506e-01, 1.00000001223801357e-02, 1.00000001223801357e-02, 1.53468050451162144e-05},
    {9.05172413330732506e-01, 1.00000001223801357e-02, 7.48275864245073058e-02, 1.53468050451162144e-05},
    {9.05172413330732506e-01, 7.48275864245073058e-02, 1.00000001223801357e-02, 1.53468050451162144e-05},
    {1.00000000015135412e-02, 1.00000000015135412e-02, 4.83793103362254728e-01, 8.62646465822985661e-05},
    {1.00000000015135412e-02, 1.00000000015135412e-02, 4.96206896634718231e-01, 8.62646465822985661e-05},
    {1.00000000015135412e-02, 4.83793103362254728e-01, 1.00000000015135412e-02, 8.62646465822985661e-05},
    {1.00000000015135412e-02, 4.83793103362254728e-01, 4.96206896634718231e-01, 8.62646465822985661e-05},
    {1.00000000015135412e-02, 4.96206896634718231e-01, 1.00000000015135412e-02, 8.62646465822985661e-05},
    {1.00000000015135412e-02, 4.96206896634718231e-01, 4.83793103362254728e-01, 8.62646465822985661e-05},
    {4.83793103362254728e-01, 1.00000000015135412e-02, 1.00000000015135412e-02, 8.62646465822985661e-05},
    {4.83793103362254728e-01, 1.00000000015135412e-02, 4.96206896634718231e-01, 8.62646465822985661e-05},
    {4.83793103362254728e-01, 4.96206896634718231e-01, 1.00000000015135412e-02, 8.62646465822985661e-05},
    {4.96206896634718231e-01, 1.00000000015135412e-02, 1.00000000015135412e-02, 8.62646465822985661e-05},
    {4.96206896634718231e-01, 1.00000000015135412e-02, 4.83793103362254728e-01, 8.62646465822985661e-05},
    {4.96206896634718231e-01, 4.83793103362254728e-01, 1.00000000015135412e-02, 8.62646465822985661e-05},
    {2.31658508211237749e-02, 3.22103157220894998e-01, 3.22768246091521049e-01, 1.78201682136068154e-04},
    {2.31658508211237749e-02, 3.22103157220894998e-01, 3.31962745866460185e-01, 1.78201682136068154e-04},
    {2.31658508211237749e-02, 3.22768246091521049e-01, 3.22103157220894998e-01, 1.78201682136068154e-04},
    {2.31658508211237749e-02, 3.22768246091521049e-01, 3.31962745866460185e-01, 1.78201682136068154e-04},
    {2.31658508211237749e-02, 3.31962745866460185e-01, 3.22103157220894998e-01, 1.78201682136068154e-04},
    {2.31658508211237749e-02, 3.31962745866460185e-01, 3.22768246091521049e-01, 1.78201682136068154e-04},
    {3.22103157220894998e-01, 2.31658508211237749e-02, 3.22768246091521049e-01, 1.78201682136068154e-04},
    {3.22103157220894998e-01, 2.31658508211237749e-02, 3.31962745866460185e-01, 1.78201682136068154e-04},
    {3.22103157220894998e-01, 3.22768246091521049e-01, 2.31658508211237749e-02, 1.78201682136068154e-04},
    {3.22103157220894998e-01, 3.22768246091521049e-01, 3.31962745866460185e-01, 1.78201682136068154e-04},
    {3.22103157220894998e-01, 3.31962745866460185e-01, 2.31658508211237749e-02, 1.78201682136068154e-04},
    {3.22103157220894998e-01, 3.31962745866460185e-01, 3.22768246091521049e-01, 1.78201682136068154e-04},
    {3.22768246091521049e-01, 2.31658508211237749e-02, 3.22103157220894998e-01, 1.78201682136068154e-04},
    {3.22768246091521049e-01, 2.31658508211237749e-02, 3.31962745866460185e-01, 1.78201682136068154e-04},
    {3.22768246091521049e-01, 3.22103157220894998e-01, 2.31658508211237749e-02, 1.78201682136068154e-04},
    {3.22768246091521049e-01, 3.22103157220894998e-01, 3.31962745866460185e-01, 1.78201682136068154e-04},
    {3.22768246091521049e-01, 3.31962745866460185e-01, 2.31658508211237749e-02, 1.78201682136068154e-04},
    {3.22768246091521049e-01, 3.31962745866460185e-01, 3.22103157220894998e-01, 1.78201682136068154e-04},
    {3.31962745866460185e-01, 2.31658508211237749e-02, 3.22103157220894998e-01, 1.78201682136068154e-04},
    {3.31962745866460185e-01, 2.31658508211237749e-02, 3.22768246091521049e-01, 1.78201682136068154e-04},
    {3.31962745866460185e-01, 3.22103157220894998e-01, 2.31658508211237749e-02, 1.78201682136068154e-04},
    {3.31962745866460185e-01, 3.22103157220894998e-01, 3.22768246091521049e-01, 1.78201682136068154e-04},
    {3.31962745866460185e-01, 3.22768246091521049e-01, 2.31658508211237749e-02, 1.78201682136068154e-04},
    {3.31962745866460185e-01, 3.22768246091521049e-01, 3.22103157220894998e-01, 1.78201682136068154e-04},
    {2.63668645362685576e-02, 1.15643494109733971e-01, 1.56677482445611416e-01, 5.82989523259119422e-04},
    {2.63668645362685576e-02, 1.15643494109733971e-01, 7.01312158908386052e-01, 5.82989523259119422e-04},
    {2.63668645362685576e-02, 1.56677482445611416e-01, 1.15643494109733971e-01, 5.82989523259119422e-04},
    {2.63668645362685576e-02, 1.56677482445611416e-01, 7.01312158908386052e-01, 5.82989523259119422e-04},
    {2.63668645362685576e-02, 7.01312158908386052e-01, 1.15643494109733971e-01, 5.82989523259119422e-04},
    {2.63668645362685576e-02, 7.01312158908386052e-01, 1.56677482445611416e-01, 5.82989523259119422e-04},
    {1.15643494109733971e-01, 2.63668645362685576e-02, 1.56677482445611416e-01, 5.82989523259119422e-04},
    {1.15643494109733971e-01, 2.63668645362685576e-02, 7.01312158908386052e-01, 5.82989523259119422e-04},
    {1.15643494109733971e-01, 1.56677482445611416e-01, 2.63668645362685576e-02, 5.82989523259119422e-04},
    {1.15643494109733971e-01, 1.56677482445611416e-01, 7.01312158908386052e-01, 5.82989523259119422e-04},
    {1.15643494109733971e-01, 7.01312158908386052e-01, 2.63668645362685576e-02, 5.82989523259119422e-04},
    {1.15643494109733971e-01, 7.01312158908386052e-01, 1.56677482445611416e-01, 5.82989523259119422e-04},
    {1.56677482445611416e-01, 2.63668645362685576e-02, 1.15643494109733971e-01, 5.82989523259119422e-04},
    {1.56677482445611416e-01, 2.63668645362685576e-02, 7.01312158908386052e-01, 5.82989523259119422e-04},
    {1.56677482445611416e-01, 1.15643494109733971e-01, 2.63668645362685576e-02, 5.82989523259119422e-04},
    {1.56677482445611416e-01, 1.15643494109733971e-01, 7.01312158908386052e-01, 5.82989523259119422e-04},
    {1.56677482445611416e-01, 7.01312158908386052e-01, 2.63668645362685576e-02, 5.82989523259119422e-04},
    {1.56677482445611416e-01, 7.01312158908386052e-01, 1.15643494109733971e-01, 5.82989523259119422e-04},
    {7.01312158908386052e-01, 2.63668645362685576e-02, 1.15643494109733971e-01, 5.82989523259119422e-04},
    {7.01312158908386052e-01, 2.63668645362685576e-02, 1.56677482445611416e-01, 5.82989523259119422e-04},
    {7.01312158908386052e-01, 1.15643494109733971e-01, 2.63668645362685576e-02, 5.82989523259119422e-04},
    {7.01312158908386052e-01, 1.15643494109733971e-01, 1.56677482445611416e-01, 5.82989523259119422e-04},
    {7.01312158908386052e-01, 1.56677482445611416e-01, 2.63668645362685576e-02, 5.82989523259119422e-04},
    {7.01312158908386052e-01, 1.56677482445611416e-01, 1.15643494109733971e-01, 5.82989523259119422e-04},
    {1.12692954216750213e-01, 1.15629476516632565e-01, 1.21871152936422658e-01, 9.82155516535541300e-05},
    {1.12692954216750213e-01, 1.15629476516632565e-01, 6.49806416330194536e-01, 9.82155516535541300e-05},
    {1.12692954216750213e-01, 1.21871152936422658e-01, 1.15629476516632565e-01, 9.82155516535541300e-05},
    {1.12692954216750213e-01, 1.21871152936422658e-01, 6.49806416330194536e-01, 9.82155516535541300e-05},
    {1.12692954216750213e-01, 6.49806416330194536e-01, 1.15629476516632565e-01, 9.82155516535541300e-05},
    {1.12692954216750213e-01, 6.49806416330194536e-01, 1.21871152936422658e-01, 9.82155516535541300e-05},
    {1.15629476516632565e-01, 1.12692954216750213e-01, 1.21871152936422658e-01, 9.82155516535541300e-05},
    {1.15629476516632565e-01, 1.12692954216750213e-01, 6.49806416330194536e-01, 9.82155516535541300e-05},
    {1.15629476516632565e-01, 1.21871152936422658e-01, 1.12692954216750213e-01, 9.82155516535541300e-05},
    {1.15629476516632565e-01, 1.21871152936422658e-01, 6.49806416330194536e-01, 9.82155516535541300e-05},
    {1.15629476516632565e-01, 6.49806416330194536e-01, 1.12692954216750213e-01, 9.82155516535541300e-05},
    {1.15629476516632565e-01, 6.49806416330194536e-01, 1.21871152936422658e-01, 9.82155516535541300e-05},
    {1.21871152936422658e-01, 1.12692954216750213e-01, 1.15629476516632565e-01, 9.82155516535541300e-05},
    {1.21871152936422658e-01, 1.12692954216750213e-01, 6.49806416330194536e-01, 9.82155516535541300e-05},
    {1.21871152936422658e-01, 1.15629476516632565e-01, 1.12692954216750213e-01, 9.82155516535541300e-05},
    {1.21871152936422658e-01, 1.15629476516632565e-01, 6.49806416330194536e-01, 9.82155516535541300e-05},
    {1.21871152936422658e-01, 6.49806416330194536e-01, 1.12692954216750213e-01, 9.82155516535541300e-05},
    {1.21871152936422658e-01, 6.49806416330194536e-01, 1.15629476516632565e-01, 9.82155516535541300e-05},
    {6.49806416330194536e-01, 1.12692954216750213e-01, 1.15629476516632565e-01, 9.82155516535541300e-05},
    {6.49806416330194536e-01, 1.12692954216750213e-01, 1.21871152936422658e-01, 9.82155516535541300e-05},
    {6.49806416330194536e-01, 1.15629476516632565e-01, 1.12692954216750213e-01, 9.82155516535541300e-05},
    {6.49806416330194536e-01, 1.15629476516632565e-01, 1.21871152936422658e-01, 9.82155516535541300e-05},
    {6.49806416330194536e-01, 1.21871152936422658e-01, 1.12692954216750213e-01, 9.82155516535541300e-05},
    {6.49806416330194536e-01, 1.21871152936422658e-01, 1.15629476516632565e-01, 9.82155516535541300e-05},
    {9.56125062059701158e-02, 1.48249555392445775e-01, 3.70245304428653277e-01, 4.65303590576895683e-04},
    {9.56125062059701158e-02, 1.48249555392445775e-01, 3.85892633972930832e-01, 4.65303590576895683e-04},
    {9.56125062059701158e-02, 3.70245304428653277e-01, 1.48249555392445775e-01, 4.65303590576895683e-04},
    {9.56125062059701158e-02, 3.70245304428653277e-01, 3.85892633972930832e-01, 4.65303590576895683e-04},
    {9.56125062059701158e-02, 3.85892633972930832e-01, 1.48249555392445775e-01, 4.65303590576895683e-04},
    {9.56125062059701158e-02, 3.85892633972930832e-01, 3.70245304428653277e-01, 4.65303590576895683e-04},
    {1.48249555392445775e-01, 9.56125062059701158e-02, 3.70245304428653277e-01, 4.65303590576895683e-04},
    {1.48249555392445775e-01, 9.56125062059701158e-02, 3.85892633972930832e-01, 4.65303590576895683e-04},
    {1.48249555392445775e-01, 3.70245304428653277e-01, 9.56125062059701158e-02, 4.65303590576895683e-04},
    {1.48249555392445775e-01, 3.70245304428653277e-01, 3.85892633972930832e-01, 4.65303590576895683e-04},
    {1.48249555392445775e-01, 3.85892633972930832e-01, 9.56125062059701158e-02, 4.65303590576895683e-04},
    {1.48249555392445775e-01, 3.85892633972930832e-01, 3.70245304428653277e-01, 4.65303590576895683e-04},
    {3.70245304428653277e-01, 9.56125062059701158e-02, 1.48249555392445775e-01, 4.65303590576895683e-04},
    {3.70245304428653277e-01, 9.56125062059701158e-02, 3.85892633972930832e-01, 4.65303590576895683e-04},
    {3.70245304428653277e-01, 1.48249555392445775e-01, 9.56125062059701158e-02, 4.65303590576895683e-04},
    {3.70245304428653277e-01, 1.48249555392445775e-01, 3.85892633972930832e-01, 4.65303590576895683e-04},
    {3.70245304428653277e-01, 3.85892633972930832e-01, 9.56125062059701158e-02, 4.65303590576895683e-04},
    {3.70245304428653277e-01, 3.85892633972930832e-01, 1.48249555392445775e-01, 4.65303590576895683e-04},
    {3.85892633972930832e-01, 9.56125062059701158e-02, 1.48249555392445775e-01, 4.65303590576895683e-04},
    {3.85892633972930832e-01, 9.56125062059701158e-02, 3.70245304428653277e-01, 4.65303590576895683e-04},
    {3.85892633972930832e-01, 1.48249555392445775e-01, 9.56125062059701158e-02, 4.65303590576895683e-04},
    {3.85892633972930832e-01, 1.48249555392445775e-01, 3.70245304428653277e-01, 4.65303590576895683e-04},
    {3.85892633972930832e-01, 3.70245304428653277e-01, 9.56125062059701158e-02, 4.65303590576895683e-04},
    {3.85892633972930832e-01, 3.70245304428653277e-01, 1.48249555392445775e-01, 4.65303590576895683e-04},
    {1.61865500961124870e-02, 1.70327468397524183e-02, 1.51141504400976706e-01, 1.61937784942538151e-04},
    {1.61865500961124870e-02, 1.70327468397524183e-02, 8.15639198663158371e-01, 1.61937784942538151e-04},
    {1.61865500961124870e-02, 1.51141504400976706e-01, 1.70327468397524183e-02, 1.61937784942538151e-04},
    {1.61865500961124870e-02, 1.51141504400976706e-01, 8.15639198663158371e-01, 1.61937784942538151e-04},
    {1.61865500961124870e-02, 8.15639198663158371e-01, 1.70327468397524183e-02, 1.61937784942538151e-04},
    {1.61865500961124870e-02, 8.15639198663158371e-01, 1.51141504400976706e-01, 1.61937784942538151e-04},
    {1.70327468397524183e-02, 1.61865500961124870e-02, 1.51141504400976706e-01, 1.61937784942538151e-04},
    {1.70327468397524183e-02, 1.61865500961124870e-02, 8.15639198663158371e-01, 1.61937784942538151e-04},
    {1.70327468397524183e-02, 1.51141504400976706e-01, 1.61865500961124870e-02, 1.61937784942538151e-04},
    {1.70327468397524183e-02, 1.51141504400976706e-01, 8.15639198663158371e-01, 1.61937784942538151e-04},
    {1.70327468397524183e-02, 8.15639198663158371e-01, 1.61865500961124870e-02, 1.61937784942538151e-04},
    {1.70327468397524183e-02, 8.15639198663158371e-01, 1.51141504400976706e-01, 1.61937784942538151e-04},
    {1.51141504400976706e-01, 1.61865500961124870e-02, 1.70327468397524183e-02, 1.61937784942538151e-04},
    {1.51141504400976706e-01, 1.61865500961124870e-02, 8.15639198663158371e-01, 1.61937784942538151e-04},
    {1.51141504400976706e-01, 1.70327468397524183e-02, 1.61865500961124870e-02, 1.61937784942538151e-04},
    {1.51141504400976706e-01, 1.70327468397524183e-02, 8.15639198663158371e-01, 1.61937784942538151e-04},
    {1.51141504400976706e-01, 8.15639198663158371e-01, 1.61865500961124870e-02, 1.61937784942538151e-04},
    {1.51141504400976706e-01, 8.15639198663158371e-01, 1.70327468397524183e-02, 1.61937784942538151e-04},
    {8.15639198663158371e-01, 1.61865500961124870e-02, 1.70327468397524183e-02, 1.61937784942538151e-04},
    {8.15639198663158371e-01, 1.61865500961124870e-02, 1.51141504400976706e-01, 1.61937784942538151e-04},
    {8.15639198663158371e-01, 1.70327468397524183e-02, 1.61865500961124870e-02, 1.61937784942538151e-04},
    {8.15639198663158371e-01, 1.70327468397524183e-02, 1.51141504400976706e-01, 1.61937784942538151e-04},
    {8.15639198663158371e-01, 1.51141504400976706e-01, 1.61865500961124870e-02, 1.61937784942538151e-04},
    {8.15639198663158371e-01, 1.51141504400976706e-01, 1.70327468397524183e-02, 1.61937784942538151e-04},
    {1.20439049263962317e-02, 1.75362435640638775e-01, 3.95167589664288110e-01, 5.10457277268562028e-04},
    {1.20439049263962317e-02, 1.75362435640638775e-01, 4.17426069768676855e-01, 5.10457277268562028e-04},
    {1.20439049263962317e-02, 3.95167589664288110e-01, 1.75362435640638775e-01, 5.10457277268562028e-04},
    {1.20439049263962317e-02, 3.95167589664288110e-01, 4.17426069768676855e-01, 5.10457277268562028e-04},
    {1.20439049263962317e-02, 4.17426069768676855e-01, 1.75362435640638775e-01, 5.10457277268562028e-04},
    {1.20439049263962317e-02, 4.17426069768676855e-01, 3.95167589664288110e-01, 5.10457277268562028e-04},
    {1.75362435640638775e-01, 1.20439049263962317e-02, 3.95167589664288110e-01, 5.10457277268562028e-04},
    {1.75362435640638775e-01, 1.20439049263962317e-02, 4.17426069768676855e-01, 5.10457277268562028e-04},
    {1.75362435640638775e-01, 3.95167589664288110e-01, 1.20439049263962317e-02, 5.10457277268562028e-04},
    {1.75362435640638775e-01, 3.95167589664288110e-01, 4.17426069768676855e-01, 5.10457277268562028e-04},
    {1.75362435640638775e-01, 4.17426069768676855e-01, 1.20439049263962317e-02, 5.10457277268562028e-04},
    {1.75362435640638775e-01, 4.17426069768676855e-01, 3.95167589664288110e-01, 5.10457277268562028e-04},
    {3.95167589664288110e-01, 1.20439049263962317e-02, 1.75362435640638775e-01, 5.10457277268562028e-04},
    {3.95167589664288110e-01, 1.20439049263962317e-02, 4.17426069768676855e-01, 5.10457277268562028e-04},
    {3.95167589664288110e-01, 1.75362435640638775e-01, 1.20439049263962317e-02, 5.10457277268562028e-04},
    {3.95167589664288110e-01, 1.75362435640638775e-01, 4.17426069768676855e-01, 5.10457277268562028e-04},
    {3.95167589664288110e-01, 4.17426069768676855e-01, 1.20439049263962317e-02, 5.10457277268562028e-04},
    {3.95167589664288110e-01, 4.17426069768676855e-01, 1.75362435640638775e-01, 5.10457277268562028e-04},
    {4.17426069768676855e-01, 1.20439049263962317e-02, 1.75362435640638775e-01, 5.10457277268562028e-04},
    {4.17426069768676855e-01, 1.20439049263962317e-02, 3.95167589664288110e-01, 5.10457277268562028e-04},
    {4.17426069768676855e-01, 1.75362435640638775e-01, 1.20439049263962317e-02, 5.10457277268562028e-04},
    {4.17426069768676855e-01, 1.75362435640638775e-01, 3.95167589664288110e-01, 5.10457277268562028e-04},
    {4.17426069768676855e-01, 3.95167589664288110e-01, 1.20439049263962317e-02, 5.10457277268562028e-04},
    {4.17426069768676855e-01, 3.95167589664288110e-01, 1.75362435640638775e-01, 5.10457277268562028e-04},
    {1.50745040175663259e-02, 8.06714464594084357e-02, 1.17735912491545636e-01, 1.02972753403653784e-04},
    {1.50745040175663259e-02, 8.06714464594084357e-02, 7.86518137031479547e-01, 1.02972753403653784e-04},
    {1.50745040175663259e-02, 1.17735912491545636e-01, 8.06714464594084357e-02, 1.02972753403653784e-04},
    {1.50745040175663259e-02, 1.17735912491545636e-01, 7.86518137031479547e-01, 1.02972753403653784e-04},
    {1.50745040175663259e-02, 7.86518137031479547e-01, 8.06714464594084357e-02, 1.02972753403653784e-04},
    {1.50745040175663259e-02, 7.86518137031479547e-01, 1.17735912491545636e-01, 1.02972753403653784e-04},
    {8.06714464594084357e-02, 1.50745040175663259e-02, 1.17735912491545636e-01, 1.02972753403653784e-04},
    {8.06714464594084357e-02, 1.50745040175663259e-02, 7.86518137031479547e-01, 1.02972753403653784e-04},
    {8.06714464594084357e-02, 1.17735912491545636e-01, 1.50745040175663259e-02, 1.02972753403653784e-04},
    {8.06714464594084357e-02, 1.17735912491545636e-01, 7.86518137031479547e-01, 1.02972753403653784e-04},
    {8.06714464594084357e-02, 7.86518137031479547e-01, 1.50745040175663259e-02, 1.02972753403653784e-04},
    {8.06714464594084357e-02, 7.86518137031479547e-01, 1.17735912491545636e-01, 1.02972753403653784e-04},
    {1.17735912491545636e-01, 1.50745040175663259e-02, 8.06714464594084357e-02, 1.02972753403653784e-04},
    {1.17735912491545636e-01, 1.50745040175663259e-02, 7.86518137031479547e-01, 1.02972753403653784e-04},
    {1.17735912491545636e-01, 8.06714464594084357e-02, 1.50745040175663259e-02, 1.02972753403653784e-04},
    {1.17735912491545636e-01, 8.06714464594084357e-02, 7.86518137031479547e-01, 1.02972753403653784e-04},
    {1.17735912491545636e-01, 7.86518137031479547e-01, 1.50745040175663259e-02, 1.02972753403653784e-04},
    {1.17735912491545636e-01, 7.86518137031479547e-01, 8.06714464594084357e-02, 1.02972753403653784e-04},
    {7.86518137031479547e-01, 1.50745040175663259e-02, 8.06714464594084357e-02, 1.02972753403653784e-04},
    {7.86518137031479547e-01, 1.50745040175663259e-02, 1.17735912491545636e-01, 1.02972753403653784e-04},
    {7.86518137031479547e-01, 8.06714464594084357e-02, 1.50745040175663259e-02, 1.02972753403653784e-04},
    {7.86518137031479547e-01, 8.06714464594084357e-02, 1.17735912491545636e-01, 1.02972753403653784e-04},
    {7.86518137031479547e-01, 1.17735912491545636e-01, 1.50745040175663259e-02, 1.02972753403653784e-04},
    {7.86518137031479547e-01, 1.17735912491545636e-01, 8.06714464594084357e-02, 1.02972753403653784e-04},
    {1.93137962135485342e-02, 9.63166677183479314e-02, 3.23339989728677113e-01, 6.69900378024928709e-04},
    {1.93137962135485342e-02, 9.63166677183479314e-02, 5.61029546339426477e-01, 6.69900378024928709e-04},
    {1.93137962135485342e-02, 3.23339989728677113e-01, 9.63166677183479314e-02, 6.69900378024928709e-04},
    {1.93137962135485342e-02, 3.23339989728677113e-01, 5.61029546339426477e-01, 6.69900378024928709e-04},
    {1.93137962135485342e-02, 5.61029546339426477e-01, 9.63166677183479314e-02, 6.69900378024928709e-04},
    {1.93137962135485342e-02, 5.61029546339426477e-01, 3.23339989728677113e-01, 6.69900378024928709e-04},
    {9.63166677183479314e-02, 1.93137962135485342e-02, 3.23339989728677113e-01, 6.69900378024928709e-04},
    {9.63166677183479314e-02, 1.93137962135485342e-02, 5.61029546339426477e-01, 6.69900378024928709e-04},
    {9.63166677183479314e-02, 3.23339989728677113e-01, 1.93137962135485342e-02, 6.69900378024928709e-04},
    {9.63166677183479314e-02, 3.23339989728677113e-01, 5.61029546339426477e-01, 6.69900378024928709e-04},
    {9.63166677183479314e-02, 5.61029546339426477e-01, 1.93137962135485342e-02, 6.69900378024928709e-04},
    {9.63166677183479314e-02, 5.61029546339426477e-01, 3.23339989728677113e-01, 6.69900378024928709e-04},
    {3.23339989728677113e-01, 1.93137962135485342e-02, 9.63166677183479314e-02, 6.69900378024928709e-04},
    {3.23339989728677113e-01, 1.93137962135485342e-02, 5.61029546339426477e-01, 6.69900378024928709e-04},
    {3.23339989728677113e-01, 9.63166677183479314e-02, 1.93137962135485342e-02, 6.69900378024928709e-04},
    {3.23339989728677113e-01, 9.63166677183479314e-02, 5.61029546339426477e-01, 6.69900378024928709e-04},
    {3.23339989728677113e-01, 5.61029546339426477e-01, 1.93137962135485342e-02, 6.69900378024928709e-04},
    {3.23339989728677113e-01, 5.61029546339426477e-01, 9.63166677183479314e-02, 6.69900378024928709e-04},
    {5.61029546339426477e-01, 1.93137962135485342e-02, 9.63166677183479314e-02, 6.69900378024928709e-04},
    {5.61029546339426477e-01, 1.93137962135485342e-02, 3.23339989728677113e-01, 6.69900378024928709e-04},
    {5.61029546339426477e-01, 9.63166677183479314e-02, 1.93137962135485342e-02, 6.69900378024928709e-04},
    {5.61029546339426477e-01, 9.63166677183479314e-02, 3.23339989728677113e-01, 6.69900378024928709e-04},
    {5.61029546339426477e-01, 3.23339989728677113e-01, 1.93137962135485342e-02, 6.69900378024928709e-04},
    {5.61029546339426477e-01, 3.23339989728677113e-01, 9.63166677183479314e-02, 6.69900378024928709e-04},
    {2.31753168887654654e-01, 2.43390950879105866e-01, 2.44451503524445141e-01, 1.89938817047203531e-04},
    {2.31753168887654654e-01, 2.43390950879105866e-01, 2.80404376708794367e-01, 1.89938817047203531e-04},
    {2.31753168887654654e-01, 2.44451503524445141e-01, 2.43390950879105866e-01, 1.89938817047203531e-04},
    {2.31753168887654654e-01, 2.44451503524445141e-01, 2.80404376708794367e-01, 1.89938817047203531e-04},
    {2.31753168887654654e-01, 2.80404376708794367e-01, 2.43390950879105866e-01, 1.89938817047203531e-04},
    {2.31753168887654654e-01, 2.80404376708794367e-01, 2.44451503524445141e-01, 1.89938817047203531e-04},
    {2.43390950879105866e-01, 2.31753168887654654e-01, 2.44451503524445141e-01, 1.89938817047203531e-04},
    {2.43390950879105866e-01, 2.31753168887654654e-01, 2.80404376708794367e-01, 1.89938817047203531e-04},
    {2.43390950879105866e-01, 2.44451503524445141e-01, 2.31753168887654654e-01, 1.89938817047203531e-04},
    {2.43390950879105866e-01, 2.44451503524445141e-01, 2.80404376708794367e-01, 1.89938817047203531e-04},
    {2.43390950879105866e-01, 2.80404376708794367e-01, 2.31753168887654654e-01, 1.89938817047203531e-04},
    {2.43390950879105866e-01, 2.80404376708794367e-01, 2.44451503524445141e-01, 1.89938817047203531e-04},
    {2.44451503524445141e-01, 2.31753168887654654e-01, 2.43390950879105866e-01, 1.89938817047203531e-04},
    {2.44451503524445141e-01, 2.31753168887654654e-01, 2.80404376708794367e-01, 1.89938817047203531e-04},
    {2.44451503524445141e-01, 2.43390950879105866e-01, 2.31753168887654654e-01, 1.89938817047203531e-04},
    {2.44451503524445141e-01, 2.43390950879105866e-01, 2.80404376708794367e-01, 1.89938817047203531e-04},
    {2.44451503524445141e-01, 2.80404376708794367e-01, 2.31753168887654654e-01, 1.89938817047203531e-04},
    {2.44451503524445141e-01, 2.80404376708794367e-01, 2.43390950879105866e-01, 1.89938817047203531e-04},
    {2.80404376708794367e-01, 2.31753168887654654e-01, 2.43390950879105866e-01, 1.89938817047203531e-04},
    {2.80404376708794367e-01, 2.31753168887654654e-01, 2.44451503524445141e-01, 1.89938817047203531e-04},
    {2.80404376708794367e-01, 2.43390950879105866e-01, 2.31753168887654654e-01, 1.89938817047203531e-04},
    {2.80404376708794367e-01, 2.43390950879105866e-01, 2.44451503524445141e-01, 1.89938817047203531e-04},
    {2.80404376708794367e-01, 2.44451503524445141e-01, 2.31753168887654654e-01, 1.89938817047203531e-04},
    {2.80404376708794367e-01, 2.44451503524445141e-01, 2.43390950879105866e-01, 1.89938817047203531e-04},
    {1.42140271392718953e-01, 1.54247475768142128e-01, 1.58073622049530293e-01, 5.80723078137469696e-04},
    {1.42140271392718953e-01, 1.54247475768142128e-01, 5.45538630789608736e-01, 5.80723078137469696e-04},
    {1.42140271392718953e-01, 1.58073622049530293e-01, 1.54247475768142128e-01, 5.80723078137469696e-04},
    {1.42140271392718953e-01, 1.58073622049530293e-01, 5.45538630789608736e-01, 5.80723078137469696e-04},
    {1.42140271392718953e-01, 5.45538630789608736e-01, 1.54247475768142128e-01, 5.80723078137469696e-04},
    {1.42140271392718953e-01, 5.45538630789608736e-01, 1.58073622049530293e-01, 5.80723078137469696e-04},
    {1.54247475768142128e-01, 1.42140271392718953e-01, 1.58073622049530293e-01, 5.80723078137469696e-04},
    {1.54247475768142128e-01, 1.42140271392718953e-01, 5.45538630789608736e-01, 5.80723078137469696e-04},
    {1.54247475768142128e-01, 1.58073622049530293e-01, 1.42140271392718953e-01, 5.80723078137469696e-04},
    {1.54247475768142128e-01, 1.58073622049530293e-01, 5.45538630789608736e-01, 5.80723078137469696e-04},
    {1.54247475768142128e-01, 5.45538630789608736e-01, 1.42140271392718953e-01, 5.80723078137469696e-04},
    {1.54247475768142128e-01, 5.45538630789608736e-01, 1.58073622049530293e-01, 5.80723078137469696e-04},
    {1.58073622049530293e-01, 1.42140271392718953e-01, 1.54247475768142128e-01, 5.80723078137469696e-04},
    {1.58073622049530293e-01, 1.42140271392718953e-01, 5.45538630789608736e-01, 5.80723078137469696e-04},
    {1.58073622049530293e-01, 1.54247475768142128e-01, 1.42140271392718953e-01, 5.80723078137469696e-04},
    {1.58073622049530293e-01, 1.54247475768142128e-01, 5.45538630789608736e-01, 5.80723078137469696e-04},
    {1.58073622049530293e-01, 5.45538630789608736e-01, 1.42140271392718953e-01, 5.80723078137469696e-04},
    {1.58073622049530293e-01, 5.45538630789608736e-01, 1.54247475768142128e-01, 5.80723078137469696e-04},
    {5.45538630789608736e-01, 1.42140271392718953e-01, 1.54247475768142128e-01, 5.80723078137469696e-04},
    {5.45538630789608736e-01, 1.42140271392718953e-01, 1.58073622049530293e-01, 5.80723078137469696e-04},
    {5.45538630789608736e-01, 1.54247475768142128e-01, 1.42140271392718953e-01, 5.80723078137469696e-04},
    {5.45538630789608736e-01, 1.54247475768142128e-01, 1.58073622049530293e-01, 5.80723078137469696e-04},
    {5.45538630789608736e-01, 1.58073622049530293e-01, 1.42140271392718953e-01, 5.80723078137469696e-04},
    {5.45538630789608736e-01, 1.58073622049530293e-01, 1.54247475768142128e-01, 5.80723078137469696e-04},
    {1.50654556257894146e-01, 1.53248580042898597e-01, 3.44453975917862365e-01, 7.73608695348385815e-04},
    {1.50654556257894146e-01, 1.53248580042898597e-01, 3.51642887781344948e-01, 7.73608695348385815e-04},
    {1.50654556257894146e-01, 3.44453975917862365e-01, 1.53248580042898597e-01, 7.73608695348385815e-04},
    {1.50654556257894146e-01, 3.44453975917862365e-01, 3.51642887781344948e-01, 7.73608695348385815e-04},
    {1.50654556257894146e-01, 3.51642887781344948e-01, 1.53248580042898597e-01, 7.73608695348385815e-04},
    {1.50654556257894146e-01, 3.51642887781344948e-01, 3.44453975917862365e-01, 7.73608695348385815e-04},
    {1.53248580042898597e-01, 1.50654556257894146e-01, 3.44453975917862365e-01, 7.73608695348385815e-04},
    {1.53248580042898597e-01, 1.50654556257894146e-01, 3.51642887781344948e-01, 7.73608695348385815e-04},
    {1.53248580042898597e-01, 3.44453975917862365e-01, 1.50654556257894146e-01, 7.73608695348385815e-04},
    {1.53248580042898597e-01, 3.44453975917862365e-01, 3.51642887781344948e-01, 7.73608695348385815e-04},
    {1.53248580042898597e-01, 3.51642887781344948e-01, 1.50654556257894146e-01, 7.73608695348385815e-04},
    {1.53248580042898597e-01, 3.51642887781344948e-01, 3.44453975917862365e-01, 7.73608695348385815e-04},
    {3.44453975917862365e-01, 1.50654556257894146e-01, 1.53248580042898597e-01, 7.73608695348385815e-04},
    {3.44453975917862365e-01, 1.50654556257894146e-01, 3.51642887781344948e-01, 7.73608695348385815e-04},
    {3.44453975917862365e-01, 1.53248580042898597e-01, 1.50654556257894146e-01, 7.73608695348385815e-04},
    {3.44453975917862365e-01, 1.53248580042898597e-01, 3.51642887781344948e-01, 7.73608695348385815e-04},
    {3.44453975917862365e-01, 3.51642887781344948e-01, 1.50654556257894146e-01, 7.73608695348385815e-04},
    {3.44453975917862365e-01, 3.51642887781344948e-01, 1.53248580042898597e-01, 7.73608695348385815e-04},
    {3.51642887781344948e-01, 1.50654556257894146e-01, 1.53248580042898597e-01, 7.73608695348385815e-04},
    {3.51642887781344948e-01, 1.50654556257894146e-01, 3.44453975917862365e-01, 7.73608695348385815e-04},
    {3.51642887781344948e-01, 1.53248580042898597e-01, 1.50654556257894146e-01, 7.73608695348385815e-04},
    {3.51642887781344948e-01, 1.53248580042898597e-01, 3.44453975917862365e-01, 7.73608695348385815e-04},
    {3.51642887781344948e-01, 3.44453975917862365e-01, 1.50654556257894146e-01, 7.73608695348385815e-04},
    {3.51642887781344948e-01, 3.44453975917862365e-01, 1.53248580042898597e-01, 7.73608695348385815e-04},
    {7.23660076683523140e-02, 2.79761620805580924e-01, 3.05089249291159825e-01, 3.39232241363331686e-04},
    {7.23660076683523140e-02, 2.79761620805580924e-01, 3.42783122234906978e-01, 3.39232241363331686e-04},
    {7.23660076683523140e-02, 3.05089249291159825e-01, 2.79761620805580924e-01, 3.39232241363331686e-04},
    {7.23660076683523140e-02, 3.05089249291159825e-01, 3.42783122234906978e-01, 3.39232241363331686e-04},
    {7.23660076683523140e-02, 3.42783122234906978e-01, 2.79761620805580924e-01, 3.39232241363331686e-04},
    {7.23660076683523140e-02, 3.42783122234906978e-01, 3.05089249291159825e-01, 3.39232241363331686e-04},
    {2.79761620805580924e-01, 7.23660076683523140e-02, 3.05089249291159825e-01, 3.39232241363331686e-04},
    {2.79761620805580924e-01, 7.23660076683523140e-02, 3.42783122234906978e-01, 3.39232241363331686e-04},
    {2.79761620805580924e-01, 3.05089249291159825e-01, 7.23660076683523140e-02, 3.39232241363331686e-04},
    {2.79761620805580924e-01, 3.05089249291159825e-01, 3.42783122234906978e-01, 3.39232241363331686e-04},
    {2.79761620805580924e-01, 3.42783122234906978e-01, 7.23660076683523140e-02, 3.39232241363331686e-04},
    {2.79761620805580924e-01, 3.42783122234906978e-01, 3.05089249291159825e-01, 3.39232241363331686e-04},
    {3.05089249291159825e-01, 7.23660076683523140e-02, 2.79761620805580924e-01, 3.39232241363331686e-04},
    {3.05089249291159825e-01, 7.23660076683523140e-02, 3.42783122234906978e-01, 3.39232241363331686e-04},
    {3.05089249291159825e-01, 2.79761620805580924e-01, 7.23660076683523140e-02, 3.39232241363331686e-04},
    {3.05089249291159825e-01, 2.79761620805580924e-01, 3.42783122234906978e-01, 3.39232241363331686e-04},
    {3.05089249291159825e-01, 3.42783122234906978e-01, 7.23660076683523140e-02, 3.39232241363331686e-04},
    {3.05089249291159825e-01, 3.42783122234906978e-01, 2.79761620805580924e-01, 3.39232241363331686e-04},
    {3.42783122234906978e-01, 7.23660076683523140e-02, 2.79761620805580924e-01, 3.39232241363331686e-04},
    {3.42783122234906978e-01, 7.23660076683523140e-02, 3.05089249291159825e-01, 3.39232241363331686e-04},
    {3.42783122234906978e-01, 2.79761620805580924e-01, 7.23660076683523140e-02, 3.39232241363331686e-04},
    {3.42783122234906978e-01, 2.79761620805580924e-01, 3.05089249291159825e-01, 3.39232241363331686e-04},
    {3.42783122234906978e-01, 3.05089249291159825e-01, 7.23660076683523140e-02, 3.39232241363331686e-04},
    {3.42783122234906978e-01, 3.05089249291159825e-01, 2.79761620805580924e-01, 3.39232241363331686e-04},
    {1.06401717188211887e-02, 2.01979915162606334e-02, 3.03138611638124278e-01, 9.05936926580490321e-05},
    {1.06401717188211887e-02, 2.01979915162606334e-02, 6.66023225126793905e-01, 9.05936926580490321e-05},
    {1.06401717188211887e-02, 3.03138611638124278e-01, 2.01979915162606334e-02, 9.05936926580490321e-05},
    {1.06401717188211887e-02, 3.03138611638124278e-01, 6.66023225126793905e-01, 9.05936926580490321e-05},
    {1.06401717188211887e-02, 6.66023225126793905e-01, 2.01979915162606334e-02, 9.05936926580490321e-05},
    {1.06401717188211887e-02, 6.66023225126793905e-01, 3.03138611638124278e-01, 9.05936926580490321e-05},
    {2.01979915162606334e-02, 1.06401717188211887e-02, 3.03138611638124278e-01, 9.05936926580490321e-05},
    {2.01979915162606334e-02, 1.06401717188211887e-02, 6.66023225126793905e-01, 9.05936926580490321e-05},
    {2.01979915162606334e-02, 3.03138611638124278e-01, 1.06401717188211887e-02, 9.05936926580490321e-05},
    {2.01979915162606334e-02, 3.03138611638124278e-01, 6.66023225126793905e-01, 9.05936926580490321e-05},
    {2.01979915162606334e-02, 6.66023225126793905e-01, 1.06401717188211887e-02, 9.05936926580490321e-05},
    {2.01979915162606334e-02, 6.66023225126793905e-01, 3.03138611638124278e-01, 9.05936926580490321e-05},
    {3.03138611638124278e-01, 1.06401717188211887e-02, 2.01979915162606334e-02, 9.05936926580490321e-05},
    {3.03138611638124278e-01, 1.06401717188211887e-02, 6.66023225126793905e-01, 9.05936926580490321e-05},
    {3.03138611638124278e-01, 2.01979915162606334e-02, 1.06401717188211887e-02, 9.05936926580490321e-05},
    {3.03138611638124278e-01, 2.01979915162606334e-02, 6.66023225126793905e-01, 9.05936926580490321e-05},
    {3.03138611638124278e-01, 6.66023225126793905e-01, 1.06401717188211887e-02, 9.05936926580490321e-05},
    {3.03138611638124278e-01, 6.66023225126793905e-01, 2.01979915162606334e-02, 9.05936926580490321e-05},
    {6.66023225126793905e-01, 1.06401717188211887e-02, 2.01979915162606334e-02, 9.05936926580490321e-05},
    {6.66023225126793905e-01, 1.06401717188211887e-02, 3.03138611638124278e-01, 9.05936926580490321e-05},
    {6.66023225126793905e-01, 2.01979915162606334e-02, 1.06401717188211887e-02, 9.05936926580490321e-05},
    {6.66023225126793905e-01, 2.01979915162606334e-02, 3.03138611638124278e-01, 9.05936926580490321e-05},
    {6.66023225126793905e-01, 3.03138611638124278e-01, 1.06401717188211887e-02, 9.05936926580490321e-05},
    {6.66023225126793905e-01, 3.03138611638124278e-01, 2.01979915162606334e-02, 9.05936926580490321e-05},
    {1.05367294921245337e-02, 1.80023309604178255e-01, 2.20777888192583732e-01, 2.03743932797457186e-04},
    {1.05367294921245337e-02, 1.80023309604178255e-01, 5.88662072711113482e-01, 2.03743932797457186e-04},
    {1.05367294921245337e-02, 2.20777888192583732e-01, 1.80023309604178255e-01, 2.03743932797457186e-04},
    {1.05367294921245337e-02, 2.20777888192583732e-01, 5.88662072711113482e-01, 2.03743932797457186e-04},
    {1.05367294921245337e-02, 5.88662072711113482e-01, 1.80023309604178255e-01, 2.03743932797457186e-04},
    {1.05367294921245337e-02, 5.88662072711113482e-01, 2.20777888192583732e-01, 2.03743932797457186e-04},
    {1.80023309604178255e-01, 1.05367294921245337e-02, 2.20777888192583732e-01, 2.03743932797457186e-04},
    {1.80023309604178255e-01, 1.05367294921245337e-02, 5.88662072711113482e-01, 2.03743932797457186e-04},
    {1.80023309604178255e-01, 2.20777888192583732e-01, 1.05367294921245337e-02, 2.03743932797457186e-04},
    {1.80023309604178255e-01, 2.20777888192583732e-01, 5.88662072711113482e-01, 2.03743932797457186e-04},
    {1.80023309604178255e-01, 5.88662072711113482e-01, 1.05367294921245337e-02, 2.03743932797457186e-04},
    {1.80023309604178255e-01, 5.88662072711113482e-01, 2.20777888192583732e-01, 2.03743932797457186e-04},
    {2.20777888192583732e-01, 1.05367294921245337e-02, 1.80023309604178255e-01, 2.03743932797457186e-04},
    {2.20777888192583732e-01, 1.05367294921245337e-02, 5.88662072711113482e-01, 2.03743932797457186e-04},
    {2.20777888192583732e-01, 1.80023309604178255e-01, 1.05367294921245337e-02, 2.03743932797457186e-04},
    {2.20777888192583732e-01, 1.80023309604178255e-01, 5.88662072711113482e-01, 2.03743932797457186e-04},
    {2.20777888192583732e-01, 5.88662072711113482e-01, 1.05367294921245337e-02, 2.03743932797457186e-04},
    {2.20777888192583732e-01, 5.88662072711113482e-01, 1.80023309604178255e-01, 2.03743932797457186e-04},
    {5.88662072711113482e-01, 1.05367294921245337e-02, 1.80023309604178255e-01, 2.03743932797457186e-04},
    {5.88662072711113482e-01, 1.05367294921245337e-02, 2.20777888192583732e-01, 2.03743932797457186e-04},
    {5.88662072711113482e-01, 1.80023309604178255e-01, 1.05367294921245337e-02, 2.03743932797457186e-04},
    {5.88662072711113482e-01, 1.80023309604178255e-01, 2.20777888192583732e-01, 2.03743932797457186e-04},
    {5.88662072711113482e-01, 2.20777888192583732e-01, 1.05367294921245337e-02, 2.03743932797457186e-04},
    {5.88662072711113482e-01, 2.20777888192583732e-01, 1.80023309604178255e-01, 2.03743932797457186e-04},
    {2.60056697225632509e-02, 3.42867940885032071e-02, 3.85330202626637197e-01, 1.85209456128933650e-04},
    {2.60056697225632509e-02, 3.42867940885032071e-02, 5.54377333562296348e-01, 1.85209456128933650e-04},
    {2.60056697225632509e-02, 3.85330202626637197e-01, 3.42867940885032071e-02, 1.85209456128933650e-04},
    {2.60056697225632509e-02, 3.85330202626637197e-01, 5.54377333562296348e-01, 1.85209456128933650e-04},
    {2.60056697225632509e-02, 5.54377333562296348e-01, 3.42867940885032071e-02, 1.85209456128933650e-04},
    {2.60056697225632509e-02, 5.54377333562296348e-01, 3.85330202626637197e-01, 1.85209456128933650e-04},
    {3.42867940885032071e-02, 2.60056697225632509e-02, 3.85330202626637197e-01, 1.85209456128933650e-04},
    {3.42867940885032071e-02, 2.60056697225632509e-02, 5.54377333562296348e-01, 1.85209456128933650e-04},
    {3.42867940885032071e-02, 3.85330202626637197e-01, 2.60056697225632509e-02, 1.85209456128933650e-04},
    {3.42867940885032071e-02, 3.85330202626637197e-01, 5.54377333562296348e-01, 1.85209456128933650e-04},
    {3.42867940885032071e-02, 5.54377333562296348e-01, 2.60056697225632509e-02, 1.85209456128933650e-04},
    {3.42867940885032071e-02, 5.54377333562296348e-01, 3.85330202626637197e-01, 1.85209456128933650e-04},
    {3.85330202626637197e-01, 2.60056697225632509e-02, 3.42867940885032071e-02, 1.85209456128933650e-04},
    {3.85330202626637197e-01, 2.60056697225632509e-02, 5.54377333562296348e-01, 1.85209456128933650e-04},
    {3.85330202626637197e-01, 3.42867940885032071e-02, 2.60056697225632509e-02, 1.85209456128933650e-04},
    {3.85330202626637197e-01, 3.42867940885032071e-02, 5.54377333562296348e-01, 1.85209456128933650e-04},
    {3.85330202626637197e-01, 5.54377333562296348e-01, 2.60056697225632509e-02, 1.85209456128933650e-04},
    {3.85330202626637197e-01, 5.54377333562296348e-01, 3.42867940885032071e-02, 1.85209456128933650e-04},
    {5.54377333562296348e-01, 2.60056697225632509e-02, 3.42867940885032071e-02, 1.85209456128933650e-04},
    {5.54377333562296348e-01, 2.60056697225632509e-02, 3.85330202626637197e-01, 1.85209456128933650e-04},
    {5.54377333562296348e-01, 3.42867940885032071e-02, 2.60056697225632509e-02, 1.85209456128933650e-04},
    {5.54377333562296348e-01, 3.42867940885032071e-02, 3.85330202626637197e-01, 1.85209456128933650e-04},
    {5.54377333562296348e-01, 3.85330202626637197e-01, 2.60056697225632509e-02, 1.85209456128933650e-04},
    {5.54377333562296348e-01, 3.85330202626637197e-01, 3.42867940885032071e-02, 1.85209456128933650e-04},
    {4.61311508348433222e-02, 4.72663018819416483e-02, 2.41448587965097078e-01, 2.62895051055362652e-04},
    {4.61311508348433222e-02, 4.72663018819416483e-02, 6.65153959318117938e-01, 2.62895051055362652e-04},
    {4.61311508348433222e-02, 2.41448587965097078e-01, 4.72663018819416483e-02, 2.62895051055362652e-04},
    {4.61311508348433222e-02, 2.41448587965097078e-01, 6.65153959318117938e-01, 2.62895051055362652e-04},
    {4.61311508348433222e-02, 6.65153959318117938e-01, 4.72663018819416483e-02, 2.62895051055362652e-04},
    {4.61311508348433222e-02, 6.65153959318117938e-01, 2.41448587965097078e-01, 2.62895051055362652e-04},
    {4.72663018819416483e-02, 4.61311508348433222e-02, 2.41448587965097078e-01, 2.62895051055362652e-04},
    {4.72663018819416483e-02, 4.61311508348433222e-02, 6.65153959318117938e-01, 2.62895051055362652e-04},
    {4.72663018819416483e-02, 2.41448587965097078e-01, 4.61311508348433222e-02, 2.62895051055362652e-04},
    {4.72663018819416483e-02, 2.41448587965097078e-01, 6.65153959318117938e-01, 2.62895051055362652e-04},
    {4.72663018819416483e-02, 6.65153959318117938e-01, 4.61311508348433222e-02, 2.62895051055362652e-04},
    {4.72663018819416483e-02, 6.65153959318117938e-01, 2.41448587965097078e-01, 2.62895051055362652e-04},
    {2.41448587965097078e-01, 4.61311508348433222e-02, 4.72663018819416483e-02, 2.62895051055362652e-04},
    {2.41448587965097078e-01, 4.61311508348433222e-02, 6.65153959318117938e-01, 2.62895051055362652e-04},
    {2.41448587965097078e-01, 4.72663018819416483e-02, 4.61311508348433222e-02, 2.62895051055362652e-04},
    {2.41448587965097078e-01, 4.72663018819416483e-02, 6.65153959318117938e-01, 2.62895051055362652e-04},
    {2.41448587965097078e-01, 6.65153959318117938e-01, 4.61311508348433222e-02, 2.62895051055362652e-04},
    {2.41448587965097078e-01, 6.65153959318117938e-01, 4.72663018819416483e-02, 2.62895051055362652e-04},
    {6.65153959318117938e-01, 4.61311508348433222e-02, 4.72663018819416483e-02, 2.62895051055362652e-04},
    {6.65153959318117938e-01, 4.61311508348433222e-02, 2.41448587965097078e-01, 2.62895051055362652e-04},
    {6.65153959318117938e-01, 4.72663018819416483e-02, 4.61311508348433222e-02, 2.62895051055362652e-04},
    {6.65153959318117938e-01, 4.72663018819416483e-02, 2.41448587965097078e-01, 2.62895051055362652e-04},
    {6.65153959318117938e-01, 2.41448587965097078e-01, 4.61311508348433222e-02, 2.62895051055362652e-04},
    {6.65153959318117938e-01, 2.41448587965097078e-01, 4.72663018819416483e-02, 2.62895051055362652e-04},
    {5.16159930715710882e-02, 2.06503334393227433e-01, 2.38133491364750954e-01, 9.26110816795057325e-04},
    {5.16159930715710882e-02, 2.06503334393227433e-01, 5.03747181170450586e-01, 9.26110816795057325e-04},
    {5.16159930715710882e-02, 2.38133491364750954e-01, 2.06503334393227433e-01, 9.26110816795057325e-04},
    {5.16159930715710882e-02, 2.38133491364750954e-01, 5.03747181170450586e-01, 9.26110816795057325e-04},
    {5.16159930715710882e-02, 5.03747181170450586e-01, 2.06503334393227433e-01, 9.26110816795057325e-04},
    {5.16159930715710882e-02, 5.03747181170450586e-01, 2.38133491364750954e-01, 9.26110816795057325e-04},
    {2.06503334393227433e-01, 5.16159930715710882e-02, 2.38133491364750954e-01, 9.26110816795057325e-04},
    {2.06503334393227433e-01, 5.16159930715710882e-02, 5.03747181170450586e-01, 9.26110816795057325e-04},
    {2.06503334393227433e-01, 2.38133491364750954e-01, 5.16159930715710882e-02, 9.26110816795057325e-04},
    {2.06503334393227433e-01, 2.38133491364750954e-01, 5.03747181170450586e-01, 9.26110816795057325e-04},
    {2.06503334393227433e-01, 5.03747181170450586e-01, 5.16159930715710882e-02, 9.26110816795057325e-04},
    {2.06503334393227433e-01, 5.03747181170450586e-01, 2.38133491364750954e-01, 9.26110816795057325e-04},
    {2.38133491364750954e-01, 5.16159930715710882e-02, 2.06503334393227433e-01, 9.26110816795057325e-04},
    {2.38133491364750954e-01, 5.16159930715710882e-02, 5.03747181170450586e-01, 9.26110816795057325e-04},
    {2.38133491364750954e-01, 2.06503334393227433e-01, 5.16159930715710882e-02, 9.26110816795057325e-04},
    {2.38133491364750954e-01, 2.06503334393227433e-01, 5.03747181170450586e-01, 9.26110816795057325e-04},
    {2.38133491364750954e-01, 5.03747181170450586e-01, 5.16159930715710882e-02, 9.26110816795057325e-04},
    {2.38133491364750954e-01, 5.03747181170450586e-01, 2.06503334393227433e-01, 9.26110816795057325e-04},
    {5.03747181170450586e-01, 5.16159930715710882e-02, 2.06503334393227433e-01, 9.26110816795057325e-04},
    {5.03747181170450586e-01, 5.16159930715710882e-02, 2.38133491364750954e-01, 9.26110816795057325e-04},
    {5.03747181170450586e-01, 2.06503334393227433e-01, 5.16159930715710882e-02, 9.26110816795057325e-04},
    {5.03747181170450586e-01, 2.06503334393227433e-01, 2.38133491364750954e-01, 9.26110816795057325e-04},
    {5.03747181170450586e-01, 2.38133491364750954e-01, 5.16159930715710882e-02, 9.26110816795057325e-04},
    {5.03747181170450586e-01, 2.38133491364750954e-01, 2.06503334393227433e-01, 9.26110816795057325e-04},
    {6.74129224287987328e-02, 7.25929036137808736e-02, 3.30663539005417784e-01, 4.30054882240051006e-04},
    {6.74129224287987328e-02, 7.25929036137808736e-02, 5.29330634952002610e-01, 4.30054882240051006e-04},
    {6.74129224287987328e-02, 3.30663539005417784e-01, 7.25929036137808736e-02, 4.30054882240051006e-04},
    {6.74129224287987328e-02, 3.30663539005417784e-01, 5.29330634952002610e-01, 4.30054882240051006e-04},
    {6.74129224287987328e-02, 5.29330634952002610e-01, 7.25929036137808736e-02, 4.30054882240051006e-04},
    {6.74129224287987328e-02, 5.29330634952002610e-01, 3.30663539005417784e-01, 4.30054882240051006e-04},
    {7.25929036137808736e-02, 6.74129224287987328e-02, 3.30663539005417784e-01, 4.30054882240051006e-04},
    {7.25929036137808736e-02, 6.74129224287987328e-02, 5.29330634952002610e-01, 4.30054882240051006e-04},
    {7.25929036137808736e-02, 3.30663539005417784e-01, 6.74129224287987328e-02, 4.30054882240051006e-04},
    {7.25929036137808736e-02, 3.30663539005417784e-01, 5.29330634952002610e-01, 4.30054882240051006e-04},
    {7.25929036137808736e-02, 5.29330634952002610e-01, 6.74129224287987328e-02, 4.30054882240051006e-04},
    {7.25929036137808736e-02, 5.29330634952002610e-01, 3.30663539005417784e-01, 4.30054882240051006e-04},
    {3.30663539005417784e-01, 6.74129224287987328e-02, 7.25929036137808736e-02, 4.30054882240051006e-04},
    {3.30663539005417784e-01, 6.74129224287987328e-02, 5.29330634952002610e-01, 4.30054882240051006e-04},
    {3.30663539005417784e-01, 7.25929036137808736e-02, 6.74129224287987328e-02, 4.30054882240051006e-04},
    {3.30663539005417784e-01, 7.25929036137808736e-02, 5.29330634952002610e-01, 4.30054882240051006e-04},
    {3.30663539005417784e-01, 5.29330634952002610e-01, 6.74129224287987328e-02, 4.30054882240051006e-04},
    {3.30663539005417784e-01, 5.29330634952002610e-01, 7.25929036137808736e-02, 4.30054882240051006e-04},
    {5.29330634952002610e-01, 6.74129224287987328e-02, 7.25929036137808736e-02, 4.30054882240051006e-04},
    {5.29330634952002610e-01, 6.74129224287987328e-02, 3.30663539005417784e-01, 4.30054882240051006e-04},
    {5.29330634952002610e-01, 7.25929036137808736e-02, 6.74129224287987328e-02, 4.30054882240051006e-04},
    {5.29330634952002610e-01, 7.25929036137808736e-02, 3.30663539005417784e-01, 4.30054882240051006e-04},
    {5.29330634952002610e-01, 3.30663539005417784e-01, 6.74129224287987328e-02, 4.30054882240051006e-04},
    {5.29330634952002610e-01, 3.30663539005417784e-01, 7.25929036137808736e-02, 4.30054882240051006e-04},
    {5.04794722010513397e-02, 5.33735982182284852e-02, 7.82876340184101155e-02, 7.50733975721358618e-05},
    {5.04794722010513397e-02, 5.33735982182284852e-02, 8.17859295562310074e-01, 7.50733975721358618e-05},
    {5.04794722010513397e-02, 7.82876340184101155e-02, 5.33735982182284852e-02, 7.50733975721358618e-05},
    {5.04794722010513397e-02, 7.82876340184101155e-02, 8.17859295562310074e-01, 7.50733975721358618e-05},
    {5.04794722010513397e-02, 8.17859295562310074e-01, 5.33735982182284852e-02, 7.50733975721358618e-05},
    {5.04794722010513397e-02, 8.17859295562310074e-01, 7.82876340184101155e-02, 7.50733975721358618e-05},
    {5.33735982182284852e-02, 5.04794722010513397e-02, 7.82876340184101155e-02, 7.50733975721358618e-05},
    {5.33735982182284852e-02, 5.04794722010513397e-02, 8.17859295562310074e-01, 7.50733975721358618e-05},
    {5.33735982182284852e-02, 7.82876340184101155e-02, 5.04794722010513397e-02, 7.50733975721358618e-05},
    {5.33735982182284852e-02, 7.82876340184101155e-02, 8.17859295562310074e-01, 7.50733975721358618e-05},
    {5.33735982182284852e-02, 8.17859295562310074e-01, 5.04794722010513397e-02, 7.50733975721358618e-05},
    {5.33735982182284852e-02, 8.17859295562310074e-01, 7.82876340184101155e-02, 7.50733975721358618e-05},
    {7.82876340184101155e-02, 5.04794722010513397e-02, 5.33735982182284852e-02, 7.50733975721358618e-05},
    {7.82876340184101155e-02, 5.04794722010513397e-02, 8.17859295562310074e-01, 7.50733975721358618e-05},
    {7.82876340184101155e-02, 5.33735982182284852e-02, 5.04794722010513397e-02, 7.50733975721358618e-05},
    {7.82876340184101155e-02, 5.33735982182284852e-02, 8.17859295562310074e-01, 7.50733975721358618e-05},
    {7.82876340184101155e-02, 8.17859295562310074e-01, 5.04794722010513397e-02, 7.50733975721358618e-05},
    {7.82876340184101155e-02, 8.17859295562310074e-01, 5.33735982182284852e-02, 7.50733975721358618e-05},
    {8.17859295562310074e-01, 5.04794722010513397e-02, 5.33735982182284852e-02, 7.50733975721358618e-05},
    {8.17859295562310074e-01, 5.04794722010513397e-02, 7.82876340184101155e-02, 7.50733975721358618e-05},
    {8.17859295562310074e-01, 5.33735982182284852e-02, 5.04794722010513397e-02, 7.50733975721358618e-05},
    {8.17859295562310074e-01, 5.33735982182284852e-02, 7.82876340184101155e-02, 7.50733975721358618e-05},
    {8.17859295562310074e-01, 7.82876340184101155e-02, 5.04794722010513397e-02, 7.50733975721358618e-05},
    {8.17859295562310074e-01, 7.82876340184101155e-02, 5.33735982182284852e-02, 7.50733975721358618e-05},
    {2.49307959609152384e-02, 4.14209372640461232e-02, 4.83017890256897120e-02, 6.13688546890236287e-05},
    {2.49307959609152384e-02, 4.14209372640461232e-02, 8.85346477749348937e-01, 6.13688546890236287e-05},
    {2.49307959609152384e-02, 4.83017890256897120e-02, 4.14209372640461232e-02, 6.13688546890236287e-05},
    {2.49307959609152384e-02, 4.83017890256897120e-02, 8.85346477749348937e-01, 6.13688546890236287e-05},
    {2.49307959609152384e-02, 8.85346477749348937e-01, 4.14209372640461232e-02, 6.13688546890236287e-05},
    {2.49307959609152384e-02, 8.85346477749348937e-01, 4.83017890256897120e-02, 6.13688546890236287e-05},
    {4.14209372640461232e-02, 2.49307959609152384e-02, 4.83017890256897120e-02, 6.13688546890236287e-05},
    {4.14209372640461232e-02, 2.49307959609152384e-02, 8.85346477749348937e-01, 6.13688546890236287e-05},
    {4.14209372640461232e-02, 4.83017890256897120e-02, 2.49307959609152384e-02, 6.13688546890236287e-05},
    {4.14209372640461232e-02, 4.83017890256897120e-02, 8.85346477749348937e-01, 6.13688546890236287e-05},
    {4.14209372640461232e-02, 8.85346477749348937e-01, 2.49307959609152384e-02, 6.13688546890236287e-05},
    {4.14209372640461232e-02, 8.85346477749348937e-01, 4.83017890256897120e-02, 6.13688546890236287e-05},
    {4.83017890256897120e-02, 2.49307959609152384e-02, 4.14209372640461232e-02, 6.13688546890236287e-05},
    {4.83017890256897120e-02, 2.49307959609152384e-02, 8.85346477749348937e-01, 6.13688546890236287e-05},
    {4.83017890256897120e-02, 4.14209372640461232e-02, 2.49307959609152384e-02, 6.13688546890236287e-05},
    {4.83017890256897120e-02, 4.14209372640461232e-02, 8.85346477749348937e-01, 6.13688546890236287e-05},
    {4.83017890256897120e-02, 8.85346477749348937e-01, 2.49307959609152384e-02, 6.13688546890236287e-05},
    {4.83017890256897120e-02, 8.85346477749348937e-01, 4.14209372640461232e-02, 6.13688546890236287e-05},
    {8.85346477749348937e-01, 2.49307959609152384e-02, 4.14209372640461232e-02, 6.13688546890236287e-05},
    {8.85346477749348937e-01, 2.49307959609152384e-02, 4.83017890256897120e-02, 6.13688546890236287e-05},
    {8.85346477749348937e-01, 4.14209372640461232e-02, 2.49307959609152384e-02, 6.13688546890236287e-05},
    {8.85346477749348937e-01, 4.14209372640461232e-02, 4.83017890256897120e-02, 6.13688546890236287e-05},
    {8.85346477749348937e-01, 4.83017890256897120e-02, 2.49307959609152384e-02, 6.13688546890236287e-05},
    {8.85346477749348937e-01, 4.83017890256897120e-02, 4.14209372640461232e-02, 6.13688546890236287e-05},
};

}  // namespace ministokes
