"""Reference values used by the acceptance and regression tests.

Polynomials are written in the package's own text syntax; generators are
compared after scaling each to be monic.
"""

from __future__ import annotations

A21_ORBIT = [(1, 1, 1), (2, 3, 7), (11, 26, 41), (97, 153, 362), (571, 1351, 2131)]
A21_IDEALS = [
    ["x1 - 2*x2 + x3", "2*x2^2 - 6*x2*x3 + 3*x3^2 + 1"],
    ["x1 - 3*x2 + x3", "3*x2^2 - 6*x2*x3 + 2*x3^2 + 1"],
]

A22_ORBIT = [(1, 1, 1, 1), (2, 3, 3, 10), (5, 17, 17, 29), (58, 99, 99, 338), (169, 577, 577, 985)]
A22_IDEALS_ONES = [
    ["x1 - 2*x3 + x4", "x2 - x3", "2*x4^2 - 4*x3*x4 + x3^2 + 1"],
    ["x1 - 4*x3 + x4", "x2 - x3", "x4^2 - 4*x3*x4 + 2*x3^2 + 2"],
]
A22_IDEAL_1112 = ["x3^2 - 3*x3*x4 + x4^2 + 1", "x2 - x3", "x1 - 3*x3 + x4"]
A22_IDEAL_MU4 = ["x3^2 - 3*x3*x4 + x4^2 + 1", "x2 - x3", "x1 - x4"]

E6_TRIPLES = [  # (x1, x2, x7)
    (1, 1, 1), (2, 3, 28), (2, 19, 245), (10, 129, 8762), (13, 883, 78574),
    (68, 6051, 2819698), (89, 41473, 25298441), (466, 284259, 907922780),
    (610, 1948339, 8146004749), (3194, 13354113, 292348238602),
    (4181, 91530451, 2622988130126), (21892, 627359043, 94135224380258),
    (28657, 4299982849, 844594031206225),
]
E6_X0 = [
    "2*x1^2*(2*x1^2 - 3*x2 - 1) + (x2 + 1)^2",
    "x3 - x1", "x4 - x2", "x5 - x1", "x6 - x2",
    "4*x1^2*(3*x1^2 - 4*x2 - 1) + 3*(x2 + 1) + 2*x1*x7",
    "x1^3*(32*x1^2 - 42*x2 - 16) + x1*(15*x2 + 9) + x7*(x2 + 1)",
    "x1^4*(440*x1^2 - 576*x2 - 400) + x1^2*(444*x2 + 198) - 63*x2 + 2*x7^2 - 45",
]
E6_X1 = [
    "x1^2*(x1^2 - 6*x2 - 2) + 4*(x2 + 1)^2",
    "x3 - x1", "x4 - x2", "x5 - x1", "x6 - x2",
    "x1^2*(3*x1^2 - 16*x2 - 4) + 12*(x2 + 1) + 2*x1*x7",
    "x1^3*(4*x1^2 - 21*x2 - 8) + x1*(30*x2 + 18) + 2*x7*(x2 + 1)",
    "x1^4*(55*x1^2 - 288*x2 - 200) + x1^2*(888*x2 + 396) - 504*x2 + 4*x7^2 - 360",
]

E7_PREFIX = [1, 2, 2, 2, 9, 13, 13, 79, 89, 115, 544, 788, 792, 4817, 5427, 7013, 33175]
E7_X0 = [
    "x1^2*(3393*x1^2 - 4347*x2 - 1538) + 623*(x2 + 1)^2",
    "x1^2*(30537*x1^2 - 37343*x2 - 9125) + 5607*(x2 + 1) + 4717*x1*x3",
    "x1^3*(126704799*x1^2 - 143305470*x2 - 57433534) + x1*(41953443*x2 + 26203380)"
    " + 2938691*x3*(x2 + 1)",
    "x1^4*(78312916890*x1^2 - 87566459589*x2 - 60724717366) + x1^2*(55094217528*x2 + 25552599807)"
    " - 6298169283*x2 + 261543499*x3^2 - 4631931486",
    "x4 - x1", "x5 - x2", "x6 - x3",
    "180*x1^2 - 567*x2 + 371*x7 + 16",
    "x1^2*(2100267*x1^2 - 2348766*x2 - 996878) + 771274*x2 + 33019*x8 + 441084",
]

E8_X0 = [
    "x1^2*(22543305725*x1^2 - 26141135142*x2 - 8110066079) + 2926973874*(x2 + 1)^2",
    "x1^2*(16343896650625*x1^2 - 18723148834356*x2 - 3872328920422)"
    " + 2007468986853*x1*x3 + 2122056058650*(x2 + 1)",
    "x1^3*(70346944717927448581350*x1^2 - 73601034244490747961217*x2"
    " - 25307662375596497568354) + 16490152683938879106436*x1*x2"
    " + 10112996125759591015611*x1 + 979301546230663413087*x3*(x2 + 1)",
    "x1^4*(23383957524892770437902768648325*x1^2 - 24210646824344145750432418618584*x2"
    " - 14002149395163331739829469440508) + 11499945776245224835235334136644*x1^2*x2"
    " + 5008293274220414979609114513086*x1^2 + 38735000548445337672882684987*x3^2"
    " - 992386730386199596313604245100*x2 - 725748626013178503844607678850",
    "x1^2*(359194242257305722650*x1^2 - 374728683921258002475*x2"
    " - 130558886700336479750) + 4483394914071055521*x4"
    " + 89821049942925712125*x2 + 51788883507291991929",
    "x1^3*(34269327083645850969959832434375*x1^2 - 35455633995008172262734155417500*x2"
    " - 12821905410327630628329344566250) + 8431648068155826092943294521602*x1*x2"
    " + 42855924958221078851074695075*x5 + 5036048458218815748413466112899*x1"
    " + 497659870357089000895832219799*x3",
    "x1*(-83816240368052250*x1^2 + 208895750256064746*x2 + 7746683096103102)"
    " - 258477022652889623*x3 + 125650829668774025*x6",
    "1036864580*x1^2 - 2701572585*x2 + 1629628077*x7 + 35079928",
    "x1^2*(782877279783238984727450*x1^2 - 814535978663555483485075*x2"
    " - 291737428469833096141830) + 203185971689938628179129*x2"
    " + 6855110823614643891609*x8 + 113355044836596322828717",
    "x1^4*(2726538880152109668781259112672250*x1^2 - 2819349208031363391362477411375475*x2"
    " - 1702791311300737001077661419569500) + 609132147201086599311161270518771*x1^2"
    " + x2*(1412169293224665453709653706876878*x1^2 - 132300105635140811563888457586822)"
    " + 271145003839117363710178794909*x9 - 93670840614459635161756980331011",
]

STAR_FOLDED = "x2^4 - 5*x1*x2^2 + x1^2 + 2*x1 + 1"
STAR_UNFOLDED = [STAR_FOLDED, "x3 - x2", "x4 - x2", "x5 - x2"]
STAR_FOLDED_ORBIT = [(1, 1), (2, 3), (41, 14)]
