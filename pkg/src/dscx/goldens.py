"""Reference values used as golden checks.

Keys follow the package conventions: ``FVECTORS[n]`` is the f-vector of the
unconstrained complex at generation ``n``; ``CENSUS[(d, n)]`` lists
``(upper degree, multiplicity)`` pairs; ``STATIONARY_DEGREES[p]`` is the list of
distinct ``(n - p)``-degrees, identical for every ``n >= p + 1``.
"""

FVECTORS = {
    0: [1],
    1: [2, 1],
    2: [5, 5, 1],
    3: [16, 23, 9, 1],
    4: [65, 116, 65, 14, 1],
    5: [326, 669, 470, 145, 20, 1],
    6: [1957, 4429, 3634, 1415, 280, 27, 1],
    7: [13700, 33375, 30681, 14084, 3535, 490, 35, 1],
    8: [109601, 283072, 284066, 147532, 43939, 7756, 798, 44, 1],
    9: [986410, 2673321, 2878284, 1646714, 558642, 117579, 15456, 1230, 54, 1],
}

# distinct d-degrees K^(d)(n) for n <= 5, keyed by (d, n)
DISTINCT_DEGREES = {
    (0, 1): [1],
    (0, 2): [1, 2, 3],
    (1, 2): [0, 1],
    (0, 3): [1, 2, 3, 6, 8],
    (1, 3): [0, 1, 2, 3],
    (2, 3): [0, 1],
    (0, 4): [1, 2, 3, 4, 6, 8, 11, 19, 24],
    (1, 4): [0, 1, 2, 3, 6, 8],
    (2, 4): [0, 1, 2, 3],
    (3, 4): [0, 1],
    (0, 5): [1, 2, 3, 4, 5, 6, 8, 11, 19, 20, 24, 46, 73, 89],
    (1, 5): [0, 1, 2, 3, 4, 6, 8, 11, 19, 24],
    (2, 5): [0, 1, 2, 3, 6, 8],
    (3, 5): [0, 1, 2, 3],
    (4, 5): [0, 1],
}

STATIONARY_DEGREES = {
    1: [
        0, 1,
    ],
    2: [
        0, 1, 2, 3,
    ],
    3: [
        0, 1, 2, 3, 6, 8,
    ],
    4: [
        0, 1, 2, 3, 4, 6, 8, 11, 19, 24,
    ],
    5: [
        0, 1, 2, 3, 4, 5, 6, 8, 11, 19, 20, 24, 46, 73, 89,
    ],
    6: [
        0, 1, 2, 3, 4, 5, 6, 8, 11, 19, 20, 24, 37, 46, 73, 89, 117, 236, 350, 415,
    ],
    7: [
        0, 1, 2, 3, 4, 5, 6, 7, 8, 11, 19, 20, 24, 37, 46, 70, 73, 89, 117, 236, 312,
        350, 415, 807, 1459, 2046, 2372,
    ],
    8: [
        0, 1, 2, 3, 4, 5, 6, 7, 8, 11, 19, 20, 24, 37, 46, 70, 73, 89, 117, 135, 236,
        312, 350, 415, 807, 863, 1459, 2046, 2372, 2878, 6352, 10527, 14115, 16072,
    ],
}

CENSUS = {
    (0, 1): [
        (1, 2),
    ],
    (0, 2): [
        (1, 2), (2, 1), (3, 2),
    ],
    (1, 2): [
        (0, 2), (1, 3),
    ],
    (0, 3): [
        (1, 5), (2, 5), (3, 3), (6, 1), (8, 2),
    ],
    (1, 3): [
        (0, 5), (1, 12), (2, 3), (3, 3),
    ],
    (2, 3): [
        (0, 5), (1, 4),
    ],
    (0, 4): [
        (1, 16), (2, 23), (3, 14), (4, 1), (6, 5), (8, 2), (11, 1), (19, 1), (24, 2),
    ],
    (1, 4): [
        (0, 16), (1, 51), (2, 27), (3, 16), (6, 3), (8, 3),
    ],
    (0, 5): [
        (1, 65), (2, 116), (3, 81), (4, 14), (5, 1), (6, 23), (8, 5), (11, 9), (19, 5),
        (20, 1), (24, 2), (46, 1), (73, 1), (89, 2),
    ],
    (1, 5): [
        (0, 65), (1, 248), (2, 195), (3, 107), (4, 5), (6, 27), (8, 12), (11, 4),
        (19, 3), (24, 3),
    ],
    (2, 5): [
        (0, 116), (1, 218), (2, 84), (3, 42), (6, 6), (8, 4),
    ],
    (0, 6): [
        (1, 326), (2, 669), (3, 535), (4, 145), (5, 20), (6, 117), (8, 16), (11, 65),
        (19, 23), (20, 14), (24, 5), (37, 1), (46, 9), (73, 5), (89, 2), (117, 1),
        (236, 1), (350, 1), (415, 2),
    ],
    (1, 6): [
        (0, 326), (1, 1403), (2, 1410), (3, 828), (4, 100), (5, 6), (6, 195), (8, 51),
        (11, 56), (19, 27), (20, 5), (24, 12), (46, 4), (73, 3), (89, 3),
    ],
    (2, 6): [
        (0, 669), (1, 1526), (2, 870), (3, 418), (4, 15), (6, 84), (8, 32), (11, 10),
        (19, 6), (24, 4),
    ],
    (3, 6): [
        (0, 470), (1, 645), (2, 200), (3, 85), (6, 10), (8, 5),
    ],
    (0, 7): [
        (1, 1957), (2, 4429), (3, 3960), (4, 1415), (5, 280), (6, 696), (7, 1),
        (8, 65), (11, 470), (19, 116), (20, 145), (24, 16), (37, 20), (46, 65),
        (70, 1), (73, 23), (89, 5), (117, 14), (236, 9), (312, 1), (350, 5), (415, 2),
        (807, 1), (1459, 1), (2046, 1), (2372, 2),
    ],
    (1, 7): [
        (0, 1957), (1, 9184), (2, 10902), (3, 7063), (4, 1400), (5, 162), (6, 1417),
        (8, 248), (11, 580), (19, 195), (20, 100), (24, 51), (37, 6), (46, 56),
        (73, 27), (89, 12), (117, 5), (236, 4), (350, 3), (415, 3),
    ],
    (2, 7): [
        (0, 4429), (1, 11571), (2, 8490), (3, 4326), (4, 405), (5, 21), (6, 870),
        (8, 218), (11, 200), (19, 84), (20, 15), (24, 32), (46, 10), (73, 6), (89, 4),
    ],
    (3, 7): [
        (0, 3634), (1, 6130), (2, 2800), (3, 1185), (4, 35), (6, 200), (8, 65),
        (11, 20), (19, 10), (24, 5),
    ],
    (4, 7): [
        (0, 1415), (1, 1545), (2, 405), (3, 149), (6, 15), (8, 6),
    ],
    (0, 8): [
        (1, 13700), (2, 33375), (3, 32638), (4, 14084), (5, 3535), (6, 4919), (7, 35),
        (8, 327), (11, 3634), (19, 669), (20, 1415), (24, 65), (37, 280), (46, 470),
        (70, 27), (73, 116), (89, 16), (117, 145), (135, 1), (236, 65), (312, 20),
        (350, 23), (415, 5), (807, 14), (863, 1), (1459, 9), (2046, 5), (2372, 2),
        (2878, 1), (6352, 1), (10527, 1), (14115, 1), (16072, 2),
    ],
    (1, 8): [
        (0, 13700), (1, 68707), (2, 92043), (3, 65520), (4, 17675), (5, 2940),
        (6, 11147), (7, 8), (8, 1403), (11, 5660), (19, 1410), (20, 1400), (24, 248),
        (37, 162), (46, 580), (70, 7), (73, 195), (89, 51), (117, 100), (236, 56),
        (312, 6), (350, 27), (415, 12), (807, 5), (1459, 4), (2046, 3), (2372, 3),
    ],
    (2, 8): [
        (0, 33375), (1, 96472), (2, 84504), (3, 46921), (4, 7350), (5, 735), (6, 8518),
        (8, 1526), (11, 2800), (19, 870), (20, 405), (24, 218), (37, 21), (46, 200),
        (73, 84), (89, 32), (117, 15), (236, 10), (350, 6), (415, 4),
    ],
    (3, 8): [
        (0, 30681), (1, 59970), (2, 35350), (3, 15930), (4, 1225), (5, 56), (6, 2800),
        (8, 645), (11, 540), (19, 200), (20, 35), (24, 65), (46, 20), (73, 10),
        (89, 5),
    ],
    (4, 8): [
        (0, 14084), (1, 19090), (2, 7350), (3, 2770), (4, 70), (6, 405), (8, 114),
        (11, 35), (19, 15), (24, 6),
    ],
    (5, 8): [
        (0, 3535), (1, 3220), (2, 735), (3, 238), (6, 21), (8, 7),
    ],
}

# distinct vertex degrees of the two-dimensional constrained model
DSC2_DISTINCT_VERTEX_DEGREES = {
    1: [1],
    2: [1, 2, 3],
    3: [1, 2, 3, 5, 7],
    4: [1, 2, 3, 5, 7, 11, 15],
    5: [1, 2, 3, 5, 7, 11, 15, 23, 31],
    6: [1, 2, 3, 5, 7, 11, 15, 23, 31, 47, 63],
}

DSC2_ONE_DEGREE_CENSUS = {
    2: [(0, 2), (1, 3)],
    3: [(0, 5), (1, 12), (2, 3)],
    4: [(0, 15), (1, 45), (2, 12), (3, 3)],
}

DSC2_VERTEX_DEGREE_CENSUS = {
    1: [(1, 2)],
    2: [(1, 2), (2, 1), (3, 2)],
    3: [(1, 5), (2, 5), (3, 2), (5, 1), (7, 2)],
}

LOGARITHMIC_NUMBERS = [1, 3, 8, 24, 89, 415, 2372, 16072]

# Laplacian characteristic-polynomial factors of the tree model, ascending coefficients
PI_FACTORS = {
    1: [
        2, -1,
    ],
    2: [
        2, -4, 1,
    ],
    3: [
        2, -12, 18, -8, 1,
    ],
    4: [
        2, -32, 168, -396, 472, -296, 98, -16, 1,
    ],
    5: [
        2, -80, 1208, -9552, 45476, -140600, 295460, -434172, 453962, -340944, 184428,
        -71516, 19594, -3684, 450, -32, 1,
    ],
    6: [
        2, -192, 7552, -168016, 2429056, -24672704, 185087064, -1061439008, 4771422936,
        -17131717600, 49845993112, -118859071000, 234345967208, -384712533224,
        528733119200, -610901653388, 595213158568, -490043745744, 341299300448,
        -201108575904, 100168324568, -42087010696, 14866893448, -4393269256,
        1078500576, -217847304, 35733280, -4673696, 474920, -36064, 1922, -64, 1,
    ],
    7: [
        2, -448, 43296, -2475008, 95802352, -2710026912, 58848566672, -1015322599120,
        14276120264664, -166811577840832, 1644952088329168, -13861672325942416,
        100852187226166856, -639005480497405168, 3551759016685178600,
        -17426681983367704176, 75885537057453902356, -294652679333249886624,
        1024345335985165113984, -3199835643260413205840, 9010097606614633096736,
        -22933328467668082847696, 52895197062371681474728, -110797548329198863794632,
        211180285681193265670336, -366887826245295683140832, 581875029694786789717496,
        -843573067183096269924688, 1119229472188587709837192,
        -1360373049232441866421904, 1516054243947087449817516,
        -1550259517961348141265516, 1455406505514364268533698,
        -1255034375536319939236704, 994407288655882984773456,
        -724104605969591122083056, 484620861293428811828944, -298088604338866354974016,
        168481042772369799801968, -87473693463505454653200, 41698241195897687997968,
        -18238748013419543763968, 7314030250954793877232, -2686380322408351452648,
        902610279766402908552, -277029440260862642776, 77535414566037487188,
        -19749102387753234676, 4567107690848518688, -956268175503207552,
        180698152592272704, -30697807426865216, 4667515749947904, -631780861865648,
        75642564296104, -7949007809280, 726210225040, -56993981992, 3784179976,
        -208316232, 9247506, -317916, 7938, -128, 1,
    ],
}

# factorisations of the adjacency characteristic polynomial, ascending
ADJACENCY_FACTORS = {
    1: ([-1, 1], [1, 1]),
    2: ([-1, -1, 1], [-1, 1, 1]),
    3: ([1, 1, -3, -1, 1], [1, -1, -3, 1, 1]),
    4: ([1, 1, -7, -4, 13, 4, -7, -1, 1], [1, -1, -7, 4, 13, -4, -7, 1, 1]),
}

LAMBDA2_SCALED_LIMIT = 1.77525
DSC1_GAMMA = 2.855
DSC3_GROWTH_RATE = 5.491
DSC3_TWO_DEGREE_PREFACTOR = 3.271
GROWTH_FIT_CONSTANT = 2.645
