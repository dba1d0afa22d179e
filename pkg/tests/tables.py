# a(n, d) for n = 1..16, columns d = 0, 1, 2, 3, as published
TABLE = {
    1: (1, 1, 1, 1),
    2: (0, 0, 2, 2),
    3: (0, 0, 4, 6),
    4: (0, 2, 16, 20),
    5: (10, 14, 44, 80),
    6: (36, 90, 200, 384),
    7: (322, 646, 1288, 2240),
    8: (2832, 5242, 9512, 15424),
    9: (27954, 47622, 78652, 123456),
    10: (299260, 479306, 744360, 1110928),
    11: (3474482, 5296790, 7867148, 11287232),
    12: (43546872, 63779034, 91310696, 127016304),
    13: (586722162, 831283558, 1154292796, 1565107248),
    14: (8463487844, 11661506218, 15784573160, 20935873872),
    15: (130214368530, 175203184374, 232050062524, 301974271248),
    16: (2129319003680, 2806878055610, 3648471927912, 4669727780624),
}


def column(d):
    return [TABLE[n][d] for n in sorted(TABLE)]
