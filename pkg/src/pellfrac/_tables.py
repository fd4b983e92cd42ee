"""Coefficient tables for the parametrized families, certificates and modular curves.

Every bivariate entry is a list of ``(i, j, c)`` terms meaning ``c * t**i * s**j``;
``c`` is an int or a ``"p/q"`` string. Rational functions are ``{"num": ..., "den": ...}``.
Univariate entries are coefficient lists, highest degree first.
"""

# fmt: off

# Printed (u, v, w) quartic data and Tate (b, c) data per family tag.
FAMILY_FORMULAS = {
    'ord10': {
        'b': {
            "num": [
                (5, 0, 2), (4, 0, -3), (3, 0, 1),
            ],
            "den": [
                (4, 0, 1), (3, 0, -6), (2, 0, 11), (1, 0, -6), (0, 0, 1),
            ],
        },
        'c': {
            "num": [
                (3, 0, -2), (2, 0, 3), (1, 0, -1),
            ],
            "den": [
                (2, 0, 1), (1, 0, -3), (0, 0, 1),
            ],
        },
        'k': {
            "num": [
                (4, 0, -4), (3, 0, 16), (2, 0, -16), (1, 0, 4),
            ],
            "den": [
                (0, 0, 1),
            ],
        },
        'u': {
            "num": [
                (6, 0, -4), (5, 0, -16), (4, 0, 8), (3, 0, 8), (1, 0, -4), (0, 0, 1),
            ],
            "den": [
                (4, 0, 4), (3, 0, -24), (2, 0, 44), (1, 0, -24), (0, 0, 4),
            ],
        },
        'v': {
            "num": [
                (5, 0, -2), (4, 0, 3), (3, 0, -1),
            ],
            "den": [
                (4, 0, 1), (3, 0, -6), (2, 0, 11), (1, 0, -6), (0, 0, 1),
            ],
        },
        'w': {
            "num": [
                (3, 0, 2), (2, 0, -2), (1, 0, -2), (0, 0, 1),
            ],
            "den": [
                (2, 0, 2), (1, 0, -6), (0, 0, 2),
            ],
        },
    },
    'ord12': {
        'b': {
            "num": [
                (6, 0, 12), (5, 0, -30), (4, 0, 34), (3, 0, -21), (2, 0, 7), (1, 0, -1),
            ],
            "den": [
                (4, 0, 1), (3, 0, -4), (2, 0, 6), (1, 0, -4), (0, 0, 1),
            ],
        },
        'c': {
            "num": [
                (4, 0, -6), (3, 0, 9), (2, 0, -5), (1, 0, 1),
            ],
            "den": [
                (3, 0, 1), (2, 0, -3), (1, 0, 3), (0, 0, -1),
            ],
        },
        'k': {
            "num": [
                (9, 0, 432), (8, 0, -1728), (7, 0, 3132), (6, 0, -3348), (5, 0, 2304),
                (4, 0, -1044), (3, 0, 304), (2, 0, -52), (1, 0, 4),
            ],
            "den": [
                (11, 0, 1), (10, 0, -11), (9, 0, 55), (8, 0, -165), (7, 0, 330), (6, 0, -462),
                (5, 0, 462), (4, 0, -330), (3, 0, 165), (2, 0, -55), (1, 0, 11), (0, 0, -1),
            ],
        },
        'u': {
            "num": [
                (8, 0, 12), (7, 0, -120), (6, 0, 336), (5, 0, -468), (4, 0, 372), (3, 0, -168),
                (2, 0, 36), (0, 0, -1),
            ],
            "den": [
                (6, 0, 4), (5, 0, -24), (4, 0, 60), (3, 0, -80), (2, 0, 60), (1, 0, -24),
                (0, 0, 4),
            ],
        },
        'v': {
            "num": [
                (6, 0, -12), (5, 0, 30), (4, 0, -34), (3, 0, 21), (2, 0, -7), (1, 0, 1),
            ],
            "den": [
                (4, 0, 1), (3, 0, -4), (2, 0, 6), (1, 0, -4), (0, 0, 1),
            ],
        },
        'w': {
            "num": [
                (4, 0, 6), (3, 0, -8), (2, 0, 2), (1, 0, 2), (0, 0, -1),
            ],
            "den": [
                (3, 0, 2), (2, 0, -6), (1, 0, 6), (0, 0, -2),
            ],
        },
    },
    'per10_X11': {
        'b': {
            "num": [
                (1, 2, 1), (1, 1, -1), (0, 3, -1), (0, 2, 1),
            ],
            "den": [
                (1, 0, 1),
            ],
        },
        'c': {
            "num": [
                (1, 1, -1), (0, 2, 1),
            ],
            "den": [
                (1, 0, 1),
            ],
        },
        'u': {
            "num": [
                (2, 2, 3), (2, 1, -6), (2, 0, -1), (1, 3, -2), (1, 2, 6), (0, 4, -1),
            ],
            "den": [
                (2, 0, 4),
            ],
        },
        'v': {
            "num": [
                (1, 2, 1), (1, 1, -1), (0, 3, -1), (0, 2, 1),
            ],
            "den": [
                (1, 0, 1),
            ],
        },
        'w': {
            "num": [
                (1, 1, 1), (1, 0, 1), (0, 2, -1),
            ],
            "den": [
                (1, 0, 2),
            ],
        },
    },
    'per10_i': {
        'u': {
            "num": [
                (2, 0, 3), (1, 0, 6), (0, 0, -1),
            ],
            "den": [
                (0, 0, 4),
            ],
        },
        'v': {
            "num": [
                (2, 0, 4), (1, 0, 4),
            ],
            "den": [
                (0, 0, 1),
            ],
        },
        'w': {
            "num": [
                (1, 0, -1), (0, 0, 1),
            ],
            "den": [
                (0, 0, 2),
            ],
        },
    },
    'per12_X13': {
        'b': {
            "num": [
                (10, 0, 1), (9, 0, -1), (8, 0, -5), (7, 1, -1), (7, 0, 7), (6, 0, -1),
                (5, 1, 3), (5, 0, 13), (4, 1, 3), (4, 0, -41), (3, 1, -14), (3, 0, 47),
                (2, 1, 14), (2, 0, -27), (1, 1, -6), (1, 0, 8), (0, 1, 1), (0, 0, -1),
            ],
            "den": [
                (9, 0, 2),
            ],
        },
        'c': {
            "num": [
                (7, 0, 1), (6, 0, -2), (5, 0, -1), (4, 1, -1), (4, 0, 2), (3, 1, 1), (3, 0, 5),
                (2, 1, 2), (2, 0, -9), (1, 1, -3), (1, 0, 5), (0, 1, 1), (0, 0, -1),
            ],
            "den": [
                (5, 0, 2),
            ],
        },
        'u': {
            "num": [
                (14, 0, -1), (13, 0, 4), (12, 0, 2), (11, 1, 2), (11, 0, -16), (10, 1, -6),
                (10, 0, -11), (9, 1, -6), (9, 0, 58), (8, 2, -1), (8, 1, 16), (8, 0, -12),
                (7, 2, 2), (7, 1, 4), (7, 0, -84), (6, 2, 3), (6, 1, -26), (6, 0, 21),
                (5, 2, -10), (5, 1, 50), (5, 0, 56), (4, 2, 4), (4, 1, -62), (4, 0, -23),
                (3, 2, 10), (3, 1, 30), (3, 0, -12), (2, 2, -13), (2, 1, 4), (2, 0, 5),
                (1, 2, 6), (1, 1, -8), (1, 0, 2), (0, 2, -1), (0, 1, 2), (0, 0, -1),
            ],
            "den": [
                (10, 0, 16),
            ],
        },
        'v': {
            "num": [
                (8, 0, 1), (7, 1, -1), (7, 0, 1), (6, 0, -4), (5, 1, 3), (5, 0, -2), (4, 1, 3),
                (4, 0, -1), (3, 1, -14), (3, 0, 13), (2, 1, 14), (2, 0, -14), (1, 1, -6),
                (1, 0, 6), (0, 1, 1), (0, 0, -1),
            ],
            "den": [
                (9, 0, 2),
            ],
        },
        'w': {
            "num": [
                (7, 0, -1), (6, 0, 2), (5, 0, 3), (4, 1, 1), (4, 0, -2), (3, 1, -1),
                (3, 0, -5), (2, 1, -2), (2, 0, 9), (1, 1, 3), (1, 0, -5), (0, 1, -1),
                (0, 0, 1),
            ],
            "den": [
                (5, 0, 4),
            ],
        },
    },
    'per14_X15': {
        'b': {
            "num": [
                (7, 0, -1), (6, 0, -4), (5, 1, -1), (5, 0, -4), (4, 0, -2), (3, 1, 2),
                (3, 0, -1), (2, 1, 1), (1, 1, 1),
            ],
            "den": [
                (8, 0, 1), (7, 0, 7), (6, 0, 22), (5, 0, 41), (4, 0, 50), (3, 0, 41),
                (2, 0, 22), (1, 0, 7), (0, 0, 1),
            ],
        },
        'c': {
            "num": [
                (4, 0, -1), (3, 0, -2), (2, 1, -1), (1, 1, 1),
            ],
            "den": [
                (5, 0, 1), (4, 0, 4), (3, 0, 7), (2, 0, 7), (1, 0, 4), (0, 0, 1),
            ],
        },
        'u': {
            "num": [
                (10, 0, -1), (9, 0, -14), (8, 0, -63), (7, 1, -6), (7, 0, -140), (6, 1, -12),
                (6, 0, -199), (5, 1, -4), (5, 0, -196), (4, 2, -1), (4, 1, 16), (4, 0, -143),
                (3, 2, 2), (3, 1, 22), (3, 0, -78), (2, 2, -1), (2, 1, 14), (2, 0, -30),
                (1, 1, 6), (1, 0, -8), (0, 0, -1),
            ],
            "den": [
                (10, 0, 4), (9, 0, 32), (8, 0, 120), (7, 0, 280), (6, 0, 452), (5, 0, 528),
                (4, 0, 452), (3, 0, 280), (2, 0, 120), (1, 0, 32), (0, 0, 4),
            ],
        },
        'v': {
            "num": [
                (7, 0, -1), (6, 0, -4), (5, 1, -1), (5, 0, -4), (4, 0, -2), (3, 1, 2),
                (3, 0, -1), (2, 1, 1), (1, 1, 1),
            ],
            "den": [
                (8, 0, 1), (7, 0, 7), (6, 0, 22), (5, 0, 41), (4, 0, 50), (3, 0, 41),
                (2, 0, 22), (1, 0, 7), (0, 0, 1),
            ],
        },
        'w': {
            "num": [
                (5, 0, 1), (4, 0, 5), (3, 0, 9), (2, 1, 1), (2, 0, 7), (1, 1, -1), (1, 0, 4),
                (0, 0, 1),
            ],
            "den": [
                (5, 0, 2), (4, 0, 8), (3, 0, 14), (2, 0, 14), (1, 0, 8), (0, 0, 2),
            ],
        },
    },
    'per14_i': {
        'b': {
            "num": [
                (2, 0, 2), (1, 0, -3), (0, 0, 1),
            ],
            "den": [
                (0, 0, 1),
            ],
        },
        'c': {
            "num": [
                (2, 0, 2), (1, 0, -3), (0, 0, 1),
            ],
            "den": [
                (1, 0, 1),
            ],
        },
        'u': {
            "num": [
                (4, 0, 4), (3, 0, 4), (2, 0, -16), (1, 0, 8), (0, 0, -1),
            ],
            "den": [
                (2, 0, 4),
            ],
        },
        'v': {
            "num": [
                (2, 0, 2), (1, 0, -3), (0, 0, 1),
            ],
            "den": [
                (0, 0, 1),
            ],
        },
        'w': {
            "num": [
                (2, 0, -2), (1, 0, 4), (0, 0, -1),
            ],
            "den": [
                (1, 0, 2),
            ],
        },
    },
    'per26_X14': {
        'b': {
            "num": [
                (7, 0, 1), (6, 0, -2), (5, 1, -2), (5, 0, 1), (4, 1, 2), (4, 0, 1), (3, 1, 2),
                (3, 0, -2), (2, 1, -3), (2, 0, 1), (1, 1, 1),
            ],
            "den": [
                (8, 0, 1), (7, 0, -2), (6, 0, -5), (5, 0, 6), (4, 0, 11), (3, 0, -2),
                (2, 0, -6), (0, 0, 1),
            ],
        },
        'c': {
            "num": [
                (3, 1, 1), (3, 0, -1), (2, 1, -2), (2, 0, 1), (1, 1, 1),
            ],
            "den": [
                (4, 0, 1), (3, 0, -1), (2, 0, -3), (0, 0, 1),
            ],
        },
        'u': {
            "num": [
                (8, 0, -1), (7, 1, 2), (7, 0, 4), (6, 2, -1), (6, 1, -4), (5, 2, 4),
                (5, 1, -14), (5, 0, 4), (4, 2, -6), (4, 1, 24), (4, 0, -14), (3, 2, 4),
                (3, 1, 2), (3, 0, -8), (2, 2, -1), (2, 1, -16), (2, 0, 12), (1, 1, 6),
                (0, 0, -1),
            ],
            "den": [
                (8, 0, 4), (7, 0, -8), (6, 0, -20), (5, 0, 24), (4, 0, 44), (3, 0, -8),
                (2, 0, -24), (0, 0, 4),
            ],
        },
        'v': {
            "num": [
                (7, 0, 1), (6, 0, -2), (5, 1, -2), (5, 0, 1), (4, 1, 2), (4, 0, 1), (3, 1, 2),
                (3, 0, -2), (2, 1, -3), (2, 0, 1), (1, 1, 1),
            ],
            "den": [
                (8, 0, 1), (7, 0, -2), (6, 0, -5), (5, 0, 6), (4, 0, 11), (3, 0, -2),
                (2, 0, -6), (0, 0, 1),
            ],
        },
        'w': {
            "num": [
                (4, 0, 1), (3, 1, -1), (2, 1, 2), (2, 0, -4), (1, 1, -1), (0, 0, 1),
            ],
            "den": [
                (4, 0, 2), (3, 0, -2), (2, 0, -6), (0, 0, 2),
            ],
        },
    },
    'per30_X16': {
        'b': {
            "num": [
                (10, 0, -1), (9, 0, -5), (8, 0, 10), (7, 1, -3), (7, 0, 10), (6, 1, 1),
                (6, 0, -40), (5, 1, 17), (5, 0, 64), (4, 1, -35), (4, 0, -74), (3, 1, 39),
                (3, 0, 54), (2, 1, -29), (2, 0, -23), (1, 1, 11), (1, 0, 5), (0, 1, -1),
            ],
            "den": [
                (10, 0, 1), (9, 0, 10), (8, 0, 43), (7, 0, 104), (6, 0, 154), (5, 0, 140),
                (4, 0, 70), (3, 0, 8), (2, 0, -11), (1, 0, -6), (0, 0, -1),
            ],
        },
        'c': {
            "num": [
                (6, 0, 4), (5, 1, -1), (5, 0, 4), (4, 1, -1), (4, 0, -8), (3, 1, 2), (3, 0, 8),
                (2, 1, -6), (2, 0, -12), (1, 1, 7), (1, 0, 4), (0, 1, -1),
            ],
            "den": [
                (7, 0, 1), (6, 0, 7), (5, 0, 19), (4, 0, 25), (3, 0, 15), (2, 0, 1),
                (1, 0, -3), (0, 0, -1),
            ],
        },
        'u': {
            "num": [
                (14, 0, -5), (13, 0, -42), (12, 1, -2), (12, 0, -95), (11, 1, -20),
                (11, 0, -36), (10, 2, -1), (10, 1, -76), (10, 0, -273), (9, 2, -2),
                (9, 1, -60), (9, 0, -1262), (8, 2, 3), (8, 1, 106), (8, 0, -1315), (7, 2, -8),
                (7, 1, -168), (7, 0, -792), (6, 2, -2), (6, 1, -232), (6, 0, -943), (5, 2, 36),
                (5, 1, 552), (5, 0, 570), (4, 2, -66), (4, 1, -302), (4, 0, 3), (3, 2, 88),
                (3, 1, 252), (3, 0, 60), (2, 2, -61), (2, 1, -12), (2, 0, 69), (1, 2, 14),
                (1, 1, -44), (1, 0, -34), (0, 2, -1), (0, 1, 6), (0, 0, -1),
            ],
            "den": [
                (14, 0, 4), (13, 0, 56), (12, 0, 348), (11, 0, 1264), (10, 0, 2964),
                (9, 0, 4648), (8, 0, 4812), (7, 0, 2976), (6, 0, 588), (5, 0, -632),
                (4, 0, -556), (3, 0, -144), (2, 0, 28), (1, 0, 24), (0, 0, 4),
            ],
        },
        'v': {
            "num": [
                (10, 0, -1), (9, 0, -5), (8, 0, 10), (7, 1, -3), (7, 0, 10), (6, 1, 1),
                (6, 0, -40), (5, 1, 17), (5, 0, 64), (4, 1, -35), (4, 0, -74), (3, 1, 39),
                (3, 0, 54), (2, 1, -29), (2, 0, -23), (1, 1, 11), (1, 0, 5), (0, 1, -1),
            ],
            "den": [
                (10, 0, 1), (9, 0, 10), (8, 0, 43), (7, 0, 104), (6, 0, 154), (5, 0, 140),
                (4, 0, 70), (3, 0, 8), (2, 0, -11), (1, 0, -6), (0, 0, -1),
            ],
        },
        'w': {
            "num": [
                (7, 0, 1), (6, 0, 3), (5, 1, 1), (5, 0, 15), (4, 1, 1), (4, 0, 33), (3, 1, -2),
                (3, 0, 7), (2, 1, 6), (2, 0, 13), (1, 1, -7), (1, 0, -7), (0, 1, 1),
                (0, 0, -1),
            ],
            "den": [
                (7, 0, 2), (6, 0, 14), (5, 0, 38), (4, 0, 50), (3, 0, 30), (2, 0, 2),
                (1, 0, -6), (0, 0, -2),
            ],
        },
    },
    'per34_X18': {
        'b': {
            "num": [
                (10, 0, 1), (9, 0, 5), (8, 0, 12), (7, 1, 1), (7, 0, 21), (6, 1, 4),
                (6, 0, 27), (5, 1, 6), (5, 0, 23), (4, 1, 4), (4, 0, 11), (3, 1, 1),
                (3, 0, -1), (2, 0, -5), (1, 1, 1), (1, 0, -3), (0, 1, 1), (0, 0, -1),
            ],
            "den": [
                (11, 0, 2), (9, 0, -12), (8, 0, -4), (7, 0, 18), (6, 0, 12), (5, 0, 2),
            ],
        },
        'c': {
            "num": [
                (5, 0, 1), (4, 0, 4), (3, 0, 9), (2, 1, 1), (2, 0, 11), (1, 1, 3), (1, 0, 5),
                (0, 1, 2),
            ],
            "den": [
                (6, 0, 2), (4, 0, -6), (3, 0, -2),
            ],
        },
        'u': {
            "num": [
                (12, 0, -4), (11, 0, 12), (10, 0, 79), (9, 0, 120), (8, 1, 12), (8, 0, 90),
                (7, 1, 42), (7, 0, -6), (6, 1, 30), (6, 0, -167), (5, 1, -54), (5, 0, -254),
                (4, 2, -1), (4, 1, -120), (4, 0, -239), (3, 2, -6), (3, 1, -120), (3, 0, -150),
                (2, 2, -13), (2, 1, -66), (2, 0, -49), (1, 2, -12), (1, 1, -12), (1, 0, -8),
                (0, 2, -4),
            ],
            "den": [
                (12, 0, 16), (10, 0, -96), (9, 0, -32), (8, 0, 144), (7, 0, 96), (6, 0, 16),
            ],
        },
        'v': {
            "num": [
                (10, 0, 1), (9, 0, 5), (8, 0, 12), (7, 1, 1), (7, 0, 21), (6, 1, 4),
                (6, 0, 27), (5, 1, 6), (5, 0, 23), (4, 1, 4), (4, 0, 11), (3, 1, 1),
                (3, 0, -1), (2, 0, -5), (1, 1, 1), (1, 0, -3), (0, 1, 1), (0, 0, -1),
            ],
            "den": [
                (11, 0, 2), (9, 0, -12), (8, 0, -4), (7, 0, 18), (6, 0, 12), (5, 0, 2),
            ],
        },
        'w': {
            "num": [
                (6, 0, 2), (5, 0, -1), (4, 0, -10), (3, 0, -11), (2, 1, -1), (2, 0, -11),
                (1, 1, -3), (1, 0, -5), (0, 1, -2),
            ],
            "den": [
                (6, 0, 4), (4, 0, -12), (3, 0, -4),
            ],
        },
    },
}

# Square-class certificates, stored factor by factor as printed.
ALPHA_FACTORS = {
    13: [
        [
            (1, 0, 1), (0, 0, -1),
        ],
        [
            (1, 0, 1),
        ],
        [
            (1, 0, 1), (0, 0, 1),
        ],
        [
            (3, 0, 1), (2, 0, -2), (1, 0, -1), (0, 0, 1),
        ],
        [
            (1, 1, 1), (1, 0, -1), (0, 1, -1),
        ],
        [
            (4, 1, 1), (4, 0, -2), (3, 2, 1), (3, 1, -4), (3, 0, 3), (2, 2, -3), (2, 1, 4),
            (2, 0, 2), (1, 2, 3), (1, 1, 1), (1, 0, -1), (0, 2, -1), (0, 1, -1),
        ],
        [
            (5, 0, -1), (4, 0, 1), (3, 1, 2), (2, 0, -1), (1, 1, -2), (1, 0, 1), (0, 1, 1),
        ],
        [
            (9, 2, 1), (9, 1, -5), (9, 0, 6), (8, 2, -5), (8, 1, 17), (8, 0, -13), (7, 2, 10),
            (7, 1, -14), (7, 0, -7), (6, 3, 2), (6, 2, -8), (6, 1, -18), (6, 0, 21),
            (5, 3, -6), (5, 2, -5), (5, 1, 35), (5, 0, -1), (4, 3, 4), (4, 2, 18), (4, 1, -5),
            (4, 0, -5), (3, 3, 5), (3, 2, -11), (3, 1, -10), (3, 0, 4), (2, 3, -9), (2, 1, 8),
            (2, 0, -1), (1, 3, 5), (1, 2, 3), (1, 1, -2), (0, 3, -1), (0, 2, -1),
        ],
    ],
    15: [
        [
            (1, 0, 1), (0, 0, 1),
        ],
        [
            (2, 0, 1), (1, 0, 2), (0, 0, -1),
        ],
        [
            (19, 0, 1), (18, 0, 19), (17, 1, -1), (17, 0, 122), (16, 1, -8), (16, 0, 250),
            (15, 1, 48), (15, 0, -62), (14, 2, -15), (14, 1, 380), (14, 0, -526), (13, 3, 1),
            (13, 2, -101), (13, 1, 732), (13, 0, -1006), (12, 3, 7), (12, 2, -256),
            (12, 1, 1304), (12, 0, -3102), (11, 3, 18), (11, 2, -548), (11, 1, 3304),
            (11, 0, -1996), (10, 3, 38), (10, 2, -1175), (10, 1, 2428), (10, 0, -1048),
            (9, 3, 95), (9, 2, -1081), (9, 1, 2090), (9, 0, -3474), (8, 3, 129), (8, 2, -1144),
            (8, 1, 4488), (8, 0, 4430), (7, 3, 156), (7, 2, -1936), (7, 1, -4160),
            (7, 0, -4018), (6, 3, 276), (6, 2, 723), (6, 1, 4340), (6, 0, 3598), (5, 3, 111),
            (5, 2, -1447), (5, 1, -3844), (5, 0, -1786), (4, 3, 153), (4, 2, 888),
            (4, 1, 1384), (4, 0, 470), (3, 3, 114), (3, 2, -12), (3, 1, -216), (3, 0, -69),
            (2, 3, -90), (2, 2, -45), (2, 1, 20), (2, 0, 5), (1, 3, 17), (1, 2, 5), (1, 1, -1),
            (0, 3, -1),
        ],
        [
            (32, 0, 1), (31, 0, 35), (30, 1, -3), (30, 0, 504), (29, 1, -81), (29, 0, 4008),
            (28, 2, 3), (28, 1, -933), (28, 0, 20445), (27, 2, 69), (27, 1, -6439),
            (27, 0, 76551), (26, 3, -2), (26, 2, 726), (26, 1, -32626), (26, 0, 229512),
            (25, 3, -42), (25, 2, 5206), (25, 1, -126518), (25, 0, 553144), (24, 4, 1),
            (24, 3, -497), (24, 2, 24800), (24, 1, -365798), (24, 0, 1076709), (23, 4, 31),
            (23, 3, -2839), (23, 2, 78936), (23, 1, -838386), (23, 0, 1811983), (22, 5, -1),
            (22, 4, 215), (22, 3, -8889), (22, 2, 202366), (22, 1, -1693321), (22, 0, 2645648),
            (21, 5, -8), (21, 4, 629), (21, 3, -22335), (21, 2, 483570), (21, 1, -2882435),
            (21, 0, 3117520), (20, 5, -21), (20, 4, 1419), (20, 3, -58043), (20, 2, 931395),
            (20, 1, -3930407), (20, 0, 3275313), (19, 5, -40), (19, 4, 3949), (19, 3, -111725),
            (19, 2, 1438957), (19, 1, -4980589), (19, 0, 2944963), (18, 5, -135),
            (18, 4, 6461), (18, 3, -174197), (18, 2, 2217984), (18, 1, -5186604),
            (18, 0, 1419280), (17, 5, -192), (17, 4, 6863), (17, 3, -331599), (17, 2, 2602492),
            (17, 1, -3451268), (17, 0, 950128), (16, 5, -91), (16, 4, 17338), (16, 3, -392826),
            (16, 2, 2113176), (16, 1, -3155332), (16, 0, -139293), (15, 5, -672),
            (15, 4, 8998), (15, 3, -332694), (15, 2, 2536536), (15, 1, -483020),
            (15, 0, -1303543), (14, 5, -10), (14, 4, -8202), (14, 3, -626330), (14, 2, 603068),
            (14, 1, 1583195), (14, 0, 863640), (13, 5, 1040), (13, 4, 40482), (13, 3, -21942),
            (13, 2, -350716), (13, 1, -1618311), (13, 0, -1686328), (12, 5, -2930),
            (12, 4, -65338), (12, 3, -30086), (12, 2, 1399993), (12, 1, 3839261),
            (12, 0, 1247799), (11, 5, 5200), (11, 4, -8950), (11, 3, -557066),
            (11, 2, -3173649), (11, 1, -2857553), (11, 0, -489355), (10, 5, -430),
            (10, 4, 86922), (10, 3, 1243556), (10, 2, 2726998), (10, 1, 1766206),
            (10, 0, 107496), (9, 5, -8160), (9, 4, -259986), (9, 3, -1368280),
            (9, 2, -2229106), (9, 1, -854374), (9, 0, 204632), (8, 5, 23370), (8, 4, 343061),
            (8, 3, 1255195), (8, 2, 1300808), (8, 1, -54966), (8, 0, -237961), (7, 5, -34336),
            (7, 4, -328917), (7, 3, -827395), (7, 2, -356848), (7, 1, 253022), (7, 0, 105093),
            (6, 5, 33947), (6, 4, 241891), (6, 3, 350211), (6, 2, 16038), (6, 1, -106863),
            (6, 0, -23200), (5, 5, -25416), (5, 4, -113607), (5, 3, -92859), (5, 2, 12842),
            (5, 1, 20091), (5, 0, 2624), (4, 5, 11415), (4, 4, 31199), (4, 3, 14737),
            (4, 2, -3007), (4, 1, -1841), (4, 0, -133), (3, 5, -2920), (3, 4, -4839),
            (3, 3, -1241), (3, 2, 287), (3, 1, 69), (3, 0, 1), (2, 5, 421), (2, 4, 393),
            (2, 3, 35), (2, 2, -12), (1, 5, -32), (1, 4, -13), (1, 3, 1), (0, 5, 1),
        ],
        [
            (1, 0, 1), (0, 0, -1),
        ],
        [
            (7, 0, 1), (6, 0, 8), (5, 0, 11), (4, 1, 3), (3, 1, 8), (3, 0, 15), (2, 1, -2),
            (2, 0, -8), (1, 1, 8), (1, 0, 5), (0, 1, -1),
        ],
    ],
    17: [
        [
            (3, 0, 1), (1, 0, -3), (0, 0, -1),
        ],
        [
            (1, 0, 1), (0, 0, 1),
        ],
        [
            (4, 0, 1), (3, 0, 3), (2, 0, 6), (1, 1, 1), (1, 0, 5), (0, 1, 2),
        ],
        [
            (7, 0, 1), (6, 0, 4), (5, 0, 14), (4, 1, 1), (4, 0, 21), (3, 1, 5), (3, 0, 9),
            (2, 1, 3), (2, 0, -2), (1, 1, -1), (1, 0, -1), (0, 1, 1), (0, 0, -1),
        ],
        [
            (17, 0, 1), (16, 0, 8), (15, 0, 41), (14, 1, 1), (14, 0, 157), (13, 1, 9),
            (13, 0, 428), (12, 1, 38), (12, 0, 912), (11, 2, -1), (11, 1, 100), (11, 0, 1475),
            (10, 2, -6), (10, 1, 213), (10, 0, 1424), (9, 2, -24), (9, 1, 213), (9, 0, 216),
            (8, 3, -1), (8, 2, -69), (8, 1, -234), (8, 0, -1183), (7, 3, -7), (7, 2, -160),
            (7, 1, -801), (7, 0, -1370), (6, 3, -19), (6, 2, -239), (6, 1, -720), (6, 0, -578),
            (5, 3, -25), (5, 2, -174), (5, 1, -205), (5, 0, 80), (4, 3, -16), (4, 2, -37),
            (4, 1, 54), (4, 0, 235), (3, 3, -4), (3, 2, -2), (3, 1, 64), (3, 0, 138),
            (2, 3, -1), (2, 2, -17), (2, 1, 41), (2, 0, 37), (1, 3, -4), (1, 2, -4),
            (1, 1, 12), (1, 0, 4), (0, 3, -4), (0, 2, 4),
        ],
        [
            (24, 0, 5), (23, 0, 55), (22, 1, 2), (22, 0, 382), (21, 1, 31), (21, 0, 1933),
            (20, 1, 264), (20, 0, 7527), (19, 2, 4), (19, 1, 1472), (19, 0, 23634),
            (18, 2, 46), (18, 1, 6080), (18, 0, 60753), (17, 2, 302), (17, 1, 19583),
            (17, 0, 128639), (16, 2, 1334), (16, 1, 49927), (16, 0, 226785), (15, 3, -2),
            (15, 2, 4204), (15, 1, 103132), (15, 0, 334919), (14, 3, -60), (14, 2, 9976),
            (14, 1, 177292), (14, 0, 411057), (13, 4, -4), (13, 3, -438), (13, 2, 19260),
            (13, 1, 257510), (13, 0, 411028), (12, 4, -43), (12, 3, -1772), (12, 2, 33652),
            (12, 1, 317611), (12, 0, 326410), (11, 4, -241), (11, 3, -4360), (11, 2, 58224),
            (11, 1, 332136), (11, 0, 200855), (10, 5, -2), (10, 4, -864), (10, 3, -5290),
            (10, 2, 95864), (10, 1, 289240), (10, 0, 97308), (9, 5, -21), (9, 4, -1909),
            (9, 3, 2454), (9, 2, 129842), (9, 1, 201895), (9, 0, 47247), (8, 5, -88),
            (8, 4, -2154), (8, 3, 20106), (8, 2, 127366), (8, 1, 110326), (8, 0, 35080),
            (7, 5, -178), (7, 4, 57), (7, 3, 33300), (7, 2, 82930), (7, 1, 51974),
            (7, 0, 29373), (6, 5, -142), (6, 4, 3459), (6, 3, 27812), (6, 2, 33578),
            (6, 1, 27326), (6, 0, 17831), (5, 5, 80), (5, 4, 4284), (5, 3, 11520),
            (5, 2, 9404), (5, 1, 15176), (5, 0, 6776), (4, 5, 239), (4, 4, 2071), (4, 3, 1314),
            (4, 2, 3894), (4, 1, 5975), (4, 0, 1483), (3, 5, 152), (3, 4, 70), (3, 3, -304),
            (3, 2, 1988), (3, 1, 1240), (3, 0, 166), (2, 5, 8), (2, 4, -296), (2, 3, 172),
            (2, 2, 468), (2, 1, 108), (2, 0, 4), (1, 5, -32), (1, 4, -72), (1, 3, 112),
            (1, 2, 24), (0, 5, -16), (0, 4, 16),
        ],
    ],
}

# Order-6 Tate parameters (c = t, b = t + t^2) behind the period-10 family over Q;
# not printed alongside that family, reconstructed from its u coefficient.
FAMILY_FORMULAS['per10_i']['b'] = {"num": [(2, 0, 1), (1, 0, 1)], "den": [(0, 0, 1)]}
FAMILY_FORMULAS['per10_i']['c'] = {"num": [(1, 0, 1)], "den": [(0, 0, 1)]}

# Modular curves as s^2 + p(t) s + q(t) = 0.
MODULAR_CURVES = {
    11: {"p": [-1], "q": [-1, 1, 0, 0]},                          # s^2 - s = t^3 - t^2
    13: {"p": [0], "q": [-1, 2, -1, 2, -6, 4, -1]},               # s^2 = t^6 - 2t^5 + t^4 - 2t^3 + 6t^2 - 4t + 1
    14: {"p": [1, 1], "q": [-1, 0, 1, 0]},                        # s^2 + ts + s = t^3 - t
    15: {"p": [1, 1], "q": [-1, -1, 0, 0]},                       # s^2 + ts + s = t^3 + t^2
    16: {"p": [0], "q": [-1, -2, 0, -2, 1, 0]},                    # s^2 = t(t^2 + 1)(t^2 + 2t - 1)
    18: {"p": [0], "q": [-1, -2, -5, -10, -10, -4, -1]},          # s^2 = t^6 + 2t^5 + 5t^4 + 10t^3 + 10t^2 + 4t + 1
    (2, 10): {"p": [0], "q": [-1, -1, 1, 0]},                     # s^2 = t^3 + t^2 - t
    (2, 12): {"p": [0], "q": [-1, 1, -1, 0]},                     # s^2 = t^3 - t^2 + t
}

# Cusp loci in t, as lists of factors.
CUSP_FACTORS = {
    11: [[1, 0], [1, -1], [1, -18, 35, -16, -2, 1]],
    13: [[1, 0], [1, -1], [1, -4, 1, 1]],
    14: [[1, 0], [1, -1], [1, 1], [1, -9, -1, 1], [1, -2, -1, 1]],
    15: [[1, 0], [1, 1], [1, 3, 4, 2, 1], [1, -7, -6, 2, 1]],
    16: [[1, 0], [1, -1], [1, 1], [1, -2, -1], [1, 2, -1]],
    18: [[1, 0], [1, 1], [1, 1, 1], [1, -3, -1]],
    (2, 10): [[1, 0], [1, -1], [1, 1], [1, 1, -1], [1, -4, -1]],
    (2, 12): [[1, 0], [1, -1], [2, -1], [2, -1, 1], [3, -3, -1], [6, -6, -1]],
}

# Nonvanishing conditions attached to each family's parameter point.
ADMISSIBILITY_FACTORS = {
    11: [[1, 0], [1, -1], [1, -18, 35, -16, -2, 1]],
    13: [[1, 0], [1, -1], [1, -4, 1, 1]],
    14: [[1, 0], [1, -1], [1, 1], [1, -9, -1, 1], [1, -2, -1, 1]],
    15: [[1, 0], [1, 1], [1, 1, 1], [1, 3, 4, 2, 1], [1, -7, -6, 2, 1]],
    16: [[1, 0], [1, -1], [1, 1], [1, 0, 1], [1, -2, -1], [1, 2, -1]],
    18: [[1, 0], [1, 1], [1, 1, 1], [1, -3, -1]],
}
