"""
Published genera of quotients H_q / G for q <= 29, with recipes realizing G.

Each row is ``(genus, order, structure, recipe, params)``. ``recipe`` names an
entry of :data:`uqg.constructions.RECIPES` and is None when no construction is
known for the row.
"""


def _row(genus, order, structure, recipe=None, **params):
    return (genus, order, structure, recipe, params)


def _trivial(genus):
    return _row(genus, 1, "trivial", "trivial")


def _a(genus, m):
    return _row(genus, m, "C{} (A)".format(m), "homology", m=m)


def _b1(genus, m, a=1, b=2):
    return _row(genus, m, "C{} (B1)".format(m), "diagonals", entries=[[a, b, m]])


def _b2(genus, m):
    return _row(genus, m, "C{} (B2)".format(m), "b2_element", m=m)


def _b3(genus, m, power):
    return _row(genus, m, "C{} (B3)".format(m), "singer", power=power)


def _c(genus, m):
    return _row(genus, m, "C{} (C)".format(m), "elation")


def _d(genus, m):
    return _row(genus, m, "C{} (D)".format(m), "translation")


def _e(genus, m, d):
    return _row(genus, m, "C{} (E)".format(m), "e_element", d=d)


def _dihedral(genus, n, structure, family=None):
    params = {"n": n} if family is None else {"n": n, "family": family}
    return _row(genus, 2 * n, structure, "dihedral", **params)


def _sylow(genus, order, structure, bs, es):
    return _row(genus, order, structure, "translation_group", bs=bs, es=es)


TABLES = {
    2: (
        _trivial(1),
        _row(0, 2, "C2 (C)", "cyclic", etype="C"),
    ),
    3: (
        _trivial(3),
        _a(1, 2),
        _c(0, 3),
    ),
    4: (
        _trivial(6),
        _b2(2, 3),
        _d(1, 4),
        _a(0, 5),
    ),
    5: (
        _trivial(10),
        _a(4, 2),
        _b3(3, 3, 7),
        _b2(2, 4),
        _a(1, 3),
        _c(0, 5),
    ),
    7: (
        _trivial(21),
        _a(9, 2),
        _b2(7, 3),
        _b1(5, 4),
        _a(3, 4),
        _dihedral(2, 3, "S3 (B2, A)"),
        _row(1, 8, "C4 x C2 (A, A)", "diagonals", entries=[[1, 0, 4], [0, 1, 2]]),
        _c(0, 7),
    ),
    8: (
        _trivial(28),
        _c(12, 2),
        _b1(10, 3),
        _b3(9, 3, 19),
        _a(7, 3),
        _d(6, 4),
        _b2(4, 7),
        _e(3, 6, 3),
        _sylow(2, 8, "C4 x C2 (D, C)", 1, 1),
        _b3(1, 19, 3),
        _a(0, 9),
    ),
    9: (
        _trivial(36),
        _a(16, 2),
        _d(12, 3),
        _c(9, 3),
        _b2(8, 4),
        _row(6, 4, "C2 x C2 (A, A)", "diagonals", entries=[[1, 0, 2], [0, 1, 2]]),
        _a(4, 5),
        _sylow(3, 9, "C3 x C3 (C, D)", 1, 1),
        _dihedral(2, 4, "D8 (B2, A)"),
        _e(1, 15, 5),
        _a(0, 10),
    ),
    11: (
        _trivial(55),
        _a(25, 2),
        _b1(19, 3),
        _b3(18, 3, 37),
        _a(15, 3),
        _b1(13, 4),
        _b2(11, 5),
        _a(10, 4),
        _b1(9, 6),
        _row(7, 8, "Q8", "quaternion"),
        _a(5, 6),
        _dihedral(4, 4, "D8 (B1, A)"),
        _dihedral(3, 5, "D10 (B2, A)"),
        _b2(2, 15),
        _b3(1, 37, 3),
        _a(0, 12),
    ),
    13: (
        _trivial(78),
        _a(36, 2),
        _b2(26, 3),
        _b2(18, 4),
        _row(15, 4, "C2 x C2 (A, A)", "diagonals", entries=[[1, 0, 2], [0, 1, 2]]),
        _b2(12, 6),
        _dihedral(10, 3, "S3"),
        _row(9, 8, "Q8", "quaternion"),
        _dihedral(6, 4, "D8 (B2, A)"),
        _row(5, 12, "A4", "a4"),
        _row(4, 21, "C7 x| C3 (B1, B2)", "cn_c3", n=7),
        _dihedral(3, 7, "D14 (B1, A)"),
        _b2(2, 21),
        _a(0, 14),
    ),
    16: (
        _trivial(120),
        _c(56, 2),
        _b2(40, 3),
        _d(28, 4),
        _sylow(24, 4, "C2 x C2 (A, A)", 0, 2),
        _dihedral(16, 3, "S3 (B2, C)"),
        _sylow(12, 8, "C4 x C2 (D, C)", 1, 1),
        _sylow(8, 8, "C2 x C2 x C2", 0, 3),
        _sylow(6, 16, "C4 x C4 (D, D)", 2, 0),
        _sylow(4, 16, "C2 x C2 x C4", 1, 2),
        _sylow(2, 32, "C2 x C4 x C4", 2, 1),
        _sylow(1, 64, "C4 x C4 x C4", 3, 0),
        _a(0, 17),
    ),
    17: (
        _trivial(136),
        _a(64, 2),
        _b1(46, 3),
        _b3(45, 3, 91),
        _a(40, 3),
        _b2(32, 4),
        _row(28, 4, "C2 x C2 (A, A)", "diagonals", entries=[[1, 0, 2], [0, 1, 2]]),
        _b1(22, 6),
        _b1(19, 6, 1, 3),
        _a(16, 6),
        _b1(14, 9, 1, 3),
        _dihedral(12, 4, "D8 (B2, A)"),
        _row(11, 8, "Dic12", "dicyclic", n=3),
        _row(10, 12, "A4", "a4"),
        _a(8, 9),
        _row(7, 6, "C6 (A)"),
        _b1(6, 18, 1, 6),
        _row(5, 18, "C6 x C3 (A, B1)"),
        _row(4, 18, "C6 x C3 (A, A)", "diagonals", entries=[[0, 1, 6], [1, 2, 3]]),
        _row(3, 18, "S3 x C3"),
        _row(2, 18, "(C3 x C3) x| C2 (A, A, A)"),
        _b3(1, 91, 3),
        _a(0, 18),
    ),
    19: (
        _trivial(171),
        _a(81, 2),
        _b2(57, 3),
        _b1(41, 4),
        _a(36, 4),
        _b1(35, 5),
        _row(27, 4, "C4 (A)"),
        _dihedral(24, 3, "S3 (B2, A)"),
        _row(21, 6, "Q8", "quaternion"),
        _b2(19, 9),
        _b2(18, 8),
        _b1(17, 10),
        _dihedral(16, 4, "D8 (B1, A)"),
        _row(14, 12, "Dic12", "dicyclic", n=3),
        _b1(13, 10, 1, 5),
        _b2(12, 12),
        _a(9, 10),
        _row(8, 21, "C7 x| C3 (B3, B2)"),
        _row(7, 24, "SL(2,3)"),
        _row(6, 24, "C3 x| C8 (B2, B2)"),
        _dihedral(5, 9, "D18 (B2, A)"),
        _row(4, 24, "S3 x C4"),
        _b2(3, 30),
        _row(2, 18, "SmallGroup(32,11)"),
        _row(1, 141, "C49 x| C3 (B3, B2)"),
        _a(0, 20),
    ),
    23: (
        _trivial(253),
        _a(121, 2),
        _b1(85, 3),
        _b3(84, 3, 169),
        _a(77, 3),
        _b1(61, 4),
        _a(55, 4),
        _b1(41, 6),
        _dihedral(37, 3, "S3 (B1, A)"),
        _a(33, 6),
        _row(31, 8, "Q8", "quaternion"),
        _b1(28, 8, 1, 4),
        _row(25, 8, "C4 x C2 (A, A)", "diagonals", entries=[[1, 0, 4], [0, 1, 2]]),
        _b2(23, 11),
        _a(22, 8),
        _b1(21, 12),
        _b1(19, 12, 1, 3),
        _b1(17, 12, 1, 4),
        _row(16, 16, "Q16", "dicyclic", n=4),
        _row(15, 12, "C6 x C2 (A, A)", "diagonals", entries=[[1, 0, 6], [0, 1, 2]]),
        _row(13, 16, "C8 x C2 (B1, A)", "diagonals", entries=[[1, 2, 8], [0, 1, 2]]),
        _a(11, 12),
        _row(10, 16, "C4 x C4 (A, A)", "diagonals", entries=[[1, 0, 4], [0, 1, 4]]),
        _row(9, 18, "C6 x C3 (A, A)", "diagonals", entries=[[1, 0, 6], [0, 1, 3]]),
        _b1(8, 24, 1, 8),
        _b2(7, 33),
        _dihedral(6, 11, "D22 (B2, A)"),
        _row(5, 18, "(C3 x C3) x| C2 (A, A, A)"),
        _row(4, 32, "C8 x C4 (A, A)", "diagonals", entries=[[1, 0, 8], [0, 1, 4]]),
        _row(3, 24, "D8 x C3 (B1, A, A)"),
        _b2(2, 88),
        _b3(1, 169, 3),
        _a(0, 24),
    ),
    25: (
        _trivial(300),
        _a(144, 2),
        _b2(100, 3),
        _b2(72, 4),
        _row(66, 4, "C2 x C2 (A, A)", "diagonals", entries=[[1, 0, 2], [0, 1, 2]]),
        _d(60, 5),
        _c(50, 5),
        _b2(48, 6),
        _dihedral(44, 3, "S3 (B2, A)"),
        _row(36, 8, "Q8", "quaternion"),
        _dihedral(30, 4, "D8 (B2, A)"),
        _e(24, 10, 2),
        _row(22, 12, "C6 x C2 (B2, A)"),
        _dihedral(18, 6, "D12 (B2, A)"),
        _a(12, 13),
        _sylow(10, 25, "C5 x C5 (C, D)", 1, 1),
        _row(8, 39, "C13 x| C3 (B1, B2)", "cn_c3", n=13),
        _dihedral(6, 12, "D24 (B2, A)"),
        _b2(4, 39),
        _row(3, 52, "C13 x| C4 (B1, B2)"),
        _sylow(2, 125, "C5 x C5 x C5 (C, D, D)", 2, 1),
        _a(0, 26),
    ),
    27: (
        _trivial(351),
        _a(169, 2),
        _d(117, 3),
        _c(108, 3),
        _b1(85, 4),
        _a(78, 4),
        _e(52, 6, 2),
        _row(52, 6, "S3 (C, A)", "s3"),
        _b1(51, 7),
        _row(43, 8, "Q8", "quaternion"),
        _a(39, 7),
        _sylow(27, 9, "C3 x C3 (C, C)", 0, 2),
        _row(26, 12, "A4", "a4"),
        _b1(25, 14),
        _e(24, 12, 4),
        _b1(19, 14, 1, 7),
        _row(18, 16, "M16"),
        _b3(18, 19, 37),
        _row(17, 21, "C7 x| C3 (B1, B2)", "cn_c3", n=7),
        _row(16, 18, "C3 x (C3 x| C2) (C, D, A)"),
        _row(15, 16, "D8 o C4 (B1, A, A)"),
        _a(13, 14),
        _e(12, 21, 7),
        _row(10, 24, "SL(2,3)", "sl2_subfield", qbar=3),
        _b3(9, 37, 19),
        _dihedral(7, 13, "D26 (B2, A)"),
        _row(6, 32, "C4 wr C2"),
        _row(5, 48, "(C4 x C4) x| C3 (A, A, D)"),
        _row(4, 48, "(D8 o C4) x| C3 (C)"),
        _row(3, 49, "C7 x C7 (A, A)", "diagonals", entries=[[1, 0, 7], [0, 1, 7]]),
        _row(1, 126, "C14 x C3 x C3 (A, C, C)"),
        _a(0, 28),
    ),
    29: (
        _trivial(406),
        _a(196, 2),
        _b1(136, 3),
        _b3(135, 3, 271),
        _a(126, 3),
        _b2(98, 4),
        _row(91, 4, "C2 x C2 (A, A)", "diagonals", entries=[[1, 0, 2], [0, 1, 2]]),
        _b1(82, 5),
        _a(70, 5),
        _b1(66, 6),
        _dihedral(61, 3, "S3 (B1, A)"),
        _b2(58, 7),
        _a(56, 6),
        _row(49, 8, "Q8", "quaternion"),
        _row(45, 9, "C3 x C3 (B3, B1)"),
        _dihedral(42, 4, "D8 (B2, A)"),
        _b1(40, 10),
        _row(36, 9, "C3 x C3 (A, A)", "diagonals", entries=[[1, 0, 3], [0, 1, 3]]),
        _dihedral(34, 5, "D10 (B1, A)"),
        _row(33, 12, "Dic12", "dicyclic", n=3),
        _row(31, 12, "A4", "a4"),
        _a(28, 10),
        _dihedral(26, 6, "D12 (B1, A)"),
        _b1(24, 15, 1, 5),
        _dihedral(22, 7, "D14 (B2, A)"),
        _row(21, 16, "SD16"),
        _row(20, 20, "Dic20", "dicyclic", n=5),
        _row(19, 20, "C10 x C2 (B1, A)", "diagonals", entries=[[1, 2, 10], [0, 1, 2]]),
        _b2(18, 21),
        _row(17, 24, "SL(2,3)"),
        _row(16, 18, "C6 x C3 (A, A)", "diagonals", entries=[[1, 0, 6], [0, 1, 3]]),
        _a(14, 15),
        _dihedral(13, 10, "D20 (B1, A)"),
        _row(12, 24, "D8 x C3 (B2, A, A)"),
        _dihedral(11, 15, "D30 (B1, A)"),
        _row(10, 25, "C5 x C5 (A, A)", "diagonals", entries=[[1, 0, 5], [0, 1, 5]]),
        _row(8, 36, "(C3 x C3) x| C4 (A, A, B2)"),
        _row(7, 24, "D24 (B2, A)"),
        _row(6, 36, "C3 x C3 x C2 x C2"),
        _row(5, 48, "SD16 x| C3"),
        _row(4, 45, "C15 x C3 (A, A)", "diagonals", entries=[[1, 0, 15], [0, 1, 3]]),
        _row(3, 120, "Q8 x| C15 (B1)"),
        _row(2, 42, "D42 (B2, A)"),
        _b3(1, 271, 3),
        _a(0, 30),
    ),
}

#: Rows whose printed values disagree with a verified construction, keyed by
#: ``(q, genus, order)`` as printed. Values are what the construction gives.
ERRATA = {
    (5, 1, 3): {
        "genus": 2,
        "order": 3,
        "note": "a homology of order 3 leaves genus (q+1-3)(q-1)/6 = 2",
    },
    (11, 2, 15): {
        "genus": 3,
        "order": 15,
        "note": "an element of order 15 of type B2 leaves genus 3",
    },
    (17, 11, 8): {
        "genus": 11,
        "order": 12,
        "note": "Dic12 has order 12; the printed order is 8",
    },
    (19, 21, 6): {
        "genus": 21,
        "order": 8,
        "note": "Q8 has order 8; the printed order is 6",
    },
}

#: Rows reproduced only under a reading of the printed structure.
STRUCTURE_NOTES = {
    (16, 24, 4): "no involutory homologies exist in even characteristic; "
    "the group generated by two elations gives the printed genus",
}
