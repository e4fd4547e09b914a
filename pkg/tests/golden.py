"""Golden values for the spectral tables and link polynomials.

The per-index tables for n = 3, 4, 5 and the link polynomials are classical
closed-form answers; they were frozen here after independent hand derivations
(duality from the complement for the totals, exact sequences and Thom
isomorphisms block by block) and are the primary guard against sign and
degree-shift regressions.

Keys of the table dicts are the index parts; values map total homological
degree to rank.
"""

SPECTRAL_TABLES = {
    3: {
        (2,): {2: 1, 4: 1, 6: 1},
        (3,): {4: 1, 6: 1},
    },
    4: {
        (2,): {5: 1, 7: 1, 9: 2, 11: 1, 13: 1},
        (3,): {5: 1, 7: 2, 9: 2, 11: 2, 13: 1},
        (2, 2): {3: 1, 7: 1, 11: 1},
        (4,): {5: 1, 7: 1, 9: 2, 11: 1, 13: 1},
    },
    5: {
        (2,): {10: 1, 12: 1, 14: 2, 16: 2, 18: 2, 20: 1, 22: 1},
        (3,): {8: 1, 10: 2, 12: 3, 14: 4, 16: 4, 18: 3, 20: 2, 22: 1},
        (2, 2): {4: 1, 6: 1, 8: 2, 10: 2, 12: 3, 14: 2, 16: 2, 18: 1, 20: 1},
        (4,): {6: 1, 8: 2, 10: 4, 12: 5, 14: 6, 16: 5, 18: 4, 20: 2, 22: 1},
        (3, 2): {6: 1, 8: 2, 10: 3, 12: 4, 14: 4, 16: 3, 18: 2, 20: 1},
        (5,): {6: 1, 8: 2, 10: 3, 12: 4, 14: 4, 16: 4, 18: 3, 20: 2, 22: 1},
    },
}

LINK_POLYNOMIALS = {
    3: {2: 1, 4: 1},
    4: {3: 1, 5: 1, 7: 2, 9: 1, 11: 1},
    # t^4 (1 + t^2 + t^4 + t^6)(1 + t^2 + ... + t^10) expanded
    5: {4: 1, 6: 2, 8: 3, 10: 4, 12: 4, 14: 4, 16: 3, 18: 2, 20: 1},
}
