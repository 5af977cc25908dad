"""Reference sequences, vendored so that checks never need the network. Every mapping is keyed by n."""

SCHRODER = {1: 1, 2: 2, 3: 6, 4: 22, 5: 90, 6: 394, 7: 1806, 8: 8558, 9: 41586, 10: 206098}

UNKNOTTED_CYCLES = {n: SCHRODER[n - 1] for n in range(2, 11)}

UNLINKED_DERANGEMENTS = {
    1: 0, 2: 1, 3: 2, 4: 8, 5: 32, 6: 143, 7: 674, 8: 3316, 9: 16832, 10: 87538,
}

UNLINKED_BY_COMPONENTS = {
    1: dict(UNKNOTTED_CYCLES),
    2: {4: 2, 5: 10, 6: 48, 7: 238, 8: 1216, 9: 6354},
    3: {6: 5, 7: 42, 8: 280, 9: 1752},
    4: {8: 14, 9: 168},
}

UNLINKED_WITH_FIXED_POINTS = {
    1: 1, 2: 2, 3: 6, 4: 23, 5: 103, 6: 511, 7: 2719, 8: 15205, 9: 88197,
}

CATALAN_DIAGONAL = {1: 1, 2: 2, 3: 5, 4: 14, 5: 42}

SCHRODER_GROWTH = "S_n ~ (sqrt(2) - 1) / (2^(3/4) * sqrt(pi)) * (3 + sqrt(8))^n * n^(-3/2)"
"""Asymptotic growth of the large Schröder numbers. Recorded for reference and never evaluated."""
