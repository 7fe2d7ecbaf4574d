"""Published reference tables, transcribed digit for digit.

Both tables were computed by their authors for mu = 0.025, r_c = 0.8,
T = 0.01.  Misprints found during verification are flagged here rather
than silently corrected; the flags drive the provenance column of the
table-reproduction report.

Normative status: frequency cells are normative only in the classical
column (A2 = 0, M_b = 0); critical-mass cells are normative in the two
belt-free columns.  Non-normative cells disagree with a direct
evaluation of the printed closed forms; the reproduction report prints
both values and the gap for every cell instead of asserting agreement,
and no test asserts a non-normative cell.
"""

from __future__ import annotations

# Belt masses used for the table columns.
BELT_MASSES = (0.0, 0.2, 0.4, 0.6)
A2_VALUES = (0.0, 0.02, 0.04)
FREQ_Q1_VALUES = (1.0, 0.75, 0.5, 0.25, 0.0)
MASS_Q1_VALUES = (1.0, 0.75, 0.5)
RESONANCE_ORDERS = (1, 2, 3, 4, 5)

# Long-period/short-period frequency pairs (omega1, omega2) at the
# triangular points, keyed (a2, q1) -> {mb: (omega1, omega2)}.
FREQUENCY_TABLE = {
    (0.0, 1.0): {
        0.0: (0.890141, 0.455686),
        0.2: (1.18033, 0.4815237),
        0.4: (1.41795, 0.489382),
        0.6: (1.62232, 0.493127),
    },
    (0.0, 0.75): {
        0.0: (0.880622, 0.47382),
        0.2: (1.17804, 0.487083),
        0.4: (1.41737, 0.491041),
        0.6: (1.62238, 0.492928),
    },
    (0.0, 0.5): {
        0.0: (0.869076, 0.494679),
        0.2: (1.17602, 0.491953),
        0.4: (1.41733, 0.491159),
        0.6: (1.62304, 0.490779),
    },
    (0.0, 0.25): {
        0.0: (0.853749, 0.520684),
        0.2: (1.17436, 0.495895),
        0.4: (1.41812, 0.488893),
        0.6: (1.62461, 0.485532),
    },
    (0.0, 0.0): {
        0.0: (0.821584, 0.570088),
        0.2: (1.17349, 0.497955),
        0.4: (1.4215, 0.478958),
        0.6: (1.62926, 0.4697),
    },
    (0.02, 1.0): {
        0.0: (0.910283, 0.447086),
        0.2: (1.1934, 0.477057),
        0.4: (1.42768, 0.486598),
        0.6: (1.63005, 0.491211),
    },
    (0.02, 0.75): {
        0.0: (0.901845, 0.463871),
        0.2: (1.19127, 0.482336),
        0.4: (1.42716, 0.48813),
        0.6: (1.63013, 0.490934),
    },
    (0.02, 0.5): {
        0.0: (0.891743, 0.483005),
        0.2: (1.18941, 0.486917),
        0.4: (1.42716, 0.488124),
        0.6: (1.6308, 0.488709),
    },
    (0.02, 0.25): {
        0.0: (0.878605, 0.506511),
        0.2: (1.18791, 0.490552),
        0.4: (1.42798, 0.485737),
        0.6: (1.63238, 0.48339),
    },
    (0.02, 0.0): {
        0.0: (0.852388, 0.549485),
        # omega2 printed as 1.43137, a copy of the omega1 value of the
        # next column; flagged below
        0.2: (1.18724, 1.43137),
        0.4: (1.43137, 0.475658),
        0.6: (1.63701, 0.467476),
    },
    (0.04, 1.0): {
        0.0: (0.929538, 0.439272),
        0.2: (1.20624, 0.472778),
        0.4: (1.43732, 0.483883),
        0.6: (1.63772, 0.489328),
    },
    (0.04, 0.75): {
        0.0: (0.921985, 0.45491),
        0.2: (1.20426, 0.477788),
        0.4: (1.43685, 0.48529),
        0.6: (1.63783, 0.488972),
    },
    (0.04, 0.5): {
        0.0: (0.913034, 0.47262),
        0.2: (1.20254, 0.482095),
        0.4: (1.43689, 0.485164),
        0.6: (1.63851, 0.486674),
    },
    (0.04, 0.25): {
        0.0: (0.901559, 0.494157),
        0.2: (1.2012, 0.485439),
        0.4: (1.43774, 0.482658),
        0.6: (1.6401, 0.481283),
    },
    (0.04, 0.0): {
        0.0: (0.879387, 0.532615),
        0.2: (1.2007, 0.486672),
        0.4: (1.44113, 0.472436),
        0.6: (1.64471, 0.465288),
    },
}

# (a2, q1, mb): the omega2 entry repeats the omega1 value of the next
# belt column; the printed row is self-inconsistent.
GARBLED_FREQUENCY_CELLS = {(0.02, 0.0, 0.2)}

# Critical mass ratios mu_k for resonance omega1 = k omega2, keyed
# (q1, k) -> {(a2, mb): mu_k}.  The published header labels the second
# column "(0, 0.02)"; the value pattern identifies it as (0, 0.2).
MASS_COLUMNS = (
    (0.0, 0.0),
    (0.0, 0.2),
    (0.0, 0.4),
    (0.0, 0.6),
    (0.02, 0.0),
    (0.02, 0.2),
    (0.02, 0.4),
    (0.02, 0.6),
)

CRITICAL_MASS_TABLE = {
    (1.0, 1): {
        (0.0, 0.0): 0.0385209,
        (0.0, 0.2): 0.0525812,
        (0.0, 0.4): 0.0688051,
        (0.0, 0.6): 0.0861218,
        (0.02, 0.0): 0.0404877,
        (0.02, 0.2): 0.0539744,
        (0.02, 0.4): 0.0696964,
        (0.02, 0.6): 0.0863953,
    },
    (1.0, 2): {
        (0.0, 0.0): 0.0242939,
        (0.0, 0.2): 0.0329695,
        (0.0, 0.4): 0.0428408,
        (0.0, 0.6): 0.0532015,
        (0.02, 0.0): 0.0255597,
        (0.02, 0.2): 0.0339343,
        (0.02, 0.4): 0.0435889,
        (0.02, 0.6): 0.0537117,
    },
    (1.0, 3): {
        (0.0, 0.0): 0.013516,
        (0.0, 0.2): 0.0182676,
        (0.0, 0.4): 0.0236236,
        (0.0, 0.6): 0.0291855,
        (0.02, 0.0): 0.0142309,
        (0.02, 0.2): 0.0188392,
        (0.02, 0.4): 0.0241121,
        (0.02, 0.6): 0.0295953,
    },
    (1.0, 4): {
        (0.0, 0.0): 0.00827037,
        (0.0, 0.2): 0.0111565,
        (0.0, 0.4): 0.014396,
        (0.0, 0.6): 0.0177443,
        (0.02, 0.0): 0.00871096,
        (0.02, 0.2): 0.0115163,
        (0.02, 0.4): 0.0147154,
        (0.02, 0.6): 0.01803,
    },
    (1.0, 5): {
        (0.0, 0.0): 0.0055092,
        (0.0, 0.2): 0.00742441,
        (0.0, 0.4): 0.00956953,
        (0.0, 0.6): 0.0117815,
        (0.02, 0.0): 0.0058038,
        (0.02, 0.2): 0.00766762,
        (0.02, 0.4): 0.00978937,
        (0.02, 0.6): 0.0119837,
    },
    (0.75, 1): {
        (0.0, 0.0): 0.0363201,
        (0.0, 0.2): 0.051579,
        (0.0, 0.4): 0.0684542,
        (0.0, 0.6): 0.0863238,
        (0.02, 0.0): 0.0382382,
        (0.02, 0.2): 0.0529886,
        (0.02, 0.4): 0.0693753,
        (0.02, 0.6): 0.0866222,
    },
    (0.75, 2): {
        (0.0, 0.0): 0.0229262,
        (0.0, 0.2): 0.0323547,
        (0.0, 0.4): 0.0426289,
        (0.0, 0.6): 0.0533212,
        (0.02, 0.0): 0.024159,
        (0.02, 0.2): 0.0333263,
        (0.02, 0.4): 0.0433931,
        (0.02, 0.6): 0.0538481,
    },
    (0.75, 3): {
        (0.0, 0.0): 0.0127632,
        (0.0, 0.2): 0.0179323,
        (0.0, 0.4): 0.0235093,
        (0.0, 0.6): 0.0292495,
        (0.02, 0.0): 0.0134588,
        # printed 0.0113141, a copy of the k = 4 cell below it; flagged
        (0.02, 0.2): 0.0113141,
        (0.02, 0.4): 0.0240058,
        (0.02, 0.6): 0.0296688,
    },
    (0.75, 4): {
        (0.0, 0.0): 0.0078121,
        (0.0, 0.2): 0.0109532,
        (0.0, 0.4): 0.014327,
        (0.0, 0.6): 0.0177827,
        (0.02, 0.0): 0.00824062,
        (0.02, 0.2): 0.0113141,
        (0.02, 0.4): 0.014651,
        (0.02, 0.6): 0.0180743,
    },
    (0.75, 5): {
        (0.0, 0.0): 0.00520474,
        (0.0, 0.2): 0.00728962,
        (0.0, 0.4): 0.00952388,
        (0.0, 0.6): 0.0118069,
        (0.02, 0.0): 0.00549121,
        (0.02, 0.2): 0.0075334,
        (0.02, 0.4): 0.00974673,
        (0.02, 0.6): 0.012013,
    },
    (0.5, 1): {
        (0.0, 0.0): 0.0341355,
        (0.0, 0.2): 0.0507482,
        (0.0, 0.4): 0.0685365,
        (0.0, 0.6): 0.0872546,
        (0.02, 0.0): 0.0359977,
        (0.02, 0.2): 0.0521785,
        (0.02, 0.4): 0.0694903,
        (0.02, 0.6): 0.0875708,
    },
    (0.5, 2): {
        (0.0, 0.0): 0.0215661,
        (0.0, 0.2): 0.0318447,
        (0.0, 0.4): 0.0426786,
        (0.0, 0.6): 0.0538727,
        (0.02, 0.0): 0.0227616,
        (0.02, 0.2): 0.0328263,
        (0.02, 0.4): 0.0434633,
        (0.02, 0.6): 0.054418,
    },
    (0.5, 3): {
        (0.0, 0.0): 0.0120136,
        (0.0, 0.2): 0.0176539,
        (0.0, 0.4): 0.0235361,
        (0.0, 0.6): 0.0295437,
        (0.02, 0.0): 0.0126877,
        (0.02, 0.2): 0.0182322,
        (0.02, 0.4): 0.0240439,
        (0.02, 0.6): 0.0299757,
    },
    (0.5, 4): {
        (0.0, 0.0): 0.00735548,
        (0.0, 0.2): 0.0107843,
        (0.0, 0.4): 0.0143431,
        (0.0, 0.6): 0.0179594,
        (0.02, 0.0): 0.00777057,
        (0.02, 0.2): 0.0111476,
        (0.02, 0.4): 0.0146741,
        (0.02, 0.6): 0.0182594,
    },
    (0.5, 5): {
        (0.0, 0.0): 0.00490128,
        (0.0, 0.2): 0.00717768,
        (0.0, 0.4): 0.00953459,
        (0.0, 0.6): 0.0119234,
        (0.02, 0.0): 0.00517872,
        (0.02, 0.2): 0.00742292,
        (0.02, 0.4): 0.00976201,
        (0.02, 0.6): 0.0121354,
    },
}

# (q1, k, (a2, mb)): the cell repeats the k = 4 value below it and
# breaks the strict decrease of mu_k with k.
GARBLED_CRITICAL_MASS_CELLS = {(0.75, 3, (0.02, 0.2))}

# Linear expansions mu_k(A2, eps, M_b) about the classical point, with
# eps = 1 - q1; (constant, A2 slope, eps slope, M_b slope).
LINEAR_SERIES = {
    1: (0.0385208965, 0.0375419787, -0.0089174706, -0.0678734040),
    2: (0.0242938971, 0.0254350205, -0.0055364958, -0.0421398438),
    3: (0.0135160160, 0.0148764140, -0.0030452832, -0.0231785159),
}


def frequency_cell_status(a2: float, q1: float, mb: float) -> str:
    """Provenance class of a frequency-table cell: "normative" cells must
    be reproduced; "non-normative" cells are printed for comparison only;
    "garbled" cells are internally inconsistent as printed."""
    if (a2, q1, mb) in GARBLED_FREQUENCY_CELLS:
        return "garbled"
    if a2 == 0.0 and mb == 0.0:
        return "normative"
    return "non-normative"


def critical_mass_cell_status(q1: float, k: int, a2: float, mb: float) -> str:
    """Provenance class of a critical-mass cell.

    Belt-free cells are normative even for a2 > 0; the belt columns are
    comparison-only.  Note the a2 = 0.02, mb = 0 column still differs
    from the resonance iteration by about 3 percent of its value; the
    reproduction report shows that gap rather than hiding the column.
    """
    if (q1, k, (a2, mb)) in GARBLED_CRITICAL_MASS_CELLS:
        return "garbled"
    if mb == 0.0:
        return "normative"
    return "non-normative"
