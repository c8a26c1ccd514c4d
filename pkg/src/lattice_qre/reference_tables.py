"""Published reference resource counts for the three lattice models.

Six numbered tables, as printed in the source study's supplementary
material.  Tables 1-3 give qubitization totals per lattice size for the
Fermi-Hubbard, cuprate, and pnictide models at the benchmark couplings and
the extensive error target.  Tables 4-6 give the Trotter error bound W and
the Trotter totals for the four phasing strategies.

These values are comparison data only; nothing in the estimators reads
them.  Toffoli entries carry three significant figures, so comparisons
against them inherit a +-0.5% quantization floor.
"""

from __future__ import annotations

from .model import Model
from .trotter_cost import Strategy

# Tables 1-3: L -> (toffoli, qubits)
QUBITIZATION_TABLES: dict[Model, dict[int, tuple[float, int]]] = {
    Model.FERMI_HUBBARD: {
        4: (4.33e5, 58), 6: (9.75e5, 102), 8: (1.36e6, 160), 10: (2.19e6, 234),
        12: (3.03e6, 324), 14: (3.99e6, 429), 16: (4.96e6, 550), 18: (6.38e6, 687),
        20: (7.81e6, 840), 22: (9.36e6, 1009), 24: (1.11e7, 1194), 26: (1.29e7, 1395),
        28: (1.50e7, 1611), 30: (1.71e7, 1844), 32: (1.93e7, 2092),
    },
    Model.CUPRATE: {
        4: (1.04e6, 59), 6: (1.78e6, 102), 8: (2.29e6, 161), 10: (3.41e6, 235),
        12: (4.53e6, 324), 14: (5.81e6, 430), 16: (7.10e6, 551), 18: (9.01e6, 688),
        20: (1.09e7, 841), 22: (1.30e7, 1010), 24: (1.53e7, 1194), 26: (1.78e7, 1395),
        28: (2.05e7, 1612), 30: (2.33e7, 1844), 32: (2.62e7, 2093),
    },
    Model.PNICTIDE: {
        4: (1.08e7, 100), 6: (1.81e7, 183), 8: (2.56e7, 298), 10: (3.76e7, 444),
        12: (5.11e7, 621), 14: (6.67e7, 831), 16: (8.39e7, 1072), 18: (1.05e8, 1345),
        20: (1.29e8, 1650), 22: (1.54e8, 1987), 24: (1.82e8, 2355), 26: (2.12e8, 2756),
        28: (2.45e8, 3189), 30: (2.79e8, 3653), 32: (3.16e8, 4150),
    },
}

# Tables 4-6: L -> (W, {strategy: (toffoli, qubits)})
_S = Strategy
TROTTER_TABLES: dict[Model, dict[int, tuple[float, dict[Strategy, tuple[float, int]]]]] = {
    Model.FERMI_HUBBARD: {
        4: (2.82e2, {_S.CATALYZED: (9.80e5, 66), _S.BASELINE: (1.52e6, 49),
                     _S.BATCHED_CATALYZED: (1.23e6, 55), _S.BATCHED_BASELINE: (2.07e6, 41)}),
        6: (6.54e2, {_S.CATALYZED: (8.92e5, 128), _S.BASELINE: (1.19e6, 108),
                     _S.BATCHED_CATALYZED: (9.32e5, 107), _S.BATCHED_BASELINE: (1.48e6, 90)}),
        8: (1.16e3, {_S.CATALYZED: (8.40e5, 216), _S.BASELINE: (1.08e6, 193),
                     _S.BATCHED_CATALYZED: (8.79e5, 181), _S.BATCHED_BASELINE: (1.24e6, 161)}),
        10: (1.83e3, {_S.CATALYZED: (8.23e5, 322), _S.BASELINE: (9.64e5, 299),
                      _S.BATCHED_CATALYZED: (8.81e5, 269), _S.BATCHED_BASELINE: (1.10e6, 249)}),
        12: (2.63e3, {_S.CATALYZED: (8.16e5, 458), _S.BASELINE: (9.20e5, 432),
                      _S.BATCHED_CATALYZED: (8.86e5, 383), _S.BATCHED_BASELINE: (1.05e6, 360)}),
        14: (3.61e3, {_S.CATALYZED: (8.07e5, 613), _S.BASELINE: (8.83e5, 587),
                      _S.BATCHED_CATALYZED: (8.68e5, 512), _S.BATCHED_BASELINE: (9.81e5, 489)}),
        16: (4.69e3, {_S.CATALYZED: (8.04e5, 798), _S.BASELINE: (8.83e5, 769),
                      _S.BATCHED_CATALYZED: (8.63e5, 667), _S.BATCHED_BASELINE: (9.45e5, 641)}),
        18: (5.82e3, {_S.CATALYZED: (8.02e5, 1000), _S.BASELINE: (8.62e5, 971),
                      _S.BATCHED_CATALYZED: (8.51e5, 835), _S.BATCHED_BASELINE: (9.25e5, 809)}),
        20: (7.21e3, {_S.CATALYZED: (8.00e5, 1228), _S.BASELINE: (8.51e5, 1199),
                      _S.BATCHED_CATALYZED: (8.54e5, 1025), _S.BATCHED_BASELINE: (9.05e5, 999)}),
        22: (8.71e3, {_S.CATALYZED: (8.00e5, 1478), _S.BASELINE: (8.44e5, 1449),
                      _S.BATCHED_CATALYZED: (8.40e5, 1233), _S.BATCHED_BASELINE: (8.89e5, 1207)}),
        24: (1.04e4, {_S.CATALYZED: (7.94e5, 1760), _S.BASELINE: (8.39e5, 1728),
                      _S.BATCHED_CATALYZED: (8.48e5, 1469), _S.BATCHED_BASELINE: (8.87e5, 1440)}),
        26: (1.22e4, {_S.CATALYZED: (8.01e5, 2058), _S.BASELINE: (8.42e5, 2026),
                      _S.BATCHED_CATALYZED: (8.46e5, 1717), _S.BATCHED_BASELINE: (8.85e5, 1688)}),
        28: (1.42e4, {_S.CATALYZED: (7.96e5, 2383), _S.BASELINE: (8.36e5, 2351),
                      _S.BATCHED_CATALYZED: (8.49e5, 1988), _S.BATCHED_BASELINE: (8.77e5, 1959)}),
        30: (1.63e4, {_S.CATALYZED: (7.98e5, 2730), _S.BASELINE: (8.37e5, 2698),
                      _S.BATCHED_CATALYZED: (8.41e5, 2277), _S.BATCHED_BASELINE: (8.78e5, 2248)}),
        32: (1.86e4, {_S.CATALYZED: (8.01e5, 3108), _S.BASELINE: (8.42e5, 3073),
                      _S.BATCHED_CATALYZED: (8.45e5, 2593), _S.BATCHED_BASELINE: (8.86e5, 2561)}),
    },
    Model.CUPRATE: {
        4: (7.91e2, {_S.CATALYZED: (6.38e6, 93), _S.BASELINE: (1.19e7, 65),
                     _S.BATCHED_CATALYZED: (9.08e6, 62), _S.BATCHED_BASELINE: (1.94e7, 41)}),
        8: (3.16e3, {_S.CATALYZED: (5.25e6, 295), _S.BASELINE: (7.08e6, 257),
                     _S.BATCHED_CATALYZED: (6.07e6, 192), _S.BATCHED_BASELINE: (1.01e7, 161)}),
        12: (7.11e3, {_S.CATALYZED: (4.91e6, 619), _S.BASELINE: (6.02e6, 576),
                      _S.BATCHED_CATALYZED: (5.30e6, 396), _S.BATCHED_BASELINE: (7.55e6, 360)}),
        16: (1.26e4, {_S.CATALYZED: (5.22e6, 1073), _S.BASELINE: (5.65e6, 1025),
                      _S.BATCHED_CATALYZED: (5.45e6, 682), _S.BATCHED_BASELINE: (6.40e6, 641)}),
        20: (1.98e4, {_S.CATALYZED: (5.12e6, 1647), _S.BASELINE: (5.40e6, 1599),
                      _S.BATCHED_CATALYZED: (5.28e6, 1040), _S.BATCHED_BASELINE: (6.00e6, 999)}),
        24: (2.85e4, {_S.CATALYZED: (5.11e6, 2357), _S.BASELINE: (5.39e6, 2304),
                      _S.BATCHED_CATALYZED: (5.23e6, 1486), _S.BATCHED_BASELINE: (5.87e6, 1440)}),
        28: (3.87e4, {_S.CATALYZED: (5.09e6, 3188), _S.BASELINE: (5.25e6, 3135),
                      _S.BATCHED_CATALYZED: (5.18e6, 2005), _S.BATCHED_BASELINE: (5.59e6, 1959)}),
        32: (5.06e4, {_S.CATALYZED: (5.07e6, 4155), _S.BASELINE: (5.21e6, 4097),
                      _S.BATCHED_CATALYZED: (5.18e6, 2612), _S.BATCHED_BASELINE: (5.51e6, 2561)}),
    },
    Model.PNICTIDE: {
        4: (1.14e4, {_S.CATALYZED: (4.16e7, 175), _S.BASELINE: (7.59e7, 129),
                     _S.BATCHED_CATALYZED: (8.35e7, 101), _S.BATCHED_BASELINE: (1.86e8, 73)}),
        6: (2.56e4, {_S.CATALYZED: (3.57e7, 341), _S.BASELINE: (5.36e7, 288),
                     _S.BATCHED_CATALYZED: (5.31e7, 197), _S.BATCHED_BASELINE: (1.14e8, 162)}),
        8: (4.54e4, {_S.CATALYZED: (3.36e7, 573), _S.BASELINE: (4.53e7, 513),
                     _S.BATCHED_CATALYZED: (4.57e7, 331), _S.BATCHED_BASELINE: (8.76e7, 289)}),
        10: (7.10e4, {_S.CATALYZED: (3.28e7, 859), _S.BASELINE: (3.97e7, 799),
                      _S.BATCHED_CATALYZED: (3.99e7, 491), _S.BATCHED_BASELINE: (6.50e7, 449)}),
        12: (1.02e5, {_S.CATALYZED: (3.25e7, 1219), _S.BASELINE: (3.78e7, 1152),
                      _S.BATCHED_CATALYZED: (3.83e7, 697), _S.BATCHED_BASELINE: (5.92e7, 648)}),
        14: (1.39e5, {_S.CATALYZED: (3.31e7, 1634), _S.BASELINE: (3.58e7, 1567),
                      _S.BATCHED_CATALYZED: (3.63e7, 930), _S.BATCHED_BASELINE: (5.09e7, 881)}),
        16: (1.82e5, {_S.CATALYZED: (3.13e7, 2123), _S.BASELINE: (3.56e7, 2049),
                      _S.BATCHED_CATALYZED: (3.60e7, 1209), _S.BATCHED_BASELINE: (4.95e7, 1153)}),
        18: (2.30e5, {_S.CATALYZED: (3.11e7, 2665), _S.BASELINE: (3.42e7, 2591),
                      _S.BATCHED_CATALYZED: (3.48e7, 1513), _S.BATCHED_BASELINE: (4.46e7, 1457)}),
        20: (2.84e5, {_S.CATALYZED: (3.14e7, 3273), _S.BASELINE: (3.35e7, 3199),
                      _S.BATCHED_CATALYZED: (3.43e7, 1855), _S.BATCHED_BASELINE: (4.20e7, 1799)}),
        22: (3.44e5, {_S.CATALYZED: (3.10e7, 3943), _S.BASELINE: (3.31e7, 3869),
                      _S.BATCHED_CATALYZED: (3.36e7, 2231), _S.BATCHED_BASELINE: (3.98e7, 2175)}),
        24: (4.09e5, {_S.CATALYZED: (3.10e7, 4689), _S.BASELINE: (3.28e7, 4608),
                      _S.BATCHED_CATALYZED: (3.38e7, 2655), _S.BATCHED_BASELINE: (3.97e7, 2592)}),
        26: (4.80e5, {_S.CATALYZED: (3.28e7, 5487), _S.BASELINE: (3.27e7, 5406),
                      _S.BATCHED_CATALYZED: (3.34e7, 3103), _S.BATCHED_BASELINE: (3.82e7, 3040)}),
        28: (5.56e5, {_S.CATALYZED: (3.11e7, 6352), _S.BASELINE: (3.25e7, 6271),
                      _S.BATCHED_CATALYZED: (3.33e7, 3590), _S.BATCHED_BASELINE: (3.73e7, 3527)}),
        30: (6.39e5, {_S.CATALYZED: (3.08e7, 7279), _S.BASELINE: (3.25e7, 7198),
                      _S.BATCHED_CATALYZED: (3.31e7, 4111), _S.BATCHED_BASELINE: (3.64e7, 4048)}),
        32: (7.27e5, {_S.CATALYZED: (3.08e7, 8281), _S.BASELINE: (3.23e7, 8193),
                      _S.BATCHED_CATALYZED: (3.32e7, 4679), _S.BATCHED_BASELINE: (3.67e7, 4609)}),
    },
}

TABLE_NUMBERS = {
    1: (Model.FERMI_HUBBARD, "qubitization"),
    2: (Model.CUPRATE, "qubitization"),
    3: (Model.PNICTIDE, "qubitization"),
    4: (Model.FERMI_HUBBARD, "trotter"),
    5: (Model.CUPRATE, "trotter"),
    6: (Model.PNICTIDE, "trotter"),
}
