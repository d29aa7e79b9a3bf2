"""Corpus de teselaciones de ejemplo en el formato de documento JSON.

Las matrices y aplicaciones impresas en la literatura se copian tal cual. Los datos no
impresos (∂₂ de Penrose, estrellas de vértices, complejos baricéntricos rígidos del
triángulo y del cuadrado) se derivaron a mano y se comprueban con los valores de
homología conocidos en los tests.
"""
import copy


def _cells(*ids, symmetry=None):
    symmetry = symmetry or {}
    return [{"id": i, "symmetry": symmetry.get(i, 1), "reverses_orientation": False} for i in ids]


def _lap(*pairs, times=1):
    return [{"edge": edge, "sign": sign} for _ in range(times) for edge, sign in pairs]


# ---------- 1D ----------

FIBONACCI = {
    "name": "fibonacci",
    "dimension": 1,
    "geometry_mode": "translation",
    "cells": {"0": _cells("0.1", "1.0", "0.0"), "1": _cells("0", "1")},
    "boundaries": {"1": [[1, -1], [-1, 1], [0, 0]]},
    "substitution": {
        "kind": "homology_map",
        "homology_map": {
            # a = 0.1 -> a + b, b = 0.0 -> a
            "0": {"generators": [[1, 0, 0], [0, 0, 1]], "images": [[1, 0, 1], [1, 0, 0]]},
            "1": {"generators": [[1, 1]], "images": [[1, 1]]},
        },
    },
}

THUE_MORSE = {
    "name": "thue-morse",
    "dimension": 1,
    "geometry_mode": "translation",
    "cells": {"0": _cells("0.0", "0.1", "1.0", "1.1"), "1": _cells("0", "1")},
    "boundaries": {"1": [[0, 0], [1, -1], [-1, 1], [0, 0]]},
    "substitution": {
        "kind": "homology_map",
        "homology_map": {
            # a = 0.1, b = 0.0, c = 1.1: (a, b, c) -> (a + b + c, a, a)
            "0": {
                "generators": [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]],
                "images": [[1, 1, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]],
            },
            "1": {"generators": [[1, 1]], "images": [[1, 1]]},
        },
    },
}

# ---------- Triángulo por traslaciones ----------

TRIANGLE_PERIODIC_TRANSLATION = {
    "name": "triangle-periodic-translation",
    "dimension": 2,
    "geometry_mode": "translation",
    "cells": {"0": _cells("v"), "1": _cells("e1", "e2", "e3"), "2": _cells("up", "down")},
    "boundaries": {
        "1": [[0, 0, 0]],
        "2": [[1, -1], [1, -1], [1, -1]],
    },
}

TRIANGLE_SOLENOID_TRANSLATION = copy.deepcopy(TRIANGLE_PERIODIC_TRANSLATION)
TRIANGLE_SOLENOID_TRANSLATION["name"] = "triangle-solenoid-translation"
TRIANGLE_SOLENOID_TRANSLATION["substitution"] = {
    "kind": "homology_map",
    "homology_map": {
        "0": {"generators": [[1]], "images": [[4]]},
        "1": {"generators": [[1, 0, 0], [0, 1, 0]], "images": [[2, 0, 0], [0, 2, 0]]},
        "2": {"generators": [[1, 1]], "images": [[1, 1]]},
    },
}

# ---------- Complejos rígidos baricéntricos ----------
# vértices A, B, C (simetrías 6,3,2 o 4,4,2), aristas AB, AC, BC, caras T+ y T-


def _rigid_barycentric(name, orders, boundary_1, rotations, laps):
    a, b, c = orders
    return {
        "name": name,
        "dimension": 2,
        "geometry_mode": "rigid",
        "cells": {
            "0": _cells("A", "B", "C", symmetry={"A": a, "B": b, "C": c}),
            "1": _cells("AB", "AC", "BC"),
            "2": _cells("T+", "T-"),
        },
        "boundaries": {
            "1": boundary_1,
            "2": [[1, -1], [-1, 1], [1, -1]],
        },
        "rotation": {
            "edge_rotations": rotations,
            "vertex_stars": laps,
            "edge_faces": {"AB": ["T-", "T+"], "AC": ["T+", "T-"], "BC": ["T-", "T+"]},
        },
        "symmetric_tilings": [a, b, c],
    }


TRIANGLE_PERIODIC_RIGID = _rigid_barycentric(
    "triangle-periodic-rigid",
    (6, 3, 2),
    [[-6, -6, 0], [3, 0, -3], [0, 2, 2]],
    {"AB": "-1/6", "AC": "0", "BC": "1/2"},
    {
        "A": _lap(("AB", -1), ("AC", -1), times=6),
        "B": _lap(("BC", -1), ("AB", 1), times=3),
        "C": _lap(("AC", 1), ("BC", 1), times=2),
    },
)

SQUARE_PERIODIC_RIGID = _rigid_barycentric(
    "square-periodic-rigid",
    (4, 4, 2),
    [[-4, -4, 0], [4, 0, -4], [0, 2, 2]],
    {"AB": "-1/4", "AC": "0", "BC": "1/2"},
    {
        "A": _lap(("AB", -1), ("AC", -1), times=4),
        "B": _lap(("BC", -1), ("AB", 1), times=4),
        "C": _lap(("AC", 1), ("BC", 1), times=2),
    },
)

TRIANGLE_SOLENOID_RIGID = copy.deepcopy(TRIANGLE_PERIODIC_RIGID)
TRIANGLE_SOLENOID_RIGID["name"] = "triangle-solenoid-rigid"
TRIANGLE_SOLENOID_RIGID["substitution"] = {
    "kind": "homology_map",
    "homology_map": {
        # a = A, b = C - 3A (orden 2), c = B - 2A (orden 3): (a, b, c) -> (4a + b, b, c)
        "0": {
            "generators": [[1, 0, 0], [-3, 0, 1], [-2, 1, 0]],
            "images": [[1, 0, 1], [-3, 0, 1], [-2, 1, 0]],
        },
        "1": {"generators": [], "images": []},
        "2": {"generators": [[1, 1]], "images": [[1, 1]]},
    },
}

SQUARE_SOLENOID_RIGID = copy.deepcopy(SQUARE_PERIODIC_RIGID)
SQUARE_SOLENOID_RIGID["name"] = "square-solenoid-rigid"
SQUARE_SOLENOID_RIGID["substitution"] = {
    "kind": "homology_map",
    "homology_map": {
        # a = A, b = 2A - C (orden 2), c = B - A (orden 4): (a, b, c) -> (4a, 0, b + c)
        "0": {
            "generators": [[1, 0, 0], [2, 0, -1], [-1, 1, 0]],
            "images": [[4, 0, 0], [0, 0, 0], [1, 1, -1]],
        },
        "1": {"generators": [], "images": []},
        "2": {"generators": [[1, 1]], "images": [[1, 1]]},
    },
}

# ---------- Penrose (cometas y dardos) ----------

PENROSE_KITE_DART = {
    "name": "penrose-kite-dart",
    "dimension": 2,
    "geometry_mode": "rigid",
    "cells": {
        "0": _cells("sun", "star", "ace", "deuce", "jack", "queen", "king", symmetry={"sun": 5, "star": 5}),
        "1": _cells("E1", "E2", "E3", "E4", "E5", "E6", "E7"),
        "2": _cells("kite", "dart"),
    },
    "boundaries": {
        "1": [
            [5, 0, 0, 0, 0, 0, 0],
            [0, -5, 0, 0, 0, 0, 0],
            [-1, 0, -1, 1, 0, 0, 0],
            [0, 1, 1, -1, 0, 0, 1],
            [1, 0, 1, -1, -1, -1, 0],
            [-1, 0, 0, 0, 1, 1, -2],
            [0, -2, 0, 0, 1, 1, -1],
        ],
        "2": [[0, 0], [0, 0], [0, 0], [0, 0], [1, -1], [-1, 1], [0, 0]],
    },
    "substitution": {
        "kind": "homology_map",
        "homology_map": {
            # e1 = sun, e2 = star, t = sun + star - queen
            "0": {
                "generators": [[1, 0, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0], [1, 1, 0, 0, 0, -1, 0]],
                "images": [[0, 1, 0, 0, 0, 1, 1], [1, 0, 0, 0, 0, 0, 0], [1, 1, 0, -1, 0, 1, 1]],
            },
            # el superdardo recorre E3 + E4 con la orientación opuesta
            "1": {"generators": [[0, 0, 1, 1, 0, 0, 0]], "images": [[0, 0, -1, -1, 0, 0, 0]]},
            "2": {"generators": [[1, 1]], "images": [[1, 1]]},
        },
        "chain_map": {
            "1": [
                [1, 0, 0, 0, 0, 0, 0],
                [0, 1, 0, 0, 0, 0, 0],
                [0, 0, -1, 0, 0, 0, 0],
                [0, 0, 0, -1, 0, 0, 0],
                [0, 0, 0, 0, 1, 0, 0],
                [0, 0, 0, 0, 0, 1, 0],
                [0, 0, 0, 0, 0, 0, 1],
            ],
            "2": [[1, 0], [0, 1]],
        },
    },
    "rotation": {
        "edge_rotations": {
            "E1": "1/5", "E2": "-1/5", "E3": "-1/10", "E4": "1/10", "E5": "1/5", "E6": "-1/5", "E7": "2/5",
        },
        "vertex_stars": {
            "sun": _lap(("E1", 1), times=5),
            "star": _lap(("E2", -1), times=5),
            "ace": _lap(("E1", -1), ("E3", -1), ("E4", 1)),
            "deuce": _lap(("E2", 1), ("E3", 1), ("E4", -1), ("E7", 1)),
            "jack": _lap(("E1", 1), ("E3", 1), ("E4", -1), ("E5", -1), ("E6", -1)),
            "queen": _lap(("E1", -1), ("E5", 1), ("E6", 1), ("E7", -1), ("E7", -1)),
            "king": _lap(("E2", -1), ("E2", -1), ("E5", 1), ("E6", 1), ("E7", -1)),
        },
    },
    "symmetric_tilings": [5, 5],
}

BUILTIN_DOCUMENTS = {
    doc["name"]: doc
    for doc in (
        FIBONACCI,
        THUE_MORSE,
        TRIANGLE_PERIODIC_TRANSLATION,
        TRIANGLE_PERIODIC_RIGID,
        SQUARE_PERIODIC_RIGID,
        TRIANGLE_SOLENOID_TRANSLATION,
        TRIANGLE_SOLENOID_RIGID,
        SQUARE_SOLENOID_RIGID,
        PENROSE_KITE_DART,
    )
}
