"""Published values for the order-8 dihedral quandle, transcribed verbatim.

Tables cover the right factors e_1, e_2, e_3 only.  Entries the
recomputation contradicts are listed in ``ERRATA`` with both spellings;
``E_TABLE`` and ``U_TABLE`` hold the corrected values.
"""

from dataclasses import dataclass

from .ring import parse_evector

DIM = 7


@dataclass(frozen=True)
class Erratum:
    table: str
    row: str
    col: str
    printed: str
    corrected: str

    def to_dict(self):
        return {
            "table": self.table,
            "entry": f"{self.row}.{self.col}",
            "printed": self.printed,
            "corrected": self.corrected,
        }


# row e_i, columns e_1, e_2, e_3
_E_PRINTED = {
    "e1": ("e1-e2-e7", "e3-e4-e7", "e5-e6-e7"),
    "e2": ("-e2-e6", "e2-e4-e6", "-2e6"),
    "e3": ("-e2-e5+e7", "e1-e4-e5", "e3-e5-e6"),
    "e4": ("-e2-e4+e6", "-2e4", "e2-e4-e6"),
    "e5": ("-e2-e3+e5", "-e3-e4+e7", "e1-e3-e6"),
    "e6": ("-2e2+e4", "-e2-e4+e6", "-e2-e6"),
    "e7": ("-e1-e2+e3", "-e1-e4+e5", "-e1-e6+e7"),
}

_U_PRINTED = {
    "u1": ("2e1+e2-e3+e6-e7", "e1-e2+e3+e4-e5+e6-e7", "e1-e4+e5+2e6-2e7"),
    "u2": ("-3e2+e4-e6", "-2e4", "-e2+e4-3e6"),
    "u3": ("e1+e2-e3+e4-e5-e6+e7", "2e1+2e4-2e5", "e1-e2+e3+e4-e5+e6-e7"),
    "u4": ("-5e2-e4+e6", "-2e2-4e4+2e6", "-e2-e4-3e6"),
    "u5": ("e1+2e2-2e3-e4+e5", "e1+e2-e3+e4-e5-e6+e7", "2e1+e2-e3+e6-e7"),
    "u6": ("-8e2+4e4", "-4e2-4e4+4e6", "-4e2-4e6"),
}

ERRATA = (
    Erratum("e_products", "e2", "e3", "-2e6", "e4-2e6"),
    Erratum("u_products", "u4", "e1", "-5e2-e4+e6", "-5e2+e4+e6"),
)

B2 = {
    "u1": "e1-e2-e7",
    "u2": "e2+e6",
    "u3": "e3-e4-e7",
    "u4": "e4+2e6",
    "u5": "e5-e6-e7",
    "u6": "4e6",
}

B3 = {
    "v1": "e1-e2+e3+e4-e5+e6-e7",
    "v2": "e2-e3-2e4+2e5+e6-e7",
    "v3": "-e3-e4+2e5-2e6-e7",
    "v4": "-2e4",
    "v5": "-4e5-4e6+4e7",
    "v6": "8e6",
}

COLUMNS = ("e1", "e2", "e3")


def _corrected(table_name, printed):
    fixes = {(x.row, x.col): x.corrected for x in ERRATA if x.table == table_name}
    out = {}
    for row, entries in printed.items():
        out[row] = tuple(
            parse_evector(fixes.get((row, col), text), DIM) for col, text in zip(COLUMNS, entries)
        )
    return out


E_TABLE = _corrected("e_products", _E_PRINTED)
U_TABLE = _corrected("u_products", _U_PRINTED)
E_TABLE_PRINTED = {r: tuple(parse_evector(t, DIM) for t in v) for r, v in _E_PRINTED.items()}
U_TABLE_PRINTED = {r: tuple(parse_evector(t, DIM) for t in v) for r, v in _U_PRINTED.items()}
B2_VECTORS = {k: parse_evector(v, DIM) for k, v in B2.items()}
B3_VECTORS = {k: parse_evector(v, DIM) for k, v in B3.items()}

# Delta^2 / Delta^3 for R_8
THEOREM_TORSION = (4, 4)
THEOREM_ORDER = 16
